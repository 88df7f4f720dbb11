//! Generators for the standard polytope families, all with exact rational
//! coordinates.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{int, rat, Rational, Sign};
use crate::om::{ConfigError, PointConfiguration};

pub const MAX_GENERATOR_DIM: usize = 6;

const PERTURBATION_PRIMES: [i64; 18] = [
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("cannot parse family spec {0:?}")]
    Parse(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); d];
    v[i] = Rational::one();
    v
}

fn check_dim(name: &str, d: usize, min: usize) -> Result<(), FamilyError> {
    if d < min || d > MAX_GENERATOR_DIM {
        return Err(FamilyError::UnsupportedParameter(format!(
            "{name} needs {min} <= d <= {MAX_GENERATOR_DIM}, got {d}"
        )));
    }
    Ok(())
}

/// `0, e_1, .., e_d`, labeled `0..d`.
pub fn simplex(d: usize) -> Result<PointConfiguration, FamilyError> {
    check_dim("simplex", d, 0)?;
    let mut points = vec![vec![Rational::zero(); d]];
    points.extend((0..d).map(|i| unit(d, i)));
    let labels = (0..=d).map(|i| i.to_string()).collect();
    Ok(PointConfiguration::new(format!("simplex:{d}"), d, labels, points)?)
}

/// `+e_1, -e_1, .., +e_d, -e_d`, labeled `+1, -1, ..`.
pub fn crosspolytope(d: usize) -> Result<PointConfiguration, FamilyError> {
    check_dim("crosspolytope", d, 1)?;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for i in 0..d {
        let e = unit(d, i);
        points.push(e.clone());
        points.push(e.into_iter().map(|x| -x).collect());
        labels.push(format!("+{}", i + 1));
        labels.push(format!("-{}", i + 1));
    }
    Ok(PointConfiguration::new(format!("crosspolytope:{d}"), d, labels, points)?)
}

/// `n` points on the unit circle at parameters `t_i = (2i - n + 1)/n` of the
/// rational parametrization, labeled `1..n` in counterclockwise order.
pub fn polygon(n: usize) -> Result<PointConfiguration, FamilyError> {
    if !(3..=24).contains(&n) {
        return Err(FamilyError::UnsupportedParameter(format!(
            "polygon needs 3 <= n <= 24, got {n}"
        )));
    }
    let points = (0..n)
        .map(|i| {
            let t = rat(2 * i as i64 - n as i64 + 1, n as i64);
            circle_point(&t)
        })
        .collect();
    let labels = (1..=n).map(|i| i.to_string()).collect();
    Ok(PointConfiguration::new(format!("polygon:{n}"), 2, labels, points)?)
}

pub fn circle_point(t: &Rational) -> Vec<Rational> {
    let denom = Rational::one() + t * t;
    vec![(Rational::one() - t * t) / &denom, (t + t) / denom]
}

/// `e_k` and `f_k = -sum_{i != k} e_i`, labeled `e1..ed, f1..fd`.
pub fn simplex_prism(d: usize) -> Result<PointConfiguration, FamilyError> {
    check_dim("simplex_prism", d, 2)?;
    let mut points: Vec<Vec<Rational>> = (0..d).map(|i| unit(d, i)).collect();
    for k in 0..d {
        points.push((0..d).map(|i| if i == k { int(0) } else { int(-1) }).collect());
    }
    let labels = (1..=d)
        .map(|i| format!("e{i}"))
        .chain((1..=d).map(|i| format!("f{i}")))
        .collect();
    Ok(PointConfiguration::new(format!("simplex_prism:{d}"), d, labels, points)?)
}

/// `{0,1}^d`, labeled by coordinate bit strings.
pub fn cube(d: usize) -> Result<PointConfiguration, FamilyError> {
    check_dim("cube", d, 1)?;
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for mask in 0..(1usize << d) {
        let bits: Vec<bool> = (0..d).map(|i| mask >> (d - 1 - i) & 1 == 1).collect();
        points.push(bits.iter().map(|&b| int(b as i64)).collect());
        labels.push(bits.iter().map(|&b| if b { '1' } else { '0' }).collect());
    }
    Ok(PointConfiguration::new(format!("cube:{d}"), d, labels, points)?)
}

fn disambiguate(labels: &mut [String], taken: &[String], prefix: &str) {
    if labels.iter().any(|l| taken.contains(l)) {
        for l in labels.iter_mut() {
            *l = format!("{prefix}{l}");
        }
    }
}

/// `A` at last coordinate 0 in the first coordinates, `B` at last coordinate 1
/// in fresh coordinates. Labels of `B` get a `b.` prefix if they collide.
pub fn join(a: &PointConfiguration, b: &PointConfiguration) -> Result<PointConfiguration, FamilyError> {
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db + 1;
    let mut points = Vec::new();
    for p in a.points() {
        let mut x = p.clone();
        x.extend(std::iter::repeat_n(Rational::zero(), db + 1));
        points.push(x);
    }
    for q in b.points() {
        let mut x = vec![Rational::zero(); da];
        x.extend(q.iter().cloned());
        x.push(Rational::one());
        points.push(x);
    }
    let mut labels_b = b.labels().to_vec();
    disambiguate(&mut labels_b, a.labels(), "b.");
    let mut labels = a.labels().to_vec();
    labels.extend(labels_b);
    let name = format!("join({},{})", a.name(), b.name());
    Ok(PointConfiguration::new(name, dim, labels, points)?)
}

/// Base at height 0, apex at height 1 over the barycenter.
pub fn pyramid(base: &PointConfiguration) -> Result<PointConfiguration, FamilyError> {
    let d = base.dim();
    let n = Rational::from_integer(base.len().into());
    let mut points: Vec<Vec<Rational>> = base
        .points()
        .iter()
        .map(|p| {
            let mut x = p.clone();
            x.push(Rational::zero());
            x
        })
        .collect();
    let mut apex: Vec<Rational> = (0..d)
        .map(|c| base.points().iter().map(|p| p[c].clone()).sum::<Rational>() / &n)
        .collect();
    apex.push(Rational::one());
    points.push(apex);
    let mut apex_label = "apex".to_string();
    while base.labels().contains(&apex_label) {
        apex_label.push('\'');
    }
    let mut labels = base.labels().to_vec();
    labels.push(apex_label);
    Ok(PointConfiguration::new(format!("pyramid({})", base.name()), d + 1, labels, points)?)
}

/// The octahedron `+-e_i` with every coordinate of every vertex shifted by
/// `1/p` for distinct primes `p`, rotated by `seed`.
pub fn perturbed_octahedron(seed: u64) -> Result<PointConfiguration, FamilyError> {
    let base = crosspolytope(3)?;
    let offset = (seed % PERTURBATION_PRIMES.len() as u64) as usize;
    let points = base
        .points()
        .iter()
        .enumerate()
        .map(|(v, p)| {
            p.iter()
                .enumerate()
                .map(|(c, x)| {
                    let prime = PERTURBATION_PRIMES[(3 * v + c + offset) % PERTURBATION_PRIMES.len()];
                    x + rat(1, prime)
                })
                .collect()
        })
        .collect();
    Ok(PointConfiguration::new(
        format!("perturbed_octahedron:{seed}"),
        3,
        base.labels().to_vec(),
        points,
    )?)
}

/// The octahedron with only `+e_1` moved to `(1, 1/101, 1/103)`.
pub fn single_perturbed_octahedron() -> PointConfiguration {
    let base = crosspolytope(3).expect("octahedron");
    let mut points = base.points().to_vec();
    points[0] = vec![int(1), rat(1, 101), rat(1, 103)];
    PointConfiguration::new("single_perturbed_octahedron", 3, base.labels().to_vec(), points)
        .expect("perturbed octahedron is valid")
}

/// Triangle prism plus `e1 + e2 - e3`, almost beyond a quadrangular facet.
pub fn prism_plus_point() -> PointConfiguration {
    let coords: [[i64; 3]; 7] = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [0, -1, -1],
        [-1, 0, -1],
        [-1, -1, 0],
        [1, 1, -1],
    ];
    let labels = ["e1", "e2", "e3", "f1", "f2", "f3", "v"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let points = coords.iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect();
    PointConfiguration::new("prism_plus_point", 3, labels, points).expect("valid configuration")
}

/// The pentagon `(1,0), (0,2), (-1,1), (-1,0), (0,-1)`.
pub fn pentagon() -> PointConfiguration {
    let coords: [[i64; 2]; 5] = [[1, 0], [0, 2], [-1, 1], [-1, 0], [0, -1]];
    let labels = (1..=5).map(|i| i.to_string()).collect();
    let points = coords.iter().map(|c| c.iter().map(|&x| int(x)).collect()).collect();
    PointConfiguration::new("pentagon", 2, labels, points).expect("valid configuration")
}

/// Adds one labeled point.
pub fn extend(
    config: &PointConfiguration,
    label: &str,
    point: Vec<Rational>,
) -> Result<PointConfiguration, FamilyError> {
    let mut labels = config.labels().to_vec();
    labels.push(label.to_string());
    let mut points = config.points().to_vec();
    points.push(point);
    Ok(PointConfiguration::new(
        format!("{}+{label}", config.name()),
        config.dim(),
        labels,
        points,
    )?)
}

/// Number of facet hyperplanes that `x` violates, and whether `x` lies on any
/// facet hyperplane.
pub fn facet_position(config: &PointConfiguration, x: &[Rational]) -> (usize, bool) {
    let mut violated = 0;
    let mut on_some = false;
    for f in config.facets() {
        let s = f.hyperplane.side(x);
        if s == Sign::Zero {
            on_some = true;
        } else if s != f.inner_side {
            violated += 1;
        }
    }
    (violated, on_some)
}

/// Points beyond facet `facet` of `config`: past its barycenter away from the
/// centroid, shifted toward one of its vertices. Only positions that violate
/// exactly that facet and lie on no other facet hyperplane are returned.
pub fn beyond_points(config: &PointConfiguration, facet: usize) -> Vec<Vec<Rational>> {
    let f = &config.facets()[facet];
    let d = config.dim();
    let centroid = |set: &[usize]| -> Vec<Rational> {
        let n = Rational::from_integer(set.len().into());
        (0..d)
            .map(|c| set.iter().map(|&i| config.point(i)[c].clone()).sum::<Rational>() / &n)
            .collect()
    };
    let all: Vec<usize> = (0..config.len()).collect();
    let c_p = centroid(&all);
    let members = f.vertices.to_vec();
    let c_f = centroid(&members);
    let mut out = Vec::new();
    for (s_num, s_den) in [(1, 10), (1, 5), (1, 3)] {
        for (m_num, m_den) in [(0, 1), (1, 3)] {
            let s = rat(s_num, s_den);
            let m = rat(m_num, m_den);
            let target = config.point(members[0]);
            let x: Vec<Rational> = (0..d)
                .map(|c| &c_f[c] + &s * (&c_f[c] - &c_p[c]) + &m * (&target[c] - &c_f[c]))
                .collect();
            let violates_only_f = config.facets().iter().enumerate().all(|(j, g)| {
                let side = g.hyperplane.side(&x);
                if j == facet {
                    side != Sign::Zero && side != g.inner_side
                } else {
                    side == g.inner_side
                }
            });
            if violates_only_f {
                out.push(x);
            }
        }
    }
    out
}

/// A parsed family description such as `join(polygon:5,simplex:1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Simplex(usize),
    Crosspolytope(usize),
    Polygon(usize),
    SimplexPrism(usize),
    Cube(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Pyramid(Box<FamilySpec>),
    PerturbedOctahedron(u64),
    PrismPlusPoint,
    Pentagon,
}

impl FamilySpec {
    pub fn generate(&self) -> Result<PointConfiguration, FamilyError> {
        let config = match self {
            FamilySpec::Simplex(d) => simplex(*d)?,
            FamilySpec::Crosspolytope(d) => crosspolytope(*d)?,
            FamilySpec::Polygon(n) => polygon(*n)?,
            FamilySpec::SimplexPrism(d) => simplex_prism(*d)?,
            FamilySpec::Cube(d) => cube(*d)?,
            FamilySpec::Join(a, b) => join(&a.generate()?, &b.generate()?)?,
            FamilySpec::Pyramid(a) => pyramid(&a.generate()?)?,
            FamilySpec::PerturbedOctahedron(seed) => perturbed_octahedron(*seed)?,
            FamilySpec::PrismPlusPoint => prism_plus_point(),
            FamilySpec::Pentagon => pentagon(),
        };
        Ok(config.with_name(self.to_string()))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Simplex(d) => write!(f, "simplex:{d}"),
            FamilySpec::Crosspolytope(d) => write!(f, "crosspolytope:{d}"),
            FamilySpec::Polygon(n) => write!(f, "polygon:{n}"),
            FamilySpec::SimplexPrism(d) => write!(f, "simplex_prism:{d}"),
            FamilySpec::Cube(d) => write!(f, "cube:{d}"),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::Pyramid(a) => write!(f, "pyramid({a})"),
            FamilySpec::PerturbedOctahedron(s) => write!(f, "perturbed_octahedron:{s}"),
            FamilySpec::PrismPlusPoint => write!(f, "prism_plus_point"),
            FamilySpec::Pentagon => write!(f, "pentagon"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = SpecParser { text: &text, pos: 0 };
        let spec = parser.spec()?;
        if parser.pos != text.len() {
            return Err(FamilyError::Parse(s.to_string()));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    text: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn err(&self) -> FamilyError {
        FamilyError::Parse(self.text.to_string())
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), FamilyError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err())
        }
    }

    fn ident(&mut self) -> &str {
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        self.pos += len;
        &self.text[start..start + len]
    }

    fn number(&mut self) -> Result<u64, FamilyError> {
        self.expect(":")?;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        let digits = &self.rest()[..len];
        let value = digits.parse().map_err(|_| self.err())?;
        self.pos += len;
        Ok(value)
    }

    fn spec(&mut self) -> Result<FamilySpec, FamilyError> {
        let name = self.ident().to_string();
        let spec = match name.as_str() {
            "simplex" => FamilySpec::Simplex(self.number()? as usize),
            "crosspolytope" | "cross" => FamilySpec::Crosspolytope(self.number()? as usize),
            "polygon" => FamilySpec::Polygon(self.number()? as usize),
            "simplex_prism" | "prism" => FamilySpec::SimplexPrism(self.number()? as usize),
            "cube" => FamilySpec::Cube(self.number()? as usize),
            "perturbed_octahedron" => FamilySpec::PerturbedOctahedron(if self.rest().starts_with(':') {
                self.number()?
            } else {
                0
            }),
            "prism_plus_point" => FamilySpec::PrismPlusPoint,
            "pentagon" | "pentagon_paper" => FamilySpec::Pentagon,
            "join" => {
                self.expect("(")?;
                let a = self.spec()?;
                self.expect(",")?;
                let b = self.spec()?;
                self.expect(")")?;
                FamilySpec::Join(Box::new(a), Box::new(b))
            }
            "pyramid" => {
                self.expect("(")?;
                let a = self.spec()?;
                self.expect(")")?;
                FamilySpec::Pyramid(Box::new(a))
            }
            _ => return Err(self.err()),
        };
        Ok(spec)
    }
}
