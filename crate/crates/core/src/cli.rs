//! The `splitscope` command line.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::check::check;
use crate::classify::classify_with;
use crate::family::FamilySpec;
use crate::gale::gale_dual;
use crate::om::PointConfiguration;
use crate::report::{
    parse_config, CircuitsJson, ClassificationJson, ConfigJson, GaleJson, SplitComplexJson, SplitJson,
    TriangulationJson,
};
use crate::splits::{enumerate_splits, split_complexes, ComplexOptions, DEFAULT_MAX_WEAK_CARD};
use crate::triangulation::{enumerate_triangulations, EnumerationBudget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "splitscope", version, about = "Splits and total splittability of polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Family spec, e.g. `crosspolytope:3` or `join(polygon:5,simplex:1)`.
    #[arg(long, global = true)]
    pub family: Option<String>,
    /// Point configuration JSON file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WEAK_CARD)]
    pub max_weak_card: usize,
    #[arg(long, global = true)]
    pub regular_only: bool,
    /// Seed for perturbed octahedra in the family spec.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    Gen,
    Gale,
    Circuits,
    Splits,
    SplitComplex,
    Triangulations,
    Classify,
    Check,
}

fn reseed(spec: FamilySpec, seed: u64) -> FamilySpec {
    match spec {
        FamilySpec::PerturbedOctahedron(_) => FamilySpec::PerturbedOctahedron(seed),
        FamilySpec::Join(a, b) => FamilySpec::Join(Box::new(reseed(*a, seed)), Box::new(reseed(*b, seed))),
        FamilySpec::Pyramid(a) => FamilySpec::Pyramid(Box::new(reseed(*a, seed))),
        other => other,
    }
}

fn load(common: &Common) -> Result<PointConfiguration, String> {
    match (&common.family, &common.input) {
        (Some(_), Some(_)) => Err("give either --family or --input, not both".into()),
        (None, None) => Err("one of --family or --input is required".into()),
        (Some(text), None) => {
            let mut spec: FamilySpec = text.parse().map_err(|e| format!("{e}"))?;
            if let Some(seed) = common.seed {
                spec = reseed(spec, seed);
            }
            spec.generate().map_err(|e| e.to_string())
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            parse_config(&text).map_err(|e| e.to_string())
        }
    }
}

fn budget(common: &Common) -> EnumerationBudget {
    EnumerationBudget {
        max_n: common.max_n,
        ..EnumerationBudget::default()
    }
}

fn options(common: &Common) -> ComplexOptions {
    ComplexOptions {
        max_weak_card: common.max_weak_card,
        ..ComplexOptions::default()
    }
}

fn value<T: Serialize>(x: T) -> serde_json::Value {
    serde_json::to_value(x).expect("reports serialize")
}

/// The JSON report for `command` and its exit code.
pub fn execute(command: Command, common: &Common) -> Result<(serde_json::Value, i32), String> {
    let config = load(common)?;
    let name = config.name().to_string();
    let out = match command {
        Command::Gen => value(ConfigJson::from_config(&config)),
        Command::Gale => value(GaleJson::from_diagram(&gale_dual(&config))),
        Command::Circuits => value(CircuitsJson::new(&config)),
        Command::Splits => {
            let splits: Vec<SplitJson> = enumerate_splits(&config).iter().map(|s| SplitJson::new(&config, s)).collect();
            json!({ "name": name, "count": splits.len(), "splits": splits })
        }
        Command::SplitComplex => match split_complexes(&config, options(common)) {
            Ok(report) => value(SplitComplexJson::new(&config, &report)),
            Err(e) => json!({ "name": name, "error": e.to_string() }),
        },
        Command::Triangulations => match enumerate_triangulations(&config, common.regular_only, budget(common)) {
            Ok(all) => {
                let splits = enumerate_splits(&config);
                let items: Vec<TriangulationJson> =
                    all.iter().map(|t| TriangulationJson::new(&config, t, splits)).collect();
                json!({
                    "name": name,
                    "regular_only": common.regular_only,
                    "count": items.len(),
                    "triangulations": items,
                })
            }
            Err(e) => json!({ "name": name, "budget_exceeded": e.to_string() }),
        },
        Command::Classify => value(ClassificationJson::new(&config, &classify_with(&config, budget(common)))),
        Command::Check => {
            let report = check(&config, budget(common), options(common));
            let brute_force = report.brute_force.as_ref().map(|bf| {
                json!({
                    "answer": bf.answer,
                    "all_triangulations_answer": bf.all_triangulations_answer,
                    "triangulations": bf.triangulations,
                    "regular_triangulations": bf.regular_triangulations,
                    "witness": bf.witness.as_ref().map(|t| t.cell_labels(&config)),
                    "inconsistent": bf.inconsistent,
                })
            });
            let code = if report.consistent() { EXIT_OK } else { EXIT_INCONSISTENT };
            let out = json!({
                "name": name,
                "classification": ClassificationJson::new(&config, &report.classification),
                "brute_force": brute_force,
                "budget_note": report.budget_note,
                "invariants": report.invariants,
                "verdicts_agree": report.verdicts_agree(),
                "consistent": report.consistent(),
            });
            return Ok((out, code));
        }
    };
    Ok((out, EXIT_OK))
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (report, code) = match execute(cli.command, &cli.common) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
    match &cli.common.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    code
}
