fn main() {
    std::process::exit(splitscope::cli::run(std::env::args_os()));
}
