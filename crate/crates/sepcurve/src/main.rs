fn main() {
    std::process::exit(sepcurve::cli::run(std::env::args_os()));
}
