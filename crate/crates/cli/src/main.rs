fn main() {
    std::process::exit(conformal_cli::run(std::env::args_os()));
}
