fn main() {
    std::process::exit(rainbow_core::cli::run_cli(std::env::args_os()).code());
}
