fn main() {
    std::process::exit(alexmod::cli::run_cli(std::env::args_os()));
}
