fn main() {
    std::process::exit(lensspoof_cli::run(std::env::args_os()));
}
