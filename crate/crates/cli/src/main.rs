fn main() {
    std::process::exit(rwords_cli::run(std::env::args_os()));
}
