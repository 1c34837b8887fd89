fn main() {
    std::process::exit(flagkneser::cli::main_with_args(std::env::args_os()));
}
