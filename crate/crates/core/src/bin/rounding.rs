fn main() {
    std::process::exit(rounding::cli::main_with_args(std::env::args_os()));
}
