fn main() {
    std::process::exit(adlvkit::cli::main_with_args(std::env::args_os()));
}
