fn main() {
    std::process::exit(fairrep_cli::main_with(std::env::args_os()));
}
