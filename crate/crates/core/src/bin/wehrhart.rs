fn main() {
    std::process::exit(weighted_ehrhart::cli::main_with_args(std::env::args_os()));
}
