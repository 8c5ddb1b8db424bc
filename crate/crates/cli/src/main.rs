fn main() {
    std::process::exit(treemaw_cli::run(std::env::args_os()));
}
