fn main() {
    std::process::exit(level_zero::cli::run(std::env::args_os()));
}
