fn main() {
    std::process::exit(jackpoly::cli::run(std::env::args_os()));
}
