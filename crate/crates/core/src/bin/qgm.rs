fn main() {
    std::process::exit(qgm::cli::run(std::env::args_os()));
}
