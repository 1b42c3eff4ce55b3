fn main() {
    std::process::exit(ybe::cli::run());
}
