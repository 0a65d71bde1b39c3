fn main() {
    std::process::exit(frenet5_cli::run());
}
