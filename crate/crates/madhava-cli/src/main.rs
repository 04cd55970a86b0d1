fn main() {
    std::process::exit(madhava_cli::run());
}
