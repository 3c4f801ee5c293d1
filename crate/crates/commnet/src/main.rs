fn main() {
    std::process::exit(commnet::cli::run());
}
