fn main() {
    std::process::exit(pingpong_lab::cli::main_with_stdio());
}
