fn main() {
    std::process::exit(powerdom::cli::main());
}
