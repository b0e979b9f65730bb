fn main() {
    std::process::exit(twolocal::cli::main_with_args());
}
