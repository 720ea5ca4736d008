fn main() {
    std::process::exit(scaledim::cli::run_main());
}
