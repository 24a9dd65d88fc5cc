fn main() {
    std::process::exit(kcausal::cli::run_from(std::env::args_os()));
}
