fn main() {
    std::process::exit(ehf_harness::cli::run(std::env::args_os()));
}
