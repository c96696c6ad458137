fn main() {
    std::process::exit(barymetric::cli::run(std::env::args_os()));
}
