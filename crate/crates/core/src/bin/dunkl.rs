fn main() {
    std::process::exit(dunkl_core::cli::run(std::env::args_os()));
}
