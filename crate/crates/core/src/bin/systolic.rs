fn main() {
    std::process::exit(systolic::cli::run(std::env::args_os()));
}
