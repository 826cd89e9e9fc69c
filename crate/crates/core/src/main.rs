fn main() {
    std::process::exit(toric_posets::cli::run(std::env::args_os()));
}
