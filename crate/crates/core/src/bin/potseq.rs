fn main() {
    std::process::exit(potseq::cli::run(std::env::args_os()));
}
