fn main() {
    std::process::exit(kneser_lab::harness::cli_main(std::env::args_os()));
}
