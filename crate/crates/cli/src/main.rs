fn main() {
    std::process::exit(cremona_cli::run(std::env::args_os()));
}
