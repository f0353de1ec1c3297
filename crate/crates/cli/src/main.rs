fn main() {
    std::process::exit(qmacd::run_from(std::env::args_os()));
}
