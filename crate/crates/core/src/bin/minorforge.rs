fn main() {
    let code = minorforge::cli::run(std::env::args_os());
    std::process::exit(code);
}
