fn main() {
    match kannappan::cli::run(std::env::args_os()) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, kannappan::Error::Parse(_)) {
                eprintln!("run `kannappan --help` for literal and carrier syntax");
                std::process::exit(2);
            }
            std::process::exit(1);
        }
    }
}
