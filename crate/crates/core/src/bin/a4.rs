use std::io::Write;

fn main() {
    let (out, code) = painleve_a4::cli::run_args(std::env::args_os());
    let _ = writeln!(std::io::stdout(), "{out}");
    std::process::exit(code);
}
