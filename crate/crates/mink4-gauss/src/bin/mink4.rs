use std::io::{stderr, stdout};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = mink4_gauss::cli::run_cli(&args, &mut stdout(), &mut stderr());
    std::process::exit(code);
}
