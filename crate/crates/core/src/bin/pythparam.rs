fn main() {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let code = pythparam::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut std::io::stderr(),
    );
    std::process::exit(code);
}
