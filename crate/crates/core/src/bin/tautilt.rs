fn main() {
    let outcome = tautilt::cli::run(std::env::args_os());
    if outcome.status == 2 {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    std::process::exit(outcome.status);
}
