fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (out, status) = conrad::cli::run_command(&args);
    if status == 2 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(status);
}
