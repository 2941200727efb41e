fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(power_residues::cli::run(&argv));
}
