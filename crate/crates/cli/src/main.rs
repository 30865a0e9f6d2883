use clap::Parser;

fn main() {
    let cli = curvenbhd_cli::Cli::parse();
    let outcome = curvenbhd_cli::execute(cli);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
