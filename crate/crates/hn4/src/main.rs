use clap::Parser;

fn main() {
    let cli = hn4::cli::Cli::parse();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    let code = hn4::cli::run(&cli, &mut out, &mut err);
    std::process::exit(code);
}
