use clap::Parser;

fn main() {
    let cli = meancheck::cli::Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    std::process::exit(meancheck::cli::run(cli, &mut out));
}
