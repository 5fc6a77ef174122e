use clap::Parser;

fn main() {
    let cli = qcc::cli::Cli::parse();
    std::process::exit(qcc::cli::run(cli));
}
