use clap::Parser;
use fiberlab_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    if cli.global.json {
        println!("{}", out.report.to_json());
    } else {
        print!("{}", out.report.to_text());
    }
    std::process::exit(out.exit_code);
}
