use clap::Parser;
use patsum::{run, Args, Outcome, RunConfig};

fn main() {
    let config = match RunConfig::from_args(Args::parse()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(Outcome::ConfigError.code());
        }
    };
    std::process::exit(run(&config).code());
}
