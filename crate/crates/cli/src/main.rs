use clap::Parser;
use devres_cli::{run, Cli, JobSpec};

fn main() {
    let job = JobSpec::from(Cli::parse());
    std::process::exit(run(&job));
}
