use std::process::ExitCode;

use baxter_cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo = std::iter::once("baxter")
        .chain(args.iter().skip(1).map(String::as_str))
        .collect::<Vec<_>>()
        .join(" ");
    let report = run(&cli, &echo);
    print!("{}", report.render(cli.report));
    ExitCode::from(report.status().exit_code() as u8)
}
