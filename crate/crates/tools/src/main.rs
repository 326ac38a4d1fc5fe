use std::process::ExitCode;

use binoid_tools::cli::{run, Args, CliError};
use clap::Parser;

fn main() -> ExitCode {
    let args = Args::parse();
    let result = std::fs::read_to_string(&args.input)
        .map_err(|source| CliError::Read { path: args.input.clone(), source })
        .and_then(|text| run(&args, &text));
    match result {
        Ok(out) => {
            println!("{}", out.text.trim_end_matches('\n'));
            if out.incomplete {
                eprintln!("binoid: incomplete result, some unit groups were not certified; try a larger --bound");
                return ExitCode::from(4);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("binoid: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
