use std::io::{self, Write};
use std::process::ExitCode;

use gtkk_cli::{parse_args, run, EXIT_OK};

fn main() -> ExitCode {
    let cli = match parse_args(std::env::args_os()) {
        Ok(cli) => cli,
        Err(e) => {
            if e.code == EXIT_OK {
                print!("{e}");
            } else {
                eprint!("{e}");
            }
            return ExitCode::from(e.code as u8);
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let result = run(&cli, &mut lock);
    let _ = lock.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.code == EXIT_OK => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gtkk: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
