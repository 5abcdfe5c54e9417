use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let inv = sdforge_cli::invoke(std::env::args().skip(1));
    print!("{}", inv.stdout);
    eprint!("{}", inv.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(inv.code as u8)
}
