use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = bergex_cli::execute(&args);
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    eprintln!("wall_time {:.3}s", out.wall_time.as_secs_f64());
    ExitCode::from(out.exit)
}
