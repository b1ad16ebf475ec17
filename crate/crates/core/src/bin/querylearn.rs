use std::process::ExitCode;

fn main() -> ExitCode {
    let out = querylearn::cli::execute(std::env::args_os().skip(1));
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    if out.code == 0 {
        print!("{}", out.report);
    } else {
        eprint!("{}", out.report);
    }
    ExitCode::from(out.code as u8)
}
