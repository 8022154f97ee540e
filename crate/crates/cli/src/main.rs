use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    match stardom_cli::run(&argv) {
        Ok(outcome) => {
            if let Some(msg) = &outcome.diagnostic {
                eprintln!("stardom: {msg}");
            }
            if outcome.written_to.is_none() {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(outcome.report.as_bytes());
            }
            ExitCode::from(outcome.code as u8)
        }
        Err(info) => {
            print!("{}", info.text);
            ExitCode::SUCCESS
        }
    }
}
