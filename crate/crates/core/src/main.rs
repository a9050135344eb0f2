use std::process::ExitCode;

fn main() -> ExitCode {
    match lietrans::cli::run(std::env::args_os()) {
        Ok(report) => {
            print!("{}", report.render());
            ExitCode::from(report.exit_code() as u8)
        }
        Err((text, code)) => {
            if code == 0 {
                print!("{text}");
            } else {
                eprint!("{text}");
            }
            ExitCode::from(code as u8)
        }
    }
}
