use std::process::ExitCode;

fn main() -> ExitCode {
    let env = std::env::var(scavenger_cli::WORKERS_ENV).ok();
    let code = scavenger_cli::run(
        std::env::args_os(),
        env,
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    ExitCode::from(code as u8)
}
