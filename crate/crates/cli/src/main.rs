use std::io::Write;

use growthforge_cli::{run, THREADS_ENV};

fn main() {
    let threads = std::env::var(THREADS_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), threads.as_deref(), &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
