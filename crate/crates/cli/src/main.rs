use std::io::{IsTerminal, Write};
use std::sync::Arc;

use mtlab_core::families::Progress;

fn main() {
    let progress: Option<Progress> = std::io::stderr().is_terminal().then(|| {
        Arc::new(|done: u64, total: u64| {
            eprint!("\rclass group sweep {done}/{total}");
            if done == total {
                eprintln!();
            }
        }) as Progress
    });
    let outcome = mtlab::run_with(std::env::args_os(), progress);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
