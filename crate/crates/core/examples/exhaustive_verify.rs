//! Run every check over a whole symmetric group, in parallel.
//!
//! ```text
//! cargo run --release --example exhaustive_verify [n] [workers]
//! ```

use parity_involution::{render_report, verify, Check, OutputFormat};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(8);
    let workers: usize = args.next().map(|s| s.parse().expect("workers")).unwrap_or(4);

    let report = verify(n, &Check::ALL, workers).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });
    print!("{}", render_report(&report, OutputFormat::Plain));
    std::process::exit(if report.passed() { 0 } else { 1 });
}
