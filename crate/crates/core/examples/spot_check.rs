//! Seeded random verification at lengths where enumerating n! is hopeless.
//! The same seed always samples the same permutations.
//!
//! ```text
//! cargo run --release --example spot_check [n] [samples] [seed]
//! ```

use parity_involution::{render_report, spot_check, Check, OutputFormat};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map(|s| s.parse().expect("n")).unwrap_or(16);
    let samples: u64 = args.next().map(|s| s.parse().expect("samples")).unwrap_or(2000);
    let seed: u64 = args.next().map(|s| s.parse().expect("seed")).unwrap_or(0);

    let report = spot_check(n, samples, seed, &Check::ALL).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });
    print!("{}", render_report(&report, OutputFormat::Plain));
    std::process::exit(if report.passed() { 0 } else { 1 });
}
