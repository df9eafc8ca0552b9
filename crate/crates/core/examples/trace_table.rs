//! Print the level-by-level construction table for a permutation and its
//! image: each row shows the length-m prefix pair and their gap profiles.
//!
//! ```text
//! cargo run --example trace_table [permutation]
//! ```

use parity_involution::{render_trace, trace, OutputFormat, Permutation};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3 6 4 5 7 8 2 1".to_string());
    let p: Permutation = text.parse().unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });

    let rows = trace(&p);
    print!("{}", render_trace(&rows, OutputFormat::Plain));
    println!();
    println!(
        "Each row inserts the next value into p's prefix and the mirrored gap \
         into the image; for odd rows a and b trade (off by one), for even rows \
         they swap exactly, and c, d, e always agree."
    );
}
