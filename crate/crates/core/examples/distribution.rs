//! Tabulate joint distributions over S_n and compare against swapped keys.
//!
//! ```text
//! cargo run --example distribution [n]
//! ```

use parity_involution::{joint_distribution, render_distribution, KeyKind, OutputFormat};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a small integer"))
        .unwrap_or(4);

    for kind in [KeyKind::Quadruple, KeyKind::Triple] {
        let table = joint_distribution(n, kind, 2).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            std::process::exit(2);
        });
        let comparison = table.compare(&table.swapped());
        println!("joint distribution of the {kind} over S_{n} ({} permutations):", table.total());
        print!("{}", render_distribution(&table, OutputFormat::Plain, Some(&comparison)));
        println!();
        assert!(
            comparison.equal,
            "swapping the first two key components must not change the table"
        );
    }

    println!("`equal` above means the table is unchanged when its first two key");
    println!("components are exchanged — the distributions are symmetric in them.");
}
