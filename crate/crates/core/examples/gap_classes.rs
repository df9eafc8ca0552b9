//! Show how the n + 1 insertion gaps of a permutation are classified, in
//! both phases, and how the odd-phase classes add up to the gap profile.
//!
//! ```text
//! cargo run --example gap_classes
//! ```

use parity_involution::{
    classify_gaps_even_phase, classify_gaps_odd_phase, gap_profile, Permutation,
};

fn main() {
    let p: Permutation = "3 6 4 5 2 1".parse().expect("well formed");
    println!("p = {p}");
    println!();

    println!("odd phase (used when the next value to insert is odd):");
    for gap in classify_gaps_odd_phase(&p) {
        println!("  gap {} -> class {} (rank {} of its class)", gap.position, gap.class, gap.rank);
    }
    let g = gap_profile(&p);
    println!("  profile: a={} b={} c={} d={} e={}", g.a, g.b, g.c, g.d, g.e);
    println!();

    println!("even phase (used when the next value to insert is even):");
    for gap in classify_gaps_even_phase(&p) {
        println!("  gap {} -> class {} (rank {} of its class)", gap.position, gap.class, gap.rank);
    }
    println!();
    println!("Internal even-phase classes count the statistics: T1 gaps sit in");
    println!("odd-over-even descents, T2 in odd-odd ascents, T3 in odd-odd descents.");
}
