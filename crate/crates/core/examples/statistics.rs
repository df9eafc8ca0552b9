//! Compute the core statistics for a handful of permutations.
//!
//! ```text
//! cargo run --example statistics
//! ```

use parity_involution::{s10_s12, stat_quadruple, Permutation};

fn main() {
    let samples = ["3 6 4 5 7 8 2 1", "1 4 3 5 6 7 2 8", "2 1 3 4", "1 2 3 4 5"];

    println!("{:<17} {:>3} {:>3} {:>3} {:>4} {:>4} {:>4}", "p", "t1", "t2", "t3", "s17", "s10", "s12");
    for text in samples {
        let p: Permutation = text.parse().expect("sample permutations are well formed");
        let q = stat_quadruple(&p);
        let (s10, s12) = s10_s12(&p);
        println!(
            "{:<17} {:>3} {:>3} {:>3} {:>4} {:>4} {:>4}",
            p.to_string(),
            q.t1,
            q.t2,
            q.t3,
            q.s17,
            s10,
            s12
        );
        assert_eq!(s10, q.t1 + q.t3, "s10 counts descents with odd top");
        assert_eq!(s12, q.t2 + q.t3, "s12 counts adjacent odd pairs");
    }

    println!();
    println!("t1  descents with odd top and even bottom");
    println!("t2  ascents between two odd values");
    println!("t3  descents between two odd values");
    println!("s17 longest initial segment 1..i occurring left to right");
    println!("s10 = t1 + t3, s12 = t2 + t3 (each counted by its own direct scan)");
}
