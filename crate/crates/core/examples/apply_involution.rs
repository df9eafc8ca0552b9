//! Apply the involution, round-trip it, and watch t1 and t2 trade places.
//!
//! ```text
//! cargo run --example apply_involution [permutation]
//! ```

use parity_involution::{involution, stat_quadruple, Permutation};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "3 6 4 5 7 8 2 1".to_string());
    let p: Permutation = text.parse().unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(2);
    });

    let image = involution(&p);
    let back = involution(&image);

    let s = stat_quadruple(&p);
    let si = stat_quadruple(&image);
    println!("p     = {p}");
    println!("  (t1,t2,t3,s17) = ({},{},{},{})", s.t1, s.t2, s.t3, s.s17);
    println!("p'    = {image}");
    println!("  (t1,t2,t3,s17) = ({},{},{},{})", si.t1, si.t2, si.t3, si.s17);
    println!("p''   = {back}");

    assert_eq!(back, p, "applying the map twice returns the original");
    assert_eq!(
        (s.t1, s.t2, s.t3, s.s17),
        (si.t2, si.t1, si.t3, si.s17),
        "the image's quadruple is the original's with t1 and t2 exchanged"
    );
    println!();
    println!("round trip returned the original; t1 and t2 exchanged, t3 and s17 fixed");
}
