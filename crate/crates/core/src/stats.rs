//! Parity-sensitive statistics on permutations, and the two gap
//! classification schemes that drive the insertion involution.
//!
//! For `p = p_1 … p_n`, the adjacent-pair statistics are
//!
//! * `t1` — descents `p_i > p_{i+1}` with `p_i` odd and `p_{i+1}` even,
//! * `t2` — ascents `p_i < p_{i+1}` with both entries odd,
//! * `t3` — descents with both entries odd,
//! * `s10` — descents with odd top (`t1 + t3`, but counted directly),
//! * `s12` — adjacent pairs with both entries odd (`t2 + t3`, counted directly),
//!
//! and `s17` is the largest `i` such that `1, 2, …, i` occurs as a
//! left-to-right subsequence.
//!
//! The `n + 1` insertion gaps of `p` are partitioned into five classes. For
//! an internal gap between `x = p_i` and `y = p_{i+1}`:
//!
//! * `A` — `x`, `y` both even,
//! * `B` — `x` odd and `x > y`,
//! * `C` — `x` even and `y` odd, or `x < y` with both odd,
//! * `D` — `x` odd, `y` even, `x < y`;
//!
//! the front gap is `A` if `p_1` is even and `C` if odd, and the back gap is
//! `B` if `p_n` is odd and `E` if even. [`gap_profile`] counts the classes;
//! [`classify_gaps_odd_phase`] labels each gap, which is how an odd value is
//! placed during rebuilding. Even values use the coarser scheme of
//! [`classify_gaps_even_phase`]: the front and back gaps stand alone, an
//! internal gap is `T1`/`T2`/`T3` when the surrounding pair matches the
//! corresponding statistic, and everything else is `Other`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{GapIndex, Permutation};

/// The four jointly-tracked statistics `(t1, t2, t3, s17)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StatQuadruple {
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub s17: usize,
}

/// Gap-class counts `(a, b, c, d, e)`; always `a + b + c + d + e = n + 1`
/// and `e ≤ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GapProfile {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
}

impl GapProfile {
    pub fn total(&self) -> usize {
        self.a + self.b + self.c + self.d + self.e
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize, usize) {
        (self.a, self.b, self.c, self.d, self.e)
    }
}

/// Gap class used when inserting an odd value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OddPhaseClass {
    A,
    B,
    C,
    D,
    E,
}

/// Gap class used when inserting an even value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvenPhaseClass {
    First,
    T1,
    T2,
    T3,
    Last,
    Other,
}

/// A gap class from either scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PhaseClass {
    Odd(OddPhaseClass),
    Even(EvenPhaseClass),
}

/// One gap with its class and its 1-based left-to-right rank within that
/// class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifiedGap<C> {
    pub position: GapIndex,
    pub class: C,
    pub rank: usize,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("no gap of class {class} with rank {rank} (only {available} such gaps)")]
pub struct RankOutOfRange {
    pub class: PhaseClass,
    pub rank: usize,
    pub available: usize,
}

fn odd(v: usize) -> bool {
    v % 2 == 1
}

/// Computes `(t1, t2, t3, s17)` in one pass over adjacent pairs plus one
/// greedy sweep for `s17`.
///
/// ```
/// use parity_involution::{stat_quadruple, Permutation};
///
/// let p = Permutation::parse("3 6 4 5 7 8 2 1").unwrap();
/// let q = stat_quadruple(&p);
/// assert_eq!((q.t1, q.t2, q.t3, q.s17), (0, 1, 0, 1));
/// ```
pub fn stat_quadruple(p: &Permutation) -> StatQuadruple {
    let v = p.values();
    let (mut t1, mut t2, mut t3) = (0, 0, 0);
    for w in v.windows(2) {
        let (x, y) = (w[0], w[1]);
        match (odd(x), odd(y)) {
            (true, false) if x > y => t1 += 1,
            (true, true) if x < y => t2 += 1,
            (true, true) => t3 += 1,
            _ => {}
        }
    }
    // 1, 2, … appear left to right exactly when each is seen while it is the
    // next value wanted, so a greedy sweep finds the longest such prefix.
    let mut next = 1;
    for &x in v {
        if x == next {
            next += 1;
        }
    }
    StatQuadruple {
        t1,
        t2,
        t3,
        s17: next - 1,
    }
}

/// Counts descents with odd top and adjacent odd-odd pairs by direct scans,
/// independent of [`stat_quadruple`].
pub fn s10_s12(p: &Permutation) -> (usize, usize) {
    let mut s10 = 0;
    let mut s12 = 0;
    for w in p.values().windows(2) {
        let (x, y) = (w[0], w[1]);
        if x > y && odd(x) {
            s10 += 1;
        }
        if odd(x) && odd(y) {
            s12 += 1;
        }
    }
    (s10, s12)
}

/// Counts the five gap classes straight from their defining conditions.
///
/// ```
/// use parity_involution::{gap_profile, Permutation};
///
/// let p = Permutation::parse("1").unwrap();
/// assert_eq!(gap_profile(&p).as_tuple(), (0, 1, 1, 0, 0));
/// ```
pub fn gap_profile(p: &Permutation) -> GapProfile {
    let v = p.values();
    let n = v.len();
    let mut profile = GapProfile {
        a: 0,
        b: 0,
        c: 0,
        d: 0,
        e: 0,
    };
    if odd(v[0]) {
        profile.c += 1;
    } else {
        profile.a += 1;
    }
    if odd(v[n - 1]) {
        profile.b += 1;
    } else {
        profile.e += 1;
    }
    for w in v.windows(2) {
        let (x, y) = (w[0], w[1]);
        if !odd(x) && !odd(y) {
            profile.a += 1;
        }
        if odd(x) && x > y {
            profile.b += 1;
        }
        if (!odd(x) && odd(y)) || (odd(x) && odd(y) && x < y) {
            profile.c += 1;
        }
        if odd(x) && !odd(y) && x < y {
            profile.d += 1;
        }
    }
    profile
}

/// Labels every gap with its `A`–`E` class and per-class rank.
pub fn classify_gaps_odd_phase(p: &Permutation) -> Vec<ClassifiedGap<OddPhaseClass>> {
    use OddPhaseClass::*;
    let v = p.values();
    let n = v.len();
    let mut counts = [0usize; 5];
    let mut out = Vec::with_capacity(n + 1);
    for pos in 0..=n {
        let class = if pos == 0 {
            if odd(v[0]) {
                C
            } else {
                A
            }
        } else if pos == n {
            if odd(v[n - 1]) {
                B
            } else {
                E
            }
        } else {
            let (x, y) = (v[pos - 1], v[pos]);
            match (odd(x), odd(y)) {
                (false, false) => A,
                (true, _) if x > y => B,
                (false, true) | (true, true) => C,
                (true, false) => D,
            }
        };
        counts[class as usize] += 1;
        out.push(ClassifiedGap {
            position: GapIndex(pos),
            class,
            rank: counts[class as usize],
        });
    }
    out
}

/// Labels every gap with its `First`/`T1`/`T2`/`T3`/`Last`/`Other` class and
/// per-class rank. Well-defined for any length; the rebuilding step applies
/// it when the value being inserted is even.
pub fn classify_gaps_even_phase(p: &Permutation) -> Vec<ClassifiedGap<EvenPhaseClass>> {
    use EvenPhaseClass::*;
    let v = p.values();
    let n = v.len();
    let mut counts = [0usize; 6];
    let mut out = Vec::with_capacity(n + 1);
    for pos in 0..=n {
        let class = if pos == 0 {
            First
        } else if pos == n {
            Last
        } else {
            let (x, y) = (v[pos - 1], v[pos]);
            match (odd(x), odd(y)) {
                (true, false) if x > y => T1,
                (true, true) if x < y => T2,
                (true, true) => T3,
                _ => Other,
            }
        };
        counts[class as usize] += 1;
        out.push(ClassifiedGap {
            position: GapIndex(pos),
            class,
            rank: counts[class as usize],
        });
    }
    out
}

/// The position of the rank-`rank` gap of class `class`, under whichever
/// scheme the class belongs to. A missing rank is reported as an error; when
/// the caller is replaying an insertion plan this signals an
/// internal-consistency failure, since the class counts of partner
/// permutations are guaranteed to match.
pub fn find_gap(
    p: &Permutation,
    class: PhaseClass,
    rank: usize,
) -> Result<GapIndex, RankOutOfRange> {
    let (found, available) = match class {
        PhaseClass::Odd(c) => {
            let gaps = classify_gaps_odd_phase(p);
            let available = gaps.iter().filter(|g| g.class == c).count();
            (
                gaps.iter()
                    .find(|g| g.class == c && g.rank == rank)
                    .map(|g| g.position),
                available,
            )
        }
        PhaseClass::Even(c) => {
            let gaps = classify_gaps_even_phase(p);
            let available = gaps.iter().filter(|g| g.class == c).count();
            (
                gaps.iter()
                    .find(|g| g.class == c && g.rank == rank)
                    .map(|g| g.position),
                available,
            )
        }
    };
    found.ok_or(RankOutOfRange {
        class,
        rank,
        available,
    })
}

impl fmt::Display for OddPhaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OddPhaseClass::A => "A",
            OddPhaseClass::B => "B",
            OddPhaseClass::C => "C",
            OddPhaseClass::D => "D",
            OddPhaseClass::E => "E",
        })
    }
}

impl fmt::Display for EvenPhaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvenPhaseClass::First => "First",
            EvenPhaseClass::T1 => "T1",
            EvenPhaseClass::T2 => "T2",
            EvenPhaseClass::T3 => "T3",
            EvenPhaseClass::Last => "Last",
            EvenPhaseClass::Other => "Other",
        })
    }
}

impl fmt::Display for PhaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhaseClass::Odd(c) => c.fmt(f),
            PhaseClass::Even(c) => c.fmt(f),
        }
    }
}

impl From<OddPhaseClass> for PhaseClass {
    fn from(c: OddPhaseClass) -> Self {
        PhaseClass::Odd(c)
    }
}

impl From<EvenPhaseClass> for PhaseClass {
    fn from(c: EvenPhaseClass) -> Self {
        PhaseClass::Even(c)
    }
}
