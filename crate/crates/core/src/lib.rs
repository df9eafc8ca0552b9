//! Parity-sensitive permutation statistics and an insertion involution
//! that exchanges two of them.
//!
//! The crate is organized around one map: an involution on permutations of
//! `{1, …, n}` that swaps the statistic counting descents with odd top and
//! even bottom (`t1`) with the statistic counting ascents between odd values
//! (`t2`), while preserving the count of descents between odd values (`t3`)
//! and the length of the maximal initial segment `1, 2, …, i` appearing as a
//! left-to-right subsequence (`s17`). Because the two statistics trade
//! places under a self-inverse map, the quadruples `(t1, t2, t3, s17)` and
//! `(t2, t1, t3, s17)` have the same joint distribution over every symmetric
//! group, and the derived statistics `s10 = t1 + t3` and `s12 = t2 + t3`
//! inherit the same exchange.
//!
//! # Quickstart
//!
//! ```
//! use parity_involution::{involution, stat_quadruple, Permutation};
//!
//! let p: Permutation = "3 6 4 5 7 8 2 1".parse()?;
//! let q = involution(&p);
//! assert_eq!(q.to_string(), "7 2 6 1 4 3 8 5");
//!
//! // The involution is self-inverse and trades t1 with t2.
//! assert_eq!(involution(&q), p);
//! let (s, si) = (stat_quadruple(&p), stat_quadruple(&q));
//! assert_eq!((s.t1, s.t2, s.t3, s.s17), (si.t2, si.t1, si.t3, si.s17));
//! # Ok::<(), parity_involution::ParseError>(())
//! ```
//!
//! # Tour by example
//!
//! Each major capability has a runnable example (`cargo run --example …`):
//!
//! - `statistics` — the four core statistics plus `s10`/`s12` for a few
//!   permutations.
//! - `gap_classes` — how the `n + 1` insertion gaps of a permutation are
//!   classified in each phase, and the resulting gap profile.
//! - `apply_involution` — applying the map, round-tripping, and watching the
//!   statistics swap.
//! - `trace_table` — the level-by-level construction table for a permutation
//!   and its image.
//! - `distribution` — joint distribution tables over `S_n` and the swapped-key
//!   comparison.
//! - `exhaustive_verify` — running every check over a whole symmetric group.
//! - `spot_check` — seeded random verification at lengths where `n!` is out
//!   of reach.
//!
//! The same functionality is scriptable through the `parity-involution`
//! binary (`stats`, `apply`, `trace`, `dist`, `verify` subcommands).
//!
//! # Layout
//!
//! - [`perm`] — the [`Permutation`] type, parsing, and the gap-insertion /
//!   maximum-removal primitives.
//! - [`stats`] — statistic counters ([`stat_quadruple`], [`s10_s12`]) and gap
//!   classification ([`gap_profile`], [`classify_gaps_odd_phase`],
//!   [`classify_gaps_even_phase`], [`find_gap`]).
//! - [`involution`](mod@involution) — [`decompose`], [`InsertionPlan`],
//!   [`involution`](fn@involution), and [`trace`].
//! - [`harness`] — lexicographic [`rank`]/[`unrank`]/[`enumerate`],
//!   [`joint_distribution`], [`check_equidistribution`], [`verify`], and
//!   [`spot_check`].
//! - [`render`] — plain/JSON/CSV/Markdown renderers used by the binary.

pub mod harness;
pub mod involution;
pub mod perm;
pub mod render;
pub mod stats;

#[cfg(test)]
pub(crate) mod test_support;

pub use harness::{
    check_equidistribution, enumerate, enumerate_capped, factorial, joint_distribution,
    joint_distribution_capped, rank, spot_check, unrank, verify, verify_capped, Check,
    DistributionTable, EquidistributionReport, HarnessError, KeyDifference, KeyKind, RankRange,
    SwapComparison, VerificationReport, Violation, DEFAULT_MAX_N, HARD_MAX_N, MAX_VIOLATIONS,
};
pub use involution::{decompose, involution, trace, InsertionPlan, PlannedInsertion, TraceRow};
pub use perm::{GapIndex, ParseError, Permutation, RemovalRecord};
pub use render::{render_distribution, render_report, render_stats, render_trace, OutputFormat, StatsSummary};
pub use stats::{
    classify_gaps_even_phase, classify_gaps_odd_phase, find_gap, gap_profile, s10_s12,
    stat_quadruple, ClassifiedGap, EvenPhaseClass, GapProfile, OddPhaseClass, PhaseClass,
    RankOutOfRange, StatQuadruple,
};
