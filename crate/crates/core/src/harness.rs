//! Exhaustive and sampled verification over whole symmetric groups.
//!
//! Permutations are enumerated in lexicographic order through a
//! factorial-base ranking, so the space `[0, n!)` can be cut into disjoint
//! [`RankRange`]s handed to independent workers. Each worker fills a private
//! table or violation list; results merge by addition and ordered
//! concatenation, making every report identical for any worker count.
//!
//! Lengths are capped at [`DEFAULT_MAX_N`] `= 12` to keep accidental runs
//! desk-sized; the `_capped` variants raise the cap explicitly, up to
//! [`HARD_MAX_N`] `= 20` where `n!` stops fitting in a `u64`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::involution::{involution, trace};
use crate::perm::Permutation;
use crate::stats::{gap_profile, s10_s12, stat_quadruple, find_gap, PhaseClass};
use crate::stats::{classify_gaps_even_phase, classify_gaps_odd_phase, EvenPhaseClass, OddPhaseClass};

/// Largest length accepted without an explicit cap override.
pub const DEFAULT_MAX_N: usize = 12;

/// Largest length whose factorial fits in a `u64`.
pub const HARD_MAX_N: usize = 20;

/// How many violations a report keeps. Scanning continues past the cap so
/// `checked` stays exact; the kept violations are always the lowest-ranked.
pub const MAX_VIOLATIONS: usize = 100;

/// A half-open block `[lo, hi)` of lexicographic ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankRange {
    pub lo: u64,
    pub hi: u64,
}

impl RankRange {
    /// The whole of `[0, n!)`.
    pub fn full(n: usize) -> RankRange {
        RankRange {
            lo: 0,
            hi: factorial(n),
        }
    }

    pub fn len(&self) -> u64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HarnessError {
    #[error("length {n} outside supported range 1..={max}")]
    UnsupportedLength { n: usize, max: usize },
    #[error("rank range {lo}..{hi} does not fit in 0..{total} (= {n}!)")]
    InvalidRange { lo: u64, hi: u64, n: usize, total: u64 },
    #[error("rank {rank} out of range 0..{total} for length {n}")]
    RankOutOfRange { rank: u64, n: usize, total: u64 },
}

/// `n!` as a `u64`. Panics above [`HARD_MAX_N`].
pub fn factorial(n: usize) -> u64 {
    assert!(n <= HARD_MAX_N, "{n}! does not fit in a u64");
    (1..=n as u64).product()
}

fn ensure_supported(n: usize, cap: usize) -> Result<(), HarnessError> {
    let max = cap.min(HARD_MAX_N);
    if n == 0 || n > max {
        return Err(HarnessError::UnsupportedLength { n, max });
    }
    Ok(())
}

/// The permutation of `{1, …, n}` with lexicographic rank `r`, via the
/// factorial-base digits of `r`.
pub fn unrank(n: usize, r: u64) -> Result<Permutation, HarnessError> {
    ensure_supported(n, HARD_MAX_N)?;
    let total = factorial(n);
    if r >= total {
        return Err(HarnessError::RankOutOfRange { rank: r, n, total });
    }
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut values = Vec::with_capacity(n);
    let mut r = r;
    for i in 0..n {
        let block = factorial(n - 1 - i);
        let digit = (r / block) as usize;
        r %= block;
        values.push(remaining.remove(digit));
    }
    Ok(Permutation::from_trusted(values))
}

/// Lexicographic rank of `p`, inverse to [`unrank`].
pub fn rank(p: &Permutation) -> u64 {
    let n = p.len();
    assert!(n <= HARD_MAX_N, "rank of a length-{n} permutation overflows u64");
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut r = 0u64;
    for (i, &v) in p.values().iter().enumerate() {
        let digit = remaining.iter().position(|&x| x == v).expect("value present");
        r += digit as u64 * factorial(n - 1 - i);
        remaining.remove(digit);
    }
    r
}

/// Streams the permutations of `{1, …, n}` with ranks in `range`, in rank
/// order. `n` is capped at [`DEFAULT_MAX_N`].
pub fn enumerate(n: usize, range: RankRange) -> Result<Enumerate, HarnessError> {
    enumerate_capped(n, range, DEFAULT_MAX_N)
}

/// [`enumerate`] with an explicit cap (clamped to [`HARD_MAX_N`]).
pub fn enumerate_capped(n: usize, range: RankRange, cap: usize) -> Result<Enumerate, HarnessError> {
    ensure_supported(n, cap)?;
    let total = factorial(n);
    if range.lo > range.hi || range.hi > total {
        return Err(HarnessError::InvalidRange {
            lo: range.lo,
            hi: range.hi,
            n,
            total,
        });
    }
    let current = if range.is_empty() {
        None
    } else {
        Some(unrank(n, range.lo)?.values().to_vec())
    };
    Ok(Enumerate {
        current,
        remaining: range.len(),
    })
}

/// Iterator over a rank range; the first permutation is unranked and the
/// rest follow by lexicographic successor steps.
pub struct Enumerate {
    current: Option<Vec<usize>>,
    remaining: u64,
}

impl Iterator for Enumerate {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let values = self.current.as_mut()?;
        let out = Permutation::from_trusted(values.clone());
        self.remaining -= 1;
        if self.remaining > 0 {
            let advanced = next_permutation(values);
            debug_assert!(advanced, "ranks within n! always have a successor");
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let exact = usize::try_from(self.remaining).ok();
        (exact.unwrap_or(usize::MAX), exact)
    }
}

fn next_permutation(values: &mut [usize]) -> bool {
    let n = values.len();
    let Some(pivot) = (0..n.saturating_sub(1)).rev().find(|&i| values[i] < values[i + 1]) else {
        return false;
    };
    let successor = (pivot + 1..n)
        .rev()
        .find(|&j| values[j] > values[pivot])
        .expect("pivot has a larger element to its right");
    values.swap(pivot, successor);
    values[pivot + 1..].reverse();
    true
}

/// Cuts `[0, total)` into at most `workers` contiguous non-empty blocks.
fn split_ranges(total: u64, workers: usize) -> Vec<RankRange> {
    let workers = workers.max(1) as u64;
    let base = total / workers;
    let extra = total % workers;
    let mut ranges = Vec::new();
    let mut lo = 0;
    for i in 0..workers {
        let len = base + u64::from(i < extra);
        if len == 0 {
            continue;
        }
        ranges.push(RankRange { lo, hi: lo + len });
        lo += len;
    }
    ranges
}

/// Runs `work` over the rank blocks of `[0, n!)` on one thread per block and
/// returns the results in block order.
fn scan_blocks<R, F>(n: usize, workers: usize, work: F) -> Vec<R>
where
    R: Send,
    F: Fn(RankRange) -> R + Sync,
{
    let ranges = split_ranges(factorial(n), workers);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(work).collect();
    }
    std::thread::scope(|scope| {
        let work = &work;
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| scope.spawn(move || work(range)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}

/// Which joint distribution to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyKind {
    /// `(t1, t2, t3, s17)`
    Quadruple,
    /// `(s10, s12, s17)`
    Triple,
}

impl KeyKind {
    pub fn name(self) -> &'static str {
        match self {
            KeyKind::Quadruple => "quadruple",
            KeyKind::Triple => "triple",
        }
    }

    /// Column names, without the trailing `count`.
    pub fn columns(self) -> &'static [&'static str] {
        match self {
            KeyKind::Quadruple => &["t1", "t2", "t3", "s17"],
            KeyKind::Triple => &["s10", "s12", "s17"],
        }
    }
}

impl fmt::Display for KeyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KeyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quadruple" => Ok(KeyKind::Quadruple),
            "triple" => Ok(KeyKind::Triple),
            other => Err(format!("unknown key kind `{other}` (expected quadruple or triple)")),
        }
    }
}

/// A statistic key: the first 3 or 4 slots are used depending on the kind,
/// the rest are zero.
pub type StatKey = [usize; 4];

/// Counts of permutations per statistic key; counts always sum to `n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub n: usize,
    pub key_kind: KeyKind,
    entries: BTreeMap<StatKey, u64>,
}

/// First key (in sorted order) on which two tables disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeyDifference {
    pub key: Vec<usize>,
    pub count: u64,
    pub swapped_count: u64,
}

/// Outcome of comparing a table against its swapped-key counterpart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapComparison {
    pub equal: bool,
    pub first_difference: Option<KeyDifference>,
}

/// Swap outcomes for both key kinds at one length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub n: usize,
    pub quadruple: SwapComparison,
    pub triple: SwapComparison,
}

impl EquidistributionReport {
    pub fn equal(&self) -> bool {
        self.quadruple.equal && self.triple.equal
    }
}

impl DistributionTable {
    fn key_of(p: &Permutation, kind: KeyKind) -> StatKey {
        match kind {
            KeyKind::Quadruple => {
                let q = stat_quadruple(p);
                [q.t1, q.t2, q.t3, q.s17]
            }
            KeyKind::Triple => {
                let (s10, s12) = s10_s12(p);
                let s17 = stat_quadruple(p).s17;
                [s10, s12, s17, 0]
            }
        }
    }

    /// Entries in ascending key order.
    pub fn entries(&self) -> impl Iterator<Item = (&StatKey, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, key: StatKey) -> u64 {
        self.entries.get(&key).copied().unwrap_or(0)
    }

    /// The same counts with the first two key components exchanged
    /// (`t1 ↔ t2`, or `s10 ↔ s12`).
    pub fn swapped(&self) -> DistributionTable {
        let mut entries = BTreeMap::new();
        for (&[k0, k1, k2, k3], &count) in &self.entries {
            *entries.entry([k1, k0, k2, k3]).or_insert(0) += count;
        }
        DistributionTable {
            n: self.n,
            key_kind: self.key_kind,
            entries,
        }
    }

    /// Compares as mappings, reporting the smallest differing key.
    pub fn compare(&self, other: &DistributionTable) -> SwapComparison {
        let mut keys: Vec<StatKey> = self.entries.keys().copied().collect();
        keys.extend(other.entries.keys().copied());
        keys.sort_unstable();
        keys.dedup();
        for key in keys {
            let count = self.count(key);
            let swapped_count = other.count(key);
            if count != swapped_count {
                let width = self.key_kind.columns().len();
                return SwapComparison {
                    equal: false,
                    first_difference: Some(KeyDifference {
                        key: key[..width].to_vec(),
                        count,
                        swapped_count,
                    }),
                };
            }
        }
        SwapComparison {
            equal: true,
            first_difference: None,
        }
    }
}

/// Tabulates the joint distribution of the chosen statistics over all of
/// `S_n`. Identical output for any `workers ≥ 1`.
pub fn joint_distribution(
    n: usize,
    kind: KeyKind,
    workers: usize,
) -> Result<DistributionTable, HarnessError> {
    joint_distribution_capped(n, kind, workers, DEFAULT_MAX_N)
}

/// [`joint_distribution`] with an explicit cap.
pub fn joint_distribution_capped(
    n: usize,
    kind: KeyKind,
    workers: usize,
    cap: usize,
) -> Result<DistributionTable, HarnessError> {
    ensure_supported(n, cap)?;
    let partials = scan_blocks(n, workers, |range| {
        let mut map: BTreeMap<StatKey, u64> = BTreeMap::new();
        for p in enumerate_capped(n, range, cap).expect("block ranges are valid") {
            *map.entry(DistributionTable::key_of(&p, kind)).or_insert(0) += 1;
        }
        map
    });
    let mut entries: BTreeMap<StatKey, u64> = BTreeMap::new();
    for partial in partials {
        for (key, count) in partial {
            *entries.entry(key).or_insert(0) += count;
        }
    }
    Ok(DistributionTable { n, key_kind: kind, entries })
}

/// Builds both joint distributions over `S_n` and compares each against its
/// swapped-key counterpart.
pub fn check_equidistribution(n: usize, workers: usize) -> Result<EquidistributionReport, HarnessError> {
    let quadruple = joint_distribution(n, KeyKind::Quadruple, workers)?;
    let triple = joint_distribution(n, KeyKind::Triple, workers)?;
    Ok(EquidistributionReport {
        n,
        quadruple: quadruple.compare(&quadruple.swapped()),
        triple: triple.compare(&triple.swapped()),
    })
}

/// A per-permutation property of the involution to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Applying the involution twice returns the original permutation.
    Involution,
    /// `(t1, t2, t3, s17)` of the image is the input's quadruple with the
    /// first two entries exchanged.
    Swap,
    /// `(s10, s12, s17)` of the image is the input's triple with the first
    /// two entries exchanged, all counted by direct scans.
    CorollarySwap,
    /// Gap profiles of the pair satisfy the length-parity relations:
    /// `a = b′ − 1, b = a′ + 1` for odd `n`, `a = b′, b = a′` for even `n`,
    /// and `c = c′, d = d′, e = e′` always.
    ParityRelations,
    /// `s17` of the image equals `s17` of the input.
    S17Preserved,
    /// Every trace row satisfies the parity relation for its level, and each
    /// row's image follows from the previous row's by one mirrored insertion.
    TraceConsistency,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Involution,
        Check::Swap,
        Check::CorollarySwap,
        Check::ParityRelations,
        Check::S17Preserved,
        Check::TraceConsistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Involution => "involution",
            Check::Swap => "swap",
            Check::CorollarySwap => "corollary_swap",
            Check::ParityRelations => "parity_relations",
            Check::S17Preserved => "s17_preserved",
            Check::TraceConsistency => "trace_consistency",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One failed check on one permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(skip)]
    pub rank: u64,
    pub permutation: String,
    pub check: Check,
    pub expected: String,
    pub actual: String,
}

/// Outcome of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub checked: u64,
    pub checks: Vec<Check>,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
    pub workers: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn canonical_checks(checks: &[Check]) -> Vec<Check> {
    let mut checks = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();
    checks
}

fn push_violation(
    out: &mut Vec<Violation>,
    rank: u64,
    p: &Permutation,
    check: Check,
    expected: String,
    actual: String,
) {
    if out.len() < MAX_VIOLATIONS {
        out.push(Violation {
            rank,
            permutation: p.to_string(),
            check,
            expected,
            actual,
        });
    }
}

fn parity_relations_hold(n: usize, g: &crate::stats::GapProfile, gi: &crate::stats::GapProfile) -> bool {
    let ab = if n % 2 == 1 {
        g.a + 1 == gi.b && g.b == gi.a + 1
    } else {
        g.a == gi.b && g.b == gi.a
    };
    ab && g.c == gi.c && g.d == gi.d && g.e == gi.e
}

fn run_checks(p: &Permutation, rank: u64, checks: &[Check], out: &mut Vec<Violation>) {
    let n = p.len();
    let image = involution(p);
    for &check in checks {
        match check {
            Check::Involution => {
                let back = involution(&image);
                if back != *p {
                    push_violation(out, rank, p, check, p.to_string(), back.to_string());
                }
            }
            Check::Swap => {
                let (s, si) = (stat_quadruple(p), stat_quadruple(&image));
                if (s.t1, s.t2, s.t3, s.s17) != (si.t2, si.t1, si.t3, si.s17) {
                    push_violation(
                        out,
                        rank,
                        p,
                        check,
                        format!("image quadruple ({},{},{},{})", s.t2, s.t1, s.t3, s.s17),
                        format!("({},{},{},{})", si.t1, si.t2, si.t3, si.s17),
                    );
                }
            }
            Check::CorollarySwap => {
                let (s10, s12) = s10_s12(p);
                let (i10, i12) = s10_s12(&image);
                let s17 = stat_quadruple(p).s17;
                let i17 = stat_quadruple(&image).s17;
                if (s10, s12, s17) != (i12, i10, i17) {
                    push_violation(
                        out,
                        rank,
                        p,
                        check,
                        format!("image triple ({s12},{s10},{s17})"),
                        format!("({i10},{i12},{i17})"),
                    );
                }
            }
            Check::ParityRelations => {
                let (g, gi) = (gap_profile(p), gap_profile(&image));
                if !parity_relations_hold(n, &g, &gi) {
                    push_violation(
                        out,
                        rank,
                        p,
                        check,
                        format!("profiles {:?} / {:?} related for odd n by a=b'-1, b=a'+1, else a=b', b=a'; c,d,e equal", g.as_tuple(), gi.as_tuple()),
                        "relation failed".to_string(),
                    );
                }
            }
            Check::S17Preserved => {
                let (s, si) = (stat_quadruple(p).s17, stat_quadruple(&image).s17);
                if s != si {
                    push_violation(out, rank, p, check, format!("s17 {s}"), format!("s17 {si}"));
                }
            }
            Check::TraceConsistency => {
                check_trace_consistency(p, rank, out);
            }
        }
    }
}

/// Re-derives each trace row from the previous one: locates the inserted
/// value, classifies its gap, and applies the mirrored insertion to the
/// previous image. Also enforces the per-level parity relations.
fn check_trace_consistency(p: &Permutation, rank: u64, out: &mut Vec<Violation>) {
    let rows = trace(p);
    for row in &rows {
        if !parity_relations_hold(row.level, &row.profile, &row.image_profile) {
            push_violation(
                out,
                rank,
                p,
                Check::TraceConsistency,
                format!("level {} profiles satisfy the parity relations", row.level),
                format!("{:?} / {:?}", row.profile.as_tuple(), row.image_profile.as_tuple()),
            );
            return;
        }
    }
    for pair in rows.windows(2) {
        let (prev, row) = (&pair[0], &pair[1]);
        let m = row.level;
        let inserted_at = row
            .p
            .values()
            .iter()
            .position(|&v| v == m)
            .expect("level value present in its prefix");
        let gap = if m % 2 == 1 {
            let g = classify_gaps_odd_phase(&prev.p)[inserted_at];
            let mirrored = match g.class {
                OddPhaseClass::A => OddPhaseClass::B,
                OddPhaseClass::B => OddPhaseClass::A,
                other => other,
            };
            find_gap(&prev.image, PhaseClass::Odd(mirrored), g.rank)
        } else {
            let g = classify_gaps_even_phase(&prev.p)[inserted_at];
            let mirrored = match g.class {
                EvenPhaseClass::T1 => EvenPhaseClass::T2,
                EvenPhaseClass::T2 => EvenPhaseClass::T1,
                other => other,
            };
            find_gap(&prev.image, PhaseClass::Even(mirrored), g.rank)
        };
        let rebuilt = match gap {
            Ok(gap) => prev.image.insert_max(gap).expect("gap within range"),
            Err(e) => {
                push_violation(
                    out,
                    rank,
                    p,
                    Check::TraceConsistency,
                    format!("level {m} mirrored gap exists in the image"),
                    e.to_string(),
                );
                return;
            }
        };
        if rebuilt != row.image {
            push_violation(
                out,
                rank,
                p,
                Check::TraceConsistency,
                format!("level {m} image {}", row.image),
                rebuilt.to_string(),
            );
            return;
        }
    }
}

/// Runs the chosen checks over every permutation of `{1, …, n}`.
///
/// Violations are capped at [`MAX_VIOLATIONS`] but counting continues, and
/// the report is identical for any `workers ≥ 1` apart from the recorded
/// `workers` and `elapsed_ms` fields.
pub fn verify(n: usize, checks: &[Check], workers: usize) -> Result<VerificationReport, HarnessError> {
    verify_capped(n, checks, workers, DEFAULT_MAX_N)
}

/// [`verify`] with an explicit cap.
pub fn verify_capped(
    n: usize,
    checks: &[Check],
    workers: usize,
    cap: usize,
) -> Result<VerificationReport, HarnessError> {
    ensure_supported(n, cap)?;
    let checks = canonical_checks(checks);
    let start = Instant::now();
    let partials = scan_blocks(n, workers, |range| {
        let mut violations = Vec::new();
        let mut checked = 0u64;
        for (offset, p) in enumerate_capped(n, range, cap)
            .expect("block ranges are valid")
            .enumerate()
        {
            run_checks(&p, range.lo + offset as u64, &checks, &mut violations);
            checked += 1;
        }
        (checked, violations)
    });
    let mut checked = 0;
    let mut violations = Vec::new();
    for (part_checked, part_violations) in partials {
        checked += part_checked;
        violations.extend(part_violations);
    }
    violations.truncate(MAX_VIOLATIONS);
    Ok(VerificationReport {
        n,
        checked,
        checks,
        violations,
        elapsed_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
        workers: workers.max(1),
    })
}

/// Runs the chosen checks on `samples` permutations of `{1, …, n}` drawn
/// uniformly (by rank) with a seeded generator, so a given seed always
/// produces the same report. `n` may go up to [`HARD_MAX_N`] since nothing
/// is enumerated.
pub fn spot_check(
    n: usize,
    samples: u64,
    seed: u64,
    checks: &[Check],
) -> Result<VerificationReport, HarnessError> {
    ensure_supported(n, HARD_MAX_N)?;
    let checks = canonical_checks(checks);
    let start = Instant::now();
    let total = factorial(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = Vec::new();
    for _ in 0..samples {
        let r = rng.gen_range(0..total);
        let p = unrank(n, r)?;
        run_checks(&p, r, &checks, &mut violations);
    }
    violations.truncate(MAX_VIOLATIONS);
    Ok(VerificationReport {
        n,
        checked: samples,
        checks,
        violations,
        elapsed_ms: u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX),
        workers: 1,
    })
}
