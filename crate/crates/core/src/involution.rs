//! An involution on permutations of each length that exchanges `t1` with
//! `t2` (equivalently `s10` with `s12`) while preserving `t3` and `s17`.
//!
//! Every permutation of `{1, …, n}` is built from `⟨1⟩` by inserting
//! `2, 3, …, n` in turn, so it is determined by where each value landed:
//! not the raw gap position, but the gap's class and its left-to-right rank
//! within that class, under the scheme matching the value's parity.
//! [`decompose`] peels maxima off to recover that description as an
//! [`InsertionPlan`]; [`InsertionPlan::rebuild`] replays it.
//!
//! The involution mirrors the plan before replaying: an odd value recorded in
//! an `A` gap is re-inserted into the `B` gap of equal rank and vice versa,
//! an even value recorded in a `T1` gap goes to the equal-rank `T2` gap and
//! vice versa, and every other class is kept. Gap counts of a permutation and
//! its image line up class by class at every stage (`a = b′` after an even
//! insertion, `a = b′ − 1` after an odd one, with `c`, `d`, `e` equal
//! throughout), so each mirrored insertion is well-defined; [`rebuild`] keeps
//! the count assertions on permanently because a missing gap can only mean an
//! implementation bug.
//!
//! [`rebuild`]: InsertionPlan::rebuild

use crate::perm::{Permutation, RemovalRecord};
use crate::stats::{
    classify_gaps_even_phase, classify_gaps_odd_phase, find_gap, gap_profile, ClassifiedGap,
    EvenPhaseClass, GapProfile, OddPhaseClass, PhaseClass,
};

/// One recorded insertion: value `level` went into the gap of class `class`
/// with the given 1-based rank. `class` is an odd-phase class exactly when
/// `level` is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlannedInsertion {
    pub level: usize,
    pub class: PhaseClass,
    pub rank: usize,
}

/// Where each of the values `2, …, n` landed while the permutation was grown
/// from `⟨1⟩`, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionPlan {
    steps: Vec<PlannedInsertion>,
}

/// One stage of a side-by-side trace: the prefix permutation containing
/// `1, …, level`, its involution image, and both gap profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub level: usize,
    pub p: Permutation,
    pub profile: GapProfile,
    pub image: Permutation,
    pub image_profile: GapProfile,
}

/// Classifies the gaps of `q` under the scheme for inserting the value
/// `level` (odd phase for odd `level`).
fn classify_level(q: &Permutation, level: usize) -> Vec<ClassifiedGap<PhaseClass>> {
    if level % 2 == 1 {
        classify_gaps_odd_phase(q)
            .into_iter()
            .map(|g| ClassifiedGap {
                position: g.position,
                class: PhaseClass::Odd(g.class),
                rank: g.rank,
            })
            .collect()
    } else {
        classify_gaps_even_phase(q)
            .into_iter()
            .map(|g| ClassifiedGap {
                position: g.position,
                class: PhaseClass::Even(g.class),
                rank: g.rank,
            })
            .collect()
    }
}

fn mirror_class(class: PhaseClass) -> PhaseClass {
    match class {
        PhaseClass::Odd(OddPhaseClass::A) => PhaseClass::Odd(OddPhaseClass::B),
        PhaseClass::Odd(OddPhaseClass::B) => PhaseClass::Odd(OddPhaseClass::A),
        PhaseClass::Even(EvenPhaseClass::T1) => PhaseClass::Even(EvenPhaseClass::T2),
        PhaseClass::Even(EvenPhaseClass::T2) => PhaseClass::Even(EvenPhaseClass::T1),
        other => other,
    }
}

/// Records, for each value from `n` down to `2`, the class and rank of the
/// gap it occupies in the prefix below it.
pub fn decompose(p: &Permutation) -> InsertionPlan {
    let mut steps = Vec::with_capacity(p.len().saturating_sub(1));
    let mut cur = p.clone();
    while cur.len() >= 2 {
        let level = cur.len();
        let RemovalRecord { reduced, gap } = cur.remove_max().expect("length is at least 2");
        let found = classify_level(&reduced, level)[gap.0];
        steps.push(PlannedInsertion {
            level,
            class: found.class,
            rank: found.rank,
        });
        cur = reduced;
    }
    steps.reverse();
    InsertionPlan { steps }
}

impl InsertionPlan {
    /// The recorded insertions for values `2, …, n`, in insertion order.
    pub fn steps(&self) -> &[PlannedInsertion] {
        &self.steps
    }

    /// Length of the permutation the plan rebuilds.
    pub fn target_len(&self) -> usize {
        self.steps.len() + 1
    }

    /// The plan with `A`/`B` exchanged at odd levels and `T1`/`T2` exchanged
    /// at even levels. Mirroring twice gives the original plan back.
    pub fn mirrored(&self) -> InsertionPlan {
        InsertionPlan {
            steps: self
                .steps
                .iter()
                .map(|s| PlannedInsertion {
                    level: s.level,
                    class: mirror_class(s.class),
                    rank: s.rank,
                })
                .collect(),
        }
    }

    /// Replays the plan from `⟨1⟩`.
    ///
    /// Panics if some step names a class/rank with no matching gap; for plans
    /// produced by [`decompose`] (mirrored or not) that cannot happen unless
    /// the implementation is wrong, so the check stays on in release builds.
    pub fn rebuild(&self) -> Permutation {
        let mut q = Permutation::identity(1);
        for step in &self.steps {
            q = apply_step(&q, step);
        }
        q
    }
}

fn apply_step(q: &Permutation, step: &PlannedInsertion) -> Permutation {
    assert_eq!(
        step.level,
        q.len() + 1,
        "insertion plan level {} applied to a length-{} permutation",
        step.level,
        q.len()
    );
    let gap = find_gap(q, step.class, step.rank)
        .unwrap_or_else(|e| panic!("insertion plan violated at level {}: {e}", step.level));
    q.insert_max(gap).expect("classified gap is in range")
}

/// The image of `p` under the involution: decompose, mirror, rebuild.
///
/// ```
/// use parity_involution::{involution, stat_quadruple, Permutation};
///
/// let p = Permutation::parse("3 6 4 5 7 8 2 1").unwrap();
/// let image = involution(&p);
/// assert_eq!(image.to_string(), "7 2 6 1 4 3 8 5");
/// assert_eq!(involution(&image), p);
///
/// let (q, qi) = (stat_quadruple(&p), stat_quadruple(&image));
/// assert_eq!((q.t1, q.t2, q.t3, q.s17), (qi.t2, qi.t1, qi.t3, qi.s17));
/// ```
pub fn involution(p: &Permutation) -> Permutation {
    decompose(p).mirrored().rebuild()
}

/// The side-by-side growth of `p` and its image, one row per prefix length.
///
/// Row `m` holds the prefix of values `1, …, m` and its involution image,
/// with both gap profiles. Each row's image is recomputed from scratch via
/// [`involution`] and cross-checked against the incremental mirrored replay;
/// the replayed prefix is likewise checked against
/// [`Permutation::restrict_to_prefix`]. The redundancy is deliberate — a
/// divergence panics rather than producing a bad table.
pub fn trace(p: &Permutation) -> Vec<TraceRow> {
    let plan = decompose(p);
    let mirrored = plan.mirrored();
    let mut rows = Vec::with_capacity(p.len());

    let mut prefix = Permutation::identity(1);
    let mut image = Permutation::identity(1);
    rows.push(row(1, prefix.clone(), image.clone()));
    for (step, mirrored_step) in plan.steps().iter().zip(mirrored.steps()) {
        prefix = apply_step(&prefix, step);
        image = apply_step(&image, mirrored_step);
        assert_eq!(
            prefix,
            p.restrict_to_prefix(step.level).expect("level within range"),
            "replayed prefix diverged at level {}",
            step.level
        );
        assert_eq!(
            involution(&prefix),
            image,
            "incremental image diverged from recomputation at level {}",
            step.level
        );
        rows.push(row(step.level, prefix.clone(), image.clone()));
    }
    rows
}

fn row(level: usize, p: Permutation, image: Permutation) -> TraceRow {
    let profile = gap_profile(&p);
    let image_profile = gap_profile(&image);
    TraceRow {
        level,
        p,
        profile,
        image,
        image_profile,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats::{s10_s12, stat_quadruple};
    use crate::test_support::{all_perms, perm_strategy};
    use proptest::prelude::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn image_of(text: &str) -> String {
        involution(&p(text)).to_string()
    }

    #[test]
    fn point_images_match_worked_examples() {
        assert_eq!(image_of("3 2 1"), "2 1 3");
        assert_eq!(image_of("2 1 3"), "3 2 1");
        assert_eq!(image_of("3 6 4 5 7 8 2 1"), "7 2 6 1 4 3 8 5");
        assert_eq!(image_of("7 2 6 1 4 3 8 5"), "3 6 4 5 7 8 2 1");
        assert_eq!(image_of("1 4 3 5 6 7 2 8"), "1 6 3 4 5 7 2 8");
        assert_eq!(image_of("1 2 3 4 5 6 7 8"), "1 2 3 4 5 6 7 8");
        assert_eq!(image_of("1"), "1");
    }

    #[test]
    fn decompose_records_class_and_rank_per_level() {
        use EvenPhaseClass::*;
        use OddPhaseClass::*;

        let plan = decompose(&p("3 6 4 5 7 8 2 1"));
        let summary: Vec<(usize, PhaseClass, usize)> = plan
            .steps()
            .iter()
            .map(|s| (s.level, s.class, s.rank))
            .collect();
        assert_eq!(
            summary,
            vec![
                (2, First.into(), 1),
                (3, A.into(), 1),
                (4, T1.into(), 1),
                (5, A.into(), 1),
                (6, Other.into(), 1),
                (7, B.into(), 1),
                (8, T1.into(), 1),
            ]
        );

        let plan = decompose(&p("1 4 3 5 6 7 2 8"));
        let summary: Vec<(usize, PhaseClass, usize)> = plan
            .steps()
            .iter()
            .map(|s| (s.level, s.class, s.rank))
            .collect();
        assert_eq!(
            summary,
            vec![
                (2, Last.into(), 1),
                (3, D.into(), 1),
                (4, T2.into(), 1),
                (5, B.into(), 1),
                (6, T1.into(), 1),
                (7, A.into(), 1),
                (8, Last.into(), 1),
            ]
        );

        assert!(decompose(&p("1")).steps().is_empty());
    }

    #[test]
    fn plan_phase_parity_follows_level() {
        for q in all_perms(6) {
            for step in decompose(&q).steps() {
                match step.class {
                    PhaseClass::Odd(_) => assert!(step.level % 2 == 1),
                    PhaseClass::Even(_) => assert!(step.level % 2 == 0),
                }
            }
        }
    }

    #[test]
    fn trace_rows_match_worked_tables() {
        let rows = trace(&p("3 6 4 5 7 8 2 1"));
        assert_eq!(rows.len(), 8);
        let r5 = &rows[4];
        assert_eq!(r5.level, 5);
        assert_eq!(r5.p, p("3 4 5 2 1"));
        assert_eq!(r5.profile.as_tuple(), (0, 2, 3, 1, 0));
        assert_eq!(r5.image, p("2 1 4 3 5"));
        assert_eq!(r5.image_profile.as_tuple(), (1, 1, 3, 1, 0));

        let rows = trace(&p("1 4 3 5 6 7 2 8"));
        let r6 = &rows[5];
        assert_eq!(r6.p, p("1 4 3 5 6 2"));
        assert_eq!(r6.profile.as_tuple(), (1, 0, 3, 2, 1));
        assert_eq!(r6.image, p("1 6 3 4 5 2"));
        assert_eq!(r6.image_profile.as_tuple(), (0, 1, 3, 2, 1));

        let rows = trace(&p("1"));
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].p, p("1"));
        assert_eq!(rows[0].image, p("1"));
        assert_eq!(rows[0].profile.as_tuple(), (0, 1, 1, 0, 0));
    }

    // Inserting an even value n + 1 changes the gap profile by a fixed delta
    // determined by the class of the chosen gap (and, for the back gap, the
    // parity of the last entry).
    #[test]
    fn even_insertion_profile_deltas_follow_gap_class() {
        use EvenPhaseClass::*;

        for n in [1usize, 3, 5, 7] {
            for q in all_perms(n) {
                let before = gap_profile(&q);
                for gap in classify_gaps_even_phase(&q) {
                    let after = gap_profile(&q.insert_max(gap.position).unwrap());
                    let delta = (
                        after.a as i64 - before.a as i64,
                        after.b as i64 - before.b as i64,
                        after.c as i64 - before.c as i64,
                        after.d as i64 - before.d as i64,
                        after.e as i64 - before.e as i64,
                    );
                    let expected = match gap.class {
                        T1 => (1, -1, 0, 1, 0),
                        T2 => (0, 0, 0, 1, 0),
                        T3 => (0, -1, 1, 1, 0),
                        First | Other => (1, 0, 0, 0, 0),
                        Last => {
                            if q.values()[n - 1] % 2 == 1 {
                                (0, -1, 0, 1, 1)
                            } else {
                                (1, 0, 0, 0, 0)
                            }
                        }
                    };
                    assert_eq!(delta, expected, "{q} + gap {}", gap.position);
                }
            }
        }
    }

    #[test]
    fn involution_checks_out_exhaustively_to_n7() {
        for n in 1..=7 {
            for q in all_perms(n) {
                let image = involution(&q);
                assert_eq!(involution(&image), q, "{q}");

                let (s, si) = (stat_quadruple(&q), stat_quadruple(&image));
                assert_eq!((s.t1, s.t2, s.t3, s.s17), (si.t2, si.t1, si.t3, si.s17), "{q}");

                let ((s10, s12), (i10, i12)) = (s10_s12(&q), s10_s12(&image));
                assert_eq!((s10, s12), (i12, i10), "{q}");

                let (g, gi) = (gap_profile(&q), gap_profile(&image));
                if n % 2 == 1 {
                    assert_eq!(g.a + 1, gi.b, "{q}");
                    assert_eq!(g.b, gi.a + 1, "{q}");
                } else {
                    assert_eq!(g.a, gi.b, "{q}");
                    assert_eq!(g.b, gi.a, "{q}");
                }
                assert_eq!((g.c, g.d, g.e), (gi.c, gi.d, gi.e), "{q}");
            }
        }
    }

    proptest! {
        #[test]
        fn involution_is_self_inverse(q in perm_strategy(32)) {
            prop_assert_eq!(involution(&involution(&q)), q);
        }

        #[test]
        fn involution_swaps_t1_t2_keeps_t3_s17(q in perm_strategy(32)) {
            let image = involution(&q);
            let (s, si) = (stat_quadruple(&q), stat_quadruple(&image));
            prop_assert_eq!((s.t1, s.t2, s.t3, s.s17), (si.t2, si.t1, si.t3, si.s17));
        }

        #[test]
        fn profiles_of_partners_satisfy_length_parity_relations(q in perm_strategy(32)) {
            let image = involution(&q);
            let (g, gi) = (gap_profile(&q), gap_profile(&image));
            if q.len() % 2 == 1 {
                prop_assert_eq!(g.a + 1, gi.b);
                prop_assert_eq!(g.b, gi.a + 1);
            } else {
                prop_assert_eq!(g.a, gi.b);
                prop_assert_eq!(g.b, gi.a);
            }
            prop_assert_eq!((g.c, g.d, g.e), (gi.c, gi.d, gi.e));
        }

        #[test]
        fn plan_round_trips_and_mirrors(q in perm_strategy(32)) {
            let plan = decompose(&q);
            prop_assert_eq!(plan.rebuild(), q.clone());
            prop_assert_eq!(plan.mirrored().mirrored(), plan.clone());
            prop_assert_eq!(plan.target_len(), q.len());
        }

        #[test]
        fn trace_last_row_is_the_full_pair(q in perm_strategy(24)) {
            let rows = trace(&q);
            prop_assert_eq!(rows.len(), q.len());
            let last = rows.last().unwrap();
            prop_assert_eq!(&last.p, &q);
            prop_assert_eq!(&last.image, &involution(&q));
        }
    }

    #[test]
    fn rebuild_panics_on_impossible_plan() {
        let step = PlannedInsertion {
            level: 2,
            class: PhaseClass::Even(EvenPhaseClass::T1),
            rank: 1,
        };
        let plan = InsertionPlan { steps: vec![step] };
        let result = std::panic::catch_unwind(|| plan.rebuild());
        assert!(result.is_err());
    }
}
