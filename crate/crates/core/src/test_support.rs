//! Shared generators for unit and property tests.

use itertools::Itertools;
use proptest::prelude::*;

use crate::perm::Permutation;

/// Uniformly shuffled permutations of every length in `1..=max_len`.
pub(crate) fn perm_strategy(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(Permutation::from_trusted)
}

/// All of `S_n`, generated independently of the ranked enumeration.
pub(crate) fn all_perms(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(Permutation::from_trusted)
        .collect()
}
