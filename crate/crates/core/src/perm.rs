//! One-line permutations of `{1, …, n}` and the insertion-gap operations used
//! to grow and shrink them one value at a time.
//!
//! A permutation of length `n` has `n + 1` insertion gaps: gap `0` sits before
//! the first entry, gap `i` between entries `i` and `i + 1`, and gap `n` after
//! the last entry. [`Permutation::insert_max`] places the next value `n + 1`
//! into a chosen gap, [`Permutation::remove_max`] is the inverse step, and
//! [`Permutation::restrict_to_prefix`] jumps straight to the intermediate
//! stage containing the values `1, …, m`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A permutation of `{1, …, n}` in one-line notation, `n ≥ 1`.
///
/// Values are 1-based. The canonical text form is space-separated decimal
/// values; [`fmt::Display`] produces it and [`Permutation::parse`] accepts it
/// along with comma-separated and compact-digit forms.
///
/// ```
/// use parity_involution::Permutation;
///
/// let p: Permutation = "3 6 4 5 7 8 2 1".parse().unwrap();
/// assert_eq!(p.len(), 8);
/// assert_eq!(p.to_string(), "3 6 4 5 7 8 2 1");
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

/// An insertion position in a permutation of length `n`: `0` lies before the
/// first entry, `i` between entries `i` and `i + 1`, and `n` after the last
/// entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GapIndex(pub usize);

/// Result of deleting the maximum entry: the shortened permutation together
/// with the gap the maximum occupied. Re-inserting the maximum at `gap`
/// restores the original permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalRecord {
    pub reduced: Permutation,
    pub gap: GapIndex,
}

/// Rejected permutation text or value list.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    EmptyInput,
    #[error("malformed token `{token}`")]
    MalformedToken { token: String },
    #[error("duplicate value {value}")]
    DuplicateValue { value: usize },
    #[error("value {value} out of range 1..={len}")]
    ValueOutOfRange { value: usize, len: usize },
    #[error("compact form `{text}` has more than 9 digits and is ambiguous; separate values with spaces")]
    AmbiguousCompact { text: String },
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("gap {gap} out of range 0..={len}")]
pub struct GapOutOfRange {
    pub gap: usize,
    pub len: usize,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("cannot remove the maximum of a length-1 permutation")]
pub struct SingletonRemoval;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("prefix bound {m} out of range 1..={len}")]
pub struct PrefixOutOfRange {
    pub m: usize,
    pub len: usize,
}

impl Permutation {
    /// Validates that `values` is a permutation of `{1, …, n}` with `n ≥ 1`.
    pub fn new(values: Vec<usize>) -> Result<Self, ParseError> {
        if values.is_empty() {
            return Err(ParseError::EmptyInput);
        }
        let len = values.len();
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v > len {
                return Err(ParseError::ValueOutOfRange { value: v, len });
            }
            if seen[v] {
                return Err(ParseError::DuplicateValue { value: v });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    /// Internal constructor for values already known to form a permutation.
    pub(crate) fn from_trusted(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    /// The identity permutation `1 2 … n`. Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations have length at least 1");
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Parses a permutation from text.
    ///
    /// Accepted forms:
    /// * whitespace-separated values: `"3 6 4 5 7 8 2 1"`
    /// * comma-separated values: `"3,6,4,5,7,8,2,1"` (whitespace around commas is fine)
    /// * a compact digit string: `"36457821"`, only unambiguous for `n ≤ 9`
    ///
    /// ```
    /// use parity_involution::Permutation;
    ///
    /// let a = Permutation::parse("2,7,1,6,5,3,4").unwrap();
    /// let b = Permutation::parse("2716534").unwrap();
    /// assert_eq!(a, b);
    /// ```
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(ParseError::EmptyInput);
        }
        if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            let mut values = Vec::new();
            for token in trimmed.split(|c: char| c.is_whitespace() || c == ',') {
                if token.is_empty() {
                    continue;
                }
                let v = token.parse::<usize>().map_err(|_| ParseError::MalformedToken {
                    token: token.to_string(),
                })?;
                values.push(v);
            }
            return Permutation::new(values);
        }
        if !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseError::MalformedToken {
                token: trimmed.to_string(),
            });
        }
        // A lone digit run: one value if it is a single digit, otherwise the
        // compact one-digit-per-value form, which stops being readable past 9.
        if trimmed.len() == 1 {
            let v = trimmed.parse::<usize>().expect("single ascii digit");
            return Permutation::new(vec![v]);
        }
        if trimmed.len() > 9 {
            return Err(ParseError::AmbiguousCompact {
                text: trimmed.to_string(),
            });
        }
        let values = trimmed.bytes().map(|b| (b - b'0') as usize).collect();
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; permutations have length at least 1.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Inserts the value `n + 1` into gap `gap`, producing a permutation of
    /// length `n + 1`.
    ///
    /// ```
    /// use parity_involution::{GapIndex, Permutation};
    ///
    /// let p = Permutation::parse("2 6 1 4 3 5").unwrap();
    /// assert_eq!(p.insert_max(GapIndex(0)).unwrap().to_string(), "7 2 6 1 4 3 5");
    /// ```
    pub fn insert_max(&self, gap: GapIndex) -> Result<Permutation, GapOutOfRange> {
        let n = self.len();
        if gap.0 > n {
            return Err(GapOutOfRange { gap: gap.0, len: n });
        }
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.values[..gap.0]);
        values.push(n + 1);
        values.extend_from_slice(&self.values[gap.0..]);
        Ok(Permutation { values })
    }

    /// Deletes the maximum entry, reporting which gap it occupied.
    pub fn remove_max(&self) -> Result<RemovalRecord, SingletonRemoval> {
        let n = self.len();
        if n < 2 {
            return Err(SingletonRemoval);
        }
        let pos = self
            .values
            .iter()
            .position(|&v| v == n)
            .expect("maximum value present");
        let mut values = Vec::with_capacity(n - 1);
        values.extend_from_slice(&self.values[..pos]);
        values.extend_from_slice(&self.values[pos + 1..]);
        Ok(RemovalRecord {
            reduced: Permutation { values },
            gap: GapIndex(pos),
        })
    }

    /// The subword of values `≤ m`, itself a permutation of `{1, …, m}`.
    /// This is the stage the permutation passed through while being built by
    /// repeated maximum insertion.
    pub fn restrict_to_prefix(&self, m: usize) -> Result<Permutation, PrefixOutOfRange> {
        if m == 0 || m > self.len() {
            return Err(PrefixOutOfRange {
                m,
                len: self.len(),
            });
        }
        let values = self.values.iter().copied().filter(|&v| v <= m).collect();
        Ok(Permutation { values })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse(s)
    }
}

impl fmt::Display for GapIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::perm_strategy;
    use proptest::prelude::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn parse_accepts_spaced_comma_and_compact_forms() {
        assert_eq!(p("3 6 4 5 7 8 2 1").values(), &[3, 6, 4, 5, 7, 8, 2, 1]);
        assert_eq!(p("3,6,4,5,7,8,2,1").values(), &[3, 6, 4, 5, 7, 8, 2, 1]);
        assert_eq!(p("36457821").values(), &[3, 6, 4, 5, 7, 8, 2, 1]);
        assert_eq!(p("1").values(), &[1]);
        assert_eq!(p("  2, 1 ").values(), &[2, 1]);
        assert_eq!(p("10 2 3 4 5 6 7 8 9 1").len(), 10);
    }

    #[test]
    fn parse_rejects_bad_input_with_named_errors() {
        assert_eq!(Permutation::parse(""), Err(ParseError::EmptyInput));
        assert_eq!(Permutation::parse("   "), Err(ParseError::EmptyInput));
        assert_eq!(
            Permutation::parse("1 x 2"),
            Err(ParseError::MalformedToken { token: "x".into() })
        );
        assert_eq!(
            Permutation::parse("1 2 2"),
            Err(ParseError::DuplicateValue { value: 2 })
        );
        assert_eq!(
            Permutation::parse("1 2 5"),
            Err(ParseError::ValueOutOfRange { value: 5, len: 3 })
        );
        assert_eq!(
            Permutation::parse("0"),
            Err(ParseError::ValueOutOfRange { value: 0, len: 1 })
        );
        assert_eq!(
            Permutation::parse("102"),
            Err(ParseError::ValueOutOfRange { value: 0, len: 3 })
        );
        assert_eq!(
            Permutation::parse("1234567891"),
            Err(ParseError::AmbiguousCompact {
                text: "1234567891".into()
            })
        );
        assert_eq!(
            Permutation::parse("-3 1 2"),
            Err(ParseError::MalformedToken { token: "-3".into() })
        );
    }

    #[test]
    fn insert_max_places_new_maximum_in_each_gap() {
        assert_eq!(
            p("2 1").insert_max(GapIndex(2)).unwrap(),
            p("2 1 3")
        );
        assert_eq!(
            p("2 6 1 4 3 5").insert_max(GapIndex(0)).unwrap(),
            p("7 2 6 1 4 3 5")
        );
        assert_eq!(p("1").insert_max(GapIndex(1)).unwrap(), p("1 2"));
        assert_eq!(
            p("2 1").insert_max(GapIndex(3)),
            Err(GapOutOfRange { gap: 3, len: 2 })
        );
    }

    #[test]
    fn remove_max_reports_the_vacated_gap() {
        assert_eq!(
            p("3 6 4 5 7 8 2 1").remove_max().unwrap(),
            RemovalRecord {
                reduced: p("3 6 4 5 7 2 1"),
                gap: GapIndex(5),
            }
        );
        assert_eq!(
            p("1 2").remove_max().unwrap(),
            RemovalRecord {
                reduced: p("1"),
                gap: GapIndex(1),
            }
        );
        assert_eq!(
            p("3 1 2").remove_max().unwrap(),
            RemovalRecord {
                reduced: p("1 2"),
                gap: GapIndex(0),
            }
        );
        assert_eq!(p("1").remove_max(), Err(SingletonRemoval));
    }

    #[test]
    fn restrict_to_prefix_keeps_small_values_in_order() {
        let q = p("3 6 4 5 7 8 2 1");
        assert_eq!(q.restrict_to_prefix(4).unwrap(), p("3 4 2 1"));
        assert_eq!(q.restrict_to_prefix(1).unwrap(), p("1"));
        assert_eq!(q.restrict_to_prefix(8).unwrap(), q);
        assert_eq!(
            p("1 4 3 5 6 7 2 8").restrict_to_prefix(4).unwrap(),
            p("1 4 3 2")
        );
        assert_eq!(
            q.restrict_to_prefix(0),
            Err(PrefixOutOfRange { m: 0, len: 8 })
        );
        assert_eq!(
            q.restrict_to_prefix(9),
            Err(PrefixOutOfRange { m: 9, len: 8 })
        );
    }

    #[test]
    fn display_is_the_canonical_text_form() {
        assert_eq!(p("3 6 4 5 7 8 2 1").to_string(), "3 6 4 5 7 8 2 1");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(Permutation::identity(12).to_string(), "1 2 3 4 5 6 7 8 9 10 11 12");
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(q in perm_strategy(40)) {
            prop_assert_eq!(Permutation::parse(&q.to_string()).unwrap(), q);
        }

        #[test]
        fn insert_then_remove_round_trip(q in perm_strategy(40), g in 0usize..=40) {
            let gap = GapIndex(g % (q.len() + 1));
            let bigger = q.insert_max(gap).unwrap();
            let record = bigger.remove_max().unwrap();
            prop_assert_eq!(record.reduced, q);
            prop_assert_eq!(record.gap, gap);
        }

        #[test]
        fn remove_then_insert_round_trip(q in perm_strategy(40)) {
            if q.len() >= 2 {
                let record = q.remove_max().unwrap();
                prop_assert_eq!(record.reduced.insert_max(record.gap).unwrap(), q);
            }
        }

        #[test]
        fn restriction_commutes_with_removal(q in perm_strategy(40), m in 1usize..40) {
            if q.len() >= 2 {
                let m = 1 + m % (q.len() - 1);   // m < len
                let via_removal = q.remove_max().unwrap().reduced.restrict_to_prefix(m).unwrap();
                prop_assert_eq!(q.restrict_to_prefix(m).unwrap(), via_removal);
            }
        }
    }
}
