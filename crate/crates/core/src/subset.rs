//! Finite subsets of `{0, 1, …, 63}` packed into a machine word.
//!
//! The same type indexes variables of a polynomial ring, coordinates of
//! `Q^m`, and members of a family of subspaces. Elements are 0-based; the
//! JSON layer converts to and from the 1-based lists users write.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can describe.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, …, 63}`.
///
/// Ordering is lexicographic on the ascending element lists, so `{0} <
/// {0,1} < {1}`. This is the order used whenever a collection of subsets is
/// put in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_ELEMENTS, "subset element {i} out of range");
        Subset(1 << i)
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set of size {n} too large");
        if n == MAX_ELEMENTS {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    /// Build from 1-based indices, each of which must lie in `1..=n`.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self> {
        let mut s = Subset::EMPTY;
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::input(format!("index {i} outside 1..={n}")));
            }
            if s.contains(i - 1) {
                return Err(Error::input(format!("index {i} repeated")));
            }
            s = s.with(i - 1);
        }
        Ok(s)
    }

    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | Subset::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !Subset::singleton(i).0)
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All nonempty subsets of `{0, …, n-1}` in increasing bit order.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = Subset> {
        assert!(n < MAX_ELEMENTS, "cannot enumerate subsets of a {n}-element set");
        (1u64..(1u64 << n)).map(Subset)
    }

    /// Image under a map of elements, `perm[i]` being the image of `i`.
    pub fn map(self, perm: &[usize]) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, i| acc.with(perm[i]))
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for Subset {
    /// 1-based, matching the JSON formats: `{1,3}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// True when no member is contained in another (duplicates count as
/// containment).
pub fn is_antichain(sets: &[Subset]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset(*b))
    })
}

/// Inclusion-minimal members of `sets`, deduplicated and sorted.
pub fn minimal_elements(sets: impl IntoIterator<Item = Subset>) -> Vec<Subset> {
    let mut sets: Vec<Subset> = sets.into_iter().collect();
    // Ascending cardinality lets each set be checked only against kept ones.
    sets.sort_by_key(|s| (s.len(), *s));
    sets.dedup();
    let mut kept: Vec<Subset> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// `C(n, k)`, or `None` if it does not fit in a `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        v.iter().copied().collect()
    }

    #[test]
    fn order_is_lexicographic_on_sorted_elements() {
        let mut v = vec![s(&[1]), s(&[0, 1]), s(&[0]), s(&[0, 2])];
        v.sort();
        assert_eq!(v, vec![s(&[0]), s(&[0, 1]), s(&[0, 2]), s(&[1])]);
    }

    #[test]
    fn one_based_round_trip_and_errors() {
        let a = Subset::from_one_based(&[3, 1], 4).unwrap();
        assert_eq!(a.to_one_based(), vec![1, 3]);
        assert!(Subset::from_one_based(&[0], 4).is_err());
        assert!(Subset::from_one_based(&[5], 4).is_err());
        assert!(Subset::from_one_based(&[2, 2], 4).is_err());
        assert_eq!(a.to_string(), "{1,3}");
    }

    #[test]
    fn minimal_elements_drops_supersets_and_duplicates() {
        let m = minimal_elements([s(&[0, 1]), s(&[0]), s(&[1, 2]), s(&[0]), s(&[1, 2, 3])]);
        assert_eq!(m, vec![s(&[0]), s(&[1, 2])]);
        assert!(is_antichain(&m));
        assert!(!is_antichain(&[s(&[0]), s(&[0])]));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), Some(6));
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(60, 30), Some(118264581564861424));
    }

    #[test]
    fn iteration_min_max() {
        let a = s(&[5, 2, 9]);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![2, 5, 9]);
        assert_eq!(a.min(), Some(2));
        assert_eq!(a.max(), Some(9));
        assert_eq!(Subset::EMPTY.max(), None);
        assert_eq!(a.map(&[0, 0, 7, 0, 0, 3, 0, 0, 0, 1]), s(&[1, 3, 7]));
    }
}
