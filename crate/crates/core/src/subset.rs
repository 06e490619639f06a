//! Subsets of the proper ranks `[1, n]`, stored as bitmasks.
//!
//! Rank `s` lives in bit `s - 1`, so the subsets of `[1, n]` are exactly the
//! integers `0..2^n` and table-shaped invariants (flag vectors, h-vectors,
//! L-vectors) are plain vectors indexed by mask.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};

/// Largest ambient rank count a [`RankSubset`] can represent.
pub const MAX_N: usize = 62;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RankSubset {
    n: usize,
    mask: u64,
}

impl RankSubset {
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, mask: 0 })
    }

    /// The whole range `[1, n]`.
    pub fn full(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            mask: full_mask(n),
        })
    }

    pub fn from_members<I>(n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        check_n(n)?;
        let mut mask = 0u64;
        for s in members {
            if s == 0 || s > n {
                return Err(invalid(format!("rank {s} is outside [1,{n}]")));
            }
            mask |= 1 << (s - 1);
        }
        Ok(Self { n, mask })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        check_n(n)?;
        if mask & !full_mask(n) != 0 {
            return Err(invalid(format!("mask {mask:#x} has bits outside [1,{n}]")));
        }
        Ok(Self { n, mask })
    }

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(n: usize, lo: usize, hi: usize) -> Result<Self> {
        Self::from_members(n, lo..=hi)
    }

    pub(crate) fn from_mask_unchecked(n: usize, mask: u64) -> Self {
        debug_assert!(n <= MAX_N && mask & !full_mask(n) == 0);
        Self { n, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, s: usize) -> bool {
        s >= 1 && s <= self.n && self.mask >> (s - 1) & 1 == 1
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (1..=self.n).filter(move |s| mask >> (s - 1) & 1 == 1)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_mask_unchecked(self.n, self.mask | other.mask)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_mask_unchecked(self.n, self.mask & other.mask)
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::from_mask_unchecked(self.n, self.mask & !other.mask)
    }

    /// `[1, n]` minus this set.
    pub fn complement(&self) -> Self {
        Self::from_mask_unchecked(self.n, !self.mask & full_mask(self.n))
    }

    /// Image under `s -> n + 1 - s`, the rank reversal induced by duality.
    pub fn reversed(&self) -> Self {
        Self::from_mask_unchecked(self.n, reverse_mask(self.mask, self.n))
    }

    /// Maximal runs of consecutive members, as inclusive `(lo, hi)` pairs.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = None;
        for s in 1..=self.n + 1 {
            match (self.contains(s), start) {
                (true, None) => start = Some(s),
                (false, Some(lo)) => {
                    out.push((lo, s - 1));
                    start = None;
                }
                _ => {}
            }
        }
        out
    }

    /// True iff the set is a disjoint union of intervals of even cardinality,
    /// i.e. every maximal run has even length.
    pub fn is_even(&self) -> bool {
        is_even_mask(self.mask)
    }

    /// `self ⊆_e q`: both sets are even, `self ⊆ q` and `q \ self` is even.
    pub fn evenly_contained_in(&self, q: &Self) -> bool {
        evenly_contains_mask(self.mask, q.mask)
    }

    /// All subsets of `[1, n]` in mask order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = RankSubset>> {
        check_n(n)?;
        Ok((0..1u64 << n).map(move |mask| Self::from_mask_unchecked(n, mask)))
    }
}

pub fn is_even_set(q: &RankSubset) -> bool {
    q.is_even()
}

pub fn evenly_contains(s: &RankSubset, q: &RankSubset) -> bool {
    s.evenly_contained_in(q)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn reverse_mask(mask: u64, n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    mask.reverse_bits() >> (64 - n)
}

pub(crate) fn is_even_mask(mut mask: u64) -> bool {
    while mask != 0 {
        let low = mask.trailing_zeros();
        let run = (mask >> low).trailing_ones();
        if run % 2 == 1 {
            return false;
        }
        mask &= !(((1u64 << run) - 1) << low);
    }
    true
}

pub(crate) fn evenly_contains_mask(s: u64, q: u64) -> bool {
    s & !q == 0 && is_even_mask(s) && is_even_mask(q) && is_even_mask(q & !s)
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_N {
        return Err(invalid(format!(
            "rank count {n} exceeds the supported maximum {MAX_N}"
        )));
    }
    Ok(())
}

/// Renders as a sorted list, e.g. `[1,2,5]`.
impl fmt::Display for RankSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let members: Vec<String> = self.members().map(|s| s.to_string()).collect();
        f.pad(&format!("[{}]", members.join(",")))
    }
}

/// Parses a member list such as `[1,2]`, `1,2` or `{}` (the ambient `n` is
/// supplied separately, see [`RankSubset::parse`]).
pub fn parse_members(text: &str) -> Result<Vec<usize>> {
    let trimmed = text
        .trim()
        .trim_start_matches(['[', '{'])
        .trim_end_matches([']', '}']);
    trimmed
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| usize::from_str(t).map_err(|_| invalid(format!("`{t}` is not a rank"))))
        .collect()
}

impl RankSubset {
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        Self::from_members(n, parse_members(text)?)
    }
}

impl Serialize for RankSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> RankSubset {
        RankSubset::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn even_sets() {
        assert!(set(6, &[1, 2, 3, 4]).is_even());
        assert!(!set(6, &[1, 2, 4]).is_even());
        assert!(set(6, &[]).is_even());
        assert!(set(6, &[2, 3, 5, 6]).is_even());
    }

    #[test]
    fn even_containment() {
        assert!(set(6, &[1, 2]).evenly_contained_in(&set(6, &[1, 2, 5, 6])));
        // {2,5} is left over, which is not even.
        assert!(!set(6, &[3, 4]).evenly_contained_in(&set(6, &[2, 3, 4, 5])));
        assert!(!set(6, &[1, 2]).evenly_contained_in(&set(6, &[3, 4])));
    }

    #[test]
    fn runs_and_reverse() {
        let s = set(7, &[1, 2, 4, 6, 7]);
        assert_eq!(s.runs(), vec![(1, 2), (4, 4), (6, 7)]);
        assert_eq!(s.reversed(), set(7, &[1, 2, 4, 6, 7]));
        assert_eq!(set(5, &[1]).reversed(), set(5, &[5]));
        assert_eq!(s.to_string(), "[1,2,4,6,7]");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(RankSubset::from_members(3, [4]).is_err());
        assert!(RankSubset::from_members(3, [0]).is_err());
        assert!(RankSubset::empty(63).is_err());
        assert_eq!(RankSubset::parse(4, "[1, 3]").unwrap(), set(4, &[1, 3]));
    }
}
