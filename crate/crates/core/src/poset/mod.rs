//! Bounded graded posets stored as rank levels plus cover relations.
//!
//! An element is identified by `(rank, index)` where `index` counts from zero
//! within its level. Only covers between consecutive ranks are stored; the full
//! order is recovered by reachability (see [`Order`]), which is exact because
//! in a graded poset every relation lies on a saturated chain.

mod eulerian;
mod order;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{invalid, Error, Result};

pub use eulerian::{EulerianReport, Violation};
pub use order::Order;

/// Unvalidated poset data, in the JSON interchange layout.
///
/// `covers[r]` lists pairs `(i, j)` meaning element `i` of rank `r` is covered
/// by element `j` of rank `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawPoset {
    pub rank: usize,
    pub level_sizes: Vec<usize>,
    pub covers: Vec<Vec<(usize, usize)>>,
}

/// A violated structural invariant reported by [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    RankTooSmall,
    LevelCount {
        expected: usize,
        found: usize,
    },
    CoverLevelCount {
        expected: usize,
        found: usize,
    },
    NoUniqueBottom {
        size: usize,
    },
    NoUniqueTop {
        size: usize,
    },
    EmptyLevel {
        rank: usize,
    },
    CoverOutOfRange {
        rank: usize,
        pair: (usize, usize),
    },
    DuplicateCover {
        rank: usize,
        pair: (usize, usize),
    },
    /// Element below the top with nothing covering it.
    MissingUpCover {
        rank: usize,
        index: usize,
    },
    /// Element above the bottom that covers nothing.
    MissingDownCover {
        rank: usize,
        index: usize,
    },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::RankTooSmall => write!(f, "rank must be at least 1"),
            Diagnostic::LevelCount { expected, found } => {
                write!(f, "expected {expected} level sizes, found {found}")
            }
            Diagnostic::CoverLevelCount { expected, found } => {
                write!(f, "expected {expected} cover levels, found {found}")
            }
            Diagnostic::NoUniqueBottom { size } => {
                write!(f, "no unique bottom: rank 0 has {size} elements")
            }
            Diagnostic::NoUniqueTop { size } => {
                write!(f, "no unique top: top rank has {size} elements")
            }
            Diagnostic::EmptyLevel { rank } => write!(f, "rank {rank} has no elements"),
            Diagnostic::CoverOutOfRange { rank, pair } => {
                write!(
                    f,
                    "cover {pair:?} between ranks {rank} and {} is out of range",
                    rank + 1
                )
            }
            Diagnostic::DuplicateCover { rank, pair } => {
                write!(f, "cover {pair:?} at rank {rank} is listed twice")
            }
            Diagnostic::MissingUpCover { rank, index } => {
                write!(
                    f,
                    "dangling element {index} at rank {rank}: nothing covers it"
                )
            }
            Diagnostic::MissingDownCover { rank, index } => {
                write!(
                    f,
                    "dangling element {index} at rank {rank}: it covers nothing"
                )
            }
        }
    }
}

/// Lists every violated invariant of `raw`; empty means valid.
pub fn validate(raw: &RawPoset) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    if raw.rank < 1 {
        diags.push(Diagnostic::RankTooSmall);
        return diags;
    }
    if raw.level_sizes.len() != raw.rank + 1 {
        diags.push(Diagnostic::LevelCount {
            expected: raw.rank + 1,
            found: raw.level_sizes.len(),
        });
        return diags;
    }
    if raw.covers.len() != raw.rank {
        diags.push(Diagnostic::CoverLevelCount {
            expected: raw.rank,
            found: raw.covers.len(),
        });
        return diags;
    }
    let sizes = &raw.level_sizes;
    if sizes[0] != 1 {
        diags.push(Diagnostic::NoUniqueBottom { size: sizes[0] });
    }
    if sizes[raw.rank] != 1 {
        diags.push(Diagnostic::NoUniqueTop {
            size: sizes[raw.rank],
        });
    }
    for (r, &s) in sizes.iter().enumerate() {
        if s == 0 && r != 0 && r != raw.rank {
            diags.push(Diagnostic::EmptyLevel { rank: r });
        }
    }
    let mut has_up: Vec<Vec<bool>> = sizes.iter().map(|&s| vec![false; s]).collect();
    let mut has_down: Vec<Vec<bool>> = sizes.iter().map(|&s| vec![false; s]).collect();
    for (r, pairs) in raw.covers.iter().enumerate() {
        let mut seen = std::collections::HashSet::new();
        for &(i, j) in pairs {
            if i >= sizes[r] || j >= sizes[r + 1] {
                diags.push(Diagnostic::CoverOutOfRange {
                    rank: r,
                    pair: (i, j),
                });
                continue;
            }
            if !seen.insert((i, j)) {
                diags.push(Diagnostic::DuplicateCover {
                    rank: r,
                    pair: (i, j),
                });
            }
            has_up[r][i] = true;
            has_down[r + 1][j] = true;
        }
    }
    for r in 0..raw.rank {
        for (index, ok) in has_up[r].iter().enumerate() {
            if !ok {
                diags.push(Diagnostic::MissingUpCover { rank: r, index });
            }
        }
    }
    for r in 1..=raw.rank {
        for (index, ok) in has_down[r].iter().enumerate() {
            if !ok {
                diags.push(Diagnostic::MissingDownCover { rank: r, index });
            }
        }
    }
    diags
}

/// A validated bounded graded poset.
///
/// Values are immutable; every operation returns a new poset. Equality is
/// element-wise (same levels and same covers), not isomorphism.
#[derive(Clone, PartialEq, Eq)]
pub struct RankedPoset {
    levels: Vec<usize>,
    /// `up[r][i]`: sorted indices at rank `r + 1` covering element `i` of rank `r`.
    up: Vec<Vec<Vec<u32>>>,
}

impl RankedPoset {
    pub fn from_raw(raw: &RawPoset) -> Result<Self> {
        let diags = validate(raw);
        if !diags.is_empty() {
            return Err(Error::InvalidPoset(diags));
        }
        budget::check_elements(raw.level_sizes.iter().map(|&s| s as u128).sum())?;
        Ok(Self::from_covers(raw.level_sizes.clone(), &raw.covers))
    }

    /// Builds from cover lists already known to be valid. Duplicate pairs are
    /// collapsed.
    pub(crate) fn from_covers(levels: Vec<usize>, covers: &[Vec<(usize, usize)>]) -> Self {
        let up = covers
            .iter()
            .enumerate()
            .map(|(r, pairs)| {
                let mut lists = vec![Vec::new(); levels[r]];
                for &(i, j) in pairs {
                    lists[i].push(j as u32);
                }
                for l in &mut lists {
                    l.sort_unstable();
                    l.dedup();
                }
                lists
            })
            .collect();
        let p = Self { levels, up };
        debug_assert!(validate(&p.to_raw()).is_empty());
        p
    }

    /// Canonical raw form with lexicographically sorted cover pairs.
    pub fn to_raw(&self) -> RawPoset {
        RawPoset {
            rank: self.rank(),
            level_sizes: self.levels.clone(),
            covers: (0..self.rank()).map(|r| self.covers(r)).collect(),
        }
    }

    /// The poset rank `n + 1`; proper ranks are `1..=n`.
    pub fn rank(&self) -> usize {
        self.levels.len() - 1
    }

    /// Number of proper ranks, `n = rank - 1`.
    pub fn n(&self) -> usize {
        self.rank() - 1
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.levels
    }

    pub fn level_size(&self, r: usize) -> usize {
        self.levels[r]
    }

    pub fn element_count(&self) -> usize {
        self.levels.iter().sum()
    }

    /// Elements of rank `r + 1` covering element `i` of rank `r`.
    pub fn up_covers(&self, r: usize, i: usize) -> &[u32] {
        &self.up[r][i]
    }

    /// Sorted cover pairs between ranks `r` and `r + 1`.
    pub fn covers(&self, r: usize) -> Vec<(usize, usize)> {
        self.up[r]
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j as usize)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().flatten().map(Vec::len).sum()
    }

    /// The order-reversed poset: rank `r` becomes rank `rank - r` and covers
    /// are transposed. Indices within a level are kept.
    pub fn dual(&self) -> RankedPoset {
        let rank = self.rank();
        let levels: Vec<usize> = self.levels.iter().rev().copied().collect();
        let covers: Vec<Vec<(usize, usize)>> = (0..rank)
            .map(|r| {
                // dual rank r -> r+1 corresponds to original rank (rank-r-1) -> (rank-r)
                self.covers(rank - r - 1)
                    .into_iter()
                    .map(|(i, j)| (j, i))
                    .collect()
            })
            .collect();
        RankedPoset::from_covers(levels, &covers)
    }

    /// Comparability between ranks `r1 ≤ r2`: entry `(i, j)` is set iff element
    /// `i` of rank `r1` lies below element `j` of rank `r2`.
    pub fn comparability(&self, r1: usize, r2: usize) -> Result<crate::bits::BitMatrix> {
        if r1 > r2 || r2 > self.rank() {
            return Err(invalid(format!(
                "ranks ({r1}, {r2}) must satisfy 0 <= r1 <= r2 <= {}",
                self.rank()
            )));
        }
        let mut m = crate::bits::BitMatrix::identity(self.levels[r1]);
        for r in r1..r2 {
            m = m.product(&self.cover_matrix(r));
        }
        Ok(m)
    }

    pub(crate) fn cover_matrix(&self, r: usize) -> crate::bits::BitMatrix {
        let mut m = crate::bits::BitMatrix::zeros(self.levels[r], self.levels[r + 1]);
        for (i, js) in self.up[r].iter().enumerate() {
            for &j in js {
                m.set(i, j as usize);
            }
        }
        m
    }

    /// All comparability matrices at once.
    pub fn order(&self) -> Order {
        Order::new(self)
    }

    /// Number of saturated chains from bottom to top, i.e. `f_[1,n]`.
    pub fn count_maximal_chains(&self) -> BigUint {
        let mut counts = vec![BigUint::one()];
        for r in 0..self.rank() {
            let mut next = vec![BigUint::zero(); self.levels[r + 1]];
            for (i, js) in self.up[r].iter().enumerate() {
                for &j in js {
                    next[j as usize] += &counts[i];
                }
            }
            counts = next;
        }
        counts.pop().unwrap_or_default()
    }

    /// Exhaustive interval parity check; see [`EulerianReport`].
    pub fn is_eulerian(&self) -> EulerianReport {
        eulerian::check(self)
    }
}

impl fmt::Debug for RankedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RankedPoset")
            .field("level_sizes", &self.levels)
            .field("covers", &self.cover_count())
            .finish()
    }
}

impl Serialize for RankedPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_raw().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankedPoset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPoset::deserialize(d)?;
        RankedPoset::from_raw(&raw).map_err(serde::de::Error::custom)
    }
}

/// The chain with one element at each rank `0..=rank`.
pub fn chain(rank: usize) -> Result<RankedPoset> {
    if rank < 1 {
        return Err(invalid("chain rank must be at least 1"));
    }
    budget::check_elements(rank as u128 + 1)?;
    let levels = vec![1; rank + 1];
    let covers = vec![vec![(0, 0)]; rank];
    Ok(RankedPoset::from_covers(levels, &covers))
}

/// The lattice of subsets of a `k`-element set, of rank `k`.
///
/// Rank-`r` elements are the `r`-subsets, indexed in increasing order of their
/// bitmask.
pub fn boolean(k: usize) -> Result<RankedPoset> {
    if k < 1 {
        return Err(invalid("boolean algebra needs k >= 1"));
    }
    if k >= 100 {
        return Err(Error::ResourceLimit {
            what: "poset elements",
            requested: u128::MAX,
            limit: budget::max_elements() as u128,
        });
    }
    budget::check_elements(1u128 << k)?;
    let mut by_rank: Vec<Vec<u64>> = vec![Vec::new(); k + 1];
    for mask in 0..1u64 << k {
        by_rank[mask.count_ones() as usize].push(mask);
    }
    let index: Vec<HashMap<u64, usize>> = by_rank
        .iter()
        .map(|ms| ms.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let covers: Vec<Vec<(usize, usize)>> = (0..k)
        .map(|r| {
            let mut pairs = Vec::new();
            for (i, &m) in by_rank[r].iter().enumerate() {
                for e in 0..k {
                    if m >> e & 1 == 0 {
                        pairs.push((i, index[r + 1][&(m | 1 << e)]));
                    }
                }
            }
            pairs
        })
        .collect();
    let levels = by_rank.iter().map(Vec::len).collect();
    Ok(RankedPoset::from_covers(levels, &covers))
}
