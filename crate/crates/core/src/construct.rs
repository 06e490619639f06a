//! Poset-building operators: interval replication, the horizontal double,
//! gluing along shared ranks, the join, interval-system posets and the two
//! composite families built by gluing.

use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{invalid, Error, Result};
use crate::poset::{chain, RankedPoset};

/// Replaces the elements with ranks in `[i, j]` by `copies` disjoint copies of
/// themselves.
///
/// Covers entering the block from rank `i - 1` and leaving it to rank `j + 1`
/// are kept by every copy. Copy `c` of element `k` at rank `r` gets index
/// `c * old_size(r) + k`.
pub fn replicate_interval(p: &RankedPoset, i: usize, j: usize, copies: u64) -> Result<RankedPoset> {
    let rank = p.rank();
    if i < 1 || i > j || j + 1 > rank {
        return Err(invalid(format!(
            "interval [{i},{j}] must satisfy 1 <= i <= j <= {}",
            rank.saturating_sub(1)
        )));
    }
    if copies < 1 {
        return Err(invalid("number of copies must be at least 1"));
    }
    let old = p.level_sizes();
    let total: u128 = old
        .iter()
        .enumerate()
        .map(|(r, &s)| {
            if (i..=j).contains(&r) {
                s as u128 * copies as u128
            } else {
                s as u128
            }
        })
        .sum();
    budget::check_elements(total)?;
    let copies = copies as usize;

    let levels: Vec<usize> = old
        .iter()
        .enumerate()
        .map(|(r, &s)| if (i..=j).contains(&r) { s * copies } else { s })
        .collect();
    let covers: Vec<Vec<(usize, usize)>> = (0..rank)
        .map(|r| {
            let pairs = p.covers(r);
            if r + 1 < i || r > j {
                pairs
            } else if r + 1 == i {
                (0..copies)
                    .flat_map(|c| pairs.iter().map(move |&(a, b)| (a, c * old[i] + b)))
                    .collect()
            } else if r == j {
                (0..copies)
                    .flat_map(|c| pairs.iter().map(move |&(a, b)| (c * old[j] + a, b)))
                    .collect()
            } else {
                (0..copies)
                    .flat_map(|c| {
                        pairs
                            .iter()
                            .map(move |&(a, b)| (c * old[r] + a, c * old[r + 1] + b))
                    })
                    .collect()
            }
        })
        .collect();
    Ok(RankedPoset::from_covers(levels, &covers))
}

/// Applies `replicate_interval(·, i, i, 2)` for `i = 1..rank` in increasing
/// order. Every Hasse edge becomes a complete bipartite `K_{2,2}`.
pub fn horizontal_double(p: &RankedPoset) -> Result<RankedPoset> {
    let mut out = p.clone();
    for i in 1..p.rank() {
        out = replicate_interval(&out, i, i, 2)?;
    }
    Ok(out)
}

/// Join `P * Q`: `P` without its top placed entirely below `Q` without its
/// bottom. The rank is `rank(P) + rank(Q) - 1`.
pub fn join(p: &RankedPoset, q: &RankedPoset) -> Result<RankedPoset> {
    let m = p.rank();
    let total = (p.element_count() + q.element_count()) as u128 - 2;
    budget::check_elements(total)?;
    let mut levels: Vec<usize> = p.level_sizes()[..m].to_vec();
    levels.extend_from_slice(&q.level_sizes()[1..]);
    let mut covers: Vec<Vec<(usize, usize)>> = (0..m - 1).map(|r| p.covers(r)).collect();
    let coatoms = p.level_size(m - 1);
    let atoms = q.level_size(1);
    covers.push(
        (0..coatoms)
            .flat_map(|a| (0..atoms).map(move |b| (a, b)))
            .collect(),
    );
    covers.extend((1..q.rank()).map(|r| q.covers(r)));
    Ok(RankedPoset::from_covers(levels, &covers))
}

/// Glues posets of equal rank by identifying, at every listed rank, the
/// elements of all parts that list it, index by index.
///
/// At each rank the shared block (if any) comes first, followed by the private
/// elements of each non-gluing part in part order. The identification is
/// rejected when two parts disagree on comparability between two ranks they
/// both glue at.
pub fn glue(parts: &[(RankedPoset, Vec<usize>)]) -> Result<RankedPoset> {
    let Some((first, _)) = parts.first() else {
        return Err(invalid("glue needs at least one part"));
    };
    let rank = first.rank();
    let mut glued: Vec<Vec<bool>> = Vec::with_capacity(parts.len());
    for (k, (p, ranks)) in parts.iter().enumerate() {
        if p.rank() != rank {
            return Err(invalid(format!(
                "part {k} has rank {}, expected {rank}",
                p.rank()
            )));
        }
        let mut flags = vec![false; rank + 1];
        for &r in ranks {
            if r > rank {
                return Err(invalid(format!("glue rank {r} of part {k} exceeds {rank}")));
            }
            flags[r] = true;
        }
        if !flags[0] || !flags[rank] {
            return Err(invalid(format!(
                "glue ranks of part {k} must contain 0 and {rank}"
            )));
        }
        glued.push(flags);
    }

    // Shared level sizes and per-part offsets of private blocks.
    let mut levels = vec![0usize; rank + 1];
    let mut offset = vec![vec![0usize; rank + 1]; parts.len()];
    for r in 0..=rank {
        let mut shared: Option<usize> = None;
        for (k, (p, _)) in parts.iter().enumerate() {
            if glued[k][r] {
                match shared {
                    None => shared = Some(p.level_size(r)),
                    Some(s) if s != p.level_size(r) => {
                        return Err(Error::GlueMismatch {
                            rank: r,
                            part: k,
                            expected: s,
                            found: p.level_size(r),
                        })
                    }
                    _ => {}
                }
            }
        }
        let mut size = shared.unwrap_or(0);
        for (k, (p, _)) in parts.iter().enumerate() {
            if !glued[k][r] {
                offset[k][r] = size;
                size += p.level_size(r);
            }
        }
        levels[r] = size;
    }
    budget::check_elements(levels.iter().map(|&s| s as u128).sum())?;

    let orders: Vec<_> = parts.iter().map(|(p, _)| p.order()).collect();
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            for r1 in 0..=rank {
                for r2 in r1 + 1..=rank {
                    let shared = glued[a][r1] && glued[b][r1] && glued[a][r2] && glued[b][r2];
                    if shared && orders[a].above(r1, r2) != orders[b].above(r1, r2) {
                        return Err(Error::GlueInconsistent {
                            first: a,
                            second: b,
                            lower: r1,
                            upper: r2,
                        });
                    }
                }
            }
        }
    }

    let covers: Vec<Vec<(usize, usize)>> = (0..rank)
        .map(|r| {
            let mut pairs: Vec<(usize, usize)> = parts
                .iter()
                .enumerate()
                .flat_map(|(k, (p, _))| {
                    let lo = offset[k][r];
                    let hi = offset[k][r + 1];
                    p.covers(r).into_iter().map(move |(a, b)| (lo + a, hi + b))
                })
                .collect();
            pairs.sort_unstable();
            pairs.dedup();
            pairs
        })
        .collect();
    Ok(RankedPoset::from_covers(levels, &covers))
}

/// A list of subintervals `[i, j]` of `[1, n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSystem {
    pub n: usize,
    pub intervals: Vec<(usize, usize)>,
}

/// Why an interval system fails to be an even interval system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemDiagnostic {
    OutOfRange {
        interval: (usize, usize),
    },
    OddLength {
        interval: (usize, usize),
    },
    Contained {
        inner: (usize, usize),
        outer: (usize, usize),
    },
    OddIntersection {
        first: (usize, usize),
        second: (usize, usize),
    },
}

impl IntervalSystem {
    pub fn new(n: usize, intervals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let sys = Self {
            n,
            intervals: intervals.into_iter().collect(),
        };
        for &(i, j) in &sys.intervals {
            if i < 1 || i > j || j > n {
                return Err(invalid(format!("interval [{i},{j}] is not inside [1,{n}]")));
            }
        }
        Ok(sys)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Empty iff the system is an even interval system: an antichain under
    /// containment of even-length intervals with pairwise even intersections.
    pub fn validate_even(&self) -> Vec<SystemDiagnostic> {
        let mut out = Vec::new();
        for &iv in &self.intervals {
            let (i, j) = iv;
            if i < 1 || i > j || j > self.n {
                out.push(SystemDiagnostic::OutOfRange { interval: iv });
            } else if (j - i + 1) % 2 == 1 {
                out.push(SystemDiagnostic::OddLength { interval: iv });
            }
        }
        for (a, &x) in self.intervals.iter().enumerate() {
            for (b, &y) in self.intervals.iter().enumerate() {
                if a == b {
                    continue;
                }
                if y.0 <= x.0 && x.1 <= y.1 && (x != y || a > b) {
                    out.push(SystemDiagnostic::Contained { inner: x, outer: y });
                }
                if a < b {
                    let lo = x.0.max(y.0);
                    let hi = x.1.min(y.1);
                    if lo <= hi && (hi - lo + 1) % 2 == 1 {
                        out.push(SystemDiagnostic::OddIntersection {
                            first: x,
                            second: y,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_even_system(&self) -> bool {
        self.validate_even().is_empty()
    }

    /// Every even interval system over `[1, n]` with at most `max_k` intervals,
    /// intervals sorted and listed in increasing order.
    pub fn enumerate_even(n: usize, max_k: usize) -> Vec<IntervalSystem> {
        let candidates: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i..=n).map(move |j| (i, j)))
            .filter(|(i, j)| (j - i + 1) % 2 == 0)
            .collect();
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn go(
            n: usize,
            max_k: usize,
            start: usize,
            cands: &[(usize, usize)],
            current: &mut Vec<(usize, usize)>,
            out: &mut Vec<IntervalSystem>,
        ) {
            out.push(IntervalSystem {
                n,
                intervals: current.clone(),
            });
            if current.len() == max_k {
                return;
            }
            for idx in start..cands.len() {
                current.push(cands[idx]);
                let sys = IntervalSystem {
                    n,
                    intervals: current.clone(),
                };
                if sys.is_even_system() {
                    go(n, max_k, idx + 1, cands, current, out);
                }
                current.pop();
            }
        }
        go(n, max_k, 0, &candidates, &mut current, &mut out);
        out
    }
}

pub fn validate_even_interval_system(sys: &IntervalSystem) -> Vec<SystemDiagnostic> {
    sys.validate_even()
}

/// `DP(n, sys, N)`: the rank `n + 1` chain, replicated `copies` times along each
/// interval in listed order, then horizontally doubled.
///
/// Non-even systems are rejected unless `allow_non_even` is set.
pub fn dp_poset(
    n: usize,
    sys: &IntervalSystem,
    copies: u64,
    allow_non_even: bool,
) -> Result<RankedPoset> {
    if sys.n != n {
        return Err(invalid(format!(
            "interval system is over [1,{}], expected [1,{n}]",
            sys.n
        )));
    }
    if !allow_non_even {
        let diags = sys.validate_even();
        if !diags.is_empty() {
            return Err(invalid(format!("not an even interval system: {diags:?}")));
        }
    }
    let mut p = chain(n + 1)?;
    for &(i, j) in &sys.intervals {
        p = replicate_interval(&p, i, j, copies)?;
    }
    horizontal_double(&p)
}

/// Applies `D^{m_1}_{I_1} D^{m_2}_{I_2} ... (C^{n+1})` right to left.
fn replicated_chain(n: usize, ops: &[((usize, usize), u64)]) -> Result<RankedPoset> {
    let mut p = chain(n + 1)?;
    for &((i, j), m) in ops.iter().rev() {
        p = replicate_interval(&p, i, j, m)?;
    }
    Ok(p)
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::ResourceLimit {
        what: "replication multiplicity",
        requested: u128::MAX,
        limit: u64::MAX as u128,
    })
}

/// The three-part glued poset for odd `n >= 7`, before doubling.
pub fn lemma2_glued(n: usize, copies: u64) -> Result<RankedPoset> {
    if n < 7 || n % 2 == 0 {
        return Err(invalid(format!("n must be odd and at least 7, got {n}")));
    }
    if copies < 1 {
        return Err(invalid("N must be at least 1"));
    }
    let next = copies + 1;
    let sq = checked_pow(copies, 2)?;
    let fourth = checked_pow(copies, 4)?;
    // Cheap size estimate before building anything.
    let estimate = (next as u128).pow(2) * n as u128
        + (next as u128).pow(2) * sq as u128 * n as u128
        + fourth as u128 * n as u128;
    budget::check_elements(estimate.min(u128::MAX / 2))?;

    let first = replicated_chain(
        n,
        &[
            ((1, 2), next),
            ((3, n - 3), next),
            ((4, n - 2), next),
            ((n - 1, n), next),
        ],
    )?;
    let second = replicated_chain(n, &[((1, n - 3), next), ((3, n - 2), sq), ((4, n), next)])?;
    let third = replicated_chain(n, &[((1, n), fourth)])?;
    let shared = vec![0, 1, 2, n - 1, n, n + 1];
    glue(&[
        (first, shared.clone()),
        (second, shared),
        (third, vec![0, n + 1]),
    ])
}

/// Doubled three-part glued poset whose `[d c^{n-4} d]` equals `4(N^2 - N^4)`.
pub fn lemma2_poset(n: usize, copies: u64) -> Result<RankedPoset> {
    horizontal_double(&lemma2_glued(n, copies)?)
}

/// The rank-7 two-part glued poset, before doubling.
pub fn lemma3_glued(copies: u64) -> Result<RankedPoset> {
    if copies < 1 {
        return Err(invalid("N must be at least 1"));
    }
    let first = replicated_chain(6, &[((1, 2), copies), ((2, 6), copies)])?;
    let second = replicated_chain(6, &[((1, 5), copies), ((5, 6), copies)])?;
    let shared = vec![0, 1, 6, 7];
    glue(&[(first, shared.clone()), (second, shared)])
}

/// Doubled rank-7 glued poset whose `[ccdcc]` equals `-2(N-1)^2`.
pub fn lemma3_poset(copies: u64) -> Result<RankedPoset> {
    horizontal_double(&lemma3_glued(copies)?)
}
