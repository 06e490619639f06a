use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::budget;
use crate::cd::CdWord;
use crate::construct::IntervalSystem;
use crate::error::{invalid, Result};
use crate::subset::{evenly_contains_mask, RankSubset};

/// Signed integer L-vector of a limit poset; only nonzero entries are kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitLVector {
    n: usize,
    entries: BTreeMap<RankSubset, i64>,
}

impl LimitLVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: &RankSubset) -> i64 {
        self.entries.get(q).copied().unwrap_or(0)
    }

    pub fn nonzero(&self) -> &BTreeMap<RankSubset, i64> {
        &self.entries
    }

    /// Entrywise mean of several limit vectors over the same `[1, n]`, as used
    /// for posets glued from several limit families.
    pub fn mean(parts: &[LimitLVector]) -> Result<BTreeMap<RankSubset, BigRational>> {
        let Some(first) = parts.first() else {
            return Err(invalid("mean of no limit vectors"));
        };
        let mut sum: BTreeMap<RankSubset, i64> = BTreeMap::new();
        for p in parts {
            if p.n != first.n {
                return Err(invalid("limit vectors over different ranges"));
            }
            for (q, v) in &p.entries {
                *sum.entry(*q).or_default() += v;
            }
        }
        let k = BigInt::from(parts.len());
        Ok(sum
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(q, v)| (q, BigRational::new(v.into(), k.clone())))
            .collect())
    }
}

/// `L_S = Σ_j (-1)^j #{j-subsets of the system whose union is S}`.
///
/// Every subset of the system is enumerated, so the system size is bounded by
/// [`budget::max_intervals`]. Works for any interval system, even or not.
pub fn limit_l_vector(n: usize, sys: &IntervalSystem) -> Result<LimitLVector> {
    if sys.n != n {
        return Err(invalid(format!(
            "interval system is over [1,{}], expected [1,{n}]",
            sys.n
        )));
    }
    budget::check_intervals(sys.len())?;
    let masks: Vec<u64> = sys
        .intervals
        .iter()
        .map(|&(i, j)| RankSubset::interval(n, i, j).map(|s| s.mask()))
        .collect::<Result<_>>()?;
    let mut acc: BTreeMap<u64, i64> = BTreeMap::new();
    for pick in 0u64..1 << masks.len() {
        let mut union = 0u64;
        for (k, m) in masks.iter().enumerate() {
            if pick >> k & 1 == 1 {
                union |= m;
            }
        }
        let sign = if pick.count_ones() % 2 == 0 { 1 } else { -1 };
        *acc.entry(union).or_default() += sign;
    }
    Ok(LimitLVector {
        n,
        entries: acc
            .into_iter()
            .filter(|(_, v)| *v != 0)
            .map(|(m, v)| (RankSubset::from_mask_unchecked(n, m), v))
            .collect(),
    })
}

/// Two-element intervals at the positions of the `d`s of `w`.
pub fn d_position_system(w: &CdWord) -> IntervalSystem {
    let mut intervals = Vec::new();
    let mut pos = 1;
    for l in w.letters() {
        if l.degree() == 2 {
            intervals.push((pos, pos + 1));
        }
        pos += l.degree();
    }
    IntervalSystem {
        n: w.degree(),
        intervals,
    }
}

/// Coefficient of `w` in the cd-index of the limit poset of `sys`, by the
/// L-to-cd conversion applied to [`limit_l_vector`].
pub fn limit_cd_coefficient(w: &CdWord, sys: &IntervalSystem) -> Result<BigInt> {
    if w.degree() != sys.n {
        return Err(invalid(format!(
            "word {w} has degree {}, interval system is over [1,{}]",
            w.degree(),
            sys.n
        )));
    }
    let l = limit_l_vector(sys.n, sys)?;
    let s = w.support_mask();
    let sum: i64 = l
        .entries
        .iter()
        .filter(|(q, _)| evenly_contains_mask(s, q.mask()))
        .map(|(_, v)| v)
        .sum();
    Ok(BigInt::from(-2).pow(w.d_count() as u32) * sum)
}

impl Serialize for LimitLVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: BTreeMap<String, i64> = self
            .entries
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect();
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("entries", &entries)?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> RankSubset {
        RankSubset::from_members(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn single_interval() {
        let l = limit_l_vector(4, &IntervalSystem::new(4, [(1, 4)]).unwrap()).unwrap();
        assert_eq!(l.nonzero().len(), 2);
        assert_eq!(l.get(&set(4, &[])), 1);
        assert_eq!(l.get(&set(4, &[1, 2, 3, 4])), -1);
    }

    #[test]
    fn disjoint_pair() {
        let l = limit_l_vector(4, &IntervalSystem::new(4, [(1, 2), (3, 4)]).unwrap()).unwrap();
        assert_eq!(l.get(&set(4, &[])), 1);
        assert_eq!(l.get(&set(4, &[1, 2])), -1);
        assert_eq!(l.get(&set(4, &[3, 4])), -1);
        assert_eq!(l.get(&set(4, &[1, 2, 3, 4])), 1);
        assert_eq!(l.nonzero().len(), 4);
    }

    #[test]
    fn coefficients() {
        let dd: CdWord = "dd".parse().unwrap();
        assert_eq!(d_position_system(&dd).intervals, vec![(1, 2), (3, 4)]);
        assert_eq!(
            limit_cd_coefficient(&dd, &d_position_system(&dd)).unwrap(),
            4.into()
        );
        let w: CdWord = "dcccd".parse().unwrap();
        let sys = IntervalSystem::new(7, [(1, 2), (6, 7)]).unwrap();
        assert_eq!(limit_cd_coefficient(&w, &sys).unwrap(), 4.into());
        let c5: CdWord = "ccccc".parse().unwrap();
        let empty = IntervalSystem::new(5, []).unwrap();
        assert_eq!(limit_cd_coefficient(&c5, &empty).unwrap(), 1.into());
        assert!(limit_cd_coefficient(&c5, &sys).is_err());
    }

    #[test]
    fn too_many_intervals() {
        let sys = IntervalSystem::new(40, (1..=21).map(|i| (i, i + 1))).unwrap();
        assert!(matches!(
            limit_l_vector(40, &sys),
            Err(crate::Error::ResourceLimit { .. })
        ));
    }
}
