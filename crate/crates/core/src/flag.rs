//! Flag vectors, flag h-vectors and L-vectors (ce-index coefficients).
//!
//! All three are tables indexed by subsets of `[1, n]` in mask order.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedAdd, One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};
use crate::poset::{Order, RankedPoset};
use crate::subset::{is_even_mask, RankSubset, MAX_N};

/// Chain counts `f_S` for every `S ⊆ [1, n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagVector {
    n: usize,
    entries: Vec<BigUint>,
}

impl FlagVector {
    pub fn from_entries(n: usize, entries: Vec<BigUint>) -> Result<Self> {
        check_table(n, entries.len())?;
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: &RankSubset) -> &BigUint {
        &self.entries[s.mask() as usize]
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// Flag vector of the dual: `f_S(P*) = f_{reverse(S)}(P)`.
    pub fn reversed(&self) -> FlagVector {
        let entries = (0..self.entries.len() as u64)
            .map(|m| self.entries[crate::subset::reverse_mask(m, self.n) as usize].clone())
            .collect();
        FlagVector { n: self.n, entries }
    }
}

/// Signed table `h_S = Σ_{T⊆S} (-1)^{|S∖T|} f_T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagH {
    n: usize,
    entries: Vec<BigInt>,
}

impl FlagH {
    pub fn from_entries(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        check_table(n, entries.len())?;
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: &RankSubset) -> &BigInt {
        &self.entries[s.mask() as usize]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `f_S = Σ_{T⊆S} h_T`, as signed integers (a synthetic h-table need not
    /// come from a poset).
    pub fn to_f(&self) -> Vec<BigInt> {
        let mut t = self.entries.clone();
        subset_sums(&mut t);
        t
    }
}

/// Exact ce-index coefficients `L_Q`; every denominator divides `2^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LVector {
    n: usize,
    entries: Vec<BigRational>,
}

impl LVector {
    pub fn from_entries(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        check_table(n, entries.len())?;
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, q: &RankSubset) -> &BigRational {
        &self.entries[q.mask() as usize]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    /// Nonzero entries only, keyed by subset.
    pub fn nonzero(&self) -> BTreeMap<RankSubset, BigRational> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(m, v)| (RankSubset::from_mask_unchecked(self.n, m as u64), v.clone()))
            .collect()
    }

    /// First non-even set with a nonzero entry, if any.
    pub fn first_non_even_support(&self) -> Option<(RankSubset, &BigRational)> {
        self.entries
            .iter()
            .enumerate()
            .find(|(m, v)| !v.is_zero() && !is_even_mask(*m as u64))
            .map(|(m, v)| (RankSubset::from_mask_unchecked(self.n, m as u64), v))
    }
}

fn check_table(n: usize, len: usize) -> Result<()> {
    if n > MAX_N || (n < usize::BITS as usize && len != 1usize << n) {
        return Err(invalid(format!(
            "table of length {len} does not match n = {n}"
        )));
    }
    Ok(())
}

/// In-place zeta transform over the subset lattice: `t[S] <- Σ_{T⊆S} t[T]`.
pub fn subset_sums<T>(t: &mut [T])
where
    T: Clone + for<'a> std::ops::AddAssign<&'a T>,
{
    butterfly(t, |lo, hi| *hi += &*lo);
}

/// Inverse of [`subset_sums`] (Möbius transform).
pub fn inv_subset_sums<T>(t: &mut [T])
where
    T: Clone + for<'a> std::ops::SubAssign<&'a T>,
{
    butterfly(t, |lo, hi| *hi -= &*lo);
}

/// Unnormalized Walsh–Hadamard transform: `t[Q] <- Σ_S (-1)^{|S∩Q|} t[S]`.
pub fn walsh_hadamard<T>(t: &mut [T])
where
    T: Clone + for<'a> std::ops::AddAssign<&'a T> + for<'a> std::ops::SubAssign<&'a T>,
{
    butterfly(t, |lo, hi| {
        let old_hi = hi.clone();
        *hi = lo.clone();
        *hi -= &old_hi;
        *lo += &old_hi;
    });
}

fn butterfly<T>(t: &mut [T], mut op: impl FnMut(&mut T, &mut T)) {
    assert!(t.len().is_power_of_two());
    let mut half = 1;
    while half < t.len() {
        for block in t.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (a, b) in lo.iter_mut().zip(hi) {
                op(a, b);
            }
        }
        half *= 2;
    }
}

/// Computes `f_S` for every `S` by extending chains rank by rank.
///
/// Each subset is visited once as a prefix: the counts vector at the last
/// chosen rank is pushed forward through the comparability matrix to every
/// higher rank. Counting first runs in `u128` and falls back to big integers on
/// overflow.
pub fn flag_vector(p: &RankedPoset) -> Result<FlagVector> {
    let n = p.n();
    if n > 24 {
        return Err(invalid(format!(
            "flag vector of a rank-{} poset has 2^{n} entries",
            n + 1
        )));
    }
    let order = p.order();
    let entries = match count_flags::<u128>(n, &order) {
        Some(t) => t.into_iter().map(BigUint::from).collect(),
        None => count_flags::<BigUint>(n, &order).expect("big integers do not overflow"),
    };
    Ok(FlagVector { n, entries })
}

fn count_flags<T>(n: usize, order: &Order) -> Option<Vec<T>>
where
    T: Clone + Zero + One + CheckedAdd,
{
    let mut table = vec![T::zero(); 1 << n];
    let start = vec![T::one()];
    visit(0, &start, 0, n, order, &mut table)?;
    Some(table)
}

fn visit<T>(
    rank: usize,
    counts: &[T],
    mask: usize,
    n: usize,
    order: &Order,
    table: &mut [T],
) -> Option<()>
where
    T: Clone + Zero + One + CheckedAdd,
{
    let mut total = T::zero();
    for c in counts {
        total = total.checked_add(c)?;
    }
    table[mask] = total;
    for next in rank + 1..=n {
        let m = order.above(rank, next);
        let mut out = vec![T::zero(); m.cols()];
        for (i, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in m.row_ones(i) {
                out[j] = out[j].checked_add(c)?;
            }
        }
        visit(next, &out, mask | 1 << (next - 1), n, order, table)?;
    }
    Some(())
}

/// Inclusion–exclusion on the flag vector.
pub fn flag_h(f: &FlagVector) -> FlagH {
    let mut t: Vec<BigInt> = f.entries.iter().map(|x| BigInt::from(x.clone())).collect();
    inv_subset_sums(&mut t);
    FlagH { n: f.n, entries: t }
}

/// `L_Q = 2^{-n} Σ_S (-1)^{|S∩Q|} h_S`, the coefficient of `v_Q` after
/// substituting `a = (c+e)/2`, `b = (c-e)/2` into the ab-index.
pub fn l_vector_from_h(h: &FlagH) -> LVector {
    let mut t = h.entries.clone();
    walsh_hadamard(&mut t);
    let denom = BigInt::one() << h.n;
    LVector {
        n: h.n,
        entries: t
            .into_iter()
            .map(|x| BigRational::new(x, denom.clone()))
            .collect(),
    }
}

pub fn l_vector(f: &FlagVector) -> LVector {
    l_vector_from_h(&flag_h(f))
}

struct SubsetKeyed<'a, T>(usize, &'a [T]);

impl<T: ToString> Serialize for SubsetKeyed<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sorted: BTreeMap<String, String> = self
            .1
            .iter()
            .enumerate()
            .map(|(m, v)| {
                (
                    RankSubset::from_mask_unchecked(self.0, m as u64).to_string(),
                    v.to_string(),
                )
            })
            .collect();
        let mut map = s.serialize_map(Some(sorted.len()))?;
        for (k, v) in &sorted {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// `{"[1,2]": "6", ...}` with every subset present.
impl Serialize for FlagVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SubsetKeyed(self.n, &self.entries).serialize(s)
    }
}

/// `{"n": n, "entries": {"[1,2]": "-1/2", ...}}` listing nonzero entries.
impl Serialize for LVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: BTreeMap<String, String> = self
            .nonzero()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("entries", &entries)?;
        map.end()
    }
}
