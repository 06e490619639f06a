//! The flag-number inequality for Eulerian posets, in flag form and L form.
//!
//! For `T ⊆ V ⊆ [1, n]` such that every maximal interval of `V` meets `T` in
//! at most one point, and `S = [1, n] \ V`:
//!
//! ```text
//! f-form = Σ_{R⊆T} (-2)^{|T∖R|} f_{S∪R}
//! L-form = (-1)^{|T|} Σ_{T⊆Q⊆V} L_Q
//! ```
//!
//! Both are nonnegative on Eulerian posets. Writing `f_X = 2^{|X|} Σ_{Q∩X=∅} L_Q`
//! shows `f-form = 2^{|S|+|T|} · L-form` for every flag vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::flag::{FlagVector, LVector};
use crate::subset::RankSubset;

/// A pair `(T, V)` satisfying the maximal-interval condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InequalityWindow {
    #[serde(rename = "T")]
    t: RankSubset,
    #[serde(rename = "V")]
    v: RankSubset,
}

impl InequalityWindow {
    pub fn new(t: RankSubset, v: RankSubset) -> Result<Self> {
        if t.n() != v.n() {
            return Err(invalid("T and V live in different ranges"));
        }
        if !t.is_subset(&v) {
            return Err(invalid(format!("T = {t} is not contained in V = {v}")));
        }
        for (lo, hi) in v.runs() {
            let hits = t.members().filter(|s| (lo..=hi).contains(s)).count();
            if hits > 1 {
                return Err(invalid(format!(
                    "maximal interval [{lo},{hi}] of V contains {hits} elements of T"
                )));
            }
        }
        Ok(Self { t, v })
    }

    pub fn t(&self) -> RankSubset {
        self.t
    }

    pub fn v(&self) -> RankSubset {
        self.v
    }

    /// `S = [1, n] \ V`.
    pub fn s(&self) -> RankSubset {
        self.v.complement()
    }

    /// Exponent `e` with `f-form = 2^e · L-form`, namely `|S| + |T|`.
    pub fn f_to_l_exponent(&self) -> usize {
        self.s().len() + self.t.len()
    }
}

/// All windows over `[1, n]`, ordered by `(V, T)` masks.
pub fn valid_windows(n: usize) -> Result<Vec<InequalityWindow>> {
    let mut out = Vec::new();
    for v in RankSubset::all(n)? {
        // T picks at most one point from each maximal run of V.
        let mut ts = vec![RankSubset::empty(n)?];
        for (lo, hi) in v.runs() {
            let mut next = Vec::with_capacity(ts.len() * (hi - lo + 2));
            for t in &ts {
                next.push(*t);
                for s in lo..=hi {
                    next.push(t.union(&RankSubset::from_members(n, [s])?));
                }
            }
            ts = next;
        }
        for t in ts {
            out.push(InequalityWindow { t, v });
        }
    }
    Ok(out)
}

pub fn inequality_f_form(f: &FlagVector, t: &RankSubset, v: &RankSubset) -> Result<BigInt> {
    let w = InequalityWindow::new(*t, *v)?;
    if f.n() != t.n() {
        return Err(invalid("window and flag vector live in different ranges"));
    }
    let s = w.s();
    let mut total = BigInt::zero();
    // R ranges over subsets of T.
    let tm = t.mask();
    let mut r = tm;
    loop {
        let missing = (tm & !r).count_ones();
        let coeff = BigInt::from(-2).pow(missing);
        let idx = (s.mask() | r) as usize;
        total += coeff * BigInt::from(f.entries()[idx].clone());
        if r == 0 {
            break;
        }
        r = (r - 1) & tm;
    }
    Ok(total)
}

pub fn inequality_l_form(l: &LVector, t: &RankSubset, v: &RankSubset) -> Result<BigRational> {
    InequalityWindow::new(*t, *v)?;
    if l.n() != t.n() {
        return Err(invalid("window and L-vector live in different ranges"));
    }
    let tm = t.mask();
    let free = v.mask() & !tm;
    let mut total = BigRational::zero();
    let mut extra = free;
    loop {
        total += &l.entries()[(tm | extra) as usize];
        if extra == 0 {
            break;
        }
        extra = (extra - 1) & free;
    }
    if t.len() % 2 == 1 {
        total = -total;
    }
    Ok(total)
}
