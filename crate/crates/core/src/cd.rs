//! cd-words, noncommutative cd- and ab-polynomials, and the cd-index.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::flag::{flag_h, flag_vector, l_vector_from_h, FlagH, LVector};
use crate::poset::RankedPoset;
use crate::subset::{evenly_contains_mask, RankSubset, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    C,
    D,
}

impl Letter {
    pub fn degree(self) -> usize {
        match self {
            Letter::C => 1,
            Letter::D => 2,
        }
    }
}

/// A word over `{c, d}`; `c` has degree 1 and `d` degree 2.
///
/// Ordering is lexicographic on the letter sequence with `c < d`, which is
/// the same as comparing the string forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CdWord(Vec<Letter>);

impl CdWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn c_power(n: usize) -> Self {
        Self(vec![Letter::C; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|l| l.degree()).sum()
    }

    pub fn d_count(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::D).count()
    }

    /// Positions occupied by `d`s, scanning left to right: `c` advances one
    /// position, `d` takes the next two.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut pos = 1;
        for l in &self.0 {
            if *l == Letter::D {
                mask |= 0b11 << (pos - 1);
            }
            pos += l.degree();
        }
        mask
    }

    pub fn support(&self) -> Result<RankSubset> {
        RankSubset::from_mask(self.degree(), self.support_mask())
    }

    pub fn reversed(&self) -> CdWord {
        CdWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &CdWord) -> CdWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        CdWord(v)
    }

    /// Splits at degree position `deg`, if a letter boundary falls there.
    pub fn split_at_degree(&self, deg: usize) -> Option<(CdWord, CdWord)> {
        let mut acc = 0;
        for (k, l) in self.0.iter().enumerate() {
            if acc == deg {
                return Some((CdWord(self.0[..k].to_vec()), CdWord(self.0[k..].to_vec())));
            }
            acc += l.degree();
        }
        (acc == deg).then(|| (self.clone(), CdWord::default()))
    }
}

impl fmt::Display for CdWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: String = self
            .0
            .iter()
            .map(|l| match l {
                Letter::C => 'c',
                Letter::D => 'd',
            })
            .collect();
        f.pad(&text)
    }
}

impl FromStr for CdWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                'c' | 'C' => Ok(Letter::C),
                'd' | 'D' => Ok(Letter::D),
                other => Err(invalid(format!("`{other}` is not a cd letter"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(CdWord)
    }
}

/// All cd-words of degree `n` in lexicographic order; there are `F(n+1)` of
/// them (Fibonacci, `F(1) = F(2) = 1`).
pub fn cd_words(n: usize) -> Vec<CdWord> {
    fn go(rem: usize, cur: &mut Vec<Letter>, out: &mut Vec<CdWord>) {
        if rem == 0 {
            out.push(CdWord(cur.clone()));
            return;
        }
        cur.push(Letter::C);
        go(rem - 1, cur, out);
        cur.pop();
        if rem >= 2 {
            cur.push(Letter::D);
            go(rem - 2, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// Homogeneous integer polynomial in noncommuting `c`, `d`. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdPolynomial {
    n: usize,
    terms: BTreeMap<CdWord, BigInt>,
}

impl CdPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: CdWord, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(word.degree());
        p.add_term(word, coeff.into());
        p
    }

    /// `c^n` with coefficient one.
    pub fn c_power(n: usize) -> Self {
        Self::monomial(CdWord::c_power(n), 1)
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CdWord, BigInt)>,
    {
        let mut p = Self::zero(n);
        for (w, c) in terms {
            if w.degree() != n {
                return Err(invalid(format!(
                    "word {w} has degree {}, expected {n}",
                    w.degree()
                )));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, word: CdWord, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<CdWord, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &CdWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reverses every word (the cd-index of the dual poset).
    pub fn reversed(&self) -> CdPolynomial {
        CdPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.reversed(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> CdPolynomial {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn pow(&self, e: u32) -> CdPolynomial {
        let mut out = CdPolynomial::c_power(0);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Substitutes `c -> a + b`, `d -> ab + ba`.
    pub fn expand_to_ab(&self) -> AbPolynomial {
        let mut out = AbPolynomial::zero(self.n);
        for (w, coeff) in &self.terms {
            // Each c contributes a choice of one position, each d a choice of
            // which of its two positions carries b.
            let mut choices: Vec<u64> = vec![0];
            let mut pos = 0;
            for l in w.letters() {
                choices = match l {
                    Letter::C => choices.iter().flat_map(|&m| [m, m | 1 << pos]).collect(),
                    Letter::D => choices
                        .iter()
                        .flat_map(|&m| [m | 1 << (pos + 1), m | 1 << pos])
                        .collect(),
                };
                pos += l.degree();
            }
            for m in choices {
                out.add(m, coeff);
            }
        }
        out
    }

    /// Integer coefficients as `i64` when they all fit; handy in tests and
    /// reports.
    pub fn to_i64_map(&self) -> Option<BTreeMap<String, i64>> {
        self.terms
            .iter()
            .map(|(w, c)| c.to_i64().map(|v| (w.to_string(), v)))
            .collect()
    }
}

/// Word concatenation extended bilinearly.
pub fn cd_product(a: &CdPolynomial, b: &CdPolynomial) -> CdPolynomial {
    a * b
}

impl Mul for &CdPolynomial {
    type Output = CdPolynomial;

    fn mul(self, rhs: &CdPolynomial) -> CdPolynomial {
        let mut out = CdPolynomial::zero(self.n + rhs.n);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Add for &CdPolynomial {
    type Output = CdPolynomial;

    fn add(self, rhs: &CdPolynomial) -> CdPolynomial {
        assert_eq!(self.n, rhs.n, "adding cd-polynomials of different degrees");
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CdPolynomial {
    type Output = CdPolynomial;

    fn sub(self, rhs: &CdPolynomial) -> CdPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &CdPolynomial {
    type Output = CdPolynomial;

    fn neg(self) -> CdPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for CdPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if w.is_empty() {
                if abs.is_one() {
                    f.write_str("1")?;
                }
            } else {
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

/// `{"n": n, "terms": {"ccdcc": -2, ...}}`; coefficients that do not fit in
/// an `i64` are written as decimal strings.
impl Serialize for CdPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: BTreeMap<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| (w.to_string(), big_to_json(c)))
            .collect();
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("terms", &terms)?;
        map.end()
    }
}

pub fn big_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

/// Polynomial in noncommuting `a`, `b` of degree `n`, keyed by the set of
/// positions holding `b` (so `Σ h_S u_S` has key `S` for `u_S`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbPolynomial {
    n: usize,
    terms: BTreeMap<u64, BigInt>,
}

impl AbPolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, b_positions: u64, coeff: &BigInt) {
        let e = self.terms.entry(b_positions).or_insert_with(BigInt::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&b_positions);
        }
    }

    /// The ab-index `Σ h_S u_S`.
    pub fn from_flag_h(h: &FlagH) -> Self {
        let mut out = Self::zero(h.n());
        for (m, c) in h.entries().iter().enumerate() {
            out.add(m as u64, c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, b_positions: &RankSubset) -> BigInt {
        self.terms
            .get(&b_positions.mask())
            .cloned()
            .unwrap_or_default()
    }

    /// Words like `abba` with their coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (String, &BigInt)> + '_ {
        self.terms.iter().map(move |(&m, c)| {
            let w: String = (0..self.n)
                .map(|p| if m >> p & 1 == 1 { 'b' } else { 'a' })
                .collect();
            (w, c)
        })
    }
}

/// cd-index from an L-vector: `[w] = (-2)^r Σ_{supp(w) ⊆_e Q} L_Q`.
///
/// Refuses L-vectors with a nonzero entry on a non-even set, since then the
/// ab-index is not a polynomial in `c` and `d`.
pub fn cd_from_l(l: &LVector) -> Result<CdPolynomial> {
    let n = l.n();
    if n > MAX_N || n > 30 {
        return Err(invalid(format!("cd-index of degree {n} is out of range")));
    }
    if let Some((q, v)) = l.first_non_even_support() {
        return Err(Error::NotCdExpressible {
            set: q.to_string(),
            value: v.to_string(),
        });
    }
    let support: Vec<(u64, &BigRational)> = l
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m as u64, v))
        .collect();
    let mut out = CdPolynomial::zero(n);
    for w in cd_words(n) {
        let s = w.support_mask();
        let sum: BigRational = support
            .iter()
            .filter(|(q, _)| evenly_contains_mask(s, *q))
            .map(|(_, v)| (*v).clone())
            .sum();
        let value = sum * BigRational::from_integer(BigInt::from(-2).pow(w.d_count() as u32));
        if !value.is_integer() {
            return Err(Error::NonIntegral {
                word: w.to_string(),
                value: value.to_string(),
            });
        }
        out.add_term(w, value.to_integer());
    }
    Ok(out)
}

/// The cd-index of an Eulerian poset (or any poset whose L-vector lives on
/// even sets).
pub fn cd_index(p: &RankedPoset) -> Result<CdPolynomial> {
    let h = flag_h(&flag_vector(p)?);
    cd_from_l(&l_vector_from_h(&h))
}
