//! Classification of cd-words by the sign behaviour of their coefficients
//! over all Eulerian posets.
//!
//! | class  | words                                        | coefficient        |
//! |--------|----------------------------------------------|--------------------|
//! | Part1a | `c^i d c^j`, `min(i, j) <= 1`                | `>= 0`, unbounded  |
//! | Part1b | `c^i (dc)^{r-1} d c^j`, `r >= 2`             | `>= 0`, unbounded  |
//! | Part2  | `c^n`                                        | always 1           |
//! | Part3  | everything else                              | unbounded both ways|
//!
//! Every Part3 word contains `ccdcc` or some `d c^m d` with `m != 1`; the
//! located subword is the seed for a negative witness.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::cd::{cd_words, CdWord, Letter};
use crate::error::{invalid, Error, Result};
use crate::flag::LVector;
use crate::subset::{evenly_contains_mask, RankSubset};

use super::inequality::InequalityWindow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassTag {
    Part1a,
    Part1b,
    Part2,
    Part3,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ClassTag::Part1a => "Part1a",
            ClassTag::Part1b => "Part1b",
            ClassTag::Part2 => "Part2",
            ClassTag::Part3 => "Part3",
        })
    }
}

/// Sets `(S, T, V)` proving `[w] >= 0` through the flag-number inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "display")]
    pub word: CdWord,
    pub class: ClassTag,
    #[serde(rename = "S")]
    pub s: RankSubset,
    #[serde(rename = "T")]
    pub t: RankSubset,
    #[serde(rename = "V")]
    pub v: RankSubset,
    #[serde(skip)]
    pub r: usize,
}

impl Certificate {
    pub fn window(&self) -> Result<InequalityWindow> {
        InequalityWindow::new(self.t, self.v)
    }

    /// `2^r (-1)^{|T|} Σ_{T⊆Q⊆V, Q even} L_Q`. For Eulerian L-vectors this
    /// equals `[w]` and is `2^r` times a nonnegative quantity.
    pub fn evaluate(&self, l: &LVector) -> BigRational {
        let tm = self.t.mask();
        let free = self.v.mask() & !tm;
        let mut sum = BigRational::zero();
        let mut extra = free;
        loop {
            let q = tm | extra;
            if crate::subset::is_even_mask(q) {
                sum += &l.entries()[q as usize];
            }
            if extra == 0 {
                break;
            }
            extra = (extra - 1) & free;
        }
        let sign = if self.t.len() % 2 == 1 { -1 } else { 1 };
        sum * BigRational::from_integer(BigInt::from(sign) << self.r)
    }
}

fn display<T: fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    Ccdcc,
    /// `d c^gap d` with `gap != 1`.
    DcmD {
        gap: usize,
    },
}

/// A bad subword located inside a Part3 word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub subword: CdWord,
    pub kind: WitnessKind,
    /// Index of the first letter of the subword.
    pub letter_offset: usize,
    /// Total degree of the letters before the subword.
    pub degree_offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordClass {
    Part1a(Certificate),
    Part1b(Certificate),
    Part2,
    Part3(Witness),
}

impl WordClass {
    pub fn tag(&self) -> ClassTag {
        match self {
            WordClass::Part1a(_) => ClassTag::Part1a,
            WordClass::Part1b(_) => ClassTag::Part1b,
            WordClass::Part2 => ClassTag::Part2,
            WordClass::Part3(_) => ClassTag::Part3,
        }
    }
}

struct Shape {
    /// c-counts before the first d, between consecutive d's, after the last d.
    gaps: Vec<usize>,
}

fn shape(w: &CdWord) -> Shape {
    let mut gaps = vec![0];
    for l in w.letters() {
        match l {
            Letter::C => *gaps.last_mut().unwrap() += 1,
            Letter::D => gaps.push(0),
        }
    }
    Shape { gaps }
}

fn tag_of(w: &CdWord) -> ClassTag {
    let g = shape(w).gaps;
    let r = g.len() - 1;
    match r {
        0 => ClassTag::Part2,
        1 if g[0].min(g[1]) <= 1 => ClassTag::Part1a,
        1 => ClassTag::Part3,
        _ if g[1..r].iter().all(|&m| m == 1) => ClassTag::Part1b,
        _ => ClassTag::Part3,
    }
}

/// Locates `d c^m d` with `m != 1` (first such pair of consecutive `d`s), or
/// failing that a `d` with at least two `c`s on each side.
pub fn find_witness(w: &CdWord) -> Option<Witness> {
    let letters = w.letters();
    let d_idx: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::D)
        .map(|(k, _)| k)
        .collect();
    let degree_before = |k: usize| letters[..k].iter().map(|l| l.degree()).sum::<usize>();
    for pair in d_idx.windows(2) {
        let gap = pair[1] - pair[0] - 1;
        if gap != 1 {
            return Some(Witness {
                subword: CdWord::new(letters[pair[0]..=pair[1]].to_vec()),
                kind: WitnessKind::DcmD { gap },
                letter_offset: pair[0],
                degree_offset: degree_before(pair[0]),
            });
        }
    }
    for &k in &d_idx {
        if k >= 2
            && k + 2 < letters.len()
            && letters[k - 2..k] == [Letter::C, Letter::C]
            && letters[k + 1..k + 3] == [Letter::C, Letter::C]
        {
            return Some(Witness {
                subword: CdWord::new(letters[k - 2..k + 3].to_vec()),
                kind: WitnessKind::Ccdcc,
                letter_offset: k - 2,
                degree_offset: degree_before(k - 2),
            });
        }
    }
    None
}

pub fn classify_word(w: &CdWord) -> Result<WordClass> {
    if w.degree() == 0 {
        return Err(invalid("cannot classify the empty word"));
    }
    Ok(match tag_of(w) {
        ClassTag::Part2 => WordClass::Part2,
        ClassTag::Part1a => WordClass::Part1a(certificate_for(w)?),
        ClassTag::Part1b => WordClass::Part1b(certificate_for(w)?),
        ClassTag::Part3 => WordClass::Part3(find_witness(w).ok_or_else(|| {
            Error::Internal(format!(
                "Part3 word {w} has no ccdcc or d c^m d (m != 1) subword"
            ))
        })?),
    })
}

/// The `(S, T, V)` sets for a Part1 word.
pub fn nonneg_certificate(w: &CdWord) -> Result<Certificate> {
    match tag_of(w) {
        ClassTag::Part1a | ClassTag::Part1b if w.degree() > 0 => certificate_for(w),
        tag => Err(invalid(format!(
            "{w} is {tag}, which has no nonnegativity certificate"
        ))),
    }
}

fn certificate_for(w: &CdWord) -> Result<Certificate> {
    let n = w.degree();
    let g = shape(w).gaps;
    let r = g.len() - 1;
    let tag = tag_of(w);
    let set = |m: &[usize]| RankSubset::from_members(n, m.iter().copied());
    let (s, t, v) = if tag == ClassTag::Part1a {
        let (i, j) = (g[0], g[1]);
        if i == 0 {
            (set(&[])?, set(&[1])?, RankSubset::full(n)?)
        } else if i == 1 {
            (set(&[1])?, set(&[2])?, RankSubset::interval(n, 2, n)?)
        } else if j == 0 {
            (set(&[])?, set(&[n])?, RankSubset::full(n)?)
        } else {
            debug_assert_eq!(j, 1);
            (
                set(&[n])?,
                set(&[n - 1])?,
                RankSubset::interval(n, 1, n - 1)?,
            )
        }
    } else {
        let i = g[0];
        let s: Vec<usize> = (1..r).map(|k| i + 3 * k).collect();
        let mut t = vec![i + 2];
        t.extend((1..r).map(|k| i + 3 * k + 1));
        let s = set(&s)?;
        (s, set(&t)?, s.complement())
    };
    let cert = Certificate {
        word: w.clone(),
        class: tag,
        s,
        t,
        v,
        r,
    };
    cert.window()
        .map_err(|e| Error::Internal(format!("certificate for {w} is not a valid window: {e}")))?;
    Ok(cert)
}

/// `[w]` straight from an L-vector: `(-2)^r Σ_{supp(w) ⊆_e Q} L_Q`.
pub fn coefficient_from_l(w: &CdWord, l: &LVector) -> BigRational {
    let s = w.support_mask();
    let sum: BigRational = l
        .entries()
        .iter()
        .enumerate()
        .filter(|(q, _)| evenly_contains_mask(s, *q as u64))
        .map(|(_, v)| v.clone())
        .sum();
    sum * BigRational::from_integer(BigInt::from(-2).pow(w.d_count() as u32))
}

/// Number of degree-`n` words in Part1a or Part1b, by enumeration.
pub fn count_part1_words(n: usize) -> Result<u64> {
    if n < 5 {
        return Err(invalid(format!(
            "the count formula is stated for n >= 5, got {n}"
        )));
    }
    Ok(cd_words(n)
        .iter()
        .filter(|w| matches!(tag_of(w), ClassTag::Part1a | ClassTag::Part1b))
        .count() as u64)
}

/// `floor(C(n-2, 2) / 3) + 4`.
pub fn note_count_formula(n: usize) -> u64 {
    let m = n.saturating_sub(2) as u64;
    m * m.saturating_sub(1) / 2 / 3 + 4
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CdWord {
        s.parse().unwrap()
    }

    fn members(s: &RankSubset) -> Vec<usize> {
        s.members().collect()
    }

    #[test]
    fn classes() {
        match classify_word(&w("ccdcc")).unwrap() {
            WordClass::Part3(wit) => {
                assert_eq!(wit.subword, w("ccdcc"));
                assert_eq!(wit.kind, WitnessKind::Ccdcc);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(classify_word(&w("cdcdc")).unwrap().tag(), ClassTag::Part1b);
        match classify_word(&w("dd")).unwrap() {
            WordClass::Part3(wit) => assert_eq!(wit.kind, WitnessKind::DcmD { gap: 0 }),
            other => panic!("{other:?}"),
        }
        assert_eq!(classify_word(&w("cccc")).unwrap(), WordClass::Part2);
        assert_eq!(classify_word(&w("cccdc")).unwrap().tag(), ClassTag::Part1a);
        assert_eq!(classify_word(&w("d")).unwrap().tag(), ClassTag::Part1a);
        assert!(classify_word(&CdWord::default()).is_err());
    }

    #[test]
    fn witness_location() {
        let wit = find_witness(&w("cdccdc")).unwrap();
        assert_eq!(wit.subword, w("dccd"));
        assert_eq!((wit.letter_offset, wit.degree_offset), (1, 1));
        let wit = find_witness(&w("dcccdcc")).unwrap();
        assert_eq!(wit.kind, WitnessKind::DcmD { gap: 3 });
        let wit = find_witness(&w("cccdccc")).unwrap();
        assert_eq!((wit.letter_offset, wit.degree_offset), (1, 1));
        assert!(find_witness(&w("cdcdc")).is_none());
    }

    #[test]
    fn certificates() {
        let c = nonneg_certificate(&w("dccc")).unwrap();
        assert_eq!(
            (members(&c.s), members(&c.t), members(&c.v)),
            (vec![], vec![1], vec![1, 2, 3, 4, 5])
        );
        let c = nonneg_certificate(&w("cdc")).unwrap();
        assert_eq!(
            (members(&c.s), members(&c.t), members(&c.v)),
            (vec![1], vec![2], vec![2, 3, 4])
        );
        let c = nonneg_certificate(&w("cdcdc")).unwrap();
        assert_eq!(members(&c.s), vec![4]);
        assert_eq!(members(&c.t), vec![3, 5]);
        assert_eq!(members(&c.v), vec![1, 2, 3, 5, 6, 7]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"word":"cdcdc","class":"Part1b","S":[4],"T":[3,5],"V":[1,2,3,5,6,7]}"#
        );
        // c^i d and c^i d c mirror the cases above
        let c = nonneg_certificate(&w("cccd")).unwrap();
        assert_eq!((members(&c.s), members(&c.t)), (vec![], vec![5]));
        let c = nonneg_certificate(&w("cccdc")).unwrap();
        assert_eq!(
            (members(&c.s), members(&c.t), members(&c.v)),
            (vec![6], vec![5], vec![1, 2, 3, 4, 5])
        );
        assert!(nonneg_certificate(&w("ccdcc")).is_err());
        assert!(nonneg_certificate(&w("ccc")).is_err());
    }

    #[test]
    fn note_counts() {
        assert_eq!(count_part1_words(5).unwrap(), 5);
        assert_eq!(count_part1_words(7).unwrap(), 7);
        assert_eq!(count_part1_words(8).unwrap(), 9);
        assert_eq!(note_count_formula(8), 9);
        assert!(count_part1_words(4).is_err());
    }
}
