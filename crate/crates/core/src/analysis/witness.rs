//! Eulerian posets with a negative coefficient for a given Part3 word.
//!
//! The bad subword `s` of `w = x s z` gets a base family `P_N` whose `[s]`
//! decreases in `N`. Joining with Boolean algebras of the right degrees gives
//! `[w]_{B * P_N * B'} = [x]_B [s]_{P_N} [z]_{B'}`, and Boolean coefficients
//! are all positive.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::cd::{cd_index, CdWord};
use crate::construct::{dp_poset, join, lemma2_poset, lemma3_poset, IntervalSystem};
use crate::error::{invalid, Error, Result};
use crate::poset::{boolean, RankedPoset};

use super::classify::{classify_word, Witness, WitnessKind, WordClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseFamily {
    /// `dp(n, {[1, n]}, N)` for `d c^m d` with `n = m + 4` even.
    SingleInterval { n: usize },
    /// `lemma2_poset(n, N)` for `d c^m d` with `n = m + 4` odd.
    ThreePartGlue { n: usize },
    /// `lemma3_poset(N)` for `ccdcc`.
    TwoPartGlue,
}

impl BaseFamily {
    pub fn for_witness(wit: &Witness) -> Result<Self> {
        match wit.kind {
            WitnessKind::Ccdcc => Ok(BaseFamily::TwoPartGlue),
            WitnessKind::DcmD { gap } => {
                let n = gap + 4;
                if n % 2 == 0 {
                    Ok(BaseFamily::SingleInterval { n })
                } else if n >= 7 {
                    Ok(BaseFamily::ThreePartGlue { n })
                } else {
                    Err(Error::Internal(format!(
                        "no base family for {}",
                        wit.subword
                    )))
                }
            }
        }
    }

    pub fn build(&self, copies: u64) -> Result<RankedPoset> {
        match *self {
            BaseFamily::SingleInterval { n } => {
                let sys = IntervalSystem::new(n, [(1, n)])?;
                dp_poset(n, &sys, copies, false)
            }
            BaseFamily::ThreePartGlue { n } => lemma2_poset(n, copies),
            BaseFamily::TwoPartGlue => lemma3_poset(copies),
        }
    }
}

impl fmt::Display for BaseFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseFamily::SingleInterval { n } => write!(f, "dp({n},[[1,{n}]],N)"),
            BaseFamily::ThreePartGlue { n } => write!(f, "lemma2({n},N)"),
            BaseFamily::TwoPartGlue => f.write_str("lemma3(N)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct NegativeWitness {
    pub word: CdWord,
    pub witness: Witness,
    pub base: BaseFamily,
    pub prefix_degree: usize,
    pub suffix_degree: usize,
    pub copies: u64,
    pub poset: RankedPoset,
    /// `[w]` of `poset`.
    pub coefficient: BigInt,
}

impl NegativeWitness {
    /// The join expression, e.g. `boolean(2) * dp(4,[[1,4]],N)`.
    pub fn construction(&self) -> String {
        let mut parts = Vec::new();
        if self.prefix_degree > 0 {
            parts.push(format!("boolean({})", self.prefix_degree + 1));
        }
        parts.push(self.base.to_string());
        if self.suffix_degree > 0 {
            parts.push(format!("boolean({})", self.suffix_degree + 1));
        }
        parts.join(" * ")
    }
}

impl Serialize for NegativeWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("NegativeWitness", 10)?;
        st.serialize_field("word", &self.word.to_string())?;
        st.serialize_field("witness", &self.witness.subword.to_string())?;
        st.serialize_field("witness_degree_offset", &self.witness.degree_offset)?;
        st.serialize_field("base", &self.base.to_string())?;
        st.serialize_field("construction", &self.construction())?;
        st.serialize_field("left_boolean", &(self.prefix_degree + 1))?;
        st.serialize_field("right_boolean", &(self.suffix_degree + 1))?;
        st.serialize_field("N", &self.copies)?;
        st.serialize_field("elements", &self.poset.element_count())?;
        st.serialize_field("coefficient", &crate::cd::big_to_json(&self.coefficient))?;
        st.end()
    }
}

pub fn negative_witness(w: &CdWord, copies: u64) -> Result<NegativeWitness> {
    if copies < 1 {
        return Err(invalid("N must be at least 1"));
    }
    let witness = match classify_word(w)? {
        WordClass::Part3(wit) => wit,
        other => {
            return Err(invalid(format!(
                "{w} is {}, not Part3; its coefficient is bounded below",
                other.tag()
            )))
        }
    };
    let base = BaseFamily::for_witness(&witness)?;
    let prefix_degree = witness.degree_offset;
    let suffix_degree = w.degree() - prefix_degree - witness.subword.degree();

    let mut poset = base.build(copies)?;
    if prefix_degree > 0 {
        poset = join(&boolean(prefix_degree + 1)?, &poset)?;
    }
    if suffix_degree > 0 {
        poset = join(&poset, &boolean(suffix_degree + 1)?)?;
    }
    let coefficient = cd_index(&poset)?.coeff(w);
    Ok(NegativeWitness {
        word: w.clone(),
        witness,
        base,
        prefix_degree,
        suffix_degree,
        copies,
        poset,
        coefficient,
    })
}
