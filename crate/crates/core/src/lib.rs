//! Graded and Eulerian posets with exact chain invariants.
//!
//! The crate builds bounded graded posets (chains, Boolean algebras, interval
//! replications, horizontal doubles, glued posets, joins) and computes their
//! flag vectors, flag h-vectors, L-vectors (ce-index) and cd-indices with
//! arbitrary-precision arithmetic. The [`analysis`] module turns the sign
//! structure of the cd-index into executable checks: limit L-vectors of
//! interval-system posets, the inequality on flag numbers, a word classifier
//! with nonnegativity certificates, and constructions that drive the
//! remaining coefficients below any bound.
//!
//! ```
//! use eulerian::{cd_index, construct::horizontal_double, poset::chain};
//!
//! let doubled = horizontal_double(&chain(5)?)?;
//! assert_eq!(cd_index(&doubled)?.to_string(), "cccc");
//! # Ok::<(), eulerian::Error>(())
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example` lists them.

pub mod analysis;
pub mod bits;
pub mod budget;
pub mod cd;
pub mod construct;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod flag;
pub mod poset;
pub mod subset;
pub mod verify;

pub use cd::{cd_from_l, cd_index, cd_product, cd_words, AbPolynomial, CdPolynomial, CdWord};
pub use construct::{
    dp_poset, glue, horizontal_double, join, lemma2_poset, lemma3_poset, replicate_interval,
    IntervalSystem,
};
pub use error::{Error, Result};
pub use flag::{flag_h, flag_vector, l_vector, FlagH, FlagVector, LVector};
pub use poset::{boolean, chain, RankedPoset, RawPoset};
pub use subset::RankSubset;
