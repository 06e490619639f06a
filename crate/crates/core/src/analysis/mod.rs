//! Sign structure of the cd-index as executable checks.
//!
//! * [`limit`]: L-vectors of limit posets from an interval system, and the cd
//!   coefficients they induce.
//! * [`inequality`]: the two equivalent forms of the flag-number inequality.
//! * [`classify`]: which cd-words have coefficients bounded below by zero, with
//!   certificates, and located bad subwords for the rest.
//! * [`witness`]: Eulerian posets whose coefficient of a given bad word is
//!   driven down as the construction parameter grows.

pub mod classify;
pub mod inequality;
pub mod limit;
pub mod witness;

pub use classify::{
    classify_word, count_part1_words, nonneg_certificate, note_count_formula, Certificate,
    ClassTag, Witness, WitnessKind, WordClass,
};
pub use inequality::{inequality_f_form, inequality_l_form, valid_windows, InequalityWindow};
pub use limit::{d_position_system, limit_cd_coefficient, limit_l_vector, LimitLVector};
pub use witness::{negative_witness, BaseFamily, NegativeWitness};
