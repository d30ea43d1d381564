//! Overlaps, S-polynomials, Buchberger completion, certification and
//! membership.

mod certify;
mod completion;
mod oracle;
mod overlap;

pub use certify::{ideal_member, is_groebner, Ambiguity, Certificate, Failure, Membership};
pub use completion::{
    buchberger, CompletionOptions, GbResult, GbStatus, GeneratorSet, Limits, TraceEntry,
};
pub use oracle::{membership_oracle, OracleVerdict};
pub use overlap::{
    inclusion_polynomial, overlap_target, overlap_witnesses, overlaps, s_polynomial,
    s_polynomial_left, s_polynomial_right, Overlap, OverlapWitness,
};
