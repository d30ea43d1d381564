//! Gröbner bases over path algebras of quivers.
//!
//! A quiver's path algebra `KQ` has the paths of the quiver as a basis and
//! concatenation (or zero) as multiplication. This crate provides admissible
//! path orders, one- and two-sided division, interreduction, overlap and
//! S-polynomial computation, and Buchberger completion with explicit caps for
//! ideals whose Gröbner basis is infinite.

pub mod algebra;
pub mod dsl;
pub mod error;
pub mod groebner;
pub mod order;
pub mod quiver;
pub mod report;
pub mod rewrite;

pub use algebra::{ratio, scalar, Polynomial, Scalar, Term};
pub use error::{Error, Result};
pub use groebner::{
    buchberger, ideal_member, is_groebner, membership_oracle, overlaps, s_polynomial, Certificate,
    CompletionOptions, GbResult, GbStatus, GeneratorSet, Limits, Membership, OracleVerdict,
    Overlap, OverlapWitness,
};
pub use order::{admissibility_report, AdmissibilityReport, OrderKind, PathOrder};
pub use quiver::{
    factor_occurrences, left_divisor_witness, right_divisor_witness, ArrowRef, Path, Quiver,
    VertexId,
};
pub use rewrite::{
    divide_left, divide_right, divide_twosided, reduce_total, set_reduce, DivisionOptions,
    QuotientTerm, Reducer, Side, StandardRepresentation,
};
