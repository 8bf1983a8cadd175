//! Exact Hermite polynomials, Wronskians, and the structural checks built
//! on them.

mod hermite;
mod identities;
mod mpeval;
mod potential;
mod wronskian;

pub use hermite::{hermite, hermite_table};
pub use identities::{
    check_duality, four_term_identity_check, four_term_rhs, three_term_identity_check,
    three_term_rhs, FourTermCoefficients,
};
pub use mpeval::{evaluate, evaluate_with_bound, MpPoly};
pub(crate) use mpeval::to_rug_integer;
pub use potential::{log_deriv2_potential, RationalFunction};
pub use wronskian::{
    determinant_cofactor, wronskian, wronskian_bareiss, wronskian_cofactor, wronskian_of_indices,
    wronskian_of_partition,
};
