//! Even zeta values and Bernoulli numbers from the `(4,0)`, `(4,2)` and
//! `(6,3)` sequences, checked exactly, plus a double-precision look at the
//! zeros of `H_{N,j}`.

mod exact;
mod numeric;

pub use exact::{
    bernoulli, check_bernoulli_identity, check_zeta_identity, formula_value, lambda_even, zeta_even, BernoulliCheck,
    BernoulliIdentityId, PiPolynomial, ZetaCheck, ZetaFormulaId,
};
pub use numeric::{
    check_special_values, count_zeros_in_disk, eval_h, expected_zero_count, grid_zero_search, lattice_distance,
    locate_zero, predicted_zero, ratio_radius, ComplexDouble, Family, LocatedZero, SpecialValueCheck, ZeroRecord,
};
