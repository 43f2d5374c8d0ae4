//! Congruential Euler numbers: exact computation, congruence verification,
//! eventual-period scans and the zeta/Bernoulli identities they satisfy.
//!
//! The numbers are the exponential Taylor coefficients of
//!
//! ```text
//!   ( sum_{n>=0} z^{Nn} / (Nn+j)! )^{-1}
//! ```
//!
//! and only indices that are multiples of `N` are ever nonzero. `(2,0)` gives
//! the Euler numbers, `(3,0)` the Lehmer numbers, `(N,0)` the generalized Euler
//! numbers and `(1,1)` the Bernoulli numbers.
//!
//! Layout:
//! - [`exact`]: valuations, binomials, residues and [`EgfSeries`].
//! - [`sequence`]: the memoizing recurrence [`Engine`], the series-inversion
//!   oracle and the text cache.
//! - [`congruence`]: mechanical checks of the proved congruences.
//! - [`conjecture`]: eventual-period detection and the residue-period scans.
//! - [`analytic`]: exact zeta/lambda/Bernoulli identities and the floating
//!   point zero/special-value/radius checks.
//! - [`cli`]: the `ceuler` command line.

pub mod analytic;
pub mod cli;
pub mod congruence;
pub mod conjecture;
pub mod error;
pub mod exact;
pub mod sequence;

pub use error::{Error, Result};
pub use exact::{BigInteger, BigRational, EgfSeries};
pub use sequence::{Engine, SeqParams, SeqTable};
