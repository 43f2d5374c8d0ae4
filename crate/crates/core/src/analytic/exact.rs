use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, format_rational, BigRational};
use crate::sequence::{Engine, SeqParams};

/// `coefficient · π^degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiPolynomial {
    pub degree: u64,
    pub coefficient: BigRational,
}

impl fmt::Display for PiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·π^{}", format_rational(&self.coefficient), self.degree)
    }
}

fn serialize_rational<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

fn int(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn pow2(e: i64) -> BigRational {
    let p = int(BigInt::one() << e.unsigned_abs());
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn sign(odd: bool) -> BigRational {
    if odd {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// `B_n` with `B_1 = -1/2`, read off the `(1,1)` sequence.
pub fn bernoulli(engine: &Engine, n: usize) -> BigRational {
    engine.euler_number(SeqParams::of(1, 1), n)
}

fn require_even(k: u64) -> Result<()> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidParams(format!("k={k} must be even and at least 2")));
    }
    Ok(())
}

/// `ζ(k) = (-1)^{k/2+1} (2π)^k B_k / (2 k!)` for even `k >= 2`.
pub fn zeta_even(engine: &Engine, k: u64) -> Result<PiPolynomial> {
    require_even(k)?;
    let b = bernoulli(engine, k as usize);
    let coefficient = sign((k / 2).is_multiple_of(2)) * pow2(k as i64) * b / (int(2) * int(factorial(k)));
    Ok(PiPolynomial { degree: k, coefficient })
}

/// `λ(k) = (1 - 2^{-k}) ζ(k)`.
pub fn lambda_even(engine: &Engine, k: u64) -> Result<PiPolynomial> {
    let z = zeta_even(engine, k)?;
    Ok(PiPolynomial {
        degree: k,
        coefficient: (BigRational::one() - pow2(-(k as i64))) * z.coefficient,
    })
}

fn binomial_sum(engine: &Engine, params: SeqParams, top: u64, terms: u64) -> BigRational {
    (0..terms).fold(BigRational::zero(), |acc, m| {
        acc + int(binomial(top, (params.step * m) as i64)) * engine.euler_number(params, m as usize)
    })
}

macro_rules! named_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [Self] = &[$(Self::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self { $(Self::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str() == s)
                    .ok_or_else(|| Error::InvalidParams(format!("unknown identity {s:?}")))
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }
    };
}

named_enum! {
    /// The eight zeta/lambda displays, named by target and source sequence.
    ZetaFormulaId {
        Lambda4nVia40 => "lambda_4n_via_40",
        Lambda4n2Via40 => "lambda_4n2_via_40",
        Zeta4nVia40 => "zeta_4n_via_40",
        Zeta4n2Via40 => "zeta_4n2_via_40",
        Zeta4nVia42 => "zeta_4n_via_42",
        Zeta4n2Via42 => "zeta_4n2_via_42",
        Zeta6nVia63 => "zeta_6n_via_63",
        Zeta6n4Via63 => "zeta_6n4_via_63",
    }
}

named_enum! {
    /// The six Bernoulli displays.
    BernoulliIdentityId {
        B4nVia40 => "b_4n_via_40",
        B4n2Via40 => "b_4n2_via_40",
        B4nVia42 => "b_4n_via_42",
        B4n2Via42 => "b_4n2_via_42",
        B6nVia63 => "b_6n_via_63",
        B6n4Via63 => "b_6n4_via_63",
    }
}

/// Shared shape of both families of displays: `factor · Σ_{m<terms}
/// C(top, Nm) E^{(N,j)}_{Nm}` compared against a value of weight `degree`.
struct Display {
    lambda: bool,
    degree: u64,
    params: SeqParams,
    top: u64,
    terms: u64,
    factor: BigRational,
}

impl ZetaFormulaId {
    fn display(self, n: u64) -> Display {
        use ZetaFormulaId::*;
        let s = sign(n.is_multiple_of(2));
        let ni = n as i64;
        let (lambda, degree, params, top, terms, factor) = match self {
            Lambda4nVia40 => (
                true,
                4 * n,
                (4, 0),
                4 * n - 1,
                n,
                pow2(-2 * ni) / (int(4) * int(factorial(4 * n - 1))),
            ),
            Lambda4n2Via40 => (
                true,
                4 * n - 2,
                (4, 0),
                4 * n - 3,
                n,
                pow2(-(2 * ni - 1)) / (int(4) * int(factorial(4 * n - 3))),
            ),
            Zeta4nVia40 => (
                false,
                4 * n,
                (4, 0),
                4 * n - 1,
                n,
                pow2(2 * ni) / (int(4) * int(factorial(4 * n - 1)) * (pow2(4 * ni) - int(1))),
            ),
            Zeta4n2Via40 => (
                false,
                4 * n - 2,
                (4, 0),
                4 * n - 3,
                n,
                pow2(2 * ni - 1) / (int(4) * int(factorial(4 * n - 3)) * (pow2(4 * ni - 2) - int(1))),
            ),
            Zeta4nVia42 => (
                false,
                4 * n,
                (4, 2),
                4 * n + 1,
                n + 1,
                pow2(2 * ni) / (int(4) * int(factorial(4 * n + 1))),
            ),
            Zeta4n2Via42 => (
                false,
                4 * n - 2,
                (4, 2),
                4 * n - 1,
                n,
                pow2(2 * ni - 1) / (int(4) * int(factorial(4 * n - 1))),
            ),
            Zeta6nVia63 => (
                false,
                6 * n,
                (6, 3),
                6 * n + 2,
                n + 1,
                pow2(6 * ni) / (int(6) * int(factorial(6 * n + 2))),
            ),
            Zeta6n4Via63 => (
                false,
                6 * n - 4,
                (6, 3),
                6 * n - 2,
                n,
                pow2(6 * ni - 4) / (int(6) * int(factorial(6 * n - 2))),
            ),
        };
        Display {
            lambda,
            degree,
            params: SeqParams::of(params.0, params.1),
            top,
            terms,
            factor: s * factor,
        }
    }
}

impl BernoulliIdentityId {
    /// Smallest admissible n for the display.
    pub fn min_n(self) -> u64 {
        match self {
            Self::B4nVia42 | Self::B6nVia63 => 0,
            _ => 1,
        }
    }

    fn display(self, n: u64) -> Display {
        use BernoulliIdentityId::*;
        let ni = n as i64;
        let even = n.is_multiple_of(2);
        let (degree, params, top, terms, factor) = match self {
            B4nVia40 => (
                4 * n,
                (4, 0),
                4 * n - 1,
                n,
                sign(!even) * int(2 * n) / (pow2(2 * ni) * (pow2(4 * ni) - int(1))),
            ),
            B4n2Via40 => (
                4 * n - 2,
                (4, 0),
                4 * n - 3,
                n,
                sign(even) * int(4 * n - 2) / (pow2(2 * ni) * (pow2(4 * ni - 2) - int(1))),
            ),
            B4nVia42 => (
                4 * n,
                (4, 2),
                4 * n + 1,
                n + 1,
                sign(!even) / (pow2(2 * ni + 1) * int(4 * n + 1)),
            ),
            B4n2Via42 => (
                4 * n - 2,
                (4, 2),
                4 * n - 1,
                n,
                sign(even) / (pow2(2 * ni) * int(4 * n - 1)),
            ),
            B6nVia63 => (
                6 * n,
                (6, 3),
                6 * n + 2,
                n + 1,
                BigRational::one() / int(3 * (6 * n + 1) * (6 * n + 2)),
            ),
            B6n4Via63 => (
                6 * n - 4,
                (6, 3),
                6 * n - 2,
                n,
                BigRational::one() / int(3 * (6 * n - 2) * (6 * n - 3)),
            ),
        };
        Display {
            lambda: false,
            degree,
            params: SeqParams::of(params.0, params.1),
            top,
            terms,
            factor,
        }
    }
}

/// Right-hand side of a zeta/lambda display for `n >= 1`.
pub fn formula_value(engine: &Engine, id: ZetaFormulaId, n: u64) -> Result<PiPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParams(format!("{id} needs n >= 1")));
    }
    let d = id.display(n);
    Ok(PiPolynomial {
        degree: d.degree,
        coefficient: d.factor * binomial_sum(engine, d.params, d.top, d.terms),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaCheck {
    pub formula_id: ZetaFormulaId,
    pub n: u64,
    pub degree: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs_coefficient: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs_coefficient: BigRational,
    pub equal: bool,
}

/// Compare `ζ(k)` or `λ(k)` with the display's right-hand side.
pub fn check_zeta_identity(engine: &Engine, id: ZetaFormulaId, n: u64) -> Result<ZetaCheck> {
    let rhs = formula_value(engine, id, n)?;
    let d = id.display(n);
    let lhs = if d.lambda {
        lambda_even(engine, d.degree)?
    } else {
        zeta_even(engine, d.degree)?
    };
    Ok(ZetaCheck {
        formula_id: id,
        n,
        degree: d.degree,
        equal: lhs == rhs,
        lhs_coefficient: lhs.coefficient,
        rhs_coefficient: rhs.coefficient,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BernoulliCheck {
    pub identity_id: BernoulliIdentityId,
    pub n: u64,
    pub index: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: BigRational,
    pub equal: bool,
}

pub fn check_bernoulli_identity(engine: &Engine, id: BernoulliIdentityId, n: u64) -> Result<BernoulliCheck> {
    if n < id.min_n() {
        return Err(Error::InvalidParams(format!("{id} needs n >= {}", id.min_n())));
    }
    let d = id.display(n);
    let lhs = bernoulli(engine, d.degree as usize);
    let rhs = d.factor * binomial_sum(engine, d.params, d.top, d.terms);
    Ok(BernoulliCheck {
        identity_id: id,
        n,
        index: d.degree,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}
