//! Truncated-series checks behind the mod 2^r and mod 3^r special cases.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::report::{CongruenceReport, Failure, ReportBuilder, TheoremId};
use super::{at_least, residue_text};
use crate::error::{Error, Result};
use crate::exact::{vp_or_infinite, BigRational, EgfSeries};

fn v_small(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Checks the closed forms for `X_m` built from `H = H_{2p,0}`:
///
/// * p = 2: `X_m = 1 - D_{2m}`, congruent mod `2^{v_2(2m)}` to
///   `2^{v_2(m)}(1 + T^2)` for even m and `1 + T` for odd m;
/// * p = 3: `X_m = (-1)^m (1 - D_{3m})`, congruent mod `3^{v_3(3m)}` to
///   `(1+T)(T-1)/(1+3T^2)` for even m and `(1-3T)(T-1)/(1+3T^2)` for odd m,
///
/// where `T = H^{(p)}/H` and `(1/H)^{(N)} = (-1)^N D_N / H`. Every
/// coefficient `0..=order` is compared.
pub fn verify_lemma_xm(p: u64, m: u64, order: usize) -> Result<CongruenceReport> {
    if p != 2 && p != 3 {
        return Err(Error::InvalidParams(format!("p must be 2 or 3, got {p}")));
    }
    if m == 0 {
        return Err(Error::InvalidParams("m must be positive".into()));
    }
    let step = 2 * p as usize;
    // Ten nonzero coefficients means reaching index 9·2p.
    if order < 9 * step {
        return Err(Error::InvalidParams(format!(
            "order {order} too small, need at least {}",
            9 * step
        )));
    }
    let big_n = (p * m) as usize;
    let h_long = EgfSeries::h_series(step, 0, order + big_n.max(p as usize));
    let inv_h = h_long.invert()?;
    let h = h_long.truncate(order);
    let t = h_long.derivative(p as usize).multiply(&inv_h.truncate(order));

    let mut d = h.multiply(&inv_h.derivative(big_n));
    if big_n % 2 == 1 {
        d = -&d;
    }
    let one = EgfSeries::one(order);
    let mut x = &one - &d;
    if p == 3 && m % 2 == 1 {
        x = -&x;
    }

    let (expected, e) = if p == 2 {
        let e = v_small(2 * m, 2);
        let form = if m.is_multiple_of(2) {
            let scale = BigRational::from_integer(BigInt::from(2u32).pow(v_small(m, 2)));
            (&one + &t.multiply(&t)).scale(&scale)
        } else {
            &one + &t
        };
        (form, e)
    } else {
        let e = v_small(3 * m, 3);
        let three = BigRational::from_integer(3.into());
        let denom = (&one + &t.multiply(&t).scale(&three)).invert()?;
        let left = if m.is_multiple_of(2) {
            &one + &t
        } else {
            &one - &t.scale(&three)
        };
        let form = left.multiply(&(&t - &one)).multiply(&denom);
        (form, e)
    };

    let mut out = ReportBuilder::new(TheoremId::LemmaXm, format!("p={p} m={m} order={order} mod {p}^{e}"));
    for n in 0..=order {
        let a = x.coefficient(n);
        let b = expected.coefficient(n);
        out.record(at_least(&(a - b), p, e), || Failure {
            params: format!("coefficient {n}"),
            lhs: residue_text(a, p, e),
            rhs: residue_text(b, p, e),
        });
    }
    Ok(out.finish())
}

/// Valuation facts for `H = H_{6,0}` up to `z^{6 n_max}`:
///
/// * (a) `(H''')^2 - H^2` has coefficient `-1` at `z^0`,
///   `-(-1)^n 2·3^{3n-1}` at `z^{6n}` and zero elsewhere;
/// * (b) `c = H^3 + 3H(H''')^2` has `c_0 = 1` and `v_3(c_n) = 3n - 1`;
/// * (c) `d = 1/c` has `v_3(d_n) >= 2n`.
pub fn verify_lemma_series(n_max: usize) -> Result<CongruenceReport> {
    if n_max < 2 {
        return Err(Error::InvalidParams("n_max must be at least 2".into()));
    }
    let order = 6 * n_max;
    let h3 = EgfSeries::h_series(6, 0, order + 3).derivative(3);
    let h = EgfSeries::h_series(6, 0, order);
    let h3_sq = h3.multiply(&h3);
    let p_series = &h3_sq - &h.multiply(&h);
    let three = BigRational::from_integer(3.into());
    let c = &h.pow(3) + &h.multiply(&h3_sq).scale(&three);
    let d = c.invert()?;

    let mut out = ReportBuilder::new(TheoremId::LemmaSeries, format!("n_max={n_max}"));
    for i in 0..=order {
        let want = if i == 0 {
            -BigRational::one()
        } else if i % 6 == 0 {
            let n = (i / 6) as u32;
            let mag = BigInt::from(2) * BigInt::from(3).pow(3 * n - 1);
            BigRational::from_integer(if n.is_multiple_of(2) { -mag } else { mag })
        } else {
            BigRational::zero()
        };
        let got = p_series.coefficient(i);
        out.record(*got == want, || Failure {
            params: format!("(a) coefficient {i}"),
            lhs: crate::exact::format_rational(got),
            rhs: crate::exact::format_rational(&want),
        });
    }

    out.record(c.coefficient(0).is_one(), || Failure {
        params: "(b) n=0".into(),
        lhs: crate::exact::format_rational(c.coefficient(0)),
        rhs: "1/1".into(),
    });
    for n in 1..=n_max {
        let v = vp_or_infinite(c.coefficient(6 * n), 3);
        let want = 3 * n as i64 - 1;
        out.record(v == Some(want), || Failure {
            params: format!("(b) n={n}"),
            lhs: v.map_or("inf".into(), |v| format!("v3={v}")),
            rhs: format!("v3={want}"),
        });
    }
    for n in 1..=n_max {
        let v = vp_or_infinite(d.coefficient(6 * n), 3);
        let want = 2 * n as i64;
        out.record(v.is_none_or(|v| v >= want), || Failure {
            params: format!("(c) n={n}"),
            lhs: v.map_or("inf".into(), |v| format!("v3={v}")),
            rhs: format!("v3>={want}"),
        });
    }
    Ok(out.finish())
}
