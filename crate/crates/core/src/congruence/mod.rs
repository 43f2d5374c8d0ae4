//! Finite-range checks of the proved congruences.
//!
//! Every check reads values through an [`Engine`], converts absolute EGF
//! subscripts to table indices, and returns a [`CongruenceReport`].

mod lemmas;
mod report;

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{is_prime, residue_mod, vp_or_infinite, BigRational};
use crate::sequence::{Engine, SeqParams};

pub use lemmas::{verify_lemma_series, verify_lemma_xm};
use report::ReportBuilder;
pub use report::{CongruenceReport, Failure, Status, TheoremId, MAX_WITNESSES};

/// Inclusive range of table indices.
pub type IndexRange = RangeInclusive<usize>;

/// The extra exponent in the main congruence: one more power of p when j = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaExponent {
    pub j: u64,
    pub delta: u32,
}

impl DeltaExponent {
    pub fn of(j: u64) -> Self {
        Self {
            j,
            delta: u32::from(j == 0),
        }
    }
}

/// Table index of an absolute subscript. A subscript off the step is a
/// caller bug, not a data condition.
fn table_index(subscript: u64, step: u64) -> usize {
    assert!(
        subscript.is_multiple_of(step),
        "subscript {subscript} is not a multiple of the step {step}"
    );
    (subscript / step) as usize
}

fn pow_u64(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::InvalidParams(format!("{p}^{e} overflows")))
}

fn range_label(range: &IndexRange) -> String {
    format!("n={}..{}", range.start(), range.end())
}

fn nonempty(range: &IndexRange) -> Result<()> {
    if range.is_empty() {
        Err(Error::InvalidParams("empty index range".into()))
    } else {
        Ok(())
    }
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Residue for witness output; falls back to the raw rational when the value
/// is not p-integral.
fn residue_text(x: &BigRational, p: u64, e: u32) -> String {
    let modulus = BigInt::from(p).pow(e);
    match residue_mod(x, &modulus, p) {
        Ok(r) => r.to_string(),
        Err(_) => crate::exact::format_rational(x),
    }
}

fn at_least(x: &BigRational, p: u64, e: u32) -> bool {
    vp_or_infinite(x, p).is_none_or(|v| v >= i64::from(e))
}

/// `v_p(E_{pn} + E_{pn+p^r})` for the `(p, j)` sequence, `None` when the sum
/// vanishes.
pub fn anti_period_valuation(engine: &Engine, p: u64, j: u64, r: u32, n: usize) -> Result<Option<i64>> {
    let params = SeqParams::new(p, j)?;
    let a = p * n as u64;
    let b = a + pow_u64(p, r)?;
    let sum = engine.euler_number(params, table_index(a, p)) + engine.euler_number(params, table_index(b, p));
    Ok(vp_or_infinite(&sum, p))
}

/// `v_p(E_{pn} + E_{pn+p^r}) >= r + δ(j)` for odd primes p and `0 <= j < p`.
pub fn check_main_theorem(engine: &Engine, p: u64, j: u64, r: u32, n_range: IndexRange) -> Result<CongruenceReport> {
    require_odd_prime(p)?;
    if j >= p {
        return Err(Error::InvalidParams(format!("j={j} must lie in 0..{p}")));
    }
    if r == 0 {
        return Err(Error::InvalidParams("r must be positive".into()));
    }
    nonempty(&n_range)?;
    let params = SeqParams::new(p, j)?;
    let shift = pow_u64(p, r)?;
    let e = r + DeltaExponent::of(j).delta;
    let mut out = ReportBuilder::new(
        TheoremId::MainTheorem,
        format!("p={p} j={j} r={r} {}", range_label(&n_range)),
    );
    for n in n_range {
        let a = p * n as u64;
        let sum =
            engine.euler_number(params, table_index(a, p)) + engine.euler_number(params, table_index(a + shift, p));
        out.record(at_least(&sum, p, e), || Failure {
            params: format!("n={n}"),
            lhs: residue_text(&sum, p, e),
            rhs: "0".into(),
        });
    }
    Ok(out.finish())
}

/// Lehmer numbers: `W_{3n} ≡ W_{3m} (mod 3^{k+1})` whenever
/// `3n ≡ 3m (mod 2·3^k)`. Pairs are table indices.
pub fn check_komatsu_liu(engine: &Engine, k: u32, pairs: &[(usize, usize)]) -> Result<CongruenceReport> {
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    if pairs.is_empty() {
        return Err(Error::InvalidParams("no pairs given".into()));
    }
    let modulus = 2 * pow_u64(3, k)?;
    for &(n, m) in pairs {
        if (3 * n as u64) % modulus != (3 * m as u64) % modulus {
            return Err(Error::HypothesisNotSatisfied(format!("3·{n} ≢ 3·{m} (mod {modulus})")));
        }
    }
    let params = SeqParams::of(3, 0);
    let e = k + 1;
    let mut out = ReportBuilder::new(TheoremId::KomatsuLiu, format!("k={k} pairs={}", pairs.len()));
    for &(n, m) in pairs {
        let a = engine.euler_number(params, n);
        let b = engine.euler_number(params, m);
        out.record(at_least(&(&a - &b), 3, e), || Failure {
            params: format!("(n,m)=({n},{m})"),
            lhs: residue_text(&a, 3, e),
            rhs: residue_text(&b, 3, e),
        });
    }
    Ok(out.finish())
}

fn epsilon_23(p: u64) -> u32 {
    u32::from(p == 2 || p == 3)
}

/// `E^{(p^k m,0)}[n] ≡ E^{(p^{k-1} m,0)}[n] (mod p^{3k-ε})`, ε = 1 for p ≤ 3.
pub fn check_gessel(engine: &Engine, p: u64, m: u64, k: u32, n_range: IndexRange) -> Result<CongruenceReport> {
    crate::exact::require_prime(p)?;
    if m == 0 || k == 0 {
        return Err(Error::InvalidParams("m and k must be positive".into()));
    }
    nonempty(&n_range)?;
    let lower = SeqParams::new(pow_u64(p, k - 1)? * m, 0)?;
    let upper = SeqParams::new(pow_u64(p, k)? * m, 0)?;
    let e = 3 * k - epsilon_23(p);
    let mut out = ReportBuilder::new(
        TheoremId::Gessel,
        format!("p={p} m={m} k={k} {}", range_label(&n_range)),
    );
    for n in n_range {
        let a = engine.euler_number(upper, n);
        let b = engine.euler_number(lower, n);
        out.record(at_least(&(&a - &b), p, e), || Failure {
            params: format!("n={n}"),
            lhs: residue_text(&a, p, e),
            rhs: residue_text(&b, p, e),
        });
    }
    Ok(out.finish())
}

/// `v_p(E^{(p^k,0)}[n + p^{r-1}] + E^{(p^k,0)}[n]) >= r + 1` for
/// `1 <= r <= 5 - ε`, ε = 1 only for p = 3.
pub fn check_prime_power(engine: &Engine, p: u64, k: u32, r: u32, n_range: IndexRange) -> Result<CongruenceReport> {
    require_odd_prime(p)?;
    if k == 0 {
        return Err(Error::InvalidParams("k must be positive".into()));
    }
    let r_max = 5 - u32::from(p == 3);
    if r == 0 || r > r_max {
        return Err(Error::InvalidParams(format!("r must lie in 1..={r_max} for p={p}")));
    }
    nonempty(&n_range)?;
    let step = pow_u64(p, k)?;
    let params = SeqParams::new(step, 0)?;
    let offset = pow_u64(p, r - 1)?;
    let e = r + 1;
    let mut out = ReportBuilder::new(
        TheoremId::PrimePower,
        format!("p={p} k={k} r={r} {}", range_label(&n_range)),
    );
    for n in n_range {
        let a = step * n as u64;
        let b = step * (n as u64 + offset);
        let sum = engine.euler_number(params, table_index(a, step)) + engine.euler_number(params, table_index(b, step));
        out.record(at_least(&sum, p, e), || Failure {
            params: format!("n={n}"),
            lhs: residue_text(&sum, p, e),
            rhs: "0".into(),
        });
    }
    Ok(out.finish())
}

/// `E^{(4,0)}_{4n + 2^{r+1}} ≡ E^{(4,0)}_{4n} (mod 2^r)` from n = 0.
pub fn check_special_40(engine: &Engine, r: u32, n_range: IndexRange) -> Result<CongruenceReport> {
    if r == 0 {
        return Err(Error::InvalidParams("r must be positive".into()));
    }
    nonempty(&n_range)?;
    let params = SeqParams::of(4, 0);
    let shift = pow_u64(2, r + 1)?;
    let mut out = ReportBuilder::new(TheoremId::Special40, format!("r={r} {}", range_label(&n_range)));
    for n in n_range {
        let a = 4 * n as u64;
        let lhs = engine.euler_number(params, table_index(a + shift, 4));
        let rhs = engine.euler_number(params, table_index(a, 4));
        out.record(at_least(&(&lhs - &rhs), 2, r), || Failure {
            params: format!("n={n}"),
            lhs: residue_text(&lhs, 2, r),
            rhs: residue_text(&rhs, 2, r),
        });
    }
    Ok(out.finish())
}

/// Eventual congruence `E^{(6,0)}_{6n + 2·3^r} ≡ E^{(6,0)}_{6n} (mod 3^r)`.
///
/// Returns the least n0 after which every instance up to `n_max` holds. A
/// window shorter than four offsets, or a stable tail shorter than two, is
/// inconclusive; a failure at the last checkable index is a failure.
pub fn check_special_60(engine: &Engine, r: u32, n_max: usize) -> Result<(Option<usize>, CongruenceReport)> {
    if r == 0 {
        return Err(Error::InvalidParams("r must be positive".into()));
    }
    let params = SeqParams::of(6, 0);
    let offset = table_index(2 * pow_u64(3, r)?, 6);
    let label = format!("r={r} n_max={n_max}");
    if n_max + 1 < 4 * offset {
        return Ok((
            None,
            ReportBuilder::new(TheoremId::Special60, label).finish_with(Status::Inconclusive),
        ));
    }
    let last = n_max - offset;
    let values = engine.compute_table(params, n_max).values;
    let holds: Vec<bool> = (0..=last)
        .map(|n| at_least(&(&values[n + offset] - &values[n]), 3, r))
        .collect();
    if !holds[last] {
        let mut out = ReportBuilder::new(TheoremId::Special60, label);
        out.record(false, || Failure {
            params: format!("n={last}"),
            lhs: residue_text(&values[last + offset], 3, r),
            rhs: residue_text(&values[last], 3, r),
        });
        return Ok((None, out.finish()));
    }
    let n0 = holds.iter().rposition(|ok| !ok).map_or(0, |i| i + 1);
    let mut out = ReportBuilder::new(TheoremId::Special60, format!("{label} n0={n0}"));
    for _ in n0..=last {
        out.record(true, || unreachable!());
    }
    let report = if last + 1 - n0 < 2 * offset {
        out.finish_with(Status::Inconclusive)
    } else {
        out.finish()
    };
    Ok((Some(n0), report))
}
