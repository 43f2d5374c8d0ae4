//! Empirical scans for eventual periodicity of `E^{(mp,j)}_{mpn} mod p^r`.
//!
//! Results are observations on a finite window and never a proof.

mod appendix;
mod emit;
mod period;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{format_rational, is_prime, residue_mod};
use crate::sequence::{Engine, SeqParams};

pub use appendix::{appendix_b_rows, appendix_b_table2, compare_appendix_b, AppendixComparison, AppendixRow, Variant};
pub use emit::{emit_outcomes, emit_table, Format};
pub use period::{detect_eventual_period, is_minimal_period, PeriodDetection};

/// `(p, m, j, r)` for one scan. The sequence is `(mp, j)` read mod `p^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ScanParams {
    pub p: u64,
    pub m: u64,
    pub j: u64,
    pub r: u32,
}

impl ScanParams {
    pub fn new(p: u64, m: u64, j: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || (m != 2 && !(p - 1).is_multiple_of(m)) {
            return Err(Error::InvalidParams(format!(
                "m={m} must divide p-1={} or equal 2",
                p - 1
            )));
        }
        if j >= m * p {
            return Err(Error::InvalidParams(format!("j={j} must lie in 0..{}", m * p)));
        }
        if r == 0 {
            return Err(Error::InvalidParams("r must be positive".into()));
        }
        let s = Self { p, m, j, r };
        s.modulus_u64()?;
        s.conjecture_period()?;
        Ok(s)
    }

    pub fn mp(&self) -> u64 {
        self.m * self.p
    }

    pub fn seq(&self) -> SeqParams {
        SeqParams::of(self.mp(), self.j)
    }

    /// `q = lcm(2, p - 1)`.
    pub fn q(&self) -> u64 {
        2u64.lcm(&(self.p - 1))
    }

    fn modulus_u64(&self) -> Result<u64> {
        self.p
            .checked_pow(self.r)
            .ok_or_else(|| Error::InvalidParams(format!("{}^{} overflows", self.p, self.r)))
    }

    /// `q p^r` in absolute subscript units.
    pub fn conjecture_period(&self) -> Result<u64> {
        self.q()
            .checked_mul(self.modulus_u64()?)
            .ok_or_else(|| Error::InvalidParams("conjectured period overflows".into()))
    }

    /// Largest period searched, in table units. `mp` always divides `q p^r`
    /// because `m | q` and `p | p^r`.
    pub fn max_period(&self) -> usize {
        (self.conjecture_period().expect("validated") / self.mp()) as usize
    }

    pub fn default_n_max(&self) -> usize {
        (3 * self.max_period()).max(30)
    }
}

/// A reproduced row: n0 in table units, period in absolute subscript units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodScanResult {
    pub p: u64,
    pub m: u64,
    pub j: u64,
    pub r: u32,
    pub n0: usize,
    pub period_index: u64,
    pub cycle: Vec<u64>,
    pub conjecture_period: u64,
    pub divides_conjecture: bool,
    pub n_max: usize,
}

impl PeriodScanResult {
    pub fn params(&self) -> ScanParams {
        ScanParams {
            p: self.p,
            m: self.m,
            j: self.j,
            r: self.r,
        }
    }

    pub fn mp(&self) -> u64 {
        self.m * self.p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ScanOutcome {
    Periodic(PeriodScanResult),
    /// The window was long enough and no period up to `q p^r` fits.
    NoPeriod {
        params: ScanParams,
        n_max: usize,
    },
    /// The window is shorter than three maximal periods and nothing was found.
    Inconclusive {
        params: ScanParams,
        n_max: usize,
    },
    /// A value had p in its denominator, contradicting p-integrality.
    IntegralityFailed {
        params: ScanParams,
        index: usize,
        value: String,
    },
}

impl ScanOutcome {
    pub fn params(&self) -> ScanParams {
        match self {
            Self::Periodic(res) => res.params(),
            Self::NoPeriod { params, .. }
            | Self::Inconclusive { params, .. }
            | Self::IntegralityFailed { params, .. } => *params,
        }
    }

    pub fn periodic(&self) -> Option<&PeriodScanResult> {
        match self {
            Self::Periodic(res) => Some(res),
            _ => None,
        }
    }
}

/// Residues of `E^{(mp,j)}_{mpn} mod p^r` for `n = 0..=n_max`, or the first
/// index whose value is not p-integral.
pub fn residues(engine: &Engine, params: ScanParams, n_max: usize) -> std::result::Result<Vec<u64>, (usize, String)> {
    let modulus = BigInt::from(params.p).pow(params.r);
    let table = engine.compute_table(params.seq(), n_max);
    table
        .values
        .iter()
        .enumerate()
        .map(|(n, x)| match residue_mod(x, &modulus, params.p) {
            Ok(res) => Ok(u64::try_from(res).expect("residue below p^r fits")),
            Err(_) => Err((n, format_rational(x))),
        })
        .collect()
}

/// Scan one parameter tuple. `n_max` defaults to
/// [`ScanParams::default_n_max`].
pub fn scan_conjecture(engine: &Engine, params: ScanParams, n_max: Option<usize>) -> Result<ScanOutcome> {
    let params = ScanParams::new(params.p, params.m, params.j, params.r)?;
    let n_max = n_max.unwrap_or_else(|| params.default_n_max());
    let seq = match residues(engine, params, n_max) {
        Ok(seq) => seq,
        Err((index, value)) => {
            return Ok(ScanOutcome::IntegralityFailed { params, index, value });
        }
    };
    Ok(match detect_eventual_period(&seq, params.max_period()) {
        PeriodDetection::Found { n0, period } => {
            debug_assert!(is_minimal_period(&seq, n0, period));
            let period_index = period as u64 * params.mp();
            let conjecture_period = params.conjecture_period()?;
            ScanOutcome::Periodic(PeriodScanResult {
                p: params.p,
                m: params.m,
                j: params.j,
                r: params.r,
                n0,
                period_index,
                cycle: seq[n0..n0 + period].to_vec(),
                conjecture_period,
                divides_conjecture: conjecture_period % period_index == 0,
                n_max,
            })
        }
        PeriodDetection::NoPeriod => ScanOutcome::NoPeriod { params, n_max },
        PeriodDetection::Inconclusive => ScanOutcome::Inconclusive { params, n_max },
    })
}

/// Scan every tuple in parallel; the output is sorted by `(p, mp, j, r)`.
pub fn scan_grid(engine: &Engine, grid: &[ScanParams], n_max: Option<usize>) -> Vec<Result<ScanOutcome>> {
    let mut out: Vec<(ScanParams, Result<ScanOutcome>)> = grid
        .par_iter()
        .map(|&params| (params, scan_conjecture(engine, params, n_max)))
        .collect();
    out.sort_by_key(|(s, _)| sort_key(s));
    out.into_iter().map(|(_, res)| res).collect()
}

pub(crate) fn sort_key(s: &ScanParams) -> (u64, u64, u64, u32) {
    (s.p, s.mp(), s.j, s.r)
}
