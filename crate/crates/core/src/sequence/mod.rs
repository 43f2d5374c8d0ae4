//! The sequences `E_{Nn}^{(N,j)}` computed by the convolution recurrence
//!
//! ```text
//!   sum_{m=0}^{n} C(Nn+j, Nm) E_{Nm} = j!  (n = 0),  0  (n > 0)
//! ```
//!
//! with an independent series-inversion oracle and a plain-text cache.

mod cache;
mod oracle;

pub use cache::{cache_file_params, cache_load, cache_path, cache_store};
pub use oracle::oracle_table;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, BigRational};

/// The pair `(N, j)`. `j >= N` is accepted (`(1,1)` gives Bernoulli numbers).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SeqParams {
    /// `N`, the step between nonzero coefficients.
    pub step: u64,
    pub j: u64,
}

impl SeqParams {
    pub fn new(step: u64, j: u64) -> Result<Self> {
        if step == 0 {
            return Err(Error::InvalidParams("N must be at least 1".into()));
        }
        Ok(Self { step, j })
    }

    /// Panicking constructor for literals known to be valid.
    pub const fn of(step: u64, j: u64) -> Self {
        assert!(step >= 1);
        Self { step, j }
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.step, self.j)
    }
}

/// `values[n] = E_{Nn}^{(N,j)}` for `n = 0..=max_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqTable {
    pub params: SeqParams,
    pub values: Vec<BigRational>,
}

impl SeqTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// Value at table index `n`, i.e. at EGF subscript `N n`.
    pub fn get(&self, n: usize) -> &BigRational {
        &self.values[n]
    }

    /// Coefficient at an absolute EGF subscript: zero off the multiples of N.
    pub fn at_subscript(&self, subscript: u64) -> Option<BigRational> {
        if !subscript.is_multiple_of(self.params.step) {
            return Some(BigRational::zero());
        }
        self.values.get((subscript / self.params.step) as usize).cloned()
    }

    /// Re-check the defining convolution for every stored row.
    pub fn satisfies_recurrence(&self) -> bool {
        let SeqParams { step, j } = self.params;
        self.values.iter().enumerate().all(|(n, _)| {
            let n = n as u64;
            let top = step * n + j;
            let sum: BigRational = (0..=n)
                .map(|m| &self.values[m as usize] * BigRational::from_integer(binomial(top, (step * m) as i64)))
                .sum();
            if n == 0 {
                sum == BigRational::from_integer(factorial(j))
            } else {
                sum.is_zero()
            }
        })
    }
}

/// Append-only state for one `(N, j)`.
///
/// Besides the values it keeps every value multiplied by the lcm of all
/// denominators seen so far, so a new row is an integer dot product followed by
/// a single reduction.
#[derive(Debug)]
struct Column {
    params: SeqParams,
    values: Vec<BigRational>,
    lcm: BigInt,
    scaled: Vec<BigInt>,
}

impl Column {
    fn new(params: SeqParams) -> Self {
        let mut col = Self {
            params,
            values: Vec::new(),
            lcm: BigInt::one(),
            scaled: Vec::new(),
        };
        col.push(BigRational::from_integer(factorial(params.j)));
        col
    }

    fn push(&mut self, value: BigRational) {
        let den = value.denom();
        if !den.is_one() {
            let factor = den / self.lcm.gcd(den);
            if !factor.is_one() {
                self.lcm *= &factor;
                for s in &mut self.scaled {
                    *s *= &factor;
                }
            }
        }
        self.scaled.push(value.numer() * (&self.lcm / value.denom()));
        self.values.push(value);
    }

    fn extend_to(&mut self, n_max: usize) {
        let SeqParams { step, j } = self.params;
        for n in self.values.len()..=n_max {
            let n = n as u64;
            let top = step * n + j;
            // C(top, N m) stepped along m, accumulated against the scaled values
            let mut c = BigInt::one();
            let mut acc = BigInt::zero();
            for m in 0..n {
                if m > 0 {
                    let lo = step * (m - 1);
                    let num: BigInt = (0..step).map(|i| BigInt::from(top - lo - i)).product();
                    let den: BigInt = (1..=step).map(|i| BigInt::from(lo + i)).product();
                    c = c * num / den;
                }
                acc += &c * &self.scaled[m as usize];
            }
            let den = &self.lcm * binomial(top, j as i64);
            self.push(-BigRational::new(acc, den));
        }
    }
}

/// Memoizing calculator shared across checks. One lock per `(N, j)`, so
/// distinct sequences extend in parallel while a single sequence is built
/// sequentially.
#[derive(Debug, Default)]
pub struct Engine {
    columns: Mutex<HashMap<SeqParams, Arc<Mutex<Column>>>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    fn column(&self, params: SeqParams) -> Arc<Mutex<Column>> {
        let mut map = self.columns.lock().expect("engine lock poisoned");
        map.entry(params)
            .or_insert_with(|| Arc::new(Mutex::new(Column::new(params))))
            .clone()
    }

    /// `E_{Nn}^{(N,j)}`.
    pub fn euler_number(&self, params: SeqParams, n: usize) -> BigRational {
        let col = self.column(params);
        let mut col = col.lock().expect("column lock poisoned");
        col.extend_to(n);
        col.values[n].clone()
    }

    /// Table for `n = 0..=n_max`, reusing whatever prefix is already known.
    pub fn compute_table(&self, params: SeqParams, n_max: usize) -> SeqTable {
        let col = self.column(params);
        let mut col = col.lock().expect("column lock poisoned");
        col.extend_to(n_max);
        SeqTable {
            params,
            values: col.values[..=n_max].to_vec(),
        }
    }

    /// Coefficient at an absolute subscript; zero off the multiples of N.
    pub fn coefficient(&self, params: SeqParams, subscript: u64) -> BigRational {
        if !subscript.is_multiple_of(params.step) {
            BigRational::zero()
        } else {
            self.euler_number(params, (subscript / params.step) as usize)
        }
    }

    /// Every `(N, j)` with at least one memoized entry, sorted.
    pub fn memoized(&self) -> Vec<SeqParams> {
        let map = self.columns.lock().expect("engine lock poisoned");
        let mut out: Vec<SeqParams> = map.keys().copied().collect();
        out.sort();
        out
    }

    /// Number of entries already memoized for `params`.
    pub fn known_len(&self, params: SeqParams) -> usize {
        let map = self.columns.lock().expect("engine lock poisoned");
        map.get(&params)
            .map(|c| c.lock().expect("column lock poisoned").values.len())
            .unwrap_or(0)
    }

    /// Adopt a previously computed table (e.g. from the cache) when it is
    /// longer than what is memoized. The last row is re-checked against the
    /// recurrence before the table is accepted.
    pub fn seed(&self, table: &SeqTable) -> Result<()> {
        let col = self.column(table.params);
        let mut col = col.lock().expect("column lock poisoned");
        if table.values.len() <= col.values.len() {
            return Ok(());
        }
        let mut fresh = Column::new(table.params);
        if fresh.values[0] != table.values[0] {
            return Err(Error::InvalidParams(format!(
                "seed table for {} does not start with j!",
                table.params
            )));
        }
        let last = table.values.len() - 1;
        for v in &table.values[1..last] {
            fresh.push(v.clone());
        }
        if last > 0 {
            fresh.extend_to(last);
            if fresh.values[last] != table.values[last] {
                return Err(Error::InvalidParams(format!(
                    "seed table for {} fails the recurrence at n={last}",
                    table.params
                )));
            }
        }
        *col = fresh;
        Ok(())
    }
}

/// One-shot table computation without shared memoization.
pub fn compute_table(params: SeqParams, n_max: usize) -> SeqTable {
    Engine::new().compute_table(params, n_max)
}
