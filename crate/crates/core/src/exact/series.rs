use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::BigRational;
use crate::error::{Error, Result};

/// Truncated exponential generating function `sum_{n<=T} a_n z^n / n!`.
///
/// Coefficients are the EGF coefficients `a_n`, never plain power-series
/// coefficients, so every product carries binomial weights. Binary operations
/// on series of different orders truncate to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<BigRational>,
}

impl EgfSeries {
    /// Series with coefficients `a_0..=a_T`. Panics on an empty vector.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        Self::new((0..=order).map(f).collect())
    }

    pub fn from_integers<I: Into<BigInt>>(coeffs: impl IntoIterator<Item = I>) -> Self {
        Self::new(
            coeffs
                .into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| BigRational::zero())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `e^z`: every EGF coefficient is 1.
    pub fn exp(order: usize) -> Self {
        Self::from_fn(order, |_| BigRational::one())
    }

    /// `z` itself, i.e. `a_1 = 1`.
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigRational::one();
        }
        s
    }

    /// `H_{N,j}(z) = sum_n z^{Nn+j} / (Nn+j)!`: EGF coefficient 1 at every
    /// index `i >= j` with `i ≡ j (mod N)`. `j >= N` is allowed.
    pub fn h_series(step: usize, j: usize, order: usize) -> Self {
        assert!(step >= 1);
        Self::from_fn(order, |i| {
            if i >= j && (i - j).is_multiple_of(step) {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    /// Truncation order `T`; the series holds `T + 1` coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BigRational> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// EGF product: `c_n = sum_m C(n,m) a_m b_{n-m}`.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        // Clear denominators once so the inner loop is pure integer work.
        let (a, da) = scaled_integers(&self.coeffs[..=order]);
        let (b, db) = scaled_integers(&other.coeffs[..=order]);
        let den = da * db;
        let a_nz: Vec<usize> = (0..=order).filter(|&i| !a[i].is_zero()).collect();

        let mut row = vec![BigInt::one()];
        let mut out = Vec::with_capacity(order + 1);
        for n in 0..=order {
            if n > 0 {
                next_binomial_row(&mut row);
            }
            let mut acc = BigInt::zero();
            for &m in a_nz.iter().take_while(|&&m| m <= n) {
                let bm = &b[n - m];
                if !bm.is_zero() {
                    acc += &row[m] * &a[m] * bm;
                }
            }
            out.push(BigRational::new(acc, den.clone()));
        }
        Self::new(out)
    }

    /// Multiplicative inverse to the same order. Requires `a_0 != 0`.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let order = self.order();
        let (a, da) = scaled_integers(&self.coeffs);
        let a_nz: Vec<usize> = (1..=order).filter(|&i| !a[i].is_zero()).collect();
        // b_n = -(1/a_0) sum_{k>=1} C(n,k) a_k b_{n-k}
        let neg_inv_a0 = -a0.recip();
        let mut row = vec![BigInt::one()];
        let mut b: Vec<BigRational> = Vec::with_capacity(order + 1);
        b.push(a0.recip());
        for n in 1..=order {
            next_binomial_row(&mut row);
            let mut acc = BigRational::zero();
            for &k in a_nz.iter().take_while(|&&k| k <= n) {
                let bk = &b[n - k];
                if !bk.is_zero() {
                    acc += bk * BigRational::from_integer(&row[k] * &a[k]);
                }
            }
            b.push(acc / &da * &neg_inv_a0);
        }
        Ok(Self::new(b))
    }

    /// `k`-th derivative: an index shift `a_n -> a_{n+k}`, order drops by `k`.
    pub fn derivative(&self, k: usize) -> Self {
        assert!(
            k <= self.order(),
            "derivative order {k} exceeds truncation order {}",
            self.order()
        );
        Self::new(self.coeffs[k..].to_vec())
    }

    /// Divide by `z^j`, which must divide the series exactly (first `j`
    /// coefficients zero). In EGF terms `g_n = a_{n+j} n! / (n+j)!`.
    pub fn divide_by_z_power(&self, j: usize) -> Result<Self> {
        if j > self.order() {
            return Err(Error::InvalidParams(format!(
                "cannot divide a series of order {} by z^{j}",
                self.order()
            )));
        }
        if let Some(i) = (0..j).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::InvalidParams(format!(
                "z^{j} does not divide the series (coefficient {i} is nonzero)"
            )));
        }
        let out = (0..=self.order() - j)
            .map(|n| {
                let mut falling = BigInt::one();
                for i in n + 1..=n + j {
                    falling *= i;
                }
                &self.coeffs[n + j] / BigRational::from_integer(falling)
            })
            .collect();
        Ok(Self::new(out))
    }

    /// Multiply by `z^j`, raising the order by `j`: `c_{n+j} = a_n (n+j)!/n!`.
    pub fn multiply_by_z_power(&self, j: usize) -> Self {
        let mut out = vec![BigRational::zero(); j];
        for (n, a) in self.coeffs.iter().enumerate() {
            let mut rising = BigInt::one();
            for i in n + 1..=n + j {
                rising *= i;
            }
            out.push(a * BigRational::from_integer(rising));
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Whether every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Multiply a slice by the lcm of its denominators, returning the integer
/// numerators and that lcm.
fn scaled_integers(xs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let den = xs.iter().fold(
        BigInt::one(),
        |l, x| if x.denom().is_one() { l } else { l.lcm(x.denom()) },
    );
    let nums = xs
        .iter()
        .map(|x| {
            if den.is_one() {
                x.numer().clone()
            } else {
                x.numer() * (&den / x.denom())
            }
        })
        .collect();
    (nums, den)
}

fn next_binomial_row(row: &mut Vec<BigInt>) {
    row.push(BigInt::one());
    for i in (1..row.len() - 1).rev() {
        let prev = row[i - 1].clone();
        row[i] += prev;
    }
}

fn zip_with(a: &EgfSeries, b: &EgfSeries, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> EgfSeries {
    let order = a.order().min(b.order());
    EgfSeries::new((0..=order).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect())
}

impl Add for &EgfSeries {
    type Output = EgfSeries;
    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;
    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &EgfSeries {
    type Output = EgfSeries;
    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        self.multiply(rhs)
    }
}

impl Neg for &EgfSeries {
    type Output = EgfSeries;
    fn neg(self) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
