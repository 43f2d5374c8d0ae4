//! Exact arithmetic substrate: p-adic valuations, binomial coefficients,
//! residues modulo prime powers and truncated EGF series.

mod series;

pub use series::EgfSeries;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type BigInteger = BigInt;

/// Reduced fraction with a positive denominator; zero is `0/1`.
pub type BigRational = Ratio<BigInt>;

/// Deterministic trial division. Every prime in use here is tiny.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Exponent of `p` in a nonzero integer. `p` is assumed prime.
fn vp_integer(x: &BigInt, p: u64) -> u64 {
    debug_assert!(!x.is_zero());
    if p == 2 {
        return x.trailing_zeros().unwrap_or(0);
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// p-adic valuation `v_p(numerator) - v_p(denominator)` of a nonzero rational.
pub fn vp(x: &BigRational, p: u64) -> Result<i64> {
    require_prime(p)?;
    vp_or_infinite(x, p).ok_or(Error::ValuationOfZero)
}

/// Like [`vp`] but maps zero to `None` (infinite valuation) and skips the
/// primality check. Used inside hot verification loops.
pub fn vp_or_infinite(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let num = vp_integer(x.numer(), p) as i64;
    let den = vp_integer(x.denom(), p) as i64;
    Some(num - den)
}

/// `v_p` of a nonzero integer.
pub fn vp_int(x: &BigInt, p: u64) -> Result<u64> {
    require_prime(p)?;
    if x.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    Ok(vp_integer(x, p))
}

/// Binomial coefficient; zero whenever `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Least nonnegative residue of a p-adically integral rational modulo `p^r`.
pub fn residue_mod_prime_power(x: &BigRational, p: u64, r: u32) -> Result<BigInt> {
    require_prime(p)?;
    let modulus = BigInt::from(p).pow(r);
    residue_mod(x, &modulus, p)
}

/// Residue modulo `modulus = p^r` without re-validating `p`.
pub(crate) fn residue_mod(x: &BigRational, modulus: &BigInt, p: u64) -> Result<BigInt> {
    let den = x.denom();
    if (den % p).is_zero() {
        return Err(Error::NotPAdicInteger {
            value: format_rational(x),
            p,
        });
    }
    let inv = mod_inverse(&den.mod_floor(modulus), modulus);
    Ok((x.numer().mod_floor(modulus) * inv).mod_floor(modulus))
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    if modulus.is_one() {
        return BigInt::zero();
    }
    let egcd = a.extended_gcd(modulus);
    debug_assert!(egcd.gcd.is_one());
    egcd.x.mod_floor(modulus)
}

/// Whether `a ≡ b (mod p^e)` for p-adically integral rationals.
pub fn congruent_mod_prime_power(a: &BigRational, b: &BigRational, p: u64, e: u64) -> bool {
    match vp_or_infinite(&(a - b), p) {
        None => true,
        Some(v) => v >= e as i64,
    }
}

/// `numerator/denominator`, always with an explicit denominator.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Inverse of [`format_rational`]; a bare integer is accepted as well.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(vp(&int(18), 3).unwrap(), 2);
        assert_eq!(vp(&rat(3, 4), 3).unwrap(), 1);
        assert_eq!(vp(&rat(3, 4), 2).unwrap(), -2);
        assert_eq!(vp(&int(1), 5).unwrap(), 0);
        assert_eq!(vp(&int(-40), 2).unwrap(), 3);
    }

    #[test]
    fn valuation_errors() {
        assert!(matches!(vp(&int(0), 3), Err(Error::ValuationOfZero)));
        assert!(matches!(vp(&int(9), 4), Err(Error::NotPrime(4))));
        assert!(matches!(vp(&int(9), 1), Err(Error::NotPrime(1))));
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(6, 4), BigInt::from(15));
        assert_eq!(binomial(5, 7), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        // factorial oracle
        let oracle = factorial(27) / (factorial(9) * factorial(18));
        assert_eq!(oracle, BigInt::from(4686825));
        assert_eq!(binomial(27, 9), oracle);
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue_mod_prime_power(&int(19), 3, 2).unwrap(), BigInt::from(1));
        assert_eq!(residue_mod_prime_power(&rat(-1, 4), 3, 2).unwrap(), BigInt::from(2));
        assert_eq!(residue_mod_prime_power(&int(-1), 2, 3).unwrap(), BigInt::from(7));
        assert!(matches!(
            residue_mod_prime_power(&rat(1, 3), 3, 1),
            Err(Error::NotPAdicInteger { p: 3, .. })
        ));
    }

    #[test]
    fn congruence_helper() {
        assert!(congruent_mod_prime_power(&int(19), &int(1), 3, 2));
        assert!(!congruent_mod_prime_power(&int(19), &int(1), 3, 3));
        assert!(congruent_mod_prime_power(&int(5), &int(5), 7, 100));
    }

    #[test]
    fn rational_text_round_trip() {
        let x = rat(-2, 15);
        assert_eq!(format_rational(&x), "-2/15");
        assert_eq!(parse_rational("-2/15"), Some(x));
        assert_eq!(format_rational(&int(6)), "6/1");
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
