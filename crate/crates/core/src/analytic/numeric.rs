use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::BigRational;
use crate::sequence::{Engine, SeqParams};

pub type ComplexDouble = Complex64;

fn root_of_unity(n: u64, k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

/// `H_{N,j}(z) = N^{-1} Σ_k ζ_N^{-kj} exp(ζ_N^k z)`.
pub fn eval_h(big_n: u64, j: u64, z: Complex64) -> Complex64 {
    let mut acc = Complex64::zero();
    for k in 0..big_n as i64 {
        acc += root_of_unity(big_n, -k * j as i64) * (root_of_unity(big_n, k) * z).exp();
    }
    acc / big_n as f64
}

/// `H'_{N,j} = H_{N,j-1}`, wrapping `j = 0` to `N - 1`.
fn eval_h_prime(big_n: u64, j: u64, z: Complex64) -> Complex64 {
    eval_h(big_n, (j + big_n - 1) % big_n, z)
}

/// The three `(N, j)` whose zeros lie on an explicit lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    F40,
    F42,
    F63,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::F40, Family::F42, Family::F63];

    pub fn params(self) -> (u64, u64) {
        match self {
            Self::F40 => (4, 0),
            Self::F42 => (4, 2),
            Self::F63 => (6, 3),
        }
    }

    /// Order of the zero at the origin.
    pub fn origin_multiplicity(self) -> usize {
        self.params().1 as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, j) = self.params();
        write!(f, "{n},{j}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.replace(['(', ')', ' '], "").as_str() {
            "4,0" => Ok(Self::F40),
            "4,2" => Ok(Self::F42),
            "6,3" => Ok(Self::F63),
            _ => Err(Error::InvalidParams(format!(
                "unknown family {s:?}; use 4,0 4,2 or 6,3"
            ))),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Closed-form nontrivial zero `z_{k,l}`, `k >= 1`, `0 <= l < N`.
///
/// For `(4,0)` the radial factor is `k - 1/2`, so `k = 1` is the zero of
/// smallest modulus, `(1+i)π/2`.
pub fn predicted_zero(family: Family, k: u64, l: u64) -> Result<Complex64> {
    let (n, _) = family.params();
    if k == 0 || l >= n {
        return Err(Error::InvalidParams(format!(
            "need k >= 1 and l < {n}, got k={k} l={l}"
        )));
    }
    let k = k as f64;
    let z = match family {
        Family::F40 => SQRT_2 * root_of_unity(8, 1) * root_of_unity(4, l as i64) * (k - 0.5) * PI,
        Family::F42 => SQRT_2 * root_of_unity(8, 1) * root_of_unity(4, l as i64) * k * PI,
        Family::F63 => 2.0 * root_of_unity(12, 1) * root_of_unity(6, l as i64) * k * PI,
    };
    Ok(z)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LocatedZero {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub steps: usize,
    /// Converged to the origin, which the lattice excludes.
    pub trivial: bool,
}

impl LocatedZero {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

const NEWTON_STEPS: usize = 50;

/// Newton's method on `H_{N,j}` from `guess`. Stops once `|H| < 1e-12` or
/// the step falls to rounding level.
pub fn locate_zero(big_n: u64, j: u64, guess: Complex64) -> Result<LocatedZero> {
    if big_n == 0 || j >= big_n {
        return Err(Error::InvalidParams(format!("need 0 <= j < N, got N={big_n} j={j}")));
    }
    let found = |z: Complex64, residual: f64, steps: usize| LocatedZero {
        re: z.re,
        im: z.im,
        residual,
        steps,
        trivial: z.norm() < 1e-3,
    };
    let mut z = guess;
    for steps in 0..NEWTON_STEPS {
        let h = eval_h(big_n, j, z);
        if !h.is_finite() {
            break;
        }
        if h.norm() < 1e-12 {
            return Ok(found(z, h.norm(), steps));
        }
        let d = eval_h_prime(big_n, j, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = h / d;
        z -= step;
        if step.norm() <= 4.0 * f64::EPSILON * z.norm().max(1.0) {
            return Ok(found(z, eval_h(big_n, j, z).norm(), steps + 1));
        }
    }
    Err(Error::NoConvergence {
        re: z.re,
        im: z.im,
        residual: eval_h(big_n, j, z).norm(),
    })
}

/// A polished lattice zero, as emitted by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZeroRecord {
    pub family: Family,
    pub k: u64,
    pub l: u64,
    pub zero: [f64; 2],
    pub residual: f64,
    pub predicted: [f64; 2],
    pub distance: f64,
    pub steps: usize,
}

impl ZeroRecord {
    /// Newton from a point 1% off `z_{k,l}`, so the iteration does real work.
    pub fn polish(family: Family, k: u64, l: u64) -> Result<Self> {
        let predicted = predicted_zero(family, k, l)?;
        let (n, j) = family.params();
        let found = locate_zero(n, j, predicted * Complex64::new(1.01, 0.01))?;
        Ok(Self {
            family,
            k,
            l,
            zero: [found.re, found.im],
            residual: found.residual,
            predicted: [predicted.re, predicted.im],
            distance: (found.z() - predicted).norm(),
            steps: found.steps,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialValueCheck {
    pub family: Family,
    pub k: u64,
    pub l: u64,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub relative_error: f64,
    pub ok: bool,
}

/// Relations between the neighbouring `H_{N,j'}` at lattice zeros:
///
/// * `(4,0)`: `H_{4,1} = ζ_4^{2l+3} H_{4,3}`;
/// * `(4,2)`: `H_{4,3} = ζ_4^{2l+3} H_{4,1}`;
/// * `(6,3)`: `H_{6,4} = ζ_6^{2(l-1)} H_{6,2}`,
///
/// to relative tolerance `1e-8`.
pub fn check_special_values(family: Family, k: u64, l: u64) -> Result<SpecialValueCheck> {
    let z = predicted_zero(family, k, l)?;
    if z.norm() > 700.0 {
        return Err(Error::Range(format!(
            "|z|={:.1} overflows double exponentials",
            z.norm()
        )));
    }
    let l_i = l as i64;
    let (lhs, rhs) = match family {
        Family::F40 => (eval_h(4, 1, z), root_of_unity(4, 2 * l_i + 3) * eval_h(4, 3, z)),
        Family::F42 => (eval_h(4, 3, z), root_of_unity(4, 2 * l_i + 3) * eval_h(4, 1, z)),
        Family::F63 => (eval_h(6, 4, z), root_of_unity(6, 2 * (l_i - 1)) * eval_h(6, 2, z)),
    };
    let scale = lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE);
    let relative_error = (lhs - rhs).norm() / scale;
    Ok(SpecialValueCheck {
        family,
        k,
        l,
        lhs: [lhs.re, lhs.im],
        rhs: [rhs.re, rhs.im],
        relative_error,
        ok: relative_error < 1e-8,
    })
}

/// `(|E_a/(Na)!| / |E_{a+1}/(N(a+1))!|)^{1/N} / π` with `a = n_max`, an
/// estimate of the nearest nontrivial zero's modulus in units of π.
pub fn ratio_radius(engine: &Engine, params: SeqParams, n_max: usize) -> Result<f64> {
    if n_max < 10 {
        return Err(Error::InvalidParams("n_max must be at least 10".into()));
    }
    let n = params.step;
    let a = engine.euler_number(params, n_max);
    let b = engine.euler_number(params, n_max + 1);
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidParams(format!("zero value near n={n_max} for {params}")));
    }
    // (Na+N)!/(Na)! is an integer; keep everything exact until the end.
    let lower = n * n_max as u64;
    let rising = (lower + 1..=lower + n).fold(num_bigint::BigInt::from(1), |acc, i| acc * i);
    let ratio: BigRational = (a / b).abs() * BigRational::from_integer(rising);
    let value = ratio
        .to_f64()
        .ok_or_else(|| Error::Range("ratio does not fit a double".into()))?;
    Ok(value.powf(1.0 / n as f64) / PI)
}

/// Newton from every point of a square grid of the given spacing; returns
/// the distinct limits with `|z| <= radius`, sorted by modulus then angle.
pub fn grid_zero_search(big_n: u64, j: u64, radius: f64, spacing: f64) -> Vec<LocatedZero> {
    let steps = (radius / spacing).ceil() as i64;
    let seeds: Vec<Complex64> = (-steps..=steps)
        .flat_map(|a| (-steps..=steps).map(move |b| Complex64::new(a as f64 * spacing, b as f64 * spacing)))
        .filter(|z| z.norm() <= radius + spacing)
        .collect();
    let found: Vec<LocatedZero> = seeds
        .par_iter()
        .filter_map(|&s| locate_zero(big_n, j, s).ok())
        .filter(|z| z.z().norm() <= radius)
        .collect();
    let mut distinct: Vec<LocatedZero> = Vec::new();
    for z in found {
        let tol = if z.trivial { 1e-3 } else { 1e-6 };
        if !distinct.iter().any(|d| (d.z() - z.z()).norm() < tol) {
            distinct.push(z);
        }
    }
    distinct.sort_by(|a, b| {
        let key = |z: &LocatedZero| (z.z().norm(), z.im.atan2(z.re));
        key(a).partial_cmp(&key(b)).expect("finite zeros")
    });
    distinct
}

/// Distance from `z` to the nearest lattice zero of `family` or, when the
/// family vanishes there, the origin.
pub fn lattice_distance(family: Family, z: Complex64) -> f64 {
    let (n, _) = family.params();
    let mut best = if family.origin_multiplicity() > 0 {
        z.norm()
    } else {
        f64::INFINITY
    };
    let mut k = 1;
    loop {
        let first = predicted_zero(family, k, 0).expect("valid").norm();
        if first > z.norm() + 10.0 {
            break;
        }
        for l in 0..n {
            best = best.min((predicted_zero(family, k, l).expect("valid") - z).norm());
        }
        k += 1;
    }
    best
}

/// Zeros of the family in `|z| < radius` counted with multiplicity,
/// according to the closed form.
pub fn expected_zero_count(family: Family, radius: f64) -> usize {
    let (n, _) = family.params();
    let mut count = family.origin_multiplicity();
    let mut k = 1;
    while predicted_zero(family, k, 0).expect("valid").norm() < radius {
        count += n as usize;
        k += 1;
    }
    count
}

/// Zeros of `H_{N,j}` inside `|z| < radius`, with multiplicity, from the
/// winding number of `H` around the circle. Fails if `H` nearly vanishes on
/// the contour.
pub fn count_zeros_in_disk(big_n: u64, j: u64, radius: f64) -> Result<usize> {
    let at = |t: f64| eval_h(big_n, j, Complex64::from_polar(radius, t));
    let samples = 8192;
    let mut total = 0.0;
    let mut t0 = 0.0;
    let mut v0 = at(t0);
    for i in 1..=samples {
        let t1 = 2.0 * PI * i as f64 / samples as f64;
        total += arg_change(&at, t0, v0, t1, 0)?;
        t0 = t1;
        v0 = at(t1);
    }
    let winding = total / (2.0 * PI);
    let rounded = winding.round();
    if (winding - rounded).abs() > 1e-6 || rounded < 0.0 {
        return Err(Error::Range(format!("winding number {winding} is not an integer")));
    }
    Ok(rounded as usize)
}

fn arg_change(at: &impl Fn(f64) -> Complex64, t0: f64, v0: Complex64, t1: f64, depth: u32) -> Result<f64> {
    let v1 = at(t1);
    if v0.norm() == 0.0 || v1.norm() == 0.0 {
        return Err(Error::Range("H vanishes on the contour".into()));
    }
    let d = (v1 / v0).arg();
    if d.abs() < 0.5 {
        return Ok(d);
    }
    if depth > 40 {
        return Err(Error::Range("contour too close to a zero".into()));
    }
    let mid = 0.5 * (t0 + t1);
    let vm = at(mid);
    Ok(arg_change(at, t0, v0, mid, depth + 1)? + arg_change(at, mid, vm, t1, depth + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_basics() {
        assert!((eval_h(2, 0, Complex64::zero()) - 1.0).norm() < 1e-15);
        let x = Complex64::new(1e-3, 0.0);
        assert!((eval_h(4, 2, x) - x * x / 2.0).norm() < 1e-14);
        let z = SQRT_2 * root_of_unity(8, 1) * PI / 2.0;
        assert!(eval_h(4, 0, z).norm() < 1e-9);
        assert!((predicted_zero(Family::F40, 1, 0).unwrap() - z).norm() < 1e-15);
    }

    #[test]
    fn newton_examples() {
        let target = predicted_zero(Family::F40, 2, 0).unwrap();
        let z = locate_zero(4, 0, target + Complex64::new(0.1, -0.1)).unwrap();
        assert!((z.z() - target).norm() < 1e-9);
        let target = predicted_zero(Family::F63, 1, 0).unwrap();
        let z = locate_zero(6, 3, target * 1.02).unwrap();
        assert!((z.z() - target).norm() < 1e-9);
        assert!(z.residual < 1e-10);
        let z = locate_zero(4, 2, Complex64::new(0.1, 0.0)).unwrap();
        assert!(z.trivial);
    }

    #[test]
    fn special_value_examples() {
        let c = check_special_values(Family::F40, 1, 0).unwrap();
        assert!(c.ok);
        let ratio = Complex64::new(c.lhs[0], c.lhs[1]) / eval_h(4, 3, predicted_zero(Family::F40, 1, 0).unwrap());
        assert!((ratio - Complex64::new(0.0, -1.0)).norm() < 1e-12);

        let c = check_special_values(Family::F63, 1, 1).unwrap();
        assert!(c.ok);
        let expected = (1.0 + (3f64.sqrt() * PI).cosh()) / 3.0;
        assert!((Complex64::new(c.lhs[0], c.lhs[1]) - expected).norm() / expected < 1e-10);

        assert!(check_special_values(Family::F42, 2, 3).unwrap().ok);
        assert!(matches!(
            check_special_values(Family::F42, 200, 0),
            Err(Error::Range(_))
        ));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("4,0".parse::<Family>().unwrap(), Family::F40);
        assert_eq!("(6, 3)".parse::<Family>().unwrap(), Family::F63);
        assert!("5,0".parse::<Family>().is_err());
    }

    #[test]
    fn radius_of_cosh() {
        let e = Engine::new();
        let r = ratio_radius(&e, SeqParams::of(2, 0), 30).unwrap();
        assert!((r - 0.5).abs() < 1e-6);
        assert!(ratio_radius(&e, SeqParams::of(2, 0), 5).is_err());
    }

    #[test]
    fn winding_counts() {
        assert_eq!(count_zeros_in_disk(2, 0, 2.0).unwrap(), 2);
        assert_eq!(count_zeros_in_disk(4, 2, 3.0).unwrap(), 2);
    }
}
