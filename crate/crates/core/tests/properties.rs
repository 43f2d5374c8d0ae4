use congruential_euler::congruence::{check_gessel, check_main_theorem};
use congruential_euler::conjecture::{
    detect_eventual_period, is_minimal_period, scan_conjecture, PeriodDetection, ScanParams,
};
use congruential_euler::exact::{binomial, vp_int, BigRational, EgfSeries};
use congruential_euler::sequence::oracle_table;
use congruential_euler::{Engine, SeqParams};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7])
}

fn rational() -> impl Strategy<Value = BigRational> {
    (any::<i64>(), 1..i64::MAX).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #[test]
    fn binomial_valuation_lower_bound(p in prime(), n in 1u64..=2000, m_seed in 0u64..2000) {
        let m = 1 + m_seed % n;
        let c = binomial(n, m as i64);
        let lhs = vp_int(&c, p).unwrap() as i64;
        let bound = vp_int(&BigInt::from(n), p).unwrap() as i64 - vp_int(&BigInt::from(m), p).unwrap() as i64;
        prop_assert!(lhs >= bound, "C({n},{m}) p={p}: {lhs} < {bound}");
    }

    #[test]
    fn binomial_of_prime_power_sampled(p in prime(), r in 1u32..=5, m_seed in any::<u64>()) {
        let q = p.pow(r);
        let m = 1 + m_seed % (q - 1);
        let v = vp_int(&binomial(q, m as i64), p).unwrap();
        prop_assert_eq!(v, r as u64 - vp_int(&BigInt::from(m), p).unwrap());
    }

    #[test]
    fn rational_arithmetic_is_exact(a in rational(), b in rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }

    #[test]
    fn series_inverse_is_two_sided(
        a0 in prop::sample::select(vec![-3i64, -1, 1, 2, 5]),
        rest in prop::collection::vec(-20i64..=20, 1..12),
    ) {
        let mut coeffs = vec![a0];
        coeffs.extend(rest);
        let order = coeffs.len() - 1;
        let a = EgfSeries::from_integers(coeffs);
        let inv = a.invert().unwrap();
        prop_assert_eq!(a.multiply(&inv), EgfSeries::one(order));
        prop_assert_eq!(inv.multiply(&a), EgfSeries::one(order));
    }

    #[test]
    fn recurrence_agrees_with_inversion(step in 1u64..=9, j in 0u64..=10, n_max in 0usize..=8) {
        let p = SeqParams::of(step, j);
        prop_assert_eq!(Engine::new().compute_table(p, n_max), oracle_table(p, n_max));
    }

    #[test]
    fn detects_constructed_periods(
        prefix in prop::collection::vec(0u64..4, 0..6),
        cycle in prop::collection::vec(0u64..4, 1..7),
    ) {
        let c = cycle.len();
        let max_period = prefix.len().max(c);
        let mut seq = prefix.clone();
        while seq.len() < prefix.len() + 3 * max_period {
            seq.extend_from_slice(&cycle);
        }
        // primitive period of the cycle, and how far back it reaches
        let primitive = (1..=c)
            .find(|&d| c % d == 0 && (0..c).all(|i| cycle[i] == cycle[(i + d) % c]))
            .unwrap();
        let mut n0 = prefix.len();
        while n0 > 0 && seq[n0 - 1] == seq[n0 - 1 + primitive] {
            n0 -= 1;
        }
        prop_assert_eq!(
            detect_eventual_period(&seq, max_period),
            PeriodDetection::Found { n0, period: primitive }
        );
        prop_assert!(is_minimal_period(&seq, n0, primitive));
    }
}

#[test]
fn binomial_of_prime_power_exhaustive() {
    // C(p^r, m) for every 0 < m < p^r, stepped along the row
    for p in [2u64, 3, 5, 7] {
        for r in 1..=5u32 {
            let q = p.pow(r);
            let mut c = BigInt::one();
            for m in 1..q {
                c = c * (q - m + 1) / m;
                let v = vp_int(&c, p).unwrap();
                assert_eq!(v, r as u64 - vp_int(&BigInt::from(m), p).unwrap(), "p={p} r={r} m={m}");
            }
        }
    }
}

#[test]
fn delta_bound_is_attained() {
    // for j = 0 the stronger bound r + 1 is sharp somewhere in the window
    let engine = Engine::new();
    let e = |n: usize| engine.euler_number(SeqParams::of(3, 0), n);
    let exact_two = (0..=20).any(|n| vp_int((&e(n) + &e(n + 1)).numer(), 3).ok() == Some(2));
    assert!(exact_two);
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let engine = Engine::new();
        let mut out = Vec::new();
        out.push(check_main_theorem(&engine, 5, 2, 2, 0..=20).unwrap().to_json());
        out.push(check_gessel(&engine, 3, 2, 1, 0..=10).unwrap().to_json());
        let scan = scan_conjecture(&engine, ScanParams::new(3, 2, 3, 3).unwrap(), None).unwrap();
        out.push(serde_json::to_string(&scan).unwrap());
        out
    };
    assert_eq!(run(), run());
}
