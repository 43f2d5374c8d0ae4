//! Engine values against an oracle written from scratch here: invert
//! `sum_n w^n / (Nn+j)!` as an ordinary power series in `w = z^N` and rescale
//! by `(Nn)!`. Shares nothing with the library beyond the number types.

use congruential_euler::exact::{vp_or_infinite, BigRational};
use congruential_euler::{Engine, SeqParams};
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn fact(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

fn choose(n: u64, k: u64) -> BigInt {
    fact(n) / (fact(k) * fact(n - k))
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn inversion_oracle(step: u64, j: u64, n_max: usize) -> Vec<BigRational> {
    let a: Vec<BigRational> = (0..=n_max as u64)
        .map(|n| BigRational::new(BigInt::one(), fact(step * n + j)))
        .collect();
    let mut b = vec![BigRational::one() / &a[0]];
    for n in 1..=n_max {
        let s: BigRational = (1..=n).map(|k| &a[k] * &b[n - k]).sum();
        b.push(-s / &a[0]);
    }
    b.iter()
        .enumerate()
        .map(|(n, c)| c * BigRational::from_integer(fact(step * n as u64)))
        .collect()
}

#[test]
fn engine_matches_scratch_oracle() {
    let engine = Engine::new();
    for step in 1..=7 {
        for j in 0..=step + 1 {
            let table = engine.compute_table(SeqParams::of(step, j), 10);
            assert_eq!(table.values, inversion_oracle(step, j, 10), "({step},{j})");
        }
    }
}

#[test]
fn classical_euler_numbers() {
    let want = [1i64, -1, 5, -61, 1385, -50521, 2702765, -199360981, 19391512145];
    let t = Engine::new().compute_table(SeqParams::of(2, 0), want.len() - 1);
    for (n, w) in want.iter().enumerate() {
        assert_eq!(t.values[n], rat(*w, 1), "E_{}", 2 * n);
    }
}

#[test]
fn classical_bernoulli_numbers() {
    let want = [
        (1, 1),
        (-1, 2),
        (1, 6),
        (0, 1),
        (-1, 30),
        (0, 1),
        (1, 42),
        (0, 1),
        (-1, 30),
        (0, 1),
        (5, 66),
        (0, 1),
        (-691, 2730),
        (0, 1),
        (7, 6),
    ];
    let t = Engine::new().compute_table(SeqParams::of(1, 1), want.len() - 1);
    for (n, &(a, b)) in want.iter().enumerate() {
        assert_eq!(t.values[n], rat(a, b), "B_{n}");
    }
}

#[test]
fn small_values_from_the_oracle() {
    let engine = Engine::new();
    let w = inversion_oracle(3, 0, 2);
    assert_eq!(w, [rat(1, 1), rat(-1, 1), rat(19, 1)]);
    assert_eq!(engine.euler_number(SeqParams::of(3, 0), 2), w[2]);

    let e40 = inversion_oracle(4, 0, 2);
    assert_eq!(e40[2], rat(69, 1));
    assert_eq!(engine.euler_number(SeqParams::of(4, 0), 2), e40[2]);

    let e42 = inversion_oracle(4, 2, 1);
    assert_eq!(engine.euler_number(SeqParams::of(4, 2), 1), e42[1]);
    assert_eq!(e42[0], rat(2, 1));
}

#[test]
fn j_zero_tables_are_integers() {
    let engine = Engine::new();
    for step in 2..=8 {
        let t = engine.compute_table(SeqParams::of(step, 0), 20);
        for (n, v) in t.values.iter().enumerate() {
            assert!(v.is_integer(), "({step},0) n={n}: {v}");
        }
    }
}

#[test]
fn p_integral_below_p() {
    // for j < p the denominators avoid p
    let engine = Engine::new();
    for p in [3u64, 5, 7] {
        for step in [p, 2 * p] {
            for j in 0..p {
                let t = engine.compute_table(SeqParams::of(step, j), 15);
                for (n, v) in t.values.iter().enumerate() {
                    let den = BigRational::from_integer(v.denom().clone());
                    assert_eq!(vp_or_infinite(&den, p), Some(0), "({step},{j}) n={n} p={p}");
                }
            }
        }
    }
}

#[test]
fn euler_bernoulli_bridge() {
    // E_{2n} = 1 + sum_{k=1}^{n} C(2n, 2k-1) (2^{2k} - 4^{2k}) / (2k) B_{2k}
    let engine = Engine::new();
    let euler = engine.compute_table(SeqParams::of(2, 0), 8);
    let bern = engine.compute_table(SeqParams::of(1, 1), 16);
    for n in 1..=8u64 {
        let mut rhs = BigRational::one();
        for k in 1..=n {
            let w = (BigInt::from(2).pow(2 * k as u32) - BigInt::from(4).pow(2 * k as u32)) * choose(2 * n, 2 * k - 1);
            rhs += BigRational::new(w, BigInt::from(2 * k)) * &bern.values[2 * k as usize];
        }
        assert_eq!(euler.values[n as usize], rhs, "n={n}");
    }
}

#[test]
fn lehmer_from_cube_roots_of_unity() {
    // 3/(e^z + e^{wz} + e^{w^2 z}) is the (3,0) series: its inverse sum is
    // (e^z + e^{wz} + e^{w^2 z})/3, whose EGF coefficients are 1 at multiples
    // of 3 and 0 elsewhere; multiplying back must give the identity.
    let t = Engine::new().compute_table(SeqParams::of(3, 0), 10);
    for n in 0..=10u64 {
        let sum: BigRational = (0..=n)
            .map(|m| BigRational::from_integer(choose(3 * n, 3 * m)) * &t.values[m as usize])
            .sum();
        assert_eq!(sum.is_zero(), n > 0, "n={n}");
    }
}
