//! Seeded random generators shared by the heavyweight suites.
//!
//! The shapes are deliberately kept away from the unit circle: the
//! condition-I generator bounds every adjacent coefficient ratio by 20/21
//! (Enestrom-Kakeya then caps the root moduli near 0.95), and the dominance
//! generators inflate the big coefficient five percent past the tail sum, so
//! margin assertions in the suites test the implementation rather than the
//! generator's luck.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use polycert::criteria::DominanceQuery;
use polycert::poly::Polynomial;
use rand::rngs::StdRng;
use rand::Rng;

/// Positive, strictly increasing coefficients: condition I holds at every
/// index, and all roots stay below modulus 0.953.
pub fn random_condition_i_poly(rng: &mut StdRng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(2..=max_degree);
    let mut coeffs: Vec<i64> = Vec::with_capacity(degree + 1);
    let mut value: i64 = rng.gen_range(1..=50);
    coeffs.push(value);
    for _ in 0..degree {
        let step = (value / 20).max(1) + rng.gen_range(0..=value / 2);
        value += step;
        coeffs.push(value);
    }
    Polynomial::from_coeffs(coeffs)
}

/// Leading coefficient at least five percent above the absolute tail sum,
/// nonzero constant term: condition II holds with a real margin.
pub fn random_condition_ii_poly(
    rng: &mut StdRng,
    max_degree: usize,
    coeff_bound: i64,
) -> Polynomial {
    let degree = rng.gen_range(2..=max_degree);
    let mut coeffs: Vec<i64> = (0..degree)
        .map(|_| rng.gen_range(-coeff_bound..=coeff_bound))
        .collect();
    if coeffs[0] == 0 {
        coeffs[0] = if rng.gen() { 1 } else { -1 };
    }
    let tail: i64 = coeffs.iter().map(|c| c.abs()).sum();
    let lead = tail + (tail / 20).max(1) + rng.gen_range(1..=coeff_bound.max(1));
    coeffs.push(if rng.gen() { lead } else { -lead });
    Polynomial::from_coeffs(coeffs)
}

/// A polynomial and a q = 1 dominance query that holds strictly, with the
/// dominant coefficient five percent past the tail. No root can then come
/// within about 1/400 of the unit circle.
pub fn random_strict_dominance_instance(rng: &mut StdRng) -> (Polynomial, DominanceQuery) {
    let degree = rng.gen_range(2..=10usize);
    let t = rng.gen_range(0..=degree);
    let mut pick = |exclude: &[usize]| loop {
        let idx = rng.gen_range(0..=degree);
        if !exclude.contains(&idx) {
            return idx;
        }
    };
    let a = pick(&[t]);
    let b = pick(&[t, a]);
    let (i, j) = (a.min(b), a.max(b));

    let mut coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-20..=20)).collect();
    for idx in [i, j, degree] {
        if idx != t && coeffs[idx] == 0 {
            coeffs[idx] = if rng.gen() { 1 } else { -1 };
        }
    }
    let tail: i64 = coeffs
        .iter()
        .enumerate()
        .filter(|(l, _)| *l != t)
        .map(|(_, c)| c.abs())
        .sum();
    let dominant = tail + (tail / 20).max(1) + rng.gen_range(1..=20);
    coeffs[t] = if rng.gen() { dominant } else { -dominant };

    let f = Polynomial::from_coeffs(coeffs);
    let query = DominanceQuery::new(t, i, j, BigRational::one()).unwrap();
    (f, query)
}

/// A primitive polynomial of exact degree 1 to 3 with coefficients in
/// [-10, 10].
pub fn random_primitive_factor(rng: &mut StdRng) -> Polynomial {
    loop {
        let degree = rng.gen_range(1..=3usize);
        let coeffs: Vec<i64> = (0..=degree).map(|_| rng.gen_range(-10..=10)).collect();
        let f = Polynomial::from_coeffs(coeffs);
        if f.degree() != Some(degree) {
            continue;
        }
        let content = BigInt::from(f.content());
        if content > BigInt::one() {
            return f
                .divide_exact(&Polynomial::constant(content))
                .expect("content divides");
        }
        return f;
    }
}

/// Candidate inputs for the certify-then-cross-validate sweep: degree at
/// most 6, coefficients within +-50, biased so a useful fraction actually
/// certifies.
pub fn random_sweep_candidate(rng: &mut StdRng) -> Polynomial {
    match rng.gen_range(0..3u8) {
        0 => {
            // Non-decreasing positive coefficients capped at 50; double
            // jumps appear often but not always.
            let degree = rng.gen_range(2..=6usize);
            let mut coeffs: Vec<i64> = Vec::with_capacity(degree + 1);
            let mut value: i64 = rng.gen_range(1..=8);
            coeffs.push(value);
            for _ in 0..degree {
                value = (value + rng.gen_range(0..=8)).min(50);
                coeffs.push(value);
            }
            Polynomial::from_coeffs(coeffs)
        }
        1 => random_condition_ii_poly(rng, 6, 6),
        _ => {
            let degree = rng.gen_range(1..=6usize);
            let mut coeffs: Vec<i64> =
                (0..=degree).map(|_| rng.gen_range(-50..=50)).collect();
            if coeffs[degree] == 0 {
                coeffs[degree] = rng.gen_range(1..=50);
            }
            Polynomial::from_coeffs(coeffs)
        }
    }
}

/// Random canonical polynomial for round-trip style checks, zero included.
pub fn random_poly(rng: &mut StdRng, max_degree: usize, coeff_bound: i64) -> Polynomial {
    let len = rng.gen_range(0..=max_degree + 1);
    let coeffs: Vec<i64> = (0..len)
        .map(|_| rng.gen_range(-coeff_bound..=coeff_bound))
        .collect();
    Polynomial::from_coeffs(coeffs)
}
