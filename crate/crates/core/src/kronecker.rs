//! Exhaustive Kronecker factorization over the integers.
//!
//! For every candidate factor degree d up to half the input degree, the
//! polynomial is evaluated at d+1 small integer points with nonzero values;
//! a factor of degree d must take a divisor of each value there, so every
//! signed divisor tuple is interpolated and the integer-coefficient
//! candidates are tested by exact division. Exhausting all tuples proves
//! irreducibility. Brute force on purpose: this is the ground-truth oracle
//! the certifier is cross-validated against, so it shares no reasoning with
//! the certificates.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::Polynomial;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Values beyond this cannot have their divisors enumerated at desk scale.
const VALUE_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("polynomial degree must be at least 1")]
    DegreeTooLow,
    /// The verdict is unknown; callers must not read this as irreducible.
    #[error("candidate budget exhausted after {examined} tuples")]
    BudgetExceeded { examined: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorVerdict {
    Irreducible,
    /// `factors` multiply back to the input exactly; either both have
    /// positive degree or the first is a constant greater than 1 (content).
    Reducible { factors: (Polynomial, Polynomial) },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub verdict: FactorVerdict,
    /// Candidate assignments examined, including partial ones cut off by
    /// the divisibility prunes.
    pub search_space_size: u64,
}

struct Search {
    budget: u64,
    examined: u64,
}

impl Search {
    fn tick(&mut self) -> Result<(), OracleError> {
        self.examined += 1;
        if self.examined > self.budget {
            Err(OracleError::BudgetExceeded {
                examined: self.examined,
            })
        } else {
            Ok(())
        }
    }
}

/// Factor `f` or prove it irreducible by exhaustion. Intended for degrees
/// up to about 8 with moderate coefficients.
pub fn kronecker_factor(
    f: &Polynomial,
    budget: u64,
) -> Result<FactorizationResult, OracleError> {
    let n = f.degree().filter(|&n| n >= 1).ok_or(OracleError::DegreeTooLow)?;

    let content = f.content();
    if content > BigUint::one() {
        let constant = Polynomial::constant(content.into());
        let primitive = f.divide_exact(&constant).expect("content divides");
        return Ok(FactorizationResult {
            verdict: FactorVerdict::Reducible {
                factors: (constant, primitive),
            },
            search_space_size: 0,
        });
    }

    let max_factor_degree = n / 2;
    let mut search = Search {
        budget,
        examined: 0,
    };
    if max_factor_degree >= 1 {
        // Smallest-modulus integers where f does not vanish; a zero value
        // would admit every integer as a divisor.
        let points = evaluation_points(f, max_factor_degree + 1);
        let values: Vec<BigInt> = points.iter().map(|&x| f.evaluate(&BigInt::from(x))).collect();
        let divisor_lists: Vec<Vec<u64>> = values
            .iter()
            .map(|v| positive_divisors(v, &mut search))
            .collect::<Result<_, _>>()?;

        for d in 1..=max_factor_degree {
            if let Some(pair) = search_degree(f, d, &points, &divisor_lists, &mut search)? {
                return Ok(FactorizationResult {
                    verdict: FactorVerdict::Reducible { factors: pair },
                    search_space_size: search.examined,
                });
            }
        }
    }

    Ok(FactorizationResult {
        verdict: FactorVerdict::Irreducible,
        search_space_size: search.examined,
    })
}

fn evaluation_points(f: &Polynomial, count: usize) -> Vec<i64> {
    let mut points = Vec::with_capacity(count);
    let mut candidate = 0i64;
    while points.len() < count {
        if !f.evaluate(&BigInt::from(candidate)).is_zero() {
            points.push(candidate);
        }
        candidate = if candidate > 0 { -candidate } else { -candidate + 1 };
    }
    points
}

fn positive_divisors(value: &BigInt, search: &mut Search) -> Result<Vec<u64>, OracleError> {
    let v = value
        .magnitude()
        .to_u64()
        .filter(|&v| v <= VALUE_LIMIT)
        .ok_or(OracleError::BudgetExceeded {
            examined: search.examined,
        })?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Depth-first enumeration of signed divisor tuples for one candidate
/// degree. The first point is fixed to positive divisors; the cofactor
/// absorbs the overall sign. Partial tuples are pruned with the integer
/// polynomial property (x_a - x_b) | (g(x_a) - g(x_b)).
fn search_degree(
    f: &Polynomial,
    d: usize,
    all_points: &[i64],
    divisor_lists: &[Vec<u64>],
    search: &mut Search,
) -> Result<Option<(Polynomial, Polynomial)>, OracleError> {
    let points = &all_points[..=d];
    let basis = lagrange_basis(points);
    let mut assignment: Vec<BigInt> = Vec::with_capacity(d + 1);
    dfs(f, d, points, divisor_lists, &basis, &mut assignment, search)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    f: &Polynomial,
    d: usize,
    points: &[i64],
    divisor_lists: &[Vec<u64>],
    basis: &[(Polynomial, BigInt)],
    assignment: &mut Vec<BigInt>,
    search: &mut Search,
) -> Result<Option<(Polynomial, Polynomial)>, OracleError> {
    let idx = assignment.len();
    if idx == points.len() {
        return Ok(try_candidate(f, d, assignment, basis));
    }
    let signs: &[i64] = if idx == 0 { &[1] } else { &[1, -1] };
    for &divisor in &divisor_lists[idx] {
        for &sign in signs {
            search.tick()?;
            let value = BigInt::from(sign) * divisor;
            let consistent = (0..idx).all(|prev| {
                let dx = points[idx] - points[prev];
                ((&value - &assignment[prev]) % dx).is_zero()
            });
            if !consistent {
                continue;
            }
            assignment.push(value);
            let found = dfs(f, d, points, divisor_lists, basis, assignment, search)?;
            assignment.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

fn try_candidate(
    f: &Polynomial,
    d: usize,
    values: &[BigInt],
    basis: &[(Polynomial, BigInt)],
) -> Option<(Polynomial, Polynomial)> {
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (i, value) in values.iter().enumerate() {
        let (ref numerator, ref denominator) = basis[i];
        let weight = BigRational::new(value.clone(), denominator.clone());
        for (k, c) in numerator.coeffs().iter().enumerate() {
            coeffs[k] += &weight * c;
        }
    }
    if coeffs.iter().any(|c| !c.is_integer()) {
        return None;
    }
    let candidate = Polynomial::new(coeffs.into_iter().map(|c| c.to_integer()).collect());
    // Interpolants of lower degree already appeared in earlier passes.
    if candidate.degree() != Some(d) {
        return None;
    }
    let lead_ok = f
        .leading_coeff()
        .map(|lc| (lc % candidate.leading_coeff().unwrap()).is_zero())
        .unwrap_or(false);
    if !lead_ok {
        return None;
    }
    match f.divide_exact(&candidate) {
        // Flip both signs when needed so the reported factor leads positive.
        Ok(quotient) => {
            if candidate.leading_coeff().is_some_and(|lc| lc.is_negative()) {
                Some((-candidate, -quotient))
            } else {
                Some((candidate, quotient))
            }
        }
        Err(_) => None,
    }
}

/// Lagrange basis numerators and denominators for a point set: the i-th
/// entry is (prod_{j != i} (x - x_j), prod_{j != i} (x_i - x_j)).
fn lagrange_basis(points: &[i64]) -> Vec<(Polynomial, BigInt)> {
    points
        .iter()
        .enumerate()
        .map(|(i, &xi)| {
            let mut numerator = Polynomial::constant(BigInt::one());
            let mut denominator = BigInt::one();
            for (j, &xj) in points.iter().enumerate() {
                if j != i {
                    numerator = &numerator * &Polynomial::from_coeffs([-xj, 1]);
                    denominator *= xi - xj;
                }
            }
            (numerator, denominator)
        })
        .collect()
}
