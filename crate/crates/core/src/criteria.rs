//! Coefficient-shape hypotheses that force every complex zero off the unit
//! circle.
//!
//! Condition I asks for positive, non-decreasing coefficients with a double
//! strict jump around some index `k`; condition II asks the leading
//! coefficient to dominate the absolute sum of all the others. Either one
//! confines the zeros to the open unit disk, which is what the certifier's
//! prime witnesses build on.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("polynomial degree must be at least 1")]
    DegreeTooLow,
    #[error("invalid dominance query: {0}")]
    InvalidQuery(String),
}

/// Which coefficient conditions a polynomial satisfies.
///
/// `jump_indices` holds every index `k` in `[0, n-1]` witnessing condition I:
/// the whole coefficient sequence is positive and non-decreasing, with strict
/// increases at `(k-1, k)` and `(k, k+1)`. For `k = 0` the first strict
/// increase is vacuous and only `a_0 < a_1` is required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub satisfies_i: bool,
    pub jump_indices: BTreeSet<usize>,
    pub satisfies_ii: bool,
    pub degree: usize,
}

/// Full report of both conditions. `satisfies_i` is true exactly when
/// `jump_indices` is nonempty.
pub fn check_condition_i(f: &Polynomial) -> Result<ConditionReport, CriteriaError> {
    let n = f.degree().filter(|&n| n >= 1).ok_or(CriteriaError::DegreeTooLow)?;
    let c = f.coeffs();
    let positive = c[0].is_positive();
    let non_decreasing = c.windows(2).all(|w| w[0] <= w[1]);
    let jump_indices: BTreeSet<usize> = if positive && non_decreasing {
        (0..n)
            .filter(|&k| c[k] < c[k + 1] && (k == 0 || c[k - 1] < c[k]))
            .collect()
    } else {
        BTreeSet::new()
    };
    Ok(ConditionReport {
        satisfies_i: !jump_indices.is_empty(),
        satisfies_ii: condition_ii(f),
        jump_indices,
        degree: n,
    })
}

/// Condition II: `|a_n| > |a_{n-1}| + ... + |a_0|` with `a_0 != 0`.
pub fn check_condition_ii(f: &Polynomial) -> Result<bool, CriteriaError> {
    f.degree().filter(|&n| n >= 1).ok_or(CriteriaError::DegreeTooLow)?;
    Ok(condition_ii(f))
}

fn condition_ii(f: &Polynomial) -> bool {
    let c = f.coeffs();
    if c[0].is_zero() {
        return false;
    }
    let (lead, rest) = c.split_last().unwrap();
    let tail: BigUint = rest.iter().map(|a| a.magnitude()).sum();
    *lead.magnitude() > tail
}

/// A query against the dominant-coefficient inequality
/// `sum_{l != t} |a_l| <= q^t * |a_t|` with `q` in `(0, 1]`.
///
/// `i < j` name two indices whose coefficients must be nonzero in the queried
/// polynomial; any zero of modulus in `[q, 1]` then forces equality in the
/// inequality and `alpha^(2(j-i)) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceQuery {
    pub t: usize,
    pub i: usize,
    pub j: usize,
    pub q: BigRational,
}

impl DominanceQuery {
    pub fn new(t: usize, i: usize, j: usize, q: BigRational) -> Result<Self, CriteriaError> {
        if i >= j {
            return Err(CriteriaError::InvalidQuery(format!(
                "indices must satisfy i < j, got i = {i}, j = {j}"
            )));
        }
        if t == i || t == j {
            return Err(CriteriaError::InvalidQuery(format!(
                "t = {t} must differ from i and j"
            )));
        }
        if !q.is_positive() || q > BigRational::one() {
            return Err(CriteriaError::InvalidQuery(format!(
                "q must lie in (0, 1], got {q}"
            )));
        }
        Ok(DominanceQuery { t, i, j, q })
    }
}

/// Exact classification of the dominance inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceVerdict {
    HoldsStrict,
    HoldsWithEquality,
    Fails,
}

/// Classify `sum_{l != t} |a_l| <= q^t * |a_t|` exactly, by cross
/// multiplication in integers; no floating point is involved, since
/// equality versus strictness changes the conclusion downstream.
pub fn classify_dominance(
    f: &Polynomial,
    query: &DominanceQuery,
) -> Result<DominanceVerdict, CriteriaError> {
    let n = f
        .degree()
        .ok_or_else(|| CriteriaError::InvalidQuery("zero polynomial".into()))?;
    if query.j > n || query.t > n {
        return Err(CriteriaError::InvalidQuery(format!(
            "indices exceed the degree {n}"
        )));
    }
    if f.coeff(query.i).is_zero() || f.coeff(query.j).is_zero() {
        return Err(CriteriaError::InvalidQuery(format!(
            "coefficients at i = {} and j = {} must be nonzero",
            query.i, query.j
        )));
    }
    let t = u32::try_from(query.t)
        .map_err(|_| CriteriaError::InvalidQuery("index t too large".into()))?;
    let sum: BigUint = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(l, _)| *l != query.t)
        .map(|(_, a)| a.magnitude())
        .sum();
    // sum <= (num/den)^t * |a_t|  <=>  sum * den^t <= num^t * |a_t|
    let num = query.q.numer().magnitude();
    let den = query.q.denom().magnitude();
    let lhs = sum * den.pow(t);
    let rhs = num.pow(t) * f.coeff(query.t).magnitude();
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => DominanceVerdict::HoldsStrict,
        std::cmp::Ordering::Equal => DominanceVerdict::HoldsWithEquality,
        std::cmp::Ordering::Greater => DominanceVerdict::Fails,
    })
}
