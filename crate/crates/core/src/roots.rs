//! Numerical localization of complex zeros.
//!
//! All roots are refined simultaneously with the Aberth-Ehrlich iteration,
//! starting from points spread on a circle at the Cauchy bound. The results
//! feed modulus queries (inside the open unit disk, outside the closed one)
//! used to validate the exact coefficient criteria against numerics.
//!
//! Certificates never depend on anything computed here; an unconverged or
//! boundary-hugging root set degrades a property check into an inconclusive
//! answer, not a wrong certificate.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::criteria::{self, DominanceQuery, DominanceVerdict};
use crate::poly::Polynomial;

pub const DEFAULT_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 1000;
/// Relative backward error below which a root set counts as converged even
/// when the per-iteration corrections stall (clustered or multiple roots).
const RESIDUAL_ACCEPT: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RootsError {
    #[error("polynomial degree must be at least 1")]
    DegreeTooLow,
    #[error("tolerance must be a positive finite number")]
    InvalidTolerance,
    #[error("root set did not converge; modulus queries are inconclusive")]
    Unconverged,
    #[error("extreme modulus {modulus} lies within the margin band around 1")]
    Inconclusive { modulus: f64 },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

/// Approximate zeros of a polynomial, with multiplicity, plus summary data.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// Maximum relative backward error max |f(z)| / (max_i |a_i| * max(1,|z|)^n).
    pub residual_bound: f64,
    pub max_modulus: f64,
    pub min_modulus: f64,
    pub converged: bool,
    pub iterations: usize,
}

impl RootSet {
    /// True when every root has modulus below `1 - margin`, false when some
    /// root has modulus above `1 + margin`. A maximal modulus inside the
    /// band is numerically indistinguishable from the circle itself and
    /// reported as inconclusive.
    pub fn all_in_open_unit_disk(&self, margin: f64) -> Result<bool, RootsError> {
        if !self.converged {
            return Err(RootsError::Unconverged);
        }
        if self.max_modulus < 1.0 - margin {
            Ok(true)
        } else if self.max_modulus > 1.0 + margin {
            Ok(false)
        } else {
            Err(RootsError::Inconclusive {
                modulus: self.max_modulus,
            })
        }
    }

    /// Mirror image: every root strictly outside the closed unit disk.
    pub fn all_outside_closed_unit_disk(&self, margin: f64) -> Result<bool, RootsError> {
        if !self.converged {
            return Err(RootsError::Unconverged);
        }
        if self.min_modulus > 1.0 + margin {
            Ok(true)
        } else if self.min_modulus < 1.0 - margin {
            Ok(false)
        } else {
            Err(RootsError::Inconclusive {
                modulus: self.min_modulus,
            })
        }
    }
}

/// Locate all complex zeros of `f`. The iteration stops once the largest
/// per-root correction drops below `tol` or after a fixed cap; a capped run
/// is still accepted when the relative backward error is tiny.
pub fn find_roots(f: &Polynomial, tol: f64) -> Result<RootSet, RootsError> {
    let n = f.degree().filter(|&n| n >= 1).ok_or(RootsError::DegreeTooLow)?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(RootsError::InvalidTolerance);
    }

    let coeffs = scaled_f64_coeffs(f);
    let lead = coeffs[n];

    // Cauchy bound: every root has modulus below 1 + max |a_i / a_n|.
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    // Irrational angular offset so the start points avoid the symmetry axes
    // of sparse polynomials.
    let offset = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + offset;
            Complex64::from_polar(radius.max(1e-3), theta)
        })
        .collect();

    let mut iterations = MAX_ITERATIONS;
    let mut corrections_converged = false;
    for iter in 1..=MAX_ITERATIONS {
        let mut max_correction = 0.0f64;
        for i in 0..n {
            let z = roots[i];
            let (p, dp) = eval_with_derivative(&coeffs, z);
            if p.is_zero() {
                continue;
            }
            let newton = p / dp;
            let mut repulsion = Complex64::zero();
            for (j, other) in roots.iter().enumerate() {
                if j != i {
                    let delta = z - other;
                    repulsion += delta.finv();
                }
            }
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if !step.is_finite() {
                // Collision or derivative blow-up: nudge and keep going.
                roots[i] = z + Complex64::new(1e-4 * (1.0 + z.norm()), 1e-4);
                max_correction = f64::MAX;
                continue;
            }
            roots[i] = z - step;
            max_correction = max_correction.max(step.norm());
        }
        if max_correction < tol {
            corrections_converged = true;
            iterations = iter;
            break;
        }
    }

    let scale_top = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    // Any non-finite intermediate poisons the bound to infinity rather than
    // being silently dropped by f64::max.
    let residual_bound = roots
        .iter()
        .map(|&z| {
            let (p, _) = eval_with_derivative(&coeffs, z);
            let r = p.norm() / (scale_top * z.norm().max(1.0).powi(n as i32));
            if r.is_finite() {
                r
            } else {
                f64::INFINITY
            }
        })
        .fold(0.0f64, f64::max);

    let all_finite = roots.iter().all(|z| z.is_finite());
    let converged = all_finite && (corrections_converged || residual_bound <= RESIDUAL_ACCEPT);
    let modulus = |z: &Complex64| {
        let m = z.norm();
        if m.is_nan() {
            f64::INFINITY
        } else {
            m
        }
    };
    let max_modulus = roots.iter().map(modulus).fold(0.0f64, f64::max);
    let min_modulus = roots.iter().map(modulus).fold(f64::INFINITY, f64::min);

    Ok(RootSet {
        roots,
        residual_bound,
        max_modulus,
        min_modulus,
        converged,
        iterations,
    })
}

/// Check the annulus consequence of a holding dominance inequality: every
/// root with modulus in `[q - tol, 1 + tol]` requires the inequality to hold
/// with equality and `root^(2(j-i))` to be 1 within `tol`. Vacuously true
/// when no root lands in the annulus.
pub fn check_dominance_consequence(
    f: &Polynomial,
    query: &DominanceQuery,
    rs: &RootSet,
    tol: f64,
) -> Result<bool, RootsError> {
    let verdict = criteria::classify_dominance(f, query)
        .map_err(|e| RootsError::InvalidQuery(e.to_string()))?;
    if verdict == DominanceVerdict::Fails {
        return Err(RootsError::InvalidQuery(
            "the dominance inequality does not hold".into(),
        ));
    }
    if !rs.converged {
        return Err(RootsError::Unconverged);
    }
    let q = rational_to_f64(&query.q);
    let exponent = 2 * (query.j - query.i) as i32;
    for root in &rs.roots {
        let modulus = root.norm();
        if modulus < q - tol || modulus > 1.0 + tol {
            continue;
        }
        if verdict != DominanceVerdict::HoldsWithEquality {
            return Ok(false);
        }
        if (root.powi(exponent) - 1.0).norm() > tol {
            return Ok(false);
        }
    }
    Ok(true)
}

fn rational_to_f64(q: &num_rational::BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let num = q.numer().to_f64().unwrap_or(f64::MAX);
        let den = q.denom().to_f64().unwrap_or(f64::MAX);
        num / den
    })
}

/// Convert coefficients to f64 after a shared power-of-two downscale, so
/// monster coefficients stay finite. A common scale leaves the roots
/// unchanged.
fn scaled_f64_coeffs(f: &Polynomial) -> Vec<f64> {
    let max_bits = f.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0);
    let shift = max_bits.saturating_sub(900);
    f.coeffs()
        .iter()
        .map(|c| {
            let scaled: BigInt = c >> shift;
            scaled.to_f64().unwrap_or(0.0)
        })
        .collect()
}

fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}
