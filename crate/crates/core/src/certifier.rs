//! Assembly, search, and offline re-verification of irreducibility
//! certificates.
//!
//! A certificate pairs one of the two coefficient conditions with a prime
//! witness: either the leading coefficient itself is prime, or |f(m)| is
//! prime at some integer point with |m| >= 2. Both conditions confine the
//! zeros to the open unit disk, and a factor of f would then have to take
//! the value +-1 at m, which the disk bound rules out. When |m| is a perfect
//! power s^r (|s| >= 2), the same witness certifies the substituted
//! polynomial f(sign * x^r) through the point s.
//!
//! Everything here is exact integer arithmetic; the numerical roots module
//! plays no part in any certificate.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use thiserror::Error;

use crate::criteria::{self, ConditionReport};
use crate::poly::{Polynomial, Sign};
use crate::primality::{self, Method};

/// Which condition the certificate rests on. Condition I carries one
/// witnessing jump index (the smallest, for determinism).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionUsed {
    I { k: usize },
    II,
}

/// The prime witness backing a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// |a_n| is prime.
    LeadingPrime { value: BigUint },
    /// |f(m)| is prime for an integer m with |m| >= 2.
    PrimeValue { m: BigInt, value: BigUint },
}

/// Power-extension data: sign * s^r = m exactly, with r >= 2 and |s| >= 2.
/// The certified subject becomes f(sign * x^r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerExtension {
    pub r: u32,
    pub s: BigInt,
    pub sign: Sign,
}

/// A self-contained, re-verifiable irreducibility certificate.
///
/// `polynomial` is the submitted polynomial; when `negated` is set the
/// conditions were established on its negation (irreducibility is invariant
/// under negation, and the witness values agree in absolute value). The
/// irreducibility claim is about [`Certificate::subject`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub polynomial: Polynomial,
    pub condition: ConditionUsed,
    pub witness: Witness,
    pub primality_method: Method,
    pub power_extension: Option<PowerExtension>,
    pub negated: bool,
}

impl Certificate {
    /// The polynomial this certificate claims irreducible: the input itself,
    /// or f(sign * x^r) under a power extension. With a negative sign the
    /// claim covers f(-x^r) only; f(x^r) itself can genuinely be reducible
    /// in that case.
    pub fn subject(&self) -> Polynomial {
        match &self.power_extension {
            Some(ext) => self.polynomial.substitute_power(ext.r, ext.sign),
            None => self.polynomial.clone(),
        }
    }

    /// Recompute every claim in the certificate from scratch: the condition
    /// on the (possibly negated) polynomial, the witness value, its
    /// primality together with the recorded method, and the power-extension
    /// identity.
    pub fn verify(&self) -> bool {
        let f = &self.polynomial;
        if f.degree().is_none_or(|n| n < 1) || !f.is_primitive() {
            return false;
        }
        let checked = if self.negated { -f } else { f.clone() };
        let report = match criteria::check_condition_i(&checked) {
            Ok(report) => report,
            Err(_) => return false,
        };
        let condition_ok = match self.condition {
            ConditionUsed::I { k } => report.jump_indices.contains(&k),
            ConditionUsed::II => report.satisfies_ii,
        };
        if !condition_ok {
            return false;
        }
        let witness_ok = match &self.witness {
            Witness::LeadingPrime { value } => {
                self.power_extension.is_none()
                    && f.leading_coeff().is_some_and(|lc| lc.magnitude() == value)
                    && self.primality_confirms(value)
            }
            Witness::PrimeValue { m, value } => {
                m.magnitude() >= &BigUint::from(2u32)
                    && f.evaluate(m).magnitude() == value
                    && self.primality_confirms(value)
            }
        };
        if !witness_ok {
            return false;
        }
        match (&self.power_extension, &self.witness) {
            (None, _) => true,
            (Some(ext), Witness::PrimeValue { m, .. }) => {
                ext.r >= 2
                    && ext.s.magnitude() >= &BigUint::from(2u32)
                    && BigInt::from(ext.sign.factor()) * ext.s.pow(ext.r) == *m
            }
            (Some(_), Witness::LeadingPrime { .. }) => false,
        }
    }

    fn primality_confirms(&self, value: &BigUint) -> bool {
        let verdict = primality::is_prime(value);
        verdict.is_prime() && verdict.method == self.primality_method
    }
}

/// Witness search parameters: points 2, -2, 3, -3, ... up to `bound` in
/// absolute value, optionally under a wall-clock cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSearchConfig {
    pub bound: u64,
    pub time_budget: Option<Duration>,
}

impl WitnessSearchConfig {
    pub fn with_bound(bound: u64) -> Self {
        WitnessSearchConfig {
            bound: bound.max(2),
            time_budget: None,
        }
    }
}

impl Default for WitnessSearchConfig {
    fn default() -> Self {
        WitnessSearchConfig::with_bound(100)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("polynomial degree must be at least 1")]
    DegreeTooLow,
    #[error("content exceeds 1, so the polynomial has a constant factor and no prime witness can exist")]
    NonPrimitive,
    #[error("neither coefficient condition holds (also tried the negation when the leading coefficient is negative)")]
    NoCondition,
    #[error("no prime witness found for |m| up to {bound}")]
    NoWitnessFound { bound: u64 },
    #[error("time budget exhausted before the witness search completed")]
    BudgetExceeded,
    #[error("|m| = |{m}| is not a perfect power s^r with r >= 2 and |s| >= 2")]
    NotAPower { m: BigInt },
    #[error("|m| must be at least 2, got m = {m}")]
    WitnessOutOfRange { m: BigInt },
    #[error("|f({m})| = {value} is not prime")]
    WitnessNotPrime { m: BigInt, value: BigUint },
}

impl CertifyError {
    /// Stable machine-readable reason token.
    pub fn code(&self) -> &'static str {
        match self {
            CertifyError::DegreeTooLow => "DegreeTooLow",
            CertifyError::NonPrimitive => "NonPrimitive",
            CertifyError::NoCondition => "NoCondition",
            CertifyError::NoWitnessFound { .. } => "NoWitnessFound",
            CertifyError::BudgetExceeded => "BudgetExceeded",
            CertifyError::NotAPower { .. } => "NotAPower",
            CertifyError::WitnessOutOfRange { .. } => "WitnessOutOfRange",
            CertifyError::WitnessNotPrime { .. } => "WitnessNotPrime",
        }
    }
}

/// Search for a certificate: establish a condition (trying -f if f's
/// leading coefficient is negative and f itself fails), then try the
/// leading-coefficient witness followed by the deterministic point scan
/// 2, -2, 3, -3, ... The first success wins, so certificates are canonical.
pub fn certify(f: &Polynomial, cfg: &WitnessSearchConfig) -> Result<Certificate, CertifyError> {
    let (condition, negated) = establish_condition(f)?;

    let started = Instant::now();
    let lead = f.leading_coeff().expect("degree checked").magnitude();
    let verdict = primality::is_prime(lead);
    if verdict.is_prime() {
        return Ok(Certificate {
            polynomial: f.clone(),
            condition,
            witness: Witness::LeadingPrime {
                value: lead.clone(),
            },
            primality_method: verdict.method,
            power_extension: None,
            negated,
        });
    }

    for m in witness_candidates(cfg.bound) {
        if let Some(limit) = cfg.time_budget {
            if started.elapsed() >= limit {
                return Err(CertifyError::BudgetExceeded);
            }
        }
        let m = BigInt::from(m);
        let value = f.evaluate(&m).magnitude().clone();
        let verdict = primality::is_prime(&value);
        if verdict.is_prime() {
            return Ok(Certificate {
                polynomial: f.clone(),
                condition,
                witness: Witness::PrimeValue { m, value },
                primality_method: verdict.method,
                power_extension: None,
                negated,
            });
        }
    }
    Err(CertifyError::NoWitnessFound { bound: cfg.bound })
}

/// Certificates for the substituted polynomials f(sign * x^r), one per
/// exponent r >= 2 with |m| = |s|^r and |s| >= 2, in ascending r. The
/// witness point m is explicit here, unlike [`certify`]'s automatic scan.
pub fn certify_power_all(
    f: &Polynomial,
    m: &BigInt,
    _cfg: &WitnessSearchConfig,
) -> Result<Vec<Certificate>, CertifyError> {
    let base = certify_at(f, m)?;
    let extensions = power_extensions(m);
    if extensions.is_empty() {
        return Err(CertifyError::NotAPower { m: m.clone() });
    }
    Ok(extensions
        .into_iter()
        .map(|ext| {
            let mut cert = base.clone();
            cert.power_extension = Some(ext);
            cert
        })
        .collect())
}

/// The maximal-exponent power certificate for an explicit witness point.
pub fn certify_power(
    f: &Polynomial,
    m: &BigInt,
    cfg: &WitnessSearchConfig,
) -> Result<Certificate, CertifyError> {
    Ok(certify_power_all(f, m, cfg)?.pop().expect("nonempty"))
}

/// Build a prime-value certificate at one explicit point.
fn certify_at(f: &Polynomial, m: &BigInt) -> Result<Certificate, CertifyError> {
    let (condition, negated) = establish_condition(f)?;
    if m.magnitude() < &BigUint::from(2u32) {
        return Err(CertifyError::WitnessOutOfRange { m: m.clone() });
    }
    let value = f.evaluate(m).magnitude().clone();
    let verdict = primality::is_prime(&value);
    if !verdict.is_prime() {
        return Err(CertifyError::WitnessNotPrime {
            m: m.clone(),
            value,
        });
    }
    Ok(Certificate {
        polynomial: f.clone(),
        condition,
        witness: Witness::PrimeValue {
            m: m.clone(),
            value,
        },
        primality_method: verdict.method,
        power_extension: None,
        negated,
    })
}

fn establish_condition(f: &Polynomial) -> Result<(ConditionUsed, bool), CertifyError> {
    if f.degree().is_none_or(|n| n < 1) {
        return Err(CertifyError::DegreeTooLow);
    }
    if !f.is_primitive() {
        return Err(CertifyError::NonPrimitive);
    }
    let report = criteria::check_condition_i(f).map_err(|_| CertifyError::DegreeTooLow)?;
    if let Some(condition) = pick_condition(&report) {
        return Ok((condition, false));
    }
    if f.leading_coeff().is_some_and(|lc| lc.is_negative()) {
        let report = criteria::check_condition_i(&-f).map_err(|_| CertifyError::DegreeTooLow)?;
        if let Some(condition) = pick_condition(&report) {
            return Ok((condition, true));
        }
    }
    Err(CertifyError::NoCondition)
}

fn pick_condition(report: &ConditionReport) -> Option<ConditionUsed> {
    if report.satisfies_i {
        let k = *report.jump_indices.iter().next().expect("nonempty");
        Some(ConditionUsed::I { k })
    } else if report.satisfies_ii {
        Some(ConditionUsed::II)
    } else {
        None
    }
}

/// Deterministic witness enumeration 2, -2, 3, -3, ..., bound, -bound.
fn witness_candidates(bound: u64) -> impl Iterator<Item = i64> {
    (2..=bound.min(i64::MAX as u64) as i64).flat_map(|m| [m, -m])
}

/// All ways to write |m| as |s|^r with r >= 2 and |s| >= 2, in ascending r,
/// with the sign arranged so that sign * s^r = m exactly.
fn power_extensions(m: &BigInt) -> Vec<PowerExtension> {
    let magnitude = m.magnitude();
    let mut out = Vec::new();
    if magnitude < &BigUint::from(4u32) {
        return out;
    }
    let max_r = magnitude.bits() as u32;
    for r in 2..=max_r {
        let root = magnitude.nth_root(r);
        if root < BigUint::from(2u32) || root.pow(r) != *magnitude {
            continue;
        }
        let (s, sign) = if m.is_positive() {
            (BigInt::from(root), Sign::Plus)
        } else if r % 2 == 1 {
            (-BigInt::from(root), Sign::Plus)
        } else {
            (BigInt::from(root), Sign::Minus)
        };
        out.push(PowerExtension { r, s, sign });
    }
    out
}
