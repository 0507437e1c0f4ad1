//! Irreducibility certificates for integer polynomials.
//!
//! Two coefficient shapes confine every complex zero of an integer
//! polynomial to the open unit disk: positive non-decreasing coefficients
//! with a double strict jump (condition I), or a leading coefficient that
//! dominates the absolute sum of the others with a nonzero constant term
//! (condition II). For such a polynomial, a prime leading coefficient or a
//! prime value |f(m)| at any integer point with |m| >= 2 certifies
//! irreducibility over the integers, because any factorization would force
//! one factor to take the value 1 in absolute value where the disk bound
//! says it cannot. When |m| = |s|^r with |s| >= 2, the same witness carries
//! the substituted polynomial f(sign * x^r).
//!
//! The crate provides exact polynomial arithmetic, the condition checks,
//! primality testing with the deciding method disclosed, certificate
//! search/serialization/re-verification, a brute-force Kronecker
//! factorization oracle for cross-validation, and a numerical root locator
//! used only to sanity-check the disk bounds in tests.

pub mod certifier;
pub mod certjson;
pub mod criteria;
pub mod kronecker;
pub mod parse;
pub mod poly;
pub mod primality;
pub mod roots;

pub use certifier::{
    certify, certify_power, certify_power_all, Certificate, CertifyError, ConditionUsed,
    PowerExtension, Witness, WitnessSearchConfig,
};
pub use criteria::{
    check_condition_i, check_condition_ii, classify_dominance, ConditionReport, CriteriaError,
    DominanceQuery, DominanceVerdict,
};
pub use kronecker::{kronecker_factor, FactorVerdict, FactorizationResult, OracleError};
pub use parse::{parse_poly, ParseError};
pub use poly::{PolyError, Polynomial, Sign};
pub use primality::{is_prime, Method, PrimalityVerdict, Verdict};
pub use roots::{check_dominance_consequence, find_roots, RootSet, RootsError};
