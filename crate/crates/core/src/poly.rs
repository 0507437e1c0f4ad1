//! Exact arithmetic on univariate integer polynomials.
//!
//! Coefficients are arbitrary-precision integers stored in ascending order of
//! degree: `coeffs[i]` is the coefficient of `x^i`. The highest stored
//! coefficient is always nonzero; the zero polynomial is an empty vector and
//! has no degree. All operations are pure and exact.

use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors from polynomial operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// `reciprocal` needs a nonzero constant term, otherwise the degree drops
    /// and a root at zero is lost.
    #[error("constant term is zero; coefficient reversal would drop the degree")]
    ZeroConstantTerm,
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("no exact integer quotient exists")]
    NotDivisible,
}

/// Sign of a substitution `x -> sign * x^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign as a multiplicative factor, `1` or `-1`.
    pub fn factor(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_factor(factor: i8) -> Option<Sign> {
        match factor {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A univariate polynomial with exact integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Build a polynomial from ascending coefficients (`coeffs[i]` is the
    /// coefficient of `x^i`). Trailing zeros are trimmed so the representation
    /// is canonical.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Convenience constructor from anything convertible to `BigInt`,
    /// ascending order.
    pub fn from_coeffs<T, I>(coeffs: I) -> Self
    where
        BigInt: From<T>,
        I: IntoIterator<Item = T>,
    {
        Polynomial::new(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient, `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exact evaluation at an integer point (Horner order).
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// The reciprocal polynomial `x^n * f(1/x)`: the coefficient sequence
    /// reversed. Requires a nonzero constant term so that the degree is
    /// preserved; it is an involution on such polynomials.
    pub fn reciprocal(&self) -> Result<Polynomial, PolyError> {
        if self.constant_term().is_zero() {
            return Err(PolyError::ZeroConstantTerm);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Polynomial::new(coeffs))
    }

    /// Substitute `x -> sign * x^r`: the coefficient of `x^i` moves to
    /// `x^(r*i)` and picks up `sign^i`. `r` must be at least 1.
    pub fn substitute_power(&self, r: u32, sign: Sign) -> Polynomial {
        assert!(r >= 1, "substitution exponent must be at least 1");
        let Some(n) = self.degree() else {
            return Polynomial::zero();
        };
        let r = r as usize;
        let mut coeffs = vec![BigInt::zero(); r * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[r * i] = if sign == Sign::Minus && i % 2 == 1 {
                -c
            } else {
                c.clone()
            };
        }
        Polynomial::new(coeffs)
    }

    /// Content: the gcd of all coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigUint {
        self.coeffs
            .iter()
            .fold(BigUint::zero(), |acc, c| acc.gcd(c.magnitude()))
    }

    /// A polynomial is primitive when its content is 1.
    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// Exact division: returns `q` with `self = q * divisor` and integer
    /// coefficients, or `NotDivisible`. Any step whose leading-coefficient
    /// division leaves a remainder aborts, and the quotient is confirmed by
    /// re-multiplication.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let n = self.degree().unwrap();
        let m = divisor.degree().unwrap();
        if n < m {
            return Err(PolyError::NotDivisible);
        }
        let dlc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for i in (0..=n - m).rev() {
            let lead = rem[m + i].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = lead.div_rem(dlc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        let quotient = Polynomial::new(quot);
        if &(&quotient * divisor) != self {
            return Err(PolyError::NotDivisible);
        }
        Ok(quotient)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Renders in the expression grammar accepted by the parser, descending
    /// powers: `10x^5+3x^4+2x^3+x^2+1`, `-x+1`, `0`.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(out, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(out, "-")?;
            } else {
                write!(out, "+")?;
            }
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(out, "{mag}")?;
            }
            if k >= 1 {
                write!(out, "x")?;
            }
            if k >= 2 {
                write!(out, "^{k}")?;
            }
        }
        Ok(())
    }
}
