//! Stable JSON encoding of certificates.
//!
//! The schema is versioned and keeps a fixed field order:
//!
//! ```json
//! {"poly": ["a0", ..., "an"], "condition": "I"|"II", "k": int|null,
//!  "negated": bool,
//!  "witness": {"type": "leading_prime"|"prime_value", "m": string|null,
//!              "value": string},
//!  "primality_method": string,
//!  "power_extension": {"r": int, "s": string, "sign": 1|-1}|null,
//!  "version": 1}
//! ```
//!
//! All big integers travel as decimal strings so consumers limited to 64-bit
//! numbers cannot silently truncate values.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certifier::{Certificate, ConditionUsed, PowerExtension, Witness};
use crate::poly::{Polynomial, Sign};
use crate::primality::Method;

pub const CERTIFICATE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CertJsonError {
    #[error("malformed certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid certificate: {0}")]
    Invalid(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    poly: Vec<String>,
    condition: String,
    k: Option<u64>,
    negated: bool,
    witness: WitnessDoc,
    primality_method: String,
    power_extension: Option<PowerExtensionDoc>,
    version: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessDoc {
    #[serde(rename = "type")]
    kind: String,
    m: Option<String>,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PowerExtensionDoc {
    r: u32,
    s: String,
    sign: i8,
}

/// Serialize a certificate to its canonical single-line JSON form.
pub fn to_json(cert: &Certificate) -> String {
    let (kind, m, value) = match &cert.witness {
        Witness::LeadingPrime { value } => ("leading_prime", None, value.to_string()),
        Witness::PrimeValue { m, value } => ("prime_value", Some(m.to_string()), value.to_string()),
    };
    let doc = CertificateDoc {
        poly: cert
            .polynomial
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect(),
        condition: match cert.condition {
            ConditionUsed::I { .. } => "I".to_string(),
            ConditionUsed::II => "II".to_string(),
        },
        k: match cert.condition {
            ConditionUsed::I { k } => Some(k as u64),
            ConditionUsed::II => None,
        },
        negated: cert.negated,
        witness: WitnessDoc {
            kind: kind.to_string(),
            m,
            value,
        },
        primality_method: cert.primality_method.as_str().to_string(),
        power_extension: cert.power_extension.as_ref().map(|ext| PowerExtensionDoc {
            r: ext.r,
            s: ext.s.to_string(),
            sign: ext.sign.factor(),
        }),
        version: CERTIFICATE_VERSION,
    };
    serde_json::to_string(&doc).expect("certificate document serializes")
}

/// Parse and structurally validate certificate JSON. Mathematical validity
/// is a separate question answered by [`Certificate::verify`].
pub fn from_json(text: &str) -> Result<Certificate, CertJsonError> {
    let doc: CertificateDoc = serde_json::from_str(text)?;
    if doc.version != CERTIFICATE_VERSION {
        return Err(invalid(format!(
            "unsupported version {}, expected {CERTIFICATE_VERSION}",
            doc.version
        )));
    }
    let coeffs = doc
        .poly
        .iter()
        .map(|s| parse_bigint(s, "poly"))
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.last().is_none_or(|c| c.is_zero()) {
        return Err(invalid(
            "poly must be nonempty with a nonzero leading coefficient".to_string(),
        ));
    }
    let polynomial = Polynomial::new(coeffs);

    let condition = match (doc.condition.as_str(), doc.k) {
        ("I", Some(k)) => ConditionUsed::I { k: k as usize },
        ("I", None) => return Err(invalid("condition I requires k".to_string())),
        ("II", None) => ConditionUsed::II,
        ("II", Some(_)) => return Err(invalid("condition II must have k = null".to_string())),
        (other, _) => return Err(invalid(format!("unknown condition {other:?}"))),
    };

    let value = parse_biguint(&doc.witness.value, "witness.value")?;
    let witness = match (doc.witness.kind.as_str(), &doc.witness.m) {
        ("leading_prime", None) => Witness::LeadingPrime { value },
        ("leading_prime", Some(_)) => {
            return Err(invalid("leading_prime witness must have m = null".to_string()))
        }
        ("prime_value", Some(m)) => Witness::PrimeValue {
            m: parse_bigint(m, "witness.m")?,
            value,
        },
        ("prime_value", None) => {
            return Err(invalid("prime_value witness requires m".to_string()))
        }
        (other, _) => return Err(invalid(format!("unknown witness type {other:?}"))),
    };

    let primality_method = Method::parse(&doc.primality_method)
        .ok_or_else(|| invalid(format!("unknown primality method {:?}", doc.primality_method)))?;

    let power_extension = doc
        .power_extension
        .map(|ext| {
            let sign = Sign::from_factor(ext.sign)
                .ok_or_else(|| invalid(format!("sign must be 1 or -1, got {}", ext.sign)))?;
            Ok::<_, CertJsonError>(PowerExtension {
                r: ext.r,
                s: parse_bigint(&ext.s, "power_extension.s")?,
                sign,
            })
        })
        .transpose()?;

    Ok(Certificate {
        polynomial,
        condition,
        witness,
        primality_method,
        power_extension,
        negated: doc.negated,
    })
}

fn invalid(message: String) -> CertJsonError {
    CertJsonError::Invalid(message)
}

fn parse_bigint(text: &str, field: &str) -> Result<BigInt, CertJsonError> {
    BigInt::from_str(text).map_err(|_| invalid(format!("{field}: {text:?} is not a decimal integer")))
}

fn parse_biguint(text: &str, field: &str) -> Result<BigUint, CertJsonError> {
    BigUint::from_str(text)
        .map_err(|_| invalid(format!("{field}: {text:?} is not a decimal nonnegative integer")))
}
