//! Command-line front end.
//!
//! Exit codes: 0 certified / verified / consistent, 1 not certified or
//! verification failed, 2 usage or parse error, 3 budget exceeded or
//! inconclusive numerics.

use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use polycert::certifier::{certify, certify_power_all, Certificate, CertifyError, ConditionUsed, Witness, WitnessSearchConfig};
use polycert::certjson;
use polycert::criteria;
use polycert::kronecker::{self, FactorVerdict, OracleError};
use polycert::parse::parse_poly;
use polycert::poly::Polynomial;
use polycert::roots;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "polycert",
    version,
    about = "Certify irreducibility of integer polynomials via coefficient conditions and prime witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial expression, e.g. "10x^5+3x^4+2x^3+x^2+1" or "2^51*x^10-1".
    #[arg(long, value_name = "TEXT", conflicts_with = "coeffs", allow_hyphen_values = true)]
    expr: Option<String>,
    /// Comma-separated coefficients in ascending order (constant term
    /// first): "1,0,1,2,3,10" is 10x^5+3x^4+2x^3+x^2+1.
    #[arg(long, value_name = "CSV", allow_hyphen_values = true)]
    coeffs: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Search for an irreducibility certificate.
    Certify {
        #[command(flatten)]
        input: PolyInput,
        /// Largest |m| scanned for a prime value |f(m)|.
        #[arg(long, default_value_t = 100)]
        bound: u64,
        /// Also emit certificates for f(sign * x^r) when |m| is a perfect power.
        #[arg(long)]
        power: bool,
        /// Emit certificates as JSON, one per line.
        #[arg(long)]
        json: bool,
    },
    /// Re-verify certificates from a JSON file ("-" reads stdin).
    Verify {
        /// Path to a file holding one certificate JSON object per line.
        file: String,
    },
    /// Factor exhaustively with the Kronecker search, or prove irreducibility.
    Factor {
        #[command(flatten)]
        input: PolyInput,
        /// Candidate-tuple budget before the search gives up.
        #[arg(long, default_value_t = kronecker::DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Locate all complex roots numerically and report modulus extremes.
    Roots {
        #[command(flatten)]
        input: PolyInput,
        /// Convergence tolerance on the largest per-root correction.
        #[arg(long, default_value_t = roots::DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Report which coefficient conditions hold.
    CheckConditions {
        #[command(flatten)]
        input: PolyInput,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    ExitCode::from(run(Cli::parse()))
}

fn run(cli: Cli) -> u8 {
    match cli.command {
        Command::Certify {
            input,
            bound,
            power,
            json,
        } => match read_poly(&input) {
            Ok(f) => cmd_certify(&f, bound, power, json),
            Err(code) => code,
        },
        Command::Verify { file } => cmd_verify(&file),
        Command::Factor {
            input,
            budget,
            json,
        } => match read_poly(&input) {
            Ok(f) => cmd_factor(&f, budget, json),
            Err(code) => code,
        },
        Command::Roots { input, tol, json } => match read_poly(&input) {
            Ok(f) => cmd_roots(&f, tol, json),
            Err(code) => code,
        },
        Command::CheckConditions { input, json } => match read_poly(&input) {
            Ok(f) => cmd_check_conditions(&f, json),
            Err(code) => code,
        },
    }
}

fn read_poly(input: &PolyInput) -> Result<Polynomial, u8> {
    match (&input.expr, &input.coeffs) {
        (Some(text), None) => parse_poly(text).map_err(|e| {
            eprintln!("error: {e}");
            EXIT_USAGE
        }),
        (None, Some(csv)) => {
            let coeffs: Result<Vec<BigInt>, _> = csv
                .split(',')
                .map(|part| BigInt::from_str(part.trim()))
                .collect();
            match coeffs {
                Ok(coeffs) if !coeffs.is_empty() => Ok(Polynomial::new(coeffs)),
                _ => {
                    eprintln!("error: --coeffs expects comma-separated integers, ascending");
                    Err(EXIT_USAGE)
                }
            }
        }
        _ => {
            eprintln!("error: provide the polynomial with --expr or --coeffs");
            Err(EXIT_USAGE)
        }
    }
}

fn cmd_certify(f: &Polynomial, bound: u64, power: bool, json: bool) -> u8 {
    let cfg = WitnessSearchConfig {
        bound,
        time_budget: None,
    };
    let cert = match certify(f, &cfg) {
        Ok(cert) => cert,
        Err(err) => {
            let code = match err {
                CertifyError::DegreeTooLow => EXIT_USAGE,
                CertifyError::BudgetExceeded => EXIT_INCONCLUSIVE,
                _ => EXIT_NEGATIVE,
            };
            eprintln!("not certified: {} ({err})", err.code());
            return code;
        }
    };
    let mut certificates = vec![cert.clone()];
    if power {
        if let Witness::PrimeValue { m, .. } = &cert.witness {
            if let Ok(extended) = certify_power_all(f, m, &cfg) {
                certificates.extend(extended);
            }
        }
    }
    for cert in &certificates {
        if json {
            println!("{}", certjson::to_json(cert));
        } else {
            print_certificate(cert);
        }
    }
    EXIT_OK
}

fn print_certificate(cert: &Certificate) {
    println!("certified irreducible: {}", cert.subject());
    match cert.condition {
        ConditionUsed::I { k } => println!("  condition: I (jump index k = {k})"),
        ConditionUsed::II => println!("  condition: II"),
    }
    if cert.negated {
        println!("  conditions established on the negated polynomial");
    }
    match &cert.witness {
        Witness::LeadingPrime { value } => {
            println!("  witness: leading coefficient {value} is prime");
        }
        Witness::PrimeValue { m, value } => {
            println!("  witness: |f({m})| = {value} is prime");
        }
    }
    println!("  primality method: {}", cert.primality_method.as_str());
    if let Some(ext) = &cert.power_extension {
        println!(
            "  power extension: r = {}, s = {}, sign = {}",
            ext.r,
            ext.s,
            ext.sign.factor()
        );
    }
}

fn cmd_verify(file: &str) -> u8 {
    let text = if file == "-" {
        let mut buffer = String::new();
        if std::io::stdin().read_to_string(&mut buffer).is_err() {
            eprintln!("error: could not read stdin");
            return EXIT_USAGE;
        }
        buffer
    } else {
        match std::fs::read_to_string(file) {
            Ok(text) => text,
            Err(err) => {
                eprintln!("error: could not read {file}: {err}");
                return EXIT_USAGE;
            }
        }
    };
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.is_empty() {
        eprintln!("error: no certificates found");
        return EXIT_USAGE;
    }
    let mut all_valid = true;
    for (idx, line) in lines.iter().enumerate() {
        match certjson::from_json(line) {
            Ok(cert) => {
                if cert.verify() {
                    println!("line {}: valid certificate for {}", idx + 1, cert.subject());
                } else {
                    println!("line {}: INVALID certificate", idx + 1);
                    all_valid = false;
                }
            }
            Err(err) => {
                eprintln!("line {}: {err}", idx + 1);
                return EXIT_USAGE;
            }
        }
    }
    if all_valid {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn cmd_factor(f: &Polynomial, budget: u64, json: bool) -> u8 {
    match kronecker::kronecker_factor(f, budget) {
        Ok(result) => {
            match &result.verdict {
                FactorVerdict::Irreducible => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "verdict": "irreducible",
                                "examined": result.search_space_size,
                            })
                        );
                    } else {
                        println!(
                            "irreducible ({} candidate tuples examined)",
                            result.search_space_size
                        );
                    }
                }
                FactorVerdict::Reducible { factors: (g, h) } => {
                    if json {
                        println!(
                            "{}",
                            serde_json::json!({
                                "verdict": "reducible",
                                "factors": [g.to_string(), h.to_string()],
                                "examined": result.search_space_size,
                            })
                        );
                    } else {
                        println!("reducible: ({g}) * ({h})");
                    }
                }
            }
            EXIT_OK
        }
        Err(OracleError::DegreeTooLow) => {
            eprintln!("error: {}", OracleError::DegreeTooLow);
            EXIT_USAGE
        }
        Err(err @ OracleError::BudgetExceeded { .. }) => {
            eprintln!("inconclusive: {err}");
            EXIT_INCONCLUSIVE
        }
    }
}

fn cmd_roots(f: &Polynomial, tol: f64, json: bool) -> u8 {
    let rs = match roots::find_roots(f, tol) {
        Ok(rs) => rs,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    if json {
        let pairs: Vec<[f64; 2]> = rs.roots.iter().map(|z| [z.re, z.im]).collect();
        println!(
            "{}",
            serde_json::json!({
                "converged": rs.converged,
                "iterations": rs.iterations,
                "max_modulus": rs.max_modulus,
                "min_modulus": rs.min_modulus,
                "residual_bound": rs.residual_bound,
                "roots": pairs,
            })
        );
    } else {
        for z in &rs.roots {
            println!("{:+.12e} {:+.12e}i  (|z| = {:.12})", z.re, z.im, z.norm());
        }
        println!(
            "max |z| = {:.12}, min |z| = {:.12}, residual bound = {:.3e}",
            rs.max_modulus, rs.min_modulus, rs.residual_bound
        );
    }
    if rs.converged {
        EXIT_OK
    } else {
        eprintln!("inconclusive: iteration did not converge");
        EXIT_INCONCLUSIVE
    }
}

fn cmd_check_conditions(f: &Polynomial, json: bool) -> u8 {
    let report = match criteria::check_condition_i(f) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };
    let jumps: Vec<usize> = report.jump_indices.iter().copied().collect();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "condition_i": report.satisfies_i,
                "condition_ii": report.satisfies_ii,
                "degree": report.degree,
                "jump_indices": jumps,
            })
        );
    } else {
        if report.satisfies_i {
            println!("condition I: satisfied, jump indices {jumps:?}");
        } else {
            println!("condition I: not satisfied");
        }
        println!(
            "condition II: {}",
            if report.satisfies_ii {
                "satisfied"
            } else {
                "not satisfied"
            }
        );
    }
    if report.satisfies_i || report.satisfies_ii {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}
