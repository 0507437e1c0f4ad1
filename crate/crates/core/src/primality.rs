//! Primality of arbitrary-precision nonnegative integers.
//!
//! Values below 2^16 are settled by trial division, everything representable
//! in 64 bits by Miller-Rabin over a complete deterministic base set, and
//! larger values by a Baillie-PSW test (strong base-2 probable prime plus a
//! strong Lucas test with Selfridge parameters). The method used is recorded
//! alongside the verdict so a certificate can disclose whether its primality
//! claim is deterministic.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Outcome of a primality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Prime,
    ProbablePrime,
    Composite,
}

/// Which algorithm produced the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TrialDivision,
    DeterministicMillerRabin,
    BailliePswProbable,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::TrialDivision => "trial_division",
            Method::DeterministicMillerRabin => "deterministic_mr",
            Method::BailliePswProbable => "bpsw_probable",
        }
    }

    pub fn parse(s: &str) -> Option<Method> {
        match s {
            "trial_division" => Some(Method::TrialDivision),
            "deterministic_mr" => Some(Method::DeterministicMillerRabin),
            "bpsw_probable" => Some(Method::BailliePswProbable),
            _ => None,
        }
    }
}

/// A verdict paired with the tested value and the deciding method.
///
/// `Prime` is only ever reported by the two deterministic methods;
/// the Baillie-PSW range reports `ProbablePrime` at best.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub value: BigUint,
    pub verdict: Verdict,
    pub method: Method,
}

impl PrimalityVerdict {
    /// True for `Prime` and `ProbablePrime` alike.
    pub fn is_prime(&self) -> bool {
        matches!(self.verdict, Verdict::Prime | Verdict::ProbablePrime)
    }
}

const TRIAL_DIVISION_LIMIT: u64 = 1 << 16;

/// Test `v` for primality. 0 and 1 are composite-classified. Deterministic
/// for every value that fits in 64 bits.
pub fn is_prime(v: &BigUint) -> PrimalityVerdict {
    let (verdict, method) = match v.to_u64() {
        Some(n) if n < TRIAL_DIVISION_LIMIT => (
            verdict_of(trial_division_is_prime(n)),
            Method::TrialDivision,
        ),
        Some(n) => (
            verdict_of(miller_rabin_u64(n)),
            Method::DeterministicMillerRabin,
        ),
        None => (
            if baillie_psw(v) {
                Verdict::ProbablePrime
            } else {
                Verdict::Composite
            },
            Method::BailliePswProbable,
        ),
    };
    PrimalityVerdict {
        value: v.clone(),
        verdict,
        method,
    }
}

fn verdict_of(is_prime: bool) -> Verdict {
    if is_prime {
        Verdict::Prime
    } else {
        Verdict::Composite
    }
}

fn trial_division_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// The first twelve primes witness every 64-bit composite.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn miller_rabin_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'base: for a in MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97,
];

fn baillie_psw(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return if small < TRIAL_DIVISION_LIMIT {
            trial_division_is_prime(small)
        } else {
            miller_rabin_u64(small)
        };
    }
    for p in SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if !strong_probable_prime_base2(n) {
        return false;
    }
    // A perfect square has no D with Jacobi(D, n) = -1; rule it out before
    // the Selfridge search.
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let Some(d) = selfridge_d(n) else {
        return false;
    };
    strong_lucas_probable_prime(n, d)
}

fn strong_probable_prime_base2(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap();
    let d = &n_minus_1 >> s;
    let mut x = BigUint::from(2u32).modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Selfridge method A: the first D in 5, -7, 9, -11, ... with
/// Jacobi(D, n) = -1. Returns `None` when some candidate shares a factor
/// with n, which proves n composite here because n has no prime factor
/// below 100.
fn selfridge_d(n: &BigUint) -> Option<i64> {
    let mut d: i64 = 5;
    loop {
        match jacobi(&BigInt::from(d), n) {
            -1 => return Some(d),
            0 => return None,
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -(d - 2) };
    }
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    debug_assert!(n.is_odd());
    let n_int = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n_int).to_biguint().unwrap();
    let mut n = n.clone();
    let mut sign = 1i32;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        if twos > 0 {
            a >>= twos;
            let n_mod_8 = (&n % 8u32).to_u32().unwrap();
            if twos % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
                sign = -sign;
            }
        }
        if (&a % 4u32).to_u32().unwrap() == 3 && (&n % 4u32).to_u32().unwrap() == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with P = 1, Q = (1 - D) / 4.
fn strong_lucas_probable_prime(n: &BigUint, d: i64) -> bool {
    let n_int = BigInt::from(n.clone());
    let d_big = BigInt::from(d);
    let q: BigInt = (BigInt::one() - &d_big) / 4;

    // n + 1 = idx * 2^s with idx odd.
    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap();
    let idx = &n_plus_1 >> s;

    let half = |x: BigInt| -> BigInt {
        let x = x.mod_floor(&n_int);
        if x.is_even() {
            x / 2
        } else {
            (x + &n_int) / 2
        }
    };

    // Binary ladder over the bits of idx, most significant first, tracking
    // (U_k, V_k, Q^k) mod n.
    let mut u = BigInt::one();
    let mut v = BigInt::one(); // P = 1
    let mut qk = q.mod_floor(&n_int);
    let bits = idx.bits();
    for pos in (0..bits - 1).rev() {
        // double
        let u2 = (&u * &v).mod_floor(&n_int);
        let v2 = (&v * &v - &qk - &qk).mod_floor(&n_int);
        let q2 = (&qk * &qk).mod_floor(&n_int);
        u = u2;
        v = v2;
        qk = q2;
        if idx.bit(pos) {
            // advance by one: U' = (U + V)/2, V' = (D*U + V)/2 for P = 1.
            let u1 = half(&u + &v);
            let v1 = half(&d_big * &u + &v);
            u = u1;
            v = v1;
            qk = (&qk * &q).mod_floor(&n_int);
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk - &qk).mod_floor(&n_int);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(&n_int);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn boundary_values() {
        assert!(!is_prime(&big(0)).is_prime());
        assert!(!is_prime(&big(1)).is_prime());
        let two = is_prime(&big(2));
        assert_eq!(two.verdict, Verdict::Prime);
        assert_eq!(two.method, Method::TrialDivision);
    }

    #[test]
    fn known_values() {
        assert_eq!(is_prime(&big(389)).verdict, Verdict::Prime);
        assert_eq!(is_prime(&big(29)).verdict, Verdict::Prime);
        assert_eq!(is_prime(&big(313)).verdict, Verdict::Prime);
        assert_eq!(is_prime(&big(157)).verdict, Verdict::Prime);
        // 11153 = 19 * 587
        assert_eq!(is_prime(&big(11153)).verdict, Verdict::Composite);
        // 2737 = 7 * 17 * 23
        assert_eq!(is_prime(&big(2737)).verdict, Verdict::Composite);
    }

    #[test]
    fn fermat_primes() {
        for p in [5u128, 17, 257, 65537] {
            assert!(is_prime(&big(p)).is_prime(), "{p}");
        }
        // 65537 sits just above the trial-division cutoff.
        assert_eq!(is_prime(&big(65537)).method, Method::DeterministicMillerRabin);
        assert_eq!(is_prime(&big(257)).method, Method::TrialDivision);
    }

    #[test]
    fn mersenne_exponent_61_is_prime_deterministically() {
        let m61 = (BigUint::one() << 61u32) - 1u32;
        let v = is_prime(&m61);
        assert_eq!(v.verdict, Verdict::Prime);
        assert_eq!(v.method, Method::DeterministicMillerRabin);
    }

    #[test]
    fn carmichael_numbers_are_composite() {
        for n in [561u128, 41041, 29341, 825265] {
            assert_eq!(is_prime(&big(n)).verdict, Verdict::Composite, "{n}");
            assert!(!miller_rabin_u64(n as u64), "{n}");
        }
    }

    #[test]
    fn agrees_with_trial_division_to_one_hundred_thousand() {
        for n in 0u64..100_000 {
            assert_eq!(
                is_prime(&BigUint::from(n)).is_prime(),
                trial_division_is_prime(n),
                "{n}"
            );
        }
    }

    #[test]
    fn wide_values_use_bpsw() {
        // 2^89 - 1 is prime; it exceeds 64 bits so only a probable verdict
        // is available.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        let v = is_prime(&m89);
        assert_eq!(v.verdict, Verdict::ProbablePrime);
        assert_eq!(v.method, Method::BailliePswProbable);

        // 2^67 - 1 = 193707721 * 761838257287.
        let m67 = (BigUint::one() << 67u32) - 1u32;
        assert_eq!(is_prime(&m67).verdict, Verdict::Composite);

        // A perfect square above 64 bits.
        let m61 = (BigUint::one() << 61u32) - 1u32;
        assert_eq!(is_prime(&(&m61 * &m61)).verdict, Verdict::Composite);

        // Product of two wide primes.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        assert_eq!(is_prime(&(&m61 * &m89)).verdict, Verdict::Composite);
    }

    #[test]
    fn bpsw_agrees_with_trial_division_on_odd_values() {
        for n in (5u64..30_000).step_by(2) {
            assert_eq!(
                baillie_psw(&BigUint::from(n)),
                trial_division_is_prime(n),
                "{n}"
            );
        }
    }

    #[test]
    fn strong_lucas_admits_exactly_its_known_pseudoprimes() {
        // Odd non-square composites below 26000 passing the strong Lucas
        // test with Selfridge parameters. These all fail the base-2 strong
        // test, which is exactly why the two are combined.
        let expected = [5459u64, 5777, 10877, 16109, 18971, 22499, 24569, 25199];
        let mut found = Vec::new();
        for n in (3u64..26_000).step_by(2) {
            if trial_division_is_prime(n) {
                continue;
            }
            let b = BigUint::from(n);
            let root = b.sqrt();
            if &root * &root == b {
                continue;
            }
            let Some(d) = selfridge_d(&b) else {
                continue;
            };
            if strong_lucas_probable_prime(&b, d) {
                assert!(!strong_probable_prime_base2(&b), "{n}");
                found.push(n);
            }
        }
        assert_eq!(found, expected);
    }

    #[test]
    fn jacobi_matches_euler_criterion_for_primes() {
        for p in (3u64..300).filter(|&p| trial_division_is_prime(p)) {
            let pb = BigUint::from(p);
            for a in 1..p {
                let euler = pow_mod(a, (p - 1) / 2, p);
                let expected = if euler == 1 {
                    1
                } else if euler == p - 1 {
                    -1
                } else {
                    0
                };
                assert_eq!(jacobi(&BigInt::from(a), &pb), expected, "({a}/{p})");
            }
        }
    }

    #[test]
    fn jacobi_handles_negative_numerators() {
        // (-1/n) is 1 for n = 1 mod 4 and -1 for n = 3 mod 4.
        assert_eq!(jacobi(&BigInt::from(-1), &BigUint::from(13u32)), 1);
        assert_eq!(jacobi(&BigInt::from(-1), &BigUint::from(19u32)), -1);
        assert_eq!(jacobi(&BigInt::from(1001), &BigUint::from(9907u32)), -1);
    }

    #[test]
    fn verdicts_are_deterministic() {
        let v = big(1_000_003);
        assert_eq!(is_prime(&v), is_prime(&v));
    }
}
