//! Base-p digit arithmetic, p-adic valuations and unit parts, and the
//! standard congruences for factorials and binomial coefficients.
//!
//! Index-like quantities (`n`, `k`, exponents, digits) are machine
//! integers; the values they index into (factorials, binomials, Stirling
//! numbers) are arbitrary-precision. Valuations of big integers and
//! rationals are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// A validated prime modulus. Construction checks primality by trial
/// division, so composite moduli are rejected once at the API boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

/// Largest accepted prime. Digit loops are O(p) in places, so huge
/// moduli are rejected up front instead of stalling.
pub const MAX_PRIME: u64 = 1 << 20;

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::Domain(format!(
                "prime {p} exceeds the supported bound {MAX_PRIME}"
            )));
        }
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Base-p representation of a non-negative integer, little-endian: index
/// `i` holds the coefficient of p^i. Zero is the empty sequence and there
/// is never a trailing zero digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitVector {
    digits: Vec<u64>,
    p: Prime,
}

impl DigitVector {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Digit at position `i`, zero beyond the most significant digit.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit sum sigma_p.
    pub fn sum(&self) -> u64 {
        self.digits.iter().sum()
    }

    /// Reconstructs the represented integer.
    pub fn value(&self) -> u64 {
        let mut acc = 0u64;
        for &d in self.digits.iter().rev() {
            acc = acc * self.p.get() + d;
        }
        acc
    }
}

/// Base-p digits of `n`, little-endian.
pub fn digits(n: u64, p: Prime) -> DigitVector {
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p.get());
        m /= p.get();
    }
    DigitVector { digits, p }
}

/// sigma_p(n), the sum of the base-p digits of `n`.
pub fn digit_sum(n: u64, p: Prime) -> u64 {
    let mut sum = 0;
    let mut m = n;
    while m > 0 {
        sum += m % p.get();
        m /= p.get();
    }
    sum
}

/// Digit sum and valuation after incrementing: returns
/// `(sigma_p(k+1), nu_p(k+1))`. Adding one replaces the bottom run of
/// (p-1)-digits by zeros and bumps the next digit, so
/// sigma_p(k+1) = sigma_p(k) + 1 - (p-1) * nu_p(k+1).
pub fn digit_sum_successor(k: u64, p: Prime) -> (u64, u32) {
    let next = k + 1;
    (digit_sum(next, p), nu_u64(next, p))
}

fn nu_u64(n: u64, p: Prime) -> u32 {
    debug_assert!(n > 0);
    let mut v = 0;
    let mut m = n;
    while m % p.get() == 0 {
        v += 1;
        m /= p.get();
    }
    v
}

/// A p-adic valuation: the exponent of p, or +infinity for the value 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_none(),
        }
    }
}

/// A value split as unit * p^valuation. The unit is prime to p in both
/// numerator and denominator, and `unit_residue` is its class mod p,
/// normalized into [1, p-1] (rational units reduce the denominator by its
/// modular inverse). Zero carries an infinite valuation and no unit.
#[derive(Debug, Clone, PartialEq)]
pub struct ValUnit {
    pub valuation: Valuation,
    pub unit: Option<BigRational>,
    pub unit_residue: Option<u64>,
}

/// nu_p of a nonzero big integer.
pub fn nu_int(x: &BigInt, p: Prime) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let p_big = BigInt::from(p.get());
    let mut v = 0i64;
    let mut m = x.abs();
    loop {
        let (q, r) = m.div_rem(&p_big);
        if !r.is_zero() {
            return Ok(v);
        }
        v += 1;
        m = q;
    }
}

/// nu_p of a nonzero rational: nu of the numerator minus nu of the
/// denominator.
pub fn nu(q: &BigRational, p: Prime) -> Result<i64> {
    if q.is_zero() {
        return Err(Error::ZeroValuation);
    }
    // BigRational is kept in lowest terms, so at most one of the two
    // loops actually iterates.
    Ok(nu_int(q.numer(), p)? - nu_int(q.denom(), p)?)
}

/// Valuation/unit decomposition of a big integer (0 allowed).
pub fn val_unit_int(x: &BigInt, p: Prime) -> ValUnit {
    if x.is_zero() {
        return ValUnit {
            valuation: Valuation::Infinite,
            unit: None,
            unit_residue: None,
        };
    }
    let v = nu_int(x, p).expect("nonzero");
    let unit_int = x / BigInt::from(p.get()).pow(v as u32);
    let residue = residue_int(&unit_int, p);
    debug_assert_ne!(residue, 0);
    ValUnit {
        valuation: Valuation::Finite(v),
        unit: Some(BigRational::from_integer(unit_int)),
        unit_residue: Some(residue),
    }
}

/// Valuation/unit decomposition of a rational (0 allowed).
pub fn val_unit(q: &BigRational, p: Prime) -> ValUnit {
    if q.is_zero() {
        return ValUnit {
            valuation: Valuation::Infinite,
            unit: None,
            unit_residue: None,
        };
    }
    let v = nu(q, p).expect("nonzero");
    let p_big = BigInt::from(p.get());
    let unit = if v >= 0 {
        BigRational::new(q.numer() / p_big.pow(v as u32), q.denom().clone())
    } else {
        BigRational::new(q.numer().clone(), q.denom() / p_big.pow((-v) as u32))
    };
    let residue = residue_rational(&unit, p).expect("unit is a p-adic unit");
    ValUnit {
        valuation: Valuation::Finite(v),
        unit: Some(unit),
        unit_residue: Some(residue),
    }
}

/// nu_p(n!) = (n - sigma_p(n)) / (p - 1).
pub fn nu_factorial(n: u64, p: Prime) -> u64 {
    (n - digit_sum(n, p)) / (p.get() - 1)
}

/// nu_p(C(n,m)) = (sigma(m) + sigma(n-m) - sigma(n)) / (p-1), which also
/// counts the carries when adding m and n-m in base p.
pub fn nu_binomial(n: u64, m: u64, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::Domain(format!(
            "nu_binomial requires m <= n, got n={n}, m={m}"
        )));
    }
    Ok((digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p)) / (p.get() - 1))
}

/// Number of carries when adding `a` and `b` in base p.
pub fn carry_count(a: u64, b: u64, p: Prime) -> u64 {
    let mut carries = 0;
    let mut carry = 0;
    let (mut a, mut b) = (a, b);
    while a > 0 || b > 0 || carry > 0 {
        let s = a % p.get() + b % p.get() + carry;
        carry = s / p.get();
        carries += carry;
        a /= p.get();
        b /= p.get();
    }
    carries
}

/// C(n,m) mod p as the product of digit binomials; 0 exactly when p
/// divides C(n,m), and 1 whenever m and n-m have disjoint digits.
pub fn lucas_residue(n: u64, m: u64, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::Domain(format!(
            "lucas_residue requires m <= n, got n={n}, m={m}"
        )));
    }
    let (mut n, mut m) = (n, m);
    let mut acc = 1u64;
    while m > 0 || n > 0 {
        let (ni, mi) = (n % p.get(), m % p.get());
        if mi > ni {
            return Ok(0);
        }
        acc = mul_mod(acc, small_binomial_mod(ni, mi, p), p.get());
        n /= p.get();
        m /= p.get();
    }
    Ok(acc)
}

/// The unit part of C(n,m) mod p up to sign: with e = nu_p(C(n,m)) and
/// r = n-m, returns the digit product of n_i!/(m_i! r_i!) mod p, which
/// is congruent to (-1)^e * eps_p(C(n,m)).
pub fn anton_epsilon(n: u64, m: u64, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::Domain(format!(
            "anton_epsilon requires m <= n, got n={n}, m={m}"
        )));
    }
    let r = n - m;
    let (mut n, mut m, mut r) = (n, m, r);
    let mut acc = 1u64;
    while n > 0 {
        let (ni, mi, ri) = (n % p.get(), m % p.get(), r % p.get());
        let num = small_factorial_mod(ni, p);
        let den = mul_mod(small_factorial_mod(mi, p), small_factorial_mod(ri, p), p.get());
        acc = mul_mod(acc, mul_mod(num, mod_inverse(den, p), p.get()), p.get());
        n /= p.get();
        m /= p.get();
        r /= p.get();
    }
    Ok(acc)
}

/// C(-a, r) = (-1)^r * C(a+r-1, r) for a >= 1, exactly.
pub fn neg_binomial(a: u64, r: u64) -> Result<BigInt> {
    if a == 0 {
        return Err(Error::Domain("neg_binomial requires a >= 1".into()));
    }
    let b = binomial(a + r - 1, r);
    Ok(if r % 2 == 0 { b } else { -b })
}

/// Binomial C(top, r) for any integer top, via the reflection
/// C(-a, r) = (-1)^r C(a+r-1, r) when top is negative.
pub fn binomial_signed(top: i64, r: u64) -> BigInt {
    if top >= 0 {
        binomial(top as u64, r)
    } else {
        let b = binomial((-top) as u64 + r - 1, r);
        if r % 2 == 0 {
            b
        } else {
            -b
        }
    }
}

/// C(top, r) mod p for any integer top, in [0, p-1].
pub fn binomial_residue_signed(top: i64, r: u64, p: Prime) -> u64 {
    if top >= 0 {
        let n = top as u64;
        if r > n {
            return 0;
        }
        lucas_residue(n, r, p).expect("r <= n")
    } else {
        let n = (-top) as u64 + r - 1;
        let b = lucas_residue(n, r, p).expect("r <= n");
        if r % 2 == 0 {
            b
        } else {
            (p.get() - b) % p.get()
        }
    }
}

/// eps_p((a * p^h)!) mod p for a single-digit leading coefficient
/// 1 <= a <= p-1: equals (-1)^(a*h) * a! mod p.
pub fn epsilon_factorial_single_digit(a: u64, h: u32, p: Prime) -> Result<u64> {
    if a == 0 || a >= p.get() {
        return Err(Error::Domain(format!(
            "epsilon_factorial_single_digit requires 1 <= a <= p-1, got a={a}, p={p}"
        )));
    }
    let mut acc = small_factorial_mod(a, p);
    if (a * h as u64) % 2 == 1 {
        acc = (p.get() - acc) % p.get();
    }
    Ok(acc)
}

/// eps_p((p*k)!) mod p, equal to (-1)^k * eps_p(k!) mod p.
pub fn epsilon_factorial_p_shift(k: u64, p: Prime) -> u64 {
    let eps = epsilon_factorial_residue(k, p);
    if k % 2 == 1 {
        (p.get() - eps) % p.get()
    } else {
        eps
    }
}

/// eps_p(n!) mod p. Peeling one base-p level at a time with Wilson's
/// theorem gives eps_p(n!) = (-1)^(nu_p(n!)) * prod_i (n_i)! mod p.
pub fn epsilon_factorial_residue(n: u64, p: Prime) -> u64 {
    let mut acc = 1u64;
    let mut m = n;
    while m > 0 {
        acc = mul_mod(acc, small_factorial_mod(m % p.get(), p), p.get());
        m /= p.get();
    }
    if nu_factorial(n, p) % 2 == 1 {
        acc = (p.get() - acc) % p.get();
    }
    acc
}

/// n! exactly.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// C(n,k) exactly, 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// x mod p normalized into [0, p-1].
pub fn residue_int(x: &BigInt, p: Prime) -> u64 {
    let r = x.mod_floor(&BigInt::from(p.get()));
    r.to_u64().expect("residue fits in u64")
}

/// Residue mod p of a rational that is a p-adic integer (valuation >= 0):
/// numerator times the modular inverse of the denominator. Rejects inputs
/// whose denominator is divisible by p.
pub fn residue_rational(q: &BigRational, p: Prime) -> Result<u64> {
    let den = residue_int(q.denom(), p);
    if den == 0 {
        return Err(Error::Domain(format!(
            "residue mod {p} undefined: denominator divisible by {p}"
        )));
    }
    Ok(mul_mod(residue_int(q.numer(), p), mod_inverse(den, p), p.get()))
}

/// Modular inverse of `a` mod p, for a not divisible by p.
pub fn mod_inverse(a: u64, p: Prime) -> u64 {
    debug_assert!(a % p.get() != 0, "no inverse of 0 mod {p}");
    // Fermat: a^(p-2) mod p.
    mod_pow(a % p.get(), p.get() - 2, p.get())
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, modulus);
        }
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    acc
}

pub(crate) fn mul_mod(a: u64, b: u64, modulus: u64) -> u64 {
    ((a as u128 * b as u128) % modulus as u128) as u64
}

/// d! mod p for a single digit d < p.
pub(crate) fn factorial_residue_small(d: u64, p: Prime) -> u64 {
    small_factorial_mod(d, p)
}

fn small_factorial_mod(d: u64, p: Prime) -> u64 {
    debug_assert!(d < p.get());
    let mut acc = 1u64;
    for i in 2..=d {
        acc = mul_mod(acc, i, p.get());
    }
    acc
}

fn small_binomial_mod(n: u64, k: u64, p: Prime) -> u64 {
    debug_assert!(n < p.get() && k <= n);
    let num = small_factorial_mod(n, p);
    let den = mul_mod(small_factorial_mod(k, p), small_factorial_mod(n - k, p), p.get());
    mul_mod(num, mod_inverse(den, p), p.get())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(97).is_ok());
        for composite in [0, 1, 4, 6, 9, 15, 91] {
            assert!(matches!(Prime::new(composite), Err(Error::NotPrime(_))));
        }
    }

    #[test]
    fn digits_examples() {
        assert!(digits(0, p(2)).digits().is_empty());
        assert_eq!(digits(7, p(3)).digits(), &[1, 2]);
        assert_eq!(digits(12, p(3)).digits(), &[0, 1, 1]);
    }

    #[test]
    fn digits_reconstruct() {
        for n in 0..500u64 {
            for q in [2, 3, 5, 7] {
                let dv = digits(n, p(q));
                assert_eq!(dv.value(), n);
                assert!(dv.digits().iter().all(|&d| d < q));
                assert!(dv.digits().last().is_none_or(|&d| d != 0));
                assert_eq!(dv.sum(), digit_sum(n, p(q)));
            }
        }
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(0, p(5)), 0);
        assert_eq!(digit_sum(7, p(2)), 3);
        assert_eq!(digit_sum(12, p(3)), 2);
    }

    #[test]
    fn val_unit_examples() {
        let v = val_unit_int(&BigInt::from(720), p(3));
        assert_eq!(v.valuation, Valuation::Finite(2));
        assert_eq!(v.unit, Some(BigRational::from_integer(80.into())));
        assert_eq!(v.unit_residue, Some(2));

        let q = BigRational::new(5.into(), 2.into());
        let v = val_unit(&q, p(2));
        assert_eq!(v.valuation, Valuation::Finite(-1));
        assert_eq!(v.unit, Some(BigRational::from_integer(5.into())));
        assert_eq!(v.unit_residue, Some(1));

        let v = val_unit_int(&BigInt::one(), p(7));
        assert_eq!(v.valuation, Valuation::Finite(0));
        assert_eq!(v.unit_residue, Some(1));
    }

    #[test]
    fn val_unit_zero_and_negative() {
        let v = val_unit_int(&BigInt::zero(), p(3));
        assert_eq!(v.valuation, Valuation::Infinite);
        assert!(v.unit.is_none() && v.unit_residue.is_none());
        assert!(matches!(nu_int(&BigInt::zero(), p(3)), Err(Error::ZeroValuation)));

        // eps of a negative integer is negative; residue still in [1, p-1].
        let v = val_unit_int(&BigInt::from(-3), p(3));
        assert_eq!(v.valuation, Valuation::Finite(1));
        assert_eq!(v.unit, Some(BigRational::from_integer((-1).into())));
        assert_eq!(v.unit_residue, Some(2));
    }

    #[test]
    fn nu_factorial_examples() {
        assert_eq!(nu_factorial(0, p(2)), 0);
        assert_eq!(nu_factorial(6, p(3)), 2);
        assert_eq!(nu_factorial(7, p(2)), 4);
        // cross-check against the exact factorizations 720 = 3^2*80 and
        // 5040 = 2^4*315
        assert_eq!(nu_int(&factorial(6), p(3)).unwrap(), 2);
        assert_eq!(nu_int(&factorial(7), p(2)).unwrap(), 4);
    }

    #[test]
    fn nu_binomial_examples() {
        for n in [0u64, 1, 5, 100] {
            assert_eq!(nu_binomial(n, 0, p(3)).unwrap(), 0);
        }
        assert_eq!(nu_binomial(7, 3, p(3)).unwrap(), 0);
        assert_eq!(nu_binomial(6, 2, p(2)).unwrap(), 0);
        assert_eq!(nu_binomial(6, 3, p(2)).unwrap(), 2);
        assert!(nu_binomial(3, 7, p(2)).is_err());
    }

    #[test]
    fn nu_binomial_is_carry_count() {
        for q in [2, 3, 5] {
            for n in 0..=60u64 {
                for m in 0..=n {
                    assert_eq!(
                        nu_binomial(n, m, p(q)).unwrap(),
                        carry_count(m, n - m, p(q)),
                        "n={n} m={m} p={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_residue(13, 13, p(5)).unwrap(), 1);
        assert_eq!(lucas_residue(7, 3, p(3)).unwrap(), 2);
        assert_eq!(lucas_residue(6, 3, p(2)).unwrap(), 0);
    }

    #[test]
    fn lucas_matches_direct_binomial() {
        for q in [2, 3, 5, 7] {
            for n in 0..=40u64 {
                for m in 0..=n {
                    let direct = residue_int(&binomial(n, m), p(q));
                    assert_eq!(lucas_residue(n, m, p(q)).unwrap(), direct, "n={n} m={m} p={q}");
                }
            }
        }
    }

    #[test]
    fn anton_examples() {
        assert_eq!(anton_epsilon(7, 3, p(3)).unwrap(), 2);
        assert_eq!(anton_epsilon(9, 0, p(5)).unwrap(), 1);
        assert_eq!(anton_epsilon(6, 3, p(2)).unwrap(), 1);
    }

    #[test]
    fn anton_matches_unit_part() {
        for q in [2, 3, 5] {
            for n in 0..=40u64 {
                for m in 0..=n {
                    let e = nu_binomial(n, m, p(q)).unwrap();
                    let eps = val_unit_int(&binomial(n, m), p(q)).unit_residue.unwrap();
                    let signed = if e % 2 == 0 { eps } else { (q - eps) % q };
                    assert_eq!(anton_epsilon(n, m, p(q)).unwrap(), signed, "n={n} m={m} p={q}");
                }
            }
        }
    }

    #[test]
    fn neg_binomial_examples() {
        for r in 0..6u64 {
            let expect = if r % 2 == 0 { 1 } else { -1 };
            assert_eq!(neg_binomial(1, r).unwrap(), BigInt::from(expect));
        }
        assert_eq!(neg_binomial(6, 2).unwrap(), BigInt::from(21));
        assert_eq!(neg_binomial(4, 3).unwrap(), BigInt::from(-20));
        assert!(neg_binomial(0, 3).is_err());
    }

    #[test]
    fn binomial_signed_agrees_with_product_formula() {
        for top in -12i64..=12 {
            for r in 0..=8u64 {
                // independent route: prod_{i=0..r-1} (top - i) / r!
                let mut num = BigInt::one();
                for i in 0..r {
                    num *= BigInt::from(top) - BigInt::from(i);
                }
                let expect = num / factorial(r);
                assert_eq!(binomial_signed(top, r), expect, "top={top} r={r}");
                for q in [2u64, 3, 5] {
                    assert_eq!(
                        binomial_residue_signed(top, r, p(q)),
                        residue_int(&expect, p(q)),
                        "top={top} r={r} p={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn epsilon_factorial_single_digit_examples() {
        assert_eq!(epsilon_factorial_single_digit(2, 1, p(3)).unwrap(), 2);
        assert_eq!(epsilon_factorial_single_digit(1, 0, p(5)).unwrap(), 1);
        assert_eq!(epsilon_factorial_single_digit(1, 1, p(3)).unwrap(), 2);
        assert!(epsilon_factorial_single_digit(3, 1, p(3)).is_err());
        assert!(epsilon_factorial_single_digit(0, 1, p(3)).is_err());
    }

    #[test]
    fn epsilon_factorial_single_digit_matches_exact() {
        for q in [2u64, 3, 5] {
            for a in 1..q {
                for h in 0..=3u32 {
                    let n = a * q.pow(h);
                    let exact = val_unit_int(&factorial(n), p(q)).unit_residue.unwrap();
                    assert_eq!(
                        epsilon_factorial_single_digit(a, h, p(q)).unwrap(),
                        exact,
                        "a={a} h={h} p={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn epsilon_factorial_p_shift_examples() {
        assert_eq!(epsilon_factorial_p_shift(0, p(7)), 1);
        assert_eq!(epsilon_factorial_p_shift(2, p(3)), 2);
        assert_eq!(epsilon_factorial_p_shift(1, p(5)), 4);
    }

    #[test]
    fn epsilon_factorial_residue_matches_exact() {
        for q in [2u64, 3, 5, 7] {
            for n in 0..=300u64 {
                let exact = val_unit_int(&factorial(n), p(q)).unit_residue.unwrap();
                assert_eq!(epsilon_factorial_residue(n, p(q)), exact, "n={n} p={q}");
            }
        }
    }

    #[test]
    fn digit_sum_successor_examples() {
        assert_eq!(digit_sum_successor(0, p(2)), (1, 0));
        assert_eq!(digit_sum_successor(7, p(2)), (1, 3));
        assert_eq!(digit_sum_successor(8, p(3)), (1, 2));
    }

    #[test]
    fn residue_rational_cases() {
        let q = BigRational::new(5.into(), 3.into());
        assert_eq!(residue_rational(&q, p(2)).unwrap(), 1);
        // valuation > 0 reduces to 0
        let q = BigRational::new(6.into(), 5.into());
        assert_eq!(residue_rational(&q, p(3)).unwrap(), 0);
        // denominator divisible by p is rejected
        let q = BigRational::new(1.into(), 3.into());
        assert!(residue_rational(&q, p(3)).is_err());
    }
}
