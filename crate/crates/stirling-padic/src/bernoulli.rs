//! Higher-order Bernoulli numbers and polynomials.
//!
//! B_n^(l)(x) is defined by (t/(e^t-1))^l * e^(tx) = sum_n B_n^(l)(x) t^n/n!,
//! and B_n^(l) = B_n^(l)(0). The polynomial is monic of degree n. Orders
//! may be negative; ((e^t-1)/t)^m has the exactly known coefficients
//! 1/(i+1)! raised to the m-th power, so negative orders need no series
//! inversion at all.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::padic::{self, Prime, Valuation};
use crate::series::SeriesPoly;
use crate::stirling;
use crate::{Error, Result};

/// (e^t - 1)/t truncated to `order` coefficients: coefficient of t^i is
/// 1/(i+1)!.
fn exp_shifted_series(order: usize) -> SeriesPoly {
    let mut coeffs = Vec::with_capacity(order);
    let mut fact = BigInt::one();
    for i in 0..order {
        fact *= BigInt::from(i as u64 + 1);
        coeffs.push(BigRational::new(BigInt::one(), fact.clone()));
    }
    SeriesPoly::from_coeffs(coeffs)
}

/// (t/(e^t-1))^l truncated to `order` coefficients, for any integer l.
fn order_series(l: i64, order: usize) -> SeriesPoly {
    let shifted = exp_shifted_series(order.max(1));
    if l >= 0 {
        let base = shifted
            .recip_trunc(order.max(1))
            .expect("constant term is 1");
        base.pow_trunc(l as u64, order.max(1))
    } else {
        shifted.pow_trunc((-l) as u64, order.max(1))
    }
}

/// B_0^(l) .. B_max_n^(l) in one pass: one series expansion serves every
/// degree, which is what the sweeps want.
pub fn bernoulli_numbers(l: i64, max_n: u64) -> Vec<BigRational> {
    let order = max_n as usize + 1;
    let series = order_series(l, order);
    let mut fact = BigInt::one();
    (0..order)
        .map(|n| {
            if n > 0 {
                fact *= BigInt::from(n as u64);
            }
            series.coeff(n) * BigRational::from_integer(fact.clone())
        })
        .collect()
}

/// B_n^(l) = n! [t^n] (t/(e^t-1))^l.
pub fn bernoulli_number(n: u64, l: i64) -> BigRational {
    bernoulli_numbers(l, n).pop().expect("length n+1")
}

/// B_n^(l)(x) = sum_i C(n,i) B_i^(l) x^(n-i); monic of degree n with
/// constant term B_n^(l).
pub fn bernoulli_poly(n: u64, l: i64) -> SeriesPoly {
    let numbers = bernoulli_numbers(l, n);
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    for (i, b) in numbers.iter().enumerate() {
        let c = BigRational::from_integer(padic::binomial(n, i as u64));
        coeffs[n as usize - i] = c * b;
    }
    SeriesPoly::from_coeffs(coeffs)
}

/// nu_p of each coefficient of B_n^(l)(x), indexed by codegree (codegree
/// 0 is the leading coefficient, with valuation 0 since the polynomial is
/// monic).
pub fn coefficient_valuations(n: u64, l: i64, p: Prime) -> Vec<(u64, Valuation)> {
    let poly = bernoulli_poly(n, l);
    (0..=n)
        .map(|codegree| {
            let coeff = poly.coeff((n - codegree) as usize);
            (codegree, crate::padic::val_unit(&coeff, p).valuation)
        })
        .collect()
}

/// C(n,k) B_(n-k)^(-k) evaluated exactly and checked against the
/// second-kind triangle: both routes must give S(n,k).
pub fn connect_second(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::Domain(format!(
            "connect_second requires n >= k, got n={n}, k={k}"
        )));
    }
    let value = BigRational::from_integer(padic::binomial(n, k))
        * bernoulli_number(n - k, -(k as i64));
    if !value.is_integer() {
        return Err(Error::Inconsistency(format!(
            "C({n},{k}) * B_{}^({}) = {value} is not an integer",
            n - k,
            -(k as i64)
        )));
    }
    let value = value.to_integer();
    let triangle = stirling::stirling2(n, k);
    if value != triangle {
        return Err(Error::Inconsistency(format!(
            "second-kind connection mismatch at (n,k)=({n},{k}): {value} vs {triangle}"
        )));
    }
    Ok(value)
}

/// C(n-1,k-1) B_(n-k)^(n) evaluated exactly and checked against the
/// first-kind triangle: both routes must give s(n,k).
pub fn connect_first(n: u64, k: u64) -> Result<BigInt> {
    if k > n || k == 0 {
        return Err(Error::Domain(format!(
            "connect_first requires n >= k >= 1, got n={n}, k={k}"
        )));
    }
    let value = BigRational::from_integer(padic::binomial(n - 1, k - 1))
        * bernoulli_number(n - k, n as i64);
    if !value.is_integer() {
        return Err(Error::Inconsistency(format!(
            "C({},{}) * B_{}^({n}) = {value} is not an integer",
            n - 1,
            k - 1,
            n - k
        )));
    }
    let value = value.to_integer();
    let triangle = stirling::stirling1(n, k);
    if value != triangle {
        return Err(Error::Inconsistency(format!(
            "first-kind connection mismatch at (n,k)=({n},{k}): {value} vs {triangle}"
        )));
    }
    Ok(value)
}

/// Exact B_n^(l) by the cheapest route: the Stirling connections reduce
/// it to one triangle lookup and one division when l < 0 or l > n, which
/// keeps large-range sweeps tractable; otherwise the series expansion.
/// The routes agree (that is what `connect_second`/`connect_first`
/// verify), so callers may treat this as a drop-in for
/// `bernoulli_number`.
pub(crate) fn exact_bernoulli(n: u64, l: i64) -> BigRational {
    if l < 0 {
        let k = (-l) as u64;
        let s = stirling::stirling2(n + k, k);
        let c = padic::binomial(n + k, k);
        BigRational::new(s, c)
    } else if l > n as i64 {
        let big_n = l as u64;
        let k = big_n - n;
        let s = stirling::stirling1(big_n, k);
        let c = padic::binomial(big_n - 1, k - 1);
        BigRational::new(s, c)
    } else {
        bernoulli_number(n, l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::Prime;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent series oracle: naive convolution powers of the
    /// explicitly-listed coefficients of (e^t - 1)/t.
    fn naive_power_coeffs(l: i64, order: usize) -> Vec<BigRational> {
        let mut base = Vec::with_capacity(order);
        let mut fact = BigInt::one();
        for i in 0..order {
            fact *= BigInt::from(i as u64 + 1);
            base.push(BigRational::new(BigInt::one(), fact.clone()));
        }
        let mul = |a: &[BigRational], b: &[BigRational]| {
            let mut out = vec![BigRational::zero(); order];
            for i in 0..order {
                for j in 0..order - i {
                    out[i + j] += &a[i] * &b[j];
                }
            }
            out
        };
        let mut inv = vec![BigRational::zero(); order];
        inv[0] = BigRational::one();
        if l >= 0 {
            // invert once by long division: find g with base*g = 1
            let mut g = vec![BigRational::zero(); order];
            g[0] = BigRational::one();
            for m in 1..order {
                let mut s = BigRational::zero();
                for j in 1..=m {
                    s += &base[j] * &g[m - j];
                }
                g[m] = -s;
            }
            for _ in 0..l {
                inv = mul(&inv, &g);
            }
        } else {
            for _ in 0..(-l) {
                inv = mul(&inv, &base);
            }
        }
        inv
    }

    fn naive_bernoulli(n: u64, l: i64) -> BigRational {
        let coeffs = naive_power_coeffs(l, n as usize + 1);
        coeffs[n as usize].clone() * BigRational::from_integer(crate::padic::factorial(n))
    }

    #[test]
    fn classical_bernoulli_numbers() {
        assert_eq!(bernoulli_number(0, 5), r(1, 1));
        assert_eq!(bernoulli_number(0, -9), r(1, 1));
        assert_eq!(bernoulli_number(1, 1), r(-1, 2));
        assert_eq!(bernoulli_number(2, 1), r(1, 6));
        assert_eq!(bernoulli_number(3, 1), r(0, 1));
        assert_eq!(bernoulli_number(4, 1), r(-1, 30));
    }

    #[test]
    fn order_examples() {
        assert_eq!(bernoulli_number(2, -3), r(5, 2));
        assert_eq!(bernoulli_number(2, 2), r(5, 6));
        assert_eq!(bernoulli_number(2, 4), r(11, 3));
        for l in [-7i64, -3, 0, 1, 4] {
            assert_eq!(bernoulli_number(1, l), r(-l, 2), "l={l}");
        }
    }

    #[test]
    fn matches_naive_series_oracle() {
        for l in -6i64..=6 {
            for n in 0..=8u64 {
                assert_eq!(bernoulli_number(n, l), naive_bernoulli(n, l), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn poly_shape() {
        for l in [-5i64, -1, 0, 2, 7] {
            for n in 0..=10u64 {
                let poly = bernoulli_poly(n, l);
                assert_eq!(poly.degree(), Some(n as usize), "n={n} l={l}");
                assert!(poly.is_monic(), "n={n} l={l}");
                assert_eq!(poly.coeff(0), bernoulli_number(n, l), "n={n} l={l}");
            }
        }
        assert_eq!(bernoulli_poly(1, 3).to_string(), "x - 3/2");
        assert_eq!(bernoulli_poly(2, -3).to_string(), "x^2 + 3*x + 5/2");
    }

    #[test]
    fn connection_examples() {
        assert_eq!(connect_second(2, 1).unwrap(), BigInt::from(1));
        assert_eq!(connect_second(5, 3).unwrap(), BigInt::from(25));
        assert_eq!(connect_second(7, 7).unwrap(), BigInt::one());
        assert_eq!(connect_first(2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(connect_first(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(connect_first(6, 6).unwrap(), BigInt::one());
        assert!(connect_first(4, 0).is_err());
    }

    #[test]
    fn exact_bernoulli_routes_agree() {
        for l in -10i64..=14 {
            for n in 0..=10u64 {
                assert_eq!(exact_bernoulli(n, l), bernoulli_number(n, l), "n={n} l={l}");
            }
        }
    }

    #[test]
    fn coefficient_valuation_examples() {
        let p2 = Prime::new(2).unwrap();
        let vals = coefficient_valuations(2, -3, p2);
        assert_eq!(vals[0], (0, Valuation::Finite(0)));
        assert_eq!(vals[2], (2, Valuation::Finite(-1)));
        let vals = coefficient_valuations(0, 11, p2);
        assert_eq!(vals, vec![(0, Valuation::Finite(0))]);
    }

    #[test]
    fn first_pole_pattern() {
        // The first strictly negative coefficient valuation, scanning
        // codegrees upward, is a pole of order exactly 1 and sits at a
        // codegree i with (p-1) | i and C(n,i) not divisible by p.
        for p in [2u64, 3] {
            let p = Prime::new(p).unwrap();
            for l in -12i64..=12 {
                for n in 0..=16u64 {
                    let vals = coefficient_valuations(n, l, p);
                    if let Some((i, v)) = vals
                        .iter()
                        .find(|(i, v)| *i > 0 && matches!(v, Valuation::Finite(x) if *x < 0))
                    {
                        assert_eq!(*v, Valuation::Finite(-1), "n={n} l={l} p={p} i={i}");
                        assert_eq!(i % (p.get() - 1), 0, "n={n} l={l} p={p} i={i}");
                        assert_ne!(
                            crate::padic::lucas_residue(n, *i, p).unwrap(),
                            0,
                            "n={n} l={l} p={p} i={i}"
                        );
                    }
                }
            }
        }
    }
}
