//! Truncated power series and polynomials with exact rational
//! coefficients, dense representation: index i holds the coefficient of
//! t^i (or x^i).

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPoly {
    coeffs: Vec<BigRational>,
}

impl SeriesPoly {
    /// Series with the given coefficients; the length is the truncation
    /// order (number of retained coefficients).
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        SeriesPoly { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        SeriesPoly {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[0] = BigRational::one();
        s
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of t^i, zero beyond the truncation order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Degree of the highest nonzero coefficient, None for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.degree().is_some_and(|d| self.coeffs[d].is_one())
    }

    pub fn add(&self, other: &SeriesPoly) -> SeriesPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for i in 0..len {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        SeriesPoly { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> SeriesPoly {
        SeriesPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Full product (no truncation); the result has length
    /// len(a) + len(b) - 1.
    pub fn mul(&self, other: &SeriesPoly) -> SeriesPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return SeriesPoly { coeffs: vec![] };
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        SeriesPoly { coeffs }
    }

    /// Product truncated to `order` coefficients.
    pub fn mul_trunc(&self, other: &SeriesPoly, order: usize) -> SeriesPoly {
        let mut coeffs = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        SeriesPoly { coeffs }
    }

    /// Binary exponentiation, truncated to `order` coefficients.
    pub fn pow_trunc(&self, mut exp: u64, order: usize) -> SeriesPoly {
        let mut acc = SeriesPoly::one(order);
        let mut base = self.truncated(order);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_trunc(&base, order);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_trunc(&base, order);
            }
        }
        acc
    }

    /// Reciprocal series to `order` coefficients, by the standard
    /// recurrence; requires a nonzero constant term.
    pub fn recip_trunc(&self, order: usize) -> Result<SeriesPoly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::Domain(
                "cannot invert a series with zero constant term".into(),
            ));
        }
        let inv_c0 = c0.recip();
        let mut coeffs = vec![BigRational::zero(); order];
        if order == 0 {
            return Ok(SeriesPoly { coeffs });
        }
        coeffs[0] = inv_c0.clone();
        for n in 1..order {
            let mut sum = BigRational::zero();
            for k in 1..=n.min(self.coeffs.len() - 1) {
                let a = &self.coeffs[k];
                if a.is_zero() {
                    continue;
                }
                sum += a * &coeffs[n - k];
            }
            coeffs[n] = -(&inv_c0 * sum);
        }
        Ok(SeriesPoly { coeffs })
    }

    pub fn truncated(&self, order: usize) -> SeriesPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order);
        coeffs.resize(order, BigRational::zero());
        SeriesPoly { coeffs }
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Renders a polynomial in `x`, highest degree first, e.g.
/// `x^2 + 3*x + 5/2`.
impl std::fmt::Display for SeriesPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let (sign, abs) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = abs.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{abs}")?;
            }
            if i > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn mul_basics() {
        // (1 + x)^2 = 1 + 2x + x^2
        let a = SeriesPoly::from_coeffs(vec![r(1, 1), r(1, 1)]);
        let sq = a.mul(&a);
        assert_eq!(sq.coeffs(), &[r(1, 1), r(2, 1), r(1, 1)]);
        assert_eq!(sq.degree(), Some(2));
        assert!(sq.is_monic());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = SeriesPoly::from_coeffs(vec![r(1, 1), r(1, 2), r(-1, 3), r(1, 4)]);
        let mut by_mul = SeriesPoly::one(4);
        for _ in 0..5 {
            by_mul = by_mul.mul_trunc(&a, 4);
        }
        assert_eq!(a.pow_trunc(5, 4), by_mul);
    }

    #[test]
    fn recip_is_inverse() {
        let a = SeriesPoly::from_coeffs(vec![r(1, 1), r(1, 2), r(1, 6), r(1, 24)]);
        let inv = a.recip_trunc(4).unwrap();
        let prod = a.mul_trunc(&inv, 4);
        assert_eq!(prod, SeriesPoly::one(4));
        assert!(SeriesPoly::zero(3).recip_trunc(3).is_err());
    }

    #[test]
    fn display_form() {
        let poly = SeriesPoly::from_coeffs(vec![r(5, 2), r(-3, 1), r(1, 1)]);
        assert_eq!(poly.to_string(), "x^2 - 3*x + 5/2");
        assert_eq!(SeriesPoly::zero(2).to_string(), "0");
        assert_eq!(SeriesPoly::one(1).to_string(), "1");
    }
}
