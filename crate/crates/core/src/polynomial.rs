//! Dense univariate polynomials with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rat::{format_rat, rat, Rat};

/// Coefficients stored low degree first; trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rat>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::from_ints(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn scale(&self, k: &Rat) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        (0..k).fold(Polynomial::one(), |acc, _| acc.mul(self))
    }

    /// The unique polynomial of degree `< points.len()` through the given
    /// points, by Lagrange interpolation.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Result<Polynomial> {
        let mut total = Polynomial::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Polynomial::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                if xi == xj {
                    return Err(Error::Polynomial("interpolation nodes must be distinct".into()));
                }
                basis = basis.mul(&Polynomial::new(vec![-xj.clone(), Rat::one()]));
                denom *= xi - xj;
            }
            total = total.add(&basis.scale(&(yi / denom)));
        }
        Ok(total)
    }

    /// Coefficients `c_0..c_n` padded to `n + 1` entries.
    pub fn padded(&self, n: usize) -> Vec<Rat> {
        (0..=n).map(|i| self.coeff(i)).collect()
    }

    /// Integer coefficients, when every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    /// `h_i = h_{n-i}` for `0 <= i <= n`.
    pub fn is_palindromic(&self, n: usize) -> bool {
        self.degree().is_none_or(|deg| deg <= n) && (0..=n).all(|i| self.coeff(i) == self.coeff(n - i))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient list as JSON strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| serde_json::Value::String(format_rat(c))).collect())
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let body = match i {
                0 => format_rat(&a),
                _ if a.is_one() => String::new(),
                _ => format_rat(&a),
            };
            out.push_str(&body);
            if i > 0 && !body.is_empty() {
                out.push(' ');
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

/// Binomial coefficient as a rational.
pub(crate) fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn trims_and_evaluates() {
        let p = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.eval(&rat(3)), rat(7));
        assert_eq!(Polynomial::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let target = Polynomial::new(vec![rat(1), ratio(10, 3), rat(4), ratio(8, 3)]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|m| (rat(m), target.eval(&rat(m)))).collect();
        assert_eq!(Polynomial::interpolate(&pts).unwrap(), target);
        assert!(Polynomial::interpolate(&[(rat(1), rat(1)), (rat(1), rat(2))]).is_err());
    }

    #[test]
    fn palindromes_and_binomials() {
        assert!(Polynomial::from_ints(&[1, 7, 7, 1]).is_palindromic(3));
        assert!(!Polynomial::from_ints(&[1, 7, 6, 1]).is_palindromic(3));
        assert!(Polynomial::from_ints(&[1, 1]).is_palindromic(1));
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(2, 3), rat(0));
        assert_eq!(Polynomial::from_ints(&[1, 1]).pow(3), Polynomial::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn display() {
        let p = Polynomial::new(vec![rat(1), ratio(10, 3), rat(4), ratio(8, 3)]);
        assert_eq!(p.display_in("m"), "8/3 m^3 + 4 m^2 + 10/3 m + 1");
        assert_eq!(Polynomial::from_ints(&[0, -1, 1]).to_string(), "x^2 - x");
    }
}
