//! Exact rational scalars and dense functions on poset elements.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"n"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Formats a rational as `"n"` when integral and `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational-valued function on the elements of a poset, stored densely in
/// element order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointFn {
    values: Vec<Rat>,
}

impl PointFn {
    pub fn new(values: Vec<Rat>) -> Self {
        PointFn { values }
    }

    pub fn zero(dim: usize) -> Self {
        PointFn { values: vec![Rat::zero(); dim] }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        PointFn { values: values.iter().map(|&v| rat(v)).collect() }
    }

    pub fn from_signs(values: &[i8]) -> Self {
        PointFn { values: values.iter().map(|&v| rat(v as i64)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rat> {
        self.values
    }

    pub fn get(&self, v: usize) -> &Rat {
        &self.values[v]
    }

    pub fn set(&mut self, v: usize, value: Rat) {
        self.values[v] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&v| !self.values[v].is_zero()).collect()
    }

    pub fn abs(&self) -> PointFn {
        PointFn { values: self.values.iter().map(Signed::abs).collect() }
    }

    pub fn scale(&self, k: &Rat) -> PointFn {
        PointFn { values: self.values.iter().map(|x| x * k).collect() }
    }

    pub fn sub(&self, other: &PointFn) -> PointFn {
        PointFn { values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    pub fn add(&self, other: &PointFn) -> PointFn {
        PointFn { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|x| x.is_integer())
    }

    /// Integer coordinates, when every value is an integer fitting in `i64`.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.values.iter().map(|x| if x.is_integer() { x.numer().to_i64() } else { None }).collect()
    }

    pub fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() != expected {
            return Err(Error::DimensionMismatch { expected, got: self.dim() });
        }
        Ok(())
    }

    /// JSON array of `"p/q"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.values.iter().map(|x| serde_json::Value::String(format_rat(x))).collect())
    }

    /// Accepts a JSON array whose entries are strings `"p/q"` or plain integers.
    pub fn from_json(value: &serde_json::Value) -> Result<PointFn> {
        let arr = value.as_array().ok_or_else(|| Error::Parse("point must be a JSON array".into()))?;
        let values = arr
            .iter()
            .map(|x| match x {
                serde_json::Value::String(s) => parse_rat(s),
                serde_json::Value::Number(n) if n.is_i64() => Ok(rat(n.as_i64().unwrap())),
                other => Err(Error::Parse(format!("bad point coordinate {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PointFn { values })
    }

    pub fn parse_json(text: &str) -> Result<PointFn> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        PointFn::from_json(&value)
    }
}

impl Index<usize> for PointFn {
    type Output = Rat;
    fn index(&self, v: usize) -> &Rat {
        &self.values[v]
    }
}

impl fmt::Display for PointFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rat(x))?;
        }
        write!(f, ")")
    }
}

pub(crate) fn pow2(k: usize) -> Rat {
    Rat::from_integer(BigInt::one() << k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(format_rat(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rat(&rat(4)), "4");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn json_point_roundtrip() {
        let p = PointFn::new(vec![ratio(1, 2), rat(0), rat(-3)]);
        let j = p.to_json();
        assert_eq!(j.to_string(), r#"["1/2","0","-3"]"#);
        assert_eq!(PointFn::from_json(&j).unwrap(), p);
        assert_eq!(PointFn::parse_json("[1, \"2/3\"]").unwrap().dim(), 2);
    }
}
