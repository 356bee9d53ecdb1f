use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, Rat};

/// Relative tolerance for algebraic conditions on float inputs.
pub const FLOAT_EPS: f64 = 1e-9;

/// Allowed deviation of the sum from 1 for decimal/float inputs.
pub const SUM_EPS: f64 = 1e-12;

pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= FLOAT_EPS * 1f64.max(a.abs()).max(b.abs())
}

/// A real parameter that is exact whenever the inputs were.
#[derive(Debug, Clone, PartialEq)]
pub struct Scalar {
    pub value: f64,
    pub exact: Option<Rat>,
}

impl Scalar {
    pub fn exact(r: Rat) -> Self {
        Scalar { value: rational::to_f64(&r), exact: Some(r) }
    }

    pub fn float(value: f64) -> Self {
        Scalar { value, exact: None }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match &self.exact {
            Some(r) => s.collect_str(&rational::render(r)),
            None => s.serialize_f64(self.value),
        }
    }
}

/// Digit probabilities `(p0, p1, p2, p3)`: non-negative, each below 1,
/// summing to 1. Kept exact when built from rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    float: [f64; 4],
    exact: Option<[Rat; 4]>,
}

impl ProbVector {
    pub fn from_rationals(p: [Rat; 4]) -> Result<Self> {
        for (i, pi) in p.iter().enumerate() {
            if pi.is_negative() {
                return Err(Error::InvalidProbVector(format!("p{i} is negative")));
            }
            if *pi >= Rat::one() {
                return Err(Error::InvalidProbVector(format!("p{i} must be below 1")));
            }
        }
        let sum: Rat = p.iter().sum();
        if !sum.is_one() {
            return Err(Error::InvalidProbVector(format!(
                "probabilities sum to {}, not 1",
                rational::render(&sum)
            )));
        }
        let float = [0, 1, 2, 3].map(|i| rational::to_f64(&p[i]));
        Ok(ProbVector { float, exact: Some(p) })
    }

    pub fn from_floats(p: [f64; 4]) -> Result<Self> {
        for (i, &pi) in p.iter().enumerate() {
            if !pi.is_finite() || pi < 0.0 {
                return Err(Error::InvalidProbVector(format!("p{i} = {pi} is not a probability")));
            }
            if pi >= 1.0 {
                return Err(Error::InvalidProbVector(format!("p{i} must be below 1")));
            }
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > SUM_EPS {
            return Err(Error::InvalidProbVector(format!("probabilities sum to {sum}, not 1")));
        }
        Ok(ProbVector { float: p, exact: None })
    }

    /// `a/b` or decimal literals. Exact when the literals sum to exactly 1;
    /// decimal inputs within 1e-12 of 1 fall back to floats.
    pub fn parse<S: AsRef<str>>(texts: &[S]) -> Result<Self> {
        if texts.len() != 4 {
            return Err(Error::InvalidProbVector(format!(
                "expected 4 probabilities, got {}",
                texts.len()
            )));
        }
        let parsed = texts
            .iter()
            .map(|t| rational::parse(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let exact: [Rat; 4] = [0, 1, 2, 3].map(|i| parsed[i].clone());
        let sum: Rat = exact.iter().sum();
        let any_decimal = texts.iter().any(|t| rational::is_decimal_literal(t.as_ref()));
        if sum.is_one() || !any_decimal {
            Self::from_rationals(exact)
        } else {
            Self::from_floats(exact.map(|r| rational::to_f64(&r)))
        }
    }

    pub fn rational(p0: (i64, i64), p1: (i64, i64), p2: (i64, i64), p3: (i64, i64)) -> Result<Self> {
        Self::from_rationals([p0, p1, p2, p3].map(|(n, d)| rational::rat(n, d)))
    }

    pub fn get(&self, i: usize) -> f64 {
        self.float[i]
    }

    pub fn floats(&self) -> [f64; 4] {
        self.float
    }

    pub fn exact(&self) -> Option<&[Rat; 4]> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn is_zero(&self, i: usize) -> bool {
        match &self.exact {
            Some(p) => p[i].is_zero(),
            None => self.float[i] <= FLOAT_EPS,
        }
    }

    pub fn is_one_third(&self, i: usize) -> bool {
        match &self.exact {
            Some(p) => p[i] == rational::rat(1, 3),
            None => approx_eq(self.float[i], 1.0 / 3.0),
        }
    }

    /// `p_i` as a scalar (exact when possible).
    pub fn scalar(&self, i: usize) -> Scalar {
        match &self.exact {
            Some(p) => Scalar::exact(p[i].clone()),
            None => Scalar::float(self.float[i]),
        }
    }

    pub fn zero_count(&self) -> usize {
        (0..4).filter(|&i| self.is_zero(i)).count()
    }

    /// True when `p_i = p_{3-i}`, i.e. the law is symmetric about 3/4.
    pub fn is_palindromic(&self) -> bool {
        match &self.exact {
            Some(p) => p[0] == p[3] && p[1] == p[2],
            None => approx_eq(self.float[0], self.float[3]) && approx_eq(self.float[1], self.float[2]),
        }
    }
}

impl Serialize for ProbVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let items: Vec<Scalar> = (0..4).map(|i| self.scalar(i)).collect();
        items.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ProbVector::rational((1, 6), (1, 3), (1, 3), (1, 6)).is_ok());
        assert!(ProbVector::rational((1, 1), (0, 1), (0, 1), (0, 1)).is_err());
        assert!(ProbVector::rational((1, 2), (1, 2), (1, 2), (-1, 2)).is_err());
        assert!(ProbVector::rational((1, 4), (1, 4), (1, 4), (1, 5)).is_err());
        assert!(ProbVector::from_floats([1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(ProbVector::from_floats([0.25, 0.25, 0.25, f64::NAN]).is_err());
    }

    #[test]
    fn parse_exact_and_decimal() {
        let p = ProbVector::parse(&["1/6", "1/3", "1/3", "1/6"]).unwrap();
        assert!(p.is_exact() && p.is_one_third(1));
        let p = ProbVector::parse(&["0.1", "0.2", "0.3", "0.4"]).unwrap();
        assert!(p.is_exact());
        let p = ProbVector::parse(&["0.333333333333333", "0.333333333333333", "0.333333333333333", "0"])
            .unwrap();
        assert!(!p.is_exact());
        assert!(p.is_one_third(1) && p.is_zero(3));
        assert!(ProbVector::parse(&["0.3", "0.3", "0.3", "0.3"]).is_err());
        assert!(ProbVector::parse(&["1/3", "1/3", "1/3"]).is_err());
    }
}
