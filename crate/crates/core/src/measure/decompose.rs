//! Convolution decompositions of ξ, and the parameters of the Bernoulli
//! convolution η.

use num::One;
use serde::Serialize;

use super::prob::{approx_eq, ProbVector, Scalar};
use super::sample::DigitLaw;
use crate::error::{Error, Result};
use crate::rational::{self, rat, Rat};

/// Parameter `x = 3p₀` of `ξ = τ + ζ`; requires `p₁ = p₂ = 1/3`.
pub fn decompose_uniform_plus_cantor(p: &ProbVector) -> Result<Scalar> {
    if !(p.is_one_third(1) && p.is_one_third(2)) {
        return Err(Error::ConditionFailed("p1 = p2 = 1/3 does not hold".into()));
    }
    Ok(match p.exact() {
        Some(e) => Scalar::exact(&e[0] * rational::rat_int(3)),
        None => Scalar::float(3.0 * p.get(0)),
    })
}

/// Digit laws of τ (uniform on {0,1,2}) and ζ (0 w.p. x, 1 w.p. 1 − x).
pub fn uniform_plus_cantor_laws(x: f64) -> Result<(DigitLaw, DigitLaw)> {
    let tau = DigitLaw::new([1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0])?;
    let zeta = DigitLaw::new([x, 1.0 - x, 0.0, 0.0])?;
    Ok((tau, zeta))
}

/// Parameters of the two Cantor-type factors `ξ = θ + ε`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CantorPair {
    /// `P(θ_n = 0) = p₀ + p₁`, θ digits in {0, 2}.
    pub u: Scalar,
    /// `P(ε_n = 0) = p₀ + p₂`, ε digits in {0, 1}.
    pub v: Scalar,
}

impl CantorPair {
    pub fn laws(&self) -> Result<(DigitLaw, DigitLaw)> {
        let (u, v) = (self.u.value, self.v.value);
        Ok((DigitLaw::new([u, 0.0, 1.0 - u, 0.0])?, DigitLaw::new([v, 1.0 - v, 0.0, 0.0])?))
    }

    /// The digit probabilities of `θ_n + ε_n`: `(uv, u(1−v), (1−u)v, (1−u)(1−v))`.
    pub fn induced(&self) -> Result<ProbVector> {
        match (&self.u.exact, &self.v.exact) {
            (Some(u), Some(v)) => {
                let one = Rat::one();
                ProbVector::from_rationals([
                    u * v,
                    u * (&one - v),
                    (&one - u) * v,
                    (&one - u) * (&one - v),
                ])
            }
            _ => {
                let (u, v) = (self.u.value, self.v.value);
                ProbVector::from_floats([u * v, u * (1.0 - v), (1.0 - u) * v, (1.0 - u) * (1.0 - v)])
            }
        }
    }
}

/// Requires `p₀ = (p₀ + p₁)(p₀ + p₂)`.
pub fn decompose_cantor_pair(p: &ProbVector) -> Result<CantorPair> {
    let fail = || Error::ConditionFailed("p0 = (p0+p1)(p0+p2) does not hold".into());
    match p.exact() {
        Some(e) => {
            let u = &e[0] + &e[1];
            let v = &e[0] + &e[2];
            if &u * &v != e[0] {
                return Err(fail());
            }
            Ok(CantorPair { u: Scalar::exact(u), v: Scalar::exact(v) })
        }
        None => {
            let u = p.get(0) + p.get(1);
            let v = p.get(0) + p.get(2);
            if !approx_eq(u * v, p.get(0)) {
                return Err(fail());
            }
            Ok(CantorPair { u: Scalar::float(u), v: Scalar::float(v) })
        }
    }
}

/// Digit probabilities of η after grouping its bits in threes:
/// `(q₀³, 3q₀²q₁, 3q₀q₁², q₁³)` with `q₁ = 1 − q₀`.
pub fn eta_params(q0: &Rat) -> Result<ProbVector> {
    if *q0 <= rat(0, 1) || *q0 >= Rat::one() {
        return Err(Error::InvalidArgument(format!(
            "q0 = {} must lie in (0, 1)",
            rational::render(q0)
        )));
    }
    let q1 = Rat::one() - q0;
    let three = rational::rat_int(3);
    let p = ProbVector::from_rationals([
        q0 * q0 * q0,
        &three * q0 * q0 * &q1,
        &three * q0 * &q1 * &q1,
        &q1 * &q1 * &q1,
    ])?;
    // 3q0²q1 = 1/3 = 3q0q1² forces q0 = q1 = 1/2, where both sides are 3/8
    debug_assert!(!(p.is_one_third(1) && p.is_one_third(2)));
    Ok(p)
}
