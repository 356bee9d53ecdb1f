//! Enclosures of the distribution function `F(x) = P(ξ ≤ x)`.
//!
//! `F` satisfies `F(x) = Σ pᵢ F(3x − i)` with `F = 0` below 0 and `F = 1`
//! from 3/2 on. Unrolling it, a prefix with residual `r = 3ᵏ(x − Σ c_j 3⁻ʲ)`
//! contributes its whole mass when `r ≥ 3/2`, nothing when `r < 0`, and is
//! unresolved otherwise. Prefixes with equal residuals are merged; residuals
//! at one depth differ by integers, so at most two stay unresolved. The
//! unresolved mass, plus a rounding allowance, is the width of the enclosure.

use std::ops::{Mul, Sub};

use num::{BigInt, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::prob::ProbVector;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::rational::{self, Rat};

/// Hard cap on the recursion depth.
pub const MAX_DEPTH: usize = 60;

/// Bound on the accumulated rounding error in the masses after `depth`
/// levels (a handful of roundings per level, each ≤ ε relative).
fn rounding_slack(depth: usize) -> f64 {
    8.0 * (depth as f64 + 2.0) * f64::EPSILON
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CdfBounds {
    pub lo: f64,
    pub hi: f64,
    pub depth: usize,
}

impl CdfBounds {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

trait Numerator: Clone + Ord + Zero + Sub<Output = Self> + Mul<Output = Self> + From<u8> {}
impl<T: Clone + Ord + Zero + Sub<Output = T> + Mul<Output = T> + From<u8>> Numerator for T {}

fn enclose<T: Numerator>(probs: &[f64; 4], x_num: T, x_den: T, tol: f64) -> Result<CdfBounds> {
    let three = T::from(3);
    let three_den = three.clone() * x_den.clone();
    let two = T::from(2);
    let mut lo = 0.0;
    let mut open: Vec<(T, f64)> = vec![(x_num, 1.0)];
    for depth in 0..=MAX_DEPTH {
        let mut next: Vec<(T, f64)> = Vec::with_capacity(2);
        let mut unresolved = 0.0;
        for (n, mass) in open.drain(..) {
            if n < T::zero() {
                continue;
            }
            if two.clone() * n.clone() >= three_den {
                lo += mass;
                continue;
            }
            unresolved += mass;
            next.push((n, mass));
        }
        let slack = rounding_slack(depth);
        if unresolved + 2.0 * slack <= tol {
            return Ok(CdfBounds {
                lo: (lo - slack).clamp(0.0, 1.0),
                hi: (lo + unresolved + slack).clamp(0.0, 1.0),
                depth,
            });
        }
        if depth == MAX_DEPTH {
            return Err(Error::CdfNotConverged { lo, hi: lo + unresolved, depth });
        }
        for (n, mass) in next {
            for (c, &pc) in probs.iter().enumerate() {
                if pc == 0.0 {
                    continue;
                }
                let child = three.clone() * n.clone() - T::from(c as u8) * x_den.clone();
                match open.iter_mut().find(|(m, _)| *m == child) {
                    Some(slot) => slot.1 += mass * pc,
                    None => open.push((child, mass * pc)),
                }
            }
        }
    }
    unreachable!("loop returns at MAX_DEPTH")
}

/// Enclosure `[lo, hi] ∋ F(x)` with `hi − lo ≤ tol`.
pub fn cdf(p: &ProbVector, x: &Rat, tol: f64) -> Result<CdfBounds> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if x.is_negative() {
        return Ok(CdfBounds { lo: 0.0, hi: 0.0, depth: 0 });
    }
    if *x >= rational::three_halves() {
        return Ok(CdfBounds { lo: 1.0, hi: 1.0, depth: 0 });
    }
    let probs = p.floats();
    let small = |v: &BigInt| v.to_i128().filter(|n| n.unsigned_abs() < 1u128 << 100);
    match (small(x.numer()), small(x.denom())) {
        (Some(n), Some(d)) => enclose(&probs, n, d, tol),
        _ => enclose(&probs, x.numer().clone(), x.denom().clone(), tol),
    }
}

/// [`cdf`] over many points.
pub fn cdf_many(p: &ProbVector, xs: &[Rat], tol: f64, exec: Execution) -> Result<Vec<CdfBounds>> {
    exec.map(xs, |x| cdf(p, x, tol)).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn pv(a: [(i64, i64); 4]) -> ProbVector {
        ProbVector::rational(a[0], a[1], a[2], a[3]).unwrap()
    }

    #[test]
    fn uniform_midpoint() {
        let p = pv([(1, 3), (1, 3), (1, 3), (0, 1)]);
        let b = cdf(&p, &rat(1, 2), 1e-6).unwrap();
        assert!(b.contains(0.5) && b.width() <= 1e-6, "{b:?}");
        let b = cdf(&p, &rat(1, 7), 1e-8).unwrap();
        assert!(b.contains(1.0 / 7.0), "{b:?}");
    }

    #[test]
    fn endpoints() {
        let p = pv([(1, 4), (1, 4), (1, 4), (1, 4)]);
        let b = cdf(&p, &rat(3, 2), 1e-9).unwrap();
        assert_eq!((b.lo, b.hi), (1.0, 1.0));
        let b = cdf(&p, &rat_int(2), 1e-9).unwrap();
        assert_eq!((b.lo, b.hi), (1.0, 1.0));
        let b = cdf(&p, &rat_int(0), 1e-9).unwrap();
        assert!(b.lo == 0.0 && b.hi <= 1e-9);
        let b = cdf(&p, &rat(-1, 3), 1e-9).unwrap();
        assert_eq!((b.lo, b.hi), (0.0, 0.0));
    }

    #[test]
    fn reflection_symmetric_median() {
        let p = pv([(1, 4), (1, 4), (1, 4), (1, 4)]);
        let b = cdf(&p, &rat(3, 4), 1e-6).unwrap();
        assert!(b.contains(0.5), "{b:?}");
    }

    #[test]
    fn bigint_path_agrees() {
        let p = pv([(1, 5), (1, 5), (2, 5), (1, 5)]);
        let x = rat(5, 7);
        let fast = cdf(&p, &x, 1e-10).unwrap();
        let big = enclose(&p.floats(), x.numer().clone(), x.denom().clone(), 1e-10).unwrap();
        assert_eq!(fast, big);
    }

    #[test]
    fn bad_tolerance() {
        let p = pv([(1, 4), (1, 4), (1, 4), (1, 4)]);
        assert!(cdf(&p, &rat(1, 2), 0.0).is_err());
        assert!(cdf(&p, &rat(1, 2), f64::NAN).is_err());
    }
}
