//! Characteristic function `f(t) = ∏_{k≥1} φ_k(t)` with
//! `φ_k(t) = Σ_m p_m exp(i m t 3⁻ᵏ)`, truncated after `K` factors.
//!
//! Since `|φ_k(t) − 1| ≤ Σ p_m |m t| 3⁻ᵏ ≤ 3|t|3⁻ᵏ`, the neglected factor
//! `T = ∏_{k>K} φ_k` obeys `|T − 1| ≤ exp(s) − 1` with `s = (3/2)|t|3⁻ᴷ`,
//! hence `|f(t) − value| ≤ |value|(exp(s) − 1)`. At `t = 2π` the per-factor
//! bound is `6π·3⁻ᵏ`.

use std::f64::consts::PI;

use num::complex::Complex64;
use super::prob::ProbVector;

/// Allowance for floating-point rounding in a `K`-factor product.
pub fn rounding_slack(k: usize) -> f64 {
    16.0 * (k as f64 + 4.0) * f64::EPSILON
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharfnResult {
    pub value: Complex64,
    /// `|f(t) − value| ≤ tail_bound`
    pub tail_bound: f64,
}

/// `φ_k(t)`
pub fn phi(p: &ProbVector, k: u32, t: f64) -> Complex64 {
    let theta = t / 3f64.powi(k as i32);
    (0..4)
        .map(|m| p.get(m) * Complex64::from_polar(1.0, m as f64 * theta))
        .sum()
}

pub fn charfn(p: &ProbVector, t: f64, k_max: usize) -> CharfnResult {
    let value: Complex64 = (1..=k_max as u32).map(|k| phi(p, k, t)).product();
    let s = 1.5 * t.abs() / 3f64.powi(k_max as i32);
    CharfnResult { value, tail_bound: value.norm() * s.exp_m1() }
}

/// Certified lower bound for `limsup_{|t|→∞} |f(t)|`: `f(2πn·3ʲ) = f(2πn)`
/// for all `j`, so every `|f(2πn)|` is a witness.
pub fn l_lower_bound(p: &ProbVector, n_max: usize, k_max: usize) -> f64 {
    (1..=n_max)
        .map(|n| {
            let r = charfn(p, 2.0 * PI * n as f64, k_max);
            r.value.norm() - r.tail_bound - rounding_slack(k_max)
        })
        .fold(0.0, f64::max)
}
