use super::cells::DigitSet;
use crate::error::{Error, Result};

pub fn log3_2() -> f64 {
    2f64.ln() / 3f64.ln()
}

/// `log₃((3 + √5)/2)`, the dimension of `C[{0,1,3}]` and `C[{0,2,3}]`.
pub fn golden_dimension() -> f64 {
    ((3.0 + 5f64.sqrt()) / 2.0).ln() / 3f64.ln()
}

/// `−Σ pᵢ log₃ pᵢ` for positive frequencies summing to 1.
pub fn eggleston_dimension(freqs: &[f64]) -> Result<f64> {
    if freqs.is_empty() || freqs.iter().any(|&p| p.is_nan() || p <= 0.0) {
        return Err(Error::InvalidArgument(format!("frequencies must be positive: {freqs:?}")));
    }
    let total: f64 = freqs.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidArgument(format!("frequencies sum to {total}")));
    }
    Ok(-freqs.iter().map(|&p| p * p.ln()).sum::<f64>() / 3f64.ln())
}

/// Dimension of `C[V]`, for comparison with box-counting estimates.
pub fn target_dimension(v: &DigitSet) -> f64 {
    match v.digits().as_slice() {
        [_] => 0.0,
        [_, _] => log3_2(),
        [0, 1, 3] | [0, 2, 3] => golden_dimension(),
        _ => 1.0,
    }
}

/// Root of `3⁻ˣ + Σ_{n≥0} 2ⁿ 3⁻⁽ⁿ⁺²⁾ˣ = 1` by bisection, using the closed form
/// `Σ = 3⁻²ˣ/(1 − 2·3⁻ˣ)` valid for `x > log₃2`.
pub fn similarity_root_013() -> f64 {
    let g = |x: f64| {
        let z = 3f64.powf(-x);
        z + z * z / (1.0 - 2.0 * z) - 1.0
    };
    let (mut lo, mut hi) = (log3_2() + 1e-12, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
