//! Goodness-of-fit statistics used to validate the samplers.

use statrs::distribution::{ChiSquared, ContinuousCDF};

/// `c(α) = sqrt(−ln(α/2)/2)`, the asymptotic Kolmogorov quantile.
pub fn ks_coefficient(alpha: f64) -> f64 {
    (-(alpha / 2.0).ln() / 2.0).sqrt()
}

pub fn ks_critical_one_sample(alpha: f64, n: usize) -> f64 {
    ks_coefficient(alpha) / (n as f64).sqrt()
}

pub fn ks_critical_two_sample(alpha: f64, n: usize, m: usize) -> f64 {
    let (n, m) = (n as f64, m as f64);
    ks_coefficient(alpha) * ((n + m) / (n * m)).sqrt()
}

/// `sup |F_a − F_b|` over two samples.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    d
}

/// One-sample statistic against a model distribution function known only
/// through enclosures `[lo, hi]` at the sorted sample points; returns the
/// largest distance consistent with the enclosures.
pub fn ks_one_sample_enclosed(sorted: &[f64], bounds: &[(f64, f64)]) -> f64 {
    assert_eq!(sorted.len(), bounds.len());
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let (lo, hi) = bounds[i];
        d = d.max((j + 1) as f64 / n - lo).max(hi - i as f64 / n);
        i = j + 1;
    }
    d
}

/// Pearson statistic and degrees of freedom; cells with zero expected
/// probability are skipped.
pub fn chi_square_statistic(observed: &[u64], probs: &[f64]) -> (f64, usize) {
    let total: u64 = observed.iter().sum();
    let mut stat = 0.0;
    let mut cells = 0usize;
    for (&o, &p) in observed.iter().zip(probs) {
        if p <= 0.0 {
            continue;
        }
        let e = p * total as f64;
        stat += (o as f64 - e).powi(2) / e;
        cells += 1;
    }
    (stat, cells.saturating_sub(1))
}

pub fn chi_square_critical(alpha: f64, df: usize) -> f64 {
    ChiSquared::new(df as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(1.0 - alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_values() {
        assert!((ks_critical_two_sample(0.01, 100_000, 100_000) - 0.007_279).abs() < 1e-5);
        assert!((chi_square_critical(0.01, 3) - 11.3449).abs() < 1e-3);
    }

    #[test]
    fn two_sample_statistic() {
        assert_eq!(ks_two_sample(&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.0]), 0.0);
        assert_eq!(ks_two_sample(&[1.0, 2.0], &[3.0, 4.0]), 1.0);
        assert!((ks_two_sample(&[1.0, 3.0], &[2.0, 4.0]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn one_sample_statistic() {
        let xs = [0.25, 0.5, 0.75];
        let exact: Vec<_> = xs.iter().map(|&x| (x, x)).collect();
        let d = ks_one_sample_enclosed(&xs, &exact);
        assert!((d - 0.25).abs() < 1e-15);
    }

    #[test]
    fn chi_square() {
        let (s, df) = chi_square_statistic(&[25, 25, 50, 0], &[0.25, 0.25, 0.5, 0.0]);
        assert_eq!((s, df), (0.0, 2));
    }
}
