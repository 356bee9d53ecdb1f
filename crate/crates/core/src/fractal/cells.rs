//! Box counting for sets of numbers whose digits are restricted to a subset
//! of the alphabet.
//!
//! At level `n` the cells are the distinct integers `Σ c_k bⁿ⁻ᵏ` over words
//! `c ∈ Vⁿ` (left endpoints in units of `b⁻ⁿ`). Overlapping cylinders share
//! an endpoint, so the level-n set is built from the level-(n−1) set as
//! `{b·s + c}` and deduplicated, which is exhaustive without walking all
//! `|V|ⁿ` words.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;

/// Upper bound on `|V|ⁿ` accepted by [`count_cells`].
pub const MAX_WORDS: u128 = 5_000_000;

/// Non-empty subset of {0,1,2,3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitSet {
    mask: u8,
}

impl DigitSet {
    pub fn new(digits: &[u8]) -> Result<Self> {
        let mut mask = 0u8;
        for &d in digits {
            if d > 3 {
                return Err(Error::BadDigit(d));
            }
            mask |= 1 << d;
        }
        if mask == 0 {
            return Err(Error::InvalidArgument("digit set must be non-empty".into()));
        }
        Ok(DigitSet { mask })
    }

    pub fn digits(&self) -> Vec<u8> {
        (0..4).filter(|d| self.mask & (1 << d) != 0).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subset(&self, other: &DigitSet) -> bool {
        self.mask & !other.mask == 0
    }

    /// Image under `i ↦ 3 − i`.
    pub fn reflect(&self) -> DigitSet {
        let digits: Vec<u8> = self.digits().iter().map(|d| 3 - d).collect();
        DigitSet::new(&digits).expect("reflection of a digit set is a digit set")
    }
}

impl FromStr for DigitSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::InvalidArgument(format!("bad digit {c:?} in digit set"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DigitSet::new(&digits)
    }
}

impl fmt::Display for DigitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.digits().iter().try_for_each(|d| write!(f, "{d}"))
    }
}

impl Serialize for DigitSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Cell counts `N(1..=n_max)` in base `base` for digits `digits`.
pub fn distinct_sum_counts(base: u128, digits: &[u8], n_max: usize, exec: Execution) -> Vec<u64> {
    let mut level: Vec<u128> = vec![0];
    let mut counts = Vec::with_capacity(n_max);
    for _ in 0..n_max {
        let chunks: Vec<&[u128]> = level.chunks(16_384).collect();
        let mut next = exec
            .map(&chunks, |chunk| {
                let mut out = Vec::with_capacity(chunk.len() * digits.len());
                for &s in *chunk {
                    out.extend(digits.iter().map(|&c| base * s + u128::from(c)));
                }
                out
            })
            .concat();
        exec.sort_dedup(&mut next);
        counts.push(next.len() as u64);
        level = next;
    }
    counts
}

fn check_level(v: &DigitSet, n: usize) -> Result<()> {
    let limit = match v.len() {
        1 => 60,
        k => (1..).take_while(|&m| (k as u128).pow(m) <= MAX_WORDS).last().unwrap_or(0) as usize,
    };
    if n == 0 {
        return Err(Error::InvalidArgument("level must be at least 1".into()));
    }
    if n > limit {
        return Err(Error::LevelTooLarge { level: n, limit });
    }
    Ok(())
}

/// `N(n)` for `n = 1..=n_max`.
pub fn cell_counts(v: &DigitSet, n_max: usize, exec: Execution) -> Result<Vec<u64>> {
    check_level(v, n_max)?;
    Ok(distinct_sum_counts(3, &v.digits(), n_max, exec))
}

/// Number of distinct level-`n` cells of `C[V]`.
pub fn count_cells(v: &DigitSet, n: usize) -> Result<u64> {
    Ok(*cell_counts(v, n, Execution::default())?.last().expect("n >= 1"))
}

/// Box-counting estimate: counts and the least-squares slope of
/// `log_base N(n)` against `n` over the upper half of the levels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionEstimate {
    pub base: u32,
    pub counts: Vec<(usize, u64)>,
    pub slope: f64,
    pub r2: f64,
}

impl DimensionEstimate {
    pub fn from_counts(base: u32, counts: &[u64]) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidArgument("need at least two levels".into()));
        }
        let n_max = counts.len();
        let first = (n_max / 2 + 1).min(n_max - 1);
        let ln_base = f64::from(base).ln();
        let pts: Vec<(f64, f64)> = (first..=n_max)
            .map(|n| (n as f64, (counts[n - 1] as f64).ln() / ln_base))
            .collect();
        let (slope, r2) = least_squares(&pts);
        Ok(DimensionEstimate {
            base,
            counts: counts.iter().enumerate().map(|(i, &c)| (i + 1, c)).collect(),
            slope,
            r2,
        })
    }
}

fn least_squares(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    (slope, r2)
}

pub fn box_dimension(v: &DigitSet, n_max: usize) -> Result<DimensionEstimate> {
    box_dimension_with(v, n_max, Execution::default())
}

pub fn box_dimension_with(v: &DigitSet, n_max: usize, exec: Execution) -> Result<DimensionEstimate> {
    DimensionEstimate::from_counts(3, &cell_counts(v, n_max, exec)?)
}
