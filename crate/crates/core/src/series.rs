//! The series `1/3 + 1/3 + 1/3 + 1/9 + 1/9 + 1/9 + … = 3/2`, its subsums,
//! and the bridge from subsums to redundant base-3 digits.

use num::{BigInt, Signed, Zero};

use crate::digits::DigitString;
use crate::error::{Error, Result};
use crate::rational::{inv_pow3, three_halves, Rat};

/// Finite 0/1 selector `ε₁ε₂…` picking terms of the series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SubsumSelector {
    bits: Vec<bool>,
}

impl SubsumSelector {
    pub fn new(bits: Vec<bool>) -> Self {
        SubsumSelector { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `"101010"`
    pub fn render(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidArgument(format!("bad selector bit {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SubsumSelector::new)
    }
}

fn check_index(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("series terms are indexed from 1".into()));
    }
    Ok(())
}

/// `u_n = 3^-⌈n/3⌉`
pub fn series_term(n: usize) -> Result<Rat> {
    check_index(n)?;
    Ok(inv_pow3(n.div_ceil(3)))
}

/// `r_n = Σ_{k>n} u_k = 3^-q (3q − n + 3/2)` with `q = ⌈n/3⌉`; `r_0 = 3/2`.
pub fn series_remainder(n: usize) -> Rat {
    let q = n.div_ceil(3);
    let head = Rat::from_integer(BigInt::from(3 * q - n));
    (head + three_halves()) * inv_pow3(q)
}

/// `u_n ≤ r_n` for all `n ≤ n_max`, by exact comparison.
pub fn kakeya_check(n_max: usize) -> bool {
    (1..=n_max).all(|n| series_term(n).expect("n >= 1") <= series_remainder(n))
}

pub fn subsum(sel: &SubsumSelector) -> Rat {
    sel.bits
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| series_term(i + 1).expect("index >= 1"))
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// Takes `u_n` whenever the partial sum stays `≤ x`; the error is at most
/// `r_{n_max}`.
pub fn greedy_approximate(x: &Rat, n_max: usize) -> Result<SubsumSelector> {
    if x.is_negative() || *x > three_halves() {
        return Err(Error::OutOfRange(crate::rational::render(x)));
    }
    let mut partial = Rat::zero();
    let mut bits = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let candidate = &partial + series_term(n)?;
        let take = candidate <= *x;
        if take {
            partial = candidate;
        }
        bits.push(take);
    }
    Ok(SubsumSelector::new(bits))
}

/// Digits `d_k = ε_{3k−2} + ε_{3k−1} + ε_{3k}`; `subsum(sel)` equals the
/// value of `d₁…d_n(0)`.
pub fn eta_subsum_digits(sel: &SubsumSelector) -> Result<Vec<u8>> {
    if !sel.len().is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "selector length {} is not a multiple of 3",
            sel.len()
        )));
    }
    Ok(sel.bits.chunks(3).map(|c| c.iter().filter(|&&b| b).count() as u8).collect())
}

/// The digit word of [`eta_subsum_digits`] as a terminating digit string.
pub fn eta_subsum_string(sel: &SubsumSelector) -> Result<DigitString> {
    DigitString::periodic(&eta_subsum_digits(sel)?, &[0])
}
