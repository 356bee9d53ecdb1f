//! Seeded sampling of digit processes.
//!
//! Digits are drawn by inverse CDF: with `u` uniform on [0,1), the digit is
//! the first `i` with `u < p₀ + … + p_i`. Batches are split into fixed-size
//! chunks, chunk `j` using ChaCha8 seeded with `seed` on stream `j`, so the
//! output does not depend on the execution strategy.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::prob::ProbVector;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::rational::{pow3, Rat};

const CHUNK: usize = 4096;

/// Law of one digit on {0,1,2,3}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DigitLaw {
    cumulative: [f64; 3],
    last: u8,
}

impl DigitLaw {
    pub fn new(probs: [f64; 4]) -> Result<Self> {
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::InvalidArgument(format!("bad digit law {probs:?}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!("digit law sums to {total}")));
        }
        let mut cumulative = [0.0; 3];
        let mut acc = 0.0;
        for i in 0..3 {
            acc += probs[i];
            cumulative[i] = acc;
        }
        // rounding in the cumulative sums must not make a null digit reachable
        let last = (0..4).rev().find(|&i| probs[i] > 0.0).unwrap_or(0) as u8;
        Ok(DigitLaw { cumulative, last })
    }

    pub fn of(p: &ProbVector) -> Self {
        Self::new(p.floats()).expect("a valid ProbVector is a valid digit law")
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> u8 {
        let u: f64 = rng.random();
        (0..self.last).find(|&i| u < self.cumulative[i as usize]).unwrap_or(self.last)
    }

    /// `Σ_{k≤depth} d_k 3⁻ᵏ` in floating point.
    pub fn draw_value<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> f64 {
        let mut value = 0.0;
        let mut scale = 1.0;
        for _ in 0..depth {
            scale /= 3.0;
            value += f64::from(self.draw(rng)) * scale;
        }
        value
    }
}

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// One exact draw of the depth-`depth` truncation of ξ; within `(3/2)·3⁻ᵈᵉᵖᵗʰ`
/// of a draw of ξ.
pub fn sample(p: &ProbVector, depth: usize, seed: u64) -> Result<Rat> {
    if depth == 0 {
        return Err(Error::InvalidArgument("sampling depth must be at least 1".into()));
    }
    let law = DigitLaw::of(p);
    let mut rng = stream_rng(seed, 0);
    let numerator = (0..depth).fold(BigInt::from(0), |acc, _| acc * 3 + law.draw(&mut rng));
    Ok(Rat::new(numerator, pow3(depth)))
}

/// `count` independent draws of a digit process truncated at `depth`.
pub fn sample_law_many(
    law: &DigitLaw,
    depth: usize,
    count: usize,
    seed: u64,
    exec: Execution,
) -> Vec<f64> {
    let chunks = count.div_ceil(CHUNK);
    exec.map_range(chunks, |j| {
        let mut rng = stream_rng(seed, j as u64);
        let n = CHUNK.min(count - j * CHUNK);
        (0..n).map(|_| law.draw_value(&mut rng, depth)).collect::<Vec<_>>()
    })
    .concat()
}

/// `count` draws of ξ in floating point (first draw matches [`sample`]).
pub fn sample_many(p: &ProbVector, depth: usize, count: usize, seed: u64, exec: Execution) -> Vec<f64> {
    sample_law_many(&DigitLaw::of(p), depth, count, seed, exec)
}

/// Draws of `X₁ + … + X_r` for independent digit processes, component `i`
/// using seed `seed + i`.
pub fn sample_sum_many(
    laws: &[DigitLaw],
    depth: usize,
    count: usize,
    seed: u64,
    exec: Execution,
) -> Vec<f64> {
    let mut total = vec![0.0; count];
    for (i, law) in laws.iter().enumerate() {
        let part = sample_law_many(law, depth, count, seed.wrapping_add(i as u64), exec);
        total.iter_mut().zip(part).for_each(|(t, x)| *t += x);
    }
    total
}
