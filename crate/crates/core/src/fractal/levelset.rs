//! The map `f(Δ⁴_{α₁α₂…}) = Δ_{α₁α₂…}` from [0,1] onto [0, 3/2]: the same
//! digits read in base 4 and then in the redundant base-3 system. Its level
//! sets are the sets of representations of the target.

use std::collections::HashMap;

use num::{BigInt, Integer, One, Signed, ToPrimitive};
use serde::Serialize;

use super::cells::{distinct_sum_counts, DimensionEstimate};
use crate::digits::{classify_cardinality, enumerate_representations, DigitString, ReprCardinality};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::rational::{self, Rat};

/// Reinterprets quaternary digits as redundant ternary digits.
///
/// Quaternary-rational inputs must use the expansion ending in (0); a tail
/// (3) is rejected except for `(3)` itself, the only expansion of 1.
pub fn quaternary_to_delta(x4: &DigitString) -> Result<DigitString> {
    match x4.period() {
        None => Err(Error::MissingPeriod),
        Some([3]) if !x4.preperiod().is_empty() => Err(Error::InvalidArgument(format!(
            "{x4} ends in (3); use the expansion ending in (0)"
        ))),
        Some(_) => Ok(x4.clone()),
    }
}

/// Base-4 expansion of `x ∈ [0, 1]`, ending in (0) when terminating.
pub fn quaternary_digits(x: &Rat) -> Result<DigitString> {
    if x.is_negative() || *x > Rat::one() {
        return Err(Error::OutOfRange(rational::render(x)));
    }
    if x.is_one() {
        return DigitString::periodic(&[], &[3]);
    }
    let den = x.denom().clone();
    let mut rem = x.numer().clone();
    let mut digits = Vec::new();
    let mut seen: HashMap<BigInt, usize> = HashMap::new();
    loop {
        if let Some(&start) = seen.get(&rem) {
            let period = digits.split_off(start);
            return DigitString::new(digits, Some(period));
        }
        seen.insert(rem.clone(), digits.len());
        let (q, r) = (rem * BigInt::from(4)).div_rem(&den);
        digits.push(q.to_u8().expect("quaternary digit"));
        rem = r;
    }
}

/// `f(x)` for rational `x ∈ [0, 1]`.
pub fn level_function(x: &Rat) -> Result<Rat> {
    quaternary_to_delta(&quaternary_digits(x)?)?.value()
}

/// Members of a level set `f⁻¹(y)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LevelMembers {
    /// Quaternary values of the representations (for countable sets, those
    /// with preperiod up to the requested depth). Representations with a
    /// (3) tail are left out: their quaternary point maps elsewhere.
    Points { points: Vec<String>, representations: Vec<DigitString> },
    /// After `preperiod`, any concatenation of `blocks` (all words of
    /// length `block_len` with the same value as the aligned period) is a
    /// representation.
    /// This family lies inside the level set; carries between blocks give
    /// further members.
    BlockConstraint { preperiod: Vec<u8>, block_len: usize, blocks: Vec<Vec<u8>> },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelSet {
    pub level: DigitString,
    pub value: String,
    pub cardinality: ReprCardinality,
    pub members: LevelMembers,
}

fn block_alternatives(period: &[u8]) -> Vec<Vec<u8>> {
    let value = |w: &[u8]| w.iter().fold(0u64, |acc, &d| acc * 3 + u64::from(d));
    let target = value(period);
    let len = period.len();
    (0..4u64.pow(len as u32))
        .map(|mut code| {
            let mut w = vec![0u8; len];
            for slot in w.iter_mut().rev() {
                *slot = (code % 4) as u8;
                code /= 4;
            }
            w
        })
        .filter(|w| value(w) == target)
        .collect()
}

pub fn level_set(y: &DigitString, depth: usize) -> Result<LevelSet> {
    let cardinality = classify_cardinality(y)?;
    let period = y.period().ok_or(Error::MissingPeriod)?;
    let members = if cardinality == ReprCardinality::Continuum {
        if period.len() > 12 {
            return Err(Error::InvalidArgument("period too long for block enumeration".into()));
        }
        // alignment and block length with the most alternatives
        let mut best: Option<(Vec<u8>, Vec<Vec<u8>>)> = None;
        for reps in 1..=12 / period.len() {
            let word = period.repeat(reps);
            for shift in 0..period.len() {
                let mut block = word.clone();
                block.rotate_left(shift);
                let alts = block_alternatives(&block);
                if best.as_ref().is_none_or(|(_, b)| alts.len() > b.len()) {
                    let mut pre = y.preperiod().to_vec();
                    pre.extend_from_slice(&period[..shift]);
                    best = Some((pre, alts));
                }
            }
            if best.as_ref().is_some_and(|(_, b)| b.len() >= 2) {
                break;
            }
        }
        let (preperiod, blocks) = best.expect("period is non-empty");
        LevelMembers::BlockConstraint { block_len: blocks[0].len(), preperiod, blocks }
    } else {
        // a representation ending in (3) names a quaternary point whose
        // canonical expansion ends in (0), where f takes another value
        let reps: Vec<DigitString> = enumerate_representations(y, depth.max(y.preperiod().len()))?
            .into_iter()
            .filter(|r| quaternary_to_delta(r).is_ok())
            .collect();
        let points = reps
            .iter()
            .map(|r| r.evaluate(4).map(|v| rational::render(&v)))
            .collect::<Result<Vec<_>>>()?;
        LevelMembers::Points { points, representations: reps }
    };
    Ok(LevelSet {
        level: y.clone(),
        value: rational::render(&y.value()?),
        cardinality,
        members,
    })
}

/// Base-16 digit `4a + b` of a quaternary pair `(a, b)`.
pub fn hex_digit(pair: &[u8]) -> u8 {
    4 * pair[0] + pair[1]
}

/// Box counting in base 16 of the level set of `Δ_{(10)}`: its points have
/// base-16 digits `4a + b` over the admissible pairs, which are {3, 4}.
pub fn levelset_dimension_10(n_max: usize) -> Result<DimensionEstimate> {
    let y: DigitString = "(10)".parse()?;
    let LevelMembers::BlockConstraint { blocks, .. } = level_set(&y, 0)?.members else {
        unreachable!("(10) has a continuum of representations");
    };
    let mut digits: Vec<u8> = blocks.iter().map(|b| hex_digit(b)).collect();
    digits.sort_unstable();
    if n_max > 30 {
        return Err(Error::LevelTooLarge { level: n_max, limit: 30 });
    }
    DimensionEstimate::from_counts(16, &distinct_sum_counts(16, &digits, n_max, Execution::default()))
}
