//! Cylinders: numbers whose representation starts with a fixed word.
//!
//! Two intervals are attached to a base `c₁…c_m` with `a = Σ c_k 3⁻ᵏ`:
//! the rank-m segment `[a, a + 3⁻ᵐ]`, and the set of numbers that actually
//! admit a continuation of the base, `[a, a + (3/2)·3⁻ᵐ]`. Overlaps between
//! adjacent cylinders are identities about the second interval.

use num::Zero;

use super::string::{check_digits, Digit};
use crate::error::{Error, Result};
use crate::rational::{inv_pow3, three_halves, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cylinder {
    base: Vec<u8>,
}

impl Cylinder {
    pub fn new(base: Vec<u8>) -> Result<Self> {
        check_digits(&base)?;
        if base.is_empty() {
            return Err(Error::InvalidArgument("cylinder base must be non-empty".into()));
        }
        Ok(Cylinder { base })
    }

    pub fn base(&self) -> &[u8] {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn left(&self) -> Rat {
        word_value(&self.base)
    }

    /// `(a, a + 3⁻ᵐ)`
    pub fn interval(&self) -> (Rat, Rat) {
        let a = self.left();
        let b = &a + inv_pow3(self.rank());
        (a, b)
    }

    /// `(a, a + (3/2)·3⁻ᵐ)`
    pub fn number_set(&self) -> (Rat, Rat) {
        number_set(&self.base)
    }
}

/// `Σ c_k 3⁻ᵏ` for a finite word.
pub fn word_value(word: &[u8]) -> Rat {
    word.iter()
        .enumerate()
        .fold(Rat::zero(), |acc, (i, &c)| acc + Rat::from_integer(c.into()) * inv_pow3(i + 1))
}

/// Number-set interval for any word, including the empty one (`[0, 3/2]`).
pub fn number_set(word: &[u8]) -> (Rat, Rat) {
    let a = word_value(word);
    let b = &a + three_halves() * inv_pow3(word.len());
    (a, b)
}

pub fn cylinder_interval(c: &Cylinder) -> (Rat, Rat) {
    c.interval()
}

/// Intersection of two closed intervals, `None` when disjoint.
pub fn intersect(x: &(Rat, Rat), y: &(Rat, Rat)) -> Option<(Rat, Rat)> {
    let lo = (&x.0).max(&y.0).clone();
    let hi = (&x.1).min(&y.1).clone();
    (lo <= hi).then_some((lo, hi))
}

/// The cylinder `base·i·3` (equivalently `base·[i+1]·0`), which is the
/// overlap of the adjacent cylinders `base·i` and `base·[i+1]`.
pub fn cylinder_overlap(base: &[u8], i: Digit) -> Result<Cylinder> {
    check_digits(base)?;
    let i = i.value();
    if i >= Digit::MAX {
        return Err(Error::NoRightNeighbour(i));
    }
    let mut word = base.to_vec();
    word.extend([i, 3]);
    let overlap = Cylinder::new(word)?;
    debug_assert!({
        let mut left = base.to_vec();
        left.push(i);
        let mut right = base.to_vec();
        right.push(i + 1);
        intersect(&number_set(&left), &number_set(&right)) == Some(overlap.number_set())
    });
    Ok(overlap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn cyl(word: &[u8]) -> Cylinder {
        Cylinder::new(word.to_vec()).unwrap()
    }

    #[test]
    fn segment_endpoints() {
        assert_eq!(cyl(&[3]).interval(), (rat_int(1), rat(4, 3)));
        assert_eq!(cyl(&[1, 3]).interval(), (rat(2, 3), rat(7, 9)));
        assert_eq!(cyl(&[0]).interval(), (rat_int(0), rat(1, 3)));
        assert!(Cylinder::new(vec![]).is_err());
        assert!(Cylinder::new(vec![4]).is_err());
    }

    #[test]
    fn overlap_examples() {
        let c = cylinder_overlap(&[], Digit::new(0).unwrap()).unwrap();
        assert_eq!(c.base(), &[0, 3]);
        assert_eq!(c.interval(), (rat(1, 3), rat(4, 9)));
        assert_eq!(c.number_set(), (rat(1, 3), rat(1, 2)));
        assert_eq!(
            intersect(&number_set(&[0]), &number_set(&[1])),
            Some((rat(1, 3), rat(1, 2)))
        );
        let c = cylinder_overlap(&[2], Digit::new(1).unwrap()).unwrap();
        assert_eq!(c.base(), &[2, 1, 3]);
        assert_eq!(c.number_set(), number_set(&[2, 2, 0]));
        assert_eq!(
            cylinder_overlap(&[], Digit::new(3).unwrap()),
            Err(Error::NoRightNeighbour(3))
        );
    }
}
