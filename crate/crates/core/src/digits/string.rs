use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rat;

/// A digit of the alphabet {0,1,2,3}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Digit(u8);

impl Digit {
    pub const MAX: u8 = 3;

    pub fn new(value: u8) -> Result<Self> {
        if value <= Self::MAX {
            Ok(Digit(value))
        } else {
            Err(Error::BadDigit(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl TryFrom<u8> for Digit {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Digit::new(value)
    }
}

pub(crate) fn check_digits(ds: &[u8]) -> Result<()> {
    match ds.iter().find(|&&d| d > Digit::MAX) {
        Some(&d) => Err(Error::BadDigit(d)),
        None => Ok(()),
    }
}

/// An eventually periodic digit sequence `preperiod (period)`, or a finite
/// word when `period` is absent.
///
/// Values are always canonical: the period is primitive and the preperiod is
/// as short as possible, so equality of values is equality of digit sequences.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitString {
    preperiod: Vec<u8>,
    period: Option<Vec<u8>>,
}

impl DigitString {
    pub fn new(preperiod: Vec<u8>, period: Option<Vec<u8>>) -> Result<Self> {
        check_digits(&preperiod)?;
        if let Some(p) = &period {
            if p.is_empty() {
                return Err(Error::Syntax { pos: preperiod.len(), msg: "empty period".into() });
            }
            check_digits(p)?;
        } else if preperiod.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "no digits".into() });
        }
        let mut s = DigitString { preperiod, period };
        s.canonicalize();
        Ok(s)
    }

    pub fn periodic(preperiod: &[u8], period: &[u8]) -> Result<Self> {
        Self::new(preperiod.to_vec(), Some(period.to_vec()))
    }

    pub fn finite(word: &[u8]) -> Result<Self> {
        Self::new(word.to_vec(), None)
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> Option<&[u8]> {
        self.period.as_deref()
    }

    pub fn is_periodic(&self) -> bool {
        self.period.is_some()
    }

    fn canonicalize(&mut self) {
        let Some(period) = self.period.as_mut() else {
            return;
        };
        let len = period.len();
        if let Some(d) = (1..len)
            .filter(|d| len % d == 0)
            .find(|&d| period.chunks(d).all(|c| c == &period[..d]))
        {
            period.truncate(d);
        }
        while let (Some(&last), Some(&plast)) = (self.preperiod.last(), period.last()) {
            if last != plast {
                break;
            }
            self.preperiod.pop();
            period.rotate_right(1);
        }
    }

    /// Digit at 1-based position `k`, or `None` past the end of a finite word.
    pub fn digit(&self, k: usize) -> Option<u8> {
        assert!(k >= 1, "digit positions are 1-based");
        let i = k - 1;
        if i < self.preperiod.len() {
            return Some(self.preperiod[i]);
        }
        self.period.as_ref().map(|p| p[(i - self.preperiod.len()) % p.len()])
    }

    /// First `n` digits (fewer for a short finite word).
    pub fn expand(&self, n: usize) -> Vec<u8> {
        (1..=n).map_while(|k| self.digit(k)).collect()
    }

    /// The digit sequence from 1-based position `k + 1` on.
    pub fn shift(&self, k: usize) -> Self {
        let pre = self.preperiod.len();
        let (preperiod, period) = match &self.period {
            _ if k <= pre => (self.preperiod[k..].to_vec(), self.period.clone()),
            Some(p) => {
                let mut p = p.clone();
                let shift = (k - pre) % p.len();
                p.rotate_left(shift);
                (Vec::new(), Some(p))
            }
            None => (Vec::new(), None),
        };
        DigitString { preperiod, period }
    }

    /// Prepends `word` and re-canonicalizes.
    pub fn prepend(&self, word: &[u8]) -> Result<Self> {
        let mut pre = word.to_vec();
        pre.extend_from_slice(&self.preperiod);
        Self::new(pre, self.period.clone())
    }

    /// Exact value of `Σ α_k base^-k`.
    pub fn evaluate(&self, base: u32) -> Result<Rat> {
        if base < 2 {
            return Err(Error::InvalidArgument(format!("base {base} must be at least 2")));
        }
        let period = self.period.as_ref().ok_or(Error::MissingPeriod)?;
        let s = BigInt::from(base);
        let horner = |word: &[u8]| {
            word.iter().fold(BigInt::zero(), |acc, &d| acc * &s + BigInt::from(d))
        };
        let pre_scale = num::pow(s.clone(), self.preperiod.len());
        let pre_value = Rat::new(horner(&self.preperiod), pre_scale.clone());
        let cycle = num::pow(s.clone(), period.len()) - BigInt::one();
        let tail = Rat::new(horner(period), cycle * pre_scale);
        Ok(pre_value + tail)
    }

    /// Value in the redundant base-3 system.
    pub fn value(&self) -> Result<Rat> {
        self.evaluate(3)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.preperiod {
            write!(f, "{d}")?;
        }
        if let Some(p) = &self.period {
            f.write_str("(")?;
            for d in p {
                write!(f, "{d}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl Serialize for DigitString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Parses `digit* ( "(" digit+ ")" )?` over {0,1,2,3} and canonicalizes.
pub fn parse(text: &str) -> Result<DigitString> {
    let syntax = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut preperiod = Vec::new();
    while pos < bytes.len() && bytes[pos] != b'(' {
        match bytes[pos] {
            b @ b'0'..=b'3' => preperiod.push(b - b'0'),
            _ => return Err(syntax(pos, "expected a digit 0-3 or '('")),
        }
        pos += 1;
    }
    let mut period = None;
    if pos < bytes.len() {
        pos += 1;
        let mut p = Vec::new();
        loop {
            match bytes.get(pos) {
                Some(b @ b'0'..=b'3') => p.push(b - b'0'),
                Some(b')') => break,
                Some(_) => return Err(syntax(pos, "expected a digit 0-3 or ')'")),
                None => return Err(syntax(pos, "unterminated period")),
            }
            pos += 1;
        }
        if p.is_empty() {
            return Err(syntax(pos, "empty period"));
        }
        pos += 1;
        if pos != bytes.len() {
            return Err(syntax(pos, "trailing input after period"));
        }
        period = Some(p);
    }
    if preperiod.is_empty() && period.is_none() {
        return Err(syntax(0, "empty digit string"));
    }
    DigitString::new(preperiod, period)
}

impl FromStr for DigitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
