//! Value-preserving swaps of adjacent digit pairs: 03↔10, 13↔20, 23↔30.

use std::fmt;

use serde::Serialize;

use super::string::DigitString;
use crate::error::{Error, Result};

/// One oriented rewrite `from → to`; `3·from[0] + from[1] = 3·to[0] + to[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RewriteRule {
    pub from: [u8; 2],
    pub to: [u8; 2],
}

pub const RULES: [RewriteRule; 6] = [
    RewriteRule { from: [0, 3], to: [1, 0] },
    RewriteRule { from: [1, 0], to: [0, 3] },
    RewriteRule { from: [1, 3], to: [2, 0] },
    RewriteRule { from: [2, 0], to: [1, 3] },
    RewriteRule { from: [2, 3], to: [3, 0] },
    RewriteRule { from: [3, 0], to: [2, 3] },
];

impl RewriteRule {
    pub fn matching(pair: [u8; 2]) -> Option<RewriteRule> {
        RULES.iter().copied().find(|r| r.from == pair)
    }

    pub fn inverse(self) -> RewriteRule {
        RewriteRule { from: self.to, to: self.from }
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}→{}{}", self.from[0], self.from[1], self.to[0], self.to[1])
    }
}

impl Serialize for RewriteRule {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A rewritable pair occupying 1-based positions `position` and `position + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RewriteSite {
    pub position: usize,
    pub rule: RewriteRule,
}

/// All sites whose pair lies within the first `horizon` digits.
pub fn rewrite_sites(d: &DigitString, horizon: usize) -> Vec<RewriteSite> {
    d.expand(horizon)
        .windows(2)
        .enumerate()
        .filter_map(|(i, w)| {
            RewriteRule::matching([w[0], w[1]]).map(|rule| RewriteSite { position: i + 1, rule })
        })
        .collect()
}

/// Applies `rule` at `position`; the result denotes the same number.
pub fn apply_rewrite(d: &DigitString, position: usize, rule: RewriteRule) -> Result<DigitString> {
    let invalid = || Error::InvalidRewriteSite { position, rule: rule.to_string() };
    if position == 0 || RewriteRule::matching(rule.from) != Some(rule) {
        return Err(invalid());
    }
    let mut head = d.expand(position + 1);
    if head.len() != position + 1 || head[position - 1..] != rule.from {
        return Err(invalid());
    }
    head[position - 1] = rule.to[0];
    head[position] = rule.to[1];
    d.shift(position + 1).prepend(&head)
}
