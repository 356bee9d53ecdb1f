//! Counting and enumerating the representations of a number.
//!
//! A word `c₁…c_m` extends to a representation of `x` iff the residual
//! `3ᵐ(x − Σ c_k 3⁻ᵏ)` lies in `[0, 3/2]`. For `x = n/q` every residual is
//! `N/q` with an integer `N`, so a representation is an infinite walk through
//! the finite graph of residual numerators `N ∈ [0, 3q/2]` with edges
//! `N → 3N − c·q`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num::{BigInt, Signed, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::rewrite::RewriteRule;
use super::string::DigitString;
use crate::error::{Error, Result};
use crate::rational::{three_halves, Rat};

/// How many distinct representations a number has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "count", rename_all = "snake_case")]
pub enum ReprCardinality {
    Unique,
    /// Always at least 2.
    Finite(u64),
    Countable,
    Continuum,
}

impl ReprCardinality {
    pub fn name(&self) -> &'static str {
        match self {
            ReprCardinality::Unique => "unique",
            ReprCardinality::Finite(_) => "finite",
            ReprCardinality::Countable => "countable",
            ReprCardinality::Continuum => "continuum",
        }
    }
}

/// Deepest prefix level used when waiting for the representation count to settle.
pub const STABILIZATION_CAP: usize = 24;

fn check_range(x: &Rat) -> Result<()> {
    if x.is_negative() || *x > three_halves() {
        return Err(Error::OutOfRange(crate::rational::render(x)));
    }
    Ok(())
}

/// Residual numerator over the fixed denominator `q`.
struct Residual {
    q: BigInt,
    two_q_limit: BigInt,
}

impl Residual {
    fn new(x: &Rat) -> (Self, BigInt) {
        let q = x.denom().clone();
        let limit = &q * 3;
        (Residual { q, two_q_limit: limit }, x.numer().clone())
    }

    fn step(&self, n: &BigInt, c: u8) -> Option<BigInt> {
        let next: BigInt = n * 3 - &self.q * BigInt::from(c);
        let admissible = !next.is_negative() && (&next * 2) <= self.two_q_limit;
        admissible.then_some(next)
    }
}

/// Words of length `m` that extend to a representation of `x`, in
/// lexicographic order.
pub fn admissible_prefixes(x: &Rat, m: usize) -> Result<Vec<Vec<u8>>> {
    check_range(x)?;
    let (res, start) = Residual::new(x);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(m);
    fn walk(res: &Residual, n: &BigInt, m: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if word.len() == m {
            out.push(word.clone());
            return;
        }
        for c in 0..=3u8 {
            if let Some(next) = res.step(n, c) {
                word.push(c);
                walk(res, &next, m, word, out);
                word.pop();
            }
        }
    }
    walk(&res, &start, m, &mut word, &mut out);
    Ok(out)
}

/// `admissible_prefixes(x, m).len()` without materializing the words.
pub fn count_admissible_prefixes(x: &Rat, m: usize) -> Result<u128> {
    check_range(x)?;
    let (res, start) = Residual::new(x);
    let mut level: BTreeMap<BigInt, u128> = BTreeMap::from([(start, 1)]);
    for _ in 0..m {
        let mut next: BTreeMap<BigInt, u128> = BTreeMap::new();
        for (n, count) in &level {
            for c in 0..=3u8 {
                if let Some(child) = res.step(n, c) {
                    *next.entry(child).or_default() += count;
                }
            }
        }
        level = next;
    }
    Ok(level.values().sum())
}

fn period_has_rewritable_pair(period: &[u8]) -> bool {
    let len = period.len();
    (0..len).any(|i| RewriteRule::matching([period[i], period[(i + 1) % len]]).is_some())
}

/// Cardinality of the set of representations of the number `d` denotes.
///
/// A periodic tail avoids every rewritable pair iff it is constant 0,
/// constant 3, or lives in {1,2}:
/// - values 0 and 3/2 are unique;
/// - any other simple period gives countably many;
/// - a period containing a rewritable pair (read cyclically) gives a
///   continuum, since disjoint copies of the pair can be swapped
///   independently. This reads "infinitely many digits 0 and 3" as
///   "infinitely many rewritable pairs";
/// - a tail in {1,2} leaves finitely many choices inside the preperiod,
///   counted from admissible prefixes once the count settles.
pub fn classify_cardinality(d: &DigitString) -> Result<ReprCardinality> {
    let period = d.period().ok_or(Error::MissingPeriod)?;
    let x = d.value()?;
    if x.is_zero() || x == three_halves() {
        return Ok(ReprCardinality::Unique);
    }
    if period.len() == 1 {
        return Ok(ReprCardinality::Countable);
    }
    if period_has_rewritable_pair(period) {
        return Ok(ReprCardinality::Continuum);
    }
    debug_assert!(period.iter().all(|&c| c == 1 || c == 2));
    let mut m = d.preperiod().len().max(1);
    while m + 2 <= STABILIZATION_CAP {
        let here = count_admissible_prefixes(&x, m)?;
        let later = count_admissible_prefixes(&x, m + 2)?;
        if here == later {
            return Ok(match here {
                1 => ReprCardinality::Unique,
                n => ReprCardinality::Finite(n as u64),
            });
        }
        m += 2;
    }
    Err(Error::NotStabilized(STABILIZATION_CAP))
}

const MAX_GRAPH_STATES: usize = 2_000_000;

/// Residual graph reachable from `x`.
struct ReprGraph {
    graph: DiGraph<BigInt, u8>,
    start: NodeIndex,
}

impl ReprGraph {
    fn build(x: &Rat) -> Result<Self> {
        check_range(x)?;
        let (res, start_n) = Residual::new(x);
        let mut graph = DiGraph::new();
        let mut index: HashMap<BigInt, NodeIndex> = HashMap::new();
        let start = graph.add_node(start_n.clone());
        index.insert(start_n, start);
        let mut stack = vec![start];
        while let Some(node) = stack.pop() {
            let n = graph[node].clone();
            for c in 0..=3u8 {
                let Some(child) = res.step(&n, c) else { continue };
                let target = match index.get(&child) {
                    Some(&t) => t,
                    None => {
                        if index.len() >= MAX_GRAPH_STATES {
                            return Err(Error::InvalidArgument(
                                "denominator too large for representation graph".into(),
                            ));
                        }
                        let t = graph.add_node(child.clone());
                        index.insert(child, t);
                        stack.push(t);
                        t
                    }
                };
                graph.add_edge(node, target, c);
            }
        }
        Ok(ReprGraph { graph, start })
    }

    /// For every node on a cycle, the digits of the unique walk that stays on
    /// its cycle. Fails if some strongly connected component is not a single
    /// cycle (that would mean a continuum of representations).
    fn cycle_words(&self) -> Result<HashMap<NodeIndex, Vec<u8>>> {
        let g = &self.graph;
        let mut component = vec![usize::MAX; g.node_count()];
        let sccs = tarjan_scc(g);
        for (i, scc) in sccs.iter().enumerate() {
            for &n in scc {
                component[n.index()] = i;
            }
        }
        let inner_edges = |n: NodeIndex| {
            g.edges(n)
                .filter(|e| component[petgraph::visit::EdgeRef::target(e).index()] == component[n.index()])
                .map(|e| (*e.weight(), petgraph::visit::EdgeRef::target(&e)))
                .collect::<Vec<_>>()
        };
        let mut words = HashMap::new();
        for scc in &sccs {
            let cyclic = scc.len() > 1 || g.find_edge(scc[0], scc[0]).is_some();
            if !cyclic {
                continue;
            }
            for &n in scc {
                let mut word = Vec::new();
                let mut cur = n;
                loop {
                    let edges = inner_edges(cur);
                    if edges.len() != 1 {
                        return Err(Error::ContinuumEnumeration);
                    }
                    let (digit, next) = edges[0];
                    word.push(digit);
                    cur = next;
                    if cur == n {
                        break;
                    }
                    if word.len() > scc.len() {
                        return Err(Error::ContinuumEnumeration);
                    }
                }
                words.insert(n, word);
            }
        }
        Ok(words)
    }

    fn paths(&self, m: usize) -> Vec<(Vec<u8>, NodeIndex)> {
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(m);
        self.walk(self.start, m, &mut word, &mut out);
        out
    }

    fn walk(&self, node: NodeIndex, m: usize, word: &mut Vec<u8>, out: &mut Vec<(Vec<u8>, NodeIndex)>) {
        if word.len() == m {
            out.push((word.clone(), node));
            return;
        }
        let mut edges: Vec<_> = self
            .graph
            .edges(node)
            .map(|e| (*e.weight(), petgraph::visit::EdgeRef::target(&e)))
            .collect();
        edges.sort();
        for (c, next) in edges {
            word.push(c);
            self.walk(next, m, word, out);
            word.pop();
        }
    }
}

/// All representations of the number `d` denotes whose canonical preperiod
/// has length at most `depth`, sorted.
///
/// For countable inputs this is the finite part visible at that depth.
pub fn enumerate_representations(d: &DigitString, depth: usize) -> Result<Vec<DigitString>> {
    if classify_cardinality(d)? == ReprCardinality::Continuum {
        return Err(Error::ContinuumEnumeration);
    }
    if depth < d.preperiod().len() {
        return Err(Error::InvalidArgument(format!(
            "depth {depth} is shorter than the preperiod of {d}"
        )));
    }
    let graph = ReprGraph::build(&d.value()?)?;
    let cycles = graph.cycle_words()?;
    let mut reps = BTreeSet::new();
    for (word, end) in graph.paths(depth) {
        if let Some(cycle) = cycles.get(&end) {
            reps.insert(DigitString::periodic(&word, cycle)?);
        }
    }
    Ok(reps.into_iter().collect())
}
