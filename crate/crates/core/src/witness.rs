//! Lower bound on sigma(K_{p1,...,pt}, n) and the extremal sequences that
//! attain it.
//!
//! For a cut index `i` write
//!
//! * `head  = p_i + ... + p_t`
//! * `slack = p_1 + ... + p_i - 2 p_i`
//! * `low   = p_1 + ... + p_t - p_i - 1`
//!
//! The witness graph has `head - 1` dominating vertices joined to a block of
//! `n - head + 1` vertices in which every vertex has degree `slack` (one
//! vertex has `slack - 1` when both `slack` and the block size are odd).
//! It has too few vertices of degree at least `total - p_i` to host
//! K_{p1,...,pt}, so its degree sum plus two bounds sigma from below.

use std::fmt;

use crate::decompose::hamiltonian_decomposition;
use crate::error::{Error, Result};
use crate::graph::{MultipartiteSpec, SimpleGraph};
use crate::sequence::DegreeSequence;

/// Part sizes, a cut index `2 <= i <= t`, and a term count `n >= total`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WitnessSpec {
    parts: MultipartiteSpec,
    cut_index: usize,
    n: usize,
}

/// Which of the four parity regimes the construction falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityCase {
    /// Even slack, even block: slack/2 cycles.
    EvenSlackEvenBlock,
    /// Even slack, odd block: slack/2 cycles.
    EvenSlackOddBlock,
    /// Odd slack, even block: the 1-factor plus (slack-1)/2 cycles.
    OddSlackEvenBlock,
    /// Odd slack, odd block: (slack+1)/2 cycles minus alternate edges of the first cycle.
    OddSlackOddBlock,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityCase::EvenSlackEvenBlock => "even/even",
            ParityCase::EvenSlackOddBlock => "even/odd",
            ParityCase::OddSlackEvenBlock => "odd/even",
            ParityCase::OddSlackOddBlock => "odd/odd",
        })
    }
}

impl WitnessSpec {
    pub fn new(parts: MultipartiteSpec, cut_index: usize, n: usize) -> Result<Self> {
        let t = parts.t();
        if cut_index < 2 || cut_index > t {
            return Err(Error::InvalidSpec(format!(
                "cut index {cut_index} must lie in 2..={t}"
            )));
        }
        if n < parts.total() {
            return Err(Error::InvalidSpec(format!(
                "n = {n} is below p1+...+pt = {}",
                parts.total()
            )));
        }
        Ok(WitnessSpec {
            parts,
            cut_index,
            n,
        })
    }

    pub fn parts(&self) -> &MultipartiteSpec {
        &self.parts
    }

    pub fn cut_index(&self) -> usize {
        self.cut_index
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_i + ... + p_t`.
    pub fn head(&self) -> usize {
        self.parts.parts()[self.cut_index - 1..].iter().sum()
    }

    /// `p_1 + ... + p_i - 2 p_i`.
    pub fn slack(&self) -> usize {
        let prefix: usize = self.parts.parts()[..self.cut_index].iter().sum();
        prefix - 2 * self.parts.part(self.cut_index)
    }

    /// `p_1 + ... + p_t - p_i - 1`.
    pub fn low(&self) -> usize {
        self.parts.total() - self.parts.part(self.cut_index) - 1
    }

    /// Vertices outside the dominating clique: `n - head + 1`.
    pub fn block_order(&self) -> usize {
        self.n - self.head() + 1
    }

    pub fn parity_case(&self) -> ParityCase {
        match (self.slack() % 2 == 1, self.block_order() % 2 == 1) {
            (false, false) => ParityCase::EvenSlackEvenBlock,
            (false, true) => ParityCase::EvenSlackOddBlock,
            (true, false) => ParityCase::OddSlackEvenBlock,
            (true, true) => ParityCase::OddSlackOddBlock,
        }
    }

    /// `2 * floor((A n - B + 2) / 2)` with
    /// `A = 2(p1+...+pt) - (p1+...+pi) - 2` and
    /// `B = (p1+...+pt - p_i)(p_i+...+p_t - 1)`.
    pub fn bound(&self) -> i64 {
        let total = self.parts.total() as i64;
        let prefix: i64 = self.parts.parts()[..self.cut_index].iter().sum::<usize>() as i64;
        let p_i = self.parts.part(self.cut_index) as i64;
        let head = self.head() as i64;
        let a = 2 * total - prefix - 2;
        let b = (total - p_i) * (head - 1);
        2 * (a * self.n as i64 - b + 2).div_euclid(2)
    }

    /// The degree sequence realized by [`WitnessSpec::build`].
    pub fn sequence(&self) -> DegreeSequence {
        let n = self.n;
        let head = self.head();
        let low = self.low();
        let mut degrees = vec![n - 1; head - 1];
        if self.parity_case() == ParityCase::OddSlackOddBlock {
            degrees.extend(std::iter::repeat_n(low, n - head));
            degrees.push(low - 1);
        } else {
            degrees.extend(std::iter::repeat_n(low, n - head + 1));
        }
        DegreeSequence::from_degrees(degrees)
    }

    /// The extremal graph. Block vertices are `0..n-head+1` (in the odd/odd
    /// case `x_1, ..., x_{2m+1}` are labels `0, 1, ..., 2m`); the
    /// dominating clique K_{head-1} takes the remaining labels.
    pub fn build(&self) -> Result<SimpleGraph> {
        let block = self.block_graph()?;
        Ok(block.join(&SimpleGraph::complete(self.head() - 1)))
    }

    fn block_graph(&self) -> Result<SimpleGraph> {
        let order = self.block_order();
        let slack = self.slack();
        if slack == 0 {
            return Ok(SimpleGraph::empty(order));
        }
        let decomposition = hamiltonian_decomposition(order)?;
        match self.parity_case() {
            ParityCase::EvenSlackEvenBlock | ParityCase::EvenSlackOddBlock => {
                decomposition.union_of_cycles(slack / 2)
            }
            ParityCase::OddSlackEvenBlock => {
                let cycles = decomposition.union_of_cycles((slack - 1) / 2)?;
                let matching = decomposition.matching_graph();
                let edges = cycles.edges().chain(matching.edges());
                SimpleGraph::from_edges(order, edges)
                    .map_err(|e| Error::Construction(format!("matching overlaps cycles: {e}")))
            }
            ParityCase::OddSlackOddBlock => {
                let cycles = decomposition.union_of_cycles(slack.div_ceil(2))?;
                let x = &decomposition.cycles()[0];
                // x1x2, x3x4, ..., x_{2m-1}x_{2m}, then x_{2m+1}x1
                let mut deleted: Vec<(usize, usize)> =
                    x.chunks_exact(2).map(|pair| (pair[0], pair[1])).collect();
                deleted.push((x[order - 1], x[0]));
                cycles
                    .remove_edges(deleted)
                    .map_err(|e| Error::Construction(e.to_string()))
            }
        }
    }
}

/// Evaluates the lower bound for one cut index.
pub fn bound_formula(spec: &WitnessSpec) -> i64 {
    spec.bound()
}

/// The cut index in `2..=t` with the largest bound (smallest index on ties).
pub fn best_bound(parts: &MultipartiteSpec, n: usize) -> Result<(usize, i64)> {
    if parts.t() < 2 {
        return Err(Error::InvalidSpec(
            "a bound needs at least two parts".into(),
        ));
    }
    let mut best: Option<(usize, i64)> = None;
    for i in 2..=parts.t() {
        let value = WitnessSpec::new(parts.clone(), i, n)?.bound();
        if best.is_none_or(|(_, b)| value > b) {
            best = Some((i, value));
        }
    }
    Ok(best.expect("t >= 2"))
}

pub fn witness_sequence(spec: &WitnessSpec) -> DegreeSequence {
    spec.sequence()
}

pub fn build_witness(spec: &WitnessSpec) -> Result<SimpleGraph> {
    spec.build()
}

/// Degree-dominance test: do the largest `total` entries of `s` pointwise
/// dominate the sorted degree sequence of K_{p1,...,pt}?
///
/// This is only a necessary condition for `s` to be potentially
/// K_{p1,...,pt}-graphic. `false` rules containment out; `true` decides
/// nothing (use [`crate::oracle::is_potentially`] for the exact answer).
pub fn dominance_check(s: &DegreeSequence, parts: &MultipartiteSpec) -> Result<bool> {
    let needed = parts.total();
    if s.len() < needed {
        return Err(Error::TooShort {
            len: s.len(),
            needed,
        });
    }
    Ok(dominates(s.degrees(), parts.degree_sequence().degrees()))
}

/// `host` and `target` both non-increasing.
pub(crate) fn dominates(host: &[usize], target: &[usize]) -> bool {
    host.len() >= target.len() && host.iter().zip(target).all(|(h, t)| h >= t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(parts: &[usize], i: usize, n: usize) -> WitnessSpec {
        WitnessSpec::new(MultipartiteSpec::new(parts.to_vec()).unwrap(), i, n).unwrap()
    }

    fn parts(p: &[usize]) -> MultipartiteSpec {
        MultipartiteSpec::new(p.to_vec()).unwrap()
    }

    #[test]
    fn bound_examples() {
        assert_eq!(spec(&[1, 1, 1], 2, 6).bound(), 12);
        assert_eq!(spec(&[2, 1, 1], 2, 7).bound(), 20);
        assert_eq!(spec(&[2, 2], 2, 4).bound(), 8);
    }

    #[test]
    fn spec_validation() {
        let p = parts(&[2, 1, 1]);
        assert!(WitnessSpec::new(p.clone(), 1, 7).is_err());
        assert!(WitnessSpec::new(p.clone(), 4, 7).is_err());
        assert!(WitnessSpec::new(p, 2, 3).is_err());
    }

    #[test]
    fn best_bound_examples() {
        assert_eq!(spec(&[1, 1, 1], 3, 6).bound(), 8);
        assert_eq!(best_bound(&parts(&[1, 1, 1]), 6).unwrap(), (2, 12));
        assert_eq!(spec(&[2, 1, 1], 3, 7).bound(), 16);
        assert_eq!(best_bound(&parts(&[2, 1, 1]), 7).unwrap(), (2, 20));
        assert_eq!(best_bound(&parts(&[1, 1]), 2).unwrap(), (2, 2));
        assert!(best_bound(&parts(&[3]), 4).is_err());
    }

    #[test]
    fn sequence_examples() {
        assert_eq!(spec(&[1, 1, 1], 2, 6).sequence().to_string(), "5,1,1,1,1,1");
        assert_eq!(spec(&[2, 1], 2, 5).sequence().to_string(), "1,1,1,1,0");
        assert_eq!(spec(&[2, 2], 2, 6).sequence().to_string(), "5,1,1,1,1,1");
    }

    #[test]
    fn build_examples() {
        assert_eq!(
            spec(&[1, 1, 1], 2, 6).build().unwrap(),
            SimpleGraph::empty(5).join(&SimpleGraph::complete(1))
        );
        let odd = spec(&[2, 1], 2, 5);
        assert_eq!(odd.parity_case(), ParityCase::OddSlackOddBlock);
        let expected = SimpleGraph::cycle(5)
            .remove_edges([(0, 1), (2, 3), (4, 0)])
            .unwrap();
        assert_eq!(odd.build().unwrap(), expected);
        let star = spec(&[2, 2], 2, 6).build().unwrap();
        assert_eq!(star.degree_sequence().to_string(), "5,1,1,1,1,1");
    }

    #[test]
    fn every_parity_case_is_reachable() {
        // (3,1): slack 2; (2,1): slack 1
        assert_eq!(
            spec(&[3, 1], 2, 4).parity_case(),
            ParityCase::EvenSlackEvenBlock
        );
        assert_eq!(
            spec(&[3, 1], 2, 5).parity_case(),
            ParityCase::EvenSlackOddBlock
        );
        assert_eq!(
            spec(&[2, 1], 2, 4).parity_case(),
            ParityCase::OddSlackEvenBlock
        );
        assert_eq!(
            spec(&[2, 1], 2, 3).parity_case(),
            ParityCase::OddSlackOddBlock
        );
        for s in [
            spec(&[3, 1], 2, 5),
            spec(&[3, 1], 2, 4),
            spec(&[2, 1], 2, 4),
            spec(&[2, 1], 2, 3),
        ] {
            let g = s.build().unwrap();
            assert_eq!(g.degree_sequence(), s.sequence(), "{s:?}");
            assert_eq!(s.sequence().sum() as i64 + 2, s.bound());
        }
    }

    #[test]
    fn dominance_examples() {
        let seq = |s: &str| s.parse::<DegreeSequence>().unwrap();
        assert!(!dominance_check(&seq("5,1,1,1,1,1"), &parts(&[1, 1, 1])).unwrap());
        assert!(dominance_check(&seq("2,2,2"), &parts(&[1, 1, 1])).unwrap());
        assert!(dominance_check(&seq("3,3,3,3"), &parts(&[2, 2])).unwrap());
        assert_eq!(
            dominance_check(&seq("2,2"), &parts(&[1, 1, 1])),
            Err(Error::TooShort { len: 2, needed: 3 })
        );
    }
}
