//! Degree sequences: normalization, graphicality, realization and
//! exhaustive enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// A finite degree sequence, always stored non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Sorts the input non-increasing. Negative entries are rejected.
    pub fn normalize<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut degrees = Vec::new();
        for d in raw {
            if d < 0 {
                return Err(Error::NegativeEntry(d));
            }
            degrees.push(d as usize);
        }
        Ok(Self::from_degrees(degrees))
    }

    /// Builds a sequence from unsigned degrees in any order.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// The degree sum.
    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn has_zero_term(&self) -> bool {
        self.degrees.last() == Some(&0)
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        is_graphical_sorted(&self.degrees)
    }

    /// Havel–Hakimi realization. The vertex at label `v` receives degree
    /// `degrees()[v]`. At every step the vertex with the largest residual
    /// degree (smallest label on ties) is joined to the next-largest
    /// residual degrees (smallest labels on ties).
    pub fn realize(&self) -> Result<SimpleGraph> {
        if !self.is_graphical() {
            return Err(Error::NotGraphical(self.to_string()));
        }
        let n = self.len();
        let mut residual = self.degrees.clone();
        let mut active: Vec<usize> = (0..n).collect();
        let mut graph = SimpleGraph::empty(n);
        loop {
            active.retain(|&v| residual[v] > 0);
            if active.is_empty() {
                break;
            }
            // stable sort keeps ties in label order
            active.sort_by(|&a, &b| residual[b].cmp(&residual[a]));
            let hub = active[0];
            let need = residual[hub];
            residual[hub] = 0;
            for &w in active.iter().skip(1).take(need) {
                graph
                    .add_edge(hub, w)
                    .map_err(|e| Error::Construction(e.to_string()))?;
                residual[w] -= 1;
            }
        }
        Ok(graph)
    }
}

/// Erdős–Gallai on a slice that is already non-increasing.
pub(crate) fn is_graphical_sorted(d: &[usize]) -> bool {
    let n = d.len();
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    if n == 0 {
        return true;
    }
    if d[0] >= n {
        return false;
    }
    let mut head = 0usize;
    for k in 1..=n {
        head += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if head > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Erdős–Gallai on an arbitrary multiset (sorted in place).
pub(crate) fn is_graphical_multiset(d: &mut [usize]) -> bool {
    d.sort_unstable_by(|a, b| b.cmp(a));
    is_graphical_sorted(d)
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.degrees.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses the comma-separated form, e.g. `"5,1,1,1,1,1"`. The empty string
/// is the empty sequence.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.trim().is_empty() {
            return Ok(DegreeSequence::default());
        }
        let raw = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|e| Error::ParseSequence {
                    input: s.to_string(),
                    reason: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DegreeSequence::normalize(raw)
    }
}

impl From<DegreeSequence> for String {
    fn from(s: DegreeSequence) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for DegreeSequence {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Every graphical non-increasing sequence of a fixed length, in
/// lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct GraphicalSequences {
    current: Option<Vec<usize>>,
    min_sum: usize,
}

/// Streams the graphical `n`-term sequences (optionally only those with sum at
/// least `min_sum`), starting from `(n-1)^n` and descending lexicographically.
pub fn enumerate_graphical_sequences(n: usize, min_sum: Option<usize>) -> GraphicalSequences {
    GraphicalSequences {
        current: Some(vec![n.saturating_sub(1); n]),
        min_sum: min_sum.unwrap_or(0),
    }
}

impl GraphicalSequences {
    fn advance(current: &mut [usize]) -> bool {
        // rightmost positive entry is decremented; everything after it
        // takes the largest value that keeps the sequence non-increasing
        match current.iter().rposition(|&d| d > 0) {
            None => false,
            Some(j) => {
                current[j] -= 1;
                let v = current[j];
                for d in current.iter_mut().skip(j + 1) {
                    *d = v;
                }
                true
            }
        }
    }
}

impl Iterator for GraphicalSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        loop {
            let candidate = self.current.clone()?;
            if !Self::advance(self.current.as_mut().unwrap()) {
                self.current = None;
            }
            let sum: usize = candidate.iter().sum();
            if sum >= self.min_sum && is_graphical_sorted(&candidate) {
                return Some(DegreeSequence { degrees: candidate });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_sorts_non_increasing() {
        let s = DegreeSequence::normalize([1, 5, 1, 1, 1, 1]).unwrap();
        assert_eq!(s.degrees(), &[5, 1, 1, 1, 1, 1]);
        assert!(DegreeSequence::normalize(Vec::<i64>::new())
            .unwrap()
            .is_empty());
        assert_eq!(
            DegreeSequence::normalize([2, 2, 2]).unwrap().degrees(),
            &[2, 2, 2]
        );
    }

    #[test]
    fn normalize_rejects_negative() {
        assert_eq!(
            DegreeSequence::normalize([1, -1]),
            Err(Error::NegativeEntry(-1))
        );
        assert!("3,-2".parse::<DegreeSequence>().is_err());
        assert!("3,x".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn text_round_trip() {
        let s = seq("1,5,1,1,1,1");
        assert_eq!(s.to_string(), "5,1,1,1,1,1");
        assert_eq!(seq("(2, 2, 2)").to_string(), "2,2,2");
        assert_eq!(seq("").len(), 0);
    }

    #[test]
    fn graphicality_examples() {
        assert!(seq("2,2,2").is_graphical());
        assert!(!seq("3,3,1,1").is_graphical());
        assert!(seq("0,0").is_graphical());
        assert!(seq("").is_graphical());
        assert!(!seq("1").is_graphical());
        assert!(!seq("2,0").is_graphical());
    }

    #[test]
    fn havel_hakimi_golden() {
        let tri = seq("2,2,2").realize().unwrap();
        assert_eq!(
            tri.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        let matching = seq("1,1,1,1").realize().unwrap();
        assert_eq!(matching.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        assert!(matches!(
            seq("3,3,1,1").realize(),
            Err(Error::NotGraphical(_))
        ));
    }

    #[test]
    fn enumeration_small() {
        let three: Vec<String> = enumerate_graphical_sequences(3, None)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(three, vec!["2,2,2", "2,1,1", "1,1,0", "0,0,0"]);
        let one: Vec<String> = enumerate_graphical_sequences(1, None)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(one, vec!["0"]);
        let filtered: Vec<String> = enumerate_graphical_sequences(3, Some(6))
            .map(|s| s.to_string())
            .collect();
        assert_eq!(filtered, vec!["2,2,2"]);
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let all: Vec<_> = enumerate_graphical_sequences(6, None).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        for s in &all {
            assert_eq!(s.sum() % 2, 0);
            assert!(s.max_degree() <= 5);
        }
    }
}
