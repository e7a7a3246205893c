//! Exhaustive enumeration of labelled realizations.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::sequence::{is_graphical_multiset, DegreeSequence};

/// Largest order the mask-based enumerators accept.
pub const MAX_MASK_ORDER: usize = 64;

fn check_input(s: &DegreeSequence) -> Result<()> {
    if s.len() > MAX_MASK_ORDER {
        return Err(Error::TooLarge {
            n: s.len(),
            limit: MAX_MASK_ORDER,
        });
    }
    if !s.is_graphical() {
        return Err(Error::NotGraphical(s.to_string()));
    }
    Ok(())
}

/// Calls `visit` with the neighbourhood masks of every labelled simple graph
/// in which vertex `v` has degree `s.degrees()[v]`. Each graph is visited
/// exactly once; the order is deterministic.
///
/// Vertices are completed in label order. Vertex `v` picks its forward
/// neighbours as a combination of later vertices with spare degree, and the
/// branch survives only if the residual degrees of the later vertices are
/// still graphical.
///
/// Returns `Ok(true)` when `visit` stopped the walk early.
pub fn for_each_realization<F>(s: &DegreeSequence, mut visit: F) -> Result<bool>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    check_input(s)?;
    let n = s.len();
    let mut walk = Walk {
        n,
        residual: s.degrees().to_vec(),
        adj: vec![0; n],
        scratch: Vec::with_capacity(n),
        visit: &mut visit,
    };
    Ok(walk.vertex(0).is_break())
}

struct Walk<'f, F> {
    n: usize,
    residual: Vec<usize>,
    adj: Vec<u64>,
    scratch: Vec<usize>,
    visit: &'f mut F,
}

impl<F> Walk<'_, F>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    fn vertex(&mut self, v: usize) -> ControlFlow<()> {
        if v == self.n {
            return (self.visit)(&self.adj);
        }
        let need = self.residual[v];
        if need == 0 {
            return self.vertex(v + 1);
        }
        let candidates: Vec<usize> = (v + 1..self.n).filter(|&w| self.residual[w] > 0).collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        self.residual[v] = 0;
        let flow = self.choose(v, &candidates, 0, need);
        self.residual[v] = need;
        flow
    }

    fn choose(
        &mut self,
        v: usize,
        candidates: &[usize],
        from: usize,
        left: usize,
    ) -> ControlFlow<()> {
        if left == 0 {
            if !self.rest_is_graphical(v) {
                return ControlFlow::Continue(());
            }
            return self.vertex(v + 1);
        }
        // leave room for the remaining picks
        for k in from..=candidates.len() - left {
            let w = candidates[k];
            self.residual[w] -= 1;
            self.adj[v] |= 1 << w;
            self.adj[w] |= 1 << v;
            let flow = self.choose(v, candidates, k + 1, left - 1);
            self.adj[v] &= !(1 << w);
            self.adj[w] &= !(1 << v);
            self.residual[w] += 1;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn rest_is_graphical(&mut self, v: usize) -> bool {
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.residual[v + 1..]);
        is_graphical_multiset(&mut self.scratch)
    }
}

pub(crate) fn masks_to_graph(adj: &[u64]) -> SimpleGraph {
    let n = adj.len();
    let edges = (0..n).flat_map(|u| {
        let row = adj[u];
        (u + 1..n)
            .filter(move |&v| row >> v & 1 == 1)
            .map(move |v| (u, v))
    });
    SimpleGraph::from_edges(n, edges).expect("masks describe a simple graph")
}

/// Every labelled realization of `s`, in enumeration order.
pub fn enumerate_realizations(s: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    for_each_realization(s, |adj| {
        out.push(masks_to_graph(adj));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_realizations(s: &DegreeSequence) -> Result<usize> {
    let mut count = 0;
    for_each_realization(s, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// The closure of the Havel–Hakimi realization under 2-switches
/// (`ab, cd -> ac, bd`), sorted by neighbourhood masks. 2-switches connect
/// the realization space, so this is an independent enumeration of the same
/// set. Intended for small sequences only.
pub fn switching_closure(s: &DegreeSequence) -> Result<Vec<SimpleGraph>> {
    check_input(s)?;
    let n = s.len();
    let start = s.realize()?;
    let mut seed = vec![0u64; n];
    for (u, v) in start.edges() {
        seed[u] |= 1 << v;
        seed[v] |= 1 << u;
    }
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(adj) = queue.pop_front() {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| {
                let row = adj[u];
                (u + 1..n)
                    .filter(move |&v| row >> v & 1 == 1)
                    .map(move |v| (u, v))
            })
            .collect();
        for (x, &(a, b)) in edges.iter().enumerate() {
            for &(c, d) in &edges[x + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                for (p, q, r, t) in [(a, c, b, d), (a, d, b, c)] {
                    if adj[p] >> q & 1 == 1 || adj[r] >> t & 1 == 1 {
                        continue;
                    }
                    let mut next = adj.clone();
                    for (u, v) in [(a, b), (c, d)] {
                        next[u] &= !(1 << v);
                        next[v] &= !(1 << u);
                    }
                    for (u, v) in [(p, q), (r, t)] {
                        next[u] |= 1 << v;
                        next[v] |= 1 << u;
                    }
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    Ok(seen.iter().map(|adj| masks_to_graph(adj)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn perfect_matchings_on_four_labels() {
        let all = enumerate_realizations(&seq("1,1,1,1")).unwrap();
        let edge_lists: Vec<Vec<(usize, usize)>> =
            all.iter().map(|g| g.edges().collect()).collect();
        assert_eq!(
            edge_lists,
            vec![
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)]
            ]
        );
    }

    #[test]
    fn forced_realizations() {
        assert_eq!(
            enumerate_realizations(&seq("2,2,2")).unwrap(),
            vec![SimpleGraph::complete(3)]
        );
        let path = enumerate_realizations(&seq("2,1,1")).unwrap();
        assert_eq!(path.len(), 1);
        assert_eq!(path[0].edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(count_realizations(&seq("0,0,0")).unwrap(), 1);
        assert_eq!(count_realizations(&seq("")).unwrap(), 1);
    }

    #[test]
    fn not_graphical_is_rejected() {
        assert!(matches!(
            enumerate_realizations(&seq("3,3,1,1")),
            Err(Error::NotGraphical(_))
        ));
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        let stopped = for_each_realization(&seq("1,1,1,1"), |_| {
            seen += 1;
            ControlFlow::Break(())
        })
        .unwrap();
        assert!(stopped);
        assert_eq!(seen, 1);
    }

    #[test]
    fn labelled_regular_counts() {
        // labelled 2-regular graphs on 5 vertices: 12 five-cycles
        assert_eq!(count_realizations(&seq("2,2,2,2,2")).unwrap(), 12);
        // labelled 3-regular graphs on 6 vertices: 70
        assert_eq!(count_realizations(&seq("3,3,3,3,3,3")).unwrap(), 70);
    }

    #[test]
    fn switching_matches_backtracking() {
        for s in ["1,1,1,1", "2,2,2,2,2", "3,3,2,2,1,1", "4,3,3,2,2,2"] {
            let s = seq(s);
            let mut a = enumerate_realizations(&s).unwrap();
            let mut b = switching_closure(&s).unwrap();
            a.sort_by_key(|g| g.edges().collect::<Vec<_>>());
            b.sort_by_key(|g| g.edges().collect::<Vec<_>>());
            assert_eq!(a, b, "{s}");
        }
    }
}
