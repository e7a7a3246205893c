//! Simple undirected graphs and the graph algebra used by the witness
//! constructions.

mod embed;
mod graph6;

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sequence::DegreeSequence;

pub use embed::{AdjacencyRows, SubgraphMatcher};

/// An undirected simple graph on vertices `0..order`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl SimpleGraph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        SimpleGraph {
            order,
            edges: BTreeSet::new(),
        }
    }

    /// K_order.
    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for v in 1..order {
            for u in 0..v {
                g.edges.insert((u, v));
            }
        }
        g
    }

    /// The cycle visiting `0, 1, ..., order-1` in order. Requires `order >= 3`.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        let mut g = Self::empty(order);
        for v in 0..order {
            g.edges.insert(ordered(v, (v + 1) % order));
        }
        g
    }

    /// K_{1,leaves} with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for v in 1..=leaves {
            g.edges.insert((0, v));
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.order || v >= self.order {
            return Err(Error::InvalidEdge(u, v, self.order));
        }
        if !self.edges.insert(ordered(u, v)) {
            return Err(Error::DuplicateEdge(u, v));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    /// Degrees indexed by vertex label.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    /// Join: disjoint union plus every edge between the two vertex sets.
    /// Vertices of `other` are relabelled to `self.order()..`.
    pub fn join(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.order {
            for v in 0..other.order {
                g.edges.insert((u, self.order + v));
            }
        }
        g
    }

    /// Vertex-disjoint union. Vertices of `other` are relabelled to
    /// `self.order()..`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let offset = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        SimpleGraph {
            order: self.order + other.order,
            edges,
        }
    }

    /// Returns a copy with the given edges removed. Every pair must be an edge.
    pub fn remove_edges<I>(&self, del: I) -> Result<SimpleGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = self.clone();
        for (u, v) in del {
            if !g.edges.remove(&ordered(u, v)) {
                return Err(Error::MissingEdge(u, v));
            }
        }
        Ok(g)
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.order);
        SimpleGraph {
            order: self.order,
            edges: self
                .edges
                .iter()
                .map(|&(u, v)| ordered(perm[u], perm[v]))
                .collect(),
        }
    }

    /// Whether `target` is a (not necessarily induced) subgraph.
    pub fn contains_subgraph(&self, target: &SimpleGraph) -> bool {
        SubgraphMatcher::new(target).is_contained_in(&AdjacencyRows::from_graph(self))
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<SimpleGraph> {
        graph6::decode(text)
    }

    /// Graphviz rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.order {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SimpleGraph::from_graph6(s)
    }
}

/// Part sizes `p1 >= p2 >= ... >= pt >= 1` of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultipartiteSpec {
    parts: Vec<usize>,
}

impl MultipartiteSpec {
    /// Requires a non-empty, non-increasing list of positive sizes.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidSpec("no parts given".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidSpec("part sizes must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSpec(format!(
                "part sizes must be non-increasing, got {parts:?}"
            )));
        }
        Ok(MultipartiteSpec { parts })
    }

    /// Sorts the sizes non-increasing first. The flag reports whether the
    /// input had to be reordered.
    pub fn normalized(mut parts: Vec<usize>) -> Result<(Self, bool)> {
        let reordered = parts.windows(2).any(|w| w[0] < w[1]);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok((Self::new(parts)?, reordered))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn t(&self) -> usize {
        self.parts.len()
    }

    /// Vertex count `p1 + ... + pt`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `p_j`, 1-based.
    pub fn part(&self, j: usize) -> usize {
        self.parts[j - 1]
    }

    /// K_{p1,...,pt}. Part 1 takes labels `0..p1`, part 2 the next `p2`, and so on.
    pub fn complete_multipartite(&self) -> SimpleGraph {
        let mut owner = Vec::with_capacity(self.total());
        for (k, &p) in self.parts.iter().enumerate() {
            owner.extend(std::iter::repeat_n(k, p));
        }
        let n = owner.len();
        let mut g = SimpleGraph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if owner[u] != owner[v] {
                    g.edges.insert((u, v));
                }
            }
        }
        g
    }

    /// `((total-pt)^{pt}, ..., (total-p1)^{p1})`, normalized.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let total = self.total();
        DegreeSequence::from_degrees(
            self.parts
                .iter()
                .flat_map(|&p| std::iter::repeat_n(total - p, p))
                .collect(),
        )
    }
}

impl fmt::Display for MultipartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&text.join(","))
    }
}

impl FromStr for MultipartiteSpec {
    type Err = Error;

    /// Strict parse: the sizes must already be non-increasing.
    fn from_str(s: &str) -> Result<Self> {
        MultipartiteSpec::new(parse_part_list(s)?)
    }
}

/// Parses `"2,1,1"` into sizes without reordering.
pub fn parse_part_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|e| Error::InvalidSpec(format!("bad part size {tok:?}: {e}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_examples() {
        let k3 = MultipartiteSpec::new(vec![1, 1, 1])
            .unwrap()
            .complete_multipartite();
        assert_eq!(k3, SimpleGraph::complete(3));

        let c4 = MultipartiteSpec::new(vec![2, 2])
            .unwrap()
            .complete_multipartite();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degree_sequence().to_string(), "2,2,2,2");
        assert!(c4.contains_subgraph(&SimpleGraph::cycle(4)));
        assert!(!c4.contains_subgraph(&SimpleGraph::complete(3)));

        let k4e = MultipartiteSpec::new(vec![2, 1, 1])
            .unwrap()
            .complete_multipartite();
        let expected = SimpleGraph::complete(4).remove_edges([(0, 1)]).unwrap();
        assert_eq!(k4e, expected);
    }

    #[test]
    fn multipartite_spec_validation() {
        assert!(MultipartiteSpec::new(vec![]).is_err());
        assert!(MultipartiteSpec::new(vec![1, 2]).is_err());
        assert!(MultipartiteSpec::new(vec![2, 0]).is_err());
        let (spec, reordered) = MultipartiteSpec::normalized(vec![1, 2, 1]).unwrap();
        assert_eq!(spec.parts(), &[2, 1, 1]);
        assert!(reordered);
        assert_eq!(spec.t(), 3);
        assert_eq!(spec.total(), 4);
        assert_eq!(spec.to_string(), "2,1,1");
        assert!("1,2".parse::<MultipartiteSpec>().is_err());
    }

    #[test]
    fn join_examples() {
        let star = SimpleGraph::empty(5).join(&SimpleGraph::complete(1));
        assert_eq!(star.degree_sequence().to_string(), "5,1,1,1,1,1");
        assert_eq!(
            SimpleGraph::complete(1).join(&SimpleGraph::complete(1)),
            SimpleGraph::complete(2)
        );
        let wheel = SimpleGraph::cycle(4).join(&SimpleGraph::complete(1));
        assert_eq!(wheel.edge_count(), 8);
        assert_eq!(wheel.degree_sequence().to_string(), "4,3,3,3,3");
    }

    #[test]
    fn union_examples() {
        let two_k2 = SimpleGraph::complete(2).disjoint_union(&SimpleGraph::complete(2));
        assert_eq!(two_k2.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let two_tri = SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3));
        assert_eq!((two_tri.order(), two_tri.edge_count()), (6, 6));
        let g = SimpleGraph::cycle(5);
        assert_eq!(g.disjoint_union(&SimpleGraph::empty(0)), g);
    }

    #[test]
    fn remove_edges_examples() {
        let c5 = SimpleGraph::cycle(5);
        let h = c5.remove_edges([(0, 1), (2, 3), (4, 0)]).unwrap();
        assert_eq!(h.degree_sequence().to_string(), "1,1,1,1,0");

        let p3 = SimpleGraph::complete(3).remove_edges([(0, 2)]).unwrap();
        assert_eq!(p3.degree_sequence().to_string(), "2,1,1");

        let p3 = p3.clone();
        assert_eq!(p3.remove_edges([(2, 0)]), Err(Error::MissingEdge(2, 0)));
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(SimpleGraph::cycle(3).degree_sequence().to_string(), "2,2,2");
        assert_eq!(
            SimpleGraph::star(5).degree_sequence().to_string(),
            "5,1,1,1,1,1"
        );
        assert_eq!(
            SimpleGraph::empty(4).degree_sequence().to_string(),
            "0,0,0,0"
        );
    }

    #[test]
    fn edge_validation() {
        let mut g = SimpleGraph::empty(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(Error::DuplicateEdge(0, 2)));
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn subgraph_examples() {
        assert!(SimpleGraph::complete(4).contains_subgraph(&SimpleGraph::cycle(4)));
        assert!(!SimpleGraph::cycle(5).contains_subgraph(&SimpleGraph::complete(3)));
        assert!(!SimpleGraph::star(5).contains_subgraph(&SimpleGraph::complete(3)));
        assert!(SimpleGraph::star(5).contains_subgraph(&SimpleGraph::star(5)));
        assert!(!SimpleGraph::complete(3).contains_subgraph(&SimpleGraph::empty(4)));
    }

    #[test]
    fn dot_export_lists_edges() {
        let dot = SimpleGraph::complete(2).to_dot("k2");
        assert!(dot.starts_with("graph k2 {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
