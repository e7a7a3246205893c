//! Hamiltonian decompositions of complete graphs (Walecki).
//!
//! K_{2m+1} splits into m Hamiltonian cycles and K_{2m} into a perfect
//! matching plus m-1 Hamiltonian cycles. Both come from one rotating
//! zigzag path around a fixed hub vertex. The result is relabelled so the
//! first stored cycle reads `0, 1, ..., N-1`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    order: usize,
    matching: Option<Vec<(usize, usize)>>,
    cycles: Vec<Vec<usize>>,
}

impl Decomposition {
    /// N, the order of the decomposed complete graph.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The 1-factor, present exactly when N is even.
    pub fn matching(&self) -> Option<&[(usize, usize)]> {
        self.matching.as_deref()
    }

    /// Spanning cycles as cyclic vertex orders, in rotation order.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// Edges of cycle `k` (0-based), normalized `u < v`, in traversal order.
    pub fn cycle_edges(&self, k: usize) -> Vec<(usize, usize)> {
        cycle_edge_list(&self.cycles[k])
    }

    /// The matching as a graph on N vertices (edgeless for odd N).
    pub fn matching_graph(&self) -> SimpleGraph {
        let edges = self.matching.iter().flatten().copied();
        SimpleGraph::from_edges(self.order, edges).expect("matching edges are valid")
    }

    /// Union of the first `count` cycles as a graph on N vertices.
    pub fn union_of_cycles(&self, count: usize) -> Result<SimpleGraph> {
        if count > self.cycles.len() {
            return Err(Error::Construction(format!(
                "K_{} has only {} spanning cycles, {} requested",
                self.order,
                self.cycles.len(),
                count
            )));
        }
        let edges = (0..count).flat_map(|k| self.cycle_edges(k));
        SimpleGraph::from_edges(self.order, edges)
            .map_err(|e| Error::Construction(format!("cycles overlap: {e}")))
    }

    /// Graphviz rendering with one colour layer per part.
    pub fn to_dot(&self) -> String {
        const COLOURS: [&str; 8] = [
            "black",
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "cyan",
        ];
        let mut out = format!("graph K{} {{\n", self.order);
        if let Some(m) = &self.matching {
            for &(u, v) in m {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [color=gray, style=dashed, layer=matching];"
                );
            }
        }
        for (k, cycle) in self.cycles.iter().enumerate() {
            let colour = COLOURS[k % COLOURS.len()];
            for (u, v) in cycle_edge_list(cycle) {
                let _ = writeln!(out, "  {u} -- {v} [color={colour}, layer=cycle{}];", k + 1);
            }
        }
        out.push_str("}\n");
        out
    }
}

fn cycle_edge_list(cycle: &[usize]) -> Vec<(usize, usize)> {
    let len = cycle.len();
    (0..len)
        .map(|k| {
            let (u, v) = (cycle[k], cycle[(k + 1) % len]);
            (u.min(v), u.max(v))
        })
        .collect()
}

/// Decomposes K_N. Fails for N < 2.
pub fn hamiltonian_decomposition(order: usize) -> Result<Decomposition> {
    if order < 2 {
        return Err(Error::TooSmall(order));
    }
    let raw = if order % 2 == 1 {
        odd_walecki(order)
    } else {
        even_walecki(order)
    };
    Ok(canonical_labels(raw))
}

/// K_{2m+1}: hub `2m`, circle Z_{2m}; cycle j is the hub followed by the
/// zigzag j, j+1, j-1, j+2, j-2, ... rotated by j.
fn odd_walecki(order: usize) -> Decomposition {
    let circle = order - 1;
    let m = circle / 2;
    let hub = circle;
    let cycles = (0..m)
        .map(|j| {
            let mut cycle = Vec::with_capacity(order);
            cycle.push(hub);
            cycle.extend((0..circle).map(|k| zigzag(j, k, circle)));
            cycle
        })
        .collect();
    Decomposition {
        order,
        matching: None,
        cycles,
    }
}

/// k-th vertex of the zigzag path starting at `start` on Z_modulus.
fn zigzag(start: usize, k: usize, modulus: usize) -> usize {
    let step = k.div_ceil(2) % modulus;
    if k % 2 == 1 {
        (start + step) % modulus
    } else {
        (start + modulus - step) % modulus
    }
}

/// K_{2m}: hub `2m-1`, circle Z_{2m-1}. The near-1-factor of class c pairs
/// x with c-x and sends the fixed point c/2 to the hub. Classes 2j and
/// 2j+1 together form Hamiltonian cycle j; the last class is the 1-factor.
fn even_walecki(order: usize) -> Decomposition {
    let circle = order - 1;
    let hub = circle;
    let half = circle.div_ceil(2);
    let class = |c: usize| -> Vec<(usize, usize)> {
        let fixed = c * half % circle;
        let mut edges = vec![(fixed, hub)];
        for x in 0..circle {
            let y = (c + circle - x) % circle;
            if x < y {
                edges.push((x, y));
            }
        }
        edges
    };
    let cycles = (0..(order - 2) / 2)
        .map(|j| {
            let mut adj = vec![Vec::with_capacity(2); order];
            for (u, v) in class(2 * j).into_iter().chain(class(2 * j + 1)) {
                adj[u].push(v);
                adj[v].push(u);
            }
            trace_cycle(&adj, hub)
        })
        .collect();
    let matching = class(circle - 1)
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Decomposition {
        order,
        matching: Some(matching),
        cycles,
    }
}

/// Walks a 2-regular graph from `start`, taking the smaller neighbour first.
fn trace_cycle(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *adj[start].iter().min().expect("2-regular");
    while cur != start {
        cycle.push(cur);
        let next = if adj[cur][0] == prev {
            adj[cur][1]
        } else {
            adj[cur][0]
        };
        prev = cur;
        cur = next;
    }
    cycle
}

fn canonical_labels(raw: Decomposition) -> Decomposition {
    let Some(first) = raw.cycles.first() else {
        return raw;
    };
    let mut label = vec![0; raw.order];
    for (k, &v) in first.iter().enumerate() {
        label[v] = k;
    }
    let cycles = raw
        .cycles
        .iter()
        .map(|c| c.iter().map(|&v| label[v]).collect())
        .collect();
    let matching = raw.matching.map(|m| {
        let mut edges: Vec<_> = m
            .iter()
            .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
            .collect();
        edges.sort_unstable();
        edges
    });
    Decomposition {
        order: raw.order,
        matching,
        cycles,
    }
}
