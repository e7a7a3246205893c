//! Backtracking search for a (non-induced) subgraph embedding.

use super::SimpleGraph;

/// Dense bitset adjacency for a host graph.
#[derive(Debug, Clone)]
pub struct AdjacencyRows {
    order: usize,
    words: usize,
    data: Vec<u64>,
    degrees: Vec<usize>,
}

impl AdjacencyRows {
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let order = g.order();
        let words = order.div_ceil(64).max(1);
        let mut data = vec![0u64; order * words];
        for (u, v) in g.edges() {
            data[u * words + v / 64] |= 1 << (v % 64);
            data[v * words + u / 64] |= 1 << (u % 64);
        }
        AdjacencyRows {
            order,
            words,
            data,
            degrees: g.degrees(),
        }
    }

    /// One neighbourhood mask per vertex; requires at most 64 vertices.
    pub fn from_masks(masks: &[u64]) -> Self {
        assert!(masks.len() <= 64);
        AdjacencyRows {
            order: masks.len(),
            words: 1,
            data: masks.to_vec(),
            degrees: masks.iter().map(|m| m.count_ones() as usize).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.data[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.data[v * self.words..(v + 1) * self.words]
    }
}

/// A target graph preprocessed for repeated containment queries.
///
/// Target vertices are placed in order of decreasing degree. A host vertex
/// is a candidate only if its degree is at least the target vertex's degree
/// and it is adjacent to the images of all previously placed neighbours.
#[derive(Debug, Clone)]
pub struct SubgraphMatcher {
    order: usize,
    degree_at: Vec<usize>,
    /// For each placement step, the earlier steps it must be adjacent to.
    back_edges: Vec<Vec<usize>>,
}

impl SubgraphMatcher {
    pub fn new(target: &SimpleGraph) -> Self {
        let deg = target.degrees();
        let mut placement: Vec<usize> = (0..target.order()).collect();
        placement.sort_by(|&a, &b| deg[b].cmp(&deg[a]));
        let mut step_of = vec![0; target.order()];
        for (k, &v) in placement.iter().enumerate() {
            step_of[v] = k;
        }
        let mut back_edges = vec![Vec::new(); target.order()];
        for (u, v) in target.edges() {
            let (a, b) = (step_of[u], step_of[v]);
            if a < b {
                back_edges[b].push(a);
            } else {
                back_edges[a].push(b);
            }
        }
        SubgraphMatcher {
            order: target.order(),
            degree_at: placement.iter().map(|&v| deg[v]).collect(),
            back_edges,
        }
    }

    pub fn target_order(&self) -> usize {
        self.order
    }

    /// Sorted target degrees, largest first.
    pub fn target_degrees(&self) -> &[usize] {
        &self.degree_at
    }

    pub fn is_contained_in(&self, host: &AdjacencyRows) -> bool {
        if self.order > host.order {
            return false;
        }
        if self.order == 0 {
            return true;
        }
        let words = host.words;
        let mut eligible = vec![0u64; self.order * words];
        for (k, &need) in self.degree_at.iter().enumerate() {
            for v in 0..host.order {
                if host.degree(v) >= need {
                    eligible[k * words + v / 64] |= 1 << (v % 64);
                }
            }
        }
        let mut search = Search {
            matcher: self,
            host,
            eligible,
            image: vec![0; self.order],
            used: vec![0u64; words],
            scratch: vec![0u64; self.order * words],
        };
        search.place(0)
    }
}

struct Search<'a> {
    matcher: &'a SubgraphMatcher,
    host: &'a AdjacencyRows,
    eligible: Vec<u64>,
    image: Vec<usize>,
    used: Vec<u64>,
    scratch: Vec<u64>,
}

impl Search<'_> {
    fn place(&mut self, step: usize) -> bool {
        if step == self.matcher.order {
            return true;
        }
        let words = self.host.words;
        let base = step * words;
        for w in 0..words {
            self.scratch[base + w] = self.eligible[base + w] & !self.used[w];
        }
        for &earlier in &self.matcher.back_edges[step] {
            let row = self.host.row(self.image[earlier]);
            for (slot, &bits) in self.scratch[base..base + words].iter_mut().zip(row) {
                *slot &= bits;
            }
        }
        for w in 0..words {
            while self.scratch[base + w] != 0 {
                let bit = self.scratch[base + w].trailing_zeros() as usize;
                self.scratch[base + w] &= self.scratch[base + w] - 1;
                let v = w * 64 + bit;
                self.image[step] = v;
                self.used[w] |= 1 << bit;
                let found = self.place(step + 1);
                self.used[w] &= !(1 << bit);
                if found {
                    return true;
                }
            }
        }
        false
    }
}
