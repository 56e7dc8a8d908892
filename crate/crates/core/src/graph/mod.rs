//! Split graphs stored as a clique size, a stable-set size and the biadjacency
//! matrix between them.

mod io;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::binary::BinaryMatrix;
use crate::design::Design;
use crate::linalg::IntMatrix;

pub use io::{parse_split, GraphParseError};

/// A split graph with clique vertices `0..c` listed before stable vertices `c..c+s`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitGraph {
    c: usize,
    s: usize,
    b: BinaryMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bidegree {
    /// Degree of every clique vertex.
    pub d: usize,
    /// Degree of every stable vertex.
    pub k: usize,
    /// Number of stable neighbours of each clique vertex, `d − (c − 1)`.
    pub k_prime: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    /// `(degree, count)` in decreasing degree order.
    pub distinct: Vec<(usize, usize)>,
    pub bidegreed: bool,
    pub bidegree: Option<Bidegree>,
}

impl DegreeSummary {
    /// Number of distinct degrees, `t(G)`.
    pub fn t(&self) -> usize {
        self.distinct.len()
    }

    /// Degree sequence in exponent notation, e.g. `7^4,4^1,2^6`.
    pub fn sequence(&self) -> String {
        let parts: Vec<String> = self.distinct.iter().map(|(d, m)| format!("{d}^{m}")).collect();
        parts.join(",")
    }
}

impl SplitGraph {
    pub fn new(b: BinaryMatrix) -> Self {
        assert!(b.rows() >= 1, "a split graph needs a non-empty clique");
        SplitGraph {
            c: b.rows(),
            s: b.cols(),
            b,
        }
    }

    /// `G_D`: clique on the points, stable set on the blocks.
    pub fn from_design(design: &Design) -> Self {
        Self::new(design.incidence_matrix())
    }

    /// `K_c ∘ K_1`: the clique `K_c` with one pendant vertex per clique vertex.
    pub fn corona_clique(c: usize) -> Self {
        Self::new(BinaryMatrix::identity(c))
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn order(&self) -> usize {
        self.c + self.s
    }

    pub fn biadjacency(&self) -> &BinaryMatrix {
        &self.b
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        let c = self.c;
        match (u < c, w < c) {
            (true, true) => u != w,
            (true, false) => self.b.get(u, w - c),
            (false, true) => self.b.get(w, u - c),
            (false, false) => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.c * (self.c - 1) / 2 + self.b.row_sums().iter().sum::<usize>()
    }

    /// `[[J−I, B],[Bᵀ, 0]]`.
    pub fn adjacency(&self) -> IntMatrix {
        let n = self.order();
        IntMatrix::from_fn(n, n, |i, j| BigInt::from(self.has_edge(i, j) as u8))
    }

    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let c = self.c;
        let mut adj: Vec<Vec<usize>> = (0..self.order())
            .map(|u| if u < c { (0..c).filter(|&w| w != u).collect() } else { Vec::new() })
            .collect();
        for i in 0..c {
            for j in 0..self.s {
                if self.b.get(i, j) {
                    adj[i].push(c + j);
                    adj[c + j].push(i);
                }
            }
        }
        adj
    }

    fn bfs(adj: &[Vec<usize>], start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; adj.len()];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbours();
        Self::bfs(&adj, 0).iter().all(Option::is_some)
    }

    /// Largest eccentricity, or `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let adj = self.neighbours();
        let mut best = 0;
        for u in 0..adj.len() {
            for d in Self::bfs(&adj, u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = self.b.row_sums().iter().map(|r| r + self.c - 1).collect();
        deg.extend(self.b.col_sums());
        deg
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let degrees = self.degrees();
        let mut counts = BTreeMap::new();
        for &d in &degrees {
            *counts.entry(d).or_insert(0usize) += 1;
        }
        let distinct: Vec<(usize, usize)> = counts.into_iter().rev().collect();
        let bidegreed = distinct.len() == 2;
        let clique = &degrees[..self.c];
        let stable = &degrees[self.c..];
        let uniform = |xs: &[usize]| xs.windows(2).all(|w| w[0] == w[1]);
        let bidegree = (bidegreed && uniform(clique) && uniform(stable) && !stable.is_empty())
            .then(|| Bidegree {
                d: clique[0],
                k: stable[0],
                k_prime: clique[0] + 1 - self.c,
            })
            .filter(|bd| bd.d != bd.k);
        DegreeSummary {
            degrees,
            distinct,
            bidegreed,
            bidegree,
        }
    }

    /// Columns of `B` read back as blocks over the clique, in column order.
    pub fn to_design(&self) -> Result<Design, crate::design::DesignError> {
        let blocks = (0..self.s)
            .map(|j| {
                (0..self.c)
                    .filter(|&i| self.b.get(i, j))
                    .map(|i| i as u32 + 1)
                    .collect()
            })
            .collect();
        Design::new(self.c, blocks)
    }

    /// Header `split c= s=` followed by the rows of `B`.
    pub fn to_split_format(&self) -> String {
        let mut out = format!("split c={} s={}\n", self.c, self.s);
        for line in self.b.to_lines() {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// One edge per line as 1-based vertex ids, clique vertices first.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.order() {
            for w in u + 1..self.order() {
                if self.has_edge(u, w) {
                    out.push_str(&format!("{} {}\n", u + 1, w + 1));
                }
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph split {\n");
        for u in 0..self.order() {
            let (label, shape) = if u < self.c {
                (format!("p{}", u + 1), "circle")
            } else {
                (format!("B{}", u - self.c + 1), "box")
            };
            out.push_str(&format!("  {} [label=\"{label}\", shape={shape}];\n", u + 1));
        }
        for u in 0..self.order() {
            for w in u + 1..self.order() {
                if self.has_edge(u, w) {
                    out.push_str(&format!("  {} -- {};\n", u + 1, w + 1));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for SplitGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SplitGraph(c={}, s={}, B={:?})", self.c, self.s, self.b.to_lines())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corona_shapes() {
        let k2 = SplitGraph::corona_clique(1);
        assert_eq!(k2.order(), 2);
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(k2.diameter(), Some(1));
        let p4 = SplitGraph::corona_clique(2);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.diameter(), Some(3));
        assert_eq!(p4.to_edge_list(), "1 2\n1 3\n2 4\n");
        let g = SplitGraph::corona_clique(14);
        assert_eq!(g.order(), 28);
        assert_eq!(g.diameter(), Some(3));
        let ds = g.degree_summary();
        assert!(ds.bidegreed);
        assert_eq!(ds.bidegree, Some(Bidegree { d: 14, k: 1, k_prime: 1 }));
    }

    #[test]
    fn disconnected_pendant() {
        let g = SplitGraph::new(BinaryMatrix::zeros(1, 1));
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
        assert!(SplitGraph::corona_clique(3).is_connected());
    }

    #[test]
    fn single_block_is_a_path() {
        let d = Design::new(2, vec![vec![1, 2]]).unwrap();
        let g = SplitGraph::from_design(&d);
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.diameter(), Some(1));
        assert_eq!(g.to_design().unwrap(), d);
    }

    #[test]
    fn adjacency_layout() {
        let g = SplitGraph::corona_clique(2);
        let a = g.adjacency();
        let expect = IntMatrix::from_rows(&[&[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(a, expect);
        assert!(a.is_symmetric());
    }

    #[test]
    fn non_bidegreed_degree_sequence() {
        let d = Design::new(
            4,
            vec![vec![1, 2, 3, 4], vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]],
        )
        .unwrap();
        let ds = SplitGraph::from_design(&d).degree_summary();
        assert_eq!(ds.sequence(), "7^4,4^1,2^6");
        assert_eq!(ds.t(), 3);
        assert!(!ds.bidegreed);
        assert_eq!(ds.bidegree, None);
    }

    #[test]
    fn dot_output_lists_every_vertex() {
        let dot = SplitGraph::corona_clique(2).to_dot();
        assert!(dot.starts_with("graph split {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("shape=box").count(), 2);
    }
}
