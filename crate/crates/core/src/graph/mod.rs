//! Simple undirected graphs on `1..=n` and the operations the rest of the
//! crate needs: cuts, minors, structural predicates and clique sums.

mod clique;
mod minor;
mod named;

use std::fmt;

pub use clique::{clique_sum_decompose, CliqueSumDecomposition, Piece, SumTree};
pub use minor::{has_minor, is_series_parallel, max_induced_cycle, MINOR_VERTEX_BUDGET};
pub use named::make_named;

use crate::error::{Error, Result};
use crate::partition::{Partition, MAX_VERTICES};

pub type Edge = (usize, usize);

/// A simple graph with vertices `1..=n` and a lexicographically sorted edge
/// list of pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `(min, max)` and sorting.
    /// Loops, repeated edges and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("{n} vertices exceeds {MAX_VERTICES}")));
        }
        let mut es: Vec<Edge> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge {a}-{b} outside 1..={n}")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("repeated edge {}-{}", w[0].0, w[0].1)));
        }
        Ok(Graph { n, edges: es })
    }

    /// Like [`Graph::new`] but silently drops loops and duplicates.
    pub(crate) fn from_multigraph(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut es: Vec<Edge> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        es.sort_unstable();
        es.dedup();
        Graph { n, edges: es }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
        Graph::from_multigraph(n, edges)
    }

    /// The cycle `1-2-…-n-1`.
    pub fn cycle(n: usize) -> Self {
        let edges = (1..=n).map(|i| (i, if i == n { 1 } else { i + 1 }));
        Graph::from_multigraph(n, edges)
    }

    /// The path `1-2-…-n`.
    pub fn path(n: usize) -> Self {
        Graph::from_multigraph(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Complete multipartite graph with blocks of the given sizes, labeled
    /// consecutively block by block.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut block = Vec::with_capacity(n);
        for (b, &s) in sizes.iter().enumerate() {
            block.extend(std::iter::repeat_n(b, s));
        }
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .filter(|&(i, j)| block[i - 1] != block[j - 1])
            .collect::<Vec<_>>();
        Graph::from_multigraph(n, edges)
    }

    /// The triangular prism `K₂ × K₃`: triangles 123 and 456 with rungs
    /// 14, 25, 36.
    pub fn prism() -> Self {
        Graph::from_multigraph(
            6,
            [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (1, 4), (2, 5), (3, 6)],
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        self.edges.binary_search(&(i.min(j), i.max(j))).ok()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edge_index(i, j).is_some()
    }

    /// Neighbour bitmask of `v` (bit `u-1` for neighbour `u`).
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.edges.iter().fold(0, |m, &(a, b)| {
            if a == v {
                m | 1 << (b - 1)
            } else if b == v {
                m | 1 << (a - 1)
            } else {
                m
            }
        })
    }

    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbor_mask(v).count_ones() as usize
    }

    pub fn has_isolated_vertex(&self) -> bool {
        (1..=self.n).any(|v| self.degree(v) == 0)
    }

    /// Connected components as vertex bitmasks, ordered by smallest vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        components_within(&self.adjacency_masks(), crate::partition::full_mask(self.n))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }

    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts
            .iter()
            .enumerate()
            .all(|(k, &a)| verts[k + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Edges crossing the partition, as a sub-list of the edge list.
    pub fn cut_edges(&self, p: &Partition) -> Vec<Edge> {
        debug_assert_eq!(p.n(), self.n);
        self.edges.iter().copied().filter(|&(i, j)| p.separates(i, j)).collect()
    }

    /// Adds vertex `n+1` joined to every existing vertex.
    pub fn suspend(&self) -> Graph {
        let apex = self.n + 1;
        let edges = self.edges.iter().copied().chain((1..=self.n).map(|i| (i, apex)));
        Graph::from_multigraph(apex, edges)
    }

    pub fn delete_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let idx = self
            .edge_index(i, j)
            .ok_or_else(|| Error::InvalidArgument(format!("{i}-{j} is not an edge")))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// Contracts edge `{i,j}`: the merged vertex takes the smaller label,
    /// the remaining vertices are compressed to `1..=n-1` preserving order,
    /// and loops and parallel edges are dropped.
    pub fn contract_edge(&self, i: usize, j: usize) -> Result<Graph> {
        if !self.has_edge(i, j) {
            return Err(Error::InvalidArgument(format!("{i}-{j} is not an edge")));
        }
        let (keep, gone) = (i.min(j), i.max(j));
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let edges = self.edges.iter().map(|&(a, b)| (relabel(a), relabel(b)));
        Ok(Graph::from_multigraph(self.n - 1, edges))
    }

    /// The subgraph induced on `verts`, relabeled to `1..=|verts|` in
    /// increasing label order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph> {
        if verts.is_empty() {
            return Err(Error::InvalidArgument("empty vertex set".into()));
        }
        let mut vs = verts.to_vec();
        vs.sort_unstable();
        vs.dedup();
        if vs.iter().any(|&v| v == 0 || v > self.n) {
            return Err(Error::InvalidArgument(format!("vertex set {vs:?} outside 1..={}", self.n)));
        }
        let pos = |v: usize| vs.binary_search(&v).ok().map(|p| p + 1);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(a, b)| Some((pos(a)?, pos(b)?)))
            .collect::<Vec<_>>();
        Ok(Graph::from_multigraph(vs.len(), edges))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let rest: Vec<usize> = (1..=self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&rest)
    }

    /// Parses the text graph format: a header line `n <count>` followed by
    /// one `i j` pair per line; `#` starts a comment.
    pub fn parse_file(text: &str) -> Result<Graph> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.lines() {
            let body = line.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            let here = offset;
            offset += line.len() + 1;
            if toks.is_empty() {
                continue;
            }
            match (n, toks.as_slice()) {
                (None, ["n", count]) => {
                    n = Some(count.parse().map_err(|_| Error::parse(here, "bad vertex count"))?)
                }
                (None, _) => return Err(Error::parse(here, "expected header `n <count>`")),
                (Some(_), [a, b]) => {
                    let a = a.parse().map_err(|_| Error::parse(here, format!("bad vertex `{a}`")))?;
                    let b = b.parse().map_err(|_| Error::parse(here, format!("bad vertex `{b}`")))?;
                    edges.push((a, b));
                }
                (Some(_), _) => return Err(Error::parse(here, "expected `i j`")),
            }
        }
        let n = n.ok_or_else(|| Error::parse(0, "missing header `n <count>`"))?;
        Graph::new(n, edges)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (a, b) in &self.edges {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "n={} [{}]", self.n, es.join(" "))
    }
}

/// Connected components of the subgraph induced on `within`.
pub(crate) fn components_within(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut comps = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comps.push(comp);
        left &= !comp;
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes_and_rejects() {
        let g = Graph::new(3, [(2, 1), (3, 2)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, [(1, 4)]).is_err());
    }

    #[test]
    fn suspension() {
        let w = Graph::cycle(4).suspend();
        assert_eq!(w.n(), 5);
        assert_eq!(w.num_edges(), 8);
        assert_eq!(Graph::complete(3).suspend(), Graph::complete(4));
        assert_eq!(Graph::complete(1).suspend(), Graph::complete(2));
    }

    #[test]
    fn cut_edges_examples() {
        let k4 = Graph::complete(4);
        let p = Partition::new(4, &[1]).unwrap();
        assert_eq!(k4.cut_edges(&p), vec![(1, 2), (1, 3), (1, 4)]);
        assert!(k4.cut_edges(&Partition::new(4, &[]).unwrap()).is_empty());
        let c4 = Graph::cycle(4);
        assert_eq!(c4.cut_edges(&Partition::new(4, &[1, 3]).unwrap()).len(), 4);
    }

    #[test]
    fn minor_operations() {
        let k4 = Graph::complete(4);
        let h = k4.delete_edge(1, 4).unwrap();
        assert_eq!(h.num_edges(), 5);
        assert!(!h.has_edge(1, 4));
        assert!(k4.delete_edge(1, 5).is_err());
        assert_eq!(Graph::cycle(4).contract_edge(1, 2).unwrap(), Graph::cycle(3));
        assert!(Graph::cycle(4).contract_edge(1, 3).is_err());
        assert_eq!(Graph::complete(5).induced_subgraph(&[1, 2, 3]).unwrap(), Graph::complete(3));
        assert!(Graph::complete(5).induced_subgraph(&[]).is_err());
    }

    #[test]
    fn file_format_round_trip() {
        let text = "# the 4-cycle\nn 4\n1 2\n2 3 # rim\n3 4\n1 4\n";
        let g = Graph::parse_file(text).unwrap();
        assert_eq!(g, Graph::cycle(4));
        assert_eq!(Graph::parse_file(&g.to_file_string()).unwrap(), g);
        assert!(Graph::parse_file("1 2\n").is_err());
        assert!(Graph::parse_file("n 3\n1 x\n").is_err());
    }

    #[test]
    fn components() {
        let g = Graph::new(5, [(1, 2), (4, 5)]).unwrap();
        assert_eq!(g.component_masks(), vec![0b11, 0b100, 0b11000]);
        assert!(!g.is_connected());
        assert!(Graph::cycle(5).is_connected());
    }
}
