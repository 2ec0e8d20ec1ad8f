use super::{components_within, Graph};
use crate::partition::{full_mask, mask_to_vertices};

/// A piece of a clique-sum decomposition, on a subset of the original
/// vertices. `graph` is the induced subgraph relabeled `1..=k` in increasing
/// order of `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Binary combination order of the pieces. Leaves index into
/// [`CliqueSumDecomposition::pieces`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SumTree {
    Leaf(usize),
    Sum { separator: Vec<usize>, left: Box<SumTree>, right: Box<SumTree> },
}

impl SumTree {
    /// Original vertex labels covered by this subtree.
    pub fn vertices(&self, pieces: &[Piece]) -> Vec<usize> {
        let mut vs = match self {
            SumTree::Leaf(i) => pieces[*i].vertices.clone(),
            SumTree::Sum { left, right, .. } => {
                let mut v = left.vertices(pieces);
                v.extend(right.vertices(pieces));
                v
            }
        };
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSumDecomposition {
    pub pieces: Vec<Piece>,
    pub separators: Vec<Vec<usize>>,
    pub tree: SumTree,
}

impl CliqueSumDecomposition {
    /// Glues the pieces back together: the union of their vertex and
    /// (relabeled) edge sets.
    pub fn recombine(&self, n: usize) -> Graph {
        let edges = self.pieces.iter().flat_map(|p| {
            p.graph.edges().iter().map(|&(a, b)| (p.vertices[a - 1], p.vertices[b - 1]))
        });
        Graph::from_multigraph(n, edges.collect::<Vec<_>>())
    }

    pub fn is_trivial(&self) -> bool {
        self.pieces.len() == 1
    }
}

/// Splits `g` at clique separators of size at most three until no piece has
/// one. Smaller separators are preferred, and among separators of equal
/// size the split that cuts off the smallest piece is taken first.
pub fn clique_sum_decompose(g: &Graph) -> CliqueSumDecomposition {
    let adj = g.adjacency_masks();
    let mut pieces = Vec::new();
    let mut separators = Vec::new();
    let tree = split(&adj, full_mask(g.n()), g, &mut pieces, &mut separators);
    CliqueSumDecomposition { pieces, separators, tree }
}

fn split(
    adj: &[u64],
    within: u64,
    g: &Graph,
    pieces: &mut Vec<Piece>,
    separators: &mut Vec<Vec<usize>>,
) -> SumTree {
    match best_separator(adj, within) {
        None => {
            let vertices = mask_to_vertices(within);
            let graph = g.induced_subgraph(&vertices).expect("nonempty piece");
            pieces.push(Piece { vertices, graph });
            SumTree::Leaf(pieces.len() - 1)
        }
        Some((sep, comp)) => {
            separators.push(mask_to_vertices(sep));
            let small = comp | sep;
            let large = within & !comp;
            let left = split(adj, small, g, pieces, separators);
            let right = split(adj, large, g, pieces, separators);
            SumTree::Sum {
                separator: mask_to_vertices(sep),
                left: Box::new(left),
                right: Box::new(right),
            }
        }
    }
}

fn best_separator(adj: &[u64], within: u64) -> Option<(u64, u64)> {
    let verts: Vec<usize> = (0..64).filter(|&i| within >> i & 1 == 1).collect();
    for size in 1..=3usize {
        let mut best: Option<(u32, Vec<usize>, Vec<usize>, u64, u64)> = None;
        for_each_subset(&verts, size, &mut |sep| {
            if !is_clique_mask(adj, sep) {
                return;
            }
            let comps = components_within(adj, within & !sep);
            if comps.len() < 2 {
                return;
            }
            for &c in &comps {
                // smallest piece, then lexicographically smallest vertex sets
                let cand = (c.count_ones(), mask_to_vertices(sep), mask_to_vertices(c), sep, c);
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        });
        if let Some((_, _, _, sep, comp)) = best {
            return Some((sep, comp));
        }
    }
    None
}

fn is_clique_mask(adj: &[u64], s: u64) -> bool {
    let mut bits = s;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if (s & !(1 << v)) & !adj[v] != 0 {
            return false;
        }
    }
    true
}

fn for_each_subset(items: &[usize], size: usize, f: &mut impl FnMut(u64)) {
    fn rec(items: &[usize], size: usize, start: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if size == 0 {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size {
                break;
            }
            rec(items, size - 1, i + 1, acc | 1 << items[i], f);
        }
    }
    rec(items, size, 0, 0, f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_named;

    #[test]
    fn k5_minus_edge_is_two_k4() {
        let g = make_named("delete(K5, 1-5)").unwrap();
        let d = clique_sum_decompose(&g);
        assert_eq!(d.pieces.len(), 2);
        assert_eq!(d.separators, vec![vec![2, 3, 4]]);
        assert_eq!(d.pieces[0].vertices, vec![1, 2, 3, 4]);
        assert_eq!(d.pieces[1].vertices, vec![2, 3, 4, 5]);
        assert!(d.pieces.iter().all(|p| p.graph == Graph::complete(4)));
        assert_eq!(d.recombine(5), g);
    }

    #[test]
    fn path_splits_at_middle_vertex() {
        let d = clique_sum_decompose(&Graph::path(3));
        assert_eq!(d.separators, vec![vec![2]]);
        assert_eq!(d.pieces.len(), 2);
        assert!(d.pieces.iter().all(|p| p.graph == Graph::complete(2)));
    }

    #[test]
    fn k5_is_indecomposable() {
        let d = clique_sum_decompose(&Graph::complete(5));
        assert!(d.is_trivial());
        assert!(d.separators.is_empty());
    }
}
