use super::{components_within, Graph};
use crate::error::{Error, Result};

/// Largest host graph accepted by [`has_minor`].
pub const MINOR_VERTEX_BUDGET: usize = 8;

/// Decides whether `h` is a minor of `g` by exhaustive search for a minor
/// model: disjoint connected branch sets in `g`, one per vertex of `h`, with
/// a `g`-edge between the branch sets of every `h`-edge. Vertices of `g`
/// outside every branch set are deleted.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() > MINOR_VERTEX_BUDGET {
        return Err(Error::Budget(format!(
            "minor search limited to {MINOR_VERTEX_BUDGET} vertices, got {}",
            g.n()
        )));
    }
    if h.n() > g.n() || h.num_edges() > g.num_edges() {
        return Ok(false);
    }
    if h.n() == 0 {
        return Ok(true);
    }
    let search = ModelSearch {
        adj: g.adjacency_masks(),
        h_edges: h.edges().iter().map(|&(a, b)| (a - 1, b - 1)).collect(),
        k: h.n(),
        n: g.n(),
        // labels of K_t (and the edgeless graph) are interchangeable, so
        // branch sets can be required to appear in label order
        symmetric: h.num_edges() == h.n() * (h.n() - 1) / 2 || h.num_edges() == 0,
    };
    let mut classes = vec![0u64; h.n()];
    Ok(search.assign(0, &mut classes, 0))
}

struct ModelSearch {
    adj: Vec<u64>,
    h_edges: Vec<(usize, usize)>,
    k: usize,
    n: usize,
    symmetric: bool,
}

impl ModelSearch {
    fn assign(&self, v: usize, classes: &mut [u64], used: usize) -> bool {
        if self.k - used > self.n - v {
            return false;
        }
        if v == self.n {
            return self.is_model(classes);
        }
        // delete v
        if self.assign(v + 1, classes, used) {
            return true;
        }
        let limit = if self.symmetric { (used + 1).min(self.k) } else { self.k };
        for c in 0..limit {
            let fresh = classes[c] == 0;
            classes[c] |= 1 << v;
            let found = self.assign(v + 1, classes, if fresh { used + 1 } else { used });
            classes[c] &= !(1 << v);
            if found {
                return true;
            }
        }
        false
    }

    fn is_model(&self, classes: &[u64]) -> bool {
        if classes.iter().any(|&c| c == 0 || components_within(&self.adj, c).len() != 1) {
            return false;
        }
        let reach: Vec<u64> = classes
            .iter()
            .map(|&c| {
                let mut m = 0u64;
                let mut bits = c;
                while bits != 0 {
                    m |= self.adj[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                m
            })
            .collect();
        self.h_edges.iter().all(|&(a, b)| reach[a] & classes[b] != 0)
    }
}

/// Series-parallel test by reduction: repeatedly delete vertices of degree
/// at most one and suppress vertices of degree two (parallel edges merge on
/// the fly). A graph is series-parallel (free of K₄ minors) iff everything
/// reduces away. Components are reduced independently.
pub fn is_series_parallel(g: &Graph) -> bool {
    let mut adj = g.adjacency_masks();
    let mut alive: u64 = crate::partition::full_mask(g.n());
    loop {
        let mut progress = false;
        let mut bits = alive;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let nb = adj[v] & alive;
            match nb.count_ones() {
                0 | 1 => {
                    alive &= !(1 << v);
                    progress = true;
                }
                2 => {
                    let a = nb.trailing_zeros() as usize;
                    let b = (nb & (nb - 1)).trailing_zeros() as usize;
                    alive &= !(1 << v);
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    progress = true;
                }
                _ => {}
            }
        }
        if alive == 0 {
            return true;
        }
        if !progress {
            return false;
        }
    }
}

/// Length of the longest chordless cycle, 0 for forests. Exhaustive over
/// vertex subsets, so restricted to at most 16 vertices.
pub fn max_induced_cycle(g: &Graph) -> usize {
    assert!(g.n() <= 16, "max_induced_cycle is exhaustive over subsets");
    let adj = g.adjacency_masks();
    let mut best = 0;
    for s in 1u64..(1u64 << g.n()) {
        let size = s.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let mut bits = s;
        let mut all_two = true;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if (adj[v] & s).count_ones() != 2 {
                all_two = false;
                break;
            }
        }
        if all_two && components_within(&adj, s).len() == 1 {
            best = size;
        }
    }
    best
}
