use crate::cut::cut_vector;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::partition::{full_mask, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceKind {
    /// `h` is `g` with one edge contracted.
    Contraction(usize, usize),
    /// `h` is the subgraph induced on these vertices (ascending).
    Induced,
}

/// A face of `Cut□(g)` cut out by equations `x_e = 0`, with the bijection
/// from the vertices of `Cut□(h)` onto it.
#[derive(Clone, Debug)]
pub struct FaceCertificate {
    pub zero_edges: Vec<Edge>,
    /// `(partition of h, partition of g)` pairs, in key order of `h`.
    pub vertex_map: Vec<(Partition, Partition)>,
    /// For each edge of `h`, the edge of `g` carrying the same coordinate.
    pub edge_map: Vec<(Edge, Edge)>,
}

impl FaceCertificate {
    /// Checks that the equations select exactly the image of the map and
    /// that cut vectors agree along the edge map.
    pub fn verify(&self, g: &Graph, h: &Graph) -> bool {
        let zero: Vec<usize> = self.zero_edges.iter().filter_map(|&(a, b)| g.edge_index(a, b)).collect();
        if zero.len() != self.zero_edges.len() {
            return false;
        }
        let mut selected: Vec<u64> = Partition::all(g.n())
            .filter(|p| {
                let x = cut_vector(g, p);
                zero.iter().all(|&e| x[e] == 0)
            })
            .map(|p| p.key())
            .collect();
        let mut image: Vec<u64> = self.vertex_map.iter().map(|(_, q)| q.key()).collect();
        selected.sort_unstable();
        image.sort_unstable();
        let before = image.len();
        image.dedup();
        if image.len() != before || image != selected || before != 1 << (h.n() - 1) {
            return false;
        }
        self.vertex_map.iter().all(|(ph, pg)| {
            self.edge_map.iter().all(|&((a, b), (c, d))| ph.separates(a, b) == pg.separates(c, d))
        })
    }
}

/// The face of `Cut□(g)` that is a copy of `Cut□(h)`.
///
/// For a contraction of `{i,j}` the face is `x_ij = 0`. For an induced
/// subgraph on `verts`: `x_e = 0` on every edge with no endpoint in
/// `verts`, plus one edge from each component of the rest to `verts`.
pub fn face_restriction(g: &Graph, h: &Graph, kind: FaceKind, verts: &[usize]) -> Result<FaceCertificate> {
    match kind {
        FaceKind::Contraction(i, j) => contraction_face(g, h, i, j),
        FaceKind::Induced => induced_face(g, h, verts),
    }
}

fn contraction_face(g: &Graph, h: &Graph, i: usize, j: usize) -> Result<FaceCertificate> {
    if g.contract_edge(i, j)? != *h {
        return Err(Error::InvalidArgument(format!("h is not g with {i}-{j} contracted")));
    }
    let (lo, hi) = (i.min(j), i.max(j));
    // label of each g-vertex in h
    let label = |v: usize| if v == hi { lo } else if v > hi { v - 1 } else { v };
    let vertex_map = Partition::all(h.n())
        .map(|ph| {
            let mask = (1..=g.n()).filter(|&v| ph.in_a(label(v))).fold(0u64, |m, v| m | 1 << (v - 1));
            (ph, Partition::from_mask(g.n(), mask))
        })
        .collect();
    let edge_map = g
        .edges()
        .iter()
        .filter(|&&(a, b)| (a, b) != (lo, hi))
        .map(|&(a, b)| {
            let (x, y) = (label(a), label(b));
            ((x.min(y), x.max(y)), (a, b))
        })
        .collect();
    Ok(FaceCertificate { zero_edges: vec![(lo, hi)], vertex_map, edge_map })
}

fn induced_face(g: &Graph, h: &Graph, verts: &[usize]) -> Result<FaceCertificate> {
    if verts.is_empty() || g.induced_subgraph(verts)? != *h {
        return Err(Error::InvalidArgument("h is not the induced subgraph on the given vertices".into()));
    }
    let inside: u64 = verts.iter().fold(0, |m, &v| m | 1 << (v - 1));
    let adj = g.adjacency_masks();
    let outside = full_mask(g.n()) & !inside;
    let mut zero_edges: Vec<Edge> =
        g.edges().iter().copied().filter(|&(a, b)| inside >> (a - 1) & 1 == 0 && inside >> (b - 1) & 1 == 0).collect();
    // anchor[v-1]: the vertex of `verts` whose side v follows
    let mut anchor = vec![0usize; g.n()];
    for &v in verts {
        anchor[v - 1] = v;
    }
    for comp in crate::graph::components_within(&adj, outside) {
        let link = g
            .edges()
            .iter()
            .copied()
            .find(|&(a, b)| {
                (comp >> (a - 1) & 1 == 1 && inside >> (b - 1) & 1 == 1)
                    || (comp >> (b - 1) & 1 == 1 && inside >> (a - 1) & 1 == 1)
            })
            .ok_or_else(|| Error::InvalidArgument("a component of g - h does not touch h".into()))?;
        zero_edges.push(link);
        let root = if inside >> (link.0 - 1) & 1 == 1 { link.0 } else { link.1 };
        for v in 1..=g.n() {
            if comp >> (v - 1) & 1 == 1 {
                anchor[v - 1] = root;
            }
        }
    }
    zero_edges.sort_unstable();
    let pos = |v: usize| verts.iter().position(|&x| x == v).unwrap() + 1;
    let vertex_map = Partition::all(h.n())
        .map(|ph| {
            let mask = (1..=g.n()).filter(|&v| ph.in_a(pos(anchor[v - 1]))).fold(0u64, |m, v| m | 1 << (v - 1));
            (ph, Partition::from_mask(g.n(), mask))
        })
        .collect();
    let edge_map = h.edges().iter().map(|&(a, b)| ((a, b), (verts[a - 1], verts[b - 1]))).collect();
    Ok(FaceCertificate { zero_edges, vertex_map, edge_map })
}
