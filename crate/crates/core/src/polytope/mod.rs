//! Lattice polytopes given by their vertices, with cut polytopes as the
//! main source. All work happens in the affine lattice spanned by the
//! vertex differences, in coordinates where that lattice is `Z^d`.

mod face;
mod hull;
mod normality;
mod triangulate;

use num_bigint::BigInt;
use serde_json::{json, Value};

pub use face::{face_restriction, FaceCertificate, FaceKind};
pub use hull::{Facet, HPolytope};
pub use normality::{normality_gaps, NormalityReport};
pub use triangulate::{placing_triangulation, Triangulation};

use crate::arith;
use crate::cut::cut_vector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Vertex count supported by the face machinery (one bit per vertex).
pub const MAX_POLYTOPE_VERTICES: usize = 64;
/// Default dimension budget for facet enumeration and triangulation.
pub const DEFAULT_MAX_DIM: usize = 10;

/// A lattice polytope given by distinct integer vertices.
#[derive(Clone, Debug)]
pub struct VPolytope {
    vertices: Vec<Vec<i64>>,
    ambient_dim: usize,
    // lattice frame: w_i = coordinates of v_i - v_0 in `basis`
    basis: Vec<Vec<BigInt>>,
    coords: Vec<Vec<i64>>,
}

impl VPolytope {
    /// The points must be distinct and in convex position.
    pub fn new(vertices: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::InvalidArgument("a polytope needs at least one vertex".into()));
        };
        let ambient_dim = first.len();
        if vertices.iter().any(|v| v.len() != ambient_dim) {
            return Err(Error::InvalidArgument("vertices of different lengths".into()));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != vertices.len() {
            return Err(Error::InvalidArgument("repeated vertex".into()));
        }
        let diffs: Vec<Vec<BigInt>> = vertices[1..]
            .iter()
            .map(|v| v.iter().zip(first).map(|(a, b)| BigInt::from(a - b)).collect())
            .collect();
        let basis = arith::hermite_rows(&diffs);
        let coords = vertices
            .iter()
            .map(|v| {
                let d: Vec<i64> = v.iter().zip(first).map(|(a, b)| a - b).collect();
                arith::lattice_coordinates(&basis, &d).ok_or(Error::Overflow("lattice coordinates"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VPolytope { vertices, ambient_dim, basis, coords })
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Vertex coordinates in the vertex lattice (`v_0` at the origin).
    pub fn lattice_coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    /// Index of the vertex lattice in `Z^ambient` (full-dimensional only).
    pub fn lattice_index(&self) -> Option<BigInt> {
        (self.dim() == self.ambient_dim).then(|| {
            self.basis.iter().enumerate().map(|(i, r)| r[i].clone()).product::<BigInt>()
        })
    }

    pub(crate) fn check_budget(&self, max_dim: usize) -> Result<()> {
        if self.num_vertices() > MAX_POLYTOPE_VERTICES {
            return Err(Error::Budget(format!(
                "{} vertices exceeds {MAX_POLYTOPE_VERTICES}",
                self.num_vertices()
            )));
        }
        if self.dim() > max_dim {
            return Err(Error::Budget(format!("dimension {} exceeds {max_dim}", self.dim())));
        }
        Ok(())
    }

    /// Vertex matrix as CSV with the given column names.
    pub fn to_csv(&self, header: &[String]) -> String {
        let mut out = header.join(",");
        out.push('\n');
        for v in &self.vertices {
            out.push_str(&v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// `Cut□(G)`: the cut vectors of all `2^(n-1)` partitions, in key order.
pub fn cut_polytope(g: &Graph) -> Result<VPolytope> {
    if g.n() > 12 {
        return Err(Error::InvalidArgument("cut polytopes limited to 12 vertices".into()));
    }
    if g.num_edges() == 0 {
        return Err(Error::InvalidGraph("the cut polytope needs at least one edge".into()));
    }
    VPolytope::new(Partition::all(g.n()).map(|p| cut_vector(g, &p)).collect())
}

pub fn dimension(p: &VPolytope) -> usize {
    p.dim()
}

pub fn facets(p: &VPolytope) -> Result<HPolytope> {
    hull::facets(p, DEFAULT_MAX_DIM)
}

pub fn facets_with_budget(p: &VPolytope, max_dim: usize) -> Result<HPolytope> {
    hull::facets(p, max_dim)
}

/// Pulling triangulation pulling vertices in the given order (a
/// permutation of the vertex indices).
pub fn pulling_triangulation(p: &VPolytope, h: &HPolytope, order: &[usize]) -> Result<Triangulation> {
    triangulate::pulling(p, h, order)
}

pub fn is_unimodular(t: &Triangulation) -> bool {
    t.is_unimodular()
}

/// Every facet has lattice width one.
pub fn is_compressed(p: &VPolytope, h: &HPolytope) -> bool {
    h.facets().iter().all(|f| {
        p.lattice_coords().iter().all(|w| {
            let s = arith::dot(&f.normal, w);
            s == f.offset || s == f.offset - 1
        })
    })
}

/// Normalized volume in the vertex lattice (pulling in index order).
pub fn normalized_volume(p: &VPolytope, h: &HPolytope) -> Result<BigInt> {
    let order: Vec<usize> = (0..p.num_vertices()).collect();
    Ok(triangulate::pulling(p, h, &order)?.volume())
}

pub fn is_simple(p: &VPolytope, h: &HPolytope) -> bool {
    (0..p.num_vertices()).all(|v| h.facets_through(v).len() == p.dim())
}

/// Simple, and at every vertex the primitive edge directions form a
/// lattice basis.
pub fn is_smooth(p: &VPolytope, h: &HPolytope) -> bool {
    if !is_simple(p, h) {
        return false;
    }
    let w = p.lattice_coords();
    (0..p.num_vertices()).all(|v| {
        let nbrs = h.neighbours(v);
        if nbrs.len() != p.dim() {
            return false;
        }
        let rows: Vec<Vec<i64>> = nbrs
            .iter()
            .map(|&u| {
                let mut d: Vec<i64> = w[u].iter().zip(&w[v]).map(|(a, b)| a - b).collect();
                arith::make_primitive(&mut d);
                d
            })
            .collect();
        let det = arith::det(&rows);
        det == BigInt::from(1) || det == BigInt::from(-1)
    })
}

/// Summary report with the given normality bound.
pub fn report(p: &VPolytope, max_height: Option<u32>) -> Result<Value> {
    let h = facets(p)?;
    let vol = normalized_volume(p, &h)?;
    let mut r = json!({
        "dim": p.dim(),
        "nVertices": p.num_vertices(),
        "nFacets": h.facets().len(),
        "volume": vol.to_string(),
        "simple": is_simple(p, &h),
        "smooth": is_smooth(p, &h),
        "compressed": is_compressed(p, &h),
    });
    if let Some(mh) = max_height {
        let nr = normality_gaps(p, &h, mh)?;
        r["gapsUpTo"] = json!(mh);
        r["gaps"] = json!(nr.gaps.len());
        r["normalCertified"] = json!(nr.normal_certified());
    }
    Ok(r)
}
