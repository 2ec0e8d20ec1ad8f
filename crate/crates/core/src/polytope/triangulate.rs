use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{HPolytope, VPolytope};
use crate::arith;
use crate::error::{Error, Result};

/// Full-dimensional simplices (vertex index lists) with their lattice
/// volumes.
#[derive(Clone, Debug)]
pub struct Triangulation {
    simplices: Vec<Vec<usize>>,
    volumes: Vec<BigInt>,
    pub method: String,
}

impl Triangulation {
    fn new(p: &VPolytope, mut simplices: Vec<Vec<usize>>, method: String) -> Result<Self> {
        for s in simplices.iter_mut() {
            s.sort_unstable();
        }
        simplices.sort();
        let volumes: Vec<BigInt> = simplices.iter().map(|s| simplex_volume(p, s)).collect();
        if volumes.iter().any(Zero::is_zero) {
            return Err(Error::Verification("degenerate simplex in triangulation".into()));
        }
        Ok(Triangulation { simplices, volumes, method })
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn volumes(&self) -> &[BigInt] {
        &self.volumes
    }

    /// Normalized volume of the union.
    pub fn volume(&self) -> BigInt {
        self.volumes.iter().sum()
    }

    pub fn is_unimodular(&self) -> bool {
        self.volumes.iter().all(One::is_one)
    }
}

fn diff_rows(p: &VPolytope, base: usize, others: &[usize]) -> Vec<Vec<i64>> {
    let w = p.lattice_coords();
    others.iter().map(|&i| w[i].iter().zip(&w[base]).map(|(a, b)| a - b).collect()).collect()
}

/// `|det|` of a full-dimensional lattice simplex (1 for a point).
pub(crate) fn simplex_volume(p: &VPolytope, s: &[usize]) -> BigInt {
    if s.len() == 1 {
        return BigInt::one();
    }
    arith::det(&diff_rows(p, s[0], &s[1..])).abs()
}

pub(super) fn pulling(p: &VPolytope, h: &HPolytope, order: &[usize]) -> Result<Triangulation> {
    let n = p.num_vertices();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidArgument("pulling order is not a permutation of the vertices".into()));
    }
    let mut rank = vec![0usize; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let full = crate::partition::full_mask(n);
    let masks: Vec<u64> = h.facets().iter().map(|f| f.vertices).collect();
    let mut memo: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
    let simplices = pull(full, &masks, &rank, &mut memo);
    Triangulation::new(p, simplices, format!("pulling {order:?}"))
}

/// Triangulates the face with vertex set `face`: cone the first vertex in
/// pulling order over the triangulations of the facets of `face` missing
/// it. Facets of a face are the maximal proper intersections with facets
/// of the polytope.
fn pull(face: u64, masks: &[u64], rank: &[usize], memo: &mut HashMap<u64, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if let Some(r) = memo.get(&face) {
        return r.clone();
    }
    let apex = (0..64).filter(|&i| face >> i & 1 == 1).min_by_key(|&i| rank[i]).unwrap();
    let result = if face.count_ones() == 1 {
        vec![vec![apex]]
    } else {
        let mut cands: Vec<u64> = masks.iter().map(|&m| m & face).filter(|&g| g != face && g != 0).collect();
        cands.sort_unstable();
        cands.dedup();
        let sub: Vec<u64> = cands
            .iter()
            .copied()
            .filter(|&g| !cands.iter().any(|&o| o != g && o & g == g))
            .collect();
        let mut out = Vec::new();
        for g in sub {
            if g >> apex & 1 == 1 {
                continue;
            }
            for mut s in pull(g, masks, rank, memo) {
                s.push(apex);
                out.push(s);
            }
        }
        out
    };
    memo.insert(face, result.clone());
    result
}

/// Placing (beneath-beyond) triangulation: insert vertices in the given
/// order, coning each new vertex over the visible boundary facets. Uses
/// only determinant signs, so it serves as an independent check on the
/// facet-based pulling code.
pub fn placing_triangulation(p: &VPolytope, order: &[usize]) -> Result<Triangulation> {
    let d = p.dim();
    let w = p.lattice_coords();
    if d == 0 {
        return Triangulation::new(p, vec![vec![order[0]]], "placing".into());
    }
    // first d+1 affinely independent points in order
    let mut start: Vec<usize> = Vec::new();
    for &k in order {
        let mut cand = start.clone();
        cand.push(k);
        let rows = diff_rows(p, cand[0], &cand[1..]);
        if arith::rank(&rows) == cand.len() - 1 {
            start = cand;
            if start.len() == d + 1 {
                break;
            }
        }
    }
    let mut simplices = vec![start.clone()];
    let orient = |face: &[usize], x: usize| -> BigInt {
        let mut rows = diff_rows(p, face[0], &face[1..]);
        rows.push(w[x].iter().zip(&w[face[0]]).map(|(a, b)| a - b).collect());
        arith::det(&rows)
    };
    for &k in order {
        if start.contains(&k) {
            continue;
        }
        let mut boundary: HashMap<Vec<usize>, (usize, usize)> = HashMap::new();
        for s in &simplices {
            for skip in 0..s.len() {
                let mut f: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                f.sort_unstable();
                boundary.entry(f).and_modify(|e| e.0 += 1).or_insert((1, s[skip]));
            }
        }
        let mut visible: Vec<Vec<usize>> = boundary
            .into_iter()
            .filter(|(_, (count, _))| *count == 1)
            .filter(|(f, (_, opp))| {
                let sk = orient(f, k);
                !sk.is_zero() && sk.signum() != orient(f, *opp).signum()
            })
            .map(|(f, _)| f)
            .collect();
        visible.sort();
        for mut f in visible {
            f.push(k);
            simplices.push(f);
        }
    }
    Triangulation::new(p, simplices, format!("placing {order:?}"))
}
