//! Facets by double description on the homogenized vertex cone.

use num_traits::ToPrimitive;

use super::VPolytope;
use crate::arith;
use crate::error::{Error, Result};

/// `normal · w ≤ offset` in lattice coordinates, with the bitmask of
/// vertices on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub vertices: u64,
}

#[derive(Clone, Debug)]
pub struct HPolytope {
    facets: Vec<Facet>,
    nverts: usize,
}

impl HPolytope {
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Indices of the facets containing vertex `v`.
    pub fn facets_through(&self, v: usize) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| self.facets[f].vertices >> v & 1 == 1).collect()
    }

    /// Vertices joined to `v` by an edge: `u` such that no third vertex
    /// lies on every facet through both.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let all = crate::partition::full_mask(self.nverts);
        (0..self.nverts)
            .filter(|&u| u != v)
            .filter(|&u| {
                let common = self
                    .facets
                    .iter()
                    .filter(|f| f.vertices >> u & 1 == 1 && f.vertices >> v & 1 == 1)
                    .fold(all, |m, f| m & f.vertices);
                common == (1 << u | 1 << v)
            })
            .collect()
    }

    /// Facets in ambient coordinates as `(normal, offset)` pairs with
    /// primitive integer normals. Needs a full-dimensional polytope.
    pub fn ambient_facets(&self, p: &VPolytope) -> Result<Vec<(Vec<i64>, i64)>> {
        if p.dim() != p.ambient_dim() {
            return Err(Error::InvalidArgument("ambient facets need a full-dimensional polytope".into()));
        }
        let verts = p.vertices();
        self.facets
            .iter()
            .map(|f| {
                let on: Vec<usize> = (0..verts.len()).filter(|&i| f.vertices >> i & 1 == 1).collect();
                let base = &verts[on[0]];
                let diffs: Vec<Vec<i64>> = on[1..]
                    .iter()
                    .map(|&i| verts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                    .collect();
                let ker = if diffs.is_empty() {
                    // one-dimensional polytope: the facet is a single point
                    vec![vec![1]]
                } else {
                    arith::integer_kernel(&diffs, p.ambient_dim())?
                };
                let mut c = ker.into_iter().next().ok_or(Error::Verification("degenerate facet".into()))?;
                let off = arith::dot(&c, base);
                if verts.iter().any(|v| arith::dot(&c, v) > off) {
                    c.iter_mut().for_each(|x| *x = -*x);
                }
                let off = arith::dot(&c, base);
                Ok((c, off))
            })
            .collect()
    }

    /// `a1 ... ak <= b` lines in ambient coordinates.
    pub fn to_text(&self, p: &VPolytope) -> Result<String> {
        let mut out = String::new();
        for (c, b) in self.ambient_facets(p)? {
            let lhs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("{} <= {b}\n", lhs.join(" ")));
        }
        Ok(out)
    }
}

#[derive(Clone)]
struct Ray {
    a: Vec<i128>,
    zeros: u64,
}

fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

pub(super) fn facets(p: &VPolytope, max_dim: usize) -> Result<HPolytope> {
    p.check_budget(max_dim)?;
    let d = p.dim();
    let nverts = p.num_vertices();
    if d == 0 {
        return Ok(HPolytope { facets: Vec::new(), nverts });
    }
    // homogenized points (1, w)
    let pts: Vec<Vec<i64>> = p
        .lattice_coords()
        .iter()
        .map(|w| std::iter::once(1).chain(w.iter().copied()).collect())
        .collect();
    let eval = |r: &[i128], k: usize| -> i128 {
        r.iter().zip(&pts[k]).map(|(&a, &x)| a * x as i128).sum()
    };

    // a basis of d+1 independent points
    let mut basis: Vec<usize> = Vec::new();
    for k in 0..nverts {
        let mut rows: Vec<Vec<i64>> = basis.iter().map(|&i| pts[i].clone()).collect();
        rows.push(pts[k].clone());
        if arith::rank(&rows) == rows.len() {
            basis.push(k);
            if basis.len() == d + 1 {
                break;
            }
        }
    }
    let m: Vec<Vec<i64>> = basis.iter().map(|&i| pts[i].clone()).collect();
    let mut rays: Vec<Ray> = Vec::new();
    for j in 0..=d {
        let e: Vec<i64> = (0..=d).map(|i| (i == j) as i64).collect();
        let x = arith::solve_rational(&m, &e).ok_or(Error::Verification("singular basis".into()))?;
        let lcm = x.iter().fold(num_bigint::BigInt::from(1), |l, q| num_integer::lcm(l, q.denom().clone()));
        let mut a: Vec<i128> = x
            .iter()
            .map(|q| (q.numer() * (&lcm / q.denom())).to_i128().ok_or(Error::Overflow("hull ray")))
            .collect::<Result<_>>()?;
        primitive(&mut a);
        let zeros = basis.iter().enumerate().filter(|&(i, _)| i != j).fold(0u64, |z, (_, &k)| z | 1 << k);
        rays.push(Ray { a, zeros });
    }

    let mut processed: u64 = basis.iter().fold(0, |z, &k| z | 1 << k);
    for k in 0..nverts {
        if processed >> k & 1 == 1 {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| eval(&r.a, k)).collect();
        let mut next: Vec<Ray> = Vec::new();
        for (r, &s) in rays.iter().zip(&vals) {
            if s >= 0 {
                let mut r = r.clone();
                if s == 0 {
                    r.zeros |= 1 << k;
                }
                next.push(r);
            }
        }
        for (i, &si) in vals.iter().enumerate() {
            if si <= 0 {
                continue;
            }
            for (j, &sj) in vals.iter().enumerate() {
                if sj >= 0 {
                    continue;
                }
                let common = rays[i].zeros & rays[j].zeros;
                if (common.count_ones() as usize) + 1 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, r)| t == i || t == j || r.zeros & common != common);
                if !adjacent {
                    continue;
                }
                let mut a: Vec<i128> = rays[i]
                    .a
                    .iter()
                    .zip(&rays[j].a)
                    .map(|(&x, &y)| si.checked_mul(y).and_then(|u| sj.checked_mul(x).and_then(|v| u.checked_sub(v))))
                    .collect::<Option<_>>()
                    .ok_or(Error::Overflow("double description"))?;
                primitive(&mut a);
                next.push(Ray { a, zeros: common | 1 << k });
            }
        }
        rays = next;
        processed |= 1 << k;
    }

    let mut facets: Vec<Facet> = rays
        .into_iter()
        .map(|r| {
            let normal = r.a[1..].iter().map(|&x| -(x as i64)).collect();
            Facet { normal, offset: r.a[0] as i64, vertices: r.zeros }
        })
        .collect();
    facets.sort_by(|x, y| x.vertices.cmp(&y.vertices).then_with(|| x.normal.cmp(&y.normal)));
    Ok(HPolytope { facets, nverts })
}
