use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use super::{toric_groebner, GroebnerBasis, TermOrder, ToricConfig};
use crate::binomial::Binomial;
use crate::cut::{ExponentMatrix, VariableSet};
use crate::error::{Error, Result};

/// Largest fiber [`markov_from_groebner`] will enumerate.
pub const FIBER_LIMIT: usize = 2_000_000;

/// A minimal generating set of a toric ideal with its degree counts.
#[derive(Clone, Debug)]
pub struct MarkovBasis {
    pub elements: Vec<Binomial>,
    /// degree -> number of minimal generators
    pub degree_histogram: BTreeMap<u32, usize>,
    pub certified: bool,
}

impl MarkovBasis {
    /// Largest degree of a minimal generator, 0 for the zero ideal.
    pub fn mu(&self) -> u32 {
        self.degree_histogram.keys().next_back().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_json(&self, vars: &VariableSet) -> Value {
        json!({
            "binomials": self.elements.iter().map(|b| b.to_json(vars)).collect::<Vec<_>>(),
            "degreeHistogram": self.degree_histogram,
            "mu": self.mu(),
            "certifiedComplete": self.certified,
        })
    }
}

/// Markov basis from the degrevlex Gröbner basis of the toric ideal.
pub fn markov_basis(a: &ExponentMatrix, cfg: &ToricConfig) -> Result<MarkovBasis> {
    let gb = toric_groebner(a, &TermOrder::degrevlex(a.ncols()), cfg)?;
    markov_from_groebner(a, &gb)
}

/// Extracts minimal generators from a degree-compatible Gröbner basis,
/// degree by degree. In each fiber holding a basis element of degree `d`,
/// the monomials are joined by all moves of lower-degree minimal
/// generators; `components - 1` new generators are needed there, and the
/// basis elements of that fiber supply them.
pub fn markov_from_groebner(a: &ExponentMatrix, gb: &GroebnerBasis) -> Result<MarkovBasis> {
    if !gb.order().is_degree_compatible() {
        return Err(Error::InvalidArgument("minimal generators need a degree-compatible order".into()));
    }
    let mut by_degree: BTreeMap<u32, BTreeMap<Vec<i64>, Vec<&Binomial>>> = BTreeMap::new();
    for b in gb.elements() {
        by_degree.entry(b.degree()).or_default().entry(a.multidegree(&b.plus)).or_default().push(b);
    }
    let mut minimal: Vec<Binomial> = Vec::new();
    let mut hist = BTreeMap::new();
    for (d, fibers) in by_degree {
        let lower = minimal.len();
        for (md, members) in fibers {
            let fiber = enumerate_fiber(a, &md, FIBER_LIMIT)?;
            let index: HashMap<&[u32], usize> =
                fiber.iter().enumerate().map(|(i, u)| (u.as_slice(), i)).collect();
            let mut uf = UnionFind::new(fiber.len());
            for g in &minimal[..lower] {
                for (from, to) in [(&g.plus, &g.minus), (&g.minus, &g.plus)] {
                    for (i, u) in fiber.iter().enumerate() {
                        if from.iter().zip(u).all(|(x, y)| x <= y) {
                            let v: Vec<u32> =
                                u.iter().zip(from).zip(to).map(|((&x, &f), &t)| x - f + t).collect();
                            uf.union(i, index[v.as_slice()]);
                        }
                    }
                }
            }
            let mut found = 0;
            for b in members {
                let (i, j) = (index[b.plus.as_slice()], index[b.minus.as_slice()]);
                if uf.union(i, j) {
                    minimal.push(b.canonical());
                    found += 1;
                }
            }
            // a Gröbner basis generates, so its elements always suffice
            let roots: Vec<usize> = (0..fiber.len()).filter(|&i| uf.find(i) == i).collect();
            if roots.len() != 1 {
                return Err(Error::Verification("Gröbner basis does not connect a fiber".into()));
            }
            if found > 0 {
                *hist.entry(d).or_insert(0) += found;
            }
        }
    }
    Ok(MarkovBasis { elements: minimal, degree_histogram: hist, certified: gb.certified() })
}

/// All `u ≥ 0` with `A·u = target`, in lexicographically decreasing order.
pub fn enumerate_fiber(a: &ExponentMatrix, target: &[i64], limit: usize) -> Result<Vec<Vec<u32>>> {
    let m = a.ncols();
    let rows = a.entries();
    let last_nz: Vec<Option<usize>> = rows.iter().map(|r| r.iter().rposition(|&x| x != 0)).collect();
    if rows.iter().zip(target).zip(&last_nz).any(|((_, &t), l)| l.is_none() && t != 0) {
        return Ok(Vec::new());
    }
    // rows that must be exhausted once column j is fixed
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (r, l) in last_nz.iter().enumerate() {
        if let Some(j) = l {
            closing[*j].push(r);
        }
    }
    let cols: Vec<Vec<(usize, i64)>> = (0..m)
        .map(|j| rows.iter().enumerate().filter(|(_, r)| r[j] != 0).map(|(i, r)| (i, r[j])).collect())
        .collect();
    let mut out = Vec::new();
    let mut rem = target.to_vec();
    let mut u = vec![0u32; m];
    fn rec(
        j: usize,
        cols: &[Vec<(usize, i64)>],
        closing: &[Vec<usize>],
        rem: &mut [i64],
        u: &mut [u32],
        out: &mut Vec<Vec<u32>>,
        limit: usize,
    ) -> Result<()> {
        if j == cols.len() {
            if rem.iter().all(|&x| x == 0) {
                if out.len() >= limit {
                    return Err(Error::Budget(format!("fiber larger than {limit}")));
                }
                out.push(u.to_vec());
            }
            return Ok(());
        }
        let max = if cols[j].is_empty() {
            0
        } else {
            cols[j].iter().map(|&(r, x)| rem[r] / x).min().unwrap().max(0)
        };
        for k in (0..=max).rev() {
            for &(r, x) in &cols[j] {
                rem[r] -= k * x;
            }
            if closing[j].iter().all(|&r| rem[r] == 0) {
                u[j] = k as u32;
                rec(j + 1, cols, closing, rem, u, out, limit)?;
                u[j] = 0;
            }
            for &(r, x) in &cols[j] {
                rem[r] += k * x;
            }
        }
        Ok(())
    }
    rec(0, &cols, &closing, &mut rem, &mut u, &mut out, limit)?;
    Ok(out)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; true if they were different.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
