//! Gaps of the semigroup generated by `(1, w)` over the vertices `w`: points
//! of the cone in the lattice that are not sums of generators.
//!
//! Every cone point lies in the cone of some simplex `σ` of a triangulation
//! and equals a fundamental-parallelepiped point of `σ` plus a nonnegative
//! combination of `σ`'s generators. Subtracting one of those generators from
//! a gap leaves a gap, so every gap is reached from a parallelepiped gap by
//! adding generators one at a time through gaps. A breadth-first search from
//! the parallelepiped gaps therefore finds all gaps up to any height.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{HPolytope, VPolytope};
use crate::arith;
use crate::error::{Error, Result};

/// Cap on memoized membership queries.
pub const MEMBERSHIP_BUDGET: usize = 5_000_000;

#[derive(Clone, Debug)]
pub struct NormalityReport {
    /// Gap points `(height, w…)` in lattice coordinates, sorted.
    pub gaps: Vec<Vec<i64>>,
    pub max_height: u32,
    /// True when no gap exists above `max_height`, so `gaps` is the full
    /// list and an empty list proves normality.
    pub complete: bool,
    /// Parallelepiped points checked, over all simplices.
    pub parallelepiped_points: usize,
}

impl NormalityReport {
    pub fn normal_certified(&self) -> bool {
        self.complete && self.gaps.is_empty()
    }

    /// Number of gaps at each height.
    pub fn by_height(&self) -> Vec<(u32, usize)> {
        let mut m = std::collections::BTreeMap::new();
        for g in &self.gaps {
            *m.entry(g[0] as u32).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }
}

struct Semigroup<'a> {
    gens: Vec<Vec<i64>>,
    h: &'a HPolytope,
    memo: HashMap<Vec<i64>, bool>,
}

impl Semigroup<'_> {
    fn in_cone(&self, z: &[i64]) -> bool {
        z[0] >= 0 && self.h.facets().iter().all(|f| arith::dot(&f.normal, &z[1..]) <= f.offset * z[0])
    }

    fn contains(&mut self, z: &[i64]) -> Result<bool> {
        if z[0] == 0 {
            return Ok(z.iter().all(|&x| x == 0));
        }
        if let Some(&b) = self.memo.get(z) {
            return Ok(b);
        }
        if self.memo.len() > MEMBERSHIP_BUDGET {
            return Err(Error::Budget(format!("more than {MEMBERSHIP_BUDGET} membership queries")));
        }
        let mut found = false;
        for i in 0..self.gens.len() {
            let y: Vec<i64> = z.iter().zip(&self.gens[i]).map(|(a, b)| a - b).collect();
            if self.in_cone(&y) && self.contains(&y)? {
                found = true;
                break;
            }
        }
        self.memo.insert(z.to_vec(), found);
        Ok(found)
    }
}

/// Nonzero fundamental-parallelepiped points of the cone over simplex `s`.
fn parallelepiped(gens: &[Vec<i64>], s: &[usize]) -> Result<Vec<Vec<i64>>> {
    let m: Vec<Vec<i64>> = s.iter().map(|&i| gens[i].clone()).collect();
    let k = m.len();
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let hnf = arith::hermite_rows(&big);
    let diag: Vec<i64> = (0..k)
        .map(|i| hnf[i][i].to_i64().ok_or(Error::Overflow("parallelepiped")))
        .collect::<Result<_>>()?;
    let mt: Vec<Vec<i64>> = (0..k).map(|c| m.iter().map(|r| r[c]).collect()).collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; k];
    loop {
        if x.iter().any(|&v| v != 0) {
            let lambda = arith::solve_rational(&mt, &x).ok_or(Error::Verification("singular simplex".into()))?;
            let frac: Vec<BigRational> = lambda.iter().map(|l| l - l.floor()).collect();
            if frac.iter().any(|f| !f.is_zero()) {
                let p: Vec<i64> = (0..k)
                    .map(|c| {
                        let v: BigRational = frac.iter().zip(&m).map(|(f, r)| f * BigInt::from(r[c])).sum();
                        if !v.is_integer() {
                            return Err(Error::Verification("parallelepiped point off lattice".into()));
                        }
                        v.to_integer().to_i64().ok_or(Error::Overflow("parallelepiped"))
                    })
                    .collect::<Result<_>>()?;
                out.push(p);
            }
        }
        // odometer over the box 0 <= x_i < diag_i
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            x[i] += 1;
            if x[i] < diag[i] {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// All gaps of height at most `max_height`, plus whether that list is
/// complete.
pub fn normality_gaps(p: &VPolytope, h: &HPolytope, max_height: u32) -> Result<NormalityReport> {
    let gens: Vec<Vec<i64>> =
        p.lattice_coords().iter().map(|w| std::iter::once(1).chain(w.iter().copied()).collect()).collect();
    let order: Vec<usize> = (0..p.num_vertices()).collect();
    let tri = super::pulling_triangulation(p, h, &order)?;
    let mut fpp: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut count = 0;
    for (s, v) in tri.simplices().iter().zip(tri.volumes()) {
        if v.is_one() {
            continue;
        }
        let pts = parallelepiped(&gens, s)?;
        count += pts.len();
        fpp.extend(pts);
    }
    let mut sg = Semigroup { gens: gens.clone(), h, memo: HashMap::new() };
    let mut complete = true;
    let mut gaps: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for z in &fpp {
        if sg.contains(z)? {
            continue;
        }
        if z[0] as u32 > max_height {
            complete = false;
        } else if gaps.insert(z.clone()) {
            queue.push_back(z.clone());
        }
    }
    while let Some(z) = queue.pop_front() {
        for g in &gens {
            let y: Vec<i64> = z.iter().zip(g).map(|(a, b)| a + b).collect();
            if gaps.contains(&y) || sg.contains(&y)? {
                continue;
            }
            if y[0] as u32 > max_height {
                complete = false;
            } else {
                gaps.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(NormalityReport { gaps: gaps.into_iter().collect(), max_height, complete, parallelepiped_points: count })
}
