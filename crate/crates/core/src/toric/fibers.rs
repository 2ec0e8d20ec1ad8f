//! Minimal generators degree by degree from fiber connectivity.
//!
//! In a fiber of degree `d`, two monomials are joined by moves of lower
//! degree exactly when they are linked by a chain of monomials in which
//! neighbours share a variable. Each extra component needs one minimal
//! generator of degree `d`. Once the ideal spanned so far is saturated and
//! its moves span the kernel lattice it is the whole toric ideal.

use std::collections::{BTreeMap, HashMap};

use super::markov::{MarkovBasis, UnionFind};
use super::{groebner, lattice_kernel, symmetric, TermOrder, ToricConfig};
use crate::binomial::Binomial;
use crate::cut::ExponentMatrix;
use crate::error::{Error, Result};

/// Largest number of monomials enumerated in one degree.
pub const MONOMIAL_LIMIT: u64 = 4_000_000;

/// Degrees with at most this many monomials, and at most two above the
/// last degree with new generators, are enumerated before any saturation
/// test.
const LOOKAHEAD: u64 = 500_000;

fn monomial_count(m: usize, d: u32) -> u64 {
    // C(m + d - 1, d), saturating
    let mut c: u128 = 1;
    for i in 0..d as u128 {
        c = c * (m as u128 + i) / (i + 1);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

fn for_each_monomial(m: usize, d: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(i: usize, left: u32, u: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if i + 1 == u.len() {
            u[i] = left;
            f(u);
            u[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            u[i] = e;
            rec(i + 1, left - e, u, f);
        }
        u[i] = 0;
    }
    if m > 0 {
        rec(0, d, &mut vec![0; m], f);
    }
}

/// New minimal generators of degree `d`: one move per extra component of
/// each fiber under the shared-variable relation.
fn generators_in_degree(a: &ExponentMatrix, d: u32) -> Result<Vec<Binomial>> {
    let m = a.ncols();
    let count = monomial_count(m, d);
    if count > MONOMIAL_LIMIT {
        return Err(Error::Budget(format!("{count} monomials of degree {d} exceed {MONOMIAL_LIMIT}")));
    }
    let mut fibers: HashMap<Vec<i64>, Vec<Vec<u32>>> = HashMap::new();
    for_each_monomial(m, d, &mut |u| fibers.entry(a.multidegree(u)).or_default().push(u.to_vec()));
    let mut fibers: Vec<(Vec<i64>, Vec<Vec<u32>>)> = fibers.into_iter().filter(|(_, f)| f.len() > 1).collect();
    fibers.sort_unstable();
    let mut out = Vec::new();
    for (_, fiber) in fibers {
        let k = fiber.len();
        // nodes 0..k are monomials, k..k+m stand for variables
        let mut uf = UnionFind::new(k + m);
        for (i, u) in fiber.iter().enumerate() {
            for (v, &e) in u.iter().enumerate() {
                if e > 0 {
                    uf.union(i, k + v);
                }
            }
        }
        let mut seen = Vec::new();
        let mut reps = Vec::new();
        for i in 0..k {
            let r = uf.find(i);
            if !seen.contains(&r) {
                seen.push(r);
                reps.push(i);
            }
        }
        for w in reps.windows(2) {
            out.push(Binomial::new(fiber[w[0]].clone(), fiber[w[1]].clone()).canonical());
        }
    }
    Ok(out)
}

/// Whether the ideal of `gens` is the toric ideal of `a`: saturated with
/// respect to every variable (one suffices under a transitive symmetry)
/// and containing a lattice basis of the kernel. `None` when a Gröbner
/// run hit its budget.
fn is_toric_ideal(a: &ExponentMatrix, gens: &[Binomial], cfg: &ToricConfig) -> Result<Option<bool>> {
    let m = a.ncols();
    let kernel = lattice_kernel(a)?;
    if kernel.is_empty() {
        return Ok(Some(true));
    }
    if gens.is_empty() {
        return Ok(Some(false));
    }
    let vars: Vec<usize> = if symmetric::switching_group(a).is_some() { vec![0] } else { (0..m).collect() };
    let mut last = None;
    for v in vars {
        let gb = groebner(gens, m, &TermOrder::degrevlex_last(m, v), &cfg.gb)?;
        if !gb.certified() {
            return Ok(None);
        }
        if gb.elements().iter().any(|b| b.plus[v] > 0) {
            return Ok(Some(false));
        }
        last = Some(gb);
    }
    let gb = last.expect("at least one variable");
    for v in &kernel {
        if !gb.contains(&Binomial::from_vector(v)?) {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Minimal generators of the toric ideal of a matrix with constant column
/// sums, found degree by degree. Stops at `cfg.gb.max_degree` if given,
/// with the result flagged uncertified.
pub fn markov_by_degree(a: &ExponentMatrix, cfg: &ToricConfig) -> Result<MarkovBasis> {
    let m = a.ncols();
    let sums: Vec<i64> = (0..m).map(|j| a.column(j).iter().sum()).collect();
    if sums.windows(2).any(|w| w[0] != w[1]) || sums.first().is_some_and(|&s| s <= 0) {
        return Err(Error::InvalidArgument("degree-by-degree search needs constant positive column sums".into()));
    }
    let mut elements = Vec::new();
    let mut hist = BTreeMap::new();
    let mut d = 1;
    let mut last = 0;
    loop {
        // keep enumerating while degrees are cheap and generators keep
        // turning up; the saturation test is the expensive part
        let capped = cfg.gb.max_degree.is_some_and(|cap| d > cap);
        let cheap = monomial_count(m, d) <= LOOKAHEAD && d <= last + 2;
        if (capped || !cheap) && matches!(is_toric_ideal(a, &elements, cfg)?, Some(true)) {
            return Ok(MarkovBasis { elements, degree_histogram: hist, certified: true });
        }
        if capped {
            return Ok(MarkovBasis { elements, degree_histogram: hist, certified: false });
        }
        let new = generators_in_degree(a, d)?;
        if !new.is_empty() {
            hist.insert(d, new.len());
            elements.extend(new);
            last = d;
            if !cheap && matches!(is_toric_ideal(a, &elements, cfg)?, Some(true)) {
                return Ok(MarkovBasis { elements, degree_histogram: hist, certified: true });
            }
        }
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomial_count(8, 4), 330);
        assert_eq!(monomial_count(32, 4), 52360);
        let mut n = 0;
        for_each_monomial(5, 3, &mut |_| n += 1);
        assert_eq!(n, monomial_count(5, 3));
    }

    #[test]
    fn twisted_cubic() {
        let a = ExponentMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
        let mb = markov_by_degree(&a, &ToricConfig::default()).unwrap();
        assert!(mb.certified);
        assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(2, 3)]);
    }

    #[test]
    fn repeated_column_gives_a_linear_generator() {
        let a = ExponentMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let mb = markov_by_degree(&a, &ToricConfig::default()).unwrap();
        assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
    }

    #[test]
    fn ungraded_matrix_is_rejected() {
        let a = ExponentMatrix::from_rows(vec![vec![1, 2]]).unwrap();
        assert!(markov_by_degree(&a, &ToricConfig::default()).is_err());
    }
}
