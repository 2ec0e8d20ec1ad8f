//! Saturation under a transitive group of column symmetries.
//!
//! If a binomial ideal `J` inside the toric ideal is invariant under a
//! group acting transitively on the variables and its moves span the
//! kernel lattice, then `J` saturated with respect to one variable is
//! saturated with respect to all of them and equals the toric ideal. Each
//! round saturates by a single variable and closes the new elements under
//! the group.

use std::collections::BTreeSet;

use super::{groebner, lattice_kernel, quadric_moves, ToricConfig, TermOrder};
use crate::arith;
use crate::binomial::Binomial;
use crate::cut::ExponentMatrix;
use crate::error::Result;

/// Column permutations of a cut matrix given by switching along a vertex
/// set: `q[A|B] -> q[A△S|B△S]`, which acts on keys by XOR. Only the
/// elements that map the kernel to itself are kept; `None` when the
/// matrix does not carry partition variables or the group is not
/// transitive.
pub(super) fn switching_group(a: &ExponentMatrix) -> Option<Vec<u64>> {
    let n = a.vars().cut_vertices()?;
    let m = a.ncols();
    if m != 1 << (n - 1) {
        return None;
    }
    let kernel = lattice_kernel(a).ok()?;
    for i in 0..n - 1 {
        let s = 1u64 << i;
        let ok = kernel.iter().all(|v| {
            let mut w = vec![0i64; m];
            for (k, &x) in v.iter().enumerate() {
                w[k ^ s as usize] = x;
            }
            a.entries().iter().all(|row| arith::dot(row, &w) == 0)
        });
        if !ok {
            return None;
        }
    }
    Some((0..m as u64).collect())
}

fn permute(b: &Binomial, s: u64) -> Binomial {
    let m = b.len();
    let mut plus = vec![0u32; m];
    let mut minus = vec![0u32; m];
    for k in 0..m {
        plus[k ^ s as usize] = b.plus[k];
        minus[k ^ s as usize] = b.minus[k];
    }
    Binomial { plus, minus }
}

fn close(set: &mut BTreeSet<Binomial>, b: &Binomial, group: &[u64]) {
    for &s in group {
        let c = permute(b, s).canonical();
        if !c.is_zero() {
            set.insert(c);
        }
    }
}

/// Generators of the toric ideal, or `None` when the saturation rounds
/// were truncated by a degree bound.
pub(super) fn saturate(a: &ExponentMatrix, group: &[u64], cfg: &ToricConfig) -> Result<Option<Vec<Binomial>>> {
    let m = a.ncols();
    let kernel = lattice_kernel(a)?;
    let mut gens: BTreeSet<Binomial> = BTreeSet::new();
    let quads = if cfg.seed_quadrics { quadric_moves(a) } else { Vec::new() };
    for q in &quads {
        close(&mut gens, q, group);
    }
    let rows: Vec<Vec<i64>> = gens.iter().map(|b| b.to_vector()).collect();
    if rows.is_empty() || arith::rank(&rows) < kernel.len() {
        for v in &kernel {
            close(&mut gens, &Binomial::from_vector(v)?, group);
        }
    }
    let order = TermOrder::degrevlex_last(m, 0);
    loop {
        let list: Vec<Binomial> = gens.iter().cloned().collect();
        let gb = groebner(&list, m, &order, &cfg.gb)?;
        if !gb.certified() {
            return Ok(None);
        }
        let fresh: Vec<Binomial> = gb
            .elements()
            .iter()
            .filter(|b| b.plus[0] > 0 && b.minus[0] > 0)
            .map(|b| {
                let c = b.plus[0].min(b.minus[0]);
                let mut b = b.clone();
                b.plus[0] -= c;
                b.minus[0] -= c;
                b
            })
            .collect();
        if fresh.is_empty() {
            return Ok(Some(gb.elements().to_vec()));
        }
        for b in &fresh {
            close(&mut gens, b, group);
        }
    }
}
