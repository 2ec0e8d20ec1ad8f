use std::collections::BTreeMap;

use super::{BinaryIndex, MAX_INDEX_LEN};
use crate::binomial::Binomial;
use crate::cut::{edge_label, exponent_matrix, ExponentMatrix, VariableSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{format_block, Partition};
use crate::toric::{groebner, ideal_equal, markov_basis, toric_groebner, TermOrder, ToricConfig};

fn p_vars(n: usize) -> VariableSet {
    VariableSet::named(BinaryIndex::all(n).map(|i| format!("p{i}")).collect())
}

/// The matrix of `p_i -> ∏_{kl ∈ E} b^{kl}_{i_k i_l}`. Rows are
/// `b{kl}_{ab}` for each edge and `ab` in `00, 01, 10, 11`; columns are
/// the `p_i` in value order.
pub fn psi_matrix(g: &Graph) -> Result<ExponentMatrix> {
    if g.num_edges() == 0 || g.has_isolated_vertex() {
        return Err(Error::InvalidGraph("the graph model needs a graph without isolated vertices".into()));
    }
    let n = g.n();
    if n > MAX_INDEX_LEN {
        return Err(Error::InvalidArgument(format!("graph model limited to {MAX_INDEX_LEN} vertices")));
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for &(k, l) in g.edges() {
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            rows.push(format!("b{}_{a}{b}", edge_label(k, l, n)));
            entries.push(BinaryIndex::all(n).map(|i| (i.bit(k) == a && i.bit(l) == b) as i64).collect());
        }
    }
    ExponentMatrix::new(rows, p_vars(n), entries)
}

/// The partition of `1..=n+1` whose block without `n+1` is the set of
/// positions `k` with `i_k = 1`.
pub fn gamma(i: &BinaryIndex) -> Partition {
    Partition::from_mask(i.len() + 1, i.support())
}

/// Inverse of [`gamma`]; the blocks are oriented so that the last vertex
/// is on the side of the zeros.
pub fn gamma_inv(p: &Partition) -> Result<BinaryIndex> {
    if p.n() < 2 {
        return Err(Error::InvalidArgument("gamma is defined on partitions of at least two vertices".into()));
    }
    Ok(BinaryIndex::from_support(p.n() - 1, p.key()))
}

/// Lines `p011 -> q14|23`, one per index in value order, with the block
/// holding vertex 1 written first.
pub fn gamma_table(n: usize) -> Result<Vec<String>> {
    if n == 0 || n > MAX_INDEX_LEN {
        return Err(Error::InvalidArgument(format!("index length {n} outside 1..={MAX_INDEX_LEN}")));
    }
    Ok(BinaryIndex::all(n)
        .map(|i| {
            let p = gamma(&i);
            let (a, b) = if p.in_a(1) { (p.block_a(), p.block_b()) } else { (p.block_b(), p.block_a()) };
            format!("p{i} -> q{}|{}", format_block(&a, n + 1), format_block(&b, n + 1))
        })
        .collect())
}

#[derive(Clone, Debug)]
pub struct CovarianceCheck {
    /// The relabeled model ideal equals the cut ideal of the suspension.
    pub holds: bool,
    pub model_degrees: BTreeMap<u32, usize>,
    pub cut_degrees: BTreeMap<u32, usize>,
}

/// Carries a minimal generating set of the graph model ideal through
/// `gamma` and compares it with the cut ideal of the suspension.
pub fn verify_covariance(g: &Graph, cfg: &ToricConfig) -> Result<CovarianceCheck> {
    let psi = psi_matrix(g)?;
    let model = markov_basis(&psi, cfg)?;
    let n = g.n();
    let m = 1usize << n;
    let key: Vec<usize> = BinaryIndex::all(n).map(|i| gamma(&i).key() as usize).collect();
    let relabeled: Vec<Binomial> = model
        .elements
        .iter()
        .map(|b| {
            let mut plus = vec![0u32; m];
            let mut minus = vec![0u32; m];
            for i in 0..m {
                plus[key[i]] = b.plus[i];
                minus[key[i]] = b.minus[i];
            }
            Binomial::new(plus, minus)
        })
        .collect();
    let suspension = g.suspend();
    let a = exponent_matrix(&suspension)?;
    let cut = markov_basis(&a, cfg)?;
    let order = TermOrder::degrevlex(m);
    let lhs = groebner(&relabeled, m, &order, &cfg.gb)?;
    let rhs = toric_groebner(&a, &order, cfg)?;
    if !(model.certified && cut.certified && lhs.certified() && rhs.certified()) {
        return Err(Error::Budget("Gröbner computation truncated".into()));
    }
    Ok(CovarianceCheck {
        holds: ideal_equal(&lhs, &rhs),
        model_degrees: model.degree_histogram,
        cut_degrees: cut.degree_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_round_trip() {
        for n in 1..=6 {
            for i in BinaryIndex::all(n) {
                assert_eq!(gamma_inv(&gamma(&i)).unwrap(), i);
            }
        }
    }

    #[test]
    fn psi_of_an_edge() {
        let a = psi_matrix(&Graph::complete(2)).unwrap();
        assert_eq!(a.nrows(), 4);
        assert_eq!(a.rank(), 4);
        assert!(psi_matrix(&Graph::new(3, [(1, 2)]).unwrap()).is_err());
    }
}
