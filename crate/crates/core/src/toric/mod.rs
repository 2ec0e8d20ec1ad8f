//! Toric ideals of exponent matrices: lattice kernels, Gröbner bases by
//! iterated saturation, Markov bases and initial ideals.

mod buchberger;
mod fibers;
mod markov;
mod order;
mod symmetric;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde_json::{json, Value};

pub use buchberger::GbConfig;
pub use fibers::{markov_by_degree, MONOMIAL_LIMIT};
pub use markov::{enumerate_fiber, markov_basis, markov_from_groebner, MarkovBasis};
pub use order::TermOrder;

use crate::arith;
use crate::binomial::Binomial;
use crate::cut::{ExponentMatrix, VariableSet};
use crate::error::{Error, Result};
use buchberger::{buchberger, Elem};

/// A Gröbner basis of marked binomials: `plus` is the leading term.
///
/// Elements of bases of non-prime ideals may share variables between the
/// two sides; bases of toric ideals never do.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: TermOrder,
    nvars: usize,
    elements: Vec<Binomial>,
    certified: bool,
    reduced: bool,
    elems: Vec<Elem>,
    all: Vec<usize>,
}

impl GroebnerBasis {
    fn from_raw(order: TermOrder, nvars: usize, raw: buchberger::RawGb) -> Self {
        let elements: Vec<Binomial> =
            raw.elems.iter().map(|(l, t)| Binomial { plus: l.clone(), minus: t.clone() }).collect();
        let elems = elements.iter().map(|b| Elem::from_pair(&b.plus, &b.minus)).collect::<Vec<_>>();
        let all = (0..elems.len()).collect();
        GroebnerBasis { order, nvars, elements, certified: raw.certified, reduced: true, elems, all }
    }

    /// Wraps marked binomials (`plus` leading) that have been checked to
    /// form a Gröbner basis, without reducing them.
    pub(crate) fn from_marked(order: TermOrder, nvars: usize, elements: Vec<Binomial>) -> Self {
        let elems = elements.iter().map(|b| Elem::from_pair(&b.plus, &b.minus)).collect::<Vec<_>>();
        let all = (0..elems.len()).collect();
        GroebnerBasis { order, nvars, elements, certified: true, reduced: false, elems, all }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// The marked elements; for a reduced basis sorted by increasing
    /// leading term.
    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// False when the run was truncated by a degree bound.
    pub fn certified(&self) -> bool {
        self.certified
    }

    pub(crate) fn mark_uncertified(&mut self) {
        self.certified = false;
    }

    pub fn normal_form_monomial(&self, u: &[u32]) -> Vec<u32> {
        let mut m = u.to_vec();
        buchberger::reduce_monomial(&mut m, &self.elems, &self.all).expect("reduction overflow");
        m
    }

    /// Remainder of `x^plus - x^minus`; zero iff the binomial lies in the
    /// ideal.
    pub fn normal_form(&self, b: &Binomial) -> Binomial {
        Binomial { plus: self.normal_form_monomial(&b.plus), minus: self.normal_form_monomial(&b.minus) }
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.normal_form(b).is_zero()
    }

    pub fn degree_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for b in &self.elements {
            *h.entry(b.degree()).or_default() += 1;
        }
        h
    }

    pub fn to_json(&self, vars: &VariableSet) -> Value {
        json!({
            "order": self.order.to_string(),
            "certifiedComplete": self.certified,
            "binomials": self.elements.iter().map(|b| marked_json(b, vars)).collect::<Vec<_>>(),
        })
    }
}

fn marked_json(b: &Binomial, vars: &VariableSet) -> Value {
    let side = |u: &[u32]| {
        u.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| json!([vars.name(i), e]))
            .collect::<Vec<_>>()
    };
    json!({ "lhs": side(&b.plus), "rhs": side(&b.minus) })
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner(gens: &[Binomial], nvars: usize, order: &TermOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    order.validate(nvars)?;
    if gens.iter().any(|b| b.len() != nvars) {
        return Err(Error::InvalidArgument("generator over the wrong number of variables".into()));
    }
    let pairs: Vec<_> = gens.iter().map(|b| (b.plus.clone(), b.minus.clone())).collect();
    let raw = buchberger(&pairs, order, cfg)?;
    Ok(GroebnerBasis::from_raw(order.clone(), nvars, raw))
}

/// Buchberger's criterion for marked binomials (`plus` leading): every
/// leading term is larger than its tail and every S-pair with overlapping
/// leading terms reduces to zero.
pub fn is_groebner(marked: &[Binomial], order: &TermOrder) -> bool {
    if marked.iter().any(|b| order.cmp(&b.plus, &b.minus) != std::cmp::Ordering::Greater) {
        return false;
    }
    let elems: Vec<Elem> = marked.iter().map(|b| Elem::from_pair(&b.plus, &b.minus)).collect();
    let all: Vec<usize> = (0..elems.len()).collect();
    let nf = |u: Vec<u32>| -> Option<Vec<u32>> {
        let mut u = u;
        buchberger::reduce_monomial(&mut u, &elems, &all).ok()?;
        Some(u)
    };
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let (a, b) = (&elems[i], &elems[j]);
            if a.lead.iter().zip(&b.lead).all(|(&x, &y)| x == 0 || y == 0) {
                continue;
            }
            let l: Vec<u32> = a.lead.iter().zip(&b.lead).map(|(&x, &y)| x.max(y)).collect();
            let side = |e: &Elem| -> Vec<u32> {
                l.iter().zip(&e.lead).zip(&e.tail).map(|((&m, &x), &t)| m - x + t).collect()
            };
            match (nf(side(a)), nf(side(b))) {
                (Some(x), Some(y)) if x == y => {}
                _ => return false,
            }
        }
    }
    true
}

/// A reduced lattice basis of `ker_Z(A)`.
pub fn lattice_kernel(a: &ExponentMatrix) -> Result<Vec<Vec<i64>>> {
    arith::integer_kernel(a.entries(), a.ncols())
}

/// Options for [`toric_groebner`].
#[derive(Clone, Debug)]
pub struct ToricConfig {
    pub gb: GbConfig,
    /// Seed the computation with every degree-two move of the matrix.
    pub seed_quadrics: bool,
}

impl Default for ToricConfig {
    fn default() -> Self {
        ToricConfig { gb: GbConfig::default(), seed_quadrics: true }
    }
}

/// All degree-two binomials `x_i x_j - x_k x_l` needed to connect each
/// degree-two fiber, as a spanning path in key order.
pub fn quadric_moves(a: &ExponentMatrix) -> Vec<Binomial> {
    let m = a.ncols();
    let cols: Vec<Vec<i64>> = (0..m).map(|j| a.column(j)).collect();
    let mut fibers: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..m {
        for j in i..m {
            let key: Vec<i64> = cols[i].iter().zip(&cols[j]).map(|(x, y)| x + y).collect();
            fibers.entry(key).or_default().push((i, j));
        }
    }
    let mono = |(i, j): (usize, usize)| {
        let mut u = vec![0u32; m];
        u[i] += 1;
        u[j] += 1;
        u
    };
    let mut out = Vec::new();
    for members in fibers.values() {
        for w in members.windows(2) {
            let b = Binomial::new(mono(w[0]), mono(w[1]));
            if !b.is_zero() {
                out.push(b);
            }
        }
    }
    out
}

/// Reduced Gröbner basis of the toric ideal of `a` under `order`: the
/// lattice-basis ideal saturated one variable at a time, each step a
/// Gröbner run in degrevlex with that variable cheapest. Cut matrices
/// saturate once per round under the switching symmetries instead.
pub fn toric_groebner(a: &ExponentMatrix, order: &TermOrder, cfg: &ToricConfig) -> Result<GroebnerBasis> {
    let m = a.ncols();
    order.validate(m)?;
    let mut gens: Vec<Binomial> = lattice_kernel(a)?
        .iter()
        .map(|v| Binomial::from_vector(v))
        .collect::<Result<_>>()?;
    if gens.is_empty() {
        return groebner(&[], m, order, &cfg.gb);
    }
    if let Some(group) = symmetric::switching_group(a) {
        if let Some(sat) = symmetric::saturate(a, &group, cfg)? {
            return finish(a, &sat, order, cfg, true);
        }
    }
    if cfg.seed_quadrics {
        let mut q = quadric_moves(a);
        q.append(&mut gens);
        gens = q;
    }
    let mut certified = true;
    for v in 0..m {
        let gb = groebner(&gens, m, &TermOrder::degrevlex_last(m, v), &cfg.gb)?;
        certified &= gb.certified();
        gens = gb
            .elements()
            .iter()
            .map(|b| {
                let c = b.plus[v].min(b.minus[v]);
                let mut b = b.clone();
                b.plus[v] -= c;
                b.minus[v] -= c;
                b
            })
            .collect();
    }
    finish(a, &gens, order, cfg, certified)
}

fn finish(a: &ExponentMatrix, gens: &[Binomial], order: &TermOrder, cfg: &ToricConfig, certified: bool) -> Result<GroebnerBasis> {
    let mut gb = groebner(gens, a.ncols(), order, &cfg.gb)?;
    gb.certified &= certified;
    for b in gb.elements() {
        if !a.contains(b) {
            return Err(Error::Verification("Gröbner element outside the kernel".into()));
        }
    }
    Ok(gb)
}

/// Wall-clock helper for JSON metadata.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed().as_secs_f64())
}

/// Remainder of `b` modulo `gb`.
pub fn normal_form(b: &Binomial, gb: &GroebnerBasis) -> Binomial {
    gb.normal_form(b)
}

/// Mutual containment of the two ideals.
pub fn ideal_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    a.nvars == b.nvars
        && a.elements.iter().all(|f| b.contains(f))
        && b.elements.iter().all(|f| a.contains(f))
}

/// Minimal generators of the initial ideal: the leading terms of the
/// reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Vec<u32>> {
    let set: BTreeSet<Vec<u32>> = gb.elements.iter().map(|b| b.plus.clone()).collect();
    set.into_iter().collect()
}

pub fn is_squarefree(monomials: &[Vec<u32>]) -> bool {
    monomials.iter().flatten().all(|&e| e <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_cut_binomial;
    use crate::cut::exponent_matrix;
    use crate::graph::Graph;

    const K4_QUARTIC: &str =
        "q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]";
    const C4_QUADRICS: [&str; 3] = [
        "q[|1234]*q[13|24] - q[1|234]*q[3|124]",
        "q[|1234]*q[13|24] - q[2|134]*q[4|123]",
        "q[|1234]*q[13|24] - q[12|34]*q[14|23]",
    ];

    fn toric(g: &Graph) -> GroebnerBasis {
        let a = exponent_matrix(g).unwrap();
        toric_groebner(&a, &TermOrder::degrevlex(a.ncols()), &ToricConfig::default()).unwrap()
    }

    #[test]
    fn kernels() {
        let k4 = exponent_matrix(&Graph::complete(4)).unwrap();
        let ker = lattice_kernel(&k4).unwrap();
        assert_eq!(ker.len(), 1);
        let quartic = parse_cut_binomial(K4_QUARTIC).unwrap().to_vector();
        let neg: Vec<i64> = quartic.iter().map(|x| -x).collect();
        assert!(ker[0] == quartic || ker[0] == neg);
        assert!(lattice_kernel(&exponent_matrix(&Graph::complete(3)).unwrap()).unwrap().is_empty());
        let a = ExponentMatrix::from_rows(vec![vec![1, 1]]).unwrap();
        let ker = lattice_kernel(&a).unwrap();
        assert!(ker == vec![vec![1, -1]] || ker == vec![vec![-1, 1]]);
    }

    #[test]
    fn k4_and_c4_bases() {
        let gb = toric(&Graph::complete(4));
        assert_eq!(gb.len(), 1);
        assert!(gb.elements()[0].same_up_to_sign(&parse_cut_binomial(K4_QUARTIC).unwrap()));

        let gb = toric(&Graph::cycle(4));
        assert_eq!(gb.len(), 3);
        let given: Vec<Binomial> = C4_QUADRICS.iter().map(|s| parse_cut_binomial(s).unwrap()).collect();
        let other = groebner(&given, 8, &TermOrder::degrevlex(8), &GbConfig::default()).unwrap();
        assert!(ideal_equal(&gb, &other));
        let partial = groebner(&given[..2], 8, &TermOrder::degrevlex(8), &GbConfig::default()).unwrap();
        assert!(!ideal_equal(&gb, &partial));
        assert!(!partial.contains(&given[2]));
        assert!(ideal_equal(&gb, &gb));
        assert!(gb.contains(&given[2]));
    }

    #[test]
    fn path_gives_one_determinant() {
        let gb = toric(&Graph::path(3));
        assert_eq!(gb.len(), 1);
        assert_eq!(gb.elements()[0].degree(), 2);
    }

    #[test]
    fn initial_ideals() {
        let gb = groebner(
            &[Binomial::new(vec![2, 0, 0], vec![0, 1, 1])],
            3,
            &TermOrder::lex(3),
            &GbConfig::default(),
        )
        .unwrap();
        let ini = initial_ideal(&gb);
        assert_eq!(ini, vec![vec![2, 0, 0]]);
        assert!(!is_squarefree(&ini));
    }
}
