//! Generators and Gröbner bases of cut ideals of clique sums, assembled
//! from the two summands: lifted binomials plus the quadrics `Quad`.
//!
//! A sum is described by two graphs on ascending label lists `v1`, `v2`
//! whose intersection is the separator. The glued graph lives on the
//! sorted union of the labels, relabeled `1..=N`; binomials of each summand
//! use that summand's own `1..=|V_i|` labels.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::binomial::Binomial;
use crate::cut::{exponent_matrix, ExponentMatrix, VariableSet};
use crate::error::{Error, Result};
use crate::graph::{clique_sum_decompose, Graph, SumTree};
use crate::partition::{full_mask, mask_to_vertices, Partition};
use crate::toric::{groebner, ideal_equal, is_groebner, GbConfig, GroebnerBasis, TermOrder, ToricConfig};

/// Most lifted binomials `lift_all` will produce.
pub const LIFT_BUDGET: u64 = 1 << 20;

/// Which summand a binomial comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    fn number(self) -> u8 {
        match self {
            Side::First => 1,
            Side::Second => 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SumContext {
    g1: Graph,
    g2: Graph,
    g: Graph,
    labels: Vec<usize>,
    // positions (1-based, in the glued graph) of each summand's vertices
    pos1: Vec<usize>,
    pos2: Vec<usize>,
    sep_mask: u64,
    priv1: u64,
    priv2: u64,
    matrix: ExponentMatrix,
}

impl SumContext {
    /// `g1` and `g2` carry the labels `v1` and `v2` (ascending, one per
    /// vertex). The shared labels must form a clique of size 1 to 3 in both.
    pub fn new(g1: &Graph, v1: &[usize], g2: &Graph, v2: &[usize]) -> Result<Self> {
        for (g, v) in [(g1, v1), (g2, v2)] {
            if g.n() != v.len() || v.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument("summand labels must be ascending, one per vertex".into()));
            }
        }
        let mut labels: Vec<usize> = v1.iter().chain(v2).copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let pos = |l: usize| labels.binary_search(&l).unwrap() + 1;
        let pos1: Vec<usize> = v1.iter().map(|&l| pos(l)).collect();
        let pos2: Vec<usize> = v2.iter().map(|&l| pos(l)).collect();
        let m1 = pos1.iter().fold(0u64, |m, &p| m | 1 << (p - 1));
        let m2 = pos2.iter().fold(0u64, |m, &p| m | 1 << (p - 1));
        let sep_mask = m1 & m2;
        let k = sep_mask.count_ones();
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "the summands share {k} vertices; clique sums need 1 to 3"
            )));
        }
        let local_sep = |p: &[usize]| -> Vec<usize> {
            (0..p.len()).filter(|&i| sep_mask >> (p[i] - 1) & 1 == 1).map(|i| i + 1).collect()
        };
        if !g1.is_clique(&local_sep(&pos1)) || !g2.is_clique(&local_sep(&pos2)) {
            return Err(Error::InvalidArgument("the shared vertices do not form a clique in both summands".into()));
        }
        let edges = g1
            .edges()
            .iter()
            .map(|&(a, b)| (pos1[a - 1], pos1[b - 1]))
            .chain(g2.edges().iter().map(|&(a, b)| (pos2[a - 1], pos2[b - 1])));
        let g = Graph::from_multigraph(labels.len(), edges.collect::<Vec<_>>());
        let matrix = exponent_matrix(&g)?;
        Ok(SumContext {
            g1: g1.clone(),
            g2: g2.clone(),
            g,
            labels,
            pos1,
            pos2,
            sep_mask,
            priv1: m1 & !m2,
            priv2: m2 & !m1,
            matrix,
        })
    }

    /// Glues `g2` onto `g1` along `separator` (labels present in both).
    /// `g1` keeps its labels; the other vertices of `g2` become
    /// `n1+1, n1+2, …` in increasing order.
    pub fn glue(g1: &Graph, g2: &Graph, separator: &[usize]) -> Result<Self> {
        let n1 = g1.n();
        if separator.iter().any(|&v| v == 0 || v > n1 || v > g2.n()) {
            return Err(Error::InvalidArgument("separator vertex missing from a summand".into()));
        }
        let mut next = n1;
        let relabel: Vec<usize> = (1..=g2.n())
            .map(|v| {
                if separator.contains(&v) {
                    v
                } else {
                    next += 1;
                    next
                }
            })
            .collect();
        // g2 on ascending labels
        let mut order: Vec<usize> = (0..g2.n()).collect();
        order.sort_by_key(|&i| relabel[i]);
        let mut rank = vec![0usize; g2.n()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r + 1;
        }
        let g2s = Graph::new(g2.n(), g2.edges().iter().map(|&(a, b)| (rank[a - 1], rank[b - 1])))?;
        let v2: Vec<usize> = order.iter().map(|&i| relabel[i]).collect();
        let v1: Vec<usize> = (1..=n1).collect();
        SumContext::new(g1, &v1, &g2s, &v2)
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    /// The glued graph on `1..=N`.
    pub fn glued(&self) -> &Graph {
        &self.g
    }

    /// Original labels of the glued graph's vertices.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn separator(&self) -> Vec<usize> {
        mask_to_vertices(self.sep_mask)
    }

    pub fn vars(&self) -> &VariableSet {
        self.matrix.vars()
    }

    pub fn exponent_matrix(&self) -> &ExponentMatrix {
        &self.matrix
    }

    fn n(&self) -> usize {
        self.g.n()
    }

    fn positions(&self, side: Side) -> &[usize] {
        match side {
            Side::First => &self.pos1,
            Side::Second => &self.pos2,
        }
    }

    /// Private vertices of the other summand, the ones a lift distributes.
    fn lift_vertices(&self, side: Side) -> u64 {
        match side {
            Side::First => self.priv2,
            Side::Second => self.priv1,
        }
    }

    fn local_n(&self, side: Side) -> usize {
        self.positions(side).len()
    }

    /// Glued-graph mask of a summand-local mask.
    fn embed(&self, side: Side, local: u64) -> u64 {
        self.positions(side)
            .iter()
            .enumerate()
            .filter(|&(i, _)| local >> i & 1 == 1)
            .fold(0, |m, (_, &p)| m | 1 << (p - 1))
    }

    /// Variable map of the glued ring onto a summand's ring (restriction).
    pub fn restriction_map(&self, side: Side) -> Vec<usize> {
        let pos = self.positions(side);
        Partition::all(self.n()).map(|p| p.restrict(pos).key() as usize).collect()
    }

    fn var(&self, mask: u64) -> usize {
        Partition::from_mask(self.n(), mask).key() as usize
    }

    /// Orientation of a glued variable with the largest separator vertex
    /// in block B: `(separator part, first private part, second private
    /// part)` of block A.
    fn oriented(&self, key: usize) -> (u64, u64, u64) {
        let top = 63 - self.sep_mask.leading_zeros();
        let mut a = key as u64;
        if a >> top & 1 == 1 {
            a = full_mask(self.n()) & !a;
        }
        (a & self.sep_mask, a & self.priv1, a & self.priv2)
    }
}

/// A binomial as two ordered lists of block-A masks (summand-local labels)
/// whose `i`-th entries agree on the separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aligned {
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
}

fn factors(u: &[u32]) -> Vec<u64> {
    u.iter().enumerate().flat_map(|(k, &e)| std::iter::repeat_n(k as u64, e as usize)).collect()
}

/// Pairs up the factors of `f` (a binomial of the given summand) so that
/// paired partitions restrict to the same ordered partition of the
/// separator. Factors are matched in key order; factors of `f.plus` are
/// oriented with the summand's first vertex in block B.
pub fn align(f: &Binomial, ctx: &SumContext, side: Side) -> Result<Aligned> {
    let pos = ctx.positions(side);
    let ln = pos.len();
    if f.len() != 1 << (ln - 1) {
        return Err(Error::InvalidArgument("binomial over the wrong summand ring".into()));
    }
    let sep: u64 = (0..ln).filter(|&i| ctx.sep_mask >> (pos[i] - 1) & 1 == 1).fold(0, |m, i| m | 1 << i);
    let full = full_mask(ln);
    // the summand's first vertex goes in block B of each leading factor
    let plus: Vec<u64> = factors(&f.plus).into_iter().map(|a| if a & 1 == 1 { full & !a } else { a }).collect();
    let mut rest = factors(&f.minus);
    if plus.len() != rest.len() {
        return Err(Error::Verification("binomial is not homogeneous".into()));
    }
    let mut minus = Vec::with_capacity(plus.len());
    for &a in &plus {
        let want = a & sep;
        let k = rest
            .iter()
            .position(|&c| c & sep == want || (full & !c) & sep == want)
            .ok_or_else(|| Error::Verification("factors cannot be aligned on the separator".into()))?;
        let c = rest.remove(k);
        minus.push(if c & sep == want { c } else { full & !c });
    }
    Ok(Aligned { plus, minus })
}

/// `f^{EF}`: factor `i` gains the block `ef[i]` (a mask over the glued
/// graph's vertices, inside the other summand's private part) on its A
/// side. The result is checked against the glued graph's matrix.
pub fn lift(f: &Aligned, ef: &[u64], ctx: &SumContext, side: Side) -> Result<Binomial> {
    if ef.len() != f.plus.len() {
        return Err(Error::InvalidArgument(format!(
            "{} blocks given for a binomial of degree {}",
            ef.len(),
            f.plus.len()
        )));
    }
    let allowed = ctx.lift_vertices(side);
    if ef.iter().any(|&e| e & !allowed != 0) {
        return Err(Error::InvalidArgument("lift block outside the other summand's private vertices".into()));
    }
    let m = 1usize << (ctx.n() - 1);
    let mut plus = vec![0u32; m];
    let mut minus = vec![0u32; m];
    for ((&a, &c), &e) in f.plus.iter().zip(&f.minus).zip(ef) {
        plus[ctx.var(ctx.embed(side, a) | e)] += 1;
        minus[ctx.var(ctx.embed(side, c) | e)] += 1;
    }
    let b = Binomial::new(plus, minus);
    if !ctx.matrix.contains(&b) {
        return Err(Error::Verification("lifted binomial outside the cut ideal".into()));
    }
    Ok(b)
}

/// Where an element of a composed set comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `source` indexes the summand's input list.
    Lift { side: Side, source: usize, ef: Vec<u64> },
    /// A minor of the matrix for this separator block.
    Quad { block: u64 },
}

#[derive(Clone, Debug)]
pub struct Composed {
    pub binomial: Binomial,
    pub provenance: Provenance,
}

fn submasks(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = 0u64;
    loop {
        out.push(s);
        if s == mask {
            return out;
        }
        s = (s.wrapping_sub(mask)) & mask;
    }
}

fn for_each_list(subs: &[u64], d: usize, mut f: impl FnMut(&[u64]) -> Result<()>) -> Result<()> {
    let mut idx = vec![0usize; d];
    let mut cur: Vec<u64> = vec![subs[0]; d];
    loop {
        f(&cur)?;
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < subs.len() {
                cur[i] = subs[idx[i]];
                break;
            }
            idx[i] = 0;
            cur[i] = subs[0];
        }
    }
}

/// Every `f^{EF}` for `f` in `fs` (binomials of the given summand). Marks
/// are kept: the lift of `f.plus` is the `plus` side. Duplicates up to
/// sign and zero binomials are dropped.
pub fn lift_all(fs: &[Binomial], ctx: &SumContext, side: Side) -> Result<Vec<Composed>> {
    let subs = submasks(ctx.lift_vertices(side));
    let mut total = 0u64;
    for f in fs {
        let d = f.degree();
        total = total.saturating_add((subs.len() as u64).saturating_pow(d));
    }
    if total > LIFT_BUDGET {
        return Err(Error::Budget(format!("{total} lifts exceed the budget of {LIFT_BUDGET}")));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (source, f) in fs.iter().enumerate() {
        let a = align(f, ctx, side)?;
        for_each_list(&subs, a.plus.len(), |ef| {
            let b = lift(&a, ef, ctx, side)?;
            if !b.is_zero() && seen.insert(b.canonical()) {
                out.push(Composed { binomial: b, provenance: Provenance::Lift { side, source, ef: ef.to_vec() } });
            }
            Ok(())
        })?;
    }
    Ok(out)
}

/// The 2×2 minors of the matrices `(q_{A∪C1∪C2 | …})`, one matrix per
/// unordered partition `A|B` of the separator, with rows indexed by
/// `C2 ⊆ V2∖V1` and columns by `C1 ⊆ V1∖V2`. Each minor is written with the
/// main-diagonal term first.
pub fn quad_set(ctx: &SumContext) -> Vec<Composed> {
    let top = 63 - ctx.sep_mask.leading_zeros();
    let rows = submasks(ctx.priv2);
    let cols = submasks(ctx.priv1);
    let m = 1usize << (ctx.n() - 1);
    let mut out = Vec::new();
    for a in submasks(ctx.sep_mask & !(1 << top)) {
        let x = |r: u64, c: u64| ctx.var(a | r | c);
        for (i, &r1) in rows.iter().enumerate() {
            for &r2 in &rows[i + 1..] {
                for (j, &c1) in cols.iter().enumerate() {
                    for &c2 in &cols[j + 1..] {
                        let mut plus = vec![0u32; m];
                        let mut minus = vec![0u32; m];
                        plus[x(r1, c1)] += 1;
                        plus[x(r2, c2)] += 1;
                        minus[x(r1, c2)] += 1;
                        minus[x(r2, c1)] += 1;
                        out.push(Composed { binomial: Binomial::new(plus, minus), provenance: Provenance::Quad { block: a } });
                    }
                }
            }
        }
    }
    out
}

/// `Lift(F1) ∪ Lift(F2) ∪ Quad`, deduplicated up to sign, every element
/// checked to lie in the glued graph's cut ideal.
pub fn compose_generating_set(ctx: &SumContext, f1: &[Binomial], f2: &[Binomial]) -> Result<Vec<Composed>> {
    let mut out = lift_all(f1, ctx, Side::First)?;
    out.extend(lift_all(f2, ctx, Side::Second)?);
    out.extend(quad_set(ctx));
    let mut seen = BTreeSet::new();
    out.retain(|c| seen.insert(c.binomial.canonical()));
    if let Some(bad) = out.iter().find(|c| !ctx.matrix.contains(&c.binomial)) {
        return Err(Error::Verification(format!("composed binomial {:?} outside the cut ideal", bad.provenance)));
    }
    Ok(out)
}

fn block_string(mask: u64, within: u64, labels: &[usize]) -> String {
    let names = |m: u64| -> String {
        mask_to_vertices(m).iter().map(|&p| labels[p - 1].to_string()).collect::<Vec<_>>().join(",")
    };
    format!("{}|{}", names(mask & within), names(within & !mask))
}

/// The standard binomial JSON plus `side` and `EF` tags.
pub fn composed_json(c: &Composed, ctx: &SumContext) -> Value {
    let mut v = c.binomial.to_json(ctx.vars());
    match &c.provenance {
        Provenance::Lift { side, source, ef } => {
            let within = ctx.lift_vertices(*side);
            v["side"] = json!(side.number());
            v["source"] = json!(source);
            v["EF"] = json!(ef.iter().map(|&e| block_string(e, within, ctx.labels())).collect::<Vec<_>>());
        }
        Provenance::Quad { block } => {
            v["side"] = json!("quad");
            v["EF"] = json!([block_string(*block, ctx.sep_mask, ctx.labels())]);
        }
    }
    v
}

/// A Gröbner basis assembled from the summands' bases, with the origin of
/// each element.
#[derive(Clone, Debug)]
pub struct ComposedGroebner {
    pub basis: GroebnerBasis,
    pub provenance: Vec<Provenance>,
}

fn tiebreaks(ctx: &SumContext) -> Vec<TermOrder> {
    let m = 1usize << (ctx.n() - 1);
    let keyed = |f: &dyn Fn((u64, u64, u64)) -> (u64, u64, u64)| {
        let mut v: Vec<usize> = (0..m).collect();
        v.sort_by_key(|&k| (f(ctx.oriented(k)), k));
        v
    };
    vec![
        TermOrder::Degrevlex { varorder: keyed(&|(s, a, b)| (s, a, b)) },
        TermOrder::Degrevlex { varorder: keyed(&|(s, a, b)| (s, b, a)) },
        TermOrder::Lex { varorder: keyed(&|(s, a, b)| (s, a, b)) },
    ]
}

/// A Gröbner basis of the glued cut ideal from reduced bases of the two
/// summands. Lifts keep the marks of their sources; the order compares
/// restrictions to each summand under that summand's order, then breaks
/// ties with an order making the quadrics a Gröbner basis. The result is
/// checked with Buchberger's criterion; a failure is an error.
pub fn compose_groebner(ctx: &SumContext, gb1: &GroebnerBasis, gb2: &GroebnerBasis) -> Result<ComposedGroebner> {
    let m = 1usize << (ctx.n() - 1);
    let stages = vec![
        (ctx.restriction_map(Side::First), 1usize << (ctx.local_n(Side::First) - 1), gb1.order().clone()),
        (ctx.restriction_map(Side::Second), 1usize << (ctx.local_n(Side::Second) - 1), gb2.order().clone()),
    ];
    let lifts1 = lift_all(gb1.elements(), ctx, Side::First)?;
    let lifts2 = lift_all(gb2.elements(), ctx, Side::Second)?;
    let quads = quad_set(ctx);
    for tiebreak in tiebreaks(ctx) {
        let order = TermOrder::Product { stages: stages.clone(), tiebreak: Box::new(tiebreak) };
        order.validate(m)?;
        let mut seen = BTreeSet::new();
        let mut marked = Vec::new();
        let mut provenance = Vec::new();
        let mut marks_kept = true;
        for c in lifts1.iter().chain(&lifts2).chain(&quads) {
            if !seen.insert(c.binomial.canonical()) {
                continue;
            }
            let b = match order.cmp(&c.binomial.plus, &c.binomial.minus) {
                std::cmp::Ordering::Greater => c.binomial.clone(),
                _ => {
                    // lifts must keep the leading terms of their sources
                    marks_kept &= matches!(c.provenance, Provenance::Quad { .. });
                    c.binomial.negate()
                }
            };
            marked.push(b);
            provenance.push(c.provenance.clone());
        }
        if marks_kept && is_groebner(&marked, &order) {
            return Ok(ComposedGroebner { basis: GroebnerBasis::from_marked(order, m, marked), provenance });
        }
    }
    Err(Error::Verification("the composed set is not a Gröbner basis under any tried order".into()))
}

/// True iff `m` generates the cut ideal of `g`: every element lies in the
/// kernel and the ideal it generates contains the toric Gröbner basis.
pub fn verify_generates(m: &[Binomial], g: &Graph) -> Result<bool> {
    let a = exponent_matrix(g)?;
    if m.iter().any(|b| b.len() != a.ncols() || !a.contains(b)) {
        return Err(Error::Verification("a binomial lies outside the cut ideal".into()));
    }
    let order = TermOrder::degrevlex(a.ncols());
    let cfg = ToricConfig::default();
    let toric = crate::toric::toric_groebner(&a, &order, &cfg)?;
    let mine = groebner(m, a.ncols(), &order, &GbConfig::default())?;
    Ok(ideal_equal(&mine, &toric))
}

fn piece_tree<T>(
    g: &Graph,
    leaf: &mut impl FnMut(&Graph) -> Result<T>,
    combine: &mut impl FnMut(&SumContext, T, T) -> Result<T>,
) -> Result<T> {
    let dec = clique_sum_decompose(g);
    fn walk<T>(
        t: &SumTree,
        g: &Graph,
        dec: &crate::graph::CliqueSumDecomposition,
        leaf: &mut impl FnMut(&Graph) -> Result<T>,
        combine: &mut impl FnMut(&SumContext, T, T) -> Result<T>,
    ) -> Result<T> {
        match t {
            SumTree::Leaf(i) => leaf(&dec.pieces[*i].graph),
            SumTree::Sum { left, right, .. } => {
                let (vl, vr) = (left.vertices(&dec.pieces), right.vertices(&dec.pieces));
                let a = walk(left, g, dec, leaf, combine)?;
                let b = walk(right, g, dec, leaf, combine)?;
                let ctx = SumContext::new(&g.induced_subgraph(&vl)?, &vl, &g.induced_subgraph(&vr)?, &vr)?;
                combine(&ctx, a, b)
            }
        }
    }
    walk(&dec.tree, g, &dec, leaf, combine)
}

/// Generators of `I_g` assembled along a clique-sum decomposition, each
/// piece handled by `piece`.
pub fn compose_tree_generators(
    g: &Graph,
    mut piece: impl FnMut(&Graph) -> Result<Vec<Binomial>>,
) -> Result<Vec<Binomial>> {
    piece_tree(g, &mut piece, &mut |ctx, a, b| {
        Ok(compose_generating_set(ctx, &a, &b)?.into_iter().map(|c| c.binomial).collect())
    })
}

/// A Gröbner basis of `I_g` assembled along a clique-sum decomposition.
pub fn compose_tree_groebner(
    g: &Graph,
    mut piece: impl FnMut(&Graph) -> Result<GroebnerBasis>,
) -> Result<GroebnerBasis> {
    piece_tree(g, &mut piece, &mut |ctx, a, b| Ok(compose_groebner(ctx, &a, &b)?.basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::parse_cut_binomial;
    use crate::toric::markov_basis;

    fn k4_quartic() -> Binomial {
        parse_cut_binomial("q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]").unwrap()
    }

    #[test]
    fn path_is_one_determinant() {
        let ctx = SumContext::glue(&Graph::path(2), &Graph::path(2), &[2]).unwrap();
        assert_eq!(ctx.glued().edges(), &[(1, 2), (2, 3)]);
        let q = quad_set(&ctx);
        assert_eq!(q.len(), 1);
        let expected = parse_cut_binomial("q[|123]*q[2|13] - q[1|23]*q[12|3]").unwrap();
        assert!(q[0].binomial.same_up_to_sign(&expected));
    }

    #[test]
    fn degree_one_alignment_and_empty_lift() {
        let ctx = SumContext::glue(&Graph::complete(4), &Graph::complete(4), &[2, 3, 4]).unwrap();
        let f = k4_quartic();
        let a = align(&f, &ctx, Side::First).unwrap();
        for (x, y) in a.plus.iter().zip(&a.minus) {
            assert_eq!(x & 0b1110, y & 0b1110);
        }
        assert!(lift_all(&[], &ctx, Side::First).unwrap().is_empty());
        assert!(lift(&a, &[0, 0], &ctx, Side::First).is_err());
    }

    #[test]
    fn rejects_bad_separators() {
        let c4 = Graph::cycle(4);
        assert!(SumContext::glue(&c4, &c4, &[1, 3]).is_err());
        assert!(SumContext::glue(&Graph::complete(4), &Graph::complete(4), &[1, 2, 3, 4]).is_err());
    }

    #[test]
    fn triangle_and_edge() {
        let ctx = SumContext::glue(&Graph::complete(3), &Graph::path(2), &[2]).unwrap();
        let m = compose_generating_set(&ctx, &[], &[]).unwrap();
        assert_eq!(m.len(), 6);
        let mb = markov_basis(ctx.exponent_matrix(), &ToricConfig::default()).unwrap();
        assert_eq!(mb.len(), 6);
        let gens: Vec<Binomial> = m.into_iter().map(|c| c.binomial).collect();
        assert!(verify_generates(&gens, ctx.glued()).unwrap());
    }
}
