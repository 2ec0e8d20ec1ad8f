use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde_json::{json, Value};

use super::{BinaryIndex, MAX_INDEX_LEN};
use crate::cut::{cut_monomial, edge_label, ExponentMatrix, VariableSet};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::partition::{full_mask, mask_to_vertices, Partition};
use crate::toric::{markov_basis, ToricConfig};

/// A split `C|D` of the taxa `1..=n`, stored with `n` in `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Split {
    n: u8,
    c: u64,
}

impl Split {
    /// Builds the split with the given block (either block may be given).
    pub fn new(n: usize, block: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in block {
            if v == 0 || v > n {
                return Err(Error::InvalidArgument(format!("taxon {v} outside 1..={n}")));
            }
            mask |= 1 << (v - 1);
        }
        Split::from_mask(n, mask)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if !(2..=MAX_INDEX_LEN).contains(&n) {
            return Err(Error::InvalidArgument(format!("taxon count {n} outside 2..={MAX_INDEX_LEN}")));
        }
        let full = full_mask(n);
        let mut c = mask & full;
        if c >> (n - 1) & 1 == 1 {
            c = full & !c;
        }
        if c == 0 {
            return Err(Error::InvalidArgument("a split needs two nonempty blocks".into()));
        }
        Ok(Split { n: n as u8, c })
    }

    /// Parses `C | D` with comma or whitespace separated taxa. The taxon
    /// count is the size of the union, which must be exactly `1..=n`.
    pub fn parse(s: &str) -> Result<Self> {
        let bar = s.find('|').ok_or_else(|| Error::parse(0, "missing `|` in split"))?;
        let block = |t: &str, offset: usize| -> Result<Vec<usize>> {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<usize>().map_err(|_| Error::parse(offset, format!("bad taxon `{x}`"))))
                .collect()
        };
        let c = block(&s[..bar], 0)?;
        let d = block(&s[bar + 1..], bar + 1)?;
        let n = c.len() + d.len();
        let mut seen = 0u64;
        for &v in c.iter().chain(&d) {
            if v == 0 || v > n || seen >> (v - 1) & 1 == 1 {
                return Err(Error::parse(0, format!("`{}` is not a split of 1..={n}", s.trim())));
            }
            seen |= 1 << (v - 1);
        }
        Split::new(n, &c)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Bitmask of `C` (bit `k-1` for taxon `k`).
    pub fn c_mask(&self) -> u64 {
        self.c
    }

    pub fn block_c(&self) -> Vec<usize> {
        mask_to_vertices(self.c)
    }

    pub fn block_d(&self) -> Vec<usize> {
        mask_to_vertices(full_mask(self.n()) & !self.c)
    }

    pub fn is_trivial(&self) -> bool {
        self.c.count_ones() == 1 || self.c.count_ones() as usize == self.n() - 1
    }

    /// `(k, l)` when `C` is the interval `k..=l`.
    pub fn interval(&self) -> Option<(usize, usize)> {
        let k = self.c.trailing_zeros() as usize + 1;
        let run = self.c >> (k - 1);
        (run & (run + 1) == 0).then(|| (k, k + run.count_ones() as usize - 1))
    }

    pub fn is_cyclic(&self) -> bool {
        self.interval().is_some()
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |b: Vec<usize>| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{} | {}", list(self.block_c()), list(self.block_d()))
    }
}

/// A list of distinct splits of the same taxa; positions give the
/// parameter names `u{i}_0, u{i}_1` (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSystem {
    n: usize,
    splits: Vec<Split>,
}

impl SplitSystem {
    pub fn new(n: usize, splits: Vec<Split>) -> Result<Self> {
        if !(2..=MAX_INDEX_LEN).contains(&n) {
            return Err(Error::InvalidArgument(format!("taxon count {n} outside 2..={MAX_INDEX_LEN}")));
        }
        for (i, s) in splits.iter().enumerate() {
            if s.n() != n {
                return Err(Error::InvalidArgument(format!("split {s} is not on {n} taxa")));
            }
            if splits[..i].contains(s) {
                return Err(Error::InvalidArgument(format!("repeated split {s}")));
            }
        }
        Ok(SplitSystem { n, splits })
    }

    /// One split per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut splits = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let s = Split::parse(line).map_err(|e| Error::parse(no + 1, format!("line {}: {e}", no + 1)))?;
            splits.push(s);
        }
        let n = splits.first().map(|s| s.n()).ok_or_else(|| Error::parse(0, "no splits given"))?;
        SplitSystem::new(n, splits)
    }

    /// Every split whose block `C` is an interval of `1..n-1`, ordered by
    /// the interval's ends.
    pub fn complete_cyclic(n: usize) -> Result<Self> {
        let mut splits = Vec::new();
        for k in 1..n {
            for l in k..n {
                let mask = full_mask(l) & !full_mask(k - 1);
                splits.push(Split::from_mask(n, mask)?);
            }
        }
        SplitSystem::new(n, splits)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn splits(&self) -> &[Split] {
        &self.splits
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.splits.iter().all(Split::is_cyclic)
    }

    pub fn to_text(&self) -> String {
        self.splits.iter().map(|s| format!("{s}\n")).collect()
    }
}

/// The polygon edge `{k-1, l}` of a cyclic split `C = k..=l`, where `0`
/// stands for `n`.
pub fn split_to_edge(s: &Split) -> Result<Edge> {
    let (k, l) = s.interval().ok_or_else(|| Error::InvalidArgument(format!("split {s} is not cyclic")))?;
    let a = if k == 1 { s.n() } else { k - 1 };
    Ok((a.min(l), a.max(l)))
}

pub fn graph_of_splits(sigma: &SplitSystem) -> Result<Graph> {
    let edges = sigma.splits.iter().map(split_to_edge).collect::<Result<Vec<_>>>()?;
    Graph::new(sigma.n, edges)
}

/// `j_k = 1` iff the polygon side `{k-1, k}` crosses the partition.
pub fn tau(p: &Partition) -> BinaryIndex {
    let n = p.n();
    let mask = (1..=n).filter(|&k| p.separates(if k == 1 { n } else { k - 1 }, k)).fold(0, |m, k| m | 1 << (k - 1));
    BinaryIndex::from_support(n, mask)
}

pub fn tau_inv(j: &BinaryIndex) -> Result<Partition> {
    let n = j.len();
    if n == 0 || n > MAX_INDEX_LEN || j.parity() == 1 {
        return Err(Error::InvalidArgument(format!("`{j}` is not a nonempty even string")));
    }
    // walk around the polygon from vertex n, which stays in block B
    let mut side = 0u8;
    let mut mask = 0u64;
    for k in 1..n {
        side ^= j.bit(k);
        if side == 1 {
            mask |= 1 << (k - 1);
        }
    }
    Ok(Partition::from_mask(n, mask))
}

/// The `2^(n-1)` strings of even weight, in value order.
pub fn even_indices(n: usize) -> Vec<BinaryIndex> {
    BinaryIndex::all(n).filter(|j| j.parity() == 0).collect()
}

fn parity_on(j: &BinaryIndex, s: &Split) -> i64 {
    ((j.support() & s.c_mask()).count_ones() % 2) as i64
}

/// Rows `u{i}_0, u{i}_1` per split, columns `f_j` for even `j`; the column
/// of `f_j` has a 1 in row `u{i}_a` where `a` is the weight of `j` on `C_i`
/// mod 2.
pub fn jc_matrix(sigma: &SplitSystem) -> Result<ExponentMatrix> {
    if sigma.is_empty() {
        return Err(Error::InvalidArgument("the split system is empty".into()));
    }
    let cols = even_indices(sigma.n);
    let vars = VariableSet::named(cols.iter().map(|j| format!("f{j}")).collect());
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (i, s) in sigma.splits.iter().enumerate() {
        for a in 0..2 {
            rows.push(format!("u{}_{a}", i + 1));
            entries.push(cols.iter().map(|j| (parity_on(j, s) == a) as i64).collect());
        }
    }
    ExponentMatrix::new(rows, vars, entries)
}

/// Checks, column by column, that `tau` carries the cut parametrization of
/// the polygon graph onto the group-based parametrization, with `u{i}_0`
/// read as `t_e` and `u{i}_1` as `s_e` for the edge `e` of split `i`.
pub fn verify_cutsplit(sigma: &SplitSystem) -> Result<bool> {
    if !sigma.is_cyclic() {
        return Err(Error::InvalidArgument("the split system is not cyclic".into()));
    }
    let n = sigma.n;
    let images: Vec<BinaryIndex> = Partition::all(n).map(|p| tau(&p)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted != even_indices(n) {
        return Ok(false);
    }
    if sigma.is_empty() {
        return Ok(true);
    }
    let g = graph_of_splits(sigma)?;
    let a = jc_matrix(sigma)?;
    let column: HashMap<BinaryIndex, usize> = sorted.iter().enumerate().map(|(c, &j)| (j, c)).collect();
    let edge_rows: Vec<usize> = sigma
        .splits
        .iter()
        .map(|s| {
            let (x, y) = split_to_edge(s)?;
            Ok(g.edge_index(x, y).expect("edge of its own split"))
        })
        .collect::<Result<_>>()?;
    let e = a.entries();
    Ok(Partition::all(n).zip(&images).all(|(p, j)| {
        let c = column[j];
        let cm = cut_monomial(&g, &p);
        edge_rows.iter().enumerate().all(|(i, &r)| e[2 * i][c] == cm[2 * r + 1] && e[2 * i + 1][c] == cm[2 * r])
    }))
}

/// Lines `q4|123 -> f1001 -> u4_0 u2_0 …`, one per partition in key order,
/// with the parameters listed in the edge order of the polygon graph.
pub fn mapping_table(sigma: &SplitSystem) -> Result<Vec<String>> {
    if sigma.is_empty() {
        return Err(Error::InvalidArgument("the split system is empty".into()));
    }
    let mut by_edge: Vec<(Edge, usize)> =
        sigma.splits.iter().enumerate().map(|(i, s)| Ok((split_to_edge(s)?, i))).collect::<Result<_>>()?;
    by_edge.sort_unstable();
    Ok(Partition::all(sigma.n)
        .map(|p| {
            let j = tau(&p);
            let us: Vec<String> =
                by_edge.iter().map(|&(_, i)| format!("u{}_{}", i + 1, parity_on(&j, &sigma.splits[i]))).collect();
            format!("q{p} -> f{j} -> {}", us.join(" "))
        })
        .collect())
}

/// `{n, r, cyclic, graph, degreeHistogram}` for the model of a split
/// system; `graph` is null unless the system is cyclic.
pub fn split_report(sigma: &SplitSystem, cfg: &ToricConfig) -> Result<Value> {
    let graph = if sigma.is_cyclic() {
        let g = graph_of_splits(sigma)?;
        json!(g.edges().iter().map(|&(a, b)| edge_label(a, b, g.n())).collect::<Vec<_>>())
    } else {
        Value::Null
    };
    let (hist, certified) = if sigma.is_empty() {
        (BTreeMap::new(), true)
    } else {
        let mb = markov_basis(&jc_matrix(sigma)?, cfg)?;
        (mb.degree_histogram, mb.certified)
    };
    Ok(json!({
        "n": sigma.n,
        "r": sigma.len(),
        "cyclic": sigma.is_cyclic(),
        "graph": graph,
        "degreeHistogram": hist,
        "certified": certified,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Leaf(usize),
    Inner(Vec<Node>),
}

/// A tree with labeled leaves, written as nested parentheses such as
/// `((1,2),3,(4,5))`. A root with two children stands for a single edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafTree {
    n: usize,
    root: Node,
}

struct TreeParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn node(&mut self) -> Result<Node> {
        self.skip_ws();
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let mut children = vec![self.node()?];
                loop {
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b',') => {
                            self.pos += 1;
                            children.push(self.node()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Node::Inner(children));
                        }
                        _ => return Err(Error::parse(self.pos, "expected `,` or `)`")),
                    }
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                s.parse().map(Node::Leaf).map_err(|_| Error::parse(start, format!("bad leaf `{s}`")))
            }
            _ => Err(Error::parse(self.pos, "expected `(` or a leaf label")),
        }
    }
}

impl LeafTree {
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = TreeParser { src: s.as_bytes(), pos: 0 };
        let root = p.node()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        let Node::Inner(children) = &root else {
            return Err(Error::InvalidArgument("a tree needs at least two leaves".into()));
        };
        if children.len() < 2 {
            return Err(Error::InvalidArgument("the root needs at least two children".into()));
        }
        fn check(node: &Node, leaves: &mut Vec<usize>) -> Result<()> {
            match node {
                Node::Leaf(v) => leaves.push(*v),
                Node::Inner(c) => {
                    if c.len() < 2 {
                        return Err(Error::InvalidArgument("an inner vertex has degree two".into()));
                    }
                    for x in c {
                        check(x, leaves)?;
                    }
                }
            }
            Ok(())
        }
        let mut leaves = Vec::new();
        for c in children {
            check(c, &mut leaves)?;
        }
        let n = leaves.len();
        leaves.sort_unstable();
        if leaves != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!("leaf labels are not a permutation of 1..={n}")));
        }
        if n > MAX_INDEX_LEN {
            return Err(Error::InvalidArgument(format!("at most {MAX_INDEX_LEN} leaves")));
        }
        Ok(LeafTree { n, root })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl fmt::Display for LeafTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write(node: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match node {
                Node::Leaf(v) => write!(f, "{v}"),
                Node::Inner(c) => {
                    write!(f, "(")?;
                    for (i, x) in c.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write(x, f)?;
                    }
                    write!(f, ")")
                }
            }
        }
        write(&self.root, f)
    }
}

/// The split of each edge of the tree, in depth-first order.
pub fn splits_of_tree(t: &LeafTree) -> Result<SplitSystem> {
    fn walk(node: &Node, n: usize, out: &mut Vec<Split>) -> Result<u64> {
        let mask = match node {
            Node::Leaf(v) => 1u64 << (v - 1),
            Node::Inner(c) => {
                let mut m = 0;
                for x in c {
                    m |= walk(x, n, out)?;
                }
                m
            }
        };
        let s = Split::from_mask(n, mask)?;
        if !out.contains(&s) {
            out.push(s);
        }
        Ok(mask)
    }
    let mut out = Vec::new();
    if let Node::Inner(children) = &t.root {
        for c in children {
            walk(c, t.n, &mut out)?;
        }
    }
    SplitSystem::new(t.n, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_canonical_form_and_intervals() {
        let s = Split::parse("3,4 | 1,2").unwrap();
        assert_eq!(s.block_c(), vec![1, 2]);
        assert_eq!(s.interval(), Some((1, 2)));
        assert_eq!(s.to_string(), "1,2 | 3,4");
        let t = Split::parse("2,4 | 1,3").unwrap();
        assert_eq!(t.block_c(), vec![1, 3]);
        assert!(!t.is_cyclic());
        assert!(Split::parse("1,2 | 2,3").is_err());
        assert!(Split::parse("1,2,3 |").is_err());
    }

    #[test]
    fn tau_round_trip() {
        for n in 1..=6 {
            for p in Partition::all(n) {
                let j = tau(&p);
                assert_eq!(j.parity(), 0);
                assert_eq!(tau_inv(&j).unwrap(), p);
            }
        }
        assert!(tau_inv(&BinaryIndex::parse("100").unwrap()).is_err());
    }

    #[test]
    fn tree_parsing() {
        let t = LeafTree::parse(" ((1,2), 3,(4,5))").unwrap();
        assert_eq!(t.to_string(), "((1,2),3,(4,5))");
        assert_eq!(t.n(), 5);
        assert!(LeafTree::parse("((1),2,3)").is_err());
        assert!(LeafTree::parse("(1,2,4)").is_err());
        assert!(LeafTree::parse("(1,2").is_err());
        // a root of degree two is one edge
        let r = splits_of_tree(&LeafTree::parse("((1,2),(3,4))").unwrap()).unwrap();
        assert_eq!(r.len(), 5);
    }
}
