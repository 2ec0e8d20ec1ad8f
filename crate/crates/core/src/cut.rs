//! The cut map: partition variables `q[A|B]` sent to products of `s_e`
//! (crossing edges) and `t_e` (non-crossing edges).

use std::fmt::Write as _;

use crate::arith;
use crate::binomial::Binomial;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;

/// Largest vertex count accepted by [`exponent_matrix`].
pub const MAX_MATRIX_VERTICES: usize = 20;

/// Names of the columns (ring variables) of an exponent matrix.
///
/// Cut variable sets are indexed by canonical partition key, so variable
/// `k` is `q[A|B]` with block-A bitmask `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableSet {
    names: Vec<String>,
    cut_n: Option<usize>,
}

impl VariableSet {
    pub fn cut(n: usize) -> Self {
        let names = Partition::all(n).map(|p| format!("q[{p}]")).collect();
        VariableSet { names, cut_n: Some(n) }
    }

    pub fn named(names: Vec<String>) -> Self {
        VariableSet { names, cut_n: None }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Vertex count when this is a set of partition variables.
    pub fn cut_vertices(&self) -> Option<usize> {
        self.cut_n
    }

    /// Index of a variable given by name. Partition variables are matched
    /// as partitions, so `q[34|12]` and `q[12|34]` both resolve.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        if let Some(n) = self.cut_n {
            let inner = name.strip_prefix("q[")?.strip_suffix(']')?;
            let p = Partition::parse(inner).ok()?;
            return (p.n() == n).then_some(p.key() as usize);
        }
        self.names.iter().position(|s| s == name)
    }
}

/// A nonnegative integer matrix whose columns are the exponent vectors of a
/// monomial map. Every matrix built here is graded by total degree: all
/// column sums agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMatrix {
    rows: Vec<String>,
    vars: VariableSet,
    entries: Vec<Vec<i64>>,
}

impl ExponentMatrix {
    pub fn new(rows: Vec<String>, vars: VariableSet, entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != vars.len()) {
            return Err(Error::InvalidArgument("matrix shape does not match its labels".into()));
        }
        if entries.iter().flatten().any(|&x| x < 0) {
            return Err(Error::InvalidArgument("exponent matrices are nonnegative".into()));
        }
        Ok(ExponentMatrix { rows, vars, entries })
    }

    /// Unlabeled matrix with variables `x1..xm`.
    pub fn from_rows(entries: Vec<Vec<i64>>) -> Result<Self> {
        let m = entries.first().map_or(0, Vec::len);
        let rows = (1..=entries.len()).map(|i| format!("r{i}")).collect();
        let vars = VariableSet::named((1..=m).map(|i| format!("x{i}")).collect());
        ExponentMatrix::new(rows, vars, entries)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.vars.len()
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[j]).collect()
    }

    pub fn rank(&self) -> usize {
        arith::rank(&self.entries)
    }

    /// `A·u` for an exponent vector `u`.
    pub fn multidegree(&self, u: &[u32]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|r| r.iter().zip(u).map(|(&a, &x)| a * x as i64).sum())
            .collect()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        b.len() == self.ncols() && self.multidegree(&b.plus) == self.multidegree(&b.minus)
    }

    /// Krull codimension of the toric ideal: columns minus rank.
    pub fn codim(&self) -> usize {
        self.ncols() - self.rank()
    }

    /// Integer CSV with a header row of variable names; each data row
    /// starts with its row label.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row");
        for v in self.vars.names() {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(label);
            for x in row {
                write!(out, ",{x}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// `δ_{A|B}`: 1 on edges crossing the partition, in edge order.
pub fn cut_vector(g: &Graph, p: &Partition) -> Vec<i64> {
    g.edges().iter().map(|&(i, j)| p.separates(i, j) as i64).collect()
}

/// Exponent vector of the image of `q[A|B]` over the rows
/// `s_e, t_e` (per edge, in edge order).
pub fn cut_monomial(g: &Graph, p: &Partition) -> Vec<i64> {
    cut_vector(g, p).into_iter().flat_map(|d| [d, 1 - d]).collect()
}

pub fn st_row_names(g: &Graph) -> Vec<String> {
    g.edges()
        .iter()
        .flat_map(|&(i, j)| {
            let e = edge_label(i, j, g.n());
            [format!("s{e}"), format!("t{e}")]
        })
        .collect()
}

pub(crate) fn edge_label(i: usize, j: usize, n: usize) -> String {
    if n <= 9 {
        format!("{i}{j}")
    } else {
        format!("{i}_{j}")
    }
}

/// The `2|E| × 2^(n-1)` matrix of the cut map.
pub fn exponent_matrix(g: &Graph) -> Result<ExponentMatrix> {
    if g.n() > MAX_MATRIX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "exponent matrix limited to {MAX_MATRIX_VERTICES} vertices"
        )));
    }
    if g.num_edges() == 0 {
        return Err(Error::InvalidGraph("the cut map needs at least one edge".into()));
    }
    let cols: Vec<Vec<i64>> = Partition::all(g.n()).map(|p| cut_monomial(g, &p)).collect();
    let entries = (0..2 * g.num_edges()).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
    ExponentMatrix::new(st_row_names(g), VariableSet::cut(g.n()), entries)
}

/// `2^(n-1) - 1 - |E|`.
pub fn cut_codim(g: &Graph) -> usize {
    (1usize << (g.n() - 1)) - 1 - g.num_edges()
}
