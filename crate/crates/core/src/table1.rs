//! Reproduction of the table of cut-ideal invariants for named graphs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::cut::exponent_matrix;
use crate::error::{Error, Result};
use crate::graph::make_named;
use crate::polytope::{cut_polytope, facets, normality_gaps};
use crate::registry::{toric_engines, volume_methods};
use crate::toric::ToricConfig;

/// Published invariants of one row.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedRow {
    pub label: &'static str,
    /// Input to [`make_named`].
    pub graph: &'static str,
    pub n: usize,
    pub degrees: &'static [(u32, usize)],
    pub mu: u32,
    pub codim: usize,
    pub degree: u64,
    pub normal: bool,
    /// Why the published values are not expected to reproduce.
    pub disputed: Option<&'static str>,
}

const fn row(
    label: &'static str,
    graph: &'static str,
    n: usize,
    degrees: &'static [(u32, usize)],
    mu: u32,
    codim: usize,
    degree: u64,
    normal: bool,
) -> ExpectedRow {
    ExpectedRow { label, graph, n, degrees, mu, codim, degree, normal, disputed: None }
}

/// Rows whose graphs can be built by name. Atlas-numbered graphs and `K6`
/// are left out.
pub const ROWS: &[ExpectedRow] = &[
    row("K3", "K3", 3, &[], 0, 0, 1, true),
    row("C4", "C4", 4, &[(2, 3)], 2, 3, 8, true),
    row("K4", "K4", 4, &[(4, 1)], 4, 1, 4, true),
    row("C5", "C5", 5, &[(2, 30)], 2, 10, 52, true),
    row("K2,3", "K2,3", 5, &[(2, 19)], 2, 9, 72, true),
    row("suspend(C4)", "suspend(C4)", 5, &[(2, 8), (4, 8)], 4, 7, 64, true),
    row("K5", "K5", 5, &[(4, 20), (6, 40)], 6, 5, 128, false),
    row("C6", "C6", 6, &[(2, 195)], 2, 25, 344, true),
    row("K2,4", "K2,4", 6, &[(2, 111)], 2, 23, 1152, true),
    ExpectedRow {
        disputed: Some("published row repeats the one above it; computed {2:84, 4:44}, degree 1424"),
        ..row("K2xK3", "prism", 6, &[(2, 90), (4, 52)], 4, 22, 1440, true)
    },
    row("K3,3", "K3,3", 6, &[(2, 63), (4, 72)], 4, 22, 3168, true),
    row("suspend(C5)", "suspend(C5)", 6, &[(2, 80), (4, 40)], 4, 21, 1232, true),
    row("suspend(K2,3)", "suspend(K2,3)", 6, &[(2, 44), (4, 420)], 4, 20, 3360, true),
    row("K2,2,2", "K2,2,2", 6, &[(2, 24), (4, 1096)], 4, 19, 6144, true),
];

#[derive(Clone, Debug)]
pub struct Table1Options {
    pub engine: String,
    pub volume_method: String,
    pub toric: ToricConfig,
    /// Normality search bound. `None` means `dim - 1` on graphs with at
    /// most five vertices and no search on larger ones.
    pub max_height: Option<u32>,
    pub max_vertices: usize,
}

impl Default for Table1Options {
    fn default() -> Self {
        Table1Options {
            engine: "saturation".into(),
            volume_method: "pulling".into(),
            toric: ToricConfig::default(),
            max_height: None,
            max_vertices: 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Mismatch,
    /// Differs from a published row that is known to be wrong.
    Disputed,
    /// A budget ran out before the row was finished.
    Partial,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::Disputed => "DISPUTED",
            RowStatus::Partial => "PARTIAL",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RowResult {
    pub expected: ExpectedRow,
    pub degrees: BTreeMap<u32, usize>,
    pub mu: u32,
    pub codim: usize,
    pub degree: Option<BigInt>,
    /// `(search bound, gaps found, search complete)`.
    pub normality: Option<(u32, usize, bool)>,
    pub status: RowStatus,
    pub diffs: Vec<String>,
}

impl RowResult {
    pub fn normal(&self) -> Option<bool> {
        self.normality.and_then(|(_, gaps, complete)| if gaps > 0 { Some(false) } else { complete.then_some(true) })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "graph": self.expected.label,
            "degrees": self.degrees,
            "mu": self.mu,
            "codim": self.codim,
            "degree": self.degree.as_ref().map(|d| d.to_string()),
            "normal": self.normal(),
            "gaps": self.normality.map(|(_, g, _)| g),
            "gapsUpTo": self.normality.map(|(h, _, _)| h),
            "status": self.status.as_str(),
            "diffs": self.diffs,
        })
    }

    pub fn to_line(&self) -> String {
        let cols: Vec<String> = [2u32, 4, 6, 8, 10].iter().map(|d| self.degrees.get(d).copied().unwrap_or(0).to_string()).collect();
        let deg = self.degree.as_ref().map_or("-".to_string(), |d| d.to_string());
        let nor = match self.normal() {
            Some(true) => "Y",
            Some(false) => "N",
            None => "-",
        };
        let mut line = format!(
            "{:<14} {} mu={} codim={} deg={} nor={} {}",
            self.expected.label,
            cols.join(" "),
            self.mu,
            self.codim,
            deg,
            nor,
            self.status.as_str()
        );
        if !self.diffs.is_empty() {
            line.push_str(&format!(" ({})", self.diffs.join("; ")));
        }
        line
    }
}

/// Computes one row and compares it with the published values.
pub fn run_row(row: &ExpectedRow, opts: &Table1Options) -> Result<RowResult> {
    let g = make_named(row.graph)?;
    let a = exponent_matrix(&g)?;
    let engine = toric_engines();
    let mb = engine.get(&opts.engine)?.markov(&g, &opts.toric);
    let mut result = RowResult {
        expected: *row,
        degrees: BTreeMap::new(),
        mu: 0,
        codim: a.codim(),
        degree: None,
        normality: None,
        status: RowStatus::Partial,
        diffs: Vec::new(),
    };
    let mb = match mb {
        Ok(mb) if mb.certified => mb,
        Ok(_) => {
            result.diffs.push("generator search truncated".into());
            return Ok(result);
        }
        Err(Error::Budget(msg)) => {
            result.diffs.push(msg);
            return Ok(result);
        }
        Err(e) => return Err(e),
    };
    result.mu = mb.mu();
    result.degrees = mb.degree_histogram;

    let p = cut_polytope(&g)?;
    result.degree = Some(volume_methods().get(&opts.volume_method)?.volume(&p)?);
    let height = opts.max_height.or_else(|| (g.n() <= 5).then(|| p.dim().saturating_sub(1) as u32));
    if let Some(h) = height {
        let nr = normality_gaps(&p, &facets(&p)?, h)?;
        result.normality = Some((h, nr.gaps.len(), nr.complete));
    }

    let want: BTreeMap<u32, usize> = row.degrees.iter().copied().collect();
    let mut diffs = Vec::new();
    if result.degrees != want {
        diffs.push(format!("degrees {:?} != {:?}", result.degrees, want));
    }
    if result.mu != row.mu {
        diffs.push(format!("mu {} != {}", result.mu, row.mu));
    }
    if result.codim != row.codim {
        diffs.push(format!("codim {} != {}", result.codim, row.codim));
    }
    if result.degree != Some(BigInt::from(row.degree)) {
        diffs.push(format!("degree {} != {}", result.degree.as_ref().unwrap(), row.degree));
    }
    if let Some(x) = result.normal() {
        if x != row.normal {
            diffs.push(format!("normal {x} != {}", row.normal));
        }
    }
    result.status = match (diffs.is_empty(), row.disputed) {
        (true, _) => RowStatus::Match,
        (false, Some(_)) => RowStatus::Disputed,
        (false, None) => RowStatus::Mismatch,
    };
    result.diffs = diffs;
    Ok(result)
}

/// Every row on at most `opts.max_vertices` vertices.
pub fn run_table(opts: &Table1Options) -> Result<Vec<RowResult>> {
    ROWS.iter().filter(|r| r.n <= opts.max_vertices).map(|r| run_row(r, opts)).collect()
}
