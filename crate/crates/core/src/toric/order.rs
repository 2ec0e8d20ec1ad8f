use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial order on exponent vectors of a fixed length.
///
/// `varorder` lists variable indices from largest to smallest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Degrevlex { varorder: Vec<usize> },
    Lex { varorder: Vec<usize> },
    /// Compare `w·u` first, then the tie-break order.
    Weight { w: Vec<i64>, tiebreak: Box<TermOrder> },
    /// Compare the images under each stage's variable map in turn, then the
    /// tie-break. A stage `(map, order)` sends variable `i` to `map[i]`.
    Product { stages: Vec<(Vec<usize>, usize, TermOrder)>, tiebreak: Box<TermOrder> },
}

impl TermOrder {
    /// Degree reverse lexicographic with `x_0 > x_1 > … > x_{m-1}`.
    pub fn degrevlex(m: usize) -> Self {
        TermOrder::Degrevlex { varorder: (0..m).collect() }
    }

    pub fn lex(m: usize) -> Self {
        TermOrder::Lex { varorder: (0..m).collect() }
    }

    /// Degrevlex with variable `v` cheapest and the rest in index order.
    pub fn degrevlex_last(m: usize, v: usize) -> Self {
        let mut varorder: Vec<usize> = (0..m).filter(|&i| i != v).collect();
        varorder.push(v);
        TermOrder::Degrevlex { varorder }
    }

    /// Parses `degrevlex`, `lex` or `weight:w1,w2,…` (degrevlex tie-break).
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let order = match s.trim() {
            "degrevlex" | "grevlex" => TermOrder::degrevlex(m),
            "lex" => TermOrder::lex(m),
            other => {
                let csv = other.strip_prefix("weight:").ok_or_else(|| Error::Unknown {
                    kind: "term order",
                    name: other.to_string(),
                })?;
                let w = csv
                    .split(',')
                    .map(|t| t.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::InvalidArgument(format!("bad weight vector `{csv}`")))?;
                if w.iter().any(|&x| x < 0) {
                    return Err(Error::InvalidArgument("weights must be nonnegative".into()));
                }
                TermOrder::Weight { w, tiebreak: Box::new(TermOrder::degrevlex(m)) }
            }
        };
        order.validate(m)?;
        Ok(order)
    }

    pub fn validate(&self, m: usize) -> Result<()> {
        let perm_ok = |v: &[usize]| {
            let mut seen = vec![false; m];
            v.len() == m && v.iter().all(|&i| i < m && !std::mem::replace(&mut seen[i], true))
        };
        let ok = match self {
            TermOrder::Degrevlex { varorder } | TermOrder::Lex { varorder } => perm_ok(varorder),
            TermOrder::Weight { w, tiebreak } => {
                return if w.len() == m {
                    tiebreak.validate(m)
                } else {
                    Err(Error::InvalidArgument(format!("weight has {} entries, expected {m}", w.len())))
                }
            }
            TermOrder::Product { stages, tiebreak } => {
                for (map, k, o) in stages {
                    if map.len() != m || map.iter().any(|&t| t >= *k) {
                        return Err(Error::InvalidArgument("bad product-order stage map".into()));
                    }
                    o.validate(*k)?;
                }
                return tiebreak.validate(m);
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("variable order is not a permutation of 0..{m}")))
        }
    }

    /// `Greater` iff `a > b`.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Degrevlex { varorder } => {
                let da: u64 = a.iter().map(|&x| x as u64).sum();
                let db: u64 = b.iter().map(|&x| x as u64).sum();
                da.cmp(&db).then_with(|| {
                    for &v in varorder.iter().rev() {
                        if a[v] != b[v] {
                            return b[v].cmp(&a[v]);
                        }
                    }
                    Ordering::Equal
                })
            }
            TermOrder::Lex { varorder } => {
                for &v in varorder {
                    if a[v] != b[v] {
                        return a[v].cmp(&b[v]);
                    }
                }
                Ordering::Equal
            }
            TermOrder::Weight { w, tiebreak } => {
                let wa: i64 = w.iter().zip(a).map(|(&x, &e)| x * e as i64).sum();
                let wb: i64 = w.iter().zip(b).map(|(&x, &e)| x * e as i64).sum();
                wa.cmp(&wb).then_with(|| tiebreak.cmp(a, b))
            }
            TermOrder::Product { stages, tiebreak } => {
                for (map, k, o) in stages {
                    let (pa, pb) = (push_forward(a, map, *k), push_forward(b, map, *k));
                    match o.cmp(&pa, &pb) {
                        Ordering::Equal => {}
                        c => return c,
                    }
                }
                tiebreak.cmp(a, b)
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        match self {
            TermOrder::Degrevlex { .. } => true,
            TermOrder::Lex { .. } => false,
            TermOrder::Weight { w, .. } => w.windows(2).all(|p| p[0] == p[1]) && w[0] > 0,
            TermOrder::Product { stages, .. } => {
                stages.first().is_some_and(|(_, _, o)| o.is_degree_compatible())
            }
        }
    }

    /// Reverse-lexicographic kind (used for squarefreeness questions).
    pub fn is_revlex(&self) -> bool {
        matches!(self, TermOrder::Degrevlex { .. })
    }
}

pub(crate) fn push_forward(u: &[u32], map: &[usize], k: usize) -> Vec<u32> {
    let mut out = vec![0u32; k];
    for (i, &e) in u.iter().enumerate() {
        out[map[i]] += e;
    }
    out
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let identity = |v: &[usize]| v.iter().enumerate().all(|(i, &x)| i == x);
        match self {
            TermOrder::Degrevlex { varorder } if identity(varorder) => write!(f, "degrevlex"),
            TermOrder::Degrevlex { varorder } => write!(f, "degrevlex{varorder:?}"),
            TermOrder::Lex { varorder } if identity(varorder) => write!(f, "lex"),
            TermOrder::Lex { varorder } => write!(f, "lex{varorder:?}"),
            TermOrder::Weight { w, tiebreak } => {
                let csv: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                write!(f, "weight:{} then {tiebreak}", csv.join(","))
            }
            TermOrder::Product { stages, tiebreak } => {
                write!(f, "product(")?;
                for (i, (_, _, o)) in stages.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{o}")?;
                }
                write!(f, ") then {tiebreak}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::degrevlex(3);
        // x0 x2 < x1^2 in degrevlex with x0 > x1 > x2
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 1, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 0, 3], &[1, 0, 0]), Ordering::Greater);
        let last0 = TermOrder::degrevlex_last(3, 0);
        assert_eq!(last0.cmp(&[1, 1, 0], &[0, 1, 1]), Ordering::Less);
    }

    #[test]
    fn lex_and_weight() {
        let o = TermOrder::lex(3);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        let w = TermOrder::parse("weight:0,1,0", 3).unwrap();
        assert_eq!(w.cmp(&[5, 0, 0], &[0, 1, 0]), Ordering::Less);
        assert!(TermOrder::parse("weight:1,2", 3).is_err());
        assert!(TermOrder::parse("deglex", 3).is_err());
    }

    #[test]
    fn product_order_compares_stages_first() {
        // stage: both variables 0,1 collapse to one; variable 2 separate
        let o = TermOrder::Product {
            stages: vec![(vec![0, 0, 1], 2, TermOrder::degrevlex(2))],
            tiebreak: Box::new(TermOrder::degrevlex(3)),
        };
        assert!(o.validate(3).is_ok());
        assert_eq!(o.cmp(&[0, 1, 0], &[1, 0, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 0, 1]), Ordering::Greater);
    }
}
