//! Pure-difference binomials `x^u⁺ - x^u⁻` and their text/JSON forms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cut::VariableSet;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// `x^plus - x^minus` over a fixed number of variables, with disjoint
/// supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

impl Binomial {
    /// Builds the binomial, cancelling any common factor of the two sides.
    pub fn new(mut plus: Vec<u32>, mut minus: Vec<u32>) -> Self {
        assert_eq!(plus.len(), minus.len(), "binomial sides over different variable counts");
        for (a, b) in plus.iter_mut().zip(minus.iter_mut()) {
            let c = (*a).min(*b);
            *a -= c;
            *b -= c;
        }
        Binomial { plus, minus }
    }

    /// `x^{v⁺} - x^{v⁻}` for an integer vector `v`.
    pub fn from_vector(v: &[i64]) -> Result<Self> {
        let conv = |x: i64| u32::try_from(x).map_err(|_| Error::Overflow("binomial exponent"));
        let plus = v.iter().map(|&x| conv(x.max(0))).collect::<Result<_>>()?;
        let minus = v.iter().map(|&x| conv((-x).max(0))).collect::<Result<_>>()?;
        Ok(Binomial { plus, minus })
    }

    pub fn to_vector(&self) -> Vec<i64> {
        self.plus.iter().zip(&self.minus).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    /// Total degree of the larger side.
    pub fn degree(&self) -> u32 {
        self.plus.iter().sum::<u32>().max(self.minus.iter().sum())
    }

    pub fn negate(&self) -> Binomial {
        Binomial { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// The sign representative whose first side has the lexicographically
    /// smaller sorted variable-index sequence.
    pub fn canonical(&self) -> Binomial {
        if index_sequence(&self.minus) < index_sequence(&self.plus) {
            self.negate()
        } else {
            self.clone()
        }
    }

    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.plus == other.minus && self.minus == other.plus)
    }

    /// Prints `q[A|B]^k * … - …` in canonical orientation.
    pub fn print(&self, vars: &VariableSet) -> Result<String> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("cannot print the zero binomial".into()));
        }
        if self.len() != vars.len() {
            return Err(Error::InvalidArgument("binomial and variable set differ in length".into()));
        }
        let c = self.canonical();
        Ok(format!("{} - {}", print_monomial(&c.plus, vars), print_monomial(&c.minus, vars)))
    }

    /// Parses the printed form against a variable set. Either side may be
    /// `1` for the empty monomial.
    pub fn parse(s: &str, vars: &VariableSet) -> Result<Binomial> {
        let mut p = TermParser { src: s, pos: 0, vars };
        let plus = p.monomial()?;
        p.skip_ws();
        if !p.rest().starts_with('-') {
            return Err(Error::parse(p.pos, "expected `-` between the two monomials"));
        }
        p.pos += 1;
        let minus = p.monomial()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(Binomial::new(plus, minus))
    }

    /// JSON object `{lhs: [[var, exp], …], rhs: […]}`.
    pub fn to_json(&self, vars: &VariableSet) -> Value {
        let side = |u: &[u32]| {
            u.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| json!([vars.name(i), e]))
                .collect::<Vec<_>>()
        };
        let c = self.canonical();
        json!({ "lhs": side(&c.plus), "rhs": side(&c.minus) })
    }

    pub fn from_json(v: &Value, vars: &VariableSet) -> Result<Binomial> {
        let side = |key: &str| -> Result<Vec<u32>> {
            let mut u = vec![0u32; vars.len()];
            let items = v[key]
                .as_array()
                .ok_or_else(|| Error::InvalidArgument(format!("binomial JSON lacks `{key}`")))?;
            for item in items {
                let name = item[0].as_str().unwrap_or_default();
                let e = item[1].as_u64().unwrap_or(0) as u32;
                let i = vars
                    .index_of(name)
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown variable `{name}`")))?;
                u[i] += e;
            }
            Ok(u)
        };
        Ok(Binomial::new(side("lhs")?, side("rhs")?))
    }
}

fn index_sequence(u: &[u32]) -> Vec<usize> {
    u.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
}

pub fn print_monomial(u: &[u32], vars: &VariableSet) -> String {
    let mut out = String::new();
    for (i, &e) in u.iter().enumerate().filter(|(_, &e)| e > 0) {
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(vars.name(i));
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Parses a binomial over partition variables, inferring the vertex count
/// from the first partition.
pub fn parse_cut_binomial(s: &str) -> Result<Binomial> {
    let open = s.find("q[").ok_or_else(|| Error::parse(0, "no partition variable"))?;
    let close = s[open..].find(']').ok_or_else(|| Error::parse(open, "unclosed `[`"))? + open;
    let n = Partition::parse(&s[open + 2..close]).map_err(|_| Error::parse(open, "bad partition"))?.n();
    Binomial::parse(s, &VariableSet::cut(n))
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
    vars: &'a VariableSet,
}

impl TermParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn monomial(&mut self) -> Result<Vec<u32>> {
        let mut u = vec![0u32; self.vars.len()];
        self.skip_ws();
        if self.rest().starts_with('1') && !self.rest()[1..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
            return Ok(u);
        }
        loop {
            self.skip_ws();
            let (i, e) = self.factor()?;
            u[i] = u[i].checked_add(e).ok_or(Error::Overflow("binomial exponent"))?;
            self.skip_ws();
            if self.rest().starts_with('*') {
                self.pos += 1;
            } else {
                return Ok(u);
            }
        }
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let start = self.pos;
        let r = self.rest();
        let len = if r.starts_with("q[") {
            r.find(']').ok_or_else(|| Error::parse(start, "unclosed `[`"))? + 1
        } else {
            r.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(r.len())
        };
        if len == 0 {
            return Err(Error::parse(start, "expected a variable"));
        }
        let name = &r[..len];
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::parse(start, format!("unknown variable `{name}`")))?;
        self.pos += len;
        self.skip_ws();
        let mut e = 1;
        if self.rest().starts_with('^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
            e = self.rest()[..digits]
                .parse()
                .map_err(|_| Error::parse(self.pos, "expected an exponent"))?;
            self.pos += digits;
        }
        Ok((i, e))
    }
}

/// Expands `Σ c_i (x^{plus_i} - x^{minus_i})` into monomial coefficients,
/// dropping zeros.
pub fn expand(terms: &[(i64, &Binomial)]) -> BTreeMap<Vec<u32>, i64> {
    let mut acc: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for &(c, b) in terms {
        *acc.entry(b.plus.clone()).or_default() += c;
        *acc.entry(b.minus.clone()).or_default() -= c;
    }
    acc.retain(|_, c| *c != 0);
    acc
}
