//! Buchberger's algorithm specialised to pure-difference binomials.
//!
//! Elements are kept as a pair of monomials (lead, tail) without cancelling
//! common factors, since intermediate ideals need not be saturated. Pairs
//! are processed in batches of equal lcm degree: each batch is reduced in
//! parallel against a snapshot of the basis, then inserted one by one in a
//! fixed order, so the result does not depend on the worker count.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rayon::prelude::*;

use super::order::TermOrder;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GbConfig {
    /// Skip S-pairs above this degree. Results are then exact only up to
    /// that degree and flagged as uncertified.
    pub max_degree: Option<u32>,
    /// Give up after this many S-pair reductions.
    pub max_pairs: Option<u64>,
    pub threads: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_degree: None, max_pairs: None, threads: 1 }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub lead: Vec<u32>,
    pub tail: Vec<u32>,
    mask: u64,
}

impl Elem {
    pub(crate) fn from_pair(lead: &[u32], tail: &[u32]) -> Self {
        Elem::new(lead.to_vec(), tail.to_vec())
    }

    fn new(lead: Vec<u32>, tail: Vec<u32>) -> Self {
        let mask = support_mask(&lead);
        Elem { lead, tail, mask }
    }
}

pub(crate) struct RawGb {
    pub elems: Vec<(Vec<u32>, Vec<u32>)>,
    pub certified: bool,
}

fn support_mask(u: &[u32]) -> u64 {
    u.iter().enumerate().fold(0, |m, (i, &e)| if e > 0 { m | 1 << (i % 64) } else { m })
}

fn divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

fn degree(u: &[u32]) -> u32 {
    u.iter().sum()
}

/// Rewrites `m` to its normal form with respect to `basis` (indices into
/// `elems`), always using the first applicable divisor.
pub(crate) fn reduce_monomial(m: &mut [u32], elems: &[Elem], basis: &[usize]) -> Result<()> {
    'outer: loop {
        let mm = support_mask(m);
        for &k in basis {
            let e = &elems[k];
            if e.mask & !mm == 0 && divides(&e.lead, m) {
                for ((x, &l), &t) in m.iter_mut().zip(&e.lead).zip(&e.tail) {
                    *x = (*x - l).checked_add(t).ok_or(Error::Overflow("monomial reduction"))?;
                }
                continue 'outer;
            }
        }
        return Ok(());
    }
}

#[derive(Clone, Debug)]
enum Task {
    Input(usize),
    Pair(usize, usize, Vec<u32>),
}

struct Engine<'a> {
    order: &'a TermOrder,
    elems: Vec<Elem>,
    active: Vec<usize>,
    is_active: Vec<bool>,
    // degree -> pending tasks
    queue: BTreeMap<u32, Vec<Task>>,
}

pub(crate) fn buchberger(
    gens: &[(Vec<u32>, Vec<u32>)],
    order: &TermOrder,
    cfg: &GbConfig,
) -> Result<RawGb> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let mut eng = Engine {
        order,
        elems: Vec::new(),
        active: Vec::new(),
        is_active: Vec::new(),
        queue: BTreeMap::new(),
    };
    for (k, (a, b)) in gens.iter().enumerate() {
        if a != b {
            let d = degree(a).max(degree(b));
            eng.queue.entry(d).or_default().push(Task::Input(k));
        }
    }
    let mut certified = true;
    let mut reduced = 0u64;
    while let Some((&d, _)) = eng.queue.iter().next() {
        if cfg.max_degree.is_some_and(|m| d > m) {
            certified = false;
            break;
        }
        let mut batch = eng.queue.remove(&d).unwrap();
        batch.sort_by(|x, y| eng.task_key_cmp(x, y));
        reduced += batch.len() as u64;
        if cfg.max_pairs.is_some_and(|m| reduced > m) {
            return Err(Error::Budget(format!("more than {} S-pair reductions", cfg.max_pairs.unwrap())));
        }
        let snapshot = &eng;
        let run = |t: &Task| -> Result<Option<(Vec<u32>, Vec<u32>)>> {
            let (mut a, mut b) = snapshot.spoly(t, gens);
            reduce_monomial(&mut a, &snapshot.elems, &snapshot.active)?;
            reduce_monomial(&mut b, &snapshot.elems, &snapshot.active)?;
            Ok((a != b).then_some((a, b)))
        };
        let results: Vec<_> = if batch.len() > 8 && cfg.threads > 1 {
            pool.install(|| batch.par_iter().map(run).collect())
        } else {
            batch.iter().map(run).collect()
        };
        for r in results {
            let Some((mut a, mut b)) = r? else { continue };
            reduce_monomial(&mut a, &eng.elems, &eng.active)?;
            reduce_monomial(&mut b, &eng.elems, &eng.active)?;
            match order.cmp(&a, &b) {
                Ordering::Equal => {}
                Ordering::Greater => eng.insert(a, b),
                Ordering::Less => eng.insert(b, a),
            }
        }
    }
    let elems = eng.finish()?;
    Ok(RawGb { elems, certified })
}

impl Engine<'_> {
    fn task_key_cmp(&self, x: &Task, y: &Task) -> Ordering {
        match (x, y) {
            (Task::Input(a), Task::Input(b)) => a.cmp(b),
            (Task::Input(_), Task::Pair(..)) => Ordering::Less,
            (Task::Pair(..), Task::Input(_)) => Ordering::Greater,
            (Task::Pair(i1, j1, l1), Task::Pair(i2, j2, l2)) => {
                self.order.cmp(l1, l2).then((i1, j1).cmp(&(i2, j2)))
            }
        }
    }

    fn spoly(&self, t: &Task, gens: &[(Vec<u32>, Vec<u32>)]) -> (Vec<u32>, Vec<u32>) {
        match t {
            Task::Input(k) => gens[*k].clone(),
            Task::Pair(i, j, l) => {
                let side = |e: &Elem| -> Vec<u32> {
                    l.iter().zip(&e.lead).zip(&e.tail).map(|((&x, &a), &b)| x - a + b).collect()
                };
                (side(&self.elems[*i]), side(&self.elems[*j]))
            }
        }
    }

    /// Adds `lead - tail` with the Gebauer–Möller pair update.
    fn insert(&mut self, lead: Vec<u32>, tail: Vec<u32>) {
        let h = self.elems.len();
        self.elems.push(Elem::new(lead, tail));
        self.is_active.push(true);
        let hl = self.elems[h].lead.clone();

        // new pairs (h, g); drop those whose lcm is a multiple of another's
        let cands: Vec<(usize, Vec<u32>, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let gl = &self.elems[g].lead;
                (g, lcm(&hl, gl), coprime(&hl, gl))
            })
            .collect();
        let mut keep = vec![true; cands.len()];
        for p in 0..cands.len() {
            if cands[p].2 {
                continue;
            }
            let dominated = (0..cands.len())
                .any(|q| q != p && keep[q] && divides(&cands[q].1, &cands[p].1));
            if dominated {
                keep[p] = false;
            }
        }
        // old pairs made redundant by h
        for tasks in self.queue.values_mut() {
            tasks.retain(|t| match t {
                Task::Input(_) => true,
                Task::Pair(i, j, l) => {
                    !divides(&hl, l)
                        || lcm(&self.elems[*i].lead, &hl) == *l
                        || lcm(&self.elems[*j].lead, &hl) == *l
                }
            });
        }
        self.queue.retain(|_, v| !v.is_empty());
        for (k, (g, l, cp)) in cands.into_iter().enumerate() {
            if keep[k] && !cp {
                self.queue.entry(degree(&l)).or_default().push(Task::Pair(g, h, l));
            }
        }
        for &g in &self.active {
            if divides(&hl, &self.elems[g].lead) {
                self.is_active[g] = false;
            }
        }
        self.active.retain(|&g| self.is_active[g]);
        self.active.push(h);
    }

    /// Interreduces the active elements into the reduced basis, sorted by
    /// leading term.
    fn finish(self) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
        let mut out = Vec::with_capacity(self.active.len());
        for &k in &self.active {
            let mut tail = self.elems[k].tail.clone();
            reduce_monomial(&mut tail, &self.elems, &self.active)?;
            out.push((self.elems[k].lead.clone(), tail));
        }
        out.sort_by(|x, y| self.order.cmp(&x.0, &y.0));
        Ok(out)
    }
}
