//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use cutkit_core::binomial::Binomial;
use cutkit_core::polytope::{HPolytope, VPolytope};
use cutkit_core::stat::{jc_matrix, psi_matrix, SplitSystem};
use cutkit_core::{exponent_matrix, ExponentMatrix, Graph};
use num_bigint::BigInt;

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One connected graph per isomorphism class on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let canon = perms
            .iter()
            .map(|p| {
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |m, (_, &(a, b))| {
                    let (x, y) = (p[a - 1] + 1, p[b - 1] + 1);
                    m | 1 << index[&(x.min(y), x.max(y))]
                })
            })
            .min()
            .unwrap_or(mask);
        if !seen.insert(canon) {
            continue;
        }
        let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Monomials of total degree `d` in `m` variables.
fn monomials(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(0, d, &mut vec![0; m], &mut out);
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Components of a fiber under the given moves.
fn components(fiber: &[Vec<u32>], moves: &[&Binomial]) -> usize {
    let pos: HashMap<&Vec<u32>, usize> = fiber.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut parent: Vec<usize> = (0..fiber.len()).collect();
    for (i, u) in fiber.iter().enumerate() {
        for b in moves {
            for (from, to) in [(&b.plus, &b.minus), (&b.minus, &b.plus)] {
                if u.iter().zip(from.iter()).all(|(x, y)| x >= y) {
                    let v: Vec<u32> = (0..u.len()).map(|k| u[k] - from[k] + to[k]).collect();
                    if let Some(&j) = pos.get(&v) {
                        let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = c;
                    }
                }
            }
        }
    }
    (0..fiber.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Minimal generator counts by degree from fiber connectivity: in degree
/// `d`, each fiber needs one generator per extra component left by the
/// moves of lower degree. Also reports whether `basis` connects every fiber
/// up to `max_degree`. The matrix must be graded by total degree.
pub fn fiber_histogram(a: &ExponentMatrix, basis: &[Binomial], max_degree: u32) -> (BTreeMap<u32, usize>, bool) {
    let mut hist = BTreeMap::new();
    let mut connected = true;
    for d in 1..=max_degree {
        let mut fibers: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
        for u in monomials(a.ncols(), d) {
            fibers.entry(a.multidegree(&u)).or_default().push(u);
        }
        let lower: Vec<&Binomial> = basis.iter().filter(|b| b.degree() < d).collect();
        let upto: Vec<&Binomial> = basis.iter().filter(|b| b.degree() <= d).collect();
        let mut count = 0;
        for fiber in fibers.values().filter(|f| f.len() > 1) {
            count += components(fiber, &lower) - 1;
            connected &= components(fiber, &upto) == 1;
        }
        if count > 0 {
            hist.insert(d, count);
        }
    }
    (hist, connected)
}

/// Normalized volume from the Ehrhart polynomial: count lattice points of
/// `kP` for `k = 0..=d` and take the d-th finite difference at 0.
pub fn ehrhart_volume(p: &VPolytope, h: &HPolytope) -> BigInt {
    let d = p.dim();
    let w = p.lattice_coords();
    let lo: Vec<i64> = (0..d).map(|i| w.iter().map(|x| x[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|i| w.iter().map(|x| x[i]).max().unwrap()).collect();
    let count = |k: i64| -> i64 {
        let mut z: Vec<i64> = lo.iter().map(|x| x * k).collect();
        let mut n = 0;
        loop {
            if h.facets().iter().all(|f| f.normal.iter().zip(&z).map(|(a, b)| a * b).sum::<i64>() <= f.offset * k) {
                n += 1;
            }
            let mut i = 0;
            loop {
                if i == d {
                    return n;
                }
                if z[i] < hi[i] * k {
                    z[i] += 1;
                    break;
                }
                z[i] = lo[i] * k;
                i += 1;
            }
        }
    };
    let binom = |n: usize, k: usize| -> i64 { (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64) };
    let mut total = BigInt::from(0);
    for k in 0..=d {
        let sign = if (d - k).is_multiple_of(2) { 1 } else { -1 };
        total += BigInt::from(sign * binom(d, k) * count(k as i64));
    }
    total
}

/// Every triangulation of the n-gon `1..n`, as a graph.
pub fn triangulated_polygons(n: usize) -> Vec<Graph> {
    fn tri(i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
        if j <= i + 1 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in i + 1..j {
            for l in tri(i, k) {
                for r in tri(k, j) {
                    let mut e = l.clone();
                    e.extend(r);
                    e.push((i, k));
                    e.push((k, j));
                    out.push(e);
                }
            }
        }
        out
    }
    tri(1, n)
        .into_iter()
        .map(|mut e| {
            e.push((1, n));
            e.sort_unstable();
            e.dedup();
            Graph::new(n, e).unwrap()
        })
        .collect()
}

/// Matrices with at most ten columns for the fiber oracle.
pub fn fixtures() -> Vec<(String, ExponentMatrix)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for g in connected_graphs(n) {
            out.push((format!("{g:?}"), exponent_matrix(&g).unwrap()));
        }
    }
    let sigma4 = SplitSystem::complete_cyclic(4).unwrap();
    out.push(("jc sigma4".into(), jc_matrix(&sigma4).unwrap()));
    out.push(("psi K3".into(), psi_matrix(&Graph::complete(3)).unwrap()));
    out.push((
        "twisted cubic".into(),
        ExponentMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap(),
    ));
    for cols in [3usize, 5] {
        // row and column sums of a 2 x cols table
        let mut rows = vec![vec![0i64; 2 * cols]; 2 + cols];
        for i in 0..2 {
            for j in 0..cols {
                rows[i][i * cols + j] = 1;
                rows[2 + j][i * cols + j] = 1;
            }
        }
        out.push((format!("2x{cols} table"), ExponentMatrix::from_rows(rows).unwrap()));
    }
    out
}
