mod common;

use cutkit_core::binomial::{expand, parse_cut_binomial};
use cutkit_core::clique_sum::*;
use cutkit_core::graph::make_named;
use cutkit_core::polytope::{cut_polytope, facets, normalized_volume};
use cutkit_core::toric::{ideal_equal, markov_basis, toric_groebner, TermOrder, ToricConfig};
use cutkit_core::{exponent_matrix, Binomial, Graph};

use common::triangulated_polygons;

fn b(s: &str) -> Binomial {
    parse_cut_binomial(s).unwrap()
}

fn k4_quartic() -> Binomial {
    b("q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]")
}

fn k4k4() -> SumContext {
    SumContext::glue(&Graph::complete(4), &Graph::complete(4), &[2, 3, 4]).unwrap()
}

fn f(i: usize) -> Binomial {
    b([
        "q[|12345]*q[34|125]*q[24|135]*q[23|145] - q[1|2345]*q[25|134]*q[35|124]*q[45|123]",
        "q[5|1234]*q[12|345]*q[13|245]*q[14|235] - q[15|234]*q[2|1345]*q[3|1245]*q[4|1235]",
        "q[1|2345]*q[25|134]*q[35|124]*q[45|123] - q[15|234]*q[2|1345]*q[3|1245]*q[4|1235]",
        "q[|12345]*q[34|125]*q[24|135]*q[23|145] - q[5|1234]*q[12|345]*q[13|245]*q[14|235]",
    ][i - 1])
}

fn contains(set: &[Composed], x: &Binomial) -> bool {
    set.iter().any(|c| c.binomial.same_up_to_sign(x))
}

#[test]
fn glued_graph_is_k5_minus_an_edge() {
    let ctx = k4k4();
    assert_eq!(*ctx.glued(), make_named("delete(K5, 1-5)").unwrap());
    assert_eq!(ctx.separator(), vec![2, 3, 4]);
}

#[test]
fn quad_set_is_the_four_printed_quadrics() {
    let ctx = k4k4();
    let q = quad_set(&ctx);
    let printed = [
        "q[15|234]*q[|12345] - q[1|2345]*q[5|1234]",
        "q[34|125]*q[2|1345] - q[12|345]*q[25|134]",
        "q[24|135]*q[3|1245] - q[13|245]*q[35|124]",
        "q[23|145]*q[4|1235] - q[14|235]*q[45|123]",
    ];
    assert_eq!(q.len(), 4);
    for p in printed {
        assert!(contains(&q, &b(p)), "{p}");
    }
}

#[test]
fn lifts_of_the_k4_quartic() {
    let ctx = k4k4();
    let l1 = lift_all(&[k4_quartic()], &ctx, Side::First).unwrap();
    let l2 = lift_all(&[k4_quartic()], &ctx, Side::Second).unwrap();
    assert_eq!((l1.len(), l2.len()), (16, 16));
    assert!(contains(&l1, &f(1)) && contains(&l1, &f(2)));
    assert!(contains(&l2, &f(3)) && contains(&l2, &f(4)));

    // all-|5 and all-5| lists give f1 and f2
    let a = align(&k4_quartic(), &ctx, Side::First).unwrap();
    let five = 1u64 << 4;
    assert!(lift(&a, &[0; 4], &ctx, Side::First).unwrap().same_up_to_sign(&f(1)));
    assert!(lift(&a, &[five; 4], &ctx, Side::First).unwrap().same_up_to_sign(&f(2)));
}

#[test]
fn syzygy_among_the_four_quartics() {
    let (f1, f2, f3, f4) = (f(1), f(2), f(3), f(4));
    let sum = expand(&[(1, &f1), (-1, &f2), (1, &f3), (-1, &f4)]);
    assert!(sum.values().all(|&c| c == 0));
    // but not a syzygy with a sign changed
    assert!(expand(&[(1, &f1), (1, &f2), (1, &f3), (-1, &f4)]).values().any(|&c| c != 0));
}

#[test]
fn generating_set_of_thirty_six() {
    let ctx = k4k4();
    let m = compose_generating_set(&ctx, &[k4_quartic()], &[k4_quartic()]).unwrap();
    assert_eq!(m.len(), 36);
    let gens: Vec<Binomial> = m.iter().map(|c| c.binomial.clone()).collect();
    let g = ctx.glued();
    assert!(verify_generates(&gens, g).unwrap());

    for i in 1..=4 {
        let without: Vec<Binomial> = gens.iter().filter(|x| !x.same_up_to_sign(&f(i))).cloned().collect();
        assert_eq!(without.len(), 35);
        assert!(verify_generates(&without, g).unwrap(), "without f{i}");
    }
    for q in quad_set(&ctx) {
        let without: Vec<Binomial> = gens.iter().filter(|x| !x.same_up_to_sign(&q.binomial)).cloned().collect();
        assert!(!verify_generates(&without, g).unwrap());
    }
}

#[test]
fn k5_minus_edge_invariants() {
    let g = make_named("delete(K5, 1-5)").unwrap();
    let a = exponent_matrix(&g).unwrap();
    let mb = markov_basis(&a, &ToricConfig::default()).unwrap();
    assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(2, 4), (4, 31)]);
    assert_eq!(a.codim(), 6);
    let p = cut_polytope(&g).unwrap();
    let h = facets(&p).unwrap();
    assert_eq!(normalized_volume(&p, &h).unwrap(), 80.into());
}

#[test]
fn composed_groebner_for_k5_minus_edge() {
    let ctx = k4k4();
    let cfg = ToricConfig::default();
    let k4 = exponent_matrix(&Graph::complete(4)).unwrap();
    let gb4 = toric_groebner(&k4, &TermOrder::degrevlex(8), &cfg).unwrap();
    let composed = compose_groebner(&ctx, &gb4, &gb4).unwrap();
    assert_eq!(composed.basis.len(), 36);
    let direct = toric_groebner(ctx.exponent_matrix(), &TermOrder::degrevlex(16), &cfg).unwrap();
    assert!(ideal_equal(&composed.basis, &direct));
}

#[test]
fn json_provenance_tags() {
    let ctx = k4k4();
    let m = compose_generating_set(&ctx, &[k4_quartic()], &[k4_quartic()]).unwrap();
    let lifted = m.iter().find(|c| matches!(c.provenance, Provenance::Lift { side: Side::First, .. })).unwrap();
    let v = composed_json(lifted, &ctx);
    assert_eq!(v["side"], 1);
    assert_eq!(v["EF"].as_array().unwrap().len(), 4);
    let quad = m.iter().find(|c| matches!(c.provenance, Provenance::Quad { .. })).unwrap();
    assert_eq!(composed_json(quad, &ctx)["side"], "quad");
}

/// All trees on `n` vertices as parent arrays (vertex `i` hangs off a smaller
/// vertex), which covers every tree shape up to relabeling.
fn trees(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut parent = vec![0usize; n + 1];
    fn rec(i: usize, n: usize, parent: &mut Vec<usize>, out: &mut Vec<Graph>) {
        if i > n {
            out.push(Graph::new(n, (2..=n).map(|v| (parent[v], v))).unwrap());
            return;
        }
        for p in 1..i {
            parent[i] = p;
            rec(i + 1, n, parent, out);
        }
    }
    rec(2, n, &mut parent, &mut out);
    out
}

#[test]
fn trees_are_segre_products() {
    for n in 3..=5 {
        for t in trees(n) {
            let gens = compose_tree_generators(&t, |_| Ok(Vec::new())).unwrap();
            assert!(gens.iter().all(|x| x.degree() == 2));
            // Segre embedding of (P^1)^(n-1): every 2x2 minor of every flattening
            let a = exponent_matrix(&t).unwrap();
            let mb = markov_basis(&a, &ToricConfig::default()).unwrap();
            assert_eq!(mb.degree_histogram.keys().copied().collect::<Vec<_>>(), vec![2]);
            assert!(verify_generates(&gens, &t).unwrap(), "{t:?}");
        }
    }
}

#[test]
fn triangulated_polygons_have_quadratic_groebner_bases() {
    let counts: Vec<usize> = (3..=6).map(|n| triangulated_polygons(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 5, 14]);
    let cfg = ToricConfig::default();
    for n in 4..=6 {
        for g in triangulated_polygons(n) {
            let gb = compose_tree_groebner(&g, |piece| {
                let a = exponent_matrix(piece)?;
                toric_groebner(&a, &TermOrder::degrevlex(a.ncols()), &cfg)
            })
            .unwrap();
            assert!(gb.elements().iter().all(|x| x.degree() == 2), "{g:?}");
            let a = exponent_matrix(&g).unwrap();
            let direct = toric_groebner(&a, &TermOrder::degrevlex(a.ncols()), &cfg).unwrap();
            assert!(ideal_equal(&gb, &direct), "{g:?}");
        }
    }
}

#[test]
fn decomposable_graphs_compose_correctly() {
    let cfg = ToricConfig::default();
    for name in ["delete(K5, 1-5)", "suspend(path4)", "path5", "delete(K4, 1-4)"] {
        let g = make_named(name).unwrap();
        let gens = compose_tree_generators(&g, |piece| {
            Ok(markov_basis(&exponent_matrix(piece)?, &cfg)?.elements)
        })
        .unwrap();
        assert!(verify_generates(&gens, &g).unwrap(), "{name}");
    }
    // two C4's glued along an edge, and a K4 with a pendant triangle
    let c4c4 = SumContext::glue(&Graph::cycle(4), &Graph::cycle(4), &[1, 2]).unwrap();
    let k4k3 = SumContext::glue(&Graph::complete(4), &Graph::complete(3), &[1, 2]).unwrap();
    for ctx in [c4c4, k4k3] {
        let g = ctx.glued().clone();
        let gens = compose_tree_generators(&g, |piece| {
            Ok(markov_basis(&exponent_matrix(piece)?, &cfg)?.elements)
        })
        .unwrap();
        assert!(verify_generates(&gens, &g).unwrap());
    }
}

#[test]
fn quad_count_formula() {
    for (g1, g2, sep) in [
        (Graph::complete(4), Graph::complete(4), vec![2, 3, 4]),
        (Graph::complete(3), Graph::complete(3), vec![1]),
        (Graph::cycle(4), Graph::complete(3), vec![1, 2]),
        (Graph::complete(2), Graph::complete(4), vec![1]),
    ] {
        let ctx = SumContext::glue(&g1, &g2, &sep).unwrap();
        let k = sep.len() as u32;
        let p1 = (g1.n() - sep.len()) as u32;
        let p2 = (g2.n() - sep.len()) as u32;
        let c2 = |x: u64| x * (x.saturating_sub(1)) / 2;
        let expected = (1u64 << (k - 1)) * c2(1 << p1) * c2(1 << p2);
        assert_eq!(quad_set(&ctx).len() as u64, expected);
    }
    // a summand with no private vertices gives no quadrics
    let ctx = SumContext::glue(&Graph::complete(3), &Graph::complete(2), &[1, 2]).unwrap();
    assert!(quad_set(&ctx).is_empty());
}
