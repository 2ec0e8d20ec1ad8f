mod common;

use cutkit_core::binomial::parse_cut_binomial;
use cutkit_core::clique_sum::{compose_generating_set, SumContext};
use cutkit_core::cut::{cut_codim, cut_monomial, st_row_names};
use cutkit_core::graph::make_named;
use cutkit_core::polytope::{cut_polytope, facets, normalized_volume};
use cutkit_core::toric::{
    groebner, ideal_equal, initial_ideal, is_squarefree, markov_basis, markov_by_degree, toric_groebner, GbConfig, TermOrder,
    ToricConfig,
};
use cutkit_core::{exponent_matrix, Binomial, ExponentMatrix, Graph, Partition};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{fiber_histogram, fixtures};

fn cfg() -> ToricConfig {
    ToricConfig::default()
}

fn b(s: &str) -> Binomial {
    parse_cut_binomial(s).unwrap()
}

fn monomial_string(g: &Graph, p: &Partition) -> String {
    let rows = st_row_names(g);
    let m = cut_monomial(g, p);
    rows.iter().zip(&m).filter(|(_, &e)| e == 1).map(|(r, _)| r.as_str()).collect::<Vec<_>>().join(" ")
}

#[test]
fn k4_parametrization() {
    let g = Graph::complete(4);
    let cases = [
        ("|1234", "t12 t13 t14 t23 t24 t34"),
        ("1|234", "s12 s13 s14 t23 t24 t34"),
        ("12|34", "t12 s13 s14 s23 s24 t34"),
        ("2|134", "s12 t13 t14 s23 s24 t34"),
        ("13|24", "s12 t13 s14 s23 t24 s34"),
        ("3|124", "t12 s13 t14 s23 t24 s34"),
        ("14|23", "s12 s13 t14 t23 s24 s34"),
        ("4|123", "t12 t13 s14 t23 s24 s34"),
    ];
    for (p, mono) in cases {
        assert_eq!(monomial_string(&g, &Partition::parse(p).unwrap()), mono, "{p}");
    }
}

#[test]
fn k4_is_a_quartic_hypersurface() {
    let a = exponent_matrix(&Graph::complete(4)).unwrap();
    let mb = markov_basis(&a, &cfg()).unwrap();
    assert_eq!(mb.len(), 1);
    assert_eq!(
        mb.elements[0].canonical().print(a.vars()).unwrap(),
        "q[|1234]*q[12|34]*q[13|24]*q[14|23] - q[1|234]*q[2|134]*q[3|124]*q[4|123]"
    );
    assert_eq!(a.codim(), 1);
    let p = cut_polytope(&Graph::complete(4)).unwrap();
    assert_eq!(normalized_volume(&p, &facets(&p).unwrap()).unwrap(), 4.into());
}

fn c4_printed() -> Vec<Binomial> {
    vec![
        b("q[|1234]*q[13|24] - q[1|234]*q[124|3]"),
        b("q[|1234]*q[13|24] - q[123|4]*q[134|2]"),
        b("q[|1234]*q[13|24] - q[12|34]*q[14|23]"),
    ]
}

#[test]
fn c4_is_a_complete_intersection_of_three_quadrics() {
    let g = Graph::cycle(4);
    let a = exponent_matrix(&g).unwrap();
    let mb = markov_basis(&a, &cfg()).unwrap();
    assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(2, 3)]);
    assert_eq!(a.codim(), 3);
    assert_eq!(cut_codim(&g), 3);

    let order = TermOrder::degrevlex(8);
    let printed = groebner(&c4_printed(), 8, &order, &GbConfig::default()).unwrap();
    let ours = groebner(&mb.elements, 8, &order, &GbConfig::default()).unwrap();
    assert!(ideal_equal(&printed, &ours));
    // dropping one printed generator loses the ideal
    let two = groebner(&c4_printed()[..2], 8, &order, &GbConfig::default()).unwrap();
    assert!(!ideal_equal(&two, &ours));

    let p = cut_polytope(&g).unwrap();
    let h = facets(&p).unwrap();
    assert_eq!(h.facets().len(), 16);
    assert_eq!(normalized_volume(&p, &h).unwrap(), 8.into());
}

#[test]
fn c4_initial_ideals_are_squarefree() {
    let a = exponent_matrix(&Graph::cycle(4)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..12 {
        let mut varorder: Vec<usize> = (0..8).collect();
        varorder.shuffle(&mut rng);
        let gb = toric_groebner(&a, &TermOrder::Degrevlex { varorder }, &cfg()).unwrap();
        assert!(is_squarefree(&initial_ideal(&gb)));
    }
}

#[test]
fn markov_bases_match_the_fiber_oracle() {
    for (name, a) in fixtures() {
        assert!(a.ncols() <= 10, "{name}");
        let mb = markov_basis(&a, &cfg()).unwrap();
        assert!(mb.certified);
        let bound = mb.mu().max(4);
        let (hist, connected) = fiber_histogram(&a, &mb.elements, bound);
        assert_eq!(hist, mb.degree_histogram, "{name}");
        assert!(connected, "{name}");
    }
}

#[test]
fn degree_by_degree_search_agrees() {
    for (name, a) in fixtures() {
        let by_degree = markov_by_degree(&a, &cfg()).unwrap();
        let from_gb = markov_basis(&a, &cfg()).unwrap();
        assert!(by_degree.certified, "{name}");
        assert_eq!(by_degree.degree_histogram, from_gb.degree_histogram, "{name}");
        assert!(by_degree.elements.iter().all(|x| a.contains(x)), "{name}");
        let (hist, connected) = fiber_histogram(&a, &by_degree.elements, by_degree.mu().max(4));
        assert_eq!(hist, by_degree.degree_histogram, "{name}");
        assert!(connected, "{name}");
    }
    for name in ["K5", "suspend(C4)", "C5", "K2,3"] {
        let a = exponent_matrix(&make_named(name).unwrap()).unwrap();
        let x = markov_by_degree(&a, &cfg()).unwrap();
        let y = markov_basis(&a, &cfg()).unwrap();
        assert_eq!(x.degree_histogram, y.degree_histogram, "{name}");
        let order = TermOrder::degrevlex(a.ncols());
        let gx = groebner(&x.elements, a.ncols(), &order, &GbConfig::default()).unwrap();
        let gy = groebner(&y.elements, a.ncols(), &order, &GbConfig::default()).unwrap();
        assert!(ideal_equal(&gx, &gy), "{name}");
    }
    // a degree cap below the largest generator leaves the result uncertified
    let a = exponent_matrix(&Graph::complete(5)).unwrap();
    let capped = ToricConfig { gb: GbConfig { max_degree: Some(5), ..GbConfig::default() }, ..cfg() };
    let mb = markov_by_degree(&a, &capped).unwrap();
    assert!(!mb.certified);
    assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(4, 20)]);
}

#[test]
fn known_fixture_histograms() {
    let twisted = ExponentMatrix::from_rows(vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]]).unwrap();
    let mb = markov_basis(&twisted, &cfg()).unwrap();
    assert_eq!(mb.degree_histogram.into_iter().collect::<Vec<_>>(), vec![(2, 3)]);
    let fixtures = fixtures();
    let table = &fixtures.iter().find(|(n, _)| n == "2x5 table").unwrap().1;
    // 2x2 minors of a 2x5 matrix
    assert_eq!(markov_basis(table, &cfg()).unwrap().degree_histogram[&2], 10);
}

#[test]
fn emitted_binomials_lie_in_the_kernel() {
    for name in ["K4", "C5", "K2,3", "suspend(C4)", "K5", "path4"] {
        let g = make_named(name).unwrap();
        let a = exponent_matrix(&g).unwrap();
        let mb = markov_basis(&a, &cfg()).unwrap();
        assert!(mb.elements.iter().all(|x| a.contains(x)), "{name}");
        for order in [TermOrder::lex(a.ncols()), TermOrder::degrevlex_last(a.ncols(), 3)] {
            let gb = toric_groebner(&a, &order, &cfg()).unwrap();
            assert!(gb.is_reduced());
            assert!(gb.elements().iter().all(|x| a.contains(x)), "{name}");
        }
    }
    let ctx = SumContext::glue(&Graph::complete(4), &Graph::complete(4), &[2, 3, 4]).unwrap();
    let k4 = exponent_matrix(&Graph::complete(4)).unwrap();
    let q = markov_basis(&k4, &cfg()).unwrap().elements;
    let m = compose_generating_set(&ctx, &q, &q).unwrap();
    assert!(m.iter().all(|c| ctx.exponent_matrix().contains(&c.binomial)));
    // a binomial outside the kernel is rejected
    assert!(!k4.contains(&b("q[|1234]*q[12|34] - q[1|234]*q[2|134]")));
}

#[test]
fn groebner_bases_do_not_depend_on_threads() {
    for name in ["K5", "suspend(C4)", "C5"] {
        let a = exponent_matrix(&make_named(name).unwrap()).unwrap();
        let runs: Vec<Vec<String>> = [1, 2, 4]
            .iter()
            .map(|&threads| {
                let cfg = ToricConfig { gb: GbConfig { threads, ..GbConfig::default() }, ..ToricConfig::default() };
                let gb = toric_groebner(&a, &TermOrder::degrevlex(a.ncols()), &cfg).unwrap();
                gb.elements().iter().map(|x| x.print(a.vars()).unwrap()).collect()
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{name}");
        assert_eq!(runs[0], runs[2], "{name}");
    }
}

#[test]
fn budget_marks_results_uncertified() {
    let a = exponent_matrix(&Graph::complete(5)).unwrap();
    let tight = ToricConfig { gb: GbConfig { max_degree: Some(4), ..GbConfig::default() }, ..ToricConfig::default() };
    match markov_basis(&a, &tight) {
        Ok(mb) => assert!(!mb.certified),
        Err(e) => assert!(matches!(e, cutkit_core::Error::Budget(_)), "{e}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn partitions_round_trip(n in 2usize..9, key in 0u64..256) {
        let key = key % (1 << (n - 1));
        let p = Partition::from_key(n, key);
        prop_assert_eq!(Partition::parse(&p.to_string()).unwrap(), p);
        prop_assert_eq!(p.key(), key);
    }

    #[test]
    fn printed_binomials_parse_back(seed in 0u64..1000) {
        let a = exponent_matrix(&Graph::cycle(5)).unwrap();
        let mb = markov_basis(&a, &cfg()).unwrap();
        let x = &mb.elements[(seed as usize) % mb.len()];
        let s = x.print(a.vars()).unwrap();
        prop_assert_eq!(&Binomial::parse(&s, a.vars()).unwrap(), x);
        prop_assert_eq!(&parse_cut_binomial(&s).unwrap(), x);
    }
}
