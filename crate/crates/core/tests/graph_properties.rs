mod common;

use common::connected_graphs;
use cutkit_core::graph::{has_minor, is_series_parallel, max_induced_cycle};
use cutkit_core::polytope::{cut_polytope, facets, is_compressed, is_smooth};
use cutkit_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn graph_counts_up_to_isomorphism() {
    let counts: Vec<usize> = (2..=5).map(|n| connected_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 6, 21]);
}

#[test]
fn compressed_iff_no_k5_minor_and_short_induced_cycles() {
    let k5 = Graph::complete(5);
    for n in 2..=5 {
        for g in connected_graphs(n) {
            let p = cut_polytope(&g).unwrap();
            let h = facets(&p).unwrap();
            let predicted = !has_minor(&g, &k5).unwrap() && max_induced_cycle(&g) <= 4;
            assert_eq!(is_compressed(&p, &h), predicted, "{g}");
        }
    }
}

#[test]
fn smooth_iff_no_four_cycle_minor() {
    let c4 = Graph::cycle(4);
    for n in 2..=5 {
        for g in connected_graphs(n) {
            let p = cut_polytope(&g).unwrap();
            let h = facets(&p).unwrap();
            assert_eq!(is_smooth(&p, &h), !has_minor(&g, &c4).unwrap(), "{g}");
        }
    }
}

#[test]
fn series_parallel_iff_no_k4_minor() {
    let k4 = Graph::complete(4);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut checked = 0;
    let mut sp = 0;
    while checked < 300 {
        let n = rng.gen_range(4..=7);
        let density = rng.gen_range(0.2..0.7);
        let edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        let g = Graph::new(n, edges).unwrap();
        let free = !has_minor(&g, &k4).unwrap();
        assert_eq!(is_series_parallel(&g), free, "{g}");
        sp += free as usize;
        checked += 1;
    }
    // both outcomes are exercised
    assert!(sp > 30 && sp < 270, "{sp}");
}
