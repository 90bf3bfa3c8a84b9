use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqchoose::generate::random_sparse;
use sqchoose::graph::families::{complete, cycle};
use sqchoose::listcolor::{color_square, verify_square_coloring, ListAssignment};
use sqchoose::oracle::catalog::{catalog, localize, source};
use sqchoose::oracle::{is_k_choosable, verify_reduction, Verdict};
use sqchoose::profile::TABLE;
use sqchoose::structure::{config_names, find_configs};

#[test]
fn reference_values() {
    assert!(is_k_choosable(&cycle(4), 2, 4).unwrap());
    assert!(!is_k_choosable(&cycle(3), 2, 3).unwrap());
    assert!(!is_k_choosable(&complete(4), 3, 6).unwrap());
    assert!(is_k_choosable(&complete(4), 4, 6).unwrap());
}

#[test]
fn every_configuration_has_a_certified_instance() {
    for p in &TABLE {
        let cat = catalog(p.lemma).unwrap();
        for name in config_names(p.lemma).unwrap() {
            let inst = cat.get(name).unwrap_or_else(|| panic!("lemma {} {name} has no instance", p.lemma));
            let v = inst.verify(p.k).unwrap();
            assert!(v.is_certified(), "lemma {} {name}: {v:?}", p.lemma);
        }
    }
}

#[test]
fn residual_floors_of_thread_reductions() {
    let expect: [(u8, &str, [usize; 2]); 4] =
        [(1, "i", [2, 2]), (1, "ii", [1, 2]), (2, "i", [1, 3]), (2, "ii", [2, 1])];
    for (lemma, name, floors) in expect {
        let k = TABLE[lemma as usize - 1].k;
        let inst = catalog(lemma).unwrap().remove(name).unwrap();
        let v = inst.verify(k).unwrap();
        let got: Vec<usize> = v.floors().iter().map(|f| f.1).collect();
        assert_eq!(got, floors, "lemma {lemma} {name}");
    }
}

#[test]
fn every_match_in_the_sources_is_certified() {
    for p in &TABLE {
        for i in 0..150 {
            let (g, rot) = source(p.lemma, i);
            if g.edge_count() == 0 || g.max_degree() > 4 {
                continue;
            }
            for m in find_configs(&g, p.lemma, rot.as_ref()).unwrap() {
                // a cycle search may pick another cycle in the smaller host
                let v = match localize(&g, rot.as_ref(), &m) {
                    Some(inst) => inst.verify(p.k).unwrap(),
                    None => verify_reduction(&g, &m, p.k).unwrap(),
                };
                assert!(matches!(v, Verdict::Certified(_)), "lemma {} {}: {v:?}", p.lemma, m);
            }
        }
    }
}

#[test]
fn small_sparse_squares_are_choosable_by_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for p in &TABLE[..3] {
        let mut checked = 0;
        while checked < 6 {
            let g = random_sparse(rng.gen_range(5..9), p.mad_threshold().unwrap(), &mut rng);
            if g.vertex_count() > 12 {
                continue;
            }
            assert!(is_k_choosable(&g.square(), p.k, p.k + 1).unwrap());
            checked += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn engine_agrees_with_brute_force_on_small_graphs(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = &TABLE[0];
        let g = random_sparse(rng.gen_range(5..9), p.mad_threshold().unwrap(), &mut rng);
        prop_assume!(g.vertex_count() <= 12);
        let lists = ListAssignment::random(g.vertex_count(), p.k, p.k + 2, &mut rng);
        let c = color_square(&g, &lists, p, None).unwrap();
        prop_assert!(verify_square_coloring(&g, &lists, &c).is_ok());
    }

    #[test]
    fn choosability_is_monotone_in_k(n in 3usize..7, extra in 0usize..4, seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = cycle(n);
        for _ in 0..extra {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v && !g.has_edge(u, v) {
                g = g.with_edge(u, v);
            }
        }
        for k in 1..4 {
            if is_k_choosable(&g, k, k + 2).unwrap() {
                prop_assert!(is_k_choosable(&g, k + 1, k + 3).unwrap());
            }
        }
    }
}
