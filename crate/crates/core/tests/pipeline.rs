use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqchoose::discharging::{apply_rules, initial_charges, verify_bound};
use sqchoose::embedding::{faces_of, plane, RotationSystem};
use sqchoose::generate::*;
use sqchoose::graph::families::petersen;
use sqchoose::listcolor::{color_square_with_report, verify_square_coloring, ListAssignment};
use sqchoose::profile::TABLE;
use sqchoose::structure::{assign_sponsors, find_configs, Sponsorship};
use sqchoose::Graph;

#[test]
fn random_sparse_squares_are_colored_without_fallback() {
    for p in &TABLE[..5] {
        let mut rng = ChaCha8Rng::seed_from_u64(p.lemma as u64 + 100);
        for _ in 0..30 {
            let n = rng.gen_range(20..60);
            let g = random_sparse(n, p.mad_threshold().unwrap(), &mut rng);
            let lists = ListAssignment::random(g.vertex_count(), p.k, 2 * p.k, &mut rng);
            let r = color_square_with_report(&g, &lists, p, None).unwrap();
            verify_square_coloring(&g, &lists, &r.coloring).unwrap();
            assert!(r.fallbacks.is_empty(), "lemma {} fallbacks {:?}", p.lemma, r.fallbacks);
        }
    }
}

#[test]
fn plane_squares_are_colored_without_fallback() {
    let p = &TABLE[5];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..60 {
        let (g, rot) = random_plane_4regular(rng.gen_range(4..30), &mut rng);
        let del = rng.gen_range(0..3);
        let (g, rot) = delete_random(&g, &rot, del, &mut rng);
        let (g, rot) = if i % 3 == 0 { subdivide_plane(&g, &rot, 1) } else { (g, rot) };
        if !g.is_connected() || g.edge_count() == 0 {
            continue;
        }
        let lists = ListAssignment::random(g.vertex_count(), p.k, 2 * p.k, &mut rng);
        let r = color_square_with_report(&g, &lists, p, Some(&rot)).unwrap();
        verify_square_coloring(&g, &lists, &r.coloring).unwrap();
        assert!(r.fallbacks.is_empty());
    }
}

#[test]
fn configuration_free_graphs_satisfy_the_bound() {
    for p in &TABLE[..5] {
        let mut rng = ChaCha8Rng::seed_from_u64(p.lemma as u64);
        let mut free = 0;
        for _ in 0..1500 {
            let n = rng.gen_range(4..30);
            let g = random_max_degree4(n, rng.gen_range(n..3 * n), &mut rng);
            let s = rng.gen_range(0..2 * n);
            let g = subdivide_random(&g, s, &mut rng);
            if !find_configs(&g, p.lemma, None).unwrap().is_empty() {
                continue;
            }
            free += 1;
            let sponsors = assign_sponsors(&g, p.lemma).unwrap();
            let s0 = initial_charges(&g, p.lemma, None).unwrap();
            let s1 = apply_rules(&g, p.lemma, &s0, &sponsors, None).unwrap();
            assert_eq!(s0.total(), s1.total());
            let r = verify_bound(&s1, p.lemma).unwrap();
            assert!(r.holds(), "lemma {} violators {:?}", p.lemma, r.violators);
        }
        assert!(free > 0, "lemma {} produced no configuration-free graph", p.lemma);
    }
}

#[test]
fn configuration_free_plane_graphs_satisfy_the_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for i in 0..150 {
        let (g, rot) = random_plane_4regular(rng.gen_range(4..30), &mut rng);
        let (g, rot) = delete_random(&g, &rot, rng.gen_range(0..3), &mut rng);
        let (g, rot) = if i % 3 == 0 { subdivide_plane(&g, &rot, 1) } else { (g, rot) };
        if !g.is_connected() || g.edge_count() == 0 || !find_configs(&g, 6, Some(&rot)).unwrap().is_empty() {
            continue;
        }
        let f = faces_of(&g, &rot).unwrap();
        let s0 = initial_charges(&g, 6, Some(&f)).unwrap();
        let s1 = apply_rules(&g, 6, &s0, &Sponsorship::default(), Some(&f)).unwrap();
        assert_eq!(s0.total(), s1.total());
        assert!(verify_bound(&s1, 6).unwrap().holds());
    }
}

fn subdivided(g: &Graph, times: usize) -> Graph {
    let rot = RotationSystem::new(g.vertices().map(|v| g.neighbors(v).to_vec()).collect());
    subdivide_plane(g, &rot, times).0
}

#[test]
fn subdivided_regular_graphs_use_cycle_reductions() {
    let cubic = [plane::k4().0, plane::cube().0, petersen(), plane::dodecahedron().0];
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut quartic = vec![plane::octahedron().0];
    for n in [6, 10] {
        quartic.push(random_plane_4regular(n, &mut rng).0);
    }
    let cases: Vec<(usize, Graph)> = cubic
        .iter()
        .map(|g| (0, subdivided(g, 2)))
        .chain(cubic.iter().map(|g| (1, subdivided(g, 1))))
        .chain(quartic.iter().map(|g| (3, subdivided(g, 1))))
        .chain(quartic.iter().map(|g| (1, subdivided(g, 2))))
        .collect();
    let mut seen = BTreeSet::new();
    for (pi, g) in cases {
        let p = &TABLE[pi];
        for seed in 0..5 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let lists = ListAssignment::random(g.vertex_count(), p.k, 2 * p.k, &mut rng);
            let r = color_square_with_report(&g, &lists, p, None).unwrap();
            verify_square_coloring(&g, &lists, &r.coloring).unwrap();
            assert!(r.fallbacks.is_empty());
            seen.extend(r.reductions);
        }
    }
    for want in [(1, "iii"), (2, "jcycle"), (2, "hcycle"), (4, "jcycle")] {
        assert!(seen.contains(&want), "{want:?} never used");
    }
}
