//! Seeded random corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::embedding::RotationSystem;
use crate::graph::{Graph, VertexId};
use crate::rational::Rational;
use crate::sparsity::mad_exact;

/// Random graph with maximum degree at most four: up to `m` attempts to add a
/// uniformly random edge between vertices of degree below four.
pub fn random_max_degree4<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    if n < 2 {
        return Graph::empty(n);
    }
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let (a, b) = (u.min(v), u.max(v));
        if a == b || deg[a] >= 4 || deg[b] >= 4 || edges.contains(&(a, b)) {
            continue;
        }
        deg[a] += 1;
        deg[b] += 1;
        edges.push((a, b));
    }
    Graph::from_edges(n, &edges).expect("simple by construction")
}

/// Subdivides random edges of the densest part until the maximum average
/// degree drops strictly below `threshold`.
pub fn sparsify_below<R: Rng>(g: &Graph, threshold: Rational, rng: &mut R) -> Graph {
    let mut g = g.clone();
    loop {
        if g.vertex_count() == 0 {
            return g;
        }
        let r = mad_exact(&g).expect("nonempty");
        if r.value < threshold {
            return g;
        }
        let mut inside = vec![false; g.vertex_count()];
        for &v in &r.witness {
            inside[v] = true;
        }
        let dense: Vec<(VertexId, VertexId)> = g.edges().filter(|&(u, v)| inside[u] && inside[v]).collect();
        // several edges at a time keeps large inputs fast
        let batch = (dense.len() / 16).max(1);
        for &(u, v) in dense.choose_multiple(rng, batch) {
            g = g.subdivide(u, v);
        }
    }
}

/// A random graph with maximum degree four and `mad < threshold`.
pub fn random_sparse<R: Rng>(n: usize, threshold: Rational, rng: &mut R) -> Graph {
    let m = rng.gen_range(n..=2 * n + 1);
    let g = random_max_degree4(n, m, rng);
    sparsify_below(&g, threshold, rng)
}

/// Subdivides random edges `count` times.
pub fn subdivide_random<R: Rng>(g: &Graph, count: usize, rng: &mut R) -> Graph {
    let mut g = g.clone();
    for _ in 0..count {
        let edges: Vec<_> = g.edges().collect();
        if let Some(&(u, v)) = edges.choose(rng) {
            g = g.subdivide(u, v);
        }
    }
    g
}

/// Random stacked triangulation on `n >= 3` vertices, drawn with straight
/// lines: start from a triangle and repeatedly insert a vertex into a random
/// bounded face.
pub fn stacked_triangulation<R: Rng>(n: usize, rng: &mut R) -> (Graph, RotationSystem) {
    assert!(n >= 3);
    let mut pos: Vec<(f64, f64)> = vec![(0.0, 0.0), (1.0, 0.0), (0.5, 0.9)];
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
    while pos.len() < n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(fi);
        let w: [f64; 3] = [rng.gen_range(1.0..2.0), rng.gen_range(1.0..2.0), rng.gen_range(1.0..2.0)];
        let s = w[0] + w[1] + w[2];
        let x = (w[0] * pos[a].0 + w[1] * pos[b].0 + w[2] * pos[c].0) / s;
        let y = (w[0] * pos[a].1 + w[1] * pos[b].1 + w[2] * pos[c].1) / s;
        let v = pos.len();
        pos.push((x, y));
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let g = Graph::from_edges(n, &edges).expect("simple by construction");
    let rot = RotationSystem::from_coordinates(&g, &pos);
    (g, rot)
}

/// The medial graph: one vertex per edge, two edges adjacent when they are
/// consecutive around a common endpoint. It is 4-regular and plane when the
/// input is plane with minimum degree three.
pub fn medial(g: &Graph, rot: &RotationSystem) -> (Graph, RotationSystem) {
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    let id = |a: VertexId, b: VertexId| edges.binary_search(&(a.min(b), a.max(b))).expect("edge");
    let step = |at: VertexId, from: VertexId, by: isize| {
        let r = rot.rotation(at);
        let i = r.iter().position(|&x| x == from).unwrap() as isize;
        r[(i + by).rem_euclid(r.len() as isize) as usize]
    };
    let mut medial_edges = Vec::new();
    let mut rotation = Vec::with_capacity(edges.len());
    for &(u, v) in &edges {
        // counter-clockwise around the midpoint of uv
        let around = [
            id(v, step(v, u, -1)),
            id(u, step(u, v, 1)),
            id(u, step(u, v, -1)),
            id(v, step(v, u, 1)),
        ];
        let me = id(u, v);
        for &f in &around {
            if me < f {
                medial_edges.push((me, f));
            }
        }
        rotation.push(around.to_vec());
    }
    let m = Graph::from_edges_simplified(edges.len(), &medial_edges);
    (m, RotationSystem::new(rotation))
}

/// Deletes `count` random vertices from a plane graph.
pub fn delete_random<R: Rng>(g: &Graph, rot: &RotationSystem, count: usize, rng: &mut R) -> (Graph, RotationSystem) {
    let mut all: Vec<VertexId> = g.vertices().collect();
    all.shuffle(rng);
    let mut keep: Vec<VertexId> = all[count.min(all.len())..].to_vec();
    keep.sort_unstable();
    let (h, _) = g.induced(&keep);
    (h, rot.restrict(&keep))
}

/// Subdivides every edge of a plane graph `times` times.
pub fn subdivide_plane(g: &Graph, rot: &RotationSystem, times: usize) -> (Graph, RotationSystem) {
    let (mut g, mut rot) = (g.clone(), rot.clone());
    let original: Vec<(VertexId, VertexId)> = g.edges().collect();
    for (u, v) in original {
        let mut a = u;
        for _ in 0..times {
            rot = rot.subdivide(a, v);
            g = g.subdivide(a, v);
            a = g.vertex_count() - 1;
        }
    }
    (g, rot)
}

/// Random 4-regular plane graph: the medial graph of a stacked
/// triangulation on `n` vertices (so `3n - 6` vertices).
pub fn random_plane_4regular<R: Rng>(n: usize, rng: &mut R) -> (Graph, RotationSystem) {
    let (t, rot) = stacked_triangulation(n, rng);
    medial(&t, &rot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::faces_of;
    use crate::rational::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_graphs_respect_degree_and_density() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let g = random_sparse(15, rat(16, 7), &mut rng);
            assert!(g.max_degree() <= 4);
            assert!(mad_exact(&g).unwrap().value < rat(16, 7));
        }
    }

    #[test]
    fn medial_graphs_are_plane_and_4_regular() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [4, 5, 9, 20] {
            let (t, rt) = stacked_triangulation(n, &mut rng);
            assert!(faces_of(&t, &rt).is_ok());
            let (m, rm) = medial(&t, &rt);
            assert!(m.vertices().all(|v| m.degree(v) == 4));
            let f = faces_of(&m, &rm).unwrap();
            assert_eq!(m.vertex_count() + f.len(), m.edge_count() + 2);
            let (d, rd) = delete_random(&m, &rm, 3, &mut rng);
            assert!(faces_of(&d, &rd).is_ok());
            let (s, rs) = subdivide_plane(&d, &rd, 2);
            assert!(faces_of(&s, &rs).is_ok());
        }
    }
}
