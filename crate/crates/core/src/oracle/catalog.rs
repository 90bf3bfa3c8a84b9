//! Host instances for every configuration, cut down to the neighbourhood
//! the extension can see.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{faces_of, plane, RotationSystem};
use crate::error::Result;
use crate::generate::{delete_random, random_max_degree4, random_plane_4regular, subdivide_plane, subdivide_random};
use crate::graph::families::petersen;
use crate::graph::{Graph, VertexId};
use crate::par::Execution;
use crate::structure::{config_names, find_configs, ConfigMatch};

use super::{verify_reduction, Verdict};

#[derive(Clone, Debug)]
pub struct Instance {
    pub host: Graph,
    pub rotation: Option<RotationSystem>,
    pub m: ConfigMatch,
}

impl Instance {
    pub fn verify(&self, k: usize) -> Result<Verdict> {
        verify_reduction(&self.host, &self.m, k)
    }
}

/// Same configuration on the same vertices, up to the direction it was
/// read in.
fn same_shape(a: &ConfigMatch, b: &ConfigMatch) -> bool {
    let sorted = |xs: &[VertexId]| {
        let mut v = xs.to_vec();
        v.sort_unstable();
        v
    };
    a.lemma == b.lemma
        && a.config == b.config
        && sorted(&a.vertices) == sorted(&b.vertices)
        && sorted(&a.deleted) == sorted(&b.deleted)
        && a.affected() == b.affected()
}

/// Keeps the affected vertices, their neighbours, everything the predicate
/// inspected and the walks of short faces at inspected vertices, then
/// restores every kept degree with fresh leaves so that no two coloured
/// square-neighbours coincide by accident. Returns `None` when the smaller
/// host no longer exhibits the match.
pub fn localize(g: &Graph, rot: Option<&RotationSystem>, m: &ConfigMatch) -> Option<Instance> {
    let mut keep: Vec<VertexId> = m.affected();
    for &x in &m.affected() {
        keep.extend_from_slice(g.neighbors(x));
    }
    keep.extend_from_slice(&m.vertices);
    if let Some(r) = rot {
        let faces = faces_of(g, r).ok()?;
        for &fi in &m.faces {
            keep.extend_from_slice(&faces.faces.get(fi)?.walk);
        }
        for f in &faces.faces {
            if f.len() <= 4 && f.walk.iter().any(|x| m.vertices.contains(x)) {
                keep.extend_from_slice(&f.walk);
            }
        }
    }
    keep.sort_unstable();
    keep.dedup();
    let (h, ids) = g.induced(&keep);
    let mut edges: Vec<(VertexId, VertexId)> = h.edges().collect();
    let mut rotation = rot.map(|r| r.restrict(&keep));
    let mut n = h.vertex_count();
    for v in h.vertices() {
        for _ in h.degree(v)..g.degree(ids[v]) {
            edges.push((v, n));
            if let Some(r) = rotation.as_mut() {
                let mut rows: Vec<Vec<VertexId>> = (0..n).map(|u| r.rotation(u).to_vec()).collect();
                rows[v].push(n);
                rows.push(vec![v]);
                *r = RotationSystem::new(rows);
            }
            n += 1;
        }
    }
    let host = Graph::from_edges(n, &edges).ok()?;
    let new_id = |old: VertexId| keep.binary_search(&old).unwrap();
    let want = m.relabel(new_id);
    let found = find_configs(&host, m.lemma, rotation.as_ref()).ok()?;
    let m = found.into_iter().find(|f| same_shape(f, &want))?;
    Some(Instance { host, rotation, m })
}

/// Seeded hosts for the general lemmas: random graphs of maximum degree
/// four with random subdivisions, and subdivided cubic and quartic graphs.
fn general_source(i: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
    if i % 4 == 3 {
        let bases = [plane::k4().0, plane::cube().0, petersen(), plane::octahedron().0];
        let g = &bases[(i / 4) % bases.len()];
        let rot = RotationSystem::new(g.vertices().map(|v| g.neighbors(v).to_vec()).collect());
        let (g, _) = subdivide_plane(g, &rot, 1 + (i / 16) % 3);
        return subdivide_random(&g, rng.gen_range(0..4), &mut rng);
    }
    let n = rng.gen_range(4..24);
    let g = random_max_degree4(n, rng.gen_range(n..3 * n), &mut rng);
    let s = rng.gen_range(0..2 * n);
    subdivide_random(&g, s, &mut rng)
}

/// Seeded plane hosts: small polyhedra and 4-regular medial graphs with a
/// few vertices deleted, sometimes subdivided.
fn plane_source(i: usize) -> (Graph, RotationSystem) {
    let fixed = [plane::k4(), plane::cube(), plane::octahedron(), plane::dodecahedron()];
    if i < fixed.len() {
        return fixed[i].clone();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
    let (g, rot) = random_plane_4regular(rng.gen_range(4..16), &mut rng);
    let del = rng.gen_range(0..4);
    let (g, rot) = delete_random(&g, &rot, del, &mut rng);
    if i.is_multiple_of(3) {
        subdivide_plane(&g, &rot, 1)
    } else {
        (g, rot)
    }
}

pub const SEARCH_BUDGET: usize = 4000;
/// Sources always scanned, so the tightest instance seen is kept.
pub const WORST_CASE_SCAN: usize = 600;

/// Source host number `i` for `lemma`.
pub fn source(lemma: u8, i: usize) -> (Graph, Option<RotationSystem>) {
    if lemma == 6 {
        let (g, r) = plane_source(i);
        (g, Some(r))
    } else {
        (general_source(i), None)
    }
}

/// Coloured square-neighbours summed over the affected vertices; higher
/// means smaller residual lists.
pub fn pressure(inst: &Instance) -> usize {
    let a = inst.m.affected();
    a.iter()
        .map(|&x| {
            inst.host
                .square_neighbors(x)
                .iter()
                .filter(|w| a.binary_search(w).is_err())
                .count()
        })
        .sum()
}

/// Localized instances of every match in source `i`.
fn instances_of_source(lemma: u8, i: usize) -> Result<Vec<Instance>> {
    let (g, rot) = source(lemma, i);
    if g.edge_count() == 0 || g.max_degree() > 4 {
        return Ok(vec![]);
    }
    Ok(find_configs(&g, lemma, rot.as_ref())?
        .iter()
        .filter_map(|m| localize(&g, rot.as_ref(), m))
        .collect())
}

/// The highest-pressure instance per label among sources `range`, merged
/// in source order so the result does not depend on `exec`.
pub fn scan_sources(
    lemma: u8,
    range: std::ops::Range<usize>,
    exec: Execution,
    out: &mut BTreeMap<&'static str, Instance>,
) -> Result<()> {
    let ids: Vec<usize> = range.collect();
    for found in exec.map(&ids, |&i| instances_of_source(lemma, i)) {
        for inst in found? {
            let better = out.get(inst.m.config).is_none_or(|old| pressure(&inst) > pressure(old));
            if better {
                out.insert(inst.m.config, inst);
            }
        }
    }
    Ok(())
}

/// One localized instance per configuration label, the one with the highest
/// pressure among the seeded sources scanned. Labels never seen within the
/// budget are absent.
pub fn catalog(lemma: u8) -> Result<BTreeMap<&'static str, Instance>> {
    catalog_with(lemma, Execution::default())
}

pub fn catalog_with(lemma: u8, exec: Execution) -> Result<BTreeMap<&'static str, Instance>> {
    let names = config_names(lemma)?.len();
    let mut out = BTreeMap::new();
    scan_sources(lemma, 0..WORST_CASE_SCAN, exec, &mut out)?;
    let mut next = WORST_CASE_SCAN;
    while out.len() < names && next < SEARCH_BUDGET {
        let end = (next + WORST_CASE_SCAN).min(SEARCH_BUDGET);
        scan_sources(lemma, next..end, exec, &mut out)?;
        next = end;
    }
    Ok(out)
}

/// Hubs `0..k` of degree `hub_degree` on a cycle through 2-vertices, one
/// more 2-vertex joining hub 0 to hub `j`, and pendant leaves filling the
/// remaining degrees. For `k = 2` the two hubs share `hub_degree`
/// 2-vertices. The extra 2-vertex ends on the cycle.
pub fn chorded_hub_cycle(k: usize, j: usize, hub_degree: usize) -> Graph {
    let mut edges = Vec::new();
    if k == 2 {
        for x in 0..hub_degree {
            edges.extend([(0, 2 + x), (1, 2 + x)]);
        }
        return Graph::from_edges(2 + hub_degree, &edges).expect("simple");
    }
    let mut n = k;
    for i in 0..k {
        edges.extend([(i, n), (n, (i + 1) % k)]);
        n += 1;
    }
    edges.extend([(0, n), (n, j)]);
    n += 1;
    let mut deg = vec![2; k];
    deg[0] += 1;
    deg[j] += 1;
    for (h, &d) in deg.iter().enumerate() {
        for _ in d..hub_degree {
            edges.push((h, n));
            n += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// Cycle matches whose ear 2-vertex has its far endpoint on the cycle.
pub fn ear_corners(lemma: u8) -> Vec<Instance> {
    let hub_degree = match lemma {
        2 => 3,
        4 => 4,
        _ => return vec![],
    };
    let mut out = Vec::new();
    for k in 2..8 {
        for j in 1..k.max(2) {
            let host = chorded_hub_cycle(k, j, hub_degree);
            for m in find_configs(&host, lemma, None).expect("maximum degree four") {
                let hubs: Vec<VertexId> = m.vertices[2..].iter().skip(1).step_by(2).copied().collect();
                if m.config == "jcycle" && hubs.contains(&m.vertices[1]) {
                    out.push(Instance {
                        host: host.clone(),
                        rotation: None,
                        m,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn localize_keeps_the_match() {
        let g = crate::graph::families::path(12);
        for m in find_configs(&g, 1, None).unwrap() {
            let inst = localize(&g, None, &m).unwrap();
            assert!(inst.host.vertex_count() < g.vertex_count());
            assert_eq!(inst.m.config, m.config);
            assert!(inst.verify(5).unwrap().is_certified());
        }
    }

    #[test]
    fn scan_does_not_depend_on_execution() {
        let (mut a, mut b) = (BTreeMap::new(), BTreeMap::new());
        scan_sources(2, 0..60, Execution::Sequential, &mut a).unwrap();
        scan_sources(2, 0..60, Execution::Parallel, &mut b).unwrap();
        assert_eq!(a.len(), b.len());
        for (k, x) in &a {
            assert_eq!(x.m, b[k].m);
        }
    }

    #[test]
    fn ear_corners_exist() {
        assert!(ear_corners(2).len() >= 20);
        assert!(ear_corners(4).len() >= 20);
        assert!(ear_corners(1).is_empty());
    }
}
