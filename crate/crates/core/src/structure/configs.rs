use super::threads::{enumerate_threads, Thread, ThreadDecomposition};
use super::{ConfigMatch, Extension};
use crate::embedding::{faces_of, FaceList, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

struct Ctx<'a> {
    g: &'a Graph,
    lemma: u8,
    td: ThreadDecomposition,
    faces: Option<FaceList>,
    incidences: Vec<Vec<usize>>,
}

type Detector = fn(&Ctx, &'static str) -> Vec<ConfigMatch>;

fn catalogue(lemma: u8) -> Result<&'static [(&'static str, Detector)]> {
    Ok(match lemma {
        1 => &[("i", l1_i), ("ii", l1_ii), ("iii", l1_iii), ("low", low)],
        2 => &[
            ("i", l2_i),
            ("ii", l2_ii),
            ("jcycle", l2_jcycle),
            ("low", low),
            ("hcycle", l2_hcycle),
        ],
        3 => &[("i", adj2), ("ii", l3_ii), ("iii", l3_iii), ("low", low)],
        4 => &[
            ("adj2", adj2),
            ("i", l4_i),
            ("ii", l4_ii),
            ("iii", l4_iii),
            ("iv", l4_iv),
            ("jcycle", l4_jcycle),
            ("low", low),
        ],
        5 => &[
            ("i", l5_i),
            ("ii", l5_ii),
            ("iii", l5_iii),
            ("iv", l5_iv),
            ("adj2", adj2),
            ("low", low),
        ],
        6 => &[
            ("i", l6_i),
            ("ii", l6_ii),
            ("iii", l6_iii),
            ("iv", l6_iv),
            ("v", l6_v),
            ("vi", l6_vi),
        ],
        other => return Err(Error::UnknownLemma(other)),
    })
}

fn context<'a>(g: &'a Graph, lemma: u8, embedding: Option<&RotationSystem>) -> Result<Ctx<'a>> {
    let faces = match (lemma, embedding) {
        (6, None) => return Err(Error::EmbeddingRequired(6)),
        (6, Some(rot)) => Some(faces_of(g, rot)?),
        _ => None,
    };
    context_with_faces(g, lemma, faces)
}

fn context_with_faces(g: &Graph, lemma: u8, faces: Option<FaceList>) -> Result<Ctx<'_>> {
    catalogue(lemma)?;
    if g.max_degree() > 4 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds 4",
            g.max_degree()
        )));
    }
    if lemma == 6 && faces.is_none() {
        return Err(Error::EmbeddingRequired(6));
    }
    let faces = if lemma == 6 { faces } else { None };
    let incidences = faces
        .as_ref()
        .map(|f| f.incidences(g.vertex_count()))
        .unwrap_or_default();
    Ok(Ctx {
        g,
        lemma,
        td: enumerate_threads(g),
        faces,
        incidences,
    })
}

/// Configuration labels checked for `lemma`, in detection order.
pub fn config_names(lemma: u8) -> Result<Vec<&'static str>> {
    Ok(catalogue(lemma)?.iter().map(|(label, _)| *label).collect())
}

/// Every match, in catalogue order then ascending anchor.
pub fn find_configs(
    g: &Graph,
    lemma: u8,
    embedding: Option<&RotationSystem>,
) -> Result<Vec<ConfigMatch>> {
    let ctx = context(g, lemma, embedding)?;
    Ok(catalogue(lemma)?
        .iter()
        .flat_map(|(label, det)| det(&ctx, label))
        .collect())
}

/// As [`find_configs`], with the faces of the embedding already traced.
pub fn find_configs_with_faces(g: &Graph, lemma: u8, faces: Option<&FaceList>) -> Result<Vec<ConfigMatch>> {
    let ctx = context_with_faces(g, lemma, faces.cloned())?;
    Ok(catalogue(lemma)?
        .iter()
        .flat_map(|(label, det)| det(&ctx, label))
        .collect())
}

/// The first match in catalogue order.
pub fn find_first(
    g: &Graph,
    lemma: u8,
    embedding: Option<&RotationSystem>,
) -> Result<Option<ConfigMatch>> {
    let ctx = context(g, lemma, embedding)?;
    for (label, det) in catalogue(lemma)? {
        if let Some(m) = det(&ctx, label).into_iter().next() {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

fn greedy(
    c: &Ctx,
    label: &'static str,
    vertices: Vec<VertexId>,
    deleted: Vec<VertexId>,
    uncolored: Vec<VertexId>,
    order: Vec<VertexId>,
) -> ConfigMatch {
    ConfigMatch {
        lemma: c.lemma,
        config: label,
        vertices,
        deleted,
        uncolored,
        order,
        extension: Extension::Greedy,
        faces: Vec::new(),
    }
}

fn deg(c: &Ctx, v: VertexId) -> usize {
    c.g.degree(v)
}

fn nbrs_of_degree(c: &Ctx, v: VertexId, d: usize) -> Vec<VertexId> {
    c.g.neighbors(v).iter().copied().filter(|&w| deg(c, w) == d).collect()
}

/// The neighbour of the 2-vertex `x` other than `from`.
fn across(c: &Ctx, x: VertexId, from: VertexId) -> VertexId {
    let nb = c.g.neighbors(x);
    if nb[0] == from {
        nb[1]
    } else {
        nb[0]
    }
}

fn vertices_of_degree<'a>(c: &'a Ctx, d: usize) -> impl Iterator<Item = VertexId> + 'a {
    c.g.vertices().filter(move |&v| c.g.degree(v) == d)
}

/// Thread oriented so that it starts at an endpoint of degree `d`.
fn oriented_from_degree(c: &Ctx, t: &Thread, d: usize) -> Option<Thread> {
    if deg(c, t.ends.0) == d {
        Some(t.clone())
    } else if deg(c, t.ends.1) == d {
        Some(t.reversed())
    } else {
        None
    }
}

fn low(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.g.vertices()
        .filter(|&v| deg(c, v) <= 1)
        .map(|v| {
            let mut vs = vec![v];
            vs.extend_from_slice(c.g.neighbors(v));
            greedy(c, label, vs, vec![v], vec![], vec![v])
        })
        .collect()
}

fn adj2(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.td.threads
        .iter()
        .filter(|t| t.len() >= 2)
        .map(|t| {
            let (v, w) = (t.interior[0], t.interior[1]);
            greedy(c, label, vec![v, w], vec![v, w], vec![], vec![v, w])
        })
        .collect()
}

fn l1_i(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.td.threads
        .iter()
        .filter(|t| t.len() >= 4)
        .map(|t| {
            let s = &t.interior;
            greedy(c, label, s[..4].to_vec(), vec![s[1], s[2]], vec![], vec![s[1], s[2]])
        })
        .collect()
}

fn l1_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.td.threads
        .iter()
        .filter(|t| t.len() == 3)
        .filter_map(|t| oriented_from_degree(c, t, 3))
        .map(|t| {
            let (u, s) = (t.ends.0, &t.interior);
            greedy(c, label, vec![u, s[0], s[1], s[2]], vec![s[0], s[1]], vec![], vec![s[0], s[1]])
        })
        .collect()
}

fn l2_i(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.td.threads
        .iter()
        .filter(|t| t.len() >= 3)
        .map(|t| {
            let (a, s) = (t.ends.0, &t.interior);
            greedy(c, label, vec![a, s[0], s[1], s[2]], vec![s[0], s[1]], vec![], vec![s[0], s[1]])
        })
        .collect()
}

fn l2_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.td.threads
        .iter()
        .filter(|t| t.len() == 2)
        .filter_map(|t| oriented_from_degree(c, t, 3))
        .map(|t| {
            let (u, v, w) = (t.ends.0, t.interior[0], t.interior[1]);
            greedy(c, label, vec![u, v, w], vec![v, w], vec![], vec![w, v])
        })
        .collect()
}

/// Disjoint-set forest with path halving.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Multigraph edge `(a, b, id)` on hub vertices.
type HubEdge = (VertexId, VertexId, usize);

/// Path of edge ids from `from` to `to` in a forest given as adjacency lists.
fn forest_path(
    forest: &[Vec<(VertexId, usize)>],
    from: VertexId,
    to: VertexId,
) -> Vec<(VertexId, usize, VertexId)> {
    let mut parent: Vec<Option<(VertexId, usize)>> = vec![None; forest.len()];
    let mut seen = vec![false; forest.len()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(y, e) in &forest[x] {
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, e));
                queue.push_back(y);
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, e) = parent[cur].expect("endpoints share a tree");
        path.push((p, e, cur));
        cur = p;
    }
    path.reverse();
    path
}

/// For each edge closing a cycle (in input order), the cycle as a walk of
/// `(hub, edge, next hub)` steps starting and ending at the closing edge's
/// first endpoint.
fn fundamental_cycles(n: usize, edges: &[HubEdge]) -> Vec<Vec<(VertexId, usize, VertexId)>> {
    let mut dsu = Dsu::new(n);
    let mut forest = vec![Vec::new(); n];
    let mut out = Vec::new();
    for &(a, b, id) in edges {
        if dsu.union(a, b) {
            forest[a].push((b, id));
            forest[b].push((a, id));
        } else {
            let mut walk = vec![(a, id, b)];
            walk.extend(forest_path(&forest, b, a));
            out.push(walk);
        }
    }
    out
}

/// Cycles formed by 2-threads whose endpoints satisfy `hub`; every
/// interior vertex is deleted and recoloured from 2-lists around the cycle.
fn thread_cycles(c: &Ctx, label: &'static str, hub: fn(usize) -> bool) -> Vec<ConfigMatch> {
    let threads: Vec<(usize, &Thread)> = c
        .td
        .threads
        .iter()
        .enumerate()
        .filter(|(_, t)| t.len() == 2 && hub(deg(c, t.ends.0)) && hub(deg(c, t.ends.1)))
        .collect();
    let edges: Vec<HubEdge> = threads.iter().map(|(i, t)| (t.ends.0, t.ends.1, *i)).collect();
    fundamental_cycles(c.g.vertex_count(), &edges)
        .into_iter()
        .map(|walk| {
            let mut vertices = Vec::new();
            let mut ring = Vec::new();
            for (from, id, _) in walk {
                let t = &c.td.threads[id];
                let t = if t.ends.0 == from { t.clone() } else { t.reversed() };
                vertices.push(from);
                vertices.extend_from_slice(&t.interior);
                ring.extend_from_slice(&t.interior);
            }
            ConfigMatch {
                lemma: c.lemma,
                config: label,
                vertices,
                deleted: ring.clone(),
                uncolored: vec![],
                order: ring,
                extension: Extension::EvenCycle,
                faces: vec![],
            }
        })
        .collect()
}

fn l1_iii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    thread_cycles(c, label, |d| d == 3)
}

fn l2_hcycle(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    thread_cycles(c, label, |d| d >= 3)
}

/// A cycle `u1 v1 u2 v2 ... uk vk` in the multigraph whose vertices are
/// `hub_degree`-vertices and whose edges are 2-vertices joining two of them,
/// plus one further such 2-vertex `z` at `v1`. Deletes `u1, v1, u2, z` and
/// uncolours `u3, ..., uk`.
fn ear_cycles(c: &Ctx, label: &'static str, hub_degree: usize) -> Vec<ConfigMatch> {
    let g = c.g;
    let hubs_of = |x: VertexId| {
        let nb = g.neighbors(x);
        (nb[0], nb[1])
    };
    let edges: Vec<HubEdge> = g
        .vertices()
        .filter(|&x| deg(c, x) == 2)
        .filter(|&x| {
            let (a, b) = hubs_of(x);
            deg(c, a) == hub_degree && deg(c, b) == hub_degree
        })
        .map(|x| {
            let (a, b) = hubs_of(x);
            (a, b, x)
        })
        .collect();
    let mut dsu = Dsu::new(g.vertex_count());
    for &(a, b, _) in &edges {
        dsu.union(a, b);
    }
    let mut counts = vec![(0usize, 0usize); g.vertex_count()];
    let mut is_hub = vec![false; g.vertex_count()];
    for &(a, b, _) in &edges {
        is_hub[a] = true;
        is_hub[b] = true;
    }
    for v in g.vertices().filter(|&v| is_hub[v]) {
        counts[dsu.find(v)].0 += 1;
    }
    for &(a, _, _) in &edges {
        counts[dsu.find(a)].1 += 1;
    }
    let mut out = Vec::new();
    for root in g.vertices() {
        let (nv, ne) = counts[root];
        if ne <= nv || dsu.find(root) != root {
            continue;
        }
        let comp: Vec<HubEdge> = edges.iter().copied().filter(|e| dsu.find(e.0) == root).collect();
        let walk = fundamental_cycles(g.vertex_count(), &comp)
            .into_iter()
            .next()
            .expect("component with more edges than vertices has a cycle");
        let on_cycle: Vec<usize> = walk.iter().map(|s| s.1).collect();
        // first off-cycle edge at a cycle hub, in cycle order
        let Some((pos, z)) = walk.iter().enumerate().find_map(|(i, &(h, _, _))| {
            comp.iter()
                .filter(|e| !on_cycle.contains(&e.2) && (e.0 == h || e.1 == h))
                .map(|e| e.2)
                .min()
                .map(|z| (i, z))
        }) else {
            continue;
        };
        let k = walk.len();
        // hubs h_i = walk[i].0, connectors c_i = walk[i].1 between h_i and h_{i+1}
        let hub_at = |i: usize| walk[(pos + i) % k].0;
        let conn_at = |i: usize| walk[(pos + i) % k].1;
        let v1 = hub_at(0);
        let u1 = conn_at(k - 1);
        let mut cycle = vec![u1];
        cycle.extend((0..k - 1).map(conn_at));
        let y = across(c, z, v1);
        let mut vertices = vec![z, y];
        for (i, &x) in cycle.iter().enumerate() {
            vertices.push(x);
            vertices.push(hub_at(i));
        }
        let deleted = vec![u1, v1, cycle[1], z];
        let uncolored = cycle[2..].to_vec();
        let mut order = vec![v1];
        order.extend_from_slice(&cycle);
        order.push(z);
        out.push(ConfigMatch {
            lemma: c.lemma,
            config: label,
            vertices,
            deleted,
            uncolored,
            order,
            extension: Extension::CycleWithEar { hub: v1, cycle, ear: z },
            faces: vec![],
        });
    }
    out
}

fn l2_jcycle(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    ear_cycles(c, label, 3)
}

fn l4_jcycle(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    ear_cycles(c, label, 4)
}

fn l3_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            (x.len() == 3).then(|| {
                greedy(
                    c,
                    label,
                    vec![u, x[0], x[1], x[2]],
                    vec![u, x[0], x[1], x[2]],
                    vec![],
                    vec![x[0], x[1], x[2], u],
                )
            })
        })
        .collect()
}

fn l3_iii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            if x.len() != 2 {
                return None;
            }
            let far = x.iter().position(|&xi| deg(c, across(c, xi, u)) == 3)?;
            let (xf, xo) = (x[far], x[1 - far]);
            let y = across(c, xf, u);
            Some(greedy(c, label, vec![u, xf, y, xo], vec![u, xf, xo], vec![], vec![u, xo, xf]))
        })
        .collect()
}

/// 2-vertex kinds by neighbour degrees.
fn is_light(c: &Ctx, x: VertexId) -> bool {
    deg(c, x) == 2 && c.g.neighbors(x).iter().all(|&w| deg(c, w) == 3)
}

fn is_medium(c: &Ctx, x: VertexId) -> bool {
    if deg(c, x) != 2 {
        return false;
    }
    let nb = c.g.neighbors(x);
    let (a, b) = (deg(c, nb[0]), deg(c, nb[1]));
    (a, b) == (3, 4) || (a, b) == (4, 3)
}

/// First light 2-neighbour of a 3-vertex.
fn light_neighbor(c: &Ctx, s: VertexId) -> Option<VertexId> {
    if deg(c, s) != 3 {
        return None;
    }
    c.g.neighbors(s).iter().copied().find(|&x| is_light(c, x))
}

fn l4_i(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            (x.len() >= 2).then(|| {
                greedy(c, label, vec![u, x[0], x[1]], vec![u, x[0], x[1]], vec![], vec![u, x[0], x[1]])
            })
        })
        .collect()
}

fn l4_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let s = nbrs_of_degree(c, u, 3);
            let x = c.g.neighbors(u).iter().copied().find(|&x| is_light(c, x))?;
            (s.len() == 2).then(|| greedy(c, label, vec![u, x, s[0], s[1]], vec![x], vec![u], vec![u, x]))
        })
        .collect()
}

fn l4_iii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            if x.len() < 3 {
                return None;
            }
            let m = *x.iter().find(|&&xi| is_medium(c, xi))?;
            let others: Vec<VertexId> = x.iter().copied().filter(|&xi| xi != m).take(2).collect();
            Some(greedy(
                c,
                label,
                vec![u, m, others[0], others[1]],
                vec![u, m, others[0], others[1]],
                vec![],
                vec![u, others[0], others[1], m],
            ))
        })
        .collect()
}

fn l4_iv(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            if x.len() < 2 {
                return None;
            }
            let m = *x.iter().find(|&&xi| is_medium(c, xi))?;
            let o = *x.iter().find(|&&xi| xi != m)?;
            let (s, l) = c
                .g
                .neighbors(u)
                .iter()
                .find_map(|&s| light_neighbor(c, s).map(|l| (s, l)))?;
            Some(greedy(c, label, vec![u, s, l, m, o], vec![u, m, o, l], vec![s], vec![u, s, o, m, l]))
        })
        .collect()
}

fn l5_i(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 2)
        .filter_map(|x| {
            let s = *nbrs_of_degree(c, x, 3).first()?;
            Some(greedy(c, label, vec![x, s], vec![x], vec![s], vec![s, x]))
        })
        .collect()
}

fn l5_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let s = nbrs_of_degree(c, u, 3);
            (s.len() >= 2).then(|| greedy(c, label, vec![u, s[0], s[1]], vec![u], vec![s[0], s[1]], vec![s[0], s[1], u]))
        })
        .collect()
}

fn l5_iii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let x = nbrs_of_degree(c, u, 2);
            (x.len() >= 2).then(|| greedy(c, label, vec![u, x[0], x[1]], vec![x[0], x[1]], vec![u], vec![u, x[0], x[1]]))
        })
        .collect()
}

fn l5_iv(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let x = *nbrs_of_degree(c, u, 2).first()?;
            let s = *nbrs_of_degree(c, u, 3).first()?;
            Some(greedy(c, label, vec![u, x, s], vec![x], vec![u, s], vec![u, s, x]))
        })
        .collect()
}

fn faces<'a>(c: &'a Ctx) -> &'a FaceList {
    c.faces.as_ref().expect("plane lemma has faces")
}

/// Faces of length `len` through `u` with distinct vertices, with `u`'s two
/// neighbours along each.
fn short_faces(c: &Ctx, u: VertexId, len: usize) -> Vec<(usize, VertexId, VertexId)> {
    let fl = faces(c);
    let mut out = Vec::new();
    let mut inc = c.incidences[u].clone();
    inc.dedup();
    for fi in inc {
        let w = &fl.faces[fi].walk;
        if w.len() != len {
            continue;
        }
        let mut sorted = w.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != len {
            continue;
        }
        let i = w.iter().position(|&x| x == u).unwrap();
        out.push((fi, w[(i + len - 1) % len], w[(i + 1) % len]));
    }
    out
}

fn l6_i(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    c.g.vertices()
        .filter(|&v| deg(c, v) <= 2)
        .map(|v| {
            let nb = c.g.neighbors(v);
            let mut vs = vec![v];
            vs.extend_from_slice(nb);
            if nb.len() == 2 {
                greedy(c, label, vs, vec![v], vec![nb[0]], vec![nb[0], v])
            } else {
                greedy(c, label, vs, vec![v], vec![], vec![v])
            }
        })
        .collect()
}

fn l6_ii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let v = *nbrs_of_degree(c, u, 3).iter().find(|&&v| v > u)?;
            let a1 = *c.g.neighbors(u).iter().find(|&&a| a != v)?;
            Some(greedy(c, label, vec![u, v, a1], vec![u], vec![v, a1], vec![a1, v, u]))
        })
        .collect()
}

fn three_on_face(c: &Ctx, label: &'static str, len: usize) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 3)
        .filter_map(|u| {
            let (fi, a, b) = *short_faces(c, u, len).first()?;
            let mut m = greedy(c, label, vec![u, a, b], vec![u], vec![a, b], vec![a, b, u]);
            m.faces = vec![fi];
            Some(m)
        })
        .collect()
}

fn l6_iii(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    three_on_face(c, label, 3)
}

fn l6_iv(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    three_on_face(c, label, 4)
}

/// Deletes the 4-vertex `u` and uncolours every neighbour but one. The kept
/// neighbour avoids the short faces at `u` when possible; the uncoloured ones
/// are ordered by how many coloured square-neighbours they keep.
fn four_vertex_match(c: &Ctx, label: &'static str, u: VertexId, fs: &[(usize, VertexId, VertexId)]) -> ConfigMatch {
    let g = c.g;
    let tri = short_faces(c, u, 3);
    let quad = short_faces(c, u, 4);
    let on = |set: &[(usize, VertexId, VertexId)], w: VertexId| set.iter().any(|&(_, a, b)| a == w || b == w);
    let nb = g.neighbors(u);
    let keeper = nb
        .iter()
        .copied()
        .find(|&w| !on(&tri, w) && !on(&quad, w))
        .or_else(|| nb.iter().copied().find(|&w| !on(&tri, w)))
        .unwrap_or(nb[nb.len() - 1]);
    let uncolored: Vec<VertexId> = nb.iter().copied().filter(|&w| w != keeper).collect();
    let mut affected = uncolored.clone();
    affected.push(u);
    let mut order = uncolored.clone();
    order.sort_by_key(|&w| {
        let outside = g.square_neighbors(w).iter().filter(|x| !affected.contains(x)).count();
        (std::cmp::Reverse(outside), w)
    });
    order.push(u);
    let mut vertices = vec![u];
    vertices.extend_from_slice(nb);
    let mut m = greedy(c, label, vertices, vec![u], uncolored, order);
    m.faces = fs.iter().map(|f| f.0).collect();
    m
}

fn l6_v(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let tri = short_faces(c, u, 3);
            (tri.len() >= 2).then(|| four_vertex_match(c, label, u, &tri[..2]))
        })
        .collect()
}

fn l6_vi(c: &Ctx, label: &'static str) -> Vec<ConfigMatch> {
    vertices_of_degree(c, 4)
        .filter_map(|u| {
            let tri = short_faces(c, u, 3);
            let quad = short_faces(c, u, 4);
            (!tri.is_empty() && !quad.is_empty()).then(|| four_vertex_match(c, label, u, &[tri[0], quad[0]]))
        })
        .collect()
}
