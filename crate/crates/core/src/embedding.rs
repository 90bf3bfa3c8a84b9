//! Rotation systems and face traversal for plane embeddings.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Per-vertex cyclic order of neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<VertexId>>,
}

impl RotationSystem {
    pub fn new(rot: Vec<Vec<VertexId>>) -> Self {
        RotationSystem { rot }
    }

    /// Orders each neighbourhood counter-clockwise around the given drawing.
    /// The drawing must be crossing-free for the result to be plane.
    pub fn from_coordinates(g: &Graph, pos: &[(f64, f64)]) -> Self {
        let rot = g
            .vertices()
            .map(|v| {
                let (x0, y0) = pos[v];
                let mut nb = g.neighbors(v).to_vec();
                nb.sort_by(|&a, &b| {
                    let ta = (pos[a].1 - y0).atan2(pos[a].0 - x0);
                    let tb = (pos[b].1 - y0).atan2(pos[b].0 - x0);
                    ta.partial_cmp(&tb).unwrap()
                });
                nb
            })
            .collect();
        RotationSystem { rot }
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.rot.len()
    }

    /// Checks that every rotation is a permutation of the adjacency list.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rot.len() != g.vertex_count() {
            return Err(Error::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.rot.len(),
                g.vertex_count()
            )));
        }
        for v in g.vertices() {
            let mut sorted = self.rot[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return Err(Error::InvalidRotation(format!(
                    "rotation at {v} is not a permutation of its neighbours"
                )));
            }
        }
        Ok(())
    }

    /// Successor of `from` in the rotation at `at`.
    fn successor(&self, at: VertexId, from: VertexId) -> VertexId {
        let r = &self.rot[at];
        let i = r.iter().position(|&x| x == from).expect("dart in rotation");
        r[(i + 1) % r.len()]
    }

    /// Restriction to the induced subgraph on `old_ids` (ascending, as
    /// returned by [`Graph::induced`]).
    pub fn restrict(&self, old_ids: &[VertexId]) -> RotationSystem {
        let mut new_id = vec![usize::MAX; self.rot.len()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let rot = old_ids
            .iter()
            .map(|&v| {
                self.rot[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect()
            })
            .collect();
        RotationSystem { rot }
    }

    /// Rotation after [`Graph::subdivide`] of `uv` with new vertex `w`.
    pub fn subdivide(&self, u: VertexId, v: VertexId) -> RotationSystem {
        let w = self.rot.len();
        let mut rot = self.rot.clone();
        for (a, b) in [(u, v), (v, u)] {
            for x in rot[a].iter_mut() {
                if *x == b {
                    *x = w;
                }
            }
        }
        rot.push(vec![u, v]);
        RotationSystem { rot }
    }
}

/// A closed facial walk, stored as the tails of its darts in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<VertexId>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceList {
    pub faces: Vec<Face>,
}

impl FaceList {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.faces.iter().map(Face::len).sum()
    }

    /// For each vertex, the faces it appears on, once per appearance.
    pub fn incidences(&self, n: usize) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); n];
        for (fi, f) in self.faces.iter().enumerate() {
            for &v in &f.walk {
                inc[v].push(fi);
            }
        }
        inc
    }
}

/// Traces every face (next dart = successor of the reversed dart) and checks
/// Euler's formula on each connected component.
pub fn faces_of(g: &Graph, rot: &RotationSystem) -> Result<FaceList> {
    rot.validate(g)?;
    let n = g.vertex_count();
    // dart (u, i) = u -> rot[u][i]
    let offsets: Vec<usize> = {
        let mut acc = 0;
        let mut o = Vec::with_capacity(n + 1);
        for v in 0..n {
            o.push(acc);
            acc += g.degree(v);
        }
        o.push(acc);
        o
    };
    let mut used = vec![false; offsets[n]];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..g.degree(u) {
            if used[offsets[u] + i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, rot.rot[u][i]);
            loop {
                let idx = rot.rot[a].iter().position(|&x| x == b).unwrap();
                if used[offsets[a] + idx] {
                    break;
                }
                used[offsets[a] + idx] = true;
                walk.push(a);
                let c = rot.successor(b, a);
                a = b;
                b = c;
            }
            faces.push(Face { walk });
        }
    }
    for comp in g.components() {
        let v = comp.len();
        let e: usize = comp.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
        if e == 0 {
            continue;
        }
        let f = faces
            .iter()
            .filter(|f| f.walk.first().is_some_and(|x| comp.binary_search(x).is_ok()))
            .count();
        if v + f != e + 2 {
            return Err(Error::NotPlane);
        }
    }
    Ok(FaceList { faces })
}

/// Named plane graphs with embeddings.
pub mod plane {
    use super::RotationSystem;
    use crate::graph::{families, Graph};

    fn regular_polygon(n: usize, r: f64, phase: f64) -> Vec<(f64, f64)> {
        (0..n)
            .map(|i| {
                let t = phase + 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                (r * t.cos(), r * t.sin())
            })
            .collect()
    }

    pub fn cycle(n: usize) -> (Graph, RotationSystem) {
        let g = families::cycle(n);
        let rot = RotationSystem::from_coordinates(&g, &regular_polygon(n, 1.0, 0.0));
        (g, rot)
    }

    pub fn k4() -> (Graph, RotationSystem) {
        let g = families::complete(4);
        let mut pos = regular_polygon(3, 1.0, 0.0);
        pos.push((0.0, 0.0));
        let rot = RotationSystem::from_coordinates(&g, &pos);
        (g, rot)
    }

    pub fn cube() -> (Graph, RotationSystem) {
        let mut edges = Vec::new();
        for i in 0..4 {
            edges.push((i, (i + 1) % 4));
            edges.push((4 + i, 4 + (i + 1) % 4));
            edges.push((i, 4 + i));
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let mut pos = regular_polygon(4, 2.0, 0.0);
        pos.extend(regular_polygon(4, 1.0, 0.0));
        let rot = RotationSystem::from_coordinates(&g, &pos);
        (g, rot)
    }

    /// 4-regular, girth 3.
    pub fn octahedron() -> (Graph, RotationSystem) {
        let mut edges = Vec::new();
        for i in 0..3 {
            let j = (i + 1) % 3;
            edges.push((i, j));
            edges.push((3 + i, 3 + j));
            edges.push((i, 3 + i));
            edges.push((j, 3 + i));
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        let mut pos = regular_polygon(3, 3.0, 0.0);
        pos.extend(regular_polygon(3, 1.0, std::f64::consts::PI / 3.0));
        let rot = RotationSystem::from_coordinates(&g, &pos);
        (g, rot)
    }

    /// 3-regular, girth 5, twenty vertices.
    pub fn dodecahedron() -> (Graph, RotationSystem) {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer pentagon
            edges.push((i, 5 + 2 * i)); // spokes to the outer decagon
            edges.push((15 + i, 15 + (i + 1) % 5)); // inner pentagon
            edges.push((15 + i, 6 + 2 * i)); // spokes from the inner pentagon
        }
        for i in 0..10 {
            edges.push((5 + i, 5 + (i + 1) % 10));
        }
        let g = Graph::from_edges(20, &edges).unwrap();
        let mut pos = regular_polygon(5, 4.0, 0.0);
        pos.extend(regular_polygon(10, 2.5, 0.0));
        pos.extend(regular_polygon(5, 1.0, std::f64::consts::PI / 5.0));
        let rot = RotationSystem::from_coordinates(&g, &pos);
        (g, rot)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    #[test]
    fn c4_has_two_faces_of_length_four() {
        let (g, rot) = plane::cycle(4);
        let f = faces_of(&g, &rot).unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.faces.iter().all(|x| x.len() == 4));
    }

    #[test]
    fn k4_has_four_triangles() {
        let (g, rot) = plane::k4();
        let f = faces_of(&g, &rot).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.faces.iter().all(|x| x.len() == 3));
    }

    #[test]
    fn named_plane_graphs_pass_euler() {
        for (g, rot) in [plane::cube(), plane::octahedron(), plane::dodecahedron()] {
            let f = faces_of(&g, &rot).unwrap();
            assert_eq!(f.total_length(), 2 * g.edge_count());
            assert_eq!(g.vertex_count() + f.len(), g.edge_count() + 2);
        }
        let (d, _) = plane::dodecahedron();
        assert!(d.vertices().all(|v| d.degree(v) == 3));
        assert_eq!(d.girth(), Some(5));
        let (o, _) = plane::octahedron();
        assert!(o.vertices().all(|v| o.degree(v) == 4));
    }

    #[test]
    fn k5_is_never_plane() {
        let g = families::complete(5);
        // sorted order and a couple of other rotations
        let rots = [
            RotationSystem::new(g.vertices().map(|v| g.neighbors(v).to_vec()).collect()),
            RotationSystem::new(
                g.vertices()
                    .map(|v| {
                        let mut r = g.neighbors(v).to_vec();
                        r.reverse();
                        r
                    })
                    .collect(),
            ),
        ];
        for rot in rots {
            assert!(matches!(faces_of(&g, &rot), Err(Error::NotPlane)));
        }
    }

    #[test]
    fn rejects_foreign_rotation() {
        let g = families::cycle(4);
        let rot = RotationSystem::new(vec![vec![1, 2], vec![0, 2], vec![1, 3], vec![2, 0]]);
        assert!(matches!(faces_of(&g, &rot), Err(Error::InvalidRotation(_))));
    }

    #[test]
    fn subdivision_keeps_planarity() {
        let (g, rot) = plane::k4();
        let g2 = g.subdivide(0, 1);
        let r2 = rot.subdivide(0, 1);
        let f = faces_of(&g2, &r2).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.total_length(), 2 * g2.edge_count());
    }
}
