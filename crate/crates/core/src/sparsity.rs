//! Exact maximum average degree.
//!
//! `mad(G) = max_H 2|E(H)|/|V(H)|` is found by a parametric search over subgraph
//! densities. For a candidate `p/q` the question "is there `S` with
//! `2q|E(S)| - p|S| > 0`?" is a maximum-weight closure problem (edges gain
//! `2q`, vertices cost `p`) solved by max-flow. Every improving answer is
//! itself a subgraph density, so the iteration only ever visits exact
//! rationals with denominators at most `|V|` and stops at the optimum.

use crate::embedding::{faces_of, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::profile::{LemmaProfile, TABLE};
use crate::rational::{rat, Rational};

/// Dinic max-flow on `i64` capacities.
struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            head: vec![Vec::new(); n],
            level: vec![0; n],
            iter: vec![0; n],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn bfs(&mut self, s: usize) {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, f: i64) -> i64 {
        if u == t {
            return f;
        }
        while self.iter[u] < self.head[u].len() {
            let e = self.head[u][self.iter[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(s);
            if self.level[t] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes that cannot reach `t` in the residual graph: the maximal
    /// source side over all minimum cuts.
    fn not_reaching_sink(&self, t: usize) -> Vec<bool> {
        let n = self.head.len();
        let mut reach = vec![false; n];
        reach[t] = true;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            for &e in &self.head[v] {
                // residual arc u -> v is the reverse of e (e ^ 1), stored at u = to[e]
                let u = self.to[e];
                if !reach[u] && self.cap[e ^ 1] > 0 {
                    reach[u] = true;
                    stack.push(u);
                }
            }
        }
        reach.into_iter().map(|r| !r).collect()
    }
}

/// Solves `max_S 2q|E(S)| - p|S|`. Returns the optimum and the maximal
/// optimal vertex set.
fn best_closure(g: &Graph, density: Rational) -> (i64, Vec<VertexId>) {
    let n = g.vertex_count();
    let m = g.edge_count();
    let (p, q) = (*density.numer(), *density.denom());
    let s = n + m;
    let t = s + 1;
    let mut net = FlowNetwork::new(n + m + 2);
    let big = 2 * q * (m as i64 + 1);
    for (i, (u, v)) in g.edges().enumerate() {
        net.add_edge(s, n + i, 2 * q);
        net.add_edge(n + i, u, big);
        net.add_edge(n + i, v, big);
    }
    for v in 0..n {
        if p > 0 {
            net.add_edge(v, t, p);
        }
    }
    let cut = net.max_flow(s, t);
    let value = 2 * q * m as i64 - cut;
    let side = net.not_reaching_sink(t);
    let set = (0..n).filter(|&v| side[v]).collect();
    (value, set)
}

fn induced_density(g: &Graph, set: &[VertexId]) -> Rational {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let twice: usize = set
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
        .sum();
    rat(twice as i64, set.len() as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MadResult {
    pub value: Rational,
    /// The largest vertex set whose induced subgraph attains `value`.
    pub witness: Vec<VertexId>,
}

pub fn mad_exact(g: &Graph) -> Result<MadResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut best = rat(2 * g.edge_count() as i64, n as i64);
    loop {
        let (value, set) = best_closure(g, best);
        if value <= 0 {
            // at the optimum every maximal closure has value 0; the maximal
            // one is the union of all densest subgraphs
            let witness = if set.is_empty() { (0..n).collect() } else { set };
            debug_assert_eq!(induced_density(g, &witness), best);
            return Ok(MadResult {
                value: best,
                witness,
            });
        }
        let d = induced_density(g, &set);
        debug_assert!(d > best);
        best = d;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fact1Verdict {
    pub girth: Option<usize>,
    pub mad: Rational,
    /// `2g/(g-2)`, or `2` for forests.
    pub bound: Rational,
    pub holds: bool,
}

/// Checks `mad < 2g/(g-2)` for a plane-embedded graph.
pub fn check_fact1(g: &Graph, embedding: &RotationSystem) -> Result<Fact1Verdict> {
    faces_of(g, embedding)?;
    let girth = g.girth();
    let mad = mad_exact(g)?.value;
    let bound = match girth {
        Some(gi) => rat(2 * gi as i64, gi as i64 - 2),
        None => Rational::from_integer(2),
    };
    Ok(Fact1Verdict {
        girth,
        mad,
        bound,
        holds: mad < bound,
    })
}

/// Strongest maximum-average-degree row that applies, or `None`.
pub fn profile_for(g: &Graph) -> Result<Option<LemmaProfile>> {
    if g.max_degree() > 4 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds 4",
            g.max_degree()
        )));
    }
    let mad = mad_exact(g)?.value;
    Ok(TABLE
        .iter()
        .filter_map(|p| p.mad_threshold().map(|t| (p, t)))
        .find(|(_, t)| mad < *t)
        .map(|(p, _)| p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::plane;
    use crate::graph::families::*;

    /// Subset enumeration oracle.
    pub(crate) fn mad_brute(g: &Graph) -> Rational {
        let n = g.vertex_count();
        let mut best = Rational::from_integer(0);
        for mask in 1u32..(1 << n) {
            let mut e = 0;
            for (u, v) in g.edges() {
                if mask >> u & 1 == 1 && mask >> v & 1 == 1 {
                    e += 1;
                }
            }
            let d = rat(2 * e, mask.count_ones() as i64);
            if d > best {
                best = d;
            }
        }
        best
    }

    #[test]
    fn cycles_and_cliques() {
        for n in 3..12 {
            let r = mad_exact(&cycle(n)).unwrap();
            assert_eq!(r.value, rat(2, 1));
            assert_eq!(r.witness, (0..n).collect::<Vec<_>>());
        }
        let r = mad_exact(&complete(4)).unwrap();
        assert_eq!(r.value, rat(3, 1));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn witness_is_the_largest_densest_set() {
        // a pendant on a cycle keeps density 2, a pendant on K4 does not
        let g = with_pendants(&cycle(5), &[0]);
        assert_eq!(mad_brute(&g), rat(2, 1));
        let r = mad_exact(&g).unwrap();
        assert_eq!(r.value, rat(2, 1));
        assert_eq!(r.witness, (0..6).collect::<Vec<_>>());
        let r = mad_exact(&with_pendants(&complete(4), &[0])).unwrap();
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_vertex_and_empty() {
        let r = mad_exact(&Graph::empty(1)).unwrap();
        assert_eq!(r.value, rat(0, 1));
        assert_eq!(r.witness, vec![0]);
        assert!(matches!(mad_exact(&Graph::empty(0)), Err(Error::EmptyGraph)));
    }

    #[test]
    fn dense_part_wins() {
        // K4 plus a long tail
        let mut g = complete(4);
        for i in 0..6 {
            let n = g.vertex_count();
            g = Graph::from_edges(
                n + 1,
                &g.edges().chain([(if i == 0 { 3 } else { n - 1 }, n)]).collect::<Vec<_>>(),
            )
            .unwrap();
        }
        let r = mad_exact(&g).unwrap();
        assert_eq!(r.value, rat(3, 1));
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
        assert_eq!(mad_brute(&g), rat(3, 1));
    }

    #[test]
    fn fact1_examples() {
        let (c16, r16) = plane::cycle(16);
        let v = check_fact1(&c16, &r16).unwrap();
        assert_eq!((v.girth, v.mad, v.bound, v.holds), (Some(16), rat(2, 1), rat(32, 14), true));
        let (k4, rk4) = plane::k4();
        let v = check_fact1(&k4, &rk4).unwrap();
        assert_eq!((v.girth, v.mad, v.bound, v.holds), (Some(3), rat(3, 1), rat(6, 1), true));
        let (d, rd) = plane::dodecahedron();
        let v = check_fact1(&d, &rd).unwrap();
        assert_eq!((v.girth, v.mad, v.bound, v.holds), (Some(5), rat(3, 1), rat(10, 3), true));
    }

    #[test]
    fn profile_routing() {
        assert_eq!(profile_for(&cycle(20)).unwrap().unwrap().k, 5);
        assert_eq!(profile_for(&complete(4)).unwrap().unwrap().k, 12);
        assert!(profile_for(&complete(5)).unwrap().is_none());
        assert!(matches!(profile_for(&star(5)), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn profile_boundary_is_strict() {
        // K4 minus an edge with three edges subdivided: 7 vertices, 8 edges
        let mut g = complete(4).without_edge(2, 3);
        for (u, v) in [(0, 1), (0, 2), (1, 3)] {
            g = g.subdivide(u, v);
        }
        assert_eq!(mad_brute(&g), rat(16, 7));
        assert_eq!(mad_exact(&g).unwrap().value, rat(16, 7));
        assert_eq!(profile_for(&g).unwrap().unwrap().k, 6);
    }
}
