//! Brute-force ground truth for tiny instances.

pub mod catalog;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::listcolor::Color;
use crate::par::Execution;
use crate::structure::{ConfigMatch, Extension};

pub const MAX_VERTICES: usize = 12;

/// Small graph as adjacency lists over `0..n`.
type Adj = Vec<Vec<usize>>;

/// Plain depth-first list colouring in index order.
fn colorable(adj: &Adj, lists: &[Vec<Color>], upto: usize) -> bool {
    fn go(adj: &Adj, lists: &[Vec<Color>], upto: usize, i: usize, col: &mut Vec<Color>) -> bool {
        if i == upto {
            return true;
        }
        for &c in &lists[i] {
            if adj[i].iter().all(|&w| w >= i || col[w] != c) {
                col[i] = c;
                if go(adj, lists, upto, i + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    go(adj, lists, upto, 0, &mut vec![0; upto])
}

/// All `r`-subsets of `0..n`, ascending.
fn combinations(n: usize, r: usize) -> Vec<Vec<Color>> {
    fn go(start: usize, n: usize, r: usize, acc: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if acc.len() == r {
            out.push(acc.clone());
            return;
        }
        for x in start..n {
            if n - x < r - acc.len() {
                break;
            }
            acc.push(x as Color);
            go(x + 1, n, r, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Lists for vertex `i` up to renaming colours: old colours are `0..used`,
/// new ones are taken in increasing order from `used`.
fn canonical_lists(size: usize, used: usize, universe: usize) -> Vec<(Vec<Color>, usize)> {
    let mut out = Vec::new();
    for fresh in 0..=size.min(universe.saturating_sub(used)) {
        if size - fresh > used {
            continue;
        }
        for mut old in combinations(used, size - fresh) {
            old.extend((used..used + fresh).map(|c| c as Color));
            out.push((old, used + fresh));
        }
    }
    out
}

fn search(adj: &Adj, sizes: &[usize], universe: usize, lists: &mut Vec<Vec<Color>>, used: usize) -> bool {
    let i = lists.len();
    if i == adj.len() {
        return false;
    }
    for (l, u) in canonical_lists(sizes[i], used, universe) {
        lists.push(l);
        if !colorable(adj, lists, i + 1) || search(adj, sizes, universe, lists, u) {
            return true;
        }
        lists.pop();
    }
    false
}

/// An assignment of `sizes[v]`-subsets of a `universe`-colour set that admits
/// no proper colouring, if one exists. Vertices are processed in index
/// order; colour renamings are skipped and a prefix that is already
/// uncolourable ends the search.
pub fn find_bad_assignment(
    adj: &[Vec<usize>],
    sizes: &[usize],
    universe: usize,
    exec: Execution,
) -> Option<Vec<Vec<Color>>> {
    let n = adj.len();
    if n == 0 {
        return None;
    }
    let adj: Adj = adj.to_vec();
    let first: Vec<(Vec<Color>, usize)> = canonical_lists(sizes[0], 0, universe);
    let mut seeds: Vec<(Vec<Vec<Color>>, usize)> = Vec::new();
    for (l0, u0) in first {
        if n == 1 {
            seeds.push((vec![l0], u0));
            continue;
        }
        for (l1, u1) in canonical_lists(sizes[1], u0, universe) {
            seeds.push((vec![l0.clone(), l1], u1));
        }
    }
    exec.find_first(&seeds, |(prefix, used)| {
        let mut lists = prefix.clone();
        let bad = !colorable(&adj, &lists, lists.len()) || search(&adj, sizes, universe, &mut lists, *used);
        bad.then(|| {
            let mut full = lists;
            while full.len() < n {
                full.push((0..sizes[full.len()] as Color).collect());
            }
            full.into_iter()
                .map(|l| l.into_iter().map(|c| c + 1).collect())
                .collect()
        })
    })
}

/// Removes vertices of degree below `k` until none is left; they can always
/// be coloured last.
fn k_core(g: &Graph, k: usize) -> Vec<VertexId> {
    let mut alive = vec![true; g.vertex_count()];
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut stack: Vec<VertexId> = g.vertices().filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    stack.push(w);
                }
            }
        }
    }
    g.vertices().filter(|&v| alive[v]).collect()
}

fn check_guard(n: usize, k: usize, universe: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::OracleGuard(format!("{n} vertices exceed {MAX_VERTICES}")));
    }
    if universe > 2 * k + 4 {
        return Err(Error::OracleGuard(format!("universe {universe} exceeds 2k+4 = {}", 2 * k + 4)));
    }
    if universe < k || k == 0 {
        return Err(Error::OracleGuard(format!("need 1 <= k <= universe, got k = {k}, universe = {universe}")));
    }
    Ok(())
}

/// A list assignment with `k`-subsets of `1..=universe` under which `g` has
/// no proper colouring, if one exists.
pub fn choosability_counterexample(
    g: &Graph,
    k: usize,
    universe: usize,
    exec: Execution,
) -> Result<Option<Vec<Vec<Color>>>> {
    check_guard(g.vertex_count(), k, universe)?;
    let core = k_core(g, k);
    let (h, ids) = g.induced(&core);
    for comp in h.components() {
        let (c, cids) = h.induced(&comp);
        // breadth-first order keeps prefixes connected
        let order = bfs_order(&c);
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let adj: Adj = order.iter().map(|&v| c.neighbors(v).iter().map(|&w| pos[w]).collect()).collect();
        if let Some(bad) = find_bad_assignment(&adj, &vec![k; adj.len()], universe, exec) {
            let mut lists: Vec<Vec<Color>> = vec![(1..=k as Color).collect(); g.vertex_count()];
            for (i, &v) in order.iter().enumerate() {
                lists[ids[cids[v]]] = bad[i].clone();
            }
            return Ok(Some(lists));
        }
    }
    Ok(None)
}

fn bfs_order(g: &Graph) -> Vec<VertexId> {
    let mut seen = vec![false; g.vertex_count()];
    let mut order = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut i = start;
        while i < order.len() {
            for &w in g.neighbors(order[i]) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    order
}

/// Whether every assignment of `k`-subsets of a `universe`-colour set to the
/// vertices of `g` (not its square) admits a proper colouring.
pub fn is_k_choosable(g: &Graph, k: usize, universe: usize) -> Result<bool> {
    is_k_choosable_with(g, k, universe, Execution::default())
}

pub fn is_k_choosable_with(g: &Graph, k: usize, universe: usize, exec: Execution) -> Result<bool> {
    Ok(choosability_counterexample(g, k, universe, exec)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// Colouring along the order always has a colour left.
    Greedy(Vec<VertexId>),
    /// `prefix` greedily, then vertices with spare colours peeled off last,
    /// and what remains has lists as large as its degrees and is not a
    /// Gallai tree.
    DegreeChoosable { prefix: Vec<VertexId> },
    /// Every assignment with the floor sizes was enumerated.
    Exhaustive { universe: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// Guaranteed residual list size of each deleted then uncoloured vertex.
    pub floors: Vec<(VertexId, usize)>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Certified(Certificate),
    Counterexample {
        floors: Vec<(VertexId, usize)>,
        reason: String,
        /// Residual lists defeating the extension, when enumeration found one.
        lists: Option<Vec<(VertexId, Vec<Color>)>>,
    },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified(_))
    }

    pub fn floors(&self) -> &[(VertexId, usize)] {
        match self {
            Verdict::Certified(c) => &c.floors,
            Verdict::Counterexample { floors, .. } => floors,
        }
    }
}

/// Vertices within distance two of `x`, excluding `x`.
fn ball2(g: &Graph, x: VertexId) -> Vec<VertexId> {
    g.square_neighbors(x)
}

/// Whether a connected graph's blocks are all complete graphs or odd cycles.
fn is_gallai_tree(adj: &Adj, comp: &[usize]) -> bool {
    blocks(adj, comp).iter().all(|b| {
        let inside = |v: usize| b.contains(&v);
        let e: usize = b.iter().map(|&v| adj[v].iter().filter(|&&w| inside(w)).count()).sum::<usize>() / 2;
        let k = b.len();
        e == k * (k - 1) / 2 || (k % 2 == 1 && e == k)
    })
}

/// Biconnected components (vertex sets) of the component `comp`.
fn blocks(adj: &Adj, comp: &[usize]) -> Vec<Vec<usize>> {
    struct St<'a> {
        adj: &'a Adj,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        edges: Vec<(usize, usize)>,
        out: Vec<Vec<usize>>,
    }
    fn dfs(s: &mut St, u: usize, parent: usize) {
        s.time += 1;
        s.disc[u] = s.time;
        s.low[u] = s.time;
        for i in 0..s.adj[u].len() {
            let v = s.adj[u][i];
            if s.disc[v] == 0 {
                s.edges.push((u, v));
                dfs(s, v, u);
                s.low[u] = s.low[u].min(s.low[v]);
                if s.low[v] >= s.disc[u] {
                    let mut b = Vec::new();
                    while let Some((a, c)) = s.edges.pop() {
                        b.push(a);
                        b.push(c);
                        if (a, c) == (u, v) {
                            break;
                        }
                    }
                    b.sort_unstable();
                    b.dedup();
                    s.out.push(b);
                }
            } else if v != parent && s.disc[v] < s.disc[u] {
                s.edges.push((u, v));
                s.low[u] = s.low[u].min(s.disc[v]);
            }
        }
    }
    let mut s = St {
        adj,
        disc: vec![0; adj.len()],
        low: vec![0; adj.len()],
        time: 0,
        edges: Vec::new(),
        out: Vec::new(),
    };
    if comp.len() == 1 {
        return vec![comp.to_vec()];
    }
    dfs(&mut s, comp[0], usize::MAX);
    s.out
}

/// `prefix` coloured greedily, the rest by peeling and the degree-list
/// theorem. Sizes are the floors.
fn degree_certificate(adj: &Adj, f: &[usize], prefix: &[usize]) -> bool {
    let n = adj.len();
    let mut in_prefix = vec![false; n];
    for (i, &x) in prefix.iter().enumerate() {
        let earlier = adj[x].iter().filter(|w| prefix[..i].contains(w)).count();
        if f[x] <= earlier {
            return false;
        }
        in_prefix[x] = true;
    }
    let mut rem: Vec<bool> = (0..n).map(|x| !in_prefix[x]).collect();
    let fr: Vec<usize> = (0..n)
        .map(|x| f[x].saturating_sub(adj[x].iter().filter(|&&w| in_prefix[w]).count()))
        .collect();
    loop {
        let deg = |x: usize, rem: &[bool]| adj[x].iter().filter(|&&w| rem[w]).count();
        match (0..n).find(|&x| rem[x] && fr[x] > deg(x, &rem)) {
            Some(x) => rem[x] = false,
            None => break,
        }
    }
    let core: Vec<usize> = (0..n).filter(|&x| rem[x]).collect();
    if core.iter().any(|&x| fr[x] < adj[x].iter().filter(|&&w| rem[w]).count()) {
        return false;
    }
    // components of the core
    let mut seen = vec![false; n];
    for &s in &core {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if rem[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        let sub: Adj = (0..n)
            .map(|x| if rem[x] { adj[x].iter().copied().filter(|&w| rem[w]).collect() } else { vec![] })
            .collect();
        if is_gallai_tree(&sub, &comp) {
            return false;
        }
    }
    true
}

fn greedy_certificate(adj: &Adj, f: &[usize], order: &[usize]) -> bool {
    order
        .iter()
        .enumerate()
        .all(|(i, &x)| f[x] > adj[x].iter().filter(|w| order[..i].contains(w)).count())
}

/// Checks that the match can always be coloured back: in `host`, every
/// vertex outside `deleted ∪ uncolored` is coloured adversarially and each
/// affected vertex keeps `k` minus its coloured square-neighbours as a
/// residual list size. Also checks that each deleted vertex has at most one
/// coloured neighbour, so no distance-two pair is lost by the deletion.
pub fn verify_reduction(host: &Graph, m: &ConfigMatch, k: usize) -> Result<Verdict> {
    let affected: Vec<VertexId> = m.deleted.iter().chain(&m.uncolored).copied().collect();
    let mut in_a = vec![false; host.vertex_count()];
    for &x in &affected {
        if x >= host.vertex_count() {
            return Err(Error::InvalidGraph(format!("vertex {x} not in host")));
        }
        in_a[x] = true;
    }
    let floors: Vec<(VertexId, usize)> = affected
        .iter()
        .map(|&x| {
            let outside = ball2(host, x).into_iter().filter(|&w| !in_a[w]).count();
            (x, k.saturating_sub(outside))
        })
        .collect();
    for &d in &m.deleted {
        let c = host.neighbors(d).iter().filter(|&&w| !in_a[w]).count();
        if c > 1 {
            return Ok(Verdict::Counterexample {
                floors,
                reason: format!("deleted vertex {d} keeps {c} coloured neighbours"),
                lists: None,
            });
        }
    }
    let pos = |x: VertexId| affected.iter().position(|&a| a == x).unwrap();
    let adj: Adj = affected
        .iter()
        .map(|&x| ball2(host, x).into_iter().filter(|&w| in_a[w]).map(pos).collect())
        .collect();
    let f: Vec<usize> = floors.iter().map(|p| p.1).collect();
    let order: Vec<usize> = m.order.iter().map(|&x| pos(x)).collect();
    if greedy_certificate(&adj, &f, &order) {
        return Ok(Verdict::Certified(Certificate {
            floors,
            method: Method::Greedy(m.order.clone()),
        }));
    }
    let mut by_floor: Vec<usize> = (0..affected.len()).collect();
    by_floor.sort_by_key(|&i| (f[i], i));
    if greedy_certificate(&adj, &f, &by_floor) {
        return Ok(Verdict::Certified(Certificate {
            floors,
            method: Method::Greedy(by_floor.iter().map(|&i| affected[i]).collect()),
        }));
    }
    let prefix: Vec<usize> = match &m.extension {
        Extension::CycleWithEar { hub, .. } => vec![pos(*hub)],
        _ => vec![],
    };
    if degree_certificate(&adj, &f, &prefix) {
        return Ok(Verdict::Certified(Certificate {
            floors,
            method: Method::DegreeChoosable {
                prefix: prefix.iter().map(|&i| affected[i]).collect(),
            },
        }));
    }
    let universe = f.iter().sum::<usize>().min(12);
    if affected.len() <= 6 && f.iter().all(|&s| s >= 1) {
        return Ok(match find_bad_assignment(&adj, &f, universe, Execution::default()) {
            None => Verdict::Certified(Certificate {
                floors,
                method: Method::Exhaustive { universe },
            }),
            Some(bad) => Verdict::Counterexample {
                floors,
                reason: "residual lists admit no colouring".into(),
                lists: Some(affected.iter().copied().zip(bad).collect()),
            },
        });
    }
    Ok(Verdict::Counterexample {
        floors,
        reason: "no certificate found".into(),
        lists: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn adjacency(g: &Graph) -> Adj {
        g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
    }

    #[test]
    fn small_choosability_facts() {
        assert!(is_k_choosable(&cycle(4), 2, 4).unwrap());
        assert!(!is_k_choosable(&cycle(3), 2, 3).unwrap());
        assert!(!is_k_choosable(&complete(4), 3, 6).unwrap());
        assert!(is_k_choosable(&complete(4), 4, 6).unwrap());
        // K_{2,4} is not 2-choosable; C6 is
        let k24 = Graph::from_edges(6, &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(!is_k_choosable(&k24, 2, 6).unwrap());
        assert!(is_k_choosable(&cycle(6), 2, 6).unwrap());
        // theta(2,2,4) is 2-choosable
        let theta = Graph::from_edges(7, &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        assert!(is_k_choosable(&theta, 2, 6).unwrap());
    }

    #[test]
    fn counterexample_really_defeats_colouring() {
        let g = complete(4);
        let bad = choosability_counterexample(&g, 3, 6, Execution::Sequential).unwrap().unwrap();
        let adj = adjacency(&g);
        assert!(bad.iter().all(|l| l.len() == 3));
        assert!(!colorable(&adj, &bad, 4));
    }

    #[test]
    fn guards() {
        assert!(matches!(is_k_choosable(&cycle(13), 2, 4), Err(Error::OracleGuard(_))));
        assert!(matches!(is_k_choosable(&cycle(4), 2, 9), Err(Error::OracleGuard(_))));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        for g in [cycle(5), complete(4), petersen().induced(&[0, 1, 2, 3, 4, 5, 6]).0] {
            for k in 2..4 {
                let a = is_k_choosable_with(&g, k, 2 * k + 1, Execution::Sequential).unwrap();
                let b = is_k_choosable_with(&g, k, 2 * k + 1, Execution::Parallel).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn gallai_trees() {
        let tri: Adj = vec![vec![1, 2], vec![0, 2], vec![0, 1]];
        assert!(is_gallai_tree(&tri, &[0, 1, 2]));
        let c4: Adj = vec![vec![1, 3], vec![0, 2], vec![1, 3], vec![0, 2]];
        assert!(!is_gallai_tree(&c4, &[0, 1, 2, 3]));
        // two triangles sharing a vertex
        let bow: Adj = vec![vec![1, 2, 3, 4], vec![0, 2], vec![0, 1], vec![0, 4], vec![0, 3]];
        assert!(is_gallai_tree(&bow, &[0, 1, 2, 3, 4]));
        assert!(degree_certificate(&c4, &[2, 2, 2, 2], &[]));
        assert!(!degree_certificate(&tri, &[2, 2, 2], &[]));
    }
}
