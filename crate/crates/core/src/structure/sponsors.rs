use std::collections::BTreeMap;

use super::threads::enumerate_threads;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sponsored {
    /// Index into [`super::ThreadDecomposition::threads`].
    Thread(usize),
    Vertex(VertexId),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sponsorship {
    pub sponsor: BTreeMap<Sponsored, VertexId>,
}

impl Sponsorship {
    pub fn sponsor_of(&self, s: Sponsored) -> Option<VertexId> {
        self.sponsor.get(&s).copied()
    }

    pub fn len(&self) -> usize {
        self.sponsor.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sponsor.is_empty()
    }

    /// No vertex sponsors two objects.
    pub fn is_injective(&self) -> bool {
        let mut seen: Vec<VertexId> = self.sponsor.values().copied().collect();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

/// Orients a multigraph so every vertex has out-degree at most one and
/// returns the tail of each edge. Fails on a component with more edges than
/// vertices.
fn orient(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Vec<VertexId>> {
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        inc[a].push(i);
        inc[b].push(i);
    }
    let other = |e: usize, x: VertexId| {
        let (a, b) = edges[e];
        if a == x {
            b
        } else {
            a
        }
    };
    let mut tail = vec![usize::MAX; edges.len()];
    let mut comp_of = vec![usize::MAX; n];
    for s in 0..n {
        if comp_of[s] != usize::MAX || inc[s].is_empty() {
            continue;
        }
        let mut comp = vec![s];
        comp_of[s] = s;
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            for &e in &inc[x] {
                let y = other(e, x);
                if comp_of[y] == usize::MAX {
                    comp_of[y] = s;
                    comp.push(y);
                }
            }
            i += 1;
        }
        let ne = comp.iter().map(|&x| inc[x].len()).sum::<usize>() / 2;
        if ne > comp.len() {
            return Err(Error::ConfigurationMissed {
                vertices: comp.len(),
                edges: ne,
            });
        }
        // peel leaves; what survives is the unique cycle, if any
        let mut live_deg: Vec<usize> = comp.iter().map(|&x| inc[x].len()).collect();
        let idx = |x: VertexId| comp.iter().position(|&c| c == x).unwrap();
        let mut removed = vec![false; comp.len()];
        let mut stack: Vec<usize> = (0..comp.len()).filter(|&i| live_deg[i] == 1).collect();
        while let Some(i) = stack.pop() {
            if removed[i] {
                continue;
            }
            removed[i] = true;
            for &e in &inc[comp[i]] {
                let j = idx(other(e, comp[i]));
                if !removed[j] {
                    live_deg[j] -= 1;
                    if live_deg[j] == 1 {
                        stack.push(j);
                    }
                }
            }
        }
        let mut done = vec![false; comp.len()];
        let mut frontier = Vec::new();
        if let Some(start) = (0..comp.len()).filter(|&i| !removed[i]).min_by_key(|&i| comp[i]) {
            // walk the cycle, each vertex taking the edge it leaves by
            let mut cur = start;
            let mut prev_edge = usize::MAX;
            loop {
                done[cur] = true;
                frontier.push(cur);
                let e = *inc[comp[cur]]
                    .iter()
                    .find(|&&e| e != prev_edge && tail[e] == usize::MAX && !removed[idx(other(e, comp[cur]))])
                    .expect("cycle continues");
                tail[e] = comp[cur];
                prev_edge = e;
                cur = idx(other(e, comp[cur]));
                if cur == start {
                    break;
                }
            }
        } else {
            let root = (0..comp.len()).min_by_key(|&i| comp[i]).unwrap();
            done[root] = true;
            frontier.push(root);
        }
        // trees hang off the cycle (or the root); children take the parent edge
        while let Some(i) = frontier.pop() {
            for &e in &inc[comp[i]] {
                if tail[e] != usize::MAX {
                    continue;
                }
                let j = idx(other(e, comp[i]));
                if !done[j] {
                    done[j] = true;
                    tail[e] = comp[j];
                    frontier.push(j);
                }
            }
        }
    }
    Ok(tail)
}

/// Sponsors for the objects the discharging rules pay extra: 2-threads
/// between 3-vertices (first regime), 2-threads between 4-vertices and light
/// 1-threads (second), heavy 2-vertices (fourth). Other regimes sponsor
/// nothing.
pub fn assign_sponsors(g: &Graph, lemma: u8) -> Result<Sponsorship> {
    if !(1..=6).contains(&lemma) {
        return Err(Error::UnknownLemma(lemma));
    }
    let td = enumerate_threads(g);
    let d = |v: VertexId| g.degree(v);
    let mut groups: Vec<Vec<(Sponsored, VertexId, VertexId)>> = Vec::new();
    let threads_between = |len: usize, hub: usize| {
        td.threads
            .iter()
            .enumerate()
            .filter(|(_, t)| t.len() == len && d(t.ends.0) == hub && d(t.ends.1) == hub)
            .map(|(i, t)| (Sponsored::Thread(i), t.ends.0, t.ends.1))
            .collect::<Vec<_>>()
    };
    match lemma {
        1 => groups.push(threads_between(2, 3)),
        2 => {
            groups.push(threads_between(2, 4));
            groups.push(threads_between(1, 3));
        }
        4 => groups.push(
            threads_between(1, 4)
                .into_iter()
                .map(|(s, a, b)| match s {
                    Sponsored::Thread(i) => (Sponsored::Vertex(td.threads[i].interior[0]), a, b),
                    v => (v, a, b),
                })
                .collect(),
        ),
        _ => {}
    }
    let mut out = Sponsorship::default();
    for group in groups {
        let edges: Vec<(VertexId, VertexId)> = group.iter().map(|&(_, a, b)| (a, b)).collect();
        let tails = orient(g.vertex_count(), &edges)?;
        for (&(s, _, _), t) in group.iter().zip(tails) {
            out.sponsor.insert(s, t);
        }
    }
    Ok(out)
}
