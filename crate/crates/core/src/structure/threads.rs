use crate::graph::{Graph, VertexId};

/// A maximal path of 2-vertices. Endpoints are the vertices of degree other
/// than two at either end; they coincide when the path hangs off a single
/// vertex as a cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Thread {
    pub ends: (VertexId, VertexId),
    /// Ordered from `ends.0` to `ends.1`.
    pub interior: Vec<VertexId>,
}

impl Thread {
    pub fn len(&self) -> usize {
        self.interior.len()
    }

    pub fn is_empty(&self) -> bool {
        self.interior.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }

    /// Number of times `v` is an endpoint (0, 1 or 2).
    pub fn endpoint_multiplicity(&self, v: VertexId) -> usize {
        (self.ends.0 == v) as usize + (self.ends.1 == v) as usize
    }

    /// The same thread read from the other end.
    pub fn reversed(&self) -> Thread {
        let mut interior = self.interior.clone();
        interior.reverse();
        Thread {
            ends: (self.ends.1, self.ends.0),
            interior,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ThreadDecomposition {
    pub threads: Vec<Thread>,
    /// Components in which every vertex has degree two, each in cyclic order.
    pub degenerate: Vec<Vec<VertexId>>,
    /// For each 2-vertex on a thread: (thread index, position in interior).
    pub thread_of: Vec<Option<(usize, usize)>>,
}

impl ThreadDecomposition {
    pub fn in_degenerate(&self, g: &Graph, v: VertexId) -> bool {
        g.degree(v) == 2 && self.thread_of[v].is_none()
    }
}

pub fn enumerate_threads(g: &Graph) -> ThreadDecomposition {
    let n = g.vertex_count();
    let mut thread_of: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut threads = Vec::new();
    for a in g.vertices() {
        if g.degree(a) == 2 || g.degree(a) == 0 {
            continue;
        }
        for &x in g.neighbors(a) {
            if g.degree(x) != 2 || thread_of[x].is_some() {
                continue;
            }
            let idx = threads.len();
            let mut interior = vec![x];
            thread_of[x] = Some((idx, 0));
            let (mut prev, mut cur) = (a, x);
            let end = loop {
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                if g.degree(next) != 2 {
                    break next;
                }
                thread_of[next] = Some((idx, interior.len()));
                interior.push(next);
                prev = cur;
                cur = next;
            };
            threads.push(Thread {
                ends: (a, end),
                interior,
            });
        }
    }
    let mut degenerate = Vec::new();
    let mut seen = vec![false; n];
    for s in g.vertices() {
        if g.degree(s) != 2 || thread_of[s].is_some() || seen[s] {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let (mut prev, mut cur) = (s, g.neighbors(s)[0]);
        while cur != s {
            seen[cur] = true;
            cyc.push(cur);
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        degenerate.push(cyc);
    }
    ThreadDecomposition {
        threads,
        degenerate,
        thread_of,
    }
}
