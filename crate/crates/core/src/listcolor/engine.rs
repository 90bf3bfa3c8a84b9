//! Reduce, recurse, extend.
//!
//! The recursion is unrolled: configurations are found and their deleted
//! sets removed until only small components and bare cycles remain. Those
//! are coloured directly, then the levels are undone in reverse, each one
//! uncolouring its `uncolored` set and colouring `deleted ∪ uncolored` back.
//! Residual lists at a level only count square-neighbours in the graph that
//! was alive when the level was entered.

use std::collections::HashMap;

use super::{
    backtrack, color_by_slack, color_cycle_2lists, color_cycle_plus_ear, verify_square_coloring, Color,
    Coloring, CycleColoring, ListAssignment,
};
use crate::embedding::{faces_of, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::profile::LemmaProfile;
use crate::sparsity::mad_exact;
use crate::structure::{find_first, ConfigMatch, Extension};

/// Components up to this size are coloured by exhaustive search.
pub const BASE_SIZE: usize = 12;

#[derive(Clone, Debug)]
pub struct ColorReport {
    pub coloring: Coloring,
    /// `(lemma, config)` of every reduction, outermost first.
    pub reductions: Vec<(u8, &'static str)>,
    /// Reductions whose own extension procedure did not apply and were
    /// finished by exhaustive search.
    pub fallbacks: Vec<(u8, &'static str)>,
    /// Vertices coloured in the base case.
    pub base_vertices: usize,
}

pub fn color_square(
    g: &Graph,
    lists: &ListAssignment,
    profile: &LemmaProfile,
    embedding: Option<&RotationSystem>,
) -> Result<Coloring> {
    color_square_with_report(g, lists, profile, embedding).map(|r| r.coloring)
}

fn check_hypotheses(
    g: &Graph,
    lists: &ListAssignment,
    profile: &LemmaProfile,
    embedding: Option<&RotationSystem>,
) -> Result<()> {
    if g.max_degree() > 4 {
        return Err(Error::Hypothesis(format!(
            "maximum degree {} exceeds 4",
            g.max_degree()
        )));
    }
    lists.check(g.vertex_count(), profile.k)?;
    if profile.planar_required {
        let rot = embedding.ok_or(Error::EmbeddingRequired(profile.lemma))?;
        faces_of(g, rot)?;
    }
    if let Some(t) = profile.mad_threshold() {
        if g.vertex_count() > 0 {
            let mad = mad_exact(g)?.value;
            if mad >= t {
                return Err(Error::Hypothesis(format!(
                    "mad {} is not below {}",
                    crate::rational::Frac(mad),
                    crate::rational::Frac(t)
                )));
            }
        }
    }
    Ok(())
}

pub fn color_square_with_report(
    g: &Graph,
    lists: &ListAssignment,
    profile: &LemmaProfile,
    embedding: Option<&RotationSystem>,
) -> Result<ColorReport> {
    check_hypotheses(g, lists, profile, embedding)?;
    let embedding = if profile.planar_required { embedding } else { None };
    let mut e = Engine {
        g,
        lists,
        alive: vec![true; g.vertex_count()],
        color: Coloring::empty(g.vertex_count()),
        fallbacks: Vec::new(),
    };
    let levels = e.reduce(profile.lemma, embedding)?;
    let base_vertices = e.alive.iter().filter(|&&a| a).count();
    e.color_base()?;
    for m in levels.iter().rev() {
        e.undo(m)?;
    }
    verify_square_coloring(g, lists, &e.color).map_err(|msg| Error::ExtensionFailed {
        vertex: 0,
        context: msg,
    })?;
    Ok(ColorReport {
        coloring: e.color,
        reductions: levels.iter().map(|m| (m.lemma, m.config)).collect(),
        fallbacks: e.fallbacks,
        base_vertices,
    })
}

struct Engine<'a> {
    g: &'a Graph,
    lists: &'a ListAssignment,
    alive: Vec<bool>,
    color: Coloring,
    fallbacks: Vec<(u8, &'static str)>,
}

impl Engine<'_> {
    fn reduce(&mut self, lemma: u8, embedding: Option<&RotationSystem>) -> Result<Vec<ConfigMatch>> {
        let g = self.g;
        let mut parked = vec![false; g.vertex_count()];
        let mut levels = Vec::new();
        loop {
            let keep: Vec<VertexId> = g.vertices().filter(|&v| self.alive[v] && !parked[v]).collect();
            if keep.is_empty() {
                return Ok(levels);
            }
            let (h, ids) = g.induced(&keep);
            let mut parked_any = false;
            for comp in h.components() {
                if comp.len() <= BASE_SIZE || comp.iter().all(|&v| h.degree(v) == 2) {
                    for v in comp {
                        parked[ids[v]] = true;
                    }
                    parked_any = true;
                }
            }
            if parked_any {
                continue;
            }
            let rot = embedding.map(|r| r.restrict(&keep));
            let m = find_first(&h, lemma, rot.as_ref())?
                .ok_or(Error::NoConfiguration(h.vertex_count()))?
                .relabel(|v| ids[v]);
            for &d in &m.deleted {
                self.alive[d] = false;
            }
            levels.push(m);
        }
    }

    /// Square-neighbours of `x` in the alive graph.
    fn sq(&self, x: VertexId) -> Vec<VertexId> {
        let mut out = Vec::new();
        for &w in self.g.neighbors(x) {
            if !self.alive[w] {
                continue;
            }
            out.push(w);
            out.extend(self.g.neighbors(w).iter().copied().filter(|&y| y != x && self.alive[y]));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn residual(&self, x: VertexId) -> Vec<Color> {
        let used: Vec<Color> = self.sq(x).into_iter().filter_map(|w| self.color.get(w)).collect();
        self.lists.list(x).iter().copied().filter(|c| !used.contains(c)).collect()
    }

    fn local_adj(&self, set: &[VertexId]) -> Vec<Vec<usize>> {
        let pos: HashMap<VertexId, usize> = set.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        set.iter()
            .map(|&v| self.sq(v).into_iter().filter_map(|w| pos.get(&w).copied()).collect())
            .collect()
    }

    fn assign(&mut self, set: &[VertexId], colors: &[Color]) {
        for (&v, &c) in set.iter().zip(colors) {
            self.color.set(v, Some(c));
        }
    }

    fn solve_set(&mut self, set: &[VertexId]) -> bool {
        let adj = self.local_adj(set);
        let lists: Vec<Vec<Color>> = set.iter().map(|&v| self.residual(v)).collect();
        match backtrack(&adj, &lists) {
            Some(c) => {
                self.assign(set, &c);
                true
            }
            None => false,
        }
    }

    fn greedy(&mut self, order: &[VertexId]) -> bool {
        for &v in order {
            if self.color.get(v).is_some() {
                continue;
            }
            match self.residual(v).first() {
                Some(&c) => self.color.set(v, Some(c)),
                None => return false,
            }
        }
        true
    }

    fn is_plain_cycle(adj: &[Vec<usize>], len: usize) -> bool {
        if len < 3 {
            return (0..len).all(|i| adj[i].iter().filter(|&&j| j < len).count() == len - 1);
        }
        (0..len).all(|i| {
            let mut nb: Vec<usize> = adj[i].iter().copied().filter(|&j| j < len).collect();
            nb.sort_unstable();
            let mut want = vec![(i + 1) % len, (i + len - 1) % len];
            want.sort_unstable();
            nb == want
        })
    }

    fn even_cycle(&mut self, ring: &[VertexId]) -> bool {
        let adj = self.local_adj(ring);
        if !Self::is_plain_cycle(&adj, ring.len()) {
            return false;
        }
        let lists: Vec<Vec<Color>> = ring.iter().map(|&v| self.residual(v)).collect();
        if lists.iter().any(|l| l.len() < 2) {
            return false;
        }
        match color_cycle_2lists(&lists) {
            CycleColoring::Colored(c) => {
                self.assign(ring, &c);
                true
            }
            CycleColoring::OddIdentical(_) => false,
        }
    }

    fn cycle_with_ear(&mut self, hub: VertexId, cycle: &[VertexId], ear: VertexId) -> bool {
        if !self.greedy(&[hub]) {
            return false;
        }
        let mut k = cycle.to_vec();
        k.push(ear);
        let adj = self.local_adj(&k);
        let lists: Vec<Vec<Color>> = k.iter().map(|&v| self.residual(v)).collect();
        let len = cycle.len();
        let mut ear_nb = adj[len].clone();
        ear_nb.sort_unstable();
        if Self::is_plain_cycle(&adj, len) && ear_nb == [0, 1] {
            if let Ok(r) = color_cycle_plus_ear(&lists[..len], &lists[len]) {
                self.assign(cycle, &r.cycle);
                self.color.set(ear, Some(r.ear));
                return true;
            }
        }
        match color_by_slack(&adj, &lists) {
            Some(c) => {
                self.assign(&k, &c);
                true
            }
            None => false,
        }
    }

    fn undo(&mut self, m: &ConfigMatch) -> Result<()> {
        for &d in &m.deleted {
            self.alive[d] = true;
        }
        for &u in &m.uncolored {
            self.color.set(u, None);
        }
        let ok = match &m.extension {
            Extension::Greedy => self.greedy(&m.order),
            Extension::EvenCycle => self.even_cycle(&m.order),
            Extension::CycleWithEar { hub, cycle, ear } => self.cycle_with_ear(*hub, cycle, *ear),
        };
        if ok {
            return Ok(());
        }
        let set = m.affected();
        for &v in &set {
            self.color.set(v, None);
        }
        self.fallbacks.push((m.lemma, m.config));
        if self.solve_set(&set) {
            Ok(())
        } else {
            Err(Error::ExtensionFailed {
                vertex: m.order[0],
                context: format!("lemma {} configuration {} ({m})", m.lemma, m.config),
            })
        }
    }

    /// Colours what is left: small components exhaustively, bare cycles in
    /// cyclic order (each vertex but the last two sees two coloured
    /// square-neighbours, the last two see three and four).
    fn color_base(&mut self) -> Result<()> {
        let g = self.g;
        let keep: Vec<VertexId> = g.vertices().filter(|&v| self.alive[v]).collect();
        let (h, ids) = g.induced(&keep);
        for comp in h.components() {
            let set: Vec<VertexId> = if comp.len() > BASE_SIZE {
                let mut order = vec![comp[0]];
                let (mut prev, mut cur) = (comp[0], h.neighbors(comp[0])[0]);
                while cur != comp[0] {
                    order.push(cur);
                    let nb = h.neighbors(cur);
                    let next = if nb[0] == prev { nb[1] } else { nb[0] };
                    prev = cur;
                    cur = next;
                }
                order.into_iter().map(|v| ids[v]).collect()
            } else {
                comp.into_iter().map(|v| ids[v]).collect()
            };
            if set.len() > BASE_SIZE && self.greedy(&set) {
                continue;
            }
            for &v in &set {
                self.color.set(v, None);
            }
            if !self.solve_set(&set) {
                return Err(Error::ExtensionFailed {
                    vertex: set[0],
                    context: format!("base component of {} vertices", set.len()),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::plane;
    use crate::graph::families::*;
    use crate::profile::TABLE;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn path_of_three() {
        let lists = ListAssignment::uniform(3, 5);
        let c = color_square(&path(3), &lists, &TABLE[0], None).unwrap();
        let mut cs: Vec<_> = (0..3).map(|v| c.get(v).unwrap()).collect();
        cs.sort();
        cs.dedup();
        assert_eq!(cs.len(), 3);
    }

    #[test]
    fn long_cycle_with_random_lists() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [13, 20, 41] {
            let g = cycle(n);
            let lists = ListAssignment::random(n, 5, 10, &mut rng);
            let c = color_square(&g, &lists, &TABLE[0], None).unwrap();
            assert!(verify_square_coloring(&g, &lists, &c).is_ok());
        }
    }

    #[test]
    fn long_thread_reduces() {
        // cycle of 40 with one chord-free pendant: long threads everywhere
        let g = with_pendants(&cycle(40), &[0, 20]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let lists = ListAssignment::random(g.vertex_count(), 5, 10, &mut rng);
        let r = color_square_with_report(&g, &lists, &TABLE[0], None).unwrap();
        assert!(!r.reductions.is_empty());
        assert!(r.fallbacks.is_empty());
    }

    #[test]
    fn octahedron_in_the_plane_regime() {
        let (g, rot) = plane::octahedron();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let lists = ListAssignment::random(6, 14, 28, &mut rng);
        let c = color_square(&g, &lists, &TABLE[5], Some(&rot)).unwrap();
        assert!(verify_square_coloring(&g, &lists, &c).is_ok());
    }

    #[test]
    fn hypotheses_are_checked() {
        let lists = ListAssignment::uniform(4, 5);
        assert!(matches!(
            color_square(&complete(4), &lists, &TABLE[0], None),
            Err(Error::Hypothesis(_))
        ));
        let short = ListAssignment::uniform(3, 4);
        assert!(matches!(
            color_square(&path(3), &short, &TABLE[0], None),
            Err(Error::ShortList { .. })
        ));
        let (g, _) = plane::k4();
        assert!(matches!(
            color_square(&g, &ListAssignment::uniform(4, 14), &TABLE[5], None),
            Err(Error::EmbeddingRequired(6))
        ));
    }
}
