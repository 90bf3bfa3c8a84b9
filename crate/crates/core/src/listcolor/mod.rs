//! List colouring of squares.

mod cycles;
mod engine;
mod search;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub use cycles::{color_cycle_2lists, color_cycle_plus_ear, CycleColoring, EarColoring};
pub use engine::{color_square, color_square_with_report, ColorReport};
pub use search::{backtrack, color_by_slack};

pub type Color = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Lists are sorted and deduplicated.
    pub fn new(mut lists: Vec<Vec<Color>>) -> Self {
        for l in &mut lists {
            l.sort_unstable();
            l.dedup();
        }
        ListAssignment { lists }
    }

    /// Every vertex gets `1..=k`.
    pub fn uniform(n: usize, k: usize) -> Self {
        ListAssignment::new(vec![(1..=k as Color).collect(); n])
    }

    /// Independent uniformly random `k`-subsets of `1..=universe`.
    pub fn random<R: Rng>(n: usize, k: usize, universe: usize, rng: &mut R) -> Self {
        ListAssignment::new(
            (0..n)
                .map(|_| {
                    sample(rng, universe, k)
                        .into_iter()
                        .map(|c| c as Color + 1)
                        .collect()
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: VertexId) -> &[Color] {
        &self.lists[v]
    }

    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Checks there is a list of at least `k` colours for each of `n` vertices.
    pub fn check(&self, n: usize, k: usize) -> Result<()> {
        if self.lists.len() != n {
            return Err(Error::InvalidGraph(format!(
                "{} lists for {n} vertices",
                self.lists.len()
            )));
        }
        match self.lists.iter().position(|l| l.len() < k) {
            Some(v) => Err(Error::ShortList {
                vertex: v,
                len: self.lists[v].len(),
                need: k,
            }),
            None => Ok(()),
        }
    }
}

/// A partial or total colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring {
            colors: vec![None; n],
        }
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.colors[v]
    }

    pub fn set(&mut self, v: VertexId, c: Option<Color>) {
        self.colors[v] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Option<Color>)> + '_ {
        self.colors.iter().copied().enumerate()
    }
}

/// Checks a total colouring against the lists and the square, built
/// independently of the colouring engine.
pub fn verify_square_coloring(g: &Graph, lists: &ListAssignment, coloring: &Coloring) -> std::result::Result<(), String> {
    if coloring.len() != g.vertex_count() {
        return Err("colouring has the wrong length".into());
    }
    for v in g.vertices() {
        let c = coloring.get(v).ok_or(format!("vertex {v} is uncoloured"))?;
        if !lists.list(v).contains(&c) {
            return Err(format!("vertex {v} has colour {c} outside its list"));
        }
    }
    for (u, v) in g.square().edges() {
        if coloring.get(u) == coloring.get(v) {
            return Err(format!("vertices {u} and {v} are within distance two and share a colour"));
        }
    }
    Ok(())
}

/// Colours `order` one by one with the smallest colour not used on a
/// coloured square-neighbour.
pub fn greedy_extend(
    g: &Graph,
    partial: &Coloring,
    order: &[VertexId],
    lists: &ListAssignment,
) -> Result<Coloring> {
    let mut out = partial.clone();
    for &v in order {
        if out.get(v).is_some() {
            continue;
        }
        let used: Vec<Color> = g
            .square_neighbors(v)
            .into_iter()
            .filter_map(|w| out.get(w))
            .collect();
        let c = lists
            .list(v)
            .iter()
            .copied()
            .find(|c| !used.contains(c))
            .ok_or_else(|| Error::ExtensionFailed {
                vertex: v,
                context: "greedy extension".into(),
            })?;
        out.set(v, Some(c));
    }
    Ok(out)
}
