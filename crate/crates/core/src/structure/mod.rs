//! Threads, reducible configurations and sponsorship.

mod configs;
mod sponsors;
mod threads;

use std::fmt;

use crate::graph::VertexId;

pub use configs::{config_names, find_configs, find_configs_with_faces, find_first};
pub use sponsors::{assign_sponsors, Sponsored, Sponsorship};
pub use threads::{enumerate_threads, Thread, ThreadDecomposition};

/// How the deleted and uncoloured vertices of a match are coloured back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Greedily along `order`.
    Greedy,
    /// `order` is a cycle of the square whose vertices all have two
    /// available colours.
    EvenCycle,
    /// Colour `hub` first; then `cycle` is a cycle of the square and `ear`
    /// is adjacent in the square to `cycle[0]` and `cycle[1]`.
    CycleWithEar {
        hub: VertexId,
        cycle: Vec<VertexId>,
        ear: VertexId,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigMatch {
    pub lemma: u8,
    /// `i`, `ii`, ... for the listed configurations; `low`, `adj2`, `hcycle`
    /// and `jcycle` for the additional ones.
    pub config: &'static str,
    /// Every vertex the predicate inspected, anchor first.
    pub vertices: Vec<VertexId>,
    /// Removed before recursing.
    pub deleted: Vec<VertexId>,
    /// Coloured by the recursion, then uncoloured.
    pub uncolored: Vec<VertexId>,
    /// Colouring order for `deleted ∪ uncolored`.
    pub order: Vec<VertexId>,
    pub extension: Extension,
    /// Face indices (plane case only).
    pub faces: Vec<usize>,
}

impl ConfigMatch {
    pub fn relabel(&self, map: impl Fn(VertexId) -> VertexId) -> ConfigMatch {
        let m = |xs: &[VertexId]| xs.iter().map(|&x| map(x)).collect::<Vec<_>>();
        ConfigMatch {
            lemma: self.lemma,
            config: self.config,
            vertices: m(&self.vertices),
            deleted: m(&self.deleted),
            uncolored: m(&self.uncolored),
            order: m(&self.order),
            extension: match &self.extension {
                Extension::CycleWithEar { hub, cycle, ear } => Extension::CycleWithEar {
                    hub: map(*hub),
                    cycle: m(cycle),
                    ear: map(*ear),
                },
                e => e.clone(),
            },
            faces: self.faces.clone(),
        }
    }

    /// `deleted ∪ uncolored`.
    pub fn affected(&self) -> Vec<VertexId> {
        let mut a: Vec<VertexId> = self.deleted.iter().chain(&self.uncolored).copied().collect();
        a.sort_unstable();
        a
    }
}

impl fmt::Display for ConfigMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.lemma, self.config)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}
