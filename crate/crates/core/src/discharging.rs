//! Exact-rational discharging.
//!
//! Every rule reads the initial state only, so the result does not depend on
//! the order in which rules are listed.

use crate::embedding::FaceList;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::profile::LemmaProfile;
use crate::rational::{rat, Rational};
use crate::structure::{
    enumerate_threads, find_configs_with_faces, Sponsored, Sponsorship, Thread,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeState {
    pub lemma: u8,
    pub vertex: Vec<Rational>,
    /// Plane regime only.
    pub face: Vec<Rational>,
    /// Charge held by each thread, in [`enumerate_threads`] order.
    pub thread: Vec<Rational>,
    pub threads: Vec<Thread>,
    /// Vertices of components that are bare cycles.
    pub excluded: Vec<VertexId>,
}

impl ChargeState {
    pub fn total(&self) -> Rational {
        self.vertex.iter().chain(&self.face).chain(&self.thread).sum()
    }
}

fn pays_threads(lemma: u8) -> bool {
    lemma == 1 || lemma == 2
}

pub fn initial_charges(g: &Graph, lemma: u8, faces: Option<&FaceList>) -> Result<ChargeState> {
    LemmaProfile::by_lemma(lemma)?;
    let d = |v: VertexId| g.degree(v) as i64;
    let td = enumerate_threads(g);
    let excluded: Vec<VertexId> = td.degenerate.iter().flatten().copied().collect();
    if lemma == 6 {
        let faces = faces.ok_or(Error::EmbeddingRequired(6))?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        return Ok(ChargeState {
            lemma,
            vertex: g.vertices().map(|v| Rational::from_integer(2 * d(v) - 6)).collect(),
            face: faces.faces.iter().map(|f| Rational::from_integer(f.len() as i64 - 6)).collect(),
            thread: vec![],
            threads: vec![],
            excluded,
        });
    }
    if faces.is_some() {
        return Err(Error::InvalidGraph("faces only carry charge in the plane regime".into()));
    }
    let threads = if pays_threads(lemma) { td.threads } else { vec![] };
    Ok(ChargeState {
        lemma,
        vertex: g.vertices().map(|v| Rational::from_integer(d(v))).collect(),
        face: vec![],
        thread: vec![Rational::from_integer(0); threads.len()],
        threads,
        excluded,
    })
}

/// Applies the regime's rules to `state`. Fails if the graph contains one of
/// the regime's reducible configurations.
pub fn apply_rules(
    g: &Graph,
    lemma: u8,
    state: &ChargeState,
    sponsors: &Sponsorship,
    faces: Option<&FaceList>,
) -> Result<ChargeState> {
    if let Some(m) = find_configs_with_faces(g, lemma, faces)?.into_iter().next() {
        return Err(Error::ConfigurationPresent(Box::new(m)));
    }
    transfer(g, lemma, state, sponsors, faces)
}

/// The rule transfers alone, read from `state`.
fn transfer(
    g: &Graph,
    lemma: u8,
    state: &ChargeState,
    sponsors: &Sponsorship,
    faces: Option<&FaceList>,
) -> Result<ChargeState> {
    let mut next = state.clone();
    let d = |v: VertexId| g.degree(v);
    let give_vertex = |from: VertexId, to: VertexId, c: Rational, next: &mut ChargeState| {
        next.vertex[from] -= c;
        next.vertex[to] += c;
    };
    match lemma {
        1 | 2 => {
            let (small, large, extra) = if lemma == 1 {
                (rat(1, 7), rat(3, 7), rat(2, 7))
            } else {
                (rat(1, 9), rat(3, 9), rat(2, 9))
            };
            for (i, t) in state.threads.iter().enumerate() {
                for v in [t.ends.0, t.ends.1] {
                    let c = match d(v) {
                        3 => small,
                        4 => large,
                        _ => continue,
                    };
                    next.vertex[v] -= c;
                    next.thread[i] += c;
                }
                if let Some(s) = sponsors.sponsor_of(Sponsored::Thread(i)) {
                    next.vertex[s] -= extra;
                    next.thread[i] += extra;
                }
            }
        }
        3 => {
            for u in g.vertices() {
                let twos: Vec<VertexId> = g.neighbors(u).iter().copied().filter(|&x| d(x) == 2).collect();
                let c = match (d(u), twos.len()) {
                    (4, _) => rat(5, 14),
                    (3, 1) => rat(4, 14),
                    (3, 2) => rat(3, 14),
                    _ => continue,
                };
                for x in twos {
                    give_vertex(u, x, c, &mut next);
                }
            }
        }
        4 => {
            let light = |x: VertexId| d(x) == 2 && g.neighbors(x).iter().all(|&w| d(w) == 3);
            let medium = |x: VertexId| {
                d(x) == 2 && {
                    let nb = g.neighbors(x);
                    d(nb[0]) + d(nb[1]) == 7
                }
            };
            let needy = |s: VertexId| d(s) == 3 && g.neighbors(s).iter().any(|&x| light(x));
            for u in g.vertices() {
                for &w in g.neighbors(u) {
                    if d(u) >= 3 && d(w) == 2 {
                        give_vertex(u, w, rat(1, 5), &mut next);
                    }
                    if d(u) == 4 && needy(w) {
                        give_vertex(u, w, rat(1, 5), &mut next);
                    }
                    if needy(u) && light(w) {
                        give_vertex(u, w, rat(1, 5), &mut next);
                    }
                    if d(u) == 4 && medium(w) {
                        give_vertex(u, w, rat(2, 5), &mut next);
                    }
                    if d(u) == 4 && sponsors.sponsor_of(Sponsored::Vertex(w)) == Some(u) {
                        give_vertex(u, w, rat(2, 5), &mut next);
                    }
                }
            }
        }
        5 => {
            for u in g.vertices().filter(|&u| d(u) == 4) {
                for &w in g.neighbors(u) {
                    match d(w) {
                        2 => give_vertex(u, w, rat(2, 3), &mut next),
                        3 => give_vertex(u, w, rat(1, 6), &mut next),
                        _ => {}
                    }
                }
            }
        }
        6 => {
            let faces = faces.ok_or(Error::EmbeddingRequired(6))?;
            for (fi, f) in faces.faces.iter().enumerate() {
                let c = match f.len() {
                    3 => rat(1, 1),
                    4 => rat(1, 2),
                    5 => rat(1, 3),
                    _ => continue,
                };
                for &v in f.walk.iter().filter(|&&v| d(v) == 4) {
                    next.vertex[v] -= c;
                    next.face[fi] += c;
                }
            }
        }
        other => return Err(Error::UnknownLemma(other)),
    }
    Ok(next)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Holder {
    Vertex(VertexId),
    Face(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DischargeReport {
    /// `None` in the plane regime, where the bound is zero for vertices and
    /// faces alike.
    pub threshold: Option<Rational>,
    /// Vertex charges with thread charge spread over interior vertices.
    pub vertex_final: Vec<Rational>,
    pub face_final: Vec<Rational>,
    pub violators: Vec<(Holder, Rational)>,
    pub excluded: Vec<VertexId>,
}

impl DischargeReport {
    pub fn holds(&self) -> bool {
        self.violators.is_empty()
    }
}

pub fn verify_bound(state: &ChargeState, lemma: u8) -> Result<DischargeReport> {
    let profile = LemmaProfile::by_lemma(lemma)?;
    let mut vertex_final = state.vertex.clone();
    for (t, c) in state.threads.iter().zip(&state.thread) {
        let share = c / Rational::from_integer(t.len() as i64);
        for &x in &t.interior {
            vertex_final[x] += share;
        }
    }
    let mut skip = vec![false; vertex_final.len()];
    for &v in &state.excluded {
        skip[v] = true;
    }
    let threshold = profile.mad_threshold();
    let floor = threshold.unwrap_or_else(|| Rational::from_integer(0));
    let mut violators: Vec<(Holder, Rational)> = vertex_final
        .iter()
        .enumerate()
        .filter(|&(v, c)| !skip[v] && *c < floor)
        .map(|(v, c)| (Holder::Vertex(v), *c))
        .collect();
    violators.extend(
        state
            .face
            .iter()
            .enumerate()
            .filter(|(_, c)| **c < Rational::from_integer(0))
            .map(|(f, c)| (Holder::Face(f), *c)),
    );
    Ok(DischargeReport {
        threshold,
        vertex_final,
        face_final: state.face.clone(),
        violators,
        excluded: state.excluded.clone(),
    })
}
