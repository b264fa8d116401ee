use rand::seq::SliceRandom;
use rand::Rng;

use super::DpgError;
use crate::graphic::DegreeMultiset;
use crate::graphs::{havel_hakimi_realize, matching_reaching, Matching, SimpleGraph};

/// A graph realizing `PD_n` together with the gap the next step inserts.
#[derive(Debug, Clone)]
pub struct DpgState {
    graph: SimpleGraph,
    /// Degree each vertex must keep.
    expected: Vec<u64>,
    next_gap: Option<u64>,
}

/// What one step did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepOutcome {
    /// Index of the inserted vertex.
    pub vertex: usize,
    /// Size of the matching the search found (at least `gap / 2`).
    pub matching_size: usize,
    /// Edges removed, ascending.
    pub removed: Vec<(usize, usize)>,
}

impl DpgState {
    /// Wraps an existing graph; its current degrees become the invariant.
    pub fn new(graph: SimpleGraph, next_gap: Option<u64>) -> Self {
        Self {
            expected: graph.degrees(),
            graph,
            next_gap,
        }
    }

    /// Havel–Hakimi realization of `seq` as the starting graph.
    pub fn from_sequence(seq: &DegreeMultiset, next_gap: Option<u64>) -> Result<Self, DpgError> {
        Ok(Self::new(havel_hakimi_realize(seq)?, next_gap))
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn into_graph(self) -> SimpleGraph {
        self.graph
    }

    pub fn n(&self) -> u64 {
        self.graph.n() as u64
    }

    pub fn next_gap(&self) -> Option<u64> {
        self.next_gap
    }

    pub fn set_next_gap(&mut self, gap: u64) {
        self.next_gap = Some(gap);
    }

    /// Checks every vertex against its recorded degree.
    pub fn check_degrees(&self) -> Result<(), DpgError> {
        for (v, &want) in self.expected.iter().enumerate() {
            let got = self.graph.degree(v) as u64;
            if got != want {
                return Err(DpgError::DegreeMismatch {
                    n: self.n(),
                    vertex: v,
                    expected: want,
                    found: got,
                });
            }
        }
        Ok(())
    }
}

/// Inserts a vertex of degree `next_gap`: removes `next_gap / 2` matching
/// edges (ascending) and joins the new vertex to their endpoints
/// (ascending). The state is untouched on error.
pub fn dpg_step<R: Rng>(state: &mut DpgState, rng: &mut R) -> Result<StepOutcome, DpgError> {
    let n = state.n();
    let gap = state
        .next_gap
        .ok_or_else(|| DpgError::Domain(format!("no next gap set at n = {n}")))?;
    if gap < 2 || gap % 2 == 1 {
        return Err(DpgError::OddGap { n, gap });
    }
    let nu = (gap / 2) as usize;
    let found = matching_reaching(&state.graph, nu, rng);
    if found.len() < nu {
        return Err(DpgError::Stuck {
            n,
            gap,
            found: found.len(),
        });
    }
    let mut chosen = found.edges().to_vec();
    if chosen.len() > nu {
        chosen.shuffle(rng);
        chosen.truncate(nu);
    }
    let chosen = Matching::new(&state.graph, chosen)?;
    for &(a, b) in chosen.edges() {
        state.graph.remove_edge(a, b)?;
    }
    let u = state.graph.add_vertex();
    for v in chosen.vertices() {
        state.graph.add_edge(u, v)?;
    }
    state.expected.push(gap);
    state.next_gap = None;
    state.check_degrees()?;
    Ok(StepOutcome {
        vertex: u,
        matching_size: found.len(),
        removed: chosen.edges().to_vec(),
    })
}
