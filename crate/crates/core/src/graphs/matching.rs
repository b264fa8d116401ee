//! Maximum-cardinality matching in general graphs.
//!
//! A seeded randomized greedy pass picks an initial matching, then Edmonds'
//! augmenting-path search grows it. Blossoms are contracted implicitly with
//! a union-find over their vertices: every vertex of a contracted blossom
//! resolves to the blossom's base.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GraphsError, Matching, SimpleGraph};
use crate::graphic::DegreeMultiset;

/// Vertex `0` is a sentinel; graph vertex `v` is stored as `v + 1`.
struct Workspace<'g> {
    g: &'g SimpleGraph,
    mate: Vec<usize>,
    pred: Vec<usize>,
    /// 0 unvisited, 1 even (outer), 2 odd (inner).
    label: Vec<u8>,
    base: Vec<usize>,
    seen: Vec<u32>,
    tick: u32,
    queue: VecDeque<usize>,
    size: usize,
}

impl<'g> Workspace<'g> {
    fn new(g: &'g SimpleGraph) -> Self {
        let n = g.n() + 1;
        Self {
            g,
            mate: vec![0; n],
            pred: vec![0; n],
            label: vec![0; n],
            base: (0..n).collect(),
            seen: vec![0; n],
            tick: 0,
            queue: VecDeque::new(),
            size: 0,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.base[root] != root {
            root = self.base[root];
        }
        while self.base[x] != root {
            let next = self.base[x];
            self.base[x] = root;
            x = next;
        }
        root
    }

    fn greedy<R: Rng>(&mut self, rng: &mut R) {
        let n = self.g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for v in order {
            if self.mate[v + 1] != 0 {
                continue;
            }
            let nb = self.g.neighbors(v);
            if nb.is_empty() {
                continue;
            }
            let offset = rng.gen_range(0..nb.len());
            for i in 0..nb.len() {
                let w = nb[(i + offset) % nb.len()] as usize;
                if self.mate[w + 1] == 0 {
                    self.mate[v + 1] = w + 1;
                    self.mate[w + 1] = v + 1;
                    self.size += 1;
                    break;
                }
            }
        }
    }

    fn lca(&mut self, x: usize, y: usize) -> usize {
        self.tick += 1;
        let mut x = self.find(x);
        let mut y = self.find(y);
        while self.seen[x] != self.tick {
            self.seen[x] = self.tick;
            let next = self.pred[self.mate[x]];
            x = self.find(next);
            if y != 0 {
                std::mem::swap(&mut x, &mut y);
            }
        }
        x
    }

    fn contract(&mut self, mut x: usize, mut y: usize, l: usize) {
        while self.find(x) != l {
            self.pred[x] = y;
            y = self.mate[x];
            if self.label[y] == 2 {
                self.label[y] = 1;
                self.queue.push_back(y);
            }
            if self.find(x) == x {
                self.base[x] = l;
            }
            if self.find(y) == y {
                self.base[y] = l;
            }
            x = self.pred[y];
        }
    }

    /// One alternating-tree search from the unmatched vertex `s`.
    fn augment_from(&mut self, s: usize) -> bool {
        for i in 0..self.label.len() {
            self.label[i] = 0;
            self.base[i] = i;
        }
        self.queue.clear();
        self.label[s] = 1;
        self.queue.push_back(s);
        while let Some(x) = self.queue.pop_front() {
            let g = self.g;
            for &w in g.neighbors(x - 1) {
                let y = w as usize + 1;
                if self.find(x) == self.find(y) || self.label[y] == 2 {
                    continue;
                }
                if self.label[y] == 0 {
                    self.label[y] = 2;
                    self.pred[y] = x;
                    if self.mate[y] == 0 {
                        let mut u = y;
                        while u != 0 {
                            let last = self.mate[self.pred[u]];
                            self.mate[u] = self.pred[u];
                            self.mate[self.pred[u]] = u;
                            u = last;
                        }
                        self.size += 1;
                        return true;
                    }
                    let m = self.mate[y];
                    self.label[m] = 1;
                    self.queue.push_back(m);
                } else {
                    let l = self.lca(x, y);
                    self.contract(x, y, l);
                    self.contract(y, x, l);
                }
            }
        }
        false
    }

    /// Augments until `target` edges are matched or no augmenting path
    /// remains. A vertex with no augmenting path never gains one later, so a
    /// single pass over the unmatched vertices suffices.
    fn grow<R: Rng>(&mut self, target: usize, rng: &mut R) {
        let mut free: Vec<usize> = (1..=self.g.n()).filter(|&v| self.mate[v] == 0).collect();
        free.shuffle(rng);
        for s in free {
            if self.size >= target {
                break;
            }
            if self.mate[s] == 0 {
                self.augment_from(s);
            }
        }
    }

    fn into_matching(self) -> Matching {
        let edges = (1..self.mate.len())
            .filter(|&v| self.mate[v] > v)
            .map(|v| (v - 1, self.mate[v] - 1))
            .collect();
        Matching::new(self.g, edges).expect("matching engine produced an invalid matching")
    }
}

/// Maximum matching with a fixed seed for the greedy start.
pub fn maximum_matching(g: &SimpleGraph) -> Matching {
    maximum_matching_seeded(g, &mut ChaCha8Rng::seed_from_u64(0))
}

pub fn maximum_matching_seeded<R: Rng>(g: &SimpleGraph, rng: &mut R) -> Matching {
    let mut ws = Workspace::new(g);
    ws.greedy(rng);
    ws.grow(usize::MAX, rng);
    ws.into_matching()
}

/// A matching with at least `min(target, ν(g))` edges: augmentation stops
/// as soon as `target` edges are matched, so the result may be smaller than
/// a maximum matching, or larger than `target` when the greedy start
/// already overshoots.
pub fn matching_reaching<R: Rng>(g: &SimpleGraph, target: usize, rng: &mut R) -> Matching {
    let mut ws = Workspace::new(g);
    ws.greedy(rng);
    ws.grow(target, rng);
    ws.into_matching()
}

/// A matching of exactly `min(target, ν(g))` edges; surplus edges of
/// [`matching_reaching`] are dropped at random.
pub fn matching_of_size<R: Rng>(g: &SimpleGraph, target: usize, rng: &mut R) -> Matching {
    let m = matching_reaching(g, target, rng);
    if m.len() <= target {
        return m;
    }
    let mut edges = m.edges().to_vec();
    edges.shuffle(rng);
    edges.truncate(target);
    Matching::new(g, edges).expect("subset of a matching is a matching")
}

/// The sufficient condition
/// `δ·d <= Σ_{d_i < δ} d_i − Σ_{d_i >= δ} d_i` for every realization of
/// `seq` to contain a matching of size `d / 2`.
pub fn vizing_matching_bound(seq: &DegreeMultiset, delta: u64, d: u64) -> Result<bool, GraphsError> {
    if delta < 1 {
        return Err(GraphsError::Domain(format!("delta must be >= 1, got {delta}")));
    }
    if d < 2 || d % 2 == 1 {
        return Err(GraphsError::Domain(format!("d must be even and >= 2, got {d}")));
    }
    let (mut below, mut above) = (0i128, 0i128);
    for (v, c) in seq.iter_desc() {
        let s = v as i128 * c as i128;
        if v < delta {
            below += s;
        } else {
            above += s;
        }
    }
    Ok(delta as i128 * d as i128 <= below - above)
}
