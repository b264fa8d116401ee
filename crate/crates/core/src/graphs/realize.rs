use super::{GraphsError, SimpleGraph};
use crate::graphic::{zz_tv_reduced, DegreeMultiset};

/// Largest vertex count [`enumerate_realizations`] accepts.
pub const MAX_ENUMERATION_N: u64 = 10;

fn require_graphic(seq: &DegreeMultiset) -> Result<(), GraphsError> {
    let v = zz_tv_reduced(seq);
    if v.graphic {
        Ok(())
    } else {
        Err(GraphsError::NotGraphic {
            sequence: seq.to_string(),
            failing_k: v.failing_k,
        })
    }
}

/// Havel–Hakimi realization. Vertex `i` receives the `i`-th largest degree;
/// each round connects the vertex of highest residual degree to the next
/// highest ones, ties broken by lowest index.
pub fn havel_hakimi_realize(seq: &DegreeMultiset) -> Result<SimpleGraph, GraphsError> {
    require_graphic(seq)?;
    let degrees = seq.sorted_desc();
    let n = degrees.len();
    let mut g = SimpleGraph::empty(n);
    let mut residual = degrees.clone();
    // vertices ordered by (residual desc, index asc)
    let mut order: Vec<usize> = (0..n).collect();
    let mut lowered = Vec::with_capacity(n);
    let mut rest = Vec::with_capacity(n);
    while let Some(&v) = order.first() {
        let d = residual[v] as usize;
        if d == 0 {
            break;
        }
        if d >= order.len() {
            return Err(GraphsError::Internal(format!(
                "Havel–Hakimi stuck on graphic input {seq}"
            )));
        }
        residual[v] = 0;
        lowered.clear();
        rest.clear();
        for &u in &order[1..=d] {
            if residual[u] == 0 {
                return Err(GraphsError::Internal(format!(
                    "Havel–Hakimi stuck on graphic input {seq}"
                )));
            }
            g.add_edge(v, u)?;
            residual[u] -= 1;
            lowered.push(u);
        }
        rest.extend_from_slice(&order[d + 1..]);
        // both runs are sorted by (residual desc, index asc); merge them
        order.clear();
        let (mut i, mut j) = (0, 0);
        let key = |x: usize| (std::cmp::Reverse(residual[x]), x);
        while i < lowered.len() && j < rest.len() {
            if key(lowered[i]) <= key(rest[j]) {
                order.push(lowered[i]);
                i += 1;
            } else {
                order.push(rest[j]);
                j += 1;
            }
        }
        order.extend_from_slice(&lowered[i..]);
        order.extend_from_slice(&rest[j..]);
        order.push(v);
    }
    debug_assert_eq!(g.degrees(), degrees);
    Ok(g)
}

/// Every labeled simple graph on `0..n` in which vertex `i` has the `i`-th
/// largest degree of `seq`, up to `cap` of them.
pub fn enumerate_realizations(seq: &DegreeMultiset, cap: usize) -> Result<Vec<SimpleGraph>, GraphsError> {
    if seq.len() > MAX_ENUMERATION_N {
        return Err(GraphsError::ScaleRefusal {
            n: seq.len(),
            max: MAX_ENUMERATION_N,
        });
    }
    let degrees = seq.sorted_desc();
    let mut out = Vec::new();
    if !zz_tv_reduced(seq).graphic || cap == 0 {
        return Ok(out);
    }
    let mut search = Enumeration {
        n: degrees.len(),
        residual: degrees,
        edges: Vec::new(),
        out: &mut out,
        cap,
    };
    search.row(0);
    Ok(out)
}

struct Enumeration<'a> {
    n: usize,
    residual: Vec<u64>,
    edges: Vec<(usize, usize)>,
    out: &'a mut Vec<SimpleGraph>,
    cap: usize,
}

impl Enumeration<'_> {
    fn done(&self) -> bool {
        self.out.len() >= self.cap
    }

    fn row(&mut self, i: usize) {
        if self.done() {
            return;
        }
        if i == self.n {
            let g = SimpleGraph::from_edges(self.n, &self.edges).expect("enumerated edges are simple");
            self.out.push(g);
            return;
        }
        let candidates: Vec<usize> = (i + 1..self.n).filter(|&j| self.residual[j] > 0).collect();
        let need = self.residual[i] as usize;
        if need > candidates.len() {
            return;
        }
        self.choose(i, &candidates, 0, need);
    }

    /// Picks `need` more neighbors for `i` from `candidates[from..]`.
    fn choose(&mut self, i: usize, candidates: &[usize], from: usize, need: usize) {
        if self.done() {
            return;
        }
        if need == 0 {
            let saved = self.residual[i];
            self.residual[i] = 0;
            let rest: DegreeMultiset = self.residual[i + 1..].iter().copied().collect();
            if zz_tv_reduced(&rest).graphic {
                self.row(i + 1);
            }
            self.residual[i] = saved;
            return;
        }
        for c in from..candidates.len() {
            if candidates.len() - c < need {
                break;
            }
            let j = candidates[c];
            self.residual[j] -= 1;
            self.edges.push((i, j));
            self.choose(i, candidates, c + 1, need - 1);
            self.edges.pop();
            self.residual[j] += 1;
        }
    }
}
