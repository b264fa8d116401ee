use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::GraphsError;
use crate::graphic::DegreeMultiset;

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
    edges: usize,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphsError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| {
            nb.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.adj.iter().map(|a| a.len() as u64).collect()
    }

    pub fn degree_multiset(&self) -> DegreeMultiset {
        self.degrees().into_iter().collect()
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphsError> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(GraphsError::InvalidEdge {
                u,
                v,
                reason: format!("vertex out of range for n = {n}"),
            });
        }
        if u == v {
            return Err(GraphsError::InvalidEdge {
                u,
                v,
                reason: "self-loop".into(),
            });
        }
        match self.adj[u].binary_search(&(v as u32)) {
            Ok(_) => Err(GraphsError::InvalidEdge {
                u,
                v,
                reason: "duplicate edge".into(),
            }),
            Err(i) => {
                self.adj[u].insert(i, v as u32);
                let j = self.adj[v].binary_search(&(u as u32)).unwrap_err();
                self.adj[v].insert(j, u as u32);
                self.edges += 1;
                Ok(())
            }
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphsError> {
        let missing = || GraphsError::InvalidEdge {
            u,
            v,
            reason: "edge not present".into(),
        };
        if !self.has_edge(u, v) {
            return Err(missing());
        }
        let i = self.adj[u].binary_search(&(v as u32)).map_err(|_| missing())?;
        self.adj[u].remove(i);
        let j = self.adj[v].binary_search(&(u as u32)).map_err(|_| missing())?;
        self.adj[v].remove(j);
        self.edges -= 1;
        Ok(())
    }

    /// Edge-list text: header `n m`, then one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Parses the edge-list format; blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphsError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), GraphsError> {
            let bad = |msg: &str| GraphsError::Parse {
                line,
                message: format!("{msg}: {l:?}"),
            };
            let mut it = l.split_whitespace();
            let a = it.next().ok_or_else(|| bad("expected two integers"))?;
            let b = it.next().ok_or_else(|| bad("expected two integers"))?;
            if it.next().is_some() {
                return Err(bad("trailing tokens"));
            }
            Ok((
                a.parse().map_err(|_| bad("not an integer"))?,
                b.parse().map_err(|_| bad("not an integer"))?,
            ))
        };
        let (hline, header) = lines.next().ok_or(GraphsError::Parse {
            line: 0,
            message: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Self::empty(n);
        let mut count = 0;
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l)?;
            g.add_edge(u, v).map_err(|e| GraphsError::Parse {
                line,
                message: e.to_string(),
            })?;
            count += 1;
        }
        if count != m {
            return Err(GraphsError::Parse {
                line: hline,
                message: format!("header declares {m} edges, found {count}"),
            });
        }
        Ok(g)
    }
}

/// A set of pairwise vertex-disjoint edges of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates disjointness and membership in `g`; edges are stored as
    /// `(min, max)` sorted ascending.
    pub fn new(g: &SimpleGraph, edges: Vec<(usize, usize)>) -> Result<Self, GraphsError> {
        let mut used = vec![false; g.n()];
        let mut out = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if !g.has_edge(u, v) {
                return Err(GraphsError::InvalidMatching(format!("({u}, {v}) is not an edge")));
            }
            if used[u] || used[v] {
                return Err(GraphsError::InvalidMatching(format!(
                    "({u}, {v}) shares a vertex with another edge"
                )));
            }
            used[u] = true;
            used[v] = true;
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Self { edges: out })
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of all edges, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        v.sort_unstable();
        v
    }
}
