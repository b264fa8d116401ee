use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A degree sequence stored as value -> multiplicity.
///
/// Iteration yields values in strictly descending order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeMultiset {
    counts: BTreeMap<u64, u64>,
    n: u64,
    sum: u64,
}

impl DegreeMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        let mut m = Self::new();
        for d in degrees {
            m.insert(d);
        }
        m
    }

    pub fn insert(&mut self, d: u64) {
        self.insert_many(d, 1);
    }

    pub fn insert_many(&mut self, d: u64, count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(d).or_insert(0) += count;
        self.n += count;
        self.sum += d * count;
    }

    /// Removes one copy of `d`; returns false if absent.
    pub fn remove(&mut self, d: u64) -> bool {
        match self.counts.get_mut(&d) {
            None => false,
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&d);
                }
                self.n -= 1;
                self.sum -= d;
                true
            }
        }
    }

    pub fn len(&self) -> u64 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    pub fn max(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn count(&self, d: u64) -> u64 {
        self.counts.get(&d).copied().unwrap_or(0)
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn iter_desc(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().rev().map(|(&d, &c)| (d, c))
    }

    /// The explicit non-increasing sequence `d_1 >= ... >= d_n`.
    pub fn sorted_desc(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.n as usize);
        for (d, c) in self.iter_desc() {
            out.extend(std::iter::repeat_n(d, c as usize));
        }
        out
    }
}

impl FromIterator<u64> for DegreeMultiset {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        Self::from_degrees(iter)
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut first = true;
        for (d, c) in self.iter_desc() {
            for _ in 0..c {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{d}")?;
                first = false;
            }
        }
        write!(f, ")")
    }
}

/// Descending runs of equal values with cumulative position and sum.
///
/// Group `g` covers positions `start[g] + 1 ..= start[g] + count[g]`
/// (1-based) of the sorted sequence.
pub(crate) struct Groups {
    pub value: Vec<u64>,
    pub count: Vec<u64>,
    /// Number of entries before the group.
    pub start: Vec<u64>,
    /// Sum of the entries before the group.
    pub prefix_sum: Vec<u128>,
    pub total: u128,
}

impl Groups {
    pub fn new(seq: &DegreeMultiset) -> Self {
        let k = seq.distinct();
        let mut g = Groups {
            value: Vec::with_capacity(k),
            count: Vec::with_capacity(k),
            start: Vec::with_capacity(k),
            prefix_sum: Vec::with_capacity(k),
            total: seq.sum() as u128,
        };
        let (mut pos, mut acc) = (0u64, 0u128);
        for (d, c) in seq.iter_desc() {
            g.value.push(d);
            g.count.push(c);
            g.start.push(pos);
            g.prefix_sum.push(acc);
            pos += c;
            acc += d as u128 * c as u128;
        }
        g
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    /// `m = max{i : d_i >= i}`, 0 when no such `i`.
    pub fn m_value(&self) -> u64 {
        let mut m = 0;
        for g in 0..self.len() {
            let first = self.start[g] + 1;
            if self.value[g] < first {
                break;
            }
            m = (self.start[g] + self.count[g]).min(self.value[g]);
        }
        m
    }

    /// Index of the group holding position `k` (1 <= k <= n).
    fn group_at(&self, k: u64) -> usize {
        self.start.partition_point(|&s| s < k) - 1
    }

    /// `d_1 + ... + d_k`.
    pub fn prefix(&self, k: u64) -> u128 {
        if k == 0 {
            return 0;
        }
        let g = self.group_at(k);
        self.prefix_sum[g] + (k - self.start[g]) as u128 * self.value[g] as u128
    }

    /// Number of groups with value `>= k`.
    fn groups_ge(&self, k: u64) -> usize {
        self.value.partition_point(|&v| v >= k)
    }

    /// Erdős–Gallai sides `(Σ_{i<=k} d_i, k(k-1) + Σ_{i>k} min(k, d_i))`.
    pub fn eg_sides(&self, k: u64) -> (u128, u128) {
        self.eg_sides_with(k, self.groups_ge(k))
    }

    /// As [`Groups::eg_sides`] with the number of groups `>= k` supplied.
    pub fn eg_sides_with(&self, k: u64, ge: usize) -> (u128, u128) {
        let lhs = self.prefix(k);
        let k128 = k as u128;
        let (c, sum_ge) = if ge == 0 {
            (0, 0)
        } else {
            let last = ge - 1;
            (
                self.start[last] + self.count[last],
                self.prefix_sum[last] + self.value[last] as u128 * self.count[last] as u128,
            )
        };
        let tail = if c >= k {
            k128 * (c - k) as u128 + (self.total - sum_ge)
        } else {
            self.total - lhs
        };
        (lhs, k128 * (k128.saturating_sub(1)) + tail)
    }
}
