use serde::{Deserialize, Serialize};

use super::multiset::Groups;
use super::DegreeMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphicVerdict {
    pub graphic: bool,
    /// First `k` at which the Erdős–Gallai inequality fails.
    pub failing_k: Option<u64>,
    /// `m = max{i : d_i >= i}`.
    pub m: u64,
    /// The `k` values tested, ascending.
    pub checked_ks: Vec<u64>,
}

fn verdict(groups: &Groups, m: u64, ks: Vec<u64>) -> GraphicVerdict {
    let failing_k = ks.iter().copied().find(|&k| {
        let (lhs, rhs) = groups.eg_sides(k);
        lhs > rhs
    });
    GraphicVerdict {
        graphic: failing_k.is_none(),
        failing_k,
        m,
        checked_ks: ks,
    }
}

fn prepare(seq: &DegreeMultiset) -> (Groups, u64) {
    let groups = Groups::new(seq);
    let m = groups.m_value();
    assert!(
        (m as u128) * (m as u128) <= seq.sum() as u128,
        "m = {m} exceeds sqrt of the degree sum {}",
        seq.sum()
    );
    (groups, m)
}

fn odd(m: u64) -> GraphicVerdict {
    GraphicVerdict {
        graphic: false,
        failing_k: None,
        m,
        checked_ks: Vec::new(),
    }
}

/// The Erdős–Gallai test over every `1 <= k <= n`.
pub fn erdos_gallai_full(seq: &DegreeMultiset) -> GraphicVerdict {
    let (groups, m) = prepare(seq);
    if seq.sum() % 2 == 1 {
        return odd(m);
    }
    let n = seq.len();
    let mut ge = groups.len();
    let mut failing_k = None;
    for k in 1..=n {
        while ge > 0 && groups.value[ge - 1] < k {
            ge -= 1;
        }
        let (lhs, rhs) = groups.eg_sides_with(k, ge);
        if lhs > rhs {
            failing_k = Some(k);
            break;
        }
    }
    let checked = failing_k.unwrap_or(n);
    GraphicVerdict {
        graphic: failing_k.is_none(),
        failing_k,
        m,
        checked_ks: (1..=checked).collect(),
    }
}

/// The reduced test: only `k = m` and the descents `k < m` with
/// `d_k > d_{k+1}`.
///
/// `k = m` is tested even when `m = n`; the `k = n` inequality is part of
/// the full criterion and catches sequences like `(2)`.
pub fn zz_tv_reduced(seq: &DegreeMultiset) -> GraphicVerdict {
    let (groups, m) = prepare(seq);
    if seq.sum() % 2 == 1 {
        return odd(m);
    }
    if m == 0 {
        // all entries are zero
        return verdict(&groups, m, Vec::new());
    }
    let mut ks: Vec<u64> = (0..groups.len())
        .map(|g| groups.start[g] + groups.count[g])
        .take_while(|&end| end < m)
        .collect();
    ks.push(m);
    verdict(&groups, m, ks)
}
