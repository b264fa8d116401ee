use std::collections::BTreeMap;

use super::{primes_up_to, GapStats, PrimesError};

/// All primes up to a limit, with the p_0 = 1 indexing convention.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

/// Kahan-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub(crate) fn add(&mut self, v: f64) {
        let y = v - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(self) -> f64 {
        self.sum
    }
}

/// An upper bound for `p_n`: `n (ln n + ln ln n)` for `n >= 6`.
pub fn nth_prime_upper_bound(n: u64) -> u64 {
    if n < 6 {
        return 13;
    }
    let nf = n as f64;
    (nf * (nf.ln() + nf.ln().ln())).ceil() as u64 + 1
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        Self {
            limit,
            primes: primes_up_to(limit),
        }
    }

    /// Smallest convenient table holding at least `count` primes.
    pub fn with_prime_count(count: u64) -> Self {
        Self::new(nth_prime_upper_bound(count.max(1)))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// `p_l`, with `p_0 = 1`. `None` past the end of the table.
    pub fn prime(&self, l: u64) -> Option<u64> {
        if l == 0 {
            return Some(1);
        }
        self.primes.get(l as usize - 1).copied()
    }

    /// `p_l - p_{l-1}` for `l >= 1`.
    pub fn gap(&self, l: u64) -> Option<u64> {
        if l == 0 {
            return None;
        }
        Some(self.prime(l)? - self.prime(l - 1)?)
    }

    /// The first `n` gaps `PD_n`, or `None` if the table is too short.
    pub fn prime_gaps(&self, n: u64) -> Option<Vec<u64>> {
        if n as usize > self.primes.len() {
            return None;
        }
        Some((1..=n).map(|l| self.gap(l).unwrap()).collect())
    }

    pub fn pi(&self, x: u64) -> Result<u64, PrimesError> {
        if x > self.limit {
            return Err(PrimesError::OutOfRange {
                x,
                needed: x,
                limit: self.limit,
            });
        }
        Ok(self.primes.partition_point(|&p| p <= x) as u64)
    }

    /// Chebyshev ψ(x) = Σ_{p^k <= x} log p.
    pub fn psi(&self, x: u64) -> Result<f64, PrimesError> {
        let count = self.pi(x)? as usize;
        let mut acc = KahanSum::default();
        for &p in &self.primes[..count] {
            let mut k = 0u32;
            let mut pk = 1u64;
            while let Some(next) = pk.checked_mul(p) {
                if next > x {
                    break;
                }
                pk = next;
                k += 1;
            }
            acc.add(k as f64 * (p as f64).ln());
        }
        Ok(acc.value())
    }

    /// Number of primes `p_l <= x`, checking that `p_{l+1}` is also known.
    fn forward_count(&self, x: u64) -> Result<usize, PrimesError> {
        let count = self.primes.partition_point(|&p| p <= x);
        if count >= self.primes.len() {
            return Err(PrimesError::OutOfRange {
                x,
                needed: x + 1,
                limit: self.limit,
            });
        }
        Ok(count)
    }

    /// Forward gaps `p_{l+1} - p_l` over `p_l <= x`.
    pub fn forward_gaps(&self, x: u64) -> Result<impl Iterator<Item = u64> + '_, PrimesError> {
        let count = self.forward_count(x)?;
        Ok(self.primes[..=count].windows(2).map(|w| w[1] - w[0]))
    }

    /// Largest gap starting at a prime `<= x` (the gap may end above `x`).
    pub fn max_gap(&self, x: u64) -> Result<u64, PrimesError> {
        if x < 3 {
            return Err(PrimesError::Domain(format!("max_gap needs x >= 3, got {x}")));
        }
        Ok(self.forward_gaps(x)?.max().unwrap_or(0))
    }

    /// `(k_N(x), S_N(x))`: k counts gaps `>= N`, S sums gaps `> N`.
    pub fn k_and_s(&self, x: u64, n: u64) -> Result<(u64, u64), PrimesError> {
        if x < 2 || n < 1 {
            return Err(PrimesError::Domain(format!(
                "k_and_s needs x >= 2 and N >= 1, got x = {x}, N = {n}"
            )));
        }
        let mut k = 0;
        let mut s = 0;
        for g in self.forward_gaps(x)? {
            if g >= n {
                k += 1;
            }
            if g > n {
                s += g;
            }
        }
        Ok((k, s))
    }

    pub fn gap_histogram(&self, x: u64) -> Result<BTreeMap<u64, u64>, PrimesError> {
        let mut hist = BTreeMap::new();
        for g in self.forward_gaps(x)? {
            *hist.entry(g).or_insert(0) += 1;
        }
        Ok(hist)
    }

    pub fn stats(&self, x: u64, n_values: &[u64]) -> Result<GapStats, PrimesError> {
        Ok(GapStats::from_histogram(
            x,
            self.gap_histogram(x)?,
            n_values,
        ))
    }
}

/// ψ(x) for `x >= 1`.
pub fn psi(x: u64) -> f64 {
    if x < 2 {
        return 0.0;
    }
    PrimeTable::new(x).psi(x).expect("table covers x")
}

/// π(x).
pub fn pi(x: u64) -> u64 {
    if x < 2 {
        return 0;
    }
    PrimeTable::new(x).pi(x).expect("table covers x")
}

/// Bertrand: some prime lies in `(x, 2x]`, so a table to `2x` sees the gap
/// starting at the last prime `<= x`.
fn forward_table(x: u64) -> PrimeTable {
    PrimeTable::new(2 * x.max(2))
}

/// M(x), the largest gap `p_{l+1} - p_l` with `p_l <= x`.
pub fn max_gap(x: u64) -> Result<u64, PrimesError> {
    forward_table(x).max_gap(x)
}

pub fn k_and_s(x: u64, n: u64) -> Result<(u64, u64), PrimesError> {
    forward_table(x).k_and_s(x, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_small_values() {
        assert_eq!(psi(1), 0.0);
        let expect10 = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        assert!((psi(10) - expect10).abs() < 1e-12);
        assert!((psi(10) - 7.8320).abs() < 1e-4);
        assert!((psi(100) - 94.045_311_229_357_4).abs() < 1e-9);
    }

    #[test]
    fn psi_matches_sum_of_theta_over_roots() {
        let table = PrimeTable::new(200_000);
        let theta = |y: u64| -> f64 {
            table.primes()[..table.pi(y).unwrap() as usize]
                .iter()
                .map(|&p| (p as f64).ln())
                .sum()
        };
        for x in [2u64, 17, 1000, 65_536, 199_999] {
            let mut expect = 0.0;
            let mut k = 1u32;
            loop {
                // integer k-th root
                let mut r = (x as f64).powf(1.0 / k as f64).round() as u64;
                while r.pow(k) > x {
                    r -= 1;
                }
                while (r + 1).pow(k) <= x {
                    r += 1;
                }
                if r < 2 {
                    break;
                }
                expect += theta(r);
                k += 1;
            }
            let got = table.psi(x).unwrap();
            assert!((got - expect).abs() <= 1e-9 * expect.max(1.0), "x = {x}");
            assert!(got >= theta(x));
        }
    }

    #[test]
    fn pi_values() {
        assert_eq!(pi(0), 0);
        assert_eq!(pi(1), 0);
        assert_eq!(pi(10), 4);
        assert_eq!(pi(599), 109);
        assert_eq!(pi(1_000_000), 78_498);
    }

    #[test]
    fn max_gap_values() {
        assert_eq!(max_gap(3).unwrap(), 2);
        assert_eq!(max_gap(10).unwrap(), 4);
        assert_eq!(max_gap(100).unwrap(), 8);
        assert!(max_gap(2).is_err());
    }

    #[test]
    fn k_and_s_examples() {
        assert_eq!(k_and_s(29, 4).unwrap(), (4, 6));
        assert_eq!(k_and_s(29, 100).unwrap(), (0, 0));
    }

    #[test]
    fn k_and_s_matches_histogram_at_ten_thousand() {
        let table = PrimeTable::new(20_000);
        let (k, s) = table.k_and_s(10_000, 2).unwrap();
        let hist = table.gap_histogram(10_000).unwrap();
        let k2: u64 = hist.iter().filter(|(g, _)| **g >= 2).map(|(_, c)| c).sum();
        let s2: u64 = hist.iter().filter(|(g, _)| **g > 2).map(|(g, c)| g * c).sum();
        assert_eq!((k, s), (k2, s2));
        // every forward gap from p_l <= 10^4 except 2 -> 3 is >= 2
        assert_eq!(k, table.pi(10_000).unwrap() - 1);
    }

    #[test]
    fn stats_are_monotone() {
        let table = PrimeTable::new(300_000);
        let ns: Vec<u64> = (1..=80).collect();
        let stats = table.stats(100_000, &ns).unwrap();
        let ks: Vec<u64> = stats.k_n.values().copied().collect();
        let ss: Vec<u64> = stats.s_n.values().copied().collect();
        assert!(ks.windows(2).all(|w| w[0] >= w[1]));
        assert!(ss.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(stats.max_gap, table.max_gap(100_000).unwrap());
    }

    #[test]
    fn out_of_range_is_reported() {
        let table = PrimeTable::new(100);
        assert!(matches!(
            table.max_gap(97),
            Err(PrimesError::OutOfRange { .. })
        ));
        assert!(table.pi(101).is_err());
    }

    #[test]
    fn gap_sum_telescopes() {
        let table = PrimeTable::new(2_000_000);
        let mut sum = 0u64;
        for l in 1..=table.len() as u64 {
            let g = table.gap(l).unwrap();
            assert!(g >= 1);
            if l >= 3 {
                assert_eq!(g % 2, 0);
            } else {
                assert_eq!(g, 1);
            }
            sum += g;
            if l % 100_000 == 0 || l == table.len() as u64 {
                assert_eq!(sum, table.prime(l).unwrap() - 1);
            }
        }
    }
}
