use serde::{Deserialize, Serialize};

use super::{ZeroTable, ZerosError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectPoint {
    pub t: f64,
    /// Ordinates in `(t − 1, t + 1)`.
    pub count: usize,
    pub bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectCountReport {
    pub points_checked: usize,
    /// Upper end of the grid, `maxOrdinate − 1`.
    pub grid_top: f64,
    pub violations: Vec<RectPoint>,
    /// Point with the largest `count / ln t`.
    pub tightest: RectPoint,
}

impl RectCountReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `N(t + 1) − N(t − 1) < ln t` on the grid `10.5, 11, …` up to
/// `maxOrdinate − 1` and at every midpoint of consecutive ordinates in that
/// range.
pub fn rect_count_check(zeros: &ZeroTable) -> Result<RectCountReport, ZerosError> {
    let top = zeros.max_ordinate() - 1.0;
    if zeros.max_ordinate() <= 12.0 {
        return Err(ZerosError::Domain(format!(
            "largest ordinate {} must exceed 12",
            zeros.max_ordinate()
        )));
    }
    let mut points = Vec::new();
    let steps = ((top - 10.5) / 0.5).floor() as usize;
    points.extend((0..=steps).map(|i| 10.5 + 0.5 * i as f64));
    let g = zeros.ordinates();
    points.extend(
        g.windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .filter(|&m| m >= 10.5 && m <= top),
    );
    let mut violations = Vec::new();
    let mut tightest = RectPoint {
        t: 10.5,
        count: 0,
        bound: 10.5f64.ln(),
    };
    let mut worst = -1.0;
    for &t in &points {
        let p = RectPoint {
            t,
            count: zeros.count_between(t - 1.0, t + 1.0),
            bound: t.ln(),
        };
        if p.count as f64 >= p.bound {
            violations.push(p);
        }
        let r = p.count as f64 / p.bound;
        if r > worst {
            worst = r;
            tightest = p;
        }
    }
    Ok(RectCountReport {
        points_checked: points.len(),
        grid_top: top,
        violations,
        tightest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_passes() {
        let z = ZeroTable::parse(include_str!("../../tests/fixtures/zeros_10k.txt")).unwrap();
        let r = rect_count_check(&z).unwrap();
        assert!(r.pass(), "{:?}", &r.violations[..r.violations.len().min(5)]);
        assert!(r.points_checked > 2 * 9800);
        // t = 15 sees only γ1 = 14.13...
        assert_eq!(z.count_between(14.0, 16.0), 1);
        assert_eq!(z.count_between(9.5, 11.5), 0);
    }

    #[test]
    fn dense_table_fails() {
        let z = ZeroTable::new(vec![13.0, 13.2, 13.4, 13.6, 20.0]).unwrap();
        let r = rect_count_check(&z).unwrap();
        assert!(!r.pass());
        assert!(r.violations.iter().any(|p| (p.t - 13.0).abs() < 1e-12));
        assert!(rect_count_check(&ZeroTable::new(vec![11.0]).unwrap()).is_err());
    }
}
