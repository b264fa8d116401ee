use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use gapgraph::analytic::ThresholdKind;
use gapgraph::certificate::Certificate;
use gapgraph::graphic::DegreeMultiset;
use gapgraph::graphs::{enumerate_realizations, maximum_matching};
use gapgraph::primes::PrimeTable;
use gapgraph::zeros::{error_ratio_matrix, load_zeros, rect_count_check, RatioEntry};
use serde_json::{json, Map, Value};

use crate::commands::{dpg_run_cmd, graphic_sweep_cmd, primes_dusart, threshold_report};
use crate::config::{load_or_build_gaps, RunConfig};
use crate::timestamp;

pub const AGGREGATE_FILE: &str = "verify_all.json";
pub const DPG_CERTIFICATES_FILE: &str = "dpg_certificates.jsonl";

/// Ratio above which the explicit-formula check fails outright; ratios in
/// `[1, 10]` are reported as findings.
const RATIO_BUG_LEVEL: f64 = 10.0;

pub fn write_certificate(path: &Path, c: &Certificate) -> Result<()> {
    let text = serde_json::to_string_pretty(c)?;
    fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
}

/// Every realization of `PD_n`, `2 <= n <= max_n`, has a matching covering
/// the next gap.
fn enumerated_matchings(max_n: u64) -> Result<Certificate> {
    let table = PrimeTable::new(100);
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in 2..=max_n {
        let pd = table.prime_gaps(n).context("prime table too short")?;
        let gap = table.gap(n + 1).context("prime table too short")?;
        let graphs = enumerate_realizations(&DegreeMultiset::from_degrees(pd), usize::MAX)?;
        let min_matching = graphs.iter().map(|g| maximum_matching(g).len() as u64).min();
        if min_matching.is_some_and(|m| 2 * m < gap) {
            failures.push(format!("PD_{n}"));
        }
        rows.push(json!({
            "n": n,
            "next_gap": gap,
            "realizations": graphs.len(),
            "min_max_matching": min_matching,
        }));
    }
    Ok(Certificate::new(
        "dpg enumerate",
        json!({ "max_n": max_n }),
        json!({ "rows": rows }),
        failures,
        timestamp(),
    ))
}

fn zeros_checks(path: &Path) -> Result<Certificate> {
    let z = load_zeros(path)?;
    let rect = rect_count_check(&z)?;
    let xs = [1e4 + 0.5, 1e5 + 0.5, 1e6 + 0.5, 1e7 + 0.5];
    let ts = [1e3, 1e4, 5e4, z.max_ordinate()];
    let matrix = error_ratio_matrix(&z, &xs, &ts)?;
    let ratios: Vec<f64> = matrix.iter().filter_map(RatioEntry::ratio).collect();
    let findings: Vec<&RatioEntry> = matrix.iter().filter(|e| e.ratio().is_some_and(|r| r >= 1.0)).collect();
    let mut failures = Vec::new();
    if !rect.pass() {
        failures.push("rectangle count".to_string());
    }
    if ratios.iter().any(|&r| r > RATIO_BUG_LEVEL) {
        failures.push("explicit formula ratio above 10".to_string());
    }
    Ok(Certificate::new(
        "zeros",
        json!({ "file": path, "xs": xs, "ts": ts }),
        json!({
            "count": z.count(),
            "max_ordinate": z.max_ordinate(),
            "checksum_verified": z.checksum_verified(),
            "rect": rect,
            "matrix": matrix,
            "max_ratio": ratios.iter().copied().fold(0.0, f64::max),
            "findings": findings,
        }),
        failures,
        timestamp(),
    ))
}

/// Runs every check, writes one certificate per module plus the aggregate
/// into `out_dir`, and returns the aggregate.
pub fn cmd_verify_all(config: &RunConfig) -> Result<Certificate> {
    config.validate()?;
    let out = &config.out_dir;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;

    let cache = load_or_build_gaps(&config.cache_dir(), config.limit)?;
    let primes = cache.primes();
    let pi_limit = primes.partition_point(|&p| p <= config.limit) as u64;
    if pi_limit < config.max_n {
        bail!(
            "limit {} holds only {pi_limit} primes but max_n = {}; raise the limit",
            config.limit,
            config.max_n
        );
    }

    let mut parts: Vec<(&str, String, Certificate)> = Vec::new();
    parts.push(("graphic", "graphic.json".into(), graphic_sweep_cmd(config.max_n, 100, config.seed)?));
    let dpg_end = config.dpg_end.min(config.max_n);
    if dpg_end > 5 {
        let path = out.join(DPG_CERTIFICATES_FILE);
        let mut c = dpg_run_cmd(5, dpg_end, config.seed, Some(&path))?;
        c.results["certificates"] = json!(DPG_CERTIFICATES_FILE);
        parts.push(("dpg", "dpg.json".into(), c));
    }
    parts.push(("dpg_enumerate", "dpg_enumerate.json".into(), enumerated_matchings(config.max_n.min(8))?));
    for (kind, lo) in [(ThresholdKind::Case2, 28.0), (ThresholdKind::Dpg, 32.0)] {
        let name = if kind == ThresholdKind::Case2 { "threshold_case2" } else { "threshold_dpg" };
        parts.push((name, format!("thresholds_{}.json", kind.name()), threshold_report(kind, lo, 60.0, config.threshold_tol)?));
    }
    parts.push(("dusart", "dusart.json".into(), primes_dusart(config.limit, config.dusart_grid)?));
    if let Some(zp) = &config.zeros_path {
        parts.push(("zeros", "zeros.json".into(), zeros_checks(zp)?));
    }

    let mut results = Map::new();
    let mut failures = Vec::new();
    for (name, file, c) in &parts {
        write_certificate(&out.join(file), c)?;
        if !c.pass {
            failures.push(name.to_string());
        }
        results.insert(
            name.to_string(),
            json!({ "pass": c.pass, "artifact": file, "failures": c.failures }),
        );
    }
    results.insert(
        "gaps".into(),
        json!({
            "limit": config.limit,
            "primes_up_to_limit": pi_limit,
            "largest_gap": cache.gaps[..pi_limit as usize].iter().max(),
        }),
    );
    if config.max_n == 1 {
        results.insert("note".into(), json!("PD_1 has odd sum and is not graphic; checks start at n = 2"));
    }
    let aggregate = Certificate::new(
        "verify-all",
        serde_json::to_value(config)?,
        Value::Object(results),
        failures,
        timestamp(),
    );
    write_certificate(&out.join(AGGREGATE_FILE), &aggregate)?;
    Ok(aggregate)
}
