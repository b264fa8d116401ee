use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use gapgraph::analytic::ThresholdSides;
use gapgraph::certificate::Certificate;
use gapgraph::primes::DusartSweep;
use gapgraph::zeros::RatioEntry;

use crate::config::RunConfig;

pub const REPORT_DIR: &str = "report";
const REQUIRED: [&str; 3] = ["thresholds_case2.json", "thresholds_dpg.json", "dusart.json"];

fn read_certificate(path: &Path) -> Result<Certificate> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Certificate::validate(&value).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

fn thresholds_csv(cert: &Certificate, path: &Path) -> Result<()> {
    let grid: Vec<ThresholdSides> = serde_json::from_value(cert.results["grid"].clone())
        .context("threshold artifact has no grid")?;
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["t", "lhs", "rhs", "holds"])?;
    for s in grid {
        w.write_record([s.t.to_string(), s.lhs.to_string(), s.rhs.to_string(), s.holds.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

fn dusart_csv(cert: &Certificate, path: &Path) -> Result<()> {
    let sweep: DusartSweep = serde_json::from_value(cert.results.clone()).context("malformed Dusart artifact")?;
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["x", "pi", "lower", "upper", "lower_margin", "upper_margin"])?;
    for p in sweep.grid {
        let pi = p.pi as f64;
        w.write_record([
            p.x.to_string(),
            p.pi.to_string(),
            p.lower.to_string(),
            p.upper.map(|u| u.to_string()).unwrap_or_default(),
            (pi - p.lower).to_string(),
            p.upper.map(|u| (u - pi).to_string()).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn explicit_formula_csv(cert: &Certificate, path: &Path) -> Result<()> {
    let matrix: Vec<RatioEntry> = serde_json::from_value(cert.results["matrix"].clone())
        .context("zeros artifact has no matrix")?;
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["x", "t", "approx", "psi", "abs_error", "envelope", "ratio", "status"])?;
    for e in matrix {
        match e {
            RatioEntry::Evaluated { x, t, approx, psi, abs_error, envelope, ratio, .. } => w.write_record([
                x.to_string(),
                t.to_string(),
                approx.to_string(),
                psi.to_string(),
                abs_error.to_string(),
                envelope.to_string(),
                ratio.to_string(),
                "evaluated".to_string(),
            ])?,
            RatioEntry::Skipped { x, t, .. } => {
                w.write_record([x.to_string(), t.to_string(), String::new(), String::new(), String::new(), String::new(), String::new(), "skipped".to_string()])?
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Renders CSV tables from the artifacts of a previous `verify-all` into
/// `out_dir/report`, returning the files written.
pub fn cmd_report(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let out = &config.out_dir;
    let missing: Vec<String> = REQUIRED
        .iter()
        .map(|f| out.join(f))
        .filter(|p| !p.exists())
        .map(|p| p.display().to_string())
        .collect();
    if !missing.is_empty() {
        bail!("missing artifacts (run verify-all first): {}", missing.join(", "));
    }
    let dir = out.join(REPORT_DIR);
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut written = Vec::new();
    for kind in ["case2", "dpg"] {
        let cert = read_certificate(&out.join(format!("thresholds_{kind}.json")))?;
        let path = dir.join(format!("thresholds_{kind}.csv"));
        thresholds_csv(&cert, &path)?;
        written.push(path);
    }
    let path = dir.join("dusart.csv");
    dusart_csv(&read_certificate(&out.join("dusart.json"))?, &path)?;
    written.push(path);
    let zeros = out.join("zeros.json");
    if zeros.exists() {
        let path = dir.join("explicit_formula.csv");
        explicit_formula_csv(&read_certificate(&zeros)?, &path)?;
        written.push(path);
    }
    Ok(written)
}
