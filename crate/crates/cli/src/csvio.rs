//! CSV emit and parse. All floating-point columns go through the shared
//! 12-significant-digit wire format, which is what makes reruns byte-identical
//! and taus recomputable from the files exactly.

use std::path::Path;

use anyhow::{bail, Context, Result};
use entfid_core::harness::{Histogram, SweepRecord, TauRecord};
use entfid_core::wire::format_sig12;

pub const SWEEP_HEADER: &str = "p,f_e,f_ef,f_c,f_n";
pub const TAU_HEADER: &str = "state_index,tau_e_c,tau_e_n,tau_c_n,initial_concurrence";
pub const HISTOGRAM_HEADER: &str = "bin_left,bin_right,count";

pub fn sweep_csv(records: &[SweepRecord<f64>]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            format_sig12(r.p),
            format_sig12(r.f_e),
            format_sig12(r.f_ef),
            format_sig12(r.f_c),
            format_sig12(r.f_n),
        ));
    }
    out
}

pub fn tau_csv(records: &[TauRecord<f64>]) -> String {
    let mut out = String::from(TAU_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.state_index,
            format_sig12(r.tau_e_c),
            format_sig12(r.tau_e_n),
            format_sig12(r.tau_c_n),
            format_sig12(r.initial_concurrence),
        ));
    }
    out
}

pub fn histogram_csv(hist: &Histogram<f64>) -> String {
    let mut out = String::from(HISTOGRAM_HEADER);
    out.push('\n');
    for (k, count) in hist.counts.iter().enumerate() {
        out.push_str(&format!(
            "{},{},{}\n",
            format_sig12(hist.edges[k]),
            format_sig12(hist.edges[k + 1]),
            count,
        ));
    }
    out
}

/// Reads two named numeric columns from a simple comma-separated file.
pub fn read_two_columns(path: &Path, x: &str, y: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading csv {}", path.display()))?;
    let mut lines = text.lines();
    let header = match lines.next() {
        Some(h) => h,
        None => bail!("csv {} is empty", path.display()),
    };
    let columns: Vec<&str> = header.split(',').collect();
    let find = |name: &str| -> Result<usize> {
        columns.iter().position(|c| *c == name).with_context(|| {
            format!("column '{name}' not found in {} (header: {header})", path.display())
        })
    };
    let ix = find(x)?;
    let iy = find(y)?;

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (row, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != columns.len() {
            bail!("row {} of {} has {} cells, header has {}",
                row + 2, path.display(), cells.len(), columns.len());
        }
        let parse = |idx: usize, name: &str| -> Result<f64> {
            cells[idx].parse().with_context(|| {
                format!("non-numeric value '{}' at row {} column '{name}'", cells[idx], row + 2)
            })
        };
        xs.push(parse(ix, x)?);
        ys.push(parse(iy, y)?);
    }
    Ok((xs, ys))
}
