use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::config::{load_matrix_config, load_sweep_config};
use super::format::{csv_num, fmt_list, fmt_ratio, fmt_val};
use super::sweep::{run_sweep, write_csv, SweepSummary};
use super::{CliError, CliResult, EXIT_FAIL, EXIT_OK};
use crate::bounds::{full_verification_with, Status, DEFAULT_TOL, STRICT_TOL};
use crate::discriminant::{eval_discriminant, DiscriminantReport};
use crate::error::Error;
use crate::model::PeriodicJacobi;
use crate::quartic::{oracle_cross_check, quartic_inequalities, quartic_invariants};
use crate::spectrum::band_structure;

fn load(path: &Path) -> Result<(PeriodicJacobi, Option<String>), CliError> {
    let cfg = load_matrix_config(path)?;
    let j = cfg
        .matrix()
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    Ok((j, cfg.label))
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::invalid(format!("cannot create {}: {e}", path.display())))
}

/// Print the band structure; `csv` additionally receives one row per band/gap.
pub fn cmd_spectrum(config: &Path, csv: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let (j, label) = load(config)?;
    let bs = band_structure(&j)?;
    let disc = DiscriminantReport::compute(&j, bs.hull, &bs.gap_intervals())?;

    if let Some(label) = label {
        writeln!(out, "label: {label}")?;
    }
    writeln!(out, "p = {}", j.period())?;
    writeln!(out, "edges: {}", fmt_list(&bs.edges))?;
    writeln!(out, "bands:")?;
    for (k, b) in bs.bands.iter().enumerate() {
        writeln!(out, "  {k:>3}  [{}, {}]", fmt_val(b.lo), fmt_val(b.hi))?;
    }
    if bs.gaps.is_empty() {
        writeln!(out, "gaps: none")?;
    } else {
        writeln!(out, "gaps:")?;
        for g in &bs.gaps {
            let flag = if g.closed { "  closed" } else { "" };
            writeln!(
                out,
                "  {:>3}  ({}, {})  length {}{flag}",
                g.index,
                fmt_val(g.lower),
                fmt_val(g.upper),
                fmt_val(g.length)
            )?;
        }
    }
    writeln!(out, "|gamma| = {}", fmt_val(bs.max_gap))?;
    writeln!(out, "|L| = {}", fmt_val(bs.hull_length))?;
    writeln!(out, "M = {}", fmt_val(disc.m))?;
    writeln!(out, "d_j: {}", fmt_list(&disc.roots))?;

    if let Some(path) = csv {
        let mut w = create(path)?;
        writeln!(w, "kind,index,lo,hi,length,closed")?;
        for (k, b) in bs.bands.iter().enumerate() {
            let (lo, hi) = (csv_num(b.lo), csv_num(b.hi));
            writeln!(w, "band,{k},{lo},{hi},{},", csv_num(b.hi - b.lo))?;
        }
        for g in &bs.gaps {
            let (lo, hi) = (csv_num(g.lower), csv_num(g.upper));
            writeln!(
                w,
                "gap,{},{lo},{hi},{},{}",
                g.index,
                csv_num(g.length),
                g.closed
            )?;
        }
        w.flush()?;
    }
    Ok(EXIT_OK)
}

/// Every inequality record; exit 1 unless all applicable records hold.
pub fn cmd_verify(config: &Path, strict: bool, out: &mut dyn Write) -> CliResult {
    let (j, label) = load(config)?;
    let tol = if strict { STRICT_TOL } else { DEFAULT_TOL };
    let ver = full_verification_with(&j, tol)?;

    if let Some(label) = label {
        writeln!(out, "label: {label}")?;
    }
    writeln!(out, "p = {}, tolerance = {tol:e}", j.period())?;
    let width = ver
        .report
        .records
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(0);
    let (mut pass, mut degenerate, mut skipped, mut fail) = (0, 0, 0, 0);
    for r in &ver.report.records {
        match r.status {
            Status::Pass => pass += 1,
            Status::Degenerate => degenerate += 1,
            Status::Skipped(_) => skipped += 1,
            Status::Fail => fail += 1,
        }
        if r.is_skipped() {
            writeln!(out, "{:<width$}  {}", r.name, r.status)?;
        } else {
            writeln!(
                out,
                "{:<width$}  lhs = {}  rhs = {}  ratio = {}  {}",
                r.name,
                fmt_val(r.lhs),
                fmt_val(r.rhs),
                fmt_ratio(r.ratio),
                r.status
            )?;
        }
    }
    writeln!(
        out,
        "{} checks: {pass} pass, {degenerate} degenerate, {skipped} skipped, {fail} fail",
        ver.report.records.len()
    )?;
    Ok(if fail == 0 { EXIT_OK } else { EXIT_FAIL })
}

/// `points` equally spaced samples of `D` on `[from, to]`.
pub fn cmd_sample(
    config: &Path,
    from: f64,
    to: f64,
    points: usize,
    out: &mut dyn Write,
) -> CliResult {
    if points < 2 {
        return Err(CliError::invalid(format!(
            "--points must be at least 2, got {points}"
        )));
    }
    if !(from.is_finite() && to.is_finite() && from < to) {
        return Err(CliError::invalid(format!(
            "need finite --from < --to, got [{from}, {to}]"
        )));
    }
    let (j, _) = load(config)?;
    writeln!(out, "lambda,discriminant")?;
    let last = (points - 1) as f64;
    for k in 0..points {
        let x = if k + 1 == points {
            to
        } else {
            from + (to - from) * (k as f64) / last
        };
        writeln!(out, "{},{}", csv_num(x), csv_num(eval_discriminant(&j, x)))?;
    }
    out.flush()?;
    Ok(EXIT_OK)
}

/// Seeded sweep. The CSV goes to `csv` (or `out`); the summary goes to `err`.
pub fn cmd_sweep(
    config: &Path,
    csv: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let cfg = load_sweep_config(config)?;
    let rows = run_sweep(&cfg)?;
    match csv {
        Some(path) => write_csv(&rows, &mut create(path)?)?,
        None => write_csv(&rows, out)?,
    }
    let s = SweepSummary::of(&rows);
    for row in rows.iter().filter(|r| !r.all_pass) {
        writeln!(
            err,
            "sample {} (p = {}) failed: {}",
            row.seed_index,
            row.p,
            row.failures.join(", ")
        )?;
    }
    writeln!(
        err,
        "sweep: {} samples, {} failures; max ratio_b_upper = {}, max ratio_a_upper = {}, max ratio_lower = {}",
        s.count,
        s.failures,
        fmt_ratio(Some(s.max_ratio_b_upper)),
        fmt_ratio(Some(s.max_ratio_a_upper)),
        fmt_ratio(Some(s.max_ratio_lower))
    )?;
    Ok(if s.failures == 0 { EXIT_OK } else { EXIT_FAIL })
}

/// Closed-form report for `b ≡ 0`, period 4.
pub fn cmd_oracle4(a: [f64; 4], out: &mut dyn Write) -> CliResult {
    let [a1, a2, a3, a4] = a;
    let inv = quartic_invariants(a1, a2, a3, a4)?;
    writeln!(out, "a = {}", fmt_list(&a))?;
    writeln!(out, "alpha = {}", fmt_val(inv.alpha))?;
    writeln!(out, "beta = {}", fmt_val(inv.beta))?;
    writeln!(out, "a^4 = {}", fmt_val(inv.a4th))?;
    writeln!(out, "D+ = {}", fmt_val(inv.d_plus))?;
    writeln!(out, "D- = {}", fmt_val(inv.d_minus))?;
    writeln!(out, "lambda1- = {}", fmt_val(inv.lambda1_minus))?;
    writeln!(out, "lambda2- = {}", fmt_val(inv.lambda2_minus))?;
    writeln!(out, "lambda2+ = {}", fmt_val(inv.lambda2_plus))?;
    writeln!(out, "lambda1+ = {}", fmt_val(inv.lambda1_plus))?;
    if inv.max_gap() == 0.0 {
        writeln!(
            out,
            "spectrum: single band [{}, {}]",
            fmt_val(-inv.lambda1_plus),
            fmt_val(inv.lambda1_plus)
        )?;
    }
    writeln!(out, "|gamma_int| = {}", fmt_val(inv.gamma_int()))?;
    writeln!(out, "|gamma_ext| = {}", fmt_val(inv.gamma_ext()))?;

    let q = quartic_inequalities(&inv)?;
    if q.relabeled {
        writeln!(out, "relabeled (a3, a4, a1, a2) so that a1 + a2 >= a3 + a4")?;
    }
    let width = q
        .report
        .records
        .iter()
        .map(|r| r.name.len())
        .max()
        .unwrap_or(0);
    for r in &q.report.records {
        writeln!(
            out,
            "{:<width$}  lhs = {}  rhs = {}  ratio = {}  {}",
            r.name,
            fmt_val(r.lhs),
            fmt_val(r.rhs),
            fmt_ratio(r.ratio),
            r.status
        )?;
    }
    let mut code = if q.report.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    match oracle_cross_check(a1, a2, a3, a4) {
        Ok(dev) => writeln!(out, "cross-check deviation = {}", fmt_val(dev))?,
        Err(e @ Error::Consistency { .. }) => {
            writeln!(out, "cross-check FAILED: {e}")?;
            code = EXIT_FAIL;
        }
        Err(e) => return Err(e.into()),
    }
    Ok(code)
}
