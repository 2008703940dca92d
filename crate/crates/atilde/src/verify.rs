// SPDX-License-Identifier: MIT OR Apache-2.0

//! The verification sweep.
//!
//! For every positive real root `α` in range and every `λ` in range, the
//! pair `(α, α + λδ)` is checked in four independent ways: the closed
//! formula, the plane drawing, the annulus drawing and `Ext¹` in the cluster
//! category. Self-intersections get the same treatment. A handful of pairs
//! outside the covered family are reported as controls, with no equality
//! claimed.

use std::ops::RangeInclusive;
use std::thread;

use atilde_core::annulus::{build_gamma, int_annulus, self_int_annulus};
use atilde_core::ext_oracle::{ext_dim_cluster, ext_dim_kq};
use atilde_core::geom_oracle::plane::{plane_pair_count, plane_self_count};
use atilde_core::geom_oracle::strip::{annulus_pair_count, annulus_self_count};
use atilde_core::geom_oracle::{PlaneLayout, StripLayout};
use atilde_core::root_system::enumerate_positive_real;
use atilde_core::word_builder::build_f;
use atilde_core::{Root, RootClass};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Sweep parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Ranks to sweep.
    pub ranks: RangeInclusive<usize>,
    /// Largest plateau level of `α`.
    pub max_m: usize,
    /// Largest shift `λ`.
    pub max_lambda: usize,
    /// Deliberately corrupt one formula value, to test the harness.
    pub inject_fault: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { ranks: 3..=5, max_m: 3, max_lambda: 4, inject_fault: false }
    }
}

/// What a row checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// A covered pair `(α, α + λδ)`.
    Pair,
    /// The self-intersection of `α`.
    SelfIntersection,
    /// A pair outside the covered family.
    Control,
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// Rank.
    pub n: usize,
    /// Kind of check.
    pub kind: RowKind,
    /// First root.
    pub alpha: Root,
    /// Second root.
    pub beta: Root,
    /// Class tag of `α`.
    pub class_a: String,
    /// Class tag of `β`.
    pub class_b: String,
    /// Plateau level of `α`.
    pub m: usize,
    /// Shift between the roots, when they differ by a constant vector.
    pub lambda: Option<usize>,
    /// Closed formula, absent for controls.
    pub formula: Option<usize>,
    /// Count on the plane drawing.
    pub plane: usize,
    /// Count on the annulus drawing.
    pub annulus: usize,
    /// Ext dimension: cluster category for pairs, module category for
    /// self-intersections.
    pub ext: usize,
    /// Whether all values agree. Absent for controls.
    pub pass: Option<bool>,
    /// Whether the geometric and algebraic values agree (controls only).
    pub agree: Option<bool>,
}

/// Totals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Rows with an equality claim.
    pub checked: usize,
    /// Of those, rows that passed.
    pub passed: usize,
    /// Of those, rows that failed.
    pub failed: usize,
    /// Control rows.
    pub controls: usize,
    /// Control rows where the values differ.
    pub controls_disagreeing: usize,
}

/// Full sweep result.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    /// Rows sorted by rank, then roots, then kind.
    pub rows: Vec<Row>,
    /// Totals.
    pub summary: Summary,
}

impl VerifyReport {
    /// True when no checked row failed.
    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }
}

/// A unit of work, evaluated independently.
#[derive(Debug, Clone)]
enum Job {
    Pair { alpha: Root, beta: Root, lambda: usize },
    SelfIntersection { alpha: Root },
    Control { alpha: Root, beta: Root },
}

/// Pairs per rank taken as controls.
const CONTROLS_PER_RANK: usize = 6;

fn jobs(cfg: &VerifyConfig) -> Result<Vec<Job>, CliError> {
    let mut out = Vec::new();
    for n in cfg.ranks.clone() {
        let roots = enumerate_positive_real(n, cfg.max_m)?;
        for (alpha, class) in &roots {
            out.push(Job::SelfIntersection { alpha: alpha.clone() });
            for lambda in 0..=cfg.max_lambda {
                if class.is_schur() && lambda >= n {
                    continue;
                }
                let beta = alpha.shift(lambda as i64);
                out.push(Job::Pair { alpha: alpha.clone(), beta, lambda });
            }
        }
        // Controls: neighbouring roots of different shape at low levels.
        let low: Vec<&(Root, RootClass)> =
            roots.iter().filter(|(_, c)| c.plateau().unwrap_or(0) <= 1).collect();
        let controls = low
            .windows(2)
            .filter(|w| !w[0].1.same_shape(&w[1].1))
            .take(CONTROLS_PER_RANK)
            .map(|w| Job::Control { alpha: w[0].0.clone(), beta: w[1].0.clone() });
        out.extend(controls);
    }
    Ok(out)
}

fn class_of(r: &Root) -> RootClass {
    atilde_core::root_system::classify(r)
}

fn run_job(job: &Job) -> Result<Row, CliError> {
    let plane_layout = |n| PlaneLayout::standard(n);
    let strip = StripLayout::default();
    match job {
        Job::Pair { alpha, beta, lambda } => {
            let n = alpha.n();
            let (ga, gb) = (build_gamma(alpha)?, build_gamma(beta)?);
            let formula = int_annulus(&ga, &gb)?.count();
            let plane = plane_pair_count(&build_f(alpha)?, &build_f(beta)?, &plane_layout(n))?;
            let annulus = annulus_pair_count(&ga, &gb, &strip)?;
            let ext = ext_dim_cluster(alpha, beta)?;
            Ok(row(RowKind::Pair, alpha, beta, Some(*lambda), formula, plane, annulus, ext))
        }
        Job::SelfIntersection { alpha } => {
            let n = alpha.n();
            let g = build_gamma(alpha)?;
            let formula = Some(self_int_annulus(&g));
            let plane = plane_self_count(&build_f(alpha)?, &plane_layout(n))?;
            let annulus = annulus_self_count(&g, &strip)?;
            let ext = ext_dim_kq(alpha, alpha)?;
            Ok(row(RowKind::SelfIntersection, alpha, alpha, Some(0), formula, plane, annulus, ext))
        }
        Job::Control { alpha, beta } => {
            let n = alpha.n();
            let (ga, gb) = (build_gamma(alpha)?, build_gamma(beta)?);
            let plane = plane_pair_count(&build_f(alpha)?, &build_f(beta)?, &plane_layout(n))?;
            let annulus = annulus_pair_count(&ga, &gb, &strip)?;
            let ext = ext_dim_cluster(alpha, beta)?;
            let lambda = alpha.constant_offset(beta).and_then(|l| usize::try_from(l).ok());
            Ok(row(RowKind::Control, alpha, beta, lambda, None, plane, annulus, ext))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn row(
    kind: RowKind,
    alpha: &Root,
    beta: &Root,
    lambda: Option<usize>,
    formula: Option<usize>,
    plane: usize,
    annulus: usize,
    ext: usize,
) -> Row {
    let (ca, cb) = (class_of(alpha), class_of(beta));
    let same = plane == annulus && annulus == ext;
    let (pass, agree) = match kind {
        RowKind::Control => (None, Some(same)),
        _ => (Some(same && formula == Some(plane)), None),
    };
    Row {
        n: alpha.n(),
        kind,
        alpha: alpha.clone(),
        beta: beta.clone(),
        class_a: ca.tag().to_string(),
        class_b: cb.tag().to_string(),
        m: ca.plateau().unwrap_or(0),
        lambda,
        formula,
        plane,
        annulus,
        ext,
        pass,
        agree,
    }
}

/// Runs the sweep, spreading rows over the available cores. The report is
/// the same whatever the number of threads.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport, CliError> {
    let jobs = jobs(cfg)?;
    let workers = thread::available_parallelism().map_or(1, |p| p.get()).min(16);
    let chunk = jobs.len().div_ceil(workers).max(1);
    let mut rows: Vec<Row> = thread::scope(|s| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(run_job).collect::<Result<Vec<_>, _>>()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect::<Result<Vec<Vec<Row>>, _>>()
    })?
    .into_iter()
    .flatten()
    .collect();
    rows.sort_by(|a, b| {
        (a.n, a.alpha.components(), a.beta.components(), a.kind).cmp(&(
            b.n,
            b.alpha.components(),
            b.beta.components(),
            b.kind,
        ))
    });
    if cfg.inject_fault {
        if let Some(r) = rows.iter_mut().find(|r| r.kind == RowKind::Pair) {
            r.formula = r.formula.map(|f| f + 1);
            r.pass = Some(false);
        }
    }
    let mut summary = Summary::default();
    for r in &rows {
        match r.pass {
            Some(true) => {
                summary.checked += 1;
                summary.passed += 1;
            }
            Some(false) => {
                summary.checked += 1;
                summary.failed += 1;
            }
            None => {
                summary.controls += 1;
                if r.agree == Some(false) {
                    summary.controls_disagreeing += 1;
                }
            }
        }
    }
    Ok(VerifyReport { rows, summary })
}

/// Plain-text table, one row per line.
pub fn render_text(report: &VerifyReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<3} {:<8} {:<16} {:<16} {:<12} {:>2} {:>3} {:>7} {:>5} {:>7} {:>3}  result",
        "n", "kind", "alpha", "beta", "class", "m", "lam", "formula", "plane", "annulus", "ext"
    );
    for r in &report.rows {
        let kind = match r.kind {
            RowKind::Pair => "pair",
            RowKind::SelfIntersection => "self",
            RowKind::Control => "control",
        };
        let opt = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        let result = match (r.pass, r.agree) {
            (Some(true), _) => "pass",
            (Some(false), _) => "FAIL",
            (None, Some(true)) => "agree",
            (None, _) => "differ",
        };
        let _ = writeln!(
            out,
            "{:<3} {:<8} {:<16} {:<16} {:<12} {:>2} {:>3} {:>7} {:>5} {:>7} {:>3}  {}",
            r.n,
            kind,
            r.alpha.to_string(),
            r.beta.to_string(),
            r.class_a,
            r.m,
            opt(r.lambda),
            opt(r.formula),
            r.plane,
            r.annulus,
            r.ext,
            result
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "checked {} passed {} failed {} controls {} (differing {})",
        s.checked, s.passed, s.failed, s.controls, s.controls_disagreeing
    );
    out
}
