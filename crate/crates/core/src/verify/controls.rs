//! Negative controls: shift one exponent of one closed form by `±1` and make
//! sure some comparison against an independent reference notices.
//!
//! A comparison is relevant to a site when the exact formula reads it. A
//! perturbation counts as caught when a relevant comparison diverges at
//! `Q`-degree at most the control degree, or when the perturbed formula can
//! no longer be built (for instance a factor `1 - Q^0`).

use std::collections::BTreeSet;
use std::time::Instant;

use super::{oracles, printed, CheckReport, FirstDivergence, Status};
use crate::closed_forms::{Formulas, SITES};
use crate::error::Result;
use crate::series::{LaurentPoly, QSeries};

pub const DEFAULT_DEGREE: usize = 10;

type Build = Box<dyn Fn(&Formulas) -> Result<QSeries>>;

/// A closed form paired with a reference that does not depend on it.
pub struct Probe {
    pub name: String,
    build: Build,
    reference: QSeries,
    sites: BTreeSet<&'static str>,
}

impl Probe {
    fn new(name: impl Into<String>, reference: QSeries, build: Build) -> Result<Self> {
        let f = Formulas::exact();
        build(&f)?;
        Ok(Probe { name: name.into(), build, reference, sites: f.sites_read() })
    }

    pub fn sites(&self) -> &BTreeSet<&'static str> {
        &self.sites
    }

    /// The exact formula's first divergence from the reference, if any.
    pub fn exact_divergence(&self) -> Result<Option<crate::series::Divergence>> {
        Ok(self.reference.first_divergence(&(self.build)(&Formulas::exact())?))
    }
}

/// All probes at degree `n`.
pub fn probes(n: usize) -> Result<Vec<Probe>> {
    let budget = oracles::Budget::unlimited();
    let vertical = |u, v| oracles::vertical_series(u, v, n, &budget);
    let diagonal = |rows| oracles::diagonal_series(rows, n, &budget);
    let mut out = vec![Probe::new("nodal", vertical(1, 1)?, Box::new(move |f| Ok(f.nodal_reduced()?.to_series(n))))?];
    for k in 1..=3i64 {
        out.push(Probe::new(
            format!("fat_line_k{k}"),
            oracles::bounded_series(k as u32, n),
            Box::new(move |f| Ok(f.fat_line(k, false)?.to_series(n))),
        )?);
    }
    for v in 1..=3i64 {
        out.push(Probe::new(format!("xyv_v{v}"), vertical(1, v as u32)?, Box::new(move |f| Ok(f.xyv(v)?.to_series(n))))?);
        out.push(Probe::new(
            format!("ors_xyv_v{v}"),
            oracles::kr_hopf_substituted(v as u32, n)?,
            Box::new(move |f| Ok(f.xyv(v)?.to_series(n))),
        )?);
        out.push(Probe::new(
            format!("hopf_closed_v{v}"),
            oracles::kr_hopf_substituted(v as u32, n)?,
            Box::new(move |f| Ok(f.hopf_closed(v)?.substitute_t()?.to_series(n))),
        )?);
        out.push(Probe::new(format!("x2yv_v{v}"), vertical(2, v as u32)?, Box::new(move |f| Ok(f.x2yv(v)?.to_series(n))))?);
        out.push(Probe::new(
            format!("xvyv_v{v}"),
            diagonal(Some(v as usize))?,
            Box::new(move |f| Ok(f.xvyv(v)?.to_series(n))),
        )?);
    }
    let plane = diagonal(None)?;
    let kmax = n.div_ceil(2).max(1) as i64;
    out.push(Probe::new("plane", plane.clone(), Box::new(move |f| Ok(f.plane(n.max(1) as i64)?.to_series(n))))?);
    out.push(Probe::new("durfee", plane, Box::new(move |f| Ok(f.durfee_lhs(kmax)?.to_series(n))))?);
    out.push(Probe::new("xvm1yv_v2", vertical(1, 2)?, Box::new(move |f| Ok(f.xvm1yv(2)?.to_series(n))))?);
    out.push(Probe::new("xvm1yv_v3", vertical(2, 3)?, Box::new(move |f| Ok(f.xvm1yv(3)?.to_series(n))))?);
    out.push(Probe::new("xvm2yv_v3", vertical(1, 3)?, Box::new(move |f| Ok(f.xvm2yv(3)?.to_series(n))))?);
    out.push(Probe::new("xvm2yv_v4", vertical(2, 4)?, Box::new(move |f| Ok(f.xvm2yv(4)?.to_series(n))))?);
    let golden: LaurentPoly = printed::GOLDEN_X3Y3_TOTAL_10.parse()?;
    out.push(Probe::new(
        "appendix_golden",
        QSeries::from_poly(&golden, 10),
        Box::new(|f| Ok(QSeries::from_poly(&f.xvyv(3)?.to_series(10).truncate_total_degree(10), 10))),
    )?);
    Ok(out)
}

fn label(site: &str, delta: i64) -> String {
    format!("negative_control_{site}_{delta:+}")
}

/// Applies one perturbation to every relevant probe.
pub fn run_tweak(probes: &[Probe], site: &'static str, delta: i64, degree: usize) -> CheckReport {
    let start = Instant::now();
    let mut divergence = None;
    let mut rejected = None;
    let relevant: Vec<&Probe> = probes.iter().filter(|p| p.sites.contains(site)).collect();
    for p in &relevant {
        match (p.build)(&Formulas::tweaked(site, delta)) {
            Err(e) => {
                rejected.get_or_insert_with(|| format!("rejected by {}: {e}", p.name));
            }
            Ok(s) => {
                if let Some(d) = p.reference.first_divergence(&s).filter(|d| d.degree <= degree) {
                    divergence = Some((p.name.clone(), d));
                    break;
                }
            }
        }
    }
    let (status, first_divergence, detail) = match (divergence, rejected) {
        (Some((name, d)), _) => (Status::Pass, Some(FirstDivergence::from(d)), Some(format!("caught by {name}"))),
        (None, Some(msg)) => (Status::Pass, None, Some(msg)),
        (None, None) if relevant.is_empty() => (Status::Fail, None, Some("no comparison reads this site".into())),
        (None, None) => (Status::Fail, None, Some(format!("undetected up to Q^{degree}"))),
    };
    CheckReport {
        name: label(site, delta),
        status,
        first_divergence,
        detail,
        degree_checked: Some(degree),
        runtime_ms: start.elapsed().as_millis() as u64,
    }
}

/// Every site shifted by `+1` and by `-1`.
pub fn run_negative_controls(degree: usize) -> Vec<CheckReport> {
    let probes = match probes(degree) {
        Ok(p) => p,
        Err(e) => return vec![super::run("negative_controls", || Err(e))],
    };
    SITES
        .iter()
        .flat_map(|&site| [1, -1].map(|delta| run_tweak(&probes, site, delta, degree)))
        .collect()
}
