//! Identity and oracle checks tying the modules together.
//!
//! Each check compares a series built from the closed forms with a reference
//! built some other way (enumeration, the link recursion, printed values)
//! and reports the first `Q`-degree where they differ.

pub mod controls;
pub mod oracles;
pub mod printed;

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::closed_forms as cf;
use crate::error::Result;
use crate::series::{Divergence, LaurentPoly, QSeries};

pub use oracles::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstDivergence {
    pub degree: usize,
    pub expected: String,
    pub actual: String,
}

impl From<Divergence> for FirstDivergence {
    fn from(d: Divergence) -> Self {
        FirstDivergence { degree: d.degree, expected: d.left.to_string(), actual: d.right.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_divergence: Option<FirstDivergence>,
    /// Construction errors, and how a negative control was caught.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Highest `Q`-degree compared, when a budget may have cut it short.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_checked: Option<usize>,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// What a comparison found.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub divergence: Option<Divergence>,
    pub degree_checked: Option<usize>,
}

impl Outcome {
    /// Compares `expected` and `actual` on their common truncation.
    pub fn compare(expected: &QSeries, actual: &QSeries) -> Self {
        let n = expected.nmax().min(actual.nmax());
        Outcome { divergence: expected.truncate(n).first_divergence(&actual.truncate(n)), degree_checked: None }
    }

    /// Like [`Outcome::compare`], recording the degree reached.
    pub fn compare_reached(expected: &QSeries, actual: &QSeries) -> Self {
        let mut o = Outcome::compare(expected, actual);
        o.degree_checked = Some(expected.nmax().min(actual.nmax()));
        o
    }

    /// Keeps the first failure of two outcomes.
    pub fn and(self, other: Outcome) -> Self {
        if self.divergence.is_some() {
            self
        } else {
            Outcome { degree_checked: self.degree_checked.or(other.degree_checked), ..other }
        }
    }
}

/// Runs a comparison, timing it and folding errors into a failed report.
pub fn run(name: impl Into<String>, body: impl FnOnce() -> Result<Outcome>) -> CheckReport {
    let start = Instant::now();
    let result = body();
    let runtime_ms = start.elapsed().as_millis() as u64;
    let name = name.into();
    match result {
        Ok(o) => CheckReport {
            name,
            status: if o.divergence.is_none() { Status::Pass } else { Status::Fail },
            first_divergence: o.divergence.map(Into::into),
            detail: None,
            degree_checked: o.degree_checked,
            runtime_ms,
        },
        Err(e) => CheckReport {
            name,
            status: Status::Fail,
            first_divergence: None,
            detail: Some(e.to_string()),
            degree_checked: None,
            runtime_ms,
        },
    }
}

/// `cf_xyv(v)` against the substituted Hopf closed form and against the
/// substituted, normalized link recursion.
pub fn check_ors_xyv(v: u32, nmax: usize) -> CheckReport {
    run(format!("ors_xyv_v{v}"), || {
        let series = cf::cf_xyv(v as i64)?.to_series(nmax);
        let closed = cf::cf_hopf_closed(v as i64)?.substitute_t()?.to_series(nmax);
        let recursion = oracles::kr_hopf_substituted(v, nmax)?;
        Ok(Outcome::compare(&closed, &series).and(Outcome::compare(&recursion, &series)))
    })
}

/// `cf_durfee_lhs(kmax)` against `cf_plane(nmax)` to `Q^nmax`.
pub fn check_durfee(kmax: u32, nmax: usize) -> CheckReport {
    run(format!("durfee_k{kmax}_n{nmax}"), || {
        let plane = cf::cf_plane(nmax.max(1) as i64)?.to_series(nmax);
        let lhs = cf::cf_durfee_lhs(kmax as i64)?.to_series(nmax);
        Ok(Outcome::compare(&plane, &lhs))
    })
}

/// Both Durfee sides at `T = 1` against enumerated partition numbers.
pub fn check_durfee_counts(kmax: u32, nmax: usize) -> CheckReport {
    run(format!("durfee_counts_k{kmax}_n{nmax}"), || {
        let counts = oracles::partition_counts(nmax);
        let plane = cf::cf_plane(nmax.max(1) as i64)?.specialize_t_one()?.to_series(nmax);
        let lhs = cf::cf_durfee_lhs(kmax as i64)?.to_series(nmax).specialize_t(1)?;
        Ok(Outcome::compare(&counts, &plane).and(Outcome::compare(&counts, &lhs)))
    })
}

/// `cf_xvyv(v)` minus `cf_plane(nmax)` vanishes to `Q^min(nmax, 2v)`.
pub fn check_plane_agreement(v: u32, nmax: usize) -> CheckReport {
    run(format!("plane_agreement_v{v}_n{nmax}"), || {
        let n = nmax.min(2 * v as usize);
        let plane = cf::cf_plane(nmax.max(1) as i64)?.to_series(n);
        let diagonal = cf::cf_xvyv(v as i64)?.to_series(n);
        let difference = diagonal.sub(&plane);
        Ok(Outcome::compare_reached(&QSeries::zero(n), &difference))
    })
}

/// The printed total-degree-10 expansion of `x^3 y^3`.
pub fn check_appendix_golden() -> CheckReport {
    run("appendix_golden", || {
        let printed: LaurentPoly = printed::GOLDEN_X3Y3_TOTAL_10.parse()?;
        let computed = cf::cf_xvyv(3)?.to_series(10).truncate_total_degree(10);
        let rational = printed_rational(2)?;
        Ok(compare_polys(&printed, &computed).and(rational))
    })
}

fn printed_rational(v: i64) -> Result<Outcome> {
    let &(_, num, den) = printed::XVYV_DISPLAYS
        .iter()
        .find(|d| d.0 == v)
        .ok_or_else(|| crate::Error::Domain(format!("no printed display for v={v}")))?;
    let r = cf::cf_xvyv(v)?;
    let (num, den): (LaurentPoly, LaurentPoly) = (num.parse()?, den.parse()?);
    Ok(compare_polys(&num, r.numerator()).and(compare_polys(&den, &r.expanded_denominator())))
}

/// Compares two polynomials degree by degree in `Q`.
fn compare_polys(expected: &LaurentPoly, actual: &LaurentPoly) -> Outcome {
    let n = expected.max_q().max(actual.max_q()).unwrap_or(0) as usize;
    Outcome::compare(&QSeries::from_poly(expected, n), &QSeries::from_poly(actual, n))
}

/// `cf_xvyv(v)` as a rational function against its printed numerator and
/// expanded denominator.
pub fn check_printed_rational(v: u32) -> CheckReport {
    run(format!("printed_rational_v{v}"), || printed_rational(v as i64))
}

/// Weak diagonal enumeration with at most `v` rows against `cf_xvyv(v)`,
/// or with unrestricted rows against `cf_plane` when `v` is `None`.
pub fn check_wdp_oracle(v: Option<u32>, nmax: usize, budget: &Budget) -> CheckReport {
    let name = match v {
        Some(v) => format!("wdp_oracle_v{v}_n{nmax}"),
        None => format!("wdp_oracle_plane_n{nmax}"),
    };
    run(name, || {
        let oracle = oracles::diagonal_series(v.map(|v| v as usize), nmax, budget)?;
        let formula = match v {
            Some(v) => cf::cf_xvyv(v as i64)?,
            None => cf::cf_plane(nmax.max(1) as i64)?,
        };
        Ok(Outcome::compare_reached(&oracle, &formula.to_series(oracle.nmax())))
    })
}

/// Vertical enumeration against `cf_xyv(v)` (`u = 1`) or `cf_x2yv(v)` (`u = 2`).
pub fn check_vertical_oracle(u: u32, v: u32, nmax: usize, budget: &Budget) -> CheckReport {
    run(format!("vertical_oracle_u{u}_v{v}_n{nmax}"), || {
        let oracle = oracles::vertical_series(u, v, nmax, budget)?;
        let formula = match u {
            1 => cf::cf_xyv(v as i64)?,
            _ => cf::cf_x2yv(v as i64)?,
        };
        Ok(Outcome::compare_reached(&oracle, &formula.to_series(oracle.nmax())))
    })
}

/// `cf_fat_line(k)` against partitions with parts at most `k`.
pub fn check_fat_line(k: u32, nmax: usize) -> CheckReport {
    run(format!("fat_line_k{k}_n{nmax}"), || {
        Ok(Outcome::compare(&oracles::bounded_series(k, nmax), &cf::cf_fat_line(k as i64, false)?.to_series(nmax)))
    })
}

/// Curves covered by two formulas give the same series.
pub fn check_overlaps(nmax: usize) -> Vec<CheckReport> {
    type Build = fn() -> Result<crate::series::FactoredRational>;
    let pairs: [(&str, Build, Build); 7] = [
        ("overlap_xvyv1_xyv1", || cf::cf_xvyv(1), || cf::cf_xyv(1)),
        ("overlap_xyv1_nodal", || cf::cf_xyv(1), || Ok(cf::cf_nodal_reduced())),
        ("overlap_x2yv2_xvyv2", || cf::cf_x2yv(2), || cf::cf_xvyv(2)),
        ("overlap_xvm1yv2_xyv2", || cf::cf_xvm1yv(2), || cf::cf_xyv(2)),
        ("overlap_xvm1yv3_x2yv3", || cf::cf_xvm1yv(3), || cf::cf_x2yv(3)),
        ("overlap_xvm2yv3_xyv3", || cf::cf_xvm2yv(3), || cf::cf_xyv(3)),
        ("overlap_xvm2yv4_x2yv4", || cf::cf_xvm2yv(4), || cf::cf_x2yv(4)),
    ];
    pairs
        .iter()
        .map(|(name, left, right)| {
            run(*name, || Ok(Outcome::compare(&right()?.to_series(nmax), &left()?.to_series(nmax))))
        })
        .collect()
}

/// Parameters shared by the named suites; `None` picks the default.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteParams {
    pub u: Option<u32>,
    pub v: Option<u32>,
    pub nmax: Option<usize>,
    pub kmax: Option<u32>,
    pub budget_ms: Option<u64>,
}

pub const SUITES: &[&str] = &[
    "appendix_golden",
    "durfee",
    "fat_line",
    "negative_controls",
    "ors_xyv",
    "overlaps",
    "plane_agreement",
    "printed_rational",
    "vertical_oracle",
    "wdp_oracle",
];

/// Runs a named suite, or every suite for `"all"`. Unknown names give `None`.
pub fn run_suite(name: &str, p: &SuiteParams) -> Option<Vec<CheckReport>> {
    let budget = Budget::from_ms(p.budget_ms);
    let vs = |default: std::ops::RangeInclusive<u32>| match p.v {
        Some(v) => vec![v],
        None => default.collect(),
    };
    let reports = match name {
        "all" => {
            return Some(SUITES.iter().flat_map(|s| run_suite(s, p).unwrap_or_default()).collect());
        }
        "appendix_golden" => vec![check_appendix_golden()],
        "printed_rational" => vs(2..=4).into_iter().map(check_printed_rational).collect(),
        "ors_xyv" => vs(1..=6).into_iter().map(|v| check_ors_xyv(v, p.nmax.unwrap_or(20))).collect(),
        "durfee" => {
            let (k, n) = (p.kmax.unwrap_or(12), p.nmax.unwrap_or(24));
            vec![check_durfee(k, n), check_durfee_counts(k, n)]
        }
        "plane_agreement" => vec![check_plane_agreement(p.v.unwrap_or(10), p.nmax.unwrap_or(20))],
        "fat_line" => (1..=4).map(|k| check_fat_line(k, p.nmax.unwrap_or(12))).collect(),
        "wdp_oracle" => {
            let n = p.nmax.unwrap_or(12);
            let mut r: Vec<_> = vs(1..=4).into_iter().map(|v| check_wdp_oracle(Some(v), n, &budget)).collect();
            if p.v.is_none() {
                r.push(check_wdp_oracle(None, n, &budget));
            }
            r
        }
        "vertical_oracle" => {
            let n = p.nmax.unwrap_or(14);
            let pairs: Vec<(u32, u32)> = match (p.u, p.v) {
                (Some(u), Some(v)) => vec![(u, v)],
                (Some(u), None) => (1..=if u == 1 { 4 } else { 3 }).map(|v| (u, v)).collect(),
                (None, Some(v)) => vec![(1, v), (2, v)],
                (None, None) => (1..=4).map(|v| (1, v)).chain((1..=3).map(|v| (2, v))).collect(),
            };
            pairs
                .into_iter()
                .map(|(u, v)| {
                    if (1..=2).contains(&u) {
                        check_vertical_oracle(u, v, n, &budget)
                    } else {
                        run(format!("vertical_oracle_u{u}_v{v}_n{n}"), || {
                            Err(crate::Error::UnsupportedCurve { u: u as i64, v: v as i64 })
                        })
                    }
                })
                .collect()
        }
        "overlaps" => check_overlaps(p.nmax.unwrap_or(20)),
        "negative_controls" => controls::run_negative_controls(controls::DEFAULT_DEGREE),
        _ => return None,
    };
    Some(reports)
}
