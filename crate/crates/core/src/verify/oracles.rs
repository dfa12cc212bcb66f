//! Reference series computed without the closed forms.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::kr;
use crate::partitions::{bounded, diagonal, vertical};
use crate::series::{LaurentPoly, Monomial, QSeries};

/// Optional wall-clock cap on oracle enumerations.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn from_ms(ms: Option<u64>) -> Self {
        Budget { deadline: ms.map(|ms| Instant::now() + Duration::from_millis(ms)) }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Builds a series from its degree-`n` parts, stopping early when the
/// budget runs out. The result is truncated at the last completed degree.
fn by_degree<F>(nmax: usize, budget: &Budget, mut coeff: F) -> Result<QSeries>
where
    F: FnMut(u32) -> Result<LaurentPoly>,
{
    let mut coeffs = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        if n > 0 && budget.expired() {
            break;
        }
        coeffs.push(coeff(n as u32)?);
    }
    let reached = coeffs.len() - 1;
    let total = coeffs.iter().fold(LaurentPoly::zero(), |acc, c| &acc + c);
    Ok(QSeries::from_poly(&total, reached))
}

/// `sum Q^n T^(2 dim)` over vertical strata of `x^u y^v`.
pub fn vertical_series(u: u32, v: u32, nmax: usize, budget: &Budget) -> Result<QSeries> {
    by_degree(nmax, budget, |n| {
        Ok(vertical::enumerate(n, u, v)?
            .iter()
            .fold(LaurentPoly::zero(), |acc, (s, _)| &acc + &s.contribution()))
    })
}

/// Weak diagonal partition aggregate with at most `rows` rows, or with no
/// row limit for `None`.
pub fn diagonal_series(rows: Option<usize>, nmax: usize, budget: &Budget) -> Result<QSeries> {
    by_degree(nmax, budget, |n| {
        Ok(diagonal::aggregate(n, rows.unwrap_or(n as usize)))
    })
}

/// `sum Q^|λ| T^(|λ| - len λ)` over partitions with parts at most `k`.
pub fn bounded_series(k: u32, nmax: usize) -> QSeries {
    bounded::bounded_partitions_series(k, nmax)
}

/// Partition numbers `p(0), ..., p(nmax)` by direct enumeration.
pub fn partition_counts(nmax: usize) -> QSeries {
    let total = (0..=nmax as u32).fold(LaurentPoly::zero(), |acc, n| {
        let count = bounded::partitions(n, n.max(1)).len() as i64;
        &acc + &LaurentPoly::term(Monomial::new(n, 0, 0), count)
    });
    QSeries::from_poly(&total, nmax)
}

/// The recursion's Hopf series, normalized and moved to Hilbert-scheme
/// variables.
pub fn kr_hopf_substituted(v: u32, nmax: usize) -> Result<QSeries> {
    kr::hopf_series(v, nmax)?.substitute_t()
}
