//! JSON shapes for polynomials and series.
//!
//! Polynomial: `{"terms":[[q,t,a,"coeff"],...]}`.
//! Series: `{"nmax":N,"coeffs":[[n,[[t,"coeff"],...]],...]}`, where an entry
//! carrying a power of `a` is written `[t,a,"coeff"]`. Coefficients are
//! decimal strings and terms are in ascending (`q`, `t`, `a`) order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::laurent::{LaurentPoly, Monomial};
use crate::series::qseries::QSeries;

#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<(u32, i32, u32, String)>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesTerm {
    Plain(i32, String),
    WithA(i32, u32, String),
}

#[derive(Serialize, Deserialize)]
pub struct SeriesJson {
    pub nmax: usize,
    pub coeffs: Vec<(usize, Vec<SeriesTerm>)>,
}

fn parse_coeff(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson { terms: p.terms().map(|(m, c)| (m.q, m.t, m.a, c.to_string())).collect() }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: PolyJson) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for (q, t, a, c) in j.terms {
            p.add_term(Monomial::new(q, t, a), parse_coeff(&c)?);
        }
        Ok(p)
    }
}

impl From<&QSeries> for SeriesJson {
    fn from(s: &QSeries) -> Self {
        let coeffs = s
            .coeffs()
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let terms = c
                    .terms()
                    .map(|(m, x)| match m.a {
                        0 => SeriesTerm::Plain(m.t, x.to_string()),
                        a => SeriesTerm::WithA(m.t, a, x.to_string()),
                    })
                    .collect();
                (n, terms)
            })
            .collect();
        SeriesJson { nmax: s.nmax(), coeffs }
    }
}

impl TryFrom<SeriesJson> for QSeries {
    type Error = Error;
    fn try_from(j: SeriesJson) -> Result<Self> {
        let mut coeffs = vec![LaurentPoly::zero(); j.nmax + 1];
        for (n, terms) in j.coeffs {
            let slot = coeffs
                .get_mut(n)
                .ok_or_else(|| Error::Parse(format!("coefficient index {n} exceeds nmax {}", j.nmax)))?;
            for term in terms {
                let (t, a, c) = match term {
                    SeriesTerm::Plain(t, c) => (t, 0, c),
                    SeriesTerm::WithA(t, a, c) => (t, a, c),
                };
                slot.add_term(Monomial::new(0, t, a), parse_coeff(&c)?);
            }
        }
        QSeries::from_coeffs(coeffs)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<LaurentPoly> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.try_into()
}

pub fn series_to_json(s: &QSeries) -> String {
    serde_json::to_string(&SeriesJson::from(s)).expect("serializable")
}

pub fn series_from_json(s: &str) -> Result<QSeries> {
    let j: SeriesJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.try_into()
}
