//! Vertical strata of `Hilb^n(x^u y^v = 0)` for `u` in {1, 2}.
//!
//! A stratum is a partition `(i_0, ..., i_N)` read as row lengths from the
//! bottom row `k = 0` up, with `i_k <= u` for every `k >= v`.

use std::fmt;

use crate::error::{Error, Result};
use crate::series::{LaurentPoly, Monomial, QSeries};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerticalStratum {
    pub parts: Vec<u32>,
    pub u: u32,
    pub v: u32,
}

impl VerticalStratum {
    pub fn new(parts: Vec<u32>, u: u32, v: u32) -> Result<Self> {
        check_curve(u, v)?;
        let s = VerticalStratum { parts, u, v };
        if !s.is_valid() {
            return Err(Error::Domain(format!("{s} is not a vertical stratum for x^{u}y^{v}")));
        }
        Ok(s)
    }

    pub fn is_valid(&self) -> bool {
        self.parts.iter().all(|&p| p >= 1)
            && self.parts.windows(2).all(|w| w[0] >= w[1])
            && self.parts.iter().skip(self.v as usize).all(|&p| p <= self.u)
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Complex dimension of the stratum.
    ///
    /// Rows `1..=v` always count. For `u = 2`, rows `M..=N` of length one
    /// (with `M >= v` the least such start) add the rows strictly above
    /// `floor((M + N) / 2)`.
    pub fn dimension(&self) -> u32 {
        let rows = &self.parts;
        let v = self.v as usize;
        let base: u32 = rows.iter().skip(1).take(v).sum();
        if self.u == 1 || rows.len() <= v {
            return base;
        }
        let last = rows.len() - 1;
        if rows[last] != 1 {
            return base;
        }
        let mut start = last;
        while start > v && rows[start - 1] == 1 {
            start -= 1;
        }
        let from = (start + last) / 2 + 1;
        base + rows[from..=last].iter().sum::<u32>()
    }

    pub fn contribution(&self) -> LaurentPoly {
        LaurentPoly::term(Monomial::new(self.size(), 2 * self.dimension() as i32, 0), 1)
    }
}

impl fmt::Display for VerticalStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn check_curve(u: u32, v: u32) -> Result<()> {
    if !(1..=2).contains(&u) {
        return Err(Error::UnsupportedCurve { u: u as i64, v: v as i64 });
    }
    if v < 1 {
        return Err(Error::Domain("v must be at least 1".into()));
    }
    Ok(())
}

/// Every vertical stratum of `n` points with its dimension.
pub fn enumerate(n: u32, u: u32, v: u32) -> Result<Vec<(VerticalStratum, u32)>> {
    check_curve(u, v)?;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    fill(n, n, u, v, &mut parts, &mut out);
    Ok(out)
}

fn fill(remaining: u32, cap: u32, u: u32, v: u32, parts: &mut Vec<u32>, out: &mut Vec<(VerticalStratum, u32)>) {
    if remaining == 0 {
        let s = VerticalStratum { parts: parts.clone(), u, v };
        let d = s.dimension();
        out.push((s, d));
        return;
    }
    let bound = if parts.len() >= v as usize { cap.min(u) } else { cap };
    for part in (1..=bound.min(remaining)).rev() {
        parts.push(part);
        fill(remaining - part, part, u, v, parts, out);
        parts.pop();
    }
}

/// `sum Q^n T^(2 dim)` over all strata with `n <= nmax`.
pub fn series(u: u32, v: u32, nmax: usize) -> Result<QSeries> {
    let mut total = LaurentPoly::zero();
    for n in 0..=nmax as u32 {
        for (s, _) in enumerate(n, u, v)? {
            total += &s.contribution();
        }
    }
    Ok(QSeries::from_poly(&total, nmax))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_on_the_node() {
        let strata = enumerate(2, 1, 1).unwrap();
        let got: Vec<(Vec<u32>, u32)> = strata.into_iter().map(|(s, d)| (s.parts, d)).collect();
        assert_eq!(got, vec![(vec![2], 0), (vec![1, 1], 1)]);
    }

    #[test]
    fn empty_stratum() {
        let strata = enumerate(0, 2, 3).unwrap();
        assert_eq!(strata.len(), 1);
        assert!(strata[0].0.parts.is_empty());
        assert_eq!(strata[0].1, 0);
    }

    #[test]
    fn unsupported_u() {
        assert!(matches!(enumerate(3, 3, 3), Err(Error::UnsupportedCurve { .. })));
        assert!(matches!(enumerate(3, 0, 3), Err(Error::UnsupportedCurve { .. })));
    }

    #[test]
    fn bound_above_row_v() {
        // On x y^2 the rows k >= 2 have length at most one.
        for (s, _) in enumerate(8, 1, 2).unwrap() {
            assert!(s.parts.iter().skip(2).all(|&p| p <= 1), "{s}");
        }
        assert!(VerticalStratum::new(vec![2, 2, 2], 1, 2).is_err());
        assert!(VerticalStratum::new(vec![2, 2, 1], 1, 2).is_ok());
    }

    #[test]
    fn u2_dimension_rule() {
        let dim = |parts: &[u32], v| VerticalStratum::new(parts.to_vec(), 2, v).unwrap().dimension();
        // Rows v.. all length 2: only the first summand.
        assert_eq!(dim(&[3, 2, 2, 2], 1), 2);
        // Column tail 1,1,1 above row v = 1 with N = 3, M = 1: rows 3..=3.
        assert_eq!(dim(&[2, 1, 1, 1], 1), 1 + 1);
        // Tail starts at M = 3 > v = 1 and ends at N = 4: rows 4..=4.
        assert_eq!(dim(&[3, 2, 2, 1, 1], 1), 2 + 1);
        // Fewer than v + 1 rows.
        assert_eq!(dim(&[1, 1], 3), 1);
    }
}
