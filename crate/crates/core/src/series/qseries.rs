use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::laurent::{LaurentPoly, Monomial};

/// A power series in `Q` known up to and including `Q^nmax`.
///
/// Coefficient `n` is a polynomial in `T` (Laurent) and `a` whose monomials
/// all have `q = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    nmax: usize,
    coeffs: Vec<LaurentPoly>,
}

/// First Q-degree where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    pub degree: usize,
    pub left: LaurentPoly,
    pub right: LaurentPoly,
}

impl QSeries {
    pub fn zero(nmax: usize) -> Self {
        QSeries { nmax, coeffs: vec![LaurentPoly::zero(); nmax + 1] }
    }

    pub fn one(nmax: usize) -> Self {
        QSeries::from_poly(&LaurentPoly::one(), nmax)
    }

    /// Truncation of a polynomial at `Q^nmax`.
    pub fn from_poly(p: &LaurentPoly, nmax: usize) -> Self {
        let mut s = QSeries::zero(nmax);
        for (q, c) in p.split_by_q() {
            if (q as usize) <= nmax {
                s.coeffs[q as usize] = c;
            }
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("a series needs at least the Q^0 coefficient".into()));
        }
        if coeffs.iter().any(|c| c.terms().any(|(m, _)| m.q != 0)) {
            return Err(Error::Domain("series coefficients must not contain Q".into()));
        }
        Ok(QSeries { nmax: coeffs.len() - 1, coeffs })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    /// The truncated series as a polynomial in `Q`, `T`, `a`.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (n, c) in self.coeffs.iter().enumerate() {
            out += &c.shift(Monomial::new(n as u32, 0, 0));
        }
        out
    }

    pub fn truncate(&self, nmax: usize) -> Self {
        let nmax = nmax.min(self.nmax);
        QSeries { nmax, coeffs: self.coeffs[..=nmax].to_vec() }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let nmax = self.nmax.min(other.nmax);
        QSeries { nmax, coeffs: (0..=nmax).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect() }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let nmax = self.nmax.min(other.nmax);
        QSeries { nmax, coeffs: (0..=nmax).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect() }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let nmax = self.nmax.min(other.nmax);
        let mut out = QSeries::zero(nmax);
        for i in 0..=nmax {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=nmax - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] += &prod;
            }
        }
        out
    }

    /// Multiplies every coefficient by a `Q`-free polynomial.
    pub fn scale(&self, c: &LaurentPoly) -> QSeries {
        QSeries { nmax: self.nmax, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `Q^k`, dropping what falls past the truncation.
    pub fn shift_q(&self, k: usize) -> QSeries {
        let mut out = QSeries::zero(self.nmax);
        for n in k..=self.nmax {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Multiplies in place by `1/(1 - Q^alpha T^beta) = sum_j Q^(alpha j) T^(beta j)`.
    pub fn mul_geometric(&mut self, alpha: u32, beta: i32) -> Result<()> {
        if alpha == 0 {
            return Err(Error::NonExpandableFactor { alpha: 0, beta: beta as i64 });
        }
        let step = alpha as usize;
        let shift = Monomial::new(0, beta, 0);
        for n in step..=self.nmax {
            if self.coeffs[n - step].is_zero() {
                continue;
            }
            let carried = self.coeffs[n - step].shift(shift);
            self.coeffs[n] += &carried;
        }
        Ok(())
    }

    /// Multiplies in place by the polynomial `1 - Q^alpha T^beta`.
    pub fn mul_one_minus(&mut self, alpha: u32, beta: i32) {
        let step = alpha as usize;
        let shift = Monomial::new(0, beta, 0);
        if step == 0 {
            for c in &mut self.coeffs {
                let s = c.shift(shift);
                *c -= &s;
            }
            return;
        }
        for n in (step..=self.nmax).rev() {
            let carried = self.coeffs[n - step].shift(shift);
            self.coeffs[n] -= &carried;
        }
    }

    pub fn specialize_t(&self, value: u8) -> Result<QSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.specialize_t(value)).collect::<Result<_>>()?;
        Ok(QSeries { nmax: self.nmax, coeffs })
    }

    pub fn specialize_a(&self, value: u8) -> Result<QSeries> {
        let coeffs = self.coeffs.iter().map(|c| c.specialize_a(value)).collect::<Result<_>>()?;
        Ok(QSeries { nmax: self.nmax, coeffs })
    }

    /// Divides every coefficient by `T^k`.
    pub fn div_t_power(&self, k: i32) -> QSeries {
        let shift = Monomial::new(0, -k, 0);
        QSeries { nmax: self.nmax, coeffs: self.coeffs.iter().map(|c| c.shift(shift)).collect() }
    }

    /// Applies `Q^x T^y -> Q^(x-y) T^(-2y)` to a series.
    ///
    /// Only defined when every `T` exponent is `<= 0`: then image degrees
    /// never drop below source degrees, so the image is exact to the same
    /// truncation.
    pub fn substitute_t(&self) -> Result<QSeries> {
        let mut out = QSeries::zero(self.nmax);
        for (x, c) in self.coeffs.iter().enumerate() {
            for (m, coef) in c.terms() {
                if m.t > 0 {
                    return Err(Error::SubstitutionDomain(format!(
                        "series term Q^{x}T^{} has positive T exponent",
                        m.t
                    )));
                }
                let degree = x + (-m.t) as usize;
                if degree <= self.nmax {
                    out.coeffs[degree].add_term(Monomial::new(0, -2 * m.t, m.a), coef.clone());
                }
            }
        }
        Ok(out)
    }

    /// Terms of total degree (in `Q` and `T`) at most `max`, as a polynomial.
    ///
    /// Exact only when `nmax >= max` and no coefficient has negative `T`
    /// exponents.
    pub fn truncate_total_degree(&self, max: i64) -> LaurentPoly {
        self.to_poly().truncate_total_degree(max)
    }

    /// Series whose coefficients are all filtered to total degree `<= max`.
    pub fn total_degree_series(&self, max: i64) -> QSeries {
        QSeries::from_poly(&self.truncate_total_degree(max), self.nmax)
    }

    /// Compares up to the smaller truncation; `None` when they agree.
    pub fn first_divergence(&self, other: &QSeries) -> Option<Divergence> {
        let nmax = self.nmax.min(other.nmax);
        (0..=nmax).find(|&n| self.coeffs[n] != other.coeffs[n]).map(|n| Divergence {
            degree: n,
            left: self.coeffs[n].clone(),
            right: other.coeffs[n].clone(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_nonnegative)
    }

    /// Sum of all integer coefficients of `Q^n`.
    pub fn count_at(&self, n: usize) -> num_bigint::BigInt {
        self.coeffs[n].terms().fold(num_bigint::BigInt::zero(), |acc, (_, c)| acc + c)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(Q^{})", self.to_poly(), self.nmax + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_series() {
        let mut s = QSeries::one(4);
        s.mul_geometric(1, 0).unwrap();
        assert_eq!(s.to_poly(), p("1+Q+Q^2+Q^3+Q^4"));
    }

    #[test]
    fn one_minus_undoes_geometric() {
        for (alpha, beta) in [(1, 0), (2, 3), (3, -2)] {
            let mut s = QSeries::one(9);
            s.mul_geometric(alpha, beta).unwrap();
            s.mul_one_minus(alpha, beta);
            assert_eq!(s, QSeries::one(9));
        }
    }

    #[test]
    fn alpha_zero_rejected() {
        let mut s = QSeries::one(3);
        assert!(matches!(s.mul_geometric(0, 1), Err(Error::NonExpandableFactor { .. })));
    }

    #[test]
    fn substitution_of_laurent_terms() {
        let s = QSeries::from_poly(&p("1+QT^(-3)+Q^2T^(-1)"), 6);
        assert_eq!(s.substitute_t().unwrap().to_poly(), p("1+Q^4T^6+Q^3T^2"));
        assert!(QSeries::from_poly(&p("QT"), 3).substitute_t().is_err());
    }

    #[test]
    fn divergence_reports_first_degree() {
        let a = QSeries::from_poly(&p("1+Q+Q^3T^2"), 5);
        let b = QSeries::from_poly(&p("1+Q+2Q^3T^2+Q^4"), 5);
        let d = a.first_divergence(&b).unwrap();
        assert_eq!(d.degree, 3);
        assert_eq!(d.left, p("T^2"));
        assert_eq!(d.right, p("2T^2"));
        assert!(a.first_divergence(&a).is_none());
    }
}
