//! Closed-form generating functions for `Hilb^n(x^u y^v = 0)` and the plane.
//!
//! Every exponent in every formula is read through a named site on a
//! [`Formulas`] context. The default context is exact; a perturbed one shifts
//! a single site by a fixed amount, which the negative-control suite uses to
//! confirm that the checks notice.

mod transfer;

use std::cell::RefCell;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::series::{Factor, FactoredRational, LaurentPoly, Monomial};

pub use transfer::{InitialVector, TransferMatrix, VectorKind};

/// Every exponent site read by the closed forms.
pub const SITES: &[&str] = &[
    "nodal.num.q1",
    "nodal.num.t1",
    "nodal.num.q2",
    "nodal.num.t2",
    "nodal.den.q",
    "nodal.den.t",
    "nodal.den.pow",
    "fat.q",
    "fat.t",
    "xyv.prod.q",
    "xyv.prod.t",
    "xyv.tail.q",
    "xyv.tail.t",
    "xyv.geo.q",
    "xyv.geo.t",
    "x2yv.n1.q",
    "x2yv.n1.q2",
    "x2yv.n1.t2",
    "x2yv.n2.q",
    "x2yv.n2.q1",
    "x2yv.n2.t1",
    "x2yv.n2.qv",
    "x2yv.n2.tv",
    "x2yv.n3.q",
    "x2yv.n3.t",
    "x2yv.d.q",
    "x2yv.d.q2",
    "x2yv.d.t2",
    "x2yv.prod.q",
    "x2yv.prod.t",
    "F1.q1",
    "F1.q2",
    "F1.t2",
    "Fden.q",
    "Fden.t",
    "Fden.pow",
    "Ms.00.q",
    "Ms.00.t",
    "Ms.00.tor",
    "Ms.00.sq.q",
    "Ms.00.sq.t",
    "Ms.00.sq.pow",
    "Ms.01.q",
    "Ms.01.t",
    "Ms.01.tor",
    "Ms.10.q",
    "Ms.10.t",
    "Ms.11.q",
    "Ms.11.t",
    "V1.top.q",
    "V1.top.t",
    "V1.top.tor",
    "V1.bot.q",
    "V1.bot.t",
    "W1.q",
    "W1.t",
    "W1.fac.q",
    "W1.fac.t",
    "D1.top.q",
    "D1.top.t",
    "D1.top.tor",
    "D1.top.fac.q",
    "D1.top.fac.t",
    "D1.bot.q1",
    "D1.bot.t1",
    "D1.bot.q2",
    "D1.bot.t2",
    "D1.bot.fac.q",
    "D1.bot.fac.t",
    "D2.q",
    "D2.t",
    "D2.tor",
    "D2.fac1.q",
    "D2.fac1.t",
    "D2.fac2.q",
    "D2.fac2.t",
    "plane.q",
    "plane.t",
    "hopf.tail.q",
    "hopf.tail.t",
    "hopf.geo.q",
    "hopf.prod.q",
    "hopf.prod.t",
];

/// A single-exponent perturbation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Tweak {
    pub site: &'static str,
    pub delta: i64,
}

/// Evaluation context for the closed forms.
#[derive(Debug, Default)]
pub struct Formulas {
    tweak: Option<Tweak>,
    seen: RefCell<BTreeSet<&'static str>>,
}

impl Formulas {
    pub fn exact() -> Self {
        Formulas::default()
    }

    pub fn tweaked(site: &'static str, delta: i64) -> Self {
        Formulas { tweak: Some(Tweak { site, delta }), seen: RefCell::default() }
    }

    pub fn tweak(&self) -> Option<Tweak> {
        self.tweak
    }

    /// Sites read so far by this context.
    pub fn sites_read(&self) -> BTreeSet<&'static str> {
        self.seen.borrow().clone()
    }

    fn e(&self, site: &'static str, value: i64) -> i64 {
        debug_assert!(SITES.contains(&site), "undeclared site {site}");
        self.seen.borrow_mut().insert(site);
        match self.tweak {
            Some(t) if t.site == site => value + t.delta,
            _ => value,
        }
    }

    fn count(&self, site: &'static str, value: i64) -> Result<u32> {
        let n = self.e(site, value);
        u32::try_from(n).map_err(|_| Error::Domain(format!("negative multiplicity {n} at {site}")))
    }

    /// `Q^q T^t`.
    fn mono(&self, qs: &'static str, q: i64, ts: &'static str, t: i64) -> Result<LaurentPoly> {
        let m = Monomial::checked(self.e(qs, q), self.e(ts, t), 0)?;
        Ok(LaurentPoly::term(m, 1))
    }

    /// `Q^q` with no `T` site.
    fn q_pow(&self, qs: &'static str, q: i64) -> Result<LaurentPoly> {
        let m = Monomial::checked(self.e(qs, q), 0, 0)?;
        Ok(LaurentPoly::term(m, 1))
    }

    /// `1 - Q^q T^t`.
    fn one_minus(&self, qs: &'static str, q: i64, ts: &'static str, t: i64) -> Result<LaurentPoly> {
        Ok(&LaurentPoly::one() - &self.mono(qs, q, ts, t)?)
    }

    /// `T^e - 1`, the class of a punctured line.
    fn torus(&self, site: &'static str) -> Result<LaurentPoly> {
        let m = Monomial::checked(0, self.e(site, 2), 0)?;
        Ok(&LaurentPoly::term(m, 1) - &LaurentPoly::one())
    }

    fn factor(&self, qs: &'static str, q: i64, ts: &'static str, t: i64) -> Result<Factor> {
        Factor::new(self.e(qs, q), self.e(ts, t))
    }

    /// `prod_{i=1}^{k} (1 - Q^i T^(2(i-1)))^pow` as a factor list.
    fn graded_product(
        &self,
        k: i64,
        qs: &'static str,
        ts: &'static str,
        pow: Option<&'static str>,
    ) -> Result<Vec<Factor>> {
        let mut out = Vec::new();
        for i in 1..=k {
            let f = self.factor(qs, i, ts, 2 * (i - 1))?;
            let m = match pow {
                Some(site) => self.count(site, 2)?,
                None => 1,
            };
            out.extend(std::iter::repeat_n(f, m as usize));
        }
        Ok(out)
    }

    /// `prod_{i=1}^{k} (1 - Q^i T^(2(i-1)))^2`, the denominator of the `k`-th
    /// Durfee summand.
    pub fn durfee_denominator(&self, k: i64) -> Result<Vec<Factor>> {
        self.graded_product(k, "Fden.q", "Fden.t", Some("Fden.pow"))
    }

    /// `(1 - Q + Q^2 T^2) / (1 - Q)^2`.
    pub fn nodal_reduced(&self) -> Result<FactoredRational> {
        let num = &(&LaurentPoly::one() - &self.mono("nodal.num.q1", 1, "nodal.num.t1", 0)?)
            + &self.mono("nodal.num.q2", 2, "nodal.num.t2", 2)?;
        let f = self.factor("nodal.den.q", 1, "nodal.den.t", 0)?;
        let pow = self.count("nodal.den.pow", 2)?;
        Ok(FactoredRational::new(num, std::iter::repeat_n(f, pow as usize)))
    }

    /// `prod_{i=1}^{k} 1/(1 - Q^i T^(i-1))`, or with `T^(2(i-1))` when
    /// `doubled_t` is set.
    pub fn fat_line(&self, k: i64, doubled_t: bool) -> Result<FactoredRational> {
        if k < 1 {
            return Err(Error::Domain(format!("fat line needs k >= 1, got {k}")));
        }
        let scale = if doubled_t { 2 } else { 1 };
        let factors = (1..=k)
            .map(|i| self.factor("fat.q", i, "fat.t", scale * (i - 1)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FactoredRational::new(LaurentPoly::one(), factors))
    }

    /// `prod_{i=1}^{v} 1/(1 - Q^i T^(2(i-1))) * (1 + Q^(v+1) T^(2v) / (1 - Q))`.
    pub fn xyv(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 1, "x y^v needs v >= 1")?;
        let mut factors = self.graded_product(v, "xyv.prod.q", "xyv.prod.t", None)?;
        let geo = self.factor("xyv.geo.q", 1, "xyv.geo.t", 0)?;
        factors.push(geo);
        let num = &geo.poly() + &self.mono("xyv.tail.q", v + 1, "xyv.tail.t", 2 * v)?;
        Ok(FactoredRational::new(num, factors))
    }

    /// The `x^2 y^v` formula with numerator
    /// `(1-Q)(1-Q^2T^2) + (1-Q)(1+QT^2) Q^(v+1) T^(2v) + Q^(2(v+1)) T^(4v)`.
    pub fn x2yv(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 1, "x^2 y^v needs v >= 1")?;
        let one = LaurentPoly::one();
        let n1 = &(&one - &self.q_pow("x2yv.n1.q", 1)?) * &self.one_minus("x2yv.n1.q2", 2, "x2yv.n1.t2", 2)?;
        let n2 = &(&(&one - &self.q_pow("x2yv.n2.q", 1)?) * &(&one + &self.mono("x2yv.n2.q1", 1, "x2yv.n2.t1", 2)?))
            * &self.mono("x2yv.n2.qv", v + 1, "x2yv.n2.tv", 2 * v)?;
        let n3 = self.mono("x2yv.n3.q", 2 * (v + 1), "x2yv.n3.t", 4 * v)?;
        let num = &(&n1 + &n2) + &n3;
        let mut factors = vec![
            Factor::new(self.e("x2yv.d.q", 1), 0)?,
            self.factor("x2yv.d.q2", 2, "x2yv.d.t2", 2)?,
        ];
        factors.extend(self.graded_product(v, "x2yv.prod.q", "x2yv.prod.t", None)?);
        Ok(FactoredRational::new(num, factors))
    }

    /// `F(1) = Q^2 T^2 - Q + 1`.
    pub fn f_one(&self) -> Result<LaurentPoly> {
        Ok(&(&LaurentPoly::one() - &self.q_pow("F1.q1", 1)?) + &self.mono("F1.q2", 2, "F1.t2", 2)?)
    }

    /// `F(k)`: the node numerator for `k = 1`, otherwise the entry sum of
    /// `M_k ... M_2 V_1`.
    pub fn f(&self, k: i64) -> Result<LaurentPoly> {
        require(k >= 1, "F(k) needs k >= 1")?;
        if k == 1 {
            return self.f_one();
        }
        Ok(InitialVector::v1(self, k)?.propagate(self, k, 2)?.sum())
    }

    /// `sum_{k=1}^{v} F(k) / prod_{i=1}^{k} (1 - Q^i T^(2(i-1)))^2`.
    pub fn xvyv(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 1, "x^v y^v needs v >= 1")?;
        self.durfee_sum(v)
    }

    /// The `x^(v-1) y^v` formula; the last summand starts from `W_1`.
    pub fn xvm1yv(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 2, "x^(v-1) y^v needs v >= 2")?;
        let mut total = self.durfee_sum(v - 1)?;
        let last = InitialVector::w1(self, v)?.propagate(self, v, 2)?.sum();
        total = total.add(&FactoredRational::new(last, self.durfee_denominator(v)?));
        Ok(total)
    }

    /// The `x^(v-2) y^v` formula; the last two summands start from `D_1`
    /// and `D_2`.
    pub fn xvm2yv(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 3, "x^(v-2) y^v needs v >= 3")?;
        let mut total = self.durfee_sum(v - 2)?;
        let d1 = InitialVector::d1(self, v)?.propagate(self, v, 3)?.sum();
        total = total.add(&FactoredRational::new(d1, self.durfee_denominator(v - 1)?));
        let d2 = InitialVector::d2(self, v)?.propagate(self, v, 3)?.sum();
        total = total.add(&FactoredRational::new(d2, self.durfee_denominator(v)?));
        Ok(total)
    }

    /// `prod_{i=1}^{kmax} 1/(1 - Q^i T^(2(i-1)))`.
    pub fn plane(&self, kmax: i64) -> Result<FactoredRational> {
        require(kmax >= 1, "plane product needs kmax >= 1")?;
        Ok(FactoredRational::new(LaurentPoly::one(), self.graded_product(kmax, "plane.q", "plane.t", None)?))
    }

    pub fn durfee_lhs(&self, kmax: i64) -> Result<FactoredRational> {
        require(kmax >= 1, "Durfee sum needs kmax >= 1")?;
        self.durfee_sum(kmax)
    }

    fn durfee_sum(&self, kmax: i64) -> Result<FactoredRational> {
        let mut total = FactoredRational::polynomial(LaurentPoly::zero());
        for k in 1..=kmax {
            let term = FactoredRational::new(self.f(k)?, self.durfee_denominator(k)?);
            total = total.add(&term);
        }
        Ok(total)
    }

    /// `(1 + Q T^(-v) / (1 - Q)) prod_{i=1}^{v} 1/(1 - Q T^(1-i))`.
    pub fn hopf_closed(&self, v: i64) -> Result<FactoredRational> {
        require(v >= 1, "Hopf closed form needs v >= 1")?;
        let geo = Factor::new(self.e("hopf.geo.q", 1), 0)?;
        let num = &geo.poly() + &self.mono("hopf.tail.q", 1, "hopf.tail.t", -v)?;
        let mut factors = vec![geo];
        for i in 1..=v {
            factors.push(self.factor("hopf.prod.q", 1, "hopf.prod.t", 1 - i)?);
        }
        Ok(FactoredRational::new(num, factors))
    }
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg.to_string()))
    }
}

/// The closed form for `x^u y^v`, trying `u = v`, `u = 1`, `u = 2`,
/// `u = v - 1`, `u = v - 2` in that order.
pub fn cf_curve(u: i64, v: i64) -> Result<FactoredRational> {
    if u < 1 || u > v {
        return Err(Error::UnsupportedCurve { u, v });
    }
    match u {
        _ if u == v => cf_xvyv(v),
        1 => cf_xyv(v),
        2 => cf_x2yv(v),
        _ if u == v - 1 => cf_xvm1yv(v),
        _ if u == v - 2 => cf_xvm2yv(v),
        _ => Err(Error::UnsupportedCurve { u, v }),
    }
}

pub fn cf_nodal_reduced() -> FactoredRational {
    Formulas::exact().nodal_reduced().expect("exact formula")
}

pub fn cf_fat_line(k: i64, doubled_t: bool) -> Result<FactoredRational> {
    Formulas::exact().fat_line(k, doubled_t)
}

pub fn cf_xyv(v: i64) -> Result<FactoredRational> {
    Formulas::exact().xyv(v)
}

pub fn cf_x2yv(v: i64) -> Result<FactoredRational> {
    Formulas::exact().x2yv(v)
}

pub fn cf_f(k: i64) -> Result<LaurentPoly> {
    Formulas::exact().f(k)
}

pub fn cf_xvyv(v: i64) -> Result<FactoredRational> {
    Formulas::exact().xvyv(v)
}

pub fn cf_xvm1yv(v: i64) -> Result<FactoredRational> {
    Formulas::exact().xvm1yv(v)
}

pub fn cf_xvm2yv(v: i64) -> Result<FactoredRational> {
    Formulas::exact().xvm2yv(v)
}

pub fn cf_plane(kmax: i64) -> Result<FactoredRational> {
    Formulas::exact().plane(kmax)
}

pub fn cf_durfee_lhs(kmax: i64) -> Result<FactoredRational> {
    Formulas::exact().durfee_lhs(kmax)
}

pub fn cf_hopf_closed(v: i64) -> Result<FactoredRational> {
    Formulas::exact().hopf_closed(v)
}

#[cfg(test)]
mod tests;
