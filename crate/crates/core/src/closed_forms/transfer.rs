//! The 2x2 transfer matrices `M_s` and the initial vectors they act on.

use super::Formulas;
use crate::error::Result;
use crate::series::LaurentPoly;

/// `M_s` for a stack of `k` rows, with `a = k - s + 1` and `b = k - s`:
///
/// ```text
/// [ Q^(2a) T^(4b) (T^2-1) + (1 - Q^a T^(2b))^2   Q^a T^(2b) (T^2-1) ]
/// [ Q^a T^(2b)                                  Q^(2a) T^(4b) T^2  ]
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
    pub k: i64,
    pub s: i64,
}

impl TransferMatrix {
    pub fn new(f: &Formulas, k: i64, s: i64) -> Result<Self> {
        let a = k - s + 1;
        let b = k - s;
        let m00 = &(&f.mono("Ms.00.q", 2 * a, "Ms.00.t", 4 * b)? * &f.torus("Ms.00.tor")?)
            + &f.one_minus("Ms.00.sq.q", a, "Ms.00.sq.t", 2 * b)?.pow(f.count("Ms.00.sq.pow", 2)?);
        let m01 = &f.mono("Ms.01.q", a, "Ms.01.t", 2 * b)? * &f.torus("Ms.01.tor")?;
        let m10 = f.mono("Ms.10.q", a, "Ms.10.t", 2 * b)?;
        let m11 = f.mono("Ms.11.q", 2 * a, "Ms.11.t", 4 * b + 2)?;
        Ok(TransferMatrix { entries: [[m00, m01], [m10, m11]], k, s })
    }

    pub fn apply(&self, v: &[LaurentPoly; 2]) -> [LaurentPoly; 2] {
        let row = |r: &[LaurentPoly; 2]| &(&r[0] * &v[0]) + &(&r[1] * &v[1]);
        [row(&self.entries[0]), row(&self.entries[1])]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorKind {
    V1,
    W1,
    D1,
    D2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialVector {
    pub entries: [LaurentPoly; 2],
    pub kind: VectorKind,
}

impl InitialVector {
    /// `[Q^(2k) T^(4(k-1)) (T^2-1), Q^k T^(2(k-1))]`.
    pub fn v1(f: &Formulas, k: i64) -> Result<Self> {
        let top = &f.mono("V1.top.q", 2 * k, "V1.top.t", 4 * (k - 1))? * &f.torus("V1.top.tor")?;
        let bot = f.mono("V1.bot.q", k, "V1.bot.t", 2 * (k - 1))?;
        Ok(InitialVector { entries: [top, bot], kind: VectorKind::V1 })
    }

    /// `[0, Q^k T^(2(k-1)) (1 - Q^k T^(2(k-1)))]`.
    pub fn w1(f: &Formulas, k: i64) -> Result<Self> {
        let bot = &f.mono("W1.q", k, "W1.t", 2 * (k - 1))? * &f.one_minus("W1.fac.q", k, "W1.fac.t", 2 * (k - 1))?;
        Ok(InitialVector { entries: [LaurentPoly::zero(), bot], kind: VectorKind::W1 })
    }

    /// With `r = Q^(k-1) T^(2(k-2))`:
    /// `[r^2 (T^2-1)(1-r), (r + r^2)(1-r)]`, each occurrence of `r` spelled out.
    pub fn d1(f: &Formulas, k: i64) -> Result<Self> {
        let (q, t) = (k - 1, 2 * (k - 2));
        let top = &(&f.mono("D1.top.q", 2 * q, "D1.top.t", 2 * t)? * &f.torus("D1.top.tor")?)
            * &f.one_minus("D1.top.fac.q", q, "D1.top.fac.t", t)?;
        let bot = &(&f.mono("D1.bot.q1", q, "D1.bot.t1", t)? + &f.mono("D1.bot.q2", 2 * q, "D1.bot.t2", 2 * t)?)
            * &f.one_minus("D1.bot.fac.q", q, "D1.bot.fac.t", t)?;
        Ok(InitialVector { entries: [top, bot], kind: VectorKind::D1 })
    }

    /// With `c = Q^(3k-2) T^(2(3k-5)) (1 - Q^k T^(2(k-1))) (1 - Q^(k-1) T^(2(k-2)))`:
    /// `[c (T^2-1), c]`.
    pub fn d2(f: &Formulas, k: i64) -> Result<Self> {
        let c = &(&f.mono("D2.q", k + 2 * (k - 1), "D2.t", 2 * (k - 1 + 2 * (k - 2)))?
            * &f.one_minus("D2.fac1.q", k, "D2.fac1.t", 2 * (k - 1))?)
            * &f.one_minus("D2.fac2.q", k - 1, "D2.fac2.t", 2 * (k - 2))?;
        let top = &c * &f.torus("D2.tor")?;
        Ok(InitialVector { entries: [top, c], kind: VectorKind::D2 })
    }

    /// Applies `M_s` for `s = from..=k` in increasing order.
    pub fn propagate(mut self, f: &Formulas, k: i64, from: i64) -> Result<Self> {
        for s in from..=k {
            self.entries = TransferMatrix::new(f, k, s)?.apply(&self.entries);
        }
        Ok(self)
    }

    pub fn sum(&self) -> LaurentPoly {
        &self.entries[0] + &self.entries[1]
    }
}
