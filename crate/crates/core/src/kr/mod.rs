//! Row-colored Khovanov-Rozansky series of torus links, computed from the
//! binary-string recursion `p(t, w)`:
//!
//! 1. `p(∅, 0^n) = ((1+a)/(1-Q))^n`, `p(0^m, ∅) = ((1+a)/(1-Q))^m`
//! 2. `p(t1, w1) = (T^l + a) p(t, w)`
//! 3. `p(t0, w0) = T^-l p(1t, 1w) + Q T^-l p(0t, 0w)`
//! 4. `p(t0, w1) = p(t, 1w)`
//! 5. `p(t1, w0) = p(1t, w)`
//!
//! where `l` is the number of ones in `t` (equal to that of `w`).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::series::{LaurentPoly, Monomial, QSeries};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryPair {
    t: Vec<bool>,
    w: Vec<bool>,
}

/// How rules (1)-(5) rewrite a state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// Rule (1): `((1+a)/(1-Q))^zeros`; `p(∅, ∅) = 1` is the case `zeros = 0`.
    Base { zeros: usize },
    /// Rule (2).
    Peel { l: i32, next: BinaryPair },
    /// Rule (3): `raise` is `(1t, 1w)`, `keep` is `(0t, 0w)` and carries the `Q`.
    Split { l: i32, raise: BinaryPair, keep: BinaryPair },
    /// Rules (4) and (5).
    Rotate { next: BinaryPair },
}

impl BinaryPair {
    pub fn new(t: Vec<bool>, w: Vec<bool>) -> Result<Self> {
        let ones = |s: &[bool]| s.iter().filter(|&&b| b).count();
        if ones(&t) != ones(&w) {
            return Err(Error::OnesMismatch { t_ones: ones(&t), w_ones: ones(&w) });
        }
        Ok(BinaryPair { t, w })
    }

    /// Parses strings of `0` and `1`; the empty string is the empty sequence.
    pub fn parse(t: &str, w: &str) -> Result<Self> {
        let bits = |s: &str| {
            s.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::Parse(format!("not a bit string: {s:?}"))),
                })
                .collect::<Result<Vec<bool>>>()
        };
        BinaryPair::new(bits(t)?, bits(w)?)
    }

    /// `(1^v 0^zt, 1^v 0^zw)`.
    pub fn ones_then_zeros(v: usize, zt: usize, zw: usize) -> Self {
        let s = |z| std::iter::repeat_n(true, v).chain(std::iter::repeat_n(false, z)).collect();
        BinaryPair { t: s(zt), w: s(zw) }
    }

    pub fn t(&self) -> &[bool] {
        &self.t
    }

    pub fn w(&self) -> &[bool] {
        &self.w
    }

    /// The common number of ones.
    pub fn ones(&self) -> usize {
        self.t.iter().filter(|&&b| b).count()
    }

    /// Total length of both strings.
    pub fn len(&self) -> usize {
        self.t.len() + self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty() && self.w.is_empty()
    }

    /// Every rewrite that drops the factor `Q` lowers this key.
    fn potential(&self) -> (usize, std::cmp::Reverse<usize>) {
        (self.len(), std::cmp::Reverse(self.ones()))
    }

    pub fn rewrite(&self) -> Rewrite {
        let (Some(&tl), Some(&wl)) = (self.t.last(), self.w.last()) else {
            return Rewrite::Base { zeros: self.len() };
        };
        let t = &self.t[..self.t.len() - 1];
        let w = &self.w[..self.w.len() - 1];
        let prepend = |b: bool, s: &[bool]| std::iter::once(b).chain(s.iter().copied()).collect::<Vec<_>>();
        let l = t.iter().filter(|&&b| b).count() as i32;
        match (tl, wl) {
            (true, true) => Rewrite::Peel { l, next: BinaryPair { t: t.to_vec(), w: w.to_vec() } },
            (false, false) => Rewrite::Split {
                l,
                raise: BinaryPair { t: prepend(true, t), w: prepend(true, w) },
                keep: BinaryPair { t: prepend(false, t), w: prepend(false, w) },
            },
            (false, true) => Rewrite::Rotate { next: BinaryPair { t: t.to_vec(), w: prepend(true, w) } },
            (true, false) => Rewrite::Rotate { next: BinaryPair { t: prepend(true, t), w: w.to_vec() } },
        }
    }
}

impl fmt::Display for BinaryPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
        write!(f, "({},{})", s(&self.t), s(&self.w))
    }
}

/// Memoizing solver for `p(t, w)` truncated at `Q^nmax`.
///
/// Solved states stay in the table and are reused by later queries.
#[derive(Clone, Debug)]
pub struct KrSolver {
    nmax: usize,
    a: LaurentPoly,
    values: HashMap<BinaryPair, QSeries>,
}

impl KrSolver {
    pub fn new(nmax: usize, set_a_zero: bool) -> Self {
        let a = if set_a_zero { LaurentPoly::zero() } else { LaurentPoly::a() };
        KrSolver { nmax, a, values: HashMap::new() }
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn values(&self) -> impl Iterator<Item = (&BinaryPair, &QSeries)> {
        self.values.iter()
    }

    pub fn solve(&mut self, root: &BinaryPair) -> Result<QSeries> {
        if let Some(v) = self.values.get(root) {
            return Ok(v.clone());
        }
        let states = self.unsolved_reachable(root);
        let rules: Vec<Rewrite> = states.iter().map(BinaryPair::rewrite).collect();
        for (s, r) in states.iter().zip(&rules) {
            let lossless = match r {
                Rewrite::Base { .. } => None,
                Rewrite::Peel { next, .. } | Rewrite::Rotate { next } => Some(next),
                Rewrite::Split { raise, .. } => Some(raise),
            };
            if let Some(n) = lossless {
                if n.potential() >= s.potential() && !self.values.contains_key(n) {
                    return Err(Error::CycleWithoutQ(format!("{s} -> {n}")));
                }
            }
        }

        let index: HashMap<&BinaryPair, usize> = states.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut current = vec![QSeries::zero(self.nmax); states.len()];
        let lookup = |p: &BinaryPair, current: &[QSeries]| -> QSeries {
            match index.get(p) {
                Some(&i) => current[i].clone(),
                None => self.values[p].clone(),
            }
        };
        let mut converged = false;
        for _ in 0..self.nmax + 3 {
            let mut changed = false;
            for i in 0..states.len() {
                let next = match &rules[i] {
                    Rewrite::Base { zeros } => self.base(*zeros),
                    Rewrite::Peel { l, next } => {
                        lookup(next, &current).scale(&(&LaurentPoly::qt(0, *l) + &self.a))
                    }
                    Rewrite::Split { l, raise, keep } => {
                        let tl = LaurentPoly::qt(0, -l);
                        lookup(raise, &current).add(&lookup(keep, &current).shift_q(1)).scale(&tl)
                    }
                    Rewrite::Rotate { next } => lookup(next, &current),
                };
                if next != current[i] {
                    current[i] = next;
                    changed = true;
                }
            }
            if !changed {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::CycleWithoutQ(format!("no fixed point from {root}")));
        }
        for (s, v) in states.into_iter().zip(current) {
            self.values.insert(s, v);
        }
        Ok(self.values[root].clone())
    }

    /// Unsolved states reachable from `root`, sorted so that lossless
    /// rewrites point to earlier entries.
    fn unsolved_reachable(&self, root: &BinaryPair) -> Vec<BinaryPair> {
        let mut seen: HashMap<BinaryPair, ()> = HashMap::new();
        let mut queue = VecDeque::from([root.clone()]);
        seen.insert(root.clone(), ());
        let mut out = Vec::new();
        while let Some(s) = queue.pop_front() {
            let children = match s.rewrite() {
                Rewrite::Base { .. } => vec![],
                Rewrite::Peel { next, .. } | Rewrite::Rotate { next } => vec![next],
                Rewrite::Split { raise, keep, .. } => vec![raise, keep],
            };
            for c in children {
                if !self.values.contains_key(&c) && !seen.contains_key(&c) {
                    seen.insert(c.clone(), ());
                    queue.push_back(c);
                }
            }
            out.push(s);
        }
        out.sort_by(|a, b| a.potential().cmp(&b.potential()).then_with(|| a.cmp(b)));
        out
    }

    fn base(&self, zeros: usize) -> QSeries {
        let one_plus_a = &LaurentPoly::one() + &self.a;
        let mut s = QSeries::from_poly(&one_plus_a.pow(zeros as u32), self.nmax);
        for _ in 0..zeros {
            s.mul_geometric(1, 0).expect("alpha is positive");
        }
        s
    }
}

/// `p(t, w)` as a series to `Q^nmax`, with `a` kept or set to zero.
pub fn kr_p(pair: &BinaryPair, nmax: usize, set_a_zero: bool) -> Result<QSeries> {
    KrSolver::new(nmax, set_a_zero).solve(pair)
}

/// Torus link `T(m_a, m_b)` colored by `(Sym^v, Sym^1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusLinkSpec {
    pub m_a: u32,
    pub m_b: u32,
    pub d: u32,
    pub color_v: u32,
}

impl TorusLinkSpec {
    pub fn new(m_a: u32, m_b: u32, color_v: u32) -> Result<Self> {
        if m_a == 0 || m_b == 0 || color_v == 0 {
            return Err(Error::Domain("torus link parameters must be positive".into()));
        }
        Ok(TorusLinkSpec { m_a, m_b, d: m_a.gcd(&m_b), color_v })
    }

    pub fn hopf(color_v: u32) -> Self {
        TorusLinkSpec { m_a: 2, m_b: 2, d: 2, color_v }
    }

    /// `(1^v 0^za, 1^v 0^zb)` with `z = (m/d)(d-1) + v(m/d - 1)`.
    pub fn strings(&self) -> BinaryPair {
        let v = self.color_v as usize;
        let zeros = |m: u32| {
            let r = (m / self.d) as usize;
            r * (self.d as usize - 1) + v * (r - 1)
        };
        BinaryPair::ones_then_zeros(v, zeros(self.m_a), zeros(self.m_b))
    }
}

/// `prod_{i=1}^{v} 1/(1 - Q T^(1-i))` times `p` on the link's strings.
pub fn kr_torus_link(spec: &TorusLinkSpec, nmax: usize, set_a_zero: bool) -> Result<QSeries> {
    let mut s = kr_p(&spec.strings(), nmax, set_a_zero)?;
    for i in 1..=spec.color_v as i32 {
        s.mul_geometric(1, 1 - i)?;
    }
    Ok(s)
}

/// Divides by `prod_{i=1}^{v-1} T^i = T^(v(v-1)/2)`.
///
/// The `a = 0` constant term must be divisible by that power, so that the
/// normalized series starts at `T^0`.
pub fn strip_monomial(x: &QSeries, v: u32) -> Result<QSeries> {
    let k = (v * v.saturating_sub(1) / 2) as i32;
    let head = x.coeff(0).specialize_a(0)?;
    match head.min_t() {
        Some(t) if t >= k => Ok(x.div_t_power(k)),
        Some(t) => Err(Error::Normalization(format!("constant term has T^{t}, below T^{k}"))),
        None => Err(Error::Normalization("constant term vanishes at a = 0".into())),
    }
}

/// The normalized Hopf series at `a = 0`, before the change of variables.
pub fn hopf_series(v: u32, nmax: usize) -> Result<QSeries> {
    strip_monomial(&kr_torus_link(&TorusLinkSpec::hopf(v), nmax, true)?, v)
}

/// `T^(v(v-1)/2) (1 + Q T^-v / (1 - Q))`, the recursion's value on `(1^v 0, 1^v 0)`.
pub fn hopf_state_closed(v: u32, nmax: usize) -> QSeries {
    let k = (v * v.saturating_sub(1) / 2) as i32;
    let mut tail = QSeries::from_poly(&LaurentPoly::term(Monomial::new(1, k - v as i32, 0), 1), nmax);
    tail.mul_geometric(1, 0).expect("alpha is positive");
    QSeries::from_poly(&LaurentPoly::qt(0, k), nmax).add(&tail)
}
