//! Exact polynomials in `Q`, `T`, `a`: polynomial in `Q` and `a`, Laurent in `T`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `Q^q T^t a^a`. Ordering is ascending `q`, then `t`, then `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub q: u32,
    pub t: i32,
    pub a: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0, a: 0 };

    pub fn new(q: u32, t: i32, a: u32) -> Self {
        Monomial { q, t, a }
    }

    /// Checked constructor for exponents coming out of formula arithmetic.
    pub fn checked(q: i64, t: i64, a: i64) -> Result<Self> {
        if q < 0 {
            return Err(Error::NegativeQExponent(q));
        }
        if a < 0 {
            return Err(Error::Domain(format!("negative a exponent {a}")));
        }
        let t = i32::try_from(t).map_err(|_| Error::Domain(format!("T exponent {t} overflows")))?;
        Ok(Monomial { q: q as u32, t, a: a as u32 })
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial { q: self.q + other.q, t: self.t + other.t, a: self.a + other.a }
    }

    pub fn total_degree(self) -> i64 {
        self.q as i64 + self.t as i64 + self.a as i64
    }
}

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(m, c.into());
        p
    }

    /// `Q^q T^t`.
    pub fn qt(q: u32, t: i32) -> Self {
        LaurentPoly::term(Monomial::new(q, t, 0), 1)
    }

    pub fn q() -> Self {
        LaurentPoly::qt(1, 0)
    }

    pub fn t() -> Self {
        LaurentPoly::qt(0, 1)
    }

    pub fn a() -> Self {
        LaurentPoly::term(Monomial::new(0, 0, 1), 1)
    }

    /// `1 - Q^alpha T^beta`.
    pub fn one_minus(alpha: u32, beta: i32) -> Self {
        LaurentPoly::one() - LaurentPoly::qt(alpha, beta)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending (`q`, `t`, `a`) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn max_q(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn min_t(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.t).min()
    }

    pub fn max_t(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn has_a(&self) -> bool {
        self.terms.keys().any(|m| m.a != 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Monomial times polynomial.
    pub fn shift(&self, by: Monomial) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.times(by), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Drops all terms with `q > nmax`.
    pub fn truncate_q(&self, nmax: u32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().filter(|(m, _)| m.q <= nmax).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// Keeps the terms whose total degree in `Q`, `T`, `a` is at most `max`.
    pub fn truncate_total_degree(&self, max: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() <= max)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Splits into coefficients of `Q^0, Q^1, ...` (each with `q = 0`).
    pub fn split_by_q(&self) -> BTreeMap<u32, LaurentPoly> {
        let mut out: BTreeMap<u32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.q).or_default().add_term(Monomial { q: 0, ..*m }, c.clone());
        }
        out
    }

    /// Applies a monomial map; the image monomials may collide and are summed.
    pub fn try_map_monomials<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(Monomial) -> Result<Monomial>,
    {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m)?, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `T = value` for `value` in {0, 1}.
    pub fn specialize_t(&self, value: u8) -> Result<Self> {
        match value {
            1 => Ok(self.map_collapse(|m| Monomial { t: 0, ..m })),
            0 => {
                if let Some((m, _)) = self.terms.iter().find(|(m, _)| m.t < 0) {
                    return Err(Error::UndefinedSubstitution(format!(
                        "T = 0 in a term with T^{}",
                        m.t
                    )));
                }
                Ok(self.filter(|m| m.t == 0))
            }
            _ => Err(Error::UndefinedSubstitution(format!("T = {value} is not supported"))),
        }
    }

    /// Substitutes `a = value` for `value` in {0, 1}.
    pub fn specialize_a(&self, value: u8) -> Result<Self> {
        match value {
            1 => Ok(self.map_collapse(|m| Monomial { a: 0, ..m })),
            0 => Ok(self.filter(|m| m.a == 0)),
            _ => Err(Error::UndefinedSubstitution(format!("a = {value} is not supported"))),
        }
    }

    fn map_collapse(&self, f: impl Fn(Monomial) -> Monomial) -> Self {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(*m), c.clone());
        }
        out
    }

    fn filter(&self, keep: impl Fn(Monomial) -> bool) -> Self {
        LaurentPoly {
            terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    /// The leading term in (`q`, `t`, `a`) order.
    pub fn leading_term(&self) -> Option<(Monomial, BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i64) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        e if e < 0 => write!(f, "{name}^({e})"),
        e => write!(f, "{name}^{e}"),
    }
}

/// Compact form such as `1-Q+Q^2T^2` or `Q^3T^(-2)a`, ascending term order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let is_one = *m == Monomial::ONE;
            if !abs.is_one() || is_one {
                write!(f, "{abs}")?;
            }
            write_var(f, "Q", m.q as i64)?;
            write_var(f, "T", m.t as i64)?;
            write_var(f, "a", m.a as i64)?;
        }
        Ok(())
    }
}

/// Parses sums of terms `[+-][coeff][Q^e][T^e][a^e]`, in any variable order.
/// Exponents may be written `^3`, `^{3}`, `^(-2)`, or `^-2`. Whitespace and
/// `*` are ignored.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pos = 0;
        let mut out = LaurentPoly::zero();
        while pos < chars.len() {
            let mut sign = BigInt::one();
            if chars[pos] == '+' || chars[pos] == '-' {
                if chars[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: BigInt = if pos > start {
                chars[start..pos].iter().collect::<String>().parse().map_err(|_| Error::Parse(s.into()))?
            } else {
                BigInt::one()
            };
            let mut exps = [0i64; 3];
            let mut saw_factor = pos > start;
            while pos < chars.len() && matches!(chars[pos], 'Q' | 'T' | 'a') {
                let slot = match chars[pos] {
                    'Q' => 0,
                    'T' => 1,
                    _ => 2,
                };
                pos += 1;
                let e = if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    parse_exponent(&chars, &mut pos).ok_or_else(|| Error::Parse(s.into()))?
                } else {
                    1
                };
                exps[slot] += e;
                saw_factor = true;
            }
            if !saw_factor {
                return Err(Error::Parse(format!("unexpected input at offset {pos} in {s:?}")));
            }
            let m = Monomial::checked(exps[0], exps[1], exps[2])?;
            out.add_term(m, sign * coeff);
        }
        Ok(out)
    }
}

fn parse_exponent(chars: &[char], pos: &mut usize) -> Option<i64> {
    let close = match chars.get(*pos) {
        Some('{') => Some('}'),
        Some('(') => Some(')'),
        _ => None,
    };
    if close.is_some() {
        *pos += 1;
    }
    let start = *pos;
    if matches!(chars.get(*pos), Some('-')) {
        *pos += 1;
    }
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    let e: i64 = chars[start..*pos].iter().collect::<String>().parse().ok()?;
    if let Some(c) = close {
        if chars.get(*pos) != Some(&c) {
            return None;
        }
        *pos += 1;
    }
    Some(e)
}
