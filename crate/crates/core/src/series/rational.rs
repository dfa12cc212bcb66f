use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::series::laurent::{LaurentPoly, Monomial};
use crate::series::qseries::QSeries;

/// The factor `1 - Q^alpha T^beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor {
    pub alpha: u32,
    pub beta: i32,
}

impl Factor {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha < 1 {
            return Err(Error::NonExpandableFactor { alpha, beta });
        }
        let beta = i32::try_from(beta).map_err(|_| Error::Domain(format!("T exponent {beta} overflows")))?;
        Ok(Factor { alpha: alpha as u32, beta })
    }

    pub fn poly(self) -> LaurentPoly {
        LaurentPoly::one_minus(self.alpha, self.beta)
    }
}

/// `numerator / prod (1 - Q^alpha T^beta)^mult`, kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    numerator: LaurentPoly,
    denominator: BTreeMap<Factor, u32>,
}

impl FactoredRational {
    pub fn new(numerator: LaurentPoly, factors: impl IntoIterator<Item = Factor>) -> Self {
        let mut denominator = BTreeMap::new();
        for f in factors {
            *denominator.entry(f).or_insert(0) += 1;
        }
        FactoredRational { numerator, denominator }
    }

    pub fn polynomial(numerator: LaurentPoly) -> Self {
        FactoredRational::new(numerator, [])
    }

    /// `1 / (1 - Q^alpha T^beta)`.
    pub fn geometric(f: Factor) -> Self {
        FactoredRational::new(LaurentPoly::one(), [f])
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// Denominator factors with multiplicities.
    pub fn denominator(&self) -> impl Iterator<Item = (Factor, u32)> + '_ {
        self.denominator.iter().map(|(f, m)| (*f, *m))
    }

    pub fn expanded_denominator(&self) -> LaurentPoly {
        self.denominator.iter().fold(LaurentPoly::one(), |acc, (f, m)| &acc * &f.poly().pow(*m))
    }

    /// Sum over the least common multiple of the two factor multisets.
    pub fn add(&self, other: &FactoredRational) -> FactoredRational {
        let mut lcm = self.denominator.clone();
        for (f, m) in &other.denominator {
            let e = lcm.entry(*f).or_insert(0);
            *e = (*e).max(*m);
        }
        let lift = |r: &FactoredRational| {
            lcm.iter().fold(r.numerator.clone(), |acc, (f, m)| {
                let have = r.denominator.get(f).copied().unwrap_or(0);
                &acc * &f.poly().pow(m - have)
            })
        };
        FactoredRational { numerator: &lift(self) + &lift(other), denominator: lcm }
    }

    pub fn neg(&self) -> FactoredRational {
        FactoredRational { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    pub fn sub(&self, other: &FactoredRational) -> FactoredRational {
        self.add(&other.neg())
    }

    pub fn scale(&self, p: &LaurentPoly) -> FactoredRational {
        FactoredRational { numerator: &self.numerator * p, denominator: self.denominator.clone() }
    }

    /// Equality of rational functions by cross-multiplication.
    pub fn equals_as_rational(&self, other: &FactoredRational) -> bool {
        self.sub(other).numerator.is_zero()
    }

    /// Q-adic expansion through `Q^nmax`, one geometric factor at a time.
    pub fn to_series(&self, nmax: usize) -> QSeries {
        let mut s = QSeries::from_poly(&self.numerator.truncate_q(nmax as u32), nmax);
        for (f, m) in &self.denominator {
            for _ in 0..*m {
                s.mul_geometric(f.alpha, f.beta).expect("factors are validated at construction");
            }
        }
        s
    }

    /// The map `T -> (QT^2)^-1`: `Q^x T^y -> Q^(x-y) T^(-2y)` on the
    /// numerator and `1 - Q^a T^b -> 1 - Q^(a-b) T^(-2b)` on each factor.
    pub fn substitute_t(&self) -> Result<FactoredRational> {
        let numerator = self.numerator.try_map_monomials(|m| {
            let q = m.q as i64 - m.t as i64;
            if q < 0 {
                return Err(Error::SubstitutionDomain(format!(
                    "numerator term Q^{}T^{} maps to Q^{q}",
                    m.q, m.t
                )));
            }
            Monomial::checked(q, -2 * m.t as i64, m.a as i64)
        })?;
        let mut denominator = BTreeMap::new();
        for (f, m) in &self.denominator {
            let alpha = f.alpha as i64 - f.beta as i64;
            if alpha < 1 {
                return Err(Error::SubstitutionDomain(format!(
                    "factor 1 - Q^{}T^{} maps to a non-expandable factor",
                    f.alpha, f.beta
                )));
            }
            *denominator.entry(Factor::new(alpha, -2 * f.beta as i64)?).or_insert(0) += m;
        }
        Ok(FactoredRational { numerator, denominator })
    }

    pub fn specialize_t_one(&self) -> Result<FactoredRational> {
        let mut denominator = BTreeMap::new();
        for (f, m) in &self.denominator {
            *denominator.entry(Factor { alpha: f.alpha, beta: 0 }).or_insert(0) += m;
        }
        Ok(FactoredRational { numerator: self.numerator.specialize_t(1)?, denominator })
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let mut denominator = self.denominator.clone();
        for (f, m) in &rhs.denominator {
            *denominator.entry(*f).or_insert(0) += m;
        }
        FactoredRational { numerator: &self.numerator * &rhs.numerator, denominator }
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        for (factor, m) in &self.denominator {
            write!(f, " / ({})", factor.poly())?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}
