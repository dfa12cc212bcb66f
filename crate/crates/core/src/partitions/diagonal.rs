//! Weak diagonal partitions: stacks of diagonal rows indexing the strata of
//! the diagonal stratification.
//!
//! A row is a hook centred on the diagonal box `x^k y^k` with a horizontal arm
//! of `i` boxes and a vertical arm of `j` boxes (both counting the central
//! box). A row of kind [`Kind::One`] ends in two half-weight boxes, a row of
//! kind [`Kind::Two`] does not. Layer 0 is the outermost row.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{LaurentPoly, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    One,
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layer {
    pub kind: Kind,
    pub i: u32,
    pub j: u32,
}

impl Layer {
    pub fn new(kind: Kind, i: u32, j: u32) -> Self {
        Layer { kind, i, j }
    }

    pub fn one(i: u32, j: u32) -> Self {
        Layer::new(Kind::One, i, j)
    }

    pub fn two(i: u32, j: u32) -> Self {
        Layer::new(Kind::Two, i, j)
    }

    /// Boxes in this row, shaded boxes counting one half each.
    pub fn boxes(&self) -> u32 {
        match self.kind {
            Kind::One => self.i + self.j,
            Kind::Two => self.i + self.j - 1,
        }
    }
}

/// Relation between two consecutive [`Kind::One`] rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Link {
    /// Equal arms.
    Equal,
    /// Both arms strictly longer on the outer row.
    Up,
}

/// Whether `outer` may sit directly outside `inner`.
pub fn adjacent_ok(outer: &Layer, inner: &Layer) -> bool {
    let ge = |di: u32| outer.i >= inner.i + di && outer.j >= inner.j + di;
    match (outer.kind, inner.kind) {
        (Kind::One, Kind::One) => (outer.i == inner.i && outer.j == inner.j) || ge(1),
        (Kind::One, Kind::Two) => ge(0),
        (Kind::Two, _) => ge(1),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeakDiagonalPartition {
    layers: Vec<Layer>,
}

/// Number of boxes and the exponents of `(A - pt)^m1 x A^m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StratumStats {
    pub n: u32,
    pub m1: u32,
    pub m2: u32,
}

impl StratumStats {
    /// Virtual Poincaré polynomial `Q^n (T^2 - 1)^m1 T^(2 m2)`.
    pub fn contribution(&self) -> LaurentPoly {
        let torus = LaurentPoly::from_terms([(Monomial::new(0, 2, 0), 1), (Monomial::ONE, -1)]);
        torus.pow(self.m1).shift(Monomial::new(self.n, 2 * self.m2 as i32, 0))
    }
}

impl WeakDiagonalPartition {
    /// Layers listed outermost first. No validation is performed.
    pub fn new(layers: Vec<Layer>) -> Self {
        WeakDiagonalPartition { layers }
    }

    pub fn empty() -> Self {
        WeakDiagonalPartition::default()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn rows(&self) -> usize {
        self.layers.len()
    }

    pub fn is_valid(&self) -> bool {
        self.layers.iter().all(|l| l.i >= 1 && l.j >= 1)
            && self.layers.windows(2).all(|w| adjacent_ok(&w[0], &w[1]))
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidPartition(self.to_string()))
        }
    }

    pub fn box_count(&self) -> Result<u32> {
        self.require_valid()?;
        Ok(self.layers.iter().map(Layer::boxes).sum())
    }

    /// Labels of consecutive (outer, inner) pairs; `Some` only for two
    /// [`Kind::One`] rows.
    pub fn links(&self) -> Vec<Option<Link>> {
        self.layers
            .windows(2)
            .map(|w| match (w[0].kind, w[1].kind) {
                (Kind::One, Kind::One) if w[0].i == w[1].i && w[0].j == w[1].j => Some(Link::Equal),
                (Kind::One, Kind::One) => Some(Link::Up),
                _ => None,
            })
            .collect()
    }

    pub fn kinds(&self) -> Vec<Kind> {
        self.layers.iter().map(|l| l.kind).collect()
    }

    pub fn stats(&self) -> Result<StratumStats> {
        let n = self.box_count()?;
        let links = self.links();
        let ones = self.layers.iter().filter(|l| l.kind == Kind::One).count() as u32;
        let equal = links.iter().filter(|l| **l == Some(Link::Equal)).count() as u32;
        let twos = self.layers.windows(2).filter(|w| w[0].kind == Kind::Two && w[1].kind == Kind::Two).count() as u32;
        let outer = self.layers.first().map_or(0, Layer::boxes);
        Ok(StratumStats { n, m1: ones - equal, m2: n - outer + twos })
    }

    /// The arm-minimal partition with the same kinds and the same
    /// equal/up labels, built from the innermost row outwards.
    pub fn minimal_core(&self) -> Result<WeakDiagonalPartition> {
        self.require_valid()?;
        let links = self.links();
        let mut arms = vec![1u32; self.layers.len()];
        for k in (0..self.layers.len().saturating_sub(1)).rev() {
            let step = match (self.layers[k].kind, self.layers[k + 1].kind) {
                (Kind::One, Kind::One) if links[k] == Some(Link::Equal) => 0,
                (Kind::One, Kind::Two) => 0,
                _ => 1,
            };
            arms[k] = arms[k + 1] + step;
        }
        Ok(WeakDiagonalPartition {
            layers: self.layers.iter().zip(arms).map(|(l, a)| Layer::new(l.kind, a, a)).collect(),
        })
    }
}

impl fmt::Display for WeakDiagonalPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            return write!(f, "[]");
        }
        for (k, l) in self.layers.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            let kind = match l.kind {
                Kind::One => 1,
                Kind::Two => 2,
            };
            write!(f, "[{kind},({},{})]", l.i, l.j)?;
        }
        Ok(())
    }
}

/// All valid partitions of `n` boxes with at most `max_rows` rows.
///
/// Rows are chosen innermost first; each new row must fit outside the
/// previous one and within the remaining box budget.
pub fn enumerate(n: u32, max_rows: usize) -> Vec<WeakDiagonalPartition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(None, n, max_rows, &mut stack, &mut out);
    out
}

fn extend(
    inner: Option<Layer>,
    remaining: u32,
    rows_left: usize,
    stack: &mut Vec<Layer>,
    out: &mut Vec<WeakDiagonalPartition>,
) {
    if remaining == 0 {
        out.push(WeakDiagonalPartition { layers: stack.iter().rev().copied().collect() });
        return;
    }
    if rows_left == 0 {
        return;
    }
    for kind in [Kind::One, Kind::Two] {
        for i in 1..=remaining {
            for j in 1..=remaining {
                let layer = Layer::new(kind, i, j);
                if layer.boxes() > remaining {
                    break;
                }
                if inner.is_some_and(|inner| !adjacent_ok(&layer, &inner)) {
                    continue;
                }
                stack.push(layer);
                extend(Some(layer), remaining - layer.boxes(), rows_left - 1, stack, out);
                stack.pop();
            }
        }
    }
}

/// Sum of stratum contributions over all partitions of `n` with at most
/// `max_rows` rows.
pub fn aggregate(n: u32, max_rows: usize) -> LaurentPoly {
    enumerate(n, max_rows).iter().fold(LaurentPoly::zero(), |acc, p| {
        &acc + &p.stats().expect("enumerated partitions are valid").contribution()
    })
}

/// Integer count of strata, handy at `T = 1`.
pub fn count(n: u32, max_rows: usize) -> BigInt {
    BigInt::from(enumerate(n, max_rows).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn wdp(layers: &[Layer]) -> WeakDiagonalPartition {
        WeakDiagonalPartition::new(layers.to_vec())
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(wdp(&[Layer::one(1, 1), Layer::one(1, 1)]).is_valid());
        assert!(!wdp(&[Layer::two(1, 1), Layer::two(1, 1)]).is_valid());
        assert!(wdp(&[Layer::one(2, 1), Layer::two(1, 1)]).is_valid());
        assert!(wdp(&[Layer::two(2, 2), Layer::two(1, 1)]).is_valid());
        // Mixed growth on a 1-1 pair is neither equal nor up.
        assert!(!wdp(&[Layer::one(2, 1), Layer::one(1, 1)]).is_valid());
        assert!(!wdp(&[Layer::one(0, 1)]).is_valid());
    }

    #[test]
    fn box_counts() {
        assert_eq!(wdp(&[Layer::one(2, 2), Layer::one(1, 1)]).box_count().unwrap(), 6);
        assert_eq!(wdp(&[Layer::two(2, 2), Layer::two(1, 1)]).box_count().unwrap(), 4);
        assert_eq!(wdp(&[Layer::two(1, 1)]).box_count().unwrap(), 1);
        assert!(wdp(&[Layer::two(1, 1), Layer::two(1, 1)]).box_count().is_err());
    }

    #[test]
    fn stats_examples() {
        let s = wdp(&[Layer::one(1, 1)]).stats().unwrap();
        assert_eq!(s, StratumStats { n: 2, m1: 1, m2: 0 });
        assert_eq!(s.contribution(), p("Q^2T^2-Q^2"));
        assert_eq!(
            wdp(&[Layer::two(2, 2), Layer::two(1, 1)]).stats().unwrap(),
            StratumStats { n: 4, m1: 0, m2: 2 }
        );
        assert_eq!(
            wdp(&[Layer::one(1, 1), Layer::one(1, 1)]).stats().unwrap(),
            StratumStats { n: 4, m1: 1, m2: 2 }
        );
    }

    #[test]
    fn contributions() {
        assert_eq!(StratumStats { n: 0, m1: 0, m2: 0 }.contribution(), LaurentPoly::one());
        assert_eq!(StratumStats { n: 2, m1: 1, m2: 0 }.contribution(), p("Q^2T^2-Q^2"));
        assert_eq!(StratumStats { n: 4, m1: 0, m2: 2 }.contribution(), p("Q^4T^4"));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate(0, 0), vec![WeakDiagonalPartition::empty()]);
        assert_eq!(enumerate(1, 3), vec![wdp(&[Layer::two(1, 1)])]);
        let two: BTreeSet<_> = enumerate(2, 3).into_iter().collect();
        let expected: BTreeSet<_> =
            [wdp(&[Layer::one(1, 1)]), wdp(&[Layer::two(2, 1)]), wdp(&[Layer::two(1, 2)])].into_iter().collect();
        assert_eq!(two, expected);
        assert_eq!(aggregate(2, 3), p("Q^2+Q^2T^2"));
    }

    #[test]
    fn four_boxes() {
        // 3 single 1-rows, 4 single 2-rows, the equal 1-1 stack, the minimal
        // 2-2 stack and two 1-2 stacks.
        let all = enumerate(4, 2);
        assert_eq!(all.len(), 11);
        assert_eq!(aggregate(4, 2), p("Q^4+Q^4T^2+2Q^4T^4+Q^4T^6"));
        assert_eq!(enumerate(4, 1).len(), 7);
    }

    #[test]
    fn minimal_cores() {
        let core = wdp(&[Layer::one(3, 2), Layer::two(1, 1)]).minimal_core().unwrap();
        assert_eq!(core, wdp(&[Layer::one(1, 1), Layer::two(1, 1)]));
        assert!(core.is_valid());
        let up = wdp(&[Layer::one(2, 2), Layer::one(1, 1)]);
        assert_eq!(up.minimal_core().unwrap(), up);
        assert_eq!(core.minimal_core().unwrap(), core);
    }

    #[test]
    fn minimal_two_row_shapes() {
        let cores: BTreeSet<(String, u32)> = enumerate(6, 2)
            .iter()
            .chain(enumerate(5, 2).iter())
            .chain(enumerate(4, 2).iter())
            .chain(enumerate(3, 2).iter())
            .filter(|p| p.rows() == 2)
            .map(|p| {
                let c = p.minimal_core().unwrap();
                (c.to_string(), c.box_count().unwrap())
            })
            .collect();
        let expected: BTreeSet<(String, u32)> = [
            ("[1,(1,1)],[1,(1,1)]", 4),
            ("[1,(2,2)],[1,(1,1)]", 6),
            ("[1,(1,1)],[2,(1,1)]", 3),
            ("[2,(2,2)],[1,(1,1)]", 5),
            ("[2,(2,2)],[2,(1,1)]", 4),
        ]
        .into_iter()
        .map(|(s, n)| (s.to_string(), n))
        .collect();
        assert_eq!(cores, expected);
    }

    #[test]
    fn display_is_ascii() {
        assert_eq!(wdp(&[Layer::one(2, 2), Layer::two(1, 1)]).to_string(), "[1,(2,2)],[2,(1,1)]");
        assert_eq!(WeakDiagonalPartition::empty().to_string(), "[]");
    }
}
