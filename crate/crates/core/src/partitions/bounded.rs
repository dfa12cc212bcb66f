//! Partitions with bounded parts, indexing the cells of `Hilb^n(y^k = 0)`.

use crate::series::{LaurentPoly, Monomial, QSeries};

/// All partitions of `n` with parts at most `max_part`, parts weakly decreasing.
pub fn partitions(n: u32, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    go(n, max_part, &mut cur, &mut out);
    out
}

fn go(remaining: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if remaining == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=cap.min(remaining)).rev() {
        cur.push(part);
        go(remaining - part, part, cur, out);
        cur.pop();
    }
}

/// `sum Q^|λ| T^(|λ| - len(λ))` over partitions with parts at most `k`.
pub fn bounded_partitions_series(k: u32, nmax: usize) -> QSeries {
    let mut total = LaurentPoly::zero();
    for n in 0..=nmax as u32 {
        for lambda in partitions(n, k) {
            let dim = n - lambda.len() as u32;
            total.add_term(Monomial::new(n, dim as i32, 0), 1.into());
        }
    }
    QSeries::from_poly(&total, nmax)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let p: Vec<usize> = (0..=10).map(|n| partitions(n, n.max(1)).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn single_column_is_dimension_zero() {
        let s = bounded_partitions_series(1, 6);
        for n in 0..=6 {
            assert_eq!(*s.coeff(n), LaurentPoly::one());
        }
    }

    #[test]
    fn parts_at_most_two() {
        // n = 3: (2,1) has dimension 1, (1,1,1) dimension 0.
        let s = bounded_partitions_series(2, 4);
        assert_eq!(*s.coeff(3), "1+T".parse().unwrap());
        assert_eq!(*s.coeff(4), "1+T+T^2".parse().unwrap());
    }
}
