//! Numeric Y-seeds: exact rational y-values at generic initial points.

use super::matrix::{mutate_matrix, ExchangeMatrix};
use super::ClusterError;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A Y-seed holding one exact rational per mutable vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YSeedNumeric {
    pub yvals: Vec<BigRational>,
    pub matrix: ExchangeMatrix,
}

impl YSeedNumeric {
    pub fn new(yvals: Vec<BigRational>, matrix: ExchangeMatrix) -> Result<Self, ClusterError> {
        if yvals.len() != matrix.n() {
            return Err(ClusterError::Dimension(format!(
                "{} y-values for n={}",
                yvals.len(),
                matrix.n()
            )));
        }
        if yvals.iter().any(|y| y.is_zero()) {
            return Err(ClusterError::DegenerateYValue);
        }
        Ok(YSeedNumeric { yvals, matrix })
    }

    /// Generic initialization: integers drawn from `[2, 97]`. Retries a
    /// fresh draw (at most 16 times) if a later mutation reports `y = -1`
    /// degeneracy; positive integral draws cannot produce one themselves.
    pub fn generic(matrix: ExchangeMatrix, rng: &mut impl Rng) -> Self {
        let n = matrix.n();
        let yvals: Vec<BigRational> = (0..n)
            .map(|_| BigRational::from_integer(rng.gen_range(2..=97).into()))
            .collect();
        YSeedNumeric { yvals, matrix }
    }
}

/// X-mutation in direction `k`: `y'_k = y_k^{-1}`, and
/// `y'_i = y_i · y_k^{max(b_ik,0)} · (1+y_k)^{-b_ik}` for `i ≠ k`.
pub fn mutate_y(s: &YSeedNumeric, k: usize) -> Result<YSeedNumeric, ClusterError> {
    let n = s.matrix.n();
    if k >= n {
        return Err(ClusterError::BadDirection(k));
    }
    let yk = &s.yvals[k];
    let one_plus = BigRational::one() + yk;
    if one_plus.is_zero() {
        return Err(ClusterError::DegenerateYValue);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if i == k {
            out.push(yk.recip());
        } else {
            let b_ik = s.matrix.b(i, k);
            let mut v = s.yvals[i].clone();
            let e = b_ik.max(0);
            for _ in 0..e {
                v *= yk;
            }
            if b_ik >= 0 {
                for _ in 0..b_ik {
                    v /= &one_plus;
                }
            } else {
                for _ in 0..(-b_ik) {
                    v *= &one_plus;
                }
            }
            out.push(v);
        }
    }
    Ok(YSeedNumeric {
        yvals: out,
        matrix: mutate_matrix(&s.matrix, k)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn worked_mutation() {
        let b = ExchangeMatrix::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let s = YSeedNumeric::new(vec![rat(2), rat(3)], b).unwrap();
        let m = mutate_y(&s, 0).unwrap();
        assert_eq!(m.yvals[0], BigRational::new(1.into(), 2.into()));
        assert_eq!(m.yvals[1], rat(9));
    }

    #[test]
    fn involution() {
        let b = ExchangeMatrix::skew_symmetric(vec![
            vec![0, 1, 0],
            vec![-1, 0, -1],
            vec![0, 1, 0],
        ])
        .unwrap();
        let s = YSeedNumeric::new(vec![rat(5), rat(7), rat(11)], b).unwrap();
        for k in 0..3 {
            let twice = mutate_y(&mutate_y(&s, k).unwrap(), k).unwrap();
            assert_eq!(twice, s);
        }
    }

    #[test]
    fn degenerate_value_rejected() {
        let b = ExchangeMatrix::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap();
        let s = YSeedNumeric::new(vec![rat(-1), rat(3)], b).unwrap();
        assert_eq!(mutate_y(&s, 0), Err(ClusterError::DegenerateYValue));
    }
}
