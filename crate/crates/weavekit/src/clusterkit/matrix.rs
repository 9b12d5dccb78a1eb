//! Exchange matrices: `n×m` integer matrices with skew-symmetrizable
//! principal part, rows indexed by mutable vertices.

use super::ClusterError;
use serde::{Deserialize, Serialize};

/// The `n×m` exchange matrix of a seed. `b(i,j)` is defined for
/// `i < n`, `j < m`; the principal part is the square block `j < n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeMatrix {
    n: usize,
    m: usize,
    entries: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn new(n: usize, m: usize, entries: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        if entries.len() != n || entries.iter().any(|r| r.len() != m) || m < n {
            return Err(ClusterError::Dimension(format!(
                "expected {n}x{m} entries"
            )));
        }
        let b = ExchangeMatrix { n, m, entries };
        if b.skew_symmetrizer().is_none() {
            return Err(ClusterError::NotSkewSymmetrizable);
        }
        Ok(b)
    }

    /// A square skew-symmetric matrix, no frozen columns.
    pub fn skew_symmetric(entries: Vec<Vec<i64>>) -> Result<Self, ClusterError> {
        let n = entries.len();
        let b = Self::new(n, n, entries)?;
        if !b.is_principal_skew_symmetric() {
            return Err(ClusterError::NotSkewSymmetric);
        }
        Ok(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn is_principal_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.entries[i][j] == -self.entries[j][i]))
    }

    /// Positive integers `d` with `diag(d)·B^pr` skew-symmetric.
    pub fn skew_symmetrizer(&self) -> Option<Vec<i64>> {
        let n = self.n;
        for i in 0..n {
            if self.entries[i][i] != 0 {
                return None;
            }
            for j in 0..n {
                let a = self.entries[i][j];
                let b = self.entries[j][i];
                if (a == 0) != (b == 0) || a * b > 0 {
                    return None;
                }
            }
        }
        // d_i·b_ij = −d_j·b_ji ; propagate like a symmetrizer.
        let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some((1, 1));
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let (ni, di) = d[i].unwrap();
                for j in 0..n {
                    if self.entries[i][j] == 0 || i == j {
                        continue;
                    }
                    let nj = ni * self.entries[i][j];
                    let dj = -di * self.entries[j][i];
                    let (nj, dj) = if dj < 0 { (-nj, -dj) } else { (nj, dj) };
                    match d[j] {
                        None => {
                            d[j] = Some((nj, dj));
                            stack.push(j);
                        }
                        Some((nj0, dj0)) => {
                            if nj * dj0 != nj0 * dj {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        let mut lcm = 1i64;
        for v in &d {
            lcm = num_integer::lcm(lcm, v.unwrap().1);
        }
        let mut out = Vec::with_capacity(n);
        for v in &d {
            let (num, den) = v.unwrap();
            if num <= 0 {
                return None;
            }
            out.push(num * (lcm / den));
        }
        let g = out.iter().fold(0, |acc, &v| num_integer::gcd(acc, v));
        Some(out.into_iter().map(|v| v / g).collect())
    }

    /// Cartan counterpart of the principal part: 2 on the diagonal,
    /// `−|b_ij|` off it.
    pub fn cartan_counterpart(&self) -> crate::rootdata::CartanMatrix {
        let n = self.n;
        let entries: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { 2 } else { -self.entries[i][j].abs() })
                    .collect()
            })
            .collect();
        crate::rootdata::CartanMatrix::new(entries).expect("counterpart of skew-symmetrizable")
    }
}

/// Matrix mutation in direction `k`.
pub fn mutate_matrix(b: &ExchangeMatrix, k: usize) -> Result<ExchangeMatrix, ClusterError> {
    if k >= b.n() {
        return Err(ClusterError::BadDirection(k));
    }
    let n = b.n();
    let m = b.m();
    let mut out = vec![vec![0i64; m]; n];
    for i in 0..n {
        for j in 0..m {
            out[i][j] = if i == k || j == k {
                -b.b(i, j)
            } else {
                b.b(i, j) + (b.b(i, k).abs() * b.b(k, j) + b.b(i, k) * b.b(k, j).abs()) / 2
            };
        }
    }
    Ok(ExchangeMatrix {
        n,
        m,
        entries: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2(rows: [[i64; 2]; 2]) -> ExchangeMatrix {
        ExchangeMatrix::skew_symmetric(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn a2_mutation() {
        let b = b2([[0, 1], [-1, 0]]);
        let m = mutate_matrix(&b, 0).unwrap();
        assert_eq!(m.rows(), &[vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn mutation_is_involutive() {
        let b = ExchangeMatrix::new(2, 3, vec![vec![0, 2, 1], vec![-1, 0, -2]]).unwrap();
        for k in 0..2 {
            let twice = mutate_matrix(&mutate_matrix(&b, k).unwrap(), k).unwrap();
            assert_eq!(twice, b);
        }
    }

    #[test]
    fn d4_star_center_mutation_flips_all() {
        // Center 2 a source; mutating there only reverses signs.
        let b = ExchangeMatrix::skew_symmetric(vec![
            vec![0, -1, 0, 0],
            vec![1, 0, 1, 1],
            vec![0, -1, 0, 0],
            vec![0, -1, 0, 0],
        ])
        .unwrap();
        let m = mutate_matrix(&b, 1).unwrap();
        let neg: Vec<Vec<i64>> = b.rows().iter().map(|r| r.iter().map(|&x| -x).collect()).collect();
        assert_eq!(m.rows(), &neg[..]);
    }

    #[test]
    fn frozen_direction_rejected() {
        let b = ExchangeMatrix::new(1, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(mutate_matrix(&b, 1), Err(ClusterError::BadDirection(1)));
    }

    #[test]
    fn symmetrizer_preserved_by_mutation() {
        // B2-like skew-symmetrizable matrix.
        let b = ExchangeMatrix::new(2, 2, vec![vec![0, 1], vec![-2, 0]]).unwrap();
        let d0 = b.skew_symmetrizer().unwrap();
        let m = mutate_matrix(&b, 0).unwrap();
        assert_eq!(m.skew_symmetrizer().unwrap(), d0);
    }
}
