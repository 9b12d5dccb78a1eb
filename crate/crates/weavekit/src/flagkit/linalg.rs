//! Small exact-rational linear algebra: just enough for flags in
//! dimension at most three.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type QVec = Vec<BigRational>;

pub fn zeros(n: usize) -> QVec {
    vec![BigRational::zero(); n]
}

pub fn scale(v: &[BigRational], c: &BigRational) -> QVec {
    v.iter().map(|x| x * c).collect()
}

pub fn add(a: &[BigRational], b: &[BigRational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_zero(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Row-reduce in place; returns the rank.
pub fn rank(rows: &[QVec]) -> usize {
    let mut m: Vec<QVec> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for x in &mut m[r] {
            *x /= &pivot;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[QVec], v: &[QVec]) -> bool {
    let mut rows = basis.to_vec();
    let base = rank(&rows);
    rows.extend(v.iter().cloned());
    rank(&rows) == base
}

/// Solve `Σ c_i basis_i = v`, when possible.
pub fn solve_in_span(basis: &[QVec], v: &QVec) -> Option<Vec<BigRational>> {
    let n = v.len();
    let k = basis.len();
    // Gaussian elimination on the augmented system basisᵀ c = v.
    let mut m: Vec<QVec> = (0..n)
        .map(|row| {
            let mut r: QVec = basis.iter().map(|b| b[row].clone()).collect();
            r.push(v[row].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][c].clone();
        for x in &mut m[r] {
            *x /= &pv;
        }
        for i in 0..n {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    // Inconsistent if a zero row has nonzero augment.
    for i in r..n {
        if !m[i][k].is_zero() {
            return None;
        }
    }
    let mut out = vec![BigRational::zero(); k];
    for (row, &c) in pivots.iter().enumerate() {
        out[c] = m[row][k].clone();
    }
    Some(out)
}

/// Two-dimensional wedge with respect to a coordinate choice.
pub fn wedge2(a: &[BigRational; 2], b: &[BigRational; 2]) -> BigRational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn det3(a: &[BigRational], b: &[BigRational], c: &[BigRational]) -> BigRational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// The covector cutting out the plane spanned by two 3-vectors, as a
/// cross product.
pub fn plane_covector(p: &[QVec]) -> QVec {
    assert_eq!(p.len(), 2);
    let (a, b) = (&p[0], &p[1]);
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(BigRational::zero(), |s, t| s + t)
}

pub fn one() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> QVec {
        xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn rank_and_span() {
        assert_eq!(rank(&[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[1, 1, 0])]), 2);
        assert!(in_span(&[v(&[1, 0]), v(&[0, 1])], &[v(&[3, 4])]));
        assert!(!in_span(&[v(&[1, 0, 0])], &[v(&[0, 1, 0])]));
    }

    #[test]
    fn solve_small_system() {
        let basis = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let sol = solve_in_span(&basis, &v(&[2, 3, 5])).unwrap();
        assert_eq!(sol, v(&[2, 3]));
        assert!(solve_in_span(&basis, &v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn covector_kills_the_plane() {
        let p = vec![v(&[1, 2, 3]), v(&[0, 1, 4])];
        let cov = plane_covector(&p);
        assert!(dot(&cov, &p[0]).is_zero());
        assert!(dot(&cov, &p[1]).is_zero());
    }
}
