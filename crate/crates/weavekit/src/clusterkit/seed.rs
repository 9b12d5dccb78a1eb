//! Seeds with cluster variables stored as Laurent polynomials in the
//! initial variables.

use super::matrix::{mutate_matrix, ExchangeMatrix};
use super::ClusterError;
use crate::laurent::LaurentPoly;
use crate::rootdata::RootVector;
use serde::{Deserialize, Serialize};

/// A seed: `m` variables (mutable first, then frozen) and an exchange
/// matrix. Variable order is preserved by mutation; only slot `k` changes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub vars: Vec<LaurentPoly>,
    pub matrix: ExchangeMatrix,
}

impl Seed {
    /// The initial seed: variable `i` is the generator `x_i`.
    pub fn initial(matrix: ExchangeMatrix) -> Self {
        let m = matrix.m();
        Seed {
            vars: (0..m).map(|i| LaurentPoly::var(m, i)).collect(),
            matrix,
        }
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn m(&self) -> usize {
        self.matrix.m()
    }

    /// Unordered-cluster identity over the mutable variables.
    pub fn cluster_key(&self) -> ClusterKey {
        let mut keys: Vec<String> = self.vars[..self.n()]
            .iter()
            .map(|v| v.canonical_key())
            .collect();
        keys.sort();
        ClusterKey(keys)
    }
}

/// Sorted canonical serializations of the mutable variables; two seeds of
/// one finite-type pattern get equal keys iff their unordered clusters agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClusterKey(pub Vec<String>);

/// Seed mutation in direction `k`: the exchange binomial divided by the
/// old variable, by exact Laurent division.
pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed, ClusterError> {
    let n = s.n();
    if k >= n {
        return Err(ClusterError::BadDirection(k));
    }
    let m = s.m();
    let mut pos = LaurentPoly::one(m);
    let mut neg = LaurentPoly::one(m);
    for j in 0..m {
        let b = s.matrix.b(k, j);
        if b > 0 {
            pos = pos
                .mul(&s.vars[j].pow(b as u32))
                .map_err(|_| ClusterError::NonLaurentDivision)?;
        } else if b < 0 {
            neg = neg
                .mul(&s.vars[j].pow((-b) as u32))
                .map_err(|_| ClusterError::NonLaurentDivision)?;
        }
    }
    let numerator = pos.add(&neg).map_err(|_| ClusterError::NonLaurentDivision)?;
    let new_var = numerator
        .div_exact(&s.vars[k])
        .map_err(|_| ClusterError::NonLaurentDivision)?;
    let mut vars = s.vars.clone();
    vars[k] = new_var;
    Ok(Seed {
        vars,
        matrix: mutate_matrix(&s.matrix, k)?,
    })
}

/// The denominator vector of a cluster variable expressed in the initial
/// variables; the initial `x_i` maps to `−α_i`.
pub fn denominator_vector(v: &LaurentPoly, n: usize) -> RootVector {
    RootVector(v.denominator_exponents(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2_seed() -> Seed {
        Seed::initial(
            ExchangeMatrix::skew_symmetric(vec![vec![0, 1], vec![-1, 0]]).unwrap(),
        )
    }

    fn poly(s: &Seed, k: usize) -> String {
        s.vars[k].to_string()
    }

    #[test]
    fn a2_first_mutation() {
        let s = mutate_seed(&a2_seed(), 0).unwrap();
        assert_eq!(poly(&s, 0), "x1^-1*x2 + x1^-1");
        assert_eq!(s.matrix.rows(), &[vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn a2_second_mutation() {
        let s = mutate_seed(&mutate_seed(&a2_seed(), 0).unwrap(), 1).unwrap();
        // (1 + x1 + x2)/(x1 x2)
        let m = s.m();
        let expect = LaurentPoly::one(m)
            .add(&LaurentPoly::var(m, 0))
            .unwrap()
            .add(&LaurentPoly::var(m, 1))
            .unwrap()
            .div_exact(&LaurentPoly::var(m, 0).mul(&LaurentPoly::var(m, 1)).unwrap())
            .unwrap();
        assert_eq!(s.vars[1], expect);
    }

    #[test]
    fn mutation_is_involutive_on_seeds() {
        let s = a2_seed();
        for k in 0..2 {
            let twice = mutate_seed(&mutate_seed(&s, k).unwrap(), k).unwrap();
            assert_eq!(twice, s);
        }
    }

    #[test]
    fn denominator_vectors_of_a2_variables() {
        let s0 = a2_seed();
        assert_eq!(denominator_vector(&s0.vars[0], 2).0, vec![-1, 0]);
        let s1 = mutate_seed(&s0, 0).unwrap();
        assert_eq!(denominator_vector(&s1.vars[0], 2).0, vec![1, 0]);
        let s2 = mutate_seed(&s1, 1).unwrap();
        assert_eq!(denominator_vector(&s2.vars[1], 2).0, vec![1, 1]);
    }

    #[test]
    fn cluster_key_is_order_insensitive() {
        let s = a2_seed();
        let mut swapped = s.clone();
        swapped.vars.swap(0, 1);
        assert_eq!(s.cluster_key(), swapped.cluster_key());
    }
}
