//! Multivariate Laurent polynomials with exact integer coefficients.
//!
//! Canonical form is a sorted exponent-vector map with no zero
//! coefficients; equality is literal map equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("variable counts differ: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("division is not exact")]
    NonLaurentDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
}

pub type Exponents = Vec<i32>;

/// A Laurent polynomial in `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; nvars], c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// The generator `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, it: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in it {
            assert_eq!(e.len(), nvars);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::VarMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::VarMismatch(self.nvars, other.nvars));
        }
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, exps: &[i32], c: &BigInt) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, coef) in &self.terms {
            let shifted: Exponents = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.add_term(shifted, coef * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self).unwrap();
        }
        out
    }

    /// Componentwise minimum of exponent vectors over all terms.
    pub fn min_exponents(&self) -> Option<Exponents> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |mut acc, e| {
            for (a, b) in acc.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
            acc
        }))
    }

    /// Exact division; `Err(NonLaurentDivision)` when the quotient is not a
    /// Laurent polynomial. Both operands are shifted by their componentwise
    /// minimal exponents so the core loop runs over ordinary polynomials,
    /// where lex long division terminates.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if self.nvars != divisor.nvars {
            return Err(LaurentError::VarMismatch(self.nvars, divisor.nvars));
        }
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let shift_n = self.min_exponents().unwrap();
        let shift_d = divisor.min_exponents().unwrap();
        let neg = |v: &[i32]| -> Exponents { v.iter().map(|x| -x).collect() };
        let p = self.mul_monomial(&neg(&shift_n), &BigInt::one());
        let d = divisor.mul_monomial(&neg(&shift_d), &BigInt::one());

        let mut rem = p;
        let mut quo = Self::zero(self.nvars);
        let (lead_e, lead_c) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        while !rem.is_zero() {
            let (re, rc) = rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let qe: Exponents = re.iter().zip(&lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return Err(LaurentError::NonLaurentDivision);
            }
            let (qc, r) = num_integer::div_rem(rc, lead_c.clone());
            if !r.is_zero() {
                return Err(LaurentError::NonLaurentDivision);
            }
            let t = Self::monomial(self.nvars, qe, qc);
            rem = rem.add(&t.mul(&d)?.neg())?;
            quo = quo.add(&t)?;
        }
        // Undo the shifts.
        let total: Exponents = shift_n.iter().zip(&shift_d).map(|(a, b)| a - b).collect();
        Ok(quo.mul_monomial(&total, &BigInt::one()))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// `d_i = −(minimal exponent of variable i over all monomials)`,
    /// restricted to the first `n` variables.
    pub fn denominator_exponents(&self, n: usize) -> Vec<i64> {
        let mins = self
            .min_exponents()
            .unwrap_or_else(|| vec![0; self.nvars]);
        mins.iter().take(n).map(|&m| -(m as i64)).collect()
    }

    /// Identify variables: exponents of variables in one class are summed
    /// onto the class index. `class[i]` maps old variable `i` to a new
    /// variable index; `new_nvars` is the number of classes.
    pub fn identify_vars(&self, class: &[usize], new_nvars: usize) -> Self {
        assert_eq!(class.len(), self.nvars);
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i32; new_nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[class[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Evaluate at exact rational points.
    pub fn eval(&self, xs: &[num_rational::BigRational]) -> num_rational::BigRational {
        use num_rational::BigRational;
        assert_eq!(xs.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from(c.clone());
            for (x, &k) in xs.iter().zip(e) {
                if k >= 0 {
                    for _ in 0..k {
                        term *= x;
                    }
                } else {
                    for _ in 0..(-k) {
                        term /= x;
                    }
                }
            }
            acc += term;
        }
        acc
    }

    /// A stable textual key for dedup and sorting.
    pub fn canonical_key(&self) -> String {
        let mut s = String::new();
        for (e, c) in &self.terms {
            s.push_str(&format!("{c}:"));
            for x in e {
                s.push_str(&format!("{x},"));
            }
            s.push(';');
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c.is_negative() { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = x(2, 0);
        let b = a.add(&a.neg()).unwrap();
        assert!(b.is_zero());
        assert_eq!(b.num_terms(), 0);
    }

    #[test]
    fn exact_division_round_trip() {
        // (1 + x2) / x1 times x1 recovers 1 + x2.
        let one = LaurentPoly::one(2);
        let p = one.add(&x(2, 1)).unwrap();
        let q = p.div_exact(&x(2, 0)).unwrap();
        let back = q.mul(&x(2, 0)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn division_with_cancellation() {
        // (x^2 - y^2)/(x - y) = x + y
        let p = x(2, 0).pow(2).add(&x(2, 1).pow(2).neg()).unwrap();
        let d = x(2, 0).add(&x(2, 1).neg()).unwrap();
        let q = p.div_exact(&d).unwrap();
        assert_eq!(q, x(2, 0).add(&x(2, 1)).unwrap());
    }

    #[test]
    fn division_failure_detected() {
        let one = LaurentPoly::one(2);
        let p = one.add(&x(2, 0)).unwrap();
        let d = one.add(&x(2, 1)).unwrap();
        assert_eq!(p.div_exact(&d), Err(LaurentError::NonLaurentDivision));
    }

    #[test]
    fn laurent_divisor_with_negative_exponents() {
        // ((1+x2)/x1) / ((1+x2)/x1) = 1
        let one = LaurentPoly::one(2);
        let p = one.add(&x(2, 1)).unwrap().div_exact(&x(2, 0)).unwrap();
        assert!(p.div_exact(&p).unwrap().is_one());
    }

    #[test]
    fn denominator_exponents_read_minima() {
        let one = LaurentPoly::one(2);
        // (1 + x1 + x2) / (x1 x2)
        let num = one.add(&x(2, 0)).unwrap().add(&x(2, 1)).unwrap();
        let den = x(2, 0).mul(&x(2, 1)).unwrap();
        let v = num.div_exact(&den).unwrap();
        assert_eq!(v.denominator_exponents(2), vec![1, 1]);
        assert_eq!(x(2, 0).denominator_exponents(2), vec![-1, 0]);
    }

    #[test]
    fn identify_vars_merges_monomials() {
        // x1 * x3 with classes {x1,x3} -> y1, x2 -> y2 becomes y1^2.
        let p = x(3, 0).mul(&x(3, 2)).unwrap();
        let q = p.identify_vars(&[0, 1, 0], 2);
        assert_eq!(q, LaurentPoly::monomial(2, vec![2, 0], 1));
    }
}
