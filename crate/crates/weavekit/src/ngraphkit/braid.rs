//! Positive braid words.

use super::NGraphError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A positive braid word on `strands` strands; letters are generator
/// indices in `1..strands`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<usize>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<usize>) -> Result<Self, NGraphError> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= strands) {
            return Err(NGraphError::BadLetter(bad, strands));
        }
        Ok(BraidWord { strands, letters })
    }

    /// `σ_2 σ_1^{a+1} σ_2 σ_1^{b+1} σ_2 σ_1^{c+1}`, the tripod boundary.
    pub fn tripod(a: usize, b: usize, c: usize) -> Self {
        let mut letters = Vec::new();
        for p in [a, b, c] {
            letters.push(2);
            letters.extend(std::iter::repeat(1).take(p + 1));
        }
        BraidWord {
            strands: 3,
            letters,
        }
    }

    /// `σ_1^{n+3}`, the linear-family boundary on two strands.
    pub fn linear(n: usize) -> Self {
        BraidWord {
            strands: 2,
            letters: vec![1; n + 3],
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn rotated(&self, shift: isize) -> Self {
        let n = self.letters.len() as isize;
        if n == 0 {
            return self.clone();
        }
        let shift = shift.rem_euclid(n) as usize;
        let mut letters = Vec::with_capacity(self.letters.len());
        for i in 0..self.letters.len() {
            letters.push(self.letters[(i + self.letters.len() - shift) % self.letters.len()]);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    pub fn color_swapped(&self) -> Self {
        assert_eq!(self.strands, 3);
        BraidWord {
            strands: 3,
            letters: self.letters.iter().map(|&l| 3 - l).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut run: Option<(usize, usize)> = None;
        let mut out = Vec::new();
        for &l in &self.letters {
            match run {
                Some((g, k)) if g == l => run = Some((g, k + 1)),
                Some((g, k)) => {
                    out.push((g, k));
                    run = Some((l, 1));
                }
                None => run = Some((l, 1)),
            }
        }
        if let Some(r) = run {
            out.push(r);
        }
        for (g, k) in out {
            if k == 1 {
                write!(f, "s{g}")?;
            } else {
                write!(f, "s{g}^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tripod_word_shape() {
        let b = BraidWord::tripod(2, 2, 2);
        assert_eq!(b.to_string(), "s2s1^3s2s1^3s2s1^3");
        assert_eq!(b.len(), 12);
    }

    #[test]
    fn bad_letter_rejected() {
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
    }

    #[test]
    fn rotation_shifts_letters() {
        let b = BraidWord::new(3, vec![1, 2, 2]).unwrap();
        assert_eq!(b.rotated(1).letters(), &[2, 1, 2]);
        assert_eq!(b.rotated(-1).letters(), &[2, 2, 1]);
        assert_eq!(b.rotated(3), b);
    }
}
