//! Quivers from brick diagrams of positive 3-strand braid words.
//!
//! A brick in row `g` spans two consecutive occurrences of the generator
//! `σ_g`. Consecutive bricks in a row are joined left to right; bricks in
//! different rows that interleave get a crossing arrow from the one that
//! opens later.

use super::quiver::Quiver;
use crate::ngraphkit::BraidWord;

pub fn quiver_from_brick(beta: &BraidWord) -> Quiver {
    // Bricks as (generator, open position, close position).
    let mut bricks: Vec<(usize, usize, usize)> = Vec::new();
    let gens: Vec<usize> = (1..beta.strands()).collect();
    for &g in &gens {
        let positions: Vec<usize> = beta
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == g)
            .map(|(i, _)| i)
            .collect();
        for w in positions.windows(2) {
            bricks.push((g, w[0], w[1]));
        }
    }
    bricks.sort_by_key(|&(g, open, _)| (g, open));
    let n = bricks.len();
    let mut q = Quiver::new(n, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (gi, oi, ci) = bricks[i];
            let (gj, oj, cj) = bricks[j];
            if gi == gj {
                // Consecutive in a row share an endpoint.
                if ci == oj {
                    q.add_arrow(i, j, 1);
                }
            } else if oi < oj && oj < ci && ci < cj {
                // j opens inside i and closes after it: arrow j -> i.
                q.add_arrow(j, i, 1);
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ngraphkit::BraidWord;
    use crate::rootdata::DynkinType;

    #[test]
    fn power_of_sigma1_gives_linear_path() {
        // σ1^{n+1} has n bricks joined consecutively.
        let n = 4;
        let beta = BraidWord::new(3, vec![1; n + 1]).unwrap();
        let q = quiver_from_brick(&beta);
        assert_eq!(q.m(), n);
        for i in 0..n - 1 {
            assert_eq!(q.b(i, i + 1), 1);
        }
        assert_eq!(q.b(0, 2), 0);
    }

    #[test]
    fn sigma1_sigma2_has_no_bricks() {
        let beta = BraidWord::new(3, vec![1, 2]).unwrap();
        let q = quiver_from_brick(&beta);
        assert_eq!(q.m(), 0);
    }

    #[test]
    fn small_tripod_brick_word_is_type_a3() {
        // σ1 σ2 σ1 σ2 σ2 realizes the (1,2,2) word; its brick quiver is
        // mutation equivalent to the tripod with three vertices.
        let beta = BraidWord::new(3, vec![1, 2, 1, 2, 2]).unwrap();
        let q = quiver_from_brick(&beta);
        assert_eq!(q.m(), 3);
        assert_eq!(
            q.finite_type(1000),
            Some(vec![DynkinType::parse("A3").unwrap()])
        );
    }

    #[test]
    fn bigger_tripod_brick_word_matches_tripod_type() {
        // σ1 σ2^2 σ1^2 σ2^3 is the (2,3,3) word; the tripod Q(2,3,3) is E6.
        let beta = BraidWord::new(3, vec![1, 2, 2, 1, 1, 2, 2, 2]).unwrap();
        let q = quiver_from_brick(&beta);
        assert_eq!(q.m(), 6);
        assert_eq!(
            q.finite_type(100_000),
            Some(vec![DynkinType::parse("E6").unwrap()])
        );
    }
}
