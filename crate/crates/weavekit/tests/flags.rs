//! Flag assignment and monodromy: formula identities, the transport
//! route against the closed formulas, GL-invariance, and mutation
//! equivariance.

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weavekit::flagkit::{
    check_equivariance, cross_ratio, extract_seed, generic_boundary_flags, monodromy,
    normalized_transport, solve_face_flags, QVec,
};
use weavekit::ngraphkit::{build_linear, build_tripod, legendrian_mutate};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn rv(xs: [i64; 2]) -> [BigRational; 2] {
    [rat(xs[0]), rat(xs[1])]
}

#[test]
fn cross_ratio_worked_example() {
    let r = cross_ratio(&rv([1, 0]), &rv([0, 1]), &rv([1, 1]), &rv([1, 2])).unwrap();
    assert_eq!(r, BigRational::new(1.into(), 2.into()));
}

#[test]
fn cross_ratio_scaling_invariance() {
    let a = cross_ratio(&rv([1, 0]), &rv([0, 1]), &rv([1, 1]), &rv([1, 2])).unwrap();
    let b = cross_ratio(&rv([5, 0]), &rv([0, 1]), &rv([1, 1]), &rv([1, 2])).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cross_ratio_cyclic_shift_inverts() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut draws = 0;
    while draws < 100 {
        let v: Vec<[BigRational; 2]> = (0..4)
            .map(|_| rv([rng.gen_range(-9..=9), rng.gen_range(-9..=9)]))
            .collect();
        let direct = cross_ratio(&v[0], &v[1], &v[2], &v[3]);
        let shifted = cross_ratio(&v[1], &v[2], &v[3], &v[0]);
        match (direct, shifted) {
            (Ok(a), Ok(b)) => {
                assert_eq!(a * b, BigRational::one());
                draws += 1;
            }
            _ => continue,
        }
    }
}

#[test]
fn generic_flags_deterministic_and_consistent() {
    for (g, _) in [build_linear(3), build_tripod(1, 1, 1), build_tripod(2, 2, 2)] {
        let a = generic_boundary_flags(&g, 42).unwrap();
        let b = generic_boundary_flags(&g, 42).unwrap();
        assert_eq!(a, b);
        let c = generic_boundary_flags(&g, 43).unwrap();
        assert_ne!(a, c);
        solve_face_flags(&g, &a).unwrap();
    }
}

#[test]
fn linear_one_flags_are_four_lines() {
    let (g, _) = build_linear(1);
    let bf = generic_boundary_flags(&g, 7).unwrap();
    assert_eq!(bf.arcs.len(), 4);
    let fa = solve_face_flags(&g, &bf).unwrap();
    let assigned = fa.flags.iter().flatten().count();
    assert_eq!(assigned, 4);
}

#[test]
fn transport_agrees_with_cross_ratio_on_i_cycles() {
    for n in 1..=4 {
        let (g, cycles) = build_linear(n);
        let bf = generic_boundary_flags(&g, 11 + n as u64).unwrap();
        let fa = solve_face_flags(&g, &bf).unwrap();
        for s in cycles.specs() {
            let formula = monodromy(&g, &fa, s).unwrap();
            let engine = normalized_transport(&g, &fa, s).unwrap();
            assert_eq!(formula, engine, "A{n} cycle {}", s.label);
        }
    }
}

#[test]
fn transport_agrees_with_triple_ratio_on_y_cycles() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 1, 3)] {
        let (g, cycles) = build_tripod(a, b, c);
        let bf = generic_boundary_flags(&g, 5).unwrap();
        let fa = solve_face_flags(&g, &bf).unwrap();
        let s = cycles.by_label(1).unwrap();
        let formula = monodromy(&g, &fa, s).unwrap();
        let engine = normalized_transport(&g, &fa, s).unwrap();
        assert_eq!(formula, engine, "tripod ({a},{b},{c})");
    }
}

#[test]
fn gl_invariance_of_monodromies() {
    let (g, cycles) = build_tripod(2, 2, 2);
    let bf = generic_boundary_flags(&g, 23).unwrap();
    let fa = solve_face_flags(&g, &bf).unwrap();
    let (y0, _) = extract_seed(&g, &cycles, &fa).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut count = 0;
    while count < 100 {
        let m: Vec<QVec> = (0..3)
            .map(|_| (0..3).map(|_| rat(rng.gen_range(-9..=9))).collect())
            .collect();
        // Skip singular draws.
        if weavekit::flagkit::det3(&m[0], &m[1], &m[2]) == rat(0) {
            continue;
        }
        let moved = weavekit::flagkit::BoundaryFlags {
            arcs: bf.arcs.iter().map(|f| f.transform(&m)).collect(),
        };
        let fam = solve_face_flags(&g, &moved).unwrap();
        let (y1, _) = extract_seed(&g, &cycles, &fam).unwrap();
        assert_eq!(y0, y1);
        count += 1;
    }
}

#[test]
fn equivariance_on_small_linear_families() {
    for n in 1..=3 {
        let (g, cycles) = build_linear(n);
        for seed in [1, 2, 3, 4, 5] {
            let bf = generic_boundary_flags(&g, seed).unwrap();
            for k in 1..=n {
                assert!(
                    check_equivariance(&g, &cycles, &bf, k).unwrap(),
                    "A{n} cycle {k} seed {seed}"
                );
            }
        }
    }
}

#[test]
fn equivariance_on_small_tripods() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2)] {
        let (g, cycles) = build_tripod(a, b, c);
        let n = a + b + c - 2;
        for seed in [1, 2, 3, 4, 5] {
            let bf = generic_boundary_flags(&g, seed).unwrap();
            for k in 1..=n {
                assert!(
                    check_equivariance(&g, &cycles, &bf, k).unwrap(),
                    "tripod ({a},{b},{c}) cycle {k} seed {seed}"
                );
            }
        }
    }
}

#[test]
fn mutated_i_cycle_monodromy_is_inverse() {
    let (g, cycles) = build_linear(1);
    let bf = generic_boundary_flags(&g, 3).unwrap();
    let fa = solve_face_flags(&g, &bf).unwrap();
    let y = monodromy(&g, &fa, cycles.by_label(1).unwrap()).unwrap();
    let (gm, cm) = legendrian_mutate(&g, &cycles, 1).unwrap();
    let fam = solve_face_flags(&gm, &bf).unwrap();
    let ym = monodromy(&gm, &fam, cm.by_label(1).unwrap()).unwrap();
    assert_eq!(y * ym, BigRational::one());
}
