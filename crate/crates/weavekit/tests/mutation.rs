//! Surgery-level checks: quiver functoriality of Legendrian mutation,
//! the rotation form of the Coxeter mutation on the linear family, and
//! the padding form on tripods.

use weavekit::clusterkit::{coxeter_mutation_quiver, mutate_quiver};
use weavekit::ngraphkit::{
    build_linear, build_tripod, color_swap, concat_annulus_graph, coxeter_padding,
    legendrian_coxeter_mutation, legendrian_coxeter_power, legendrian_mutate, quiver_of, rotate,
    CycleKind,
};

#[test]
fn i_mutation_functorial_on_linear_family() {
    for n in 1..=6 {
        let (g, cycles) = build_linear(n);
        let q0 = quiver_of(&g, &cycles).unwrap();
        for k in 1..=n {
            let (gm, cm) = legendrian_mutate(&g, &cycles, k).unwrap();
            gm.validate().unwrap();
            let got = quiver_of(&gm, &cm).unwrap();
            let expect = mutate_quiver(&q0, k - 1).unwrap();
            assert_eq!(got, expect, "A{n} direction {k}");
            // Boundary untouched.
            assert_eq!(gm.boundary_word(), g.boundary_word());
        }
    }
}

#[test]
fn i_mutation_twice_restores_quiver() {
    let (g, cycles) = build_linear(4);
    for k in 1..=4 {
        let (g1, c1) = legendrian_mutate(&g, &cycles, k).unwrap();
        let (g2, c2) = legendrian_mutate(&g1, &c1, k).unwrap();
        assert_eq!(
            quiver_of(&g2, &c2).unwrap(),
            quiver_of(&g, &cycles).unwrap()
        );
    }
}

#[test]
fn y_mutation_functorial_on_tripods() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 1, 3), (3, 3, 3)] {
        let (g, cycles) = build_tripod(a, b, c);
        let q0 = quiver_of(&g, &cycles).unwrap();
        let (gm, cm) = legendrian_mutate(&g, &cycles, 1).unwrap();
        gm.validate().unwrap();
        let got = quiver_of(&gm, &cm).unwrap();
        let expect = mutate_quiver(&q0, 0).unwrap();
        assert_eq!(got, expect, "tripod ({a},{b},{c}) central mutation");
        assert_eq!(gm.boundary_word(), g.boundary_word());
        // Neighbors became long I-cycles.
        if a >= 2 {
            assert_eq!(cm.by_label(2).unwrap().kind, CycleKind::LongI);
        }
    }
}

#[test]
fn y_mutation_twice_restores_quiver() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2)] {
        let (g, cycles) = build_tripod(a, b, c);
        let (g1, c1) = legendrian_mutate(&g, &cycles, 1).unwrap();
        let (g2, c2) = legendrian_mutate(&g1, &c1, 1).unwrap();
        g2.validate().unwrap();
        assert_eq!(
            quiver_of(&g2, &c2).unwrap(),
            quiver_of(&g, &cycles).unwrap(),
            "tripod ({a},{b},{c})"
        );
    }
}

#[test]
fn leg_mutation_functorial_on_tripods() {
    for (a, b, c) in [(2, 2, 2), (3, 2, 2), (2, 3, 3)] {
        let (g, cycles) = build_tripod(a, b, c);
        let q0 = quiver_of(&g, &cycles).unwrap();
        let n = a + b + c - 2;
        for k in 2..=n {
            let (gm, cm) = legendrian_mutate(&g, &cycles, k).unwrap();
            let got = quiver_of(&gm, &cm).unwrap();
            assert_eq!(
                got,
                mutate_quiver(&q0, k - 1).unwrap(),
                "tripod ({a},{b},{c}) direction {k}"
            );
        }
    }
}

#[test]
fn coxeter_mutation_of_linear_family_is_one_step_rotation() {
    for n in 1..=6 {
        let (g, cycles) = build_linear(n);
        let (gm, _) = legendrian_coxeter_mutation(&g, &cycles).unwrap();
        let cw = rotate(&g, -1).unwrap();
        let ccw = rotate(&g, 1).unwrap();
        let got = gm.canonical_form();
        assert!(
            got == cw.canonical_form() || got == ccw.canonical_form(),
            "A{n}: Coxeter mutation is not a one-step rotation"
        );
        assert_eq!(
            got,
            cw.canonical_form(),
            "A{n}: rotation direction differs from the clockwise convention"
        );
    }
}

#[test]
fn coxeter_mutation_of_tripod_is_padded_swap() {
    for (a, b, c) in [(1, 1, 1), (2, 2, 2), (2, 1, 3)] {
        let (g, cycles) = build_tripod(a, b, c);
        let (gm, cm) = legendrian_coxeter_mutation(&g, &cycles).unwrap();
        gm.validate().unwrap();
        let pad = coxeter_padding(a, b, c, false);
        let swapped = color_swap(&g).unwrap();
        let (expect, _) = concat_annulus_graph(&pad, &swapped, 0).unwrap();
        assert_eq!(gm.canonical_form(), expect.canonical_form());
        // The induced quiver matches the Coxeter mutation downstairs.
        let q0 = quiver_of(&g, &cycles).unwrap();
        let expect_q = coxeter_mutation_quiver(&q0).unwrap();
        assert_eq!(quiver_of(&gm, &cm).unwrap(), expect_q);
    }
}

#[test]
fn coxeter_powers_stay_valid_and_keep_the_quiver_dynamics() {
    for r in 0..4 {
        let (g, cycles) = legendrian_coxeter_power(2, 2, 2, r).unwrap();
        g.validate().unwrap();
        let q = quiver_of(&g, &cycles).unwrap();
        // μ_Q on the bipartite tripod quiver returns the same matrix, so
        // every power carries the tripod quiver.
        let (g0, c0) = build_tripod(2, 2, 2);
        assert_eq!(q, quiver_of(&g0, &c0).unwrap(), "power {r}");
    }
}
