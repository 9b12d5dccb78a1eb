use weavekit::clusterkit::{mutate_y, YSeedNumeric};
use weavekit::flagkit::{generic_boundary_flags, solve_face_flags, transport_monodromy, extract_seed, monodromy};
use weavekit::ngraphkit::{build_tripod, legendrian_mutate, CycleKind};

#[test]
fn dbg() {
    let (g, cycles) = build_tripod(2, 2, 2);
    let bf = generic_boundary_flags(&g, 1).unwrap();
    let fa = solve_face_flags(&g, &bf).unwrap();
    let (y0, q0) = extract_seed(&g, &cycles, &fa).unwrap();
    eprintln!("y0 = {:?}", y0.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    eprintln!("B0 = {:?}", q0.exchange_matrix().rows());
    let seed = YSeedNumeric::new(y0.clone(), q0.exchange_matrix()).unwrap();
    let expect = mutate_y(&seed, 0).unwrap();
    eprintln!("expected y' = {:?}", expect.yvals.iter().map(|v| v.to_string()).collect::<Vec<_>>());
    let (gm, cm) = legendrian_mutate(&g, &cycles, 1).unwrap();
    let fam = solve_face_flags(&gm, &bf).unwrap();
    for s in cm.specs() {
        let raw = transport_monodromy(&gm, &fam, s).unwrap();
        eprintln!("cycle {} kind {:?}: raw={} -raw={} -1/raw={}", s.label, s.kind, raw, -raw.clone(), -raw.recip());
        if s.kind == CycleKind::Y {
            eprintln!("   formula: {}", monodromy(&gm, &fam, s).unwrap());
        }
    }
}
