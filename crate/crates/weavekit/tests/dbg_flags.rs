use weavekit::flagkit::generic_boundary_flags;
use weavekit::ngraphkit::{build_linear, build_tripod};

#[test]
fn dbg() {
    for n in 1..=4 {
        let (g, _) = build_linear(n);
        eprintln!("A{n}: {:?}", generic_boundary_flags(&g, 42).map(|b| b.arcs.len()));
    }
    let (g, _) = build_tripod(1, 1, 1);
    // Faces and their arcs.
    for (i, f) in g.faces().iter().enumerate() {
        eprintln!("face {i}: material={} arcs={:?}", f.material, f.arcs);
    }
    eprintln!("tripod111: {:?}", generic_boundary_flags(&g, 42).map(|b| b.arcs.len()));
}
