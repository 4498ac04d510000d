//! Eigenvalue interlacing in its two standard shapes: spectra of induced
//! subgraphs (vertex deletion) and spectra of quotient matrices of
//! vertex partitions — plus equitable partitions and tight interlacing
//! on a cone.
//!
//!     cargo run --example interlacing_tour

use specbound::graph::{make_family, FamilySpec};
use specbound::interlacing::{
    interlaces, is_equitable, quotient_matrix, tight_interlacing_index, Partition,
};
use specbound::spectra::spectrum;

fn main() {
    let petersen = make_family(FamilySpec::Kneser(5, 2)).unwrap();
    let outer = spectrum(&petersen);
    println!("Petersen spectrum: {:?}", outer.values());

    // Case 1: induced subgraphs. Delete each vertex in turn.
    for v in petersen.vertices().take(3) {
        let inner = spectrum(&petersen.delete_vertex(v).unwrap());
        println!(
            "delete vertex {v}: interlaces = {}",
            interlaces(&outer, inner.values(), 1e-7).unwrap()
        );
    }

    // Case 2: quotient matrices. The hub/rim partition of a wheel is
    // equitable; its quotient eigenvalues are graph eigenvalues.
    let w9 = make_family(FamilySpec::Wheel(9)).unwrap();
    let hub_rim = Partition::vertex_and_rest(10, 9).unwrap();
    let q = quotient_matrix(&w9, &hub_rim).unwrap();
    println!(
        "wheel W9 hub/rim partition: equitable = {}, quotient = {:?}",
        is_equitable(&w9, &hub_rim).unwrap(),
        q.entries()
    );
    let w9_spec = spectrum(&w9);
    let inner = q.eigenvalues();
    println!(
        "quotient eigenvalues {:?} interlace: {}",
        inner,
        interlaces(&w9_spec, &inner, 1e-7).unwrap()
    );
    println!(
        "tight interlacing index: {:?} (the wheel meets the product bound with equality)",
        tight_interlacing_index(&w9_spec, &inner, 1e-7).unwrap()
    );

    // A partition that is not equitable still interlaces.
    let p4 = make_family(FamilySpec::Path(4)).unwrap();
    let lopsided = Partition::new(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
    let q = quotient_matrix(&p4, &lopsided).unwrap();
    println!(
        "P4 lopsided partition: equitable = {}, quotient eigenvalues = {:?}, interlaces = {}",
        is_equitable(&p4, &lopsided).unwrap(),
        q.eigenvalues(),
        interlaces(&spectrum(&p4), &q.eigenvalues(), 1e-7).unwrap()
    );
}
