//! The cone spectrum rule: for a δ-regular base on m vertices, the cone
//! keeps every base eigenvalue except one copy of δ and adds the two
//! roots of x² − δx − m. This example predicts cone spectra from base
//! spectra alone and checks them against direct eigensolves.
//!
//!     cargo run --example cone_spectra

use specbound::graph::{make_family, FamilySpec};
use specbound::spectra::{cone_spectrum_predicted, spectrum};

fn main() {
    let bases = [
        ("C5 (wheel rim)", make_family(FamilySpec::Cycle(5)).unwrap()),
        ("K6", make_family(FamilySpec::Complete(6)).unwrap()),
        ("Petersen", make_family(FamilySpec::Kneser(5, 2)).unwrap()),
        ("Q4", make_family(FamilySpec::Hypercube(4)).unwrap()),
        ("8 isolated vertices (star base)", make_family(FamilySpec::Empty(8)).unwrap()),
    ];

    for (name, base) in bases {
        let delta = base.profile().regular_degree.expect("regular base");
        let predicted = cone_spectrum_predicted(&spectrum(&base), delta, base.order()).unwrap();
        let direct = spectrum(&base.cone());
        let worst = predicted
            .iter()
            .zip(direct.values())
            .map(|(p, d)| (p - d).abs())
            .fold(0.0f64, f64::max);
        println!("cone over {name}: {} eigenvalues, max |predicted - direct| = {worst:.3e}", predicted.len());
        println!("  predicted extremes: λ_max = {:.6}, λ_min = {:.6}", predicted[0], predicted[predicted.len() - 1]);
        assert!(worst <= 1e-7);
    }
    println!("all predictions confirmed by the eigensolver");
}
