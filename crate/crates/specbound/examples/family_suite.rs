//! Walk the named families and show where the product bound is tight:
//! complete graphs and stars always, wheels from order 8 on (plus K4),
//! cones over odd graphs always, cones over hypercubes from dimension 7.
//!
//!     cargo run --example family_suite

use specbound::bounds::product_bound_report;
use specbound::graph::{make_family, FamilySpec, Graph};

fn verdict(g: &Graph) -> (String, f64) {
    let r = product_bound_report(g, 1e-7).unwrap();
    let v = if r.equality_within_tol { "equality" } else { "strict" };
    (format!("{v:9} (slack {:+.6})", r.slack), r.slack)
}

fn main() {
    println!("{:<28} {:>6}  verdict", "graph", "order");
    let mut rows: Vec<(String, Graph)> = Vec::new();
    for n in [3usize, 6, 10] {
        rows.push((format!("complete K_{n}"), make_family(FamilySpec::Complete(n)).unwrap()));
    }
    for k in [4usize, 12] {
        rows.push((format!("star S_{k}"), make_family(FamilySpec::Star(k)).unwrap()));
    }
    for k in 4..=9usize {
        rows.push((format!("wheel W_{k}"), make_family(FamilySpec::Wheel(k)).unwrap()));
    }
    rows.push((
        "cone over Petersen".into(),
        make_family(FamilySpec::Kneser(5, 2)).unwrap().cone(),
    ));
    rows.push((
        "cone over O(4) = K(7,3)".into(),
        make_family(FamilySpec::Kneser(7, 3)).unwrap().cone(),
    ));
    for k in [5usize, 6, 7] {
        rows.push((
            format!("cone over Q{k}"),
            make_family(FamilySpec::Hypercube(k)).unwrap().cone(),
        ));
    }

    for (name, g) in rows {
        let (text, _) = verdict(&g);
        println!("{name:<28} {:>6}  {text}", g.order());
    }
}
