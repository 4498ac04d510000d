//! Analyze one graph end to end: spectrum, the product bound
//! -λ_min·λ_max ≥ Δ with its equality witness, the independence bound,
//! and (for bipartite graphs) the λ_1² bound.
//!
//!     cargo run --example analyze           # paw graph demo
//!     cargo run --example analyze -- Bw     # any graph6 line
//!     cargo run --example analyze -- "6: 0-1,1-2,2-3,3-4,4-5,5-0"

use specbound::cli::{analyze_graph, parse_edge_list};
use specbound::graph6::parse_graph6;
use specbound::Graph;

fn main() {
    let arg = std::env::args().nth(1);
    let g: Graph = match arg.as_deref() {
        None => Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap(),
        Some(text) if text.contains(':') => parse_edge_list(text).expect("edge list"),
        Some(text) => parse_graph6(text).expect("graph6 line"),
    };

    let report = analyze_graph(&g, 1e-7).expect("connected graph");
    println!("n = {}, edges = {}", report.n, report.edge_count);
    println!("degrees: {:?}", report.degrees);
    println!("spectrum: {:?}", report.spectrum);

    let b = &report.product_bound;
    println!(
        "-λ_min·λ_max = {:.6} vs Δ = {}  (slack {:.6})",
        b.product, b.max_degree, b.slack
    );
    match &b.witness {
        Some(w) => println!(
            "tight: cone vertex {} over a {}-regular base, λ_min(base) = {:.6} ≥ φ = {:.6}",
            w.cone_vertex, w.base_degree, w.base_lambda_min, w.phi_value
        ),
        None => println!("strict: no cone-over-regular-base witness exists"),
    }

    if let (Some(alpha), Some(h), Some(c)) = (report.alpha, report.haemers_bound, &report.comparison)
    {
        println!("α = {alpha}, independence bound αδ²/(n-α) = {h:.6}, winner: {}", c.winner);
    }
    if let Some(bp) = &report.bipartite {
        println!(
            "bipartite: λ_1² = {:.6} vs δ̄_1·δ̄_2 = {:.6} (biregular: {})",
            bp.lambda1_squared,
            bp.mean_degree_1 * bp.mean_degree_2,
            bp.is_biregular
        );
    }
}
