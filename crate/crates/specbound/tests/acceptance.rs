//! Acceptance suite: one test per criterion, each printing a PASS line
//! (run with `--nocapture` to see them). The criteria pin the product
//! bound, its equality characterization, the bound survey, the cone
//! spectrum prediction, interlacing, the bipartite bound, eigensolver
//! accuracy, and graph6 round-trips.

use std::f64::consts::PI;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use specbound::bounds::{bipartite_product_bound, haemers_bound, product_bound_report};
use specbound::enumeration::{enumerate_connected, independence_number, survey};
use specbound::graph::{make_family, FamilySpec, Graph};
use specbound::graph6::{parse_graph6, to_graph6};
use specbound::interlacing::{interlaces, quotient_matrix, Partition};
use specbound::spectra::{cone_spectrum_predicted, eigenvalues_sym, spectrum};
use specbound::Tolerances;

const TOL: f64 = 1e-7;

fn criterion(number: usize, description: &str) {
    println!("criterion {number}: PASS — {description}");
}

/// All connected graphs on 1..=8 vertices, enumerated once per process.
fn connected(n: usize) -> &'static [Graph] {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        let mut levels = vec![Vec::new()];
        for n in 1..=8 {
            levels.push(enumerate_connected(n).unwrap().collect());
        }
        levels
    });
    &all[n]
}

#[test]
fn criterion_1_survey_table_exact() {
    let expected = [
        (4usize, 4usize, 2usize),
        (5, 19, 14),
        (6, 107, 79),
        (7, 849, 692),
        (8, 11100, 9489),
    ];
    for (n, count, new_wins) in expected {
        let row = survey(n, TOL).unwrap();
        assert_eq!(
            (row.count, row.new_wins),
            (count, new_wins),
            "survey row for order {n}: got {}/{}, want {new_wins}/{count}",
            row.new_wins,
            row.count
        );
        assert_eq!(row.new_wins + row.haemers_wins + row.ties, row.count);
    }
    criterion(1, "survey reproduces 2/4, 14/19, 79/107, 692/849, 9489/11100 exactly");
}

#[test]
fn criterion_2_inequalities_exhaustive() {
    let counts = [1usize, 1, 2, 6, 21, 112, 853, 11117];
    for n in 2..=8usize {
        assert_eq!(connected(n).len(), counts[n - 1], "connected count at order {n}");
        for g in connected(n) {
            let spec = spectrum(g);
            let product = -spec.lambda_min() * spec.lambda_max();
            let profile = g.profile();
            assert!(
                product >= profile.max_degree as f64 - TOL,
                "product bound violated: {g:?}"
            );
            let alpha = independence_number(g).unwrap();
            let haemers = haemers_bound(g, alpha).unwrap();
            assert!(product >= haemers - TOL, "independence bound violated: {g:?}");
        }
    }
    criterion(2, "both inequalities hold on all 12,112 connected graphs of order 2..=8");
}

#[test]
fn criterion_3_equality_characterization_exhaustive() {
    let mut equality_cases = 0usize;
    for n in 2..=8usize {
        for g in connected(n) {
            let report = product_bound_report(g, TOL).unwrap();
            assert_eq!(
                report.equality_within_tol,
                report.witness.is_some(),
                "numerical and structural equality disagree: {g:?} (slack {})",
                report.slack
            );
            equality_cases += usize::from(report.equality_within_tol);
        }
    }
    assert!(equality_cases > 0);
    criterion(
        3,
        "numerical equality coincides with the cone-over-regular-base witness on every graph",
    );
}

#[test]
fn criterion_4_family_suite() {
    let equality_flag = |g: &Graph| {
        let r = product_bound_report(g, TOL).unwrap();
        assert_eq!(r.equality_within_tol, r.witness.is_some());
        r.equality_within_tol
    };

    for n in 2..=10usize {
        let g = make_family(FamilySpec::Complete(n)).unwrap();
        assert!(equality_flag(&g), "K_{n} should be tight");
    }
    for k in 1..=12usize {
        let g = make_family(FamilySpec::Star(k)).unwrap();
        assert!(equality_flag(&g), "S_{k} should be tight");
    }
    for k in 7..=19usize {
        let g = make_family(FamilySpec::Wheel(k)).unwrap();
        assert!(equality_flag(&g), "wheel of order {} should be tight", k + 1);
    }
    for k in 4..=6usize {
        let g = make_family(FamilySpec::Wheel(k)).unwrap();
        assert!(!equality_flag(&g), "wheel of order {} should be strict", k + 1);
    }

    // Cone over the Petersen graph: product is 10, exactly.
    let petersen_cone = make_family(FamilySpec::Kneser(5, 2)).unwrap().cone();
    let r = product_bound_report(&petersen_cone, TOL).unwrap();
    assert!((r.product - 10.0).abs() <= 1e-9, "product {}", r.product);
    assert!(r.equality_within_tol);

    let odd4_cone = make_family(FamilySpec::Kneser(7, 3)).unwrap().cone();
    assert!(equality_flag(&odd4_cone), "cone over O(4) should be tight");

    let q6_cone = make_family(FamilySpec::Hypercube(6)).unwrap().cone();
    assert!(!equality_flag(&q6_cone), "cone over Q6 should be strict");

    let started = Instant::now();
    let q7_cone = make_family(FamilySpec::Hypercube(7)).unwrap().cone();
    assert!(equality_flag(&q7_cone), "cone over Q7 should be tight");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "Q7 cone took {elapsed:?}");

    criterion(4, "family suite verdicts all match (Q7 cone analyzed within budget)");
}

#[test]
fn criterion_5_cone_spectrum_predictions() {
    let circulant = |n: usize, jumps: &[usize]| {
        let mut edges = Vec::new();
        for i in 0..n {
            for &s in jumps {
                edges.push((i, (i + s) % n));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    };

    let mut bases: Vec<Graph> = Vec::new();
    for n in 3..=64usize {
        bases.push(make_family(FamilySpec::Cycle(n)).unwrap());
    }
    for n in 2..=32usize {
        bases.push(make_family(FamilySpec::Complete(n)).unwrap());
    }
    for k in 1..=6usize {
        bases.push(make_family(FamilySpec::Hypercube(k)).unwrap());
    }
    for n in 1..=40usize {
        bases.push(make_family(FamilySpec::Empty(n)).unwrap()); // disconnected
    }
    for n in 8..=24usize {
        for jumps in [&[1usize, 2][..], &[1, 3], &[1, 4], &[2, 3], &[1, 2, 3]] {
            bases.push(circulant(n, jumps));
        }
    }
    assert!(bases.len() >= 200, "only {} bases", bases.len());

    for base in &bases {
        let profile = base.profile();
        let delta = profile.regular_degree.expect("bases are regular by construction");
        let predicted = cone_spectrum_predicted(&spectrum(base), delta, base.order()).unwrap();
        let direct = spectrum(&base.cone());
        assert_eq!(predicted.len(), direct.len());
        for (i, (p, d)) in predicted.iter().zip(direct.values()).enumerate() {
            assert!(
                (p - d).abs() <= TOL,
                "base {base:?}: entry {i} predicted {p}, direct {d}"
            );
        }
    }
    criterion(
        5,
        "predicted cone spectra match direct eigensolves on 200+ regular bases",
    );
}

#[test]
fn criterion_6_interlacing_suites() {
    // Vertex deletion on every connected graph of order 2..=8.
    for n in 2..=8usize {
        for g in connected(n) {
            let outer = spectrum(g);
            for v in g.vertices() {
                let inner = spectrum(&g.delete_vertex(v).unwrap());
                assert!(
                    interlaces(&outer, inner.values(), TOL).unwrap(),
                    "deletion interlacing failed: {g:?} minus {v}"
                );
            }
        }
    }

    // 500 random (graph, partition) pairs with n <= 12.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1ace);
    for case in 0..500 {
        let n = rng.gen_range(2..=12usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        let m = rng.gen_range(1..n);
        let mut cells = vec![Vec::new(); m];
        for (v, cell) in cells.iter_mut().enumerate().take(m) {
            cell.push(v);
        }
        for v in m..n {
            cells[rng.gen_range(0..m)].push(v);
        }
        let p = Partition::new(n, cells).unwrap();
        let inner = quotient_matrix(&g, &p).unwrap().eigenvalues();
        assert!(
            interlaces(&spectrum(&g), &inner, TOL).unwrap(),
            "quotient interlacing failed on case {case}: {g:?}, {p:?}"
        );
    }
    criterion(
        6,
        "vertex-deletion interlacing (all orders ≤ 8) and quotient interlacing (500 random) hold",
    );
}

#[test]
fn criterion_7_bipartite_bound_exhaustive() {
    let mut bipartite_count = 0usize;
    for n in 2..=8usize {
        for g in connected(n) {
            if g.profile().bipartition.is_none() {
                continue;
            }
            bipartite_count += 1;
            let r = bipartite_product_bound(g, TOL).unwrap();
            assert!(r.bound_holds, "bipartite bound violated: {g:?}");
            assert_eq!(
                r.equality, r.is_biregular,
                "equality/biregular disagree: {g:?} (λ² = {}, product = {})",
                r.lambda1_squared,
                r.mean_degree_1 * r.mean_degree_2
            );
        }
    }
    assert!(bipartite_count > 0);
    criterion(
        7,
        "bipartite bound holds with equality exactly on biregular graphs (all orders ≤ 8)",
    );
}

#[test]
fn criterion_8_eigensolver_closed_forms() {
    let accuracy = Tolerances::default().eigen; // 1e-9 per eigenvalue
    let check = move |g: &Graph, mut expected: Vec<f64>, label: &str| {
        expected.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
        let got = eigenvalues_sym(&g.adjacency_rows()).unwrap();
        assert_eq!(got.len(), expected.len(), "{label}: length");
        for (i, (a, e)) in got.iter().zip(&expected).enumerate() {
            assert!(
                (a - e).abs() <= accuracy,
                "{label}: entry {i} got {a}, want {e} (diff {:e})",
                (a - e).abs()
            );
        }
    };

    for n in 2..=30usize {
        let mut vals = vec![-1.0; n];
        vals[0] = (n - 1) as f64;
        check(&make_family(FamilySpec::Complete(n)).unwrap(), vals, "complete");
    }
    for n in 3..=30usize {
        let vals = (0..n).map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect();
        check(&make_family(FamilySpec::Cycle(n)).unwrap(), vals, "cycle");
    }
    for n in 1..=30usize {
        let vals = (1..=n).map(|k| 2.0 * (PI * k as f64 / (n as f64 + 1.0)).cos()).collect();
        check(&make_family(FamilySpec::Path(n)).unwrap(), vals, "path");
    }
    for (a, b) in [(1usize, 1usize), (1, 5), (2, 3), (3, 3), (4, 7), (10, 10)] {
        let mut vals = vec![0.0; a + b];
        vals[0] = ((a * b) as f64).sqrt();
        vals[a + b - 1] = -vals[0];
        check(
            &make_family(FamilySpec::CompleteBipartite(a, b)).unwrap(),
            vals,
            "complete bipartite",
        );
    }
    for k in 1..=7usize {
        let mut vals = Vec::new();
        for i in 0..=k {
            let mult = (0..i).fold(1usize, |acc, j| acc * (k - j) / (j + 1));
            vals.extend(std::iter::repeat_n(k as f64 - 2.0 * i as f64, mult));
        }
        check(&make_family(FamilySpec::Hypercube(k)).unwrap(), vals, "hypercube");
    }
    let mut petersen = vec![3.0];
    petersen.extend(std::iter::repeat_n(1.0, 5));
    petersen.extend(std::iter::repeat_n(-2.0, 4));
    check(&make_family(FamilySpec::Kneser(5, 2)).unwrap(), petersen, "petersen");

    criterion(8, "closed-form spectra matched within 1e-9 per eigenvalue");
}

#[test]
fn criterion_9_graph6_round_trip() {
    for n in 1..=8usize {
        for g in connected(n) {
            let line = to_graph6(g).unwrap();
            let back = parse_graph6(&line).unwrap();
            assert_eq!(&back, g, "decode(encode) changed the graph");
            assert_eq!(to_graph6(&back).unwrap(), line, "re-encoding is not byte-identical");
        }
    }
    // Optional cross-check against an externally generated file.
    if let Ok(path) = std::env::var("SPECBOUND_G6_FILE") {
        let text = std::fs::read_to_string(&path).unwrap();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let g = parse_graph6(line).unwrap();
            assert_eq!(to_graph6(&g).unwrap(), line, "external line {line:?}");
        }
    }
    criterion(9, "graph6 round-trips are byte-identical for every enumerated graph");
}
