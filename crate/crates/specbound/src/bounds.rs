//! The product bound `-λ_min·λ_max ≥ Δ`, its structural equality
//! characterization, the independence bound `αδ²/(n−α)`, the bipartite
//! bound `λ_1² ≥ δ̄_1·δ̄_2`, and bound-versus-bound comparison.
//!
//! Equality in the product bound holds exactly when the graph is a cone
//! over a δ-regular base whose minimum eigenvalue is at least
//! `φ(δ, Δ) = (δ − √(δ² + 4Δ)) / 2`. Reports carry both the numerical
//! slack and the structural witness, so any disagreement between the two
//! routes is visible in output rather than hidden.

use serde::Serialize;

use crate::spectra::spectrum_with_tol;
use crate::{Error, Graph, Result};

/// Threshold for the base's minimum eigenvalue in the equality
/// characterization: the smaller root of `x² − δx − Δ`, always negative.
/// Equals `−Δ/r` where `r` is the larger root (the cone's spectral
/// radius when the partition is equitable).
pub fn phi(delta: usize, max_degree: usize) -> Result<f64> {
    if max_degree == 0 {
        return Err(Error::ZeroMaxDegree);
    }
    Ok(phi_real(delta as f64, max_degree as f64))
}

/// `φ` for a real mean degree; used by the quotient-root identities.
pub fn phi_real(delta: f64, max_degree: f64) -> f64 {
    0.5 * (delta - (delta * delta + 4.0 * max_degree).sqrt())
}

/// Outcome of checking `-λ_min·λ_max ≥ Δ` on one connected graph.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub lambda_max: f64,
    pub lambda_min: f64,
    /// `-λ_min·λ_max`.
    pub product: f64,
    /// `product − Δ`; nonnegative (up to tolerance) for connected graphs.
    pub slack: f64,
    pub equality_within_tol: bool,
    /// Structural certificate for equality, independent of `slack`.
    pub witness: Option<EqualityWitness>,
}

/// Certificate that a graph is a cone over a regular base meeting the φ
/// condition — the exact structural shape of the equality case.
#[derive(Clone, Debug, Serialize)]
pub struct EqualityWitness {
    /// The universal vertex (smallest id when several exist).
    pub cone_vertex: usize,
    /// Degree of the regular base `G − cone_vertex`.
    pub base_degree: usize,
    pub base_lambda_min: f64,
    pub phi_value: f64,
    /// `base_lambda_min ≥ phi_value − tol`.
    pub condition_holds: bool,
}

/// Which bound wins a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    New,
    Haemers,
    Tie,
}

impl std::fmt::Display for Winner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Winner::New => write!(f, "new"),
            Winner::Haemers => write!(f, "haemers"),
            Winner::Tie => write!(f, "tie"),
        }
    }
}

/// Product bound Δ versus the independence bound `αδ²/(n−α)`, both as
/// lower bounds on `-λ_min·λ_max`.
#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub new_bound: f64,
    pub haemers_bound: f64,
    pub winner: Winner,
    /// The product bound wins strictly whenever `α` is below this
    /// threshold `n / (1 + δ²/Δ)`.
    pub alpha_threshold: f64,
    pub alpha: usize,
}

/// Outcome of the bipartite bound `λ_1² ≥ δ̄_1·δ̄_2`.
#[derive(Clone, Debug, Serialize)]
pub struct BipartiteBoundReport {
    pub lambda1_squared: f64,
    /// Mean degree of the larger part.
    pub mean_degree_1: f64,
    /// Mean degree of the smaller part.
    pub mean_degree_2: f64,
    pub bound_holds: bool,
    pub equality: bool,
    /// Exact check: both parts have constant degree.
    pub is_biregular: bool,
}

fn require_connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Evaluates the product bound on a connected graph with at least one
/// edge, populating the structural witness whenever one exists.
pub fn product_bound_report(g: &Graph, tol: f64) -> Result<BoundReport> {
    require_connected(g)?;
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOutOfRange {
            order: n,
            reason: "the product bound needs at least 2 vertices",
        });
    }
    let profile = g.profile();
    let spec = spectrum_with_tol(g, tol);
    let lambda_max = spec.lambda_max();
    let lambda_min = spec.lambda_min();
    let product = -lambda_min * lambda_max;
    let slack = product - profile.max_degree as f64;
    Ok(BoundReport {
        n,
        max_degree: profile.max_degree,
        min_degree: profile.min_degree,
        lambda_max,
        lambda_min,
        product,
        slack,
        equality_within_tol: slack.abs() <= tol,
        witness: equality_structure_check(g, tol)?,
    })
}

/// Looks for the structural equality certificate: a universal vertex `u`
/// such that `G − u` is δ-regular with `λ_min(G − u) ≥ φ(δ, n−1) − tol`.
/// Universal vertices are tried in increasing id order, so the witness
/// uses the smallest qualifying vertex.
pub fn equality_structure_check(g: &Graph, tol: f64) -> Result<Option<EqualityWitness>> {
    require_connected(g)?;
    let n = g.order();
    if n < 2 {
        return Ok(None);
    }
    for u in g.vertices() {
        if g.degree(u) != n - 1 {
            continue;
        }
        let base = g.delete_vertex(u)?;
        let Some(delta) = base.profile().regular_degree else {
            continue;
        };
        let base_lambda_min = spectrum_with_tol(&base, tol).lambda_min();
        let phi_value = phi(delta, n - 1)?;
        if base_lambda_min >= phi_value - tol {
            return Ok(Some(EqualityWitness {
                cone_vertex: u,
                base_degree: delta,
                base_lambda_min,
                phi_value,
                condition_holds: true,
            }));
        }
    }
    Ok(None)
}

/// The independence bound `αδ²/(n−α)` on `-λ_min·λ_max`. The exact
/// independence number is supplied by the caller.
pub fn haemers_bound(g: &Graph, alpha: usize) -> Result<f64> {
    let n = g.order();
    if alpha == 0 || alpha >= n {
        return Err(Error::AlphaOutOfRange {
            alpha,
            max: n.saturating_sub(1),
        });
    }
    let delta = g.profile().min_degree as f64;
    Ok(alpha as f64 * delta * delta / (n - alpha) as f64)
}

/// The α value below which the product bound strictly beats the
/// independence bound: `n / (1 + δ²/Δ)`.
pub fn crossover_alpha_threshold(n: usize, min_degree: usize, max_degree: usize) -> Result<f64> {
    if max_degree == 0 {
        return Err(Error::ZeroMaxDegree);
    }
    if min_degree == 0 {
        return Err(Error::ZeroMinDegree);
    }
    let (n, delta, cap) = (n as f64, min_degree as f64, max_degree as f64);
    Ok(n / (1.0 + delta * delta / cap))
}

/// Compares the two lower bounds on a connected graph; wins are strict
/// (beyond `tol`), anything closer is a tie.
pub fn compare_bounds(g: &Graph, alpha: usize, tol: f64) -> Result<Comparison> {
    require_connected(g)?;
    let profile = g.profile();
    let new_bound = profile.max_degree as f64;
    let haemers = haemers_bound(g, alpha)?;
    let winner = if new_bound > haemers + tol {
        Winner::New
    } else if haemers > new_bound + tol {
        Winner::Haemers
    } else {
        Winner::Tie
    };
    Ok(Comparison {
        new_bound,
        haemers_bound: haemers,
        winner,
        alpha_threshold: crossover_alpha_threshold(g.order(), profile.min_degree, profile.max_degree)?,
        alpha,
    })
}

/// Evaluates `λ_1² ≥ δ̄_1·δ̄_2` on a connected bipartite graph. Equality
/// holds exactly for biregular graphs; the report carries both the
/// tolerance-based equality flag and the exact biregularity check.
pub fn bipartite_product_bound(g: &Graph, tol: f64) -> Result<BipartiteBoundReport> {
    require_connected(g)?;
    let profile = g.profile();
    let Some((part1, part2)) = profile.bipartition else {
        return Err(Error::NotBipartite);
    };
    if part2.is_empty() {
        return Err(Error::OrderOutOfRange {
            order: g.order(),
            reason: "the bipartite bound needs two nonempty parts",
        });
    }
    let mean = |part: &[usize]| {
        part.iter().map(|&v| g.degree(v)).sum::<usize>() as f64 / part.len() as f64
    };
    let constant_degree =
        |part: &[usize]| part.iter().all(|&v| g.degree(v) == g.degree(part[0]));
    let lambda1 = spectrum_with_tol(g, tol).lambda_max();
    let lambda1_squared = lambda1 * lambda1;
    let (d1, d2) = (mean(&part1), mean(&part2));
    Ok(BipartiteBoundReport {
        lambda1_squared,
        mean_degree_1: d1,
        mean_degree_2: d2,
        bound_holds: lambda1_squared >= d1 * d2 - tol,
        equality: (lambda1_squared - d1 * d2).abs() <= tol,
        is_biregular: constant_degree(&part1) && constant_degree(&part2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, FamilySpec};
    use crate::interlacing::cone_quotient_roots;
    use crate::Graph;

    const TOL: f64 = 1e-7;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn phi_complete_base() {
        for n in 3..=12usize {
            assert!(close(phi(n - 2, n - 1).unwrap(), -1.0, 1e-12));
        }
    }

    #[test]
    fn phi_empty_base() {
        for n in 2..=12usize {
            let expected = -((n - 1) as f64).sqrt();
            assert!(close(phi(0, n - 1).unwrap(), expected, 1e-12));
        }
    }

    #[test]
    fn phi_odd_graph_values() {
        // φ(k, C(2k-1, k-1)) for k = 3..6 ≈ -2, -4.245, -9, -18.702.
        let cases = [(3usize, 10usize, -2.0), (4, 35, -4.245), (5, 126, -9.0), (6, 462, -18.702)];
        for (k, order, expected) in cases {
            // Reference values are truncated to 3 decimals.
            assert!(
                close(phi(k, order).unwrap(), expected, 1e-3),
                "phi({k},{order})"
            );
        }
    }

    #[test]
    fn phi_rejects_zero_max_degree() {
        assert!(matches!(phi(3, 0), Err(Error::ZeroMaxDegree)));
    }

    #[test]
    fn phi_equals_negated_quotient_ratio() {
        // -Δ/r₁ = φ(δ̄, Δ) where r₁ is the larger cone-quotient root.
        for &delta_bar in &[0.0, 0.5, 1.0, 1.7, 3.0, 10.0] {
            for max_degree in 1..=50usize {
                let (r1, r2) = cone_quotient_roots(delta_bar, max_degree as f64);
                let phi_v = phi_real(delta_bar, max_degree as f64);
                assert!(close(-(max_degree as f64) / r1, phi_v, 1e-9));
                assert!(close(r2, phi_v, 1e-12));
            }
        }
    }

    #[test]
    fn report_petersen_cone_equality() {
        let g = make_family(FamilySpec::Kneser(5, 2)).unwrap().cone();
        let r = product_bound_report(&g, TOL).unwrap();
        assert_eq!(r.max_degree, 10);
        assert!(close(r.product, 10.0, 1e-9));
        assert!(r.equality_within_tol);
        let w = r.witness.unwrap();
        assert_eq!(w.cone_vertex, 10);
        assert_eq!(w.base_degree, 3);
    }

    #[test]
    fn report_k4_equality() {
        let g = make_family(FamilySpec::Complete(4)).unwrap();
        let r = product_bound_report(&g, TOL).unwrap();
        assert_eq!(r.max_degree, 3);
        assert!(close(r.product, 3.0, 1e-9));
        assert!(r.equality_within_tol);
        assert_eq!(r.witness.unwrap().cone_vertex, 0);
    }

    #[test]
    fn report_p4_strict() {
        let g = make_family(FamilySpec::Path(4)).unwrap();
        let r = product_bound_report(&g, TOL).unwrap();
        let golden = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!(close(r.product, golden * golden, 1e-9));
        assert!(r.slack > 0.5);
        assert!(!r.equality_within_tol);
        assert!(r.witness.is_none());
    }

    #[test]
    fn report_rejects_disconnected_and_tiny() {
        let two = Graph::from_edges(2, &[]).unwrap();
        assert!(matches!(product_bound_report(&two, TOL), Err(Error::Disconnected)));
        let one = Graph::from_edges(1, &[]).unwrap();
        assert!(matches!(
            product_bound_report(&one, TOL),
            Err(Error::OrderOutOfRange { .. })
        ));
    }

    #[test]
    fn witness_absent_for_w5() {
        // Cone over C5: λ_min(C5) = 2cos(4π/5) ≈ -1.618 < φ(2,5) ≈ -1.449.
        let g = make_family(FamilySpec::Wheel(5)).unwrap();
        assert!(equality_structure_check(&g, TOL).unwrap().is_none());
        let r = product_bound_report(&g, TOL).unwrap();
        assert!(!r.equality_within_tol);
    }

    #[test]
    fn witness_present_for_complete() {
        for n in 2..=8usize {
            let g = make_family(FamilySpec::Complete(n)).unwrap();
            let w = equality_structure_check(&g, TOL).unwrap().unwrap();
            assert_eq!(w.cone_vertex, 0);
            assert_eq!(w.base_degree, n - 2);
            if n > 2 {
                assert!(close(w.base_lambda_min, -1.0, 1e-9));
                assert!(close(w.phi_value, -1.0, 1e-12));
            }
        }
    }

    #[test]
    fn witness_present_for_w7() {
        // λ_min(C7) ≈ -1.8019 ≥ φ(2,7) = 1 - 2√2 ≈ -1.8284.
        let g = make_family(FamilySpec::Wheel(7)).unwrap();
        let w = equality_structure_check(&g, TOL).unwrap().unwrap();
        assert_eq!(w.cone_vertex, 7);
        assert!(close(w.phi_value, 1.0 - 2.0 * 2.0f64.sqrt(), 1e-12));
        assert!(w.base_lambda_min >= w.phi_value);
    }

    #[test]
    fn haemers_examples() {
        let c4 = make_family(FamilySpec::Cycle(4)).unwrap();
        assert!(close(haemers_bound(&c4, 2).unwrap(), 4.0, 1e-12));

        for (a, b) in [(2usize, 3usize), (3, 3), (1, 5)] {
            let g = make_family(FamilySpec::CompleteBipartite(a, b)).unwrap();
            assert!(close(haemers_bound(&g, a.max(b)).unwrap(), (a * b) as f64, 1e-12));
        }

        assert!(close(haemers_bound(&paw(), 2).unwrap(), 1.0, 1e-12));
    }

    #[test]
    fn haemers_alpha_range() {
        let g = make_family(FamilySpec::Cycle(4)).unwrap();
        assert!(matches!(haemers_bound(&g, 0), Err(Error::AlphaOutOfRange { .. })));
        assert!(matches!(haemers_bound(&g, 4), Err(Error::AlphaOutOfRange { .. })));
    }

    #[test]
    fn crossover_examples() {
        assert!(close(crossover_alpha_threshold(4, 1, 3).unwrap(), 3.0, 1e-12));
        assert!(close(crossover_alpha_threshold(4, 2, 3).unwrap(), 12.0 / 7.0, 1e-12));
        for (n, k) in [(10usize, 3usize), (24, 5)] {
            assert!(close(
                crossover_alpha_threshold(n, k, k).unwrap(),
                n as f64 / (1.0 + k as f64),
                1e-12
            ));
        }
        assert!(matches!(crossover_alpha_threshold(4, 0, 3), Err(Error::ZeroMinDegree)));
        assert!(matches!(crossover_alpha_threshold(4, 1, 0), Err(Error::ZeroMaxDegree)));
    }

    #[test]
    fn compare_examples() {
        let p4 = make_family(FamilySpec::Path(4)).unwrap();
        assert_eq!(compare_bounds(&p4, 2, TOL).unwrap().winner, Winner::New);

        let s3 = make_family(FamilySpec::Star(3)).unwrap();
        let c = compare_bounds(&s3, 3, TOL).unwrap();
        assert_eq!(c.winner, Winner::Tie);
        assert!(close(c.new_bound, 3.0, 1e-12) && close(c.haemers_bound, 3.0, 1e-12));

        assert_eq!(compare_bounds(&diamond(), 2, TOL).unwrap().winner, Winner::Haemers);
    }

    #[test]
    fn bipartite_k23_equality() {
        let g = make_family(FamilySpec::CompleteBipartite(2, 3)).unwrap();
        let r = bipartite_product_bound(&g, TOL).unwrap();
        assert!(close(r.lambda1_squared, 6.0, 1e-9));
        assert!(close(r.mean_degree_1 * r.mean_degree_2, 6.0, 1e-12));
        assert!(r.bound_holds && r.equality && r.is_biregular);
    }

    #[test]
    fn bipartite_p4_strict() {
        let g = make_family(FamilySpec::Path(4)).unwrap();
        let r = bipartite_product_bound(&g, TOL).unwrap();
        assert!(close(r.mean_degree_1, 1.5, 1e-12));
        assert!(close(r.mean_degree_2, 1.5, 1e-12));
        assert!(r.bound_holds && !r.equality && !r.is_biregular);
    }

    #[test]
    fn bipartite_star_equality() {
        let g = make_family(FamilySpec::Star(4)).unwrap();
        let r = bipartite_product_bound(&g, TOL).unwrap();
        assert!(close(r.lambda1_squared, 4.0, 1e-9));
        assert!(close(r.mean_degree_1 * r.mean_degree_2, 4.0, 1e-12));
        assert!(r.equality && r.is_biregular);
    }

    #[test]
    fn bipartite_rejects_odd_cycles() {
        let c5 = make_family(FamilySpec::Cycle(5)).unwrap();
        assert!(matches!(bipartite_product_bound(&c5, TOL), Err(Error::NotBipartite)));
    }
}
