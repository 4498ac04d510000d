//! Vertex partitions, quotient matrices, equitable-partition detection,
//! and interlacing checks.
//!
//! For a partition of the vertex set into cells `U_1, …, U_m`, the
//! quotient matrix holds the average number of neighbors a vertex of
//! `U_i` has in `U_j`. Its eigenvalues interlace the adjacency spectrum,
//! and when the interlacing is tight the partition is equitable.

use crate::spectra::{is_descending, Spectrum};
use crate::{eigenvalues_sym, Error, Graph, Result};

/// An ordered partition of `0..n-1` into nonempty disjoint cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates that `cells` are nonempty, disjoint, in range, and cover
    /// `0..n-1`. Cell order is preserved; vertices within a cell are
    /// sorted.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Partition> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        if cells.is_empty() {
            return bad("no cells".into());
        }
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        let mut cells = cells;
        for (i, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return bad(format!("cell {i} is empty"));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return bad(format!("vertex {v} out of range for order {n}"));
                }
                if seen[v] {
                    return bad(format!("vertex {v} appears in two cells"));
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return bad(format!("cells cover {covered} of {n} vertices"));
        }
        Ok(Partition { n, cells })
    }

    /// The 2-cell partition `{v}, V∖{v}` used for cone-style quotients.
    pub fn vertex_and_rest(n: usize, v: usize) -> Result<Partition> {
        if n < 2 {
            return Err(Error::InvalidPartition(format!(
                "order {n} too small for a 2-cell partition"
            )));
        }
        let rest: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        Partition::new(n, vec![vec![v], rest])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }
}

/// Quotient matrix of a partition: entry `(i, j)` is the average number
/// of neighbors in cell `j` over the vertices of cell `i`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix {
    cell_sizes: Vec<usize>,
    /// `pair_counts[i][j]` = Σ over u in cell i of |N(u) ∩ cell j|; exact.
    pair_counts: Vec<Vec<u64>>,
    entries: Vec<Vec<f64>>,
}

impl QuotientMatrix {
    pub fn entries(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn cell_sizes(&self) -> &[usize] {
        &self.cell_sizes
    }

    pub fn dim(&self) -> usize {
        self.cell_sizes.len()
    }

    /// Eigenvalues of the quotient, sorted descending.
    ///
    /// The quotient B is not symmetric, but D^{1/2} B D^{-1/2} is (D =
    /// diag of cell sizes), because `|U_i|·b_ij = |U_j|·b_ji` is an exact
    /// edge count. The symmetrized matrix goes to the Jacobi solver.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let m = self.dim();
        let rows: Vec<Vec<f64>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        self.pair_counts[i][j] as f64
                            / (self.cell_sizes[i] as f64 * self.cell_sizes[j] as f64).sqrt()
                    })
                    .collect()
            })
            .collect();
        eigenvalues_sym(&rows).expect("symmetrized quotient is symmetric and finite")
    }
}

/// Computes the quotient matrix of `p` on `g`.
pub fn quotient_matrix(g: &Graph, p: &Partition) -> Result<QuotientMatrix> {
    if p.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices but the graph has {}",
            p.order(),
            g.order()
        )));
    }
    let m = p.num_cells();
    let mut cell_of = vec![0usize; g.order()];
    for (i, cell) in p.cells().iter().enumerate() {
        for &v in cell {
            cell_of[v] = i;
        }
    }
    let mut pair_counts = vec![vec![0u64; m]; m];
    for u in g.vertices() {
        for v in g.neighbors(u) {
            pair_counts[cell_of[u]][cell_of[v]] += 1;
        }
    }
    let cell_sizes: Vec<usize> = p.cells().iter().map(|c| c.len()).collect();
    let entries: Vec<Vec<f64>> = (0..m)
        .map(|i| (0..m).map(|j| pair_counts[i][j] as f64 / cell_sizes[i] as f64).collect())
        .collect();
    Ok(QuotientMatrix { cell_sizes, pair_counts, entries })
}

/// True iff every vertex of cell `i` has the same number of neighbors in
/// cell `j`, for all ordered cell pairs (an equitable partition).
pub fn is_equitable(g: &Graph, p: &Partition) -> Result<bool> {
    if p.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition is over {} vertices but the graph has {}",
            p.order(),
            g.order()
        )));
    }
    let mut cell_of = vec![0usize; g.order()];
    for (i, cell) in p.cells().iter().enumerate() {
        for &v in cell {
            cell_of[v] = i;
        }
    }
    let m = p.num_cells();
    for cell in p.cells() {
        let mut reference: Option<Vec<usize>> = None;
        for &u in cell {
            let mut counts = vec![0usize; m];
            for v in g.neighbors(u) {
                counts[cell_of[v]] += 1;
            }
            match &reference {
                None => reference = Some(counts),
                Some(r) if *r != counts => return Ok(false),
                Some(_) => {}
            }
        }
    }
    Ok(true)
}

/// True iff `inner` interlaces the outer spectrum: with outer values
/// `λ_1 ≥ … ≥ λ_n` and inner values `μ_1 ≥ … ≥ μ_m` (m < n),
/// `λ_i + tol ≥ μ_i` and `μ_i ≥ λ_{n-m+i} − tol` for all i. Ties at the
/// tolerance boundary count as interlacing.
pub fn interlaces(outer: &Spectrum, inner: &[f64], tol: f64) -> Result<bool> {
    let n = outer.len();
    let m = inner.len();
    if m >= n || m == 0 {
        return Err(Error::InterlacingSize { inner: m, outer: n });
    }
    if !is_descending(inner) {
        return Err(Error::UnsortedEigenvalues);
    }
    let lam = outer.values();
    Ok((0..m).all(|i| lam[i] + tol >= inner[i] && inner[i] >= lam[n - m + i] - tol))
}

/// The tightness index of an interlacing: the smallest k in `0..=m` such
/// that `μ_i = λ_i` (within tol) for `i ≤ k` and `μ_i = λ_{n-m+i}` for
/// `i > k`. `None` when no such split exists; an error when the inputs do
/// not interlace at all.
pub fn tight_interlacing_index(
    outer: &Spectrum,
    inner: &[f64],
    tol: f64,
) -> Result<Option<usize>> {
    if !interlaces(outer, inner, tol)? {
        return Err(Error::NotInterlacing);
    }
    let n = outer.len();
    let m = inner.len();
    let lam = outer.values();
    let top_match = |i: usize| (inner[i] - lam[i]).abs() <= tol;
    let bottom_match = |i: usize| (inner[i] - lam[n - m + i]).abs() <= tol;
    for k in 0..=m {
        if (0..k).all(top_match) && (k..m).all(bottom_match) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Closed-form eigenvalues `(larger, smaller)` of the 2×2 cone quotient
/// `[[0, Δ], [1, δ̄]]`: the roots of `x² − δ̄x − Δ`, i.e.
/// `(δ̄ ± √(δ̄² + 4Δ)) / 2`. Kept independent of the Jacobi kernel so the
/// bound's central computation has a second route.
pub fn cone_quotient_roots(mean_degree: f64, max_degree: f64) -> (f64, f64) {
    let disc = (mean_degree * mean_degree + 4.0 * max_degree).sqrt();
    ((mean_degree + disc) / 2.0, (mean_degree - disc) / 2.0)
}
