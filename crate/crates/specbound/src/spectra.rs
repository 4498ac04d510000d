//! Dense symmetric eigensolver and spectrum-level utilities.
//!
//! The solver is a cyclic Jacobi iteration: plane rotations annihilate
//! off-diagonal entries in a fixed row-major order, sweeping until the
//! off-diagonal Frobenius norm drops below `1e-12` times the Frobenius
//! norm of the input (hard cap 100 sweeps). This is robust, deterministic,
//! and accurate to ~1e-12 relative for the orders handled here (≤ a few
//! hundred); no external numerical dependency is involved.

use crate::{Error, Graph, Result, DEFAULT_TOL};

const REL_OFF_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// The descending adjacency eigenvalues of a graph, with the tolerance
/// used for downstream equality comparisons.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    /// Wraps an already-descending list of eigenvalues.
    pub fn new(values: Vec<f64>, tolerance: f64) -> Result<Spectrum> {
        if values.is_empty() {
            return Err(Error::BadMatrixShape);
        }
        if !is_descending(&values) {
            return Err(Error::UnsortedEigenvalues);
        }
        Ok(Spectrum { values, tolerance })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor requires at least one value
    }

    pub fn lambda_max(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.values.last().expect("nonempty")
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Distinct values with multiplicities, grouping entries closer than
    /// the spectrum's tolerance.
    pub fn distinct(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((rep, count)) if (*rep - v).abs() <= self.tolerance => *count += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

pub(crate) fn is_descending(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

/// All eigenvalues (with multiplicity) of a real symmetric matrix,
/// sorted descending. Rejects asymmetric (beyond 1e-12 absolute),
/// non-finite, or non-square input.
pub fn eigenvalues_sym(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::BadMatrixShape);
    }
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFiniteEntry { row: i, col: j });
            }
        }
    }
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in i + 1..n {
            let diff = (rows[i][j] - rows[j][i]).abs();
            if diff > 1e-12 {
                return Err(Error::NotSymmetric { row: i, col: j, diff });
            }
        }
    }
    let mut a: Vec<f64> = rows.iter().flat_map(|r| r.iter().copied()).collect();
    jacobi(&mut a, n)
}

/// Cyclic Jacobi on a row-major n×n symmetric matrix (destroyed in place).
fn jacobi(a: &mut [f64], n: usize) -> Result<Vec<f64>> {
    let frobenius: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = REL_OFF_TOL * frobenius;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    while off_norm(a) > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                // Smaller-magnitude root of t² + 2τt − 1 = 0.
                let t = if tau.abs() > 1e150 {
                    0.5 / tau
                } else if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (tau - (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    let new_kp = c * akp - s * akq;
                    let new_kq = s * akp + c * akq;
                    a[k * n + p] = new_kp;
                    a[p * n + k] = new_kp;
                    a[k * n + q] = new_kq;
                    a[q * n + k] = new_kq;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_unstable_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok(values)
}

/// Adjacency spectrum of a graph with the default comparison tolerance.
pub fn spectrum(g: &Graph) -> Spectrum {
    spectrum_with_tol(g, DEFAULT_TOL)
}

/// Adjacency spectrum with an explicit comparison tolerance.
pub fn spectrum_with_tol(g: &Graph, tol: f64) -> Spectrum {
    let values = eigenvalues_sym(&g.adjacency_rows())
        .expect("adjacency matrices are symmetric, finite, and converge");
    debug_assert!({
        let n = g.order() as f64;
        let trace: f64 = values.iter().sum();
        let squares: f64 = values.iter().map(|v| v * v).sum();
        let max_degree = *g.degrees().iter().max().expect("n >= 1") as f64;
        let avg_degree = 2.0 * g.edge_count() as f64 / n;
        trace.abs() <= tol * n
            && (squares - 2.0 * g.edge_count() as f64).abs() <= 1e-6
            && values[0] <= max_degree + tol
            && values[0] >= avg_degree - tol
    });
    Spectrum { values, tolerance: tol }
}

/// Predicted spectrum of the cone over a regular base, from the base
/// spectrum alone.
///
/// For a δ-regular base on m vertices, the all-ones eigenvector and the
/// new apex span a 2-dimensional invariant subspace with characteristic
/// polynomial `x² − δx − m`; the remaining base eigenvectors (orthogonal
/// to all-ones) persist unchanged. The cone spectrum is therefore the
/// base spectrum with exactly one copy of δ removed — even when δ has
/// higher multiplicity, as in disconnected regular bases — plus the two
/// roots `(δ ± √(δ² + 4m)) / 2`.
///
/// Returns the multiset as a descending list of `m + 1` values. Errors if
/// the stated order disagrees with the spectrum or the leading eigenvalue
/// differs from δ by more than the spectrum's tolerance.
pub fn cone_spectrum_predicted(
    base: &Spectrum,
    base_degree: usize,
    base_order: usize,
) -> Result<Vec<f64>> {
    if base.len() != base_order {
        return Err(Error::SpectrumOrderMismatch {
            expected: base_order,
            got: base.len(),
        });
    }
    let delta = base_degree as f64;
    if (base.lambda_max() - delta).abs() > base.tolerance() {
        return Err(Error::IrregularBase {
            lambda_max: base.lambda_max(),
            degree: base_degree,
        });
    }
    let m = base_order as f64;
    let disc = (delta * delta + 4.0 * m).sqrt();
    let mut values = Vec::with_capacity(base_order + 1);
    values.extend_from_slice(&base.values()[1..]);
    values.push((delta + disc) / 2.0);
    values.push((delta - disc) / 2.0);
    values.sort_unstable_by(|x, y| y.partial_cmp(x).expect("finite"));
    Ok(values)
}
