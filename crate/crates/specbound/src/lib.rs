//! # specbound
//!
//! Spectral bounds for simple undirected graphs, built around the product
//! inequality
//!
//! ```text
//! -λ_min(G) · λ_max(G) ≥ Δ(G)
//! ```
//!
//! relating the extreme adjacency eigenvalues of a connected graph to its
//! maximum degree. The crate can
//!
//! - compute the full adjacency spectrum of a dense graph (cyclic Jacobi,
//!   no external numerics),
//! - check the product bound and certify tightness *structurally*: equality
//!   holds exactly when the graph is a cone over a regular base whose
//!   minimum eigenvalue clears the threshold `φ(δ, Δ) = (δ − √(δ² + 4Δ))/2`,
//! - predict cone spectra from base spectra and verify eigenvalue
//!   interlacing for induced subgraphs and quotient matrices of vertex
//!   partitions,
//! - compare the product bound against the independence bound
//!   `αδ²/(n−α)` over exhaustively enumerated connected graphs
//!   (isomorphism-free, up to 10 vertices),
//! - read and write graph6 lines compatible with standard generators.
//!
//! ## Quick start
//!
//! ```rust
//! use specbound::{make_family, FamilySpec};
//! use specbound::bounds::product_bound_report;
//!
//! // The cone over the Petersen graph meets the bound with equality.
//! let petersen = make_family(FamilySpec::Kneser(5, 2)).unwrap();
//! let report = product_bound_report(&petersen.cone(), 1e-7).unwrap();
//! assert_eq!(report.max_degree, 10);
//! assert!(report.equality_within_tol);
//! assert!(report.witness.is_some());
//! ```
//!
//! Each major capability has a runnable example under `examples/`; the
//! `specbound` binary exposes the same functionality as subcommands
//! (`analyze`, `survey`, `family`, `convert`).

use thiserror::Error;

pub mod bounds;
pub mod cli;
pub mod enumeration;
pub mod graph;
pub mod graph6;
pub mod interlacing;
pub mod spectra;

pub use bounds::{
    bipartite_product_bound, compare_bounds, crossover_alpha_threshold, equality_structure_check,
    haemers_bound, phi, product_bound_report, BipartiteBoundReport, BoundReport, Comparison,
    EqualityWitness, Winner,
};
pub use enumeration::{enumerate_connected, independence_number, survey, SurveyRow};
pub use graph::{make_family, FamilySpec, Graph, StructuralProfile};
pub use graph6::{parse_graph6, to_graph6};
pub use interlacing::{
    cone_quotient_roots, interlaces, is_equitable, quotient_matrix, tight_interlacing_index,
    Partition, QuotientMatrix,
};
pub use spectra::{cone_spectrum_predicted, eigenvalues_sym, spectrum, spectrum_with_tol, Spectrum};

/// Tolerances used throughout the crate.
///
/// `eigen` is the accuracy target of the eigensolver (per eigenvalue,
/// absolute); `comparison` is the tolerance for every downstream
/// equality/inequality decision. Functions that take an explicit `tol`
/// parameter expect a comparison tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub eigen: f64,
    pub comparison: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eigen: 1e-9,
            comparison: 1e-7,
        }
    }
}

/// Default comparison tolerance for equality and inequality decisions.
pub const DEFAULT_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    #[error("induced subgraph requires a nonempty vertex set")]
    EmptyVertexSet,
    #[error("invalid family parameters: {0}")]
    FamilyParameter(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("matrix must be square with at least one row")]
    BadMatrixShape,
    #[error("matrix entry ({row},{col}) is not finite")]
    NonFiniteEntry { row: usize, col: usize },
    #[error("matrix is not symmetric at ({row},{col}): difference {diff:e}")]
    NotSymmetric { row: usize, col: usize, diff: f64 },
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("spectrum has {got} entries but the stated order is {expected}")]
    SpectrumOrderMismatch { expected: usize, got: usize },
    #[error("base is not regular: leading eigenvalue {lambda_max} differs from stated degree {degree}")]
    IrregularBase { lambda_max: f64, degree: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("eigenvalue list must be sorted in descending order")]
    UnsortedEigenvalues,
    #[error("inner list has {inner} values; it must be shorter than the outer spectrum ({outer})")]
    InterlacingSize { inner: usize, outer: usize },
    #[error("inner values do not interlace the outer spectrum")]
    NotInterlacing,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("maximum degree must be positive")]
    ZeroMaxDegree,
    #[error("minimum degree must be positive")]
    ZeroMinDegree,
    #[error("independence number {alpha} must lie in 1..={max}")]
    AlphaOutOfRange { alpha: usize, max: usize },
    #[error("order {order} out of range: {reason}")]
    OrderOutOfRange { order: usize, reason: &'static str },
    #[error("{0}")]
    Input(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
