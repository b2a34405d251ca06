//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors reported by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A sequence of parts was not non-increasing and non-negative.
    #[error("invalid partition {0:?}: parts must be non-increasing")]
    InvalidPartition(Vec<i64>),

    /// The two-column shrink operator was applied to a diagram with a row longer than 2.
    #[error("shrink needs a diagram with at most two columns, got first row {0}")]
    NotTwoColumn(u32),

    /// A diagram has more rows than the vector space or box allows.
    #[error("{what} has {rows} rows but at most {max} are allowed")]
    TooManyRows {
        /// What was being checked.
        what: &'static str,
        /// Rows present.
        rows: usize,
        /// Rows allowed.
        max: usize,
    },

    /// Parameters of a space or complex are outside the supported range.
    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// Matrix shapes do not match for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A sequence of matrices fails d∘d = 0.
    #[error("composition of differentials is nonzero into degree {degree}")]
    NotAComplex {
        /// Degree at which d_{degree} ∘ d_{degree+1} ≠ 0.
        degree: i64,
    },

    /// The supplied eigenvalue list does not annihilate the matrix.
    #[error("the product of (M - e I) over the eigenvalues {0:?} is not zero")]
    SpectrumMismatch(Vec<i64>),

    /// A Cauchy component computed from the Casimir operator has the wrong dimension.
    #[error("Cauchy component {alpha} in exterior degree {degree} has dimension {found}, expected {expected}")]
    CauchyDimension {
        /// Exterior degree.
        degree: usize,
        /// Diagram of the component.
        alpha: String,
        /// Dimension found.
        found: usize,
        /// Dimension predicted by the hook-content formula.
        expected: usize,
    },

    /// A subspace that should be preserved by a differential is not.
    #[error("subcomplex is not closed under the differential in degree {0}")]
    NotClosed(usize),

    /// Bott's algorithm produced a non-dominant weight after sorting.
    #[error("sorted weight {0:?} minus rho is not dominant")]
    NonDominant(Vec<i64>),

    /// A matrix is not symplectic.
    #[error("matrix is not symplectic")]
    NotSymplectic,

    /// An element does not lie in the parabolic subalgebra.
    #[error("element is not in the parabolic subalgebra: {0}")]
    NotParabolic(String),

    /// A bundle fails the vanishing hypothesis needed for its resolution.
    #[error("bundle is not acyclic against {alpha}: h^{degree} = {value}")]
    NotAcyclic {
        /// Diagram of the failing test bundle.
        alpha: String,
        /// Cohomological degree.
        degree: usize,
        /// Offending dimension.
        value: u64,
    },

    /// The long exact sequence does not determine a cohomology group.
    #[error("cohomology on the hyperplane section is not determined in degrees {0:?}")]
    Indeterminate(Vec<usize>),

    /// A value could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
