//! Koszul and Tate resolutions of the diagonal for Grassmannians and symplectic
//! Grassmannians, checked by exact rational computation.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: Young diagrams, Littlewood-Richardson products, Schur dimensions.
//! * [`exactlin`]: exact rational matrices, ranks, chain complexes, spectral projectors.
//! * [`bott`]: Borel-Weil-Bott cohomology on `Gr(k,N)` and on its Plücker hyperplane section.
//! * [`complex`]: term lists and ranks of the Koszul complex on `Gr(k,N)` and of the Tate
//!   complex on the isotropic Grassmannian `SpGr(2,N)`.
//! * [`fiber`]: explicit matrices of those complexes over a point of the diagonal.
//! * [`symplectic`]: symplectic matrices, isotropy families and the parabolic action.
//! * [`ktheory`]: generator sets and pairing matrices.
//! * [`cli`]: the `grassolve` command line and the named property checks.

pub mod bott;
pub mod cli;
pub mod complex;
pub mod error;
pub mod exactlin;
pub mod fiber;
pub mod ktheory;
pub mod partitions;
pub mod symplectic;

pub use error::{Error, Result};
