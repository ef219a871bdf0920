//! Matrix assembly, the Jacobi eigensolver and the merged spectrum.

pub mod direct;
pub mod jacobi;
pub mod matrix;
pub mod spectrum;

pub use direct::{direct_eigenpairs, DirectBlock, DirectEigenpairs, SparseVector};
pub use jacobi::{eigen_decomposition, eigenvalues, EigenDecomposition, DEFAULT_TOLERANCE, MAX_SWEEPS};
pub use matrix::{assemble_condensed, assemble_q, complete_q, condensed_complement, SymMatrix};
pub use spectrum::{eigensolve, full_spectrum, Provenance, Spectrum, MERGE_TOLERANCE};
