//! Exact symmetric-function computations over multi-indexed variable
//! universes.
//!
//! A context `(m, n, k)` declares indeterminates carrying an owner row and a
//! tensor-index word of depth at most `k`.  On top of that universe the crate
//! provides sparse integer polynomials, staircase-shifted partitions,
//! monomial symmetric polynomials, bialternant Schur polynomials and the
//! projection homomorphisms that relate universes of different shapes.

pub mod error;
pub mod goldens;
pub mod indexing;
pub mod partitions;
pub mod polynomial;
pub mod projections;
pub mod schur;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};
pub use indexing::{q, CardinalityReport, Context, Label};
pub use partitions::{
    count_partitions_at_most, enumerate_multipartitions, shift_by_staircase, staircase,
    unshift_by_staircase, validate_flat_chain, MultiPartition, Partition, Staircase,
};
pub use polynomial::{
    determinant, determinant_perm_expansion, factorial_bound, Monomial, Permutation, Polynomial,
};
pub use projections::{
    check_dimensions, compatible_sequence_check, verify_schur_stability, verify_surjectivity,
    DimensionCheck, Projection, ProjectionKind,
};
pub use schur::{alternant, schur, schur_oracle, vandermonde_matrix, vandermonde_product};
pub use symfun::{graded_dimension, homogeneous_basis, monomial_symmetric, symmetrize};
pub use verify::{
    appendix_suite, counting_suite, dims_suite, normalize_leading_sign, projections_suite,
    schur_stability_suite, CheckRow, SuiteReport,
};

#[cfg(test)]
pub(crate) fn test_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
