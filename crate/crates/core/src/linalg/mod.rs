//! Exact integer and rational linear algebra: matrices, polynomials, spectra.

mod charpoly;
mod matrix;
mod poly;
mod quadratic;
mod spectrum;

pub use charpoly::{annihilates, char_poly, distinct_root_count, hankel_rank_full, min_poly};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use quadratic::{
    roots_of_int_quadratic, solve_quadratic, squarefree_decompose, EigenvalueExact, QuadNum,
    QuadraticIrrational,
};
pub use spectrum::{
    approx_is_root, exact_spectrum, numeric_roots, Eigenvalue, FactorGroup, MatrixSpectrum,
    MultiplicityMethod, SpectrumEntry, CHARPOLY_LIMIT,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic has a negative discriminant")]
    NegativeDiscriminant,
    #[error("eigenvalue multiplicities could not be determined exactly")]
    UnresolvedMultiplicities,
}

/// `squarefree_part(p)`; free-function form of [`IntPoly::squarefree_part`].
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    p.squarefree_part()
}

/// `dim ker(M − alpha·I)`.
pub fn nullity_at(m: &IntMatrix, alpha: &num_rational::BigRational) -> Result<usize, LinalgError> {
    m.nullity_at(alpha)
}

/// Exact rank.
pub fn rank(m: &IntMatrix) -> usize {
    m.rank()
}
