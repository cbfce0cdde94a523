//! Simplicial homology with F₂ coefficients, simplicial involutions and the
//! Smith sequence, used to check the topological inputs of the formulas on
//! explicit triangulations.

pub mod chain;
pub mod complex;
pub mod cover;
pub mod involution;
pub mod io;
pub mod linalg;
pub mod product;
pub mod smith_seq;
pub mod surfaces;
pub mod symsq;

pub use chain::ChainComplex;
pub use complex::{Simplex, SimplicialComplex};
pub use cover::double_cover_class_eval;
pub use involution::SimplicialInvolution;
pub use product::{kunneth_convolve, kunneth_product, product_homology, product_triangulation};
pub use smith_seq::{maximality_exactness, smith_sequence, SmithData};
pub use symsq::{symmetric_square_oracle, SymSquareReport};

use crate::error::Result;

/// F₂ Betti numbers β_0..β_dim of a complex.
pub fn homology_ranks(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(complex.chain_complex()?.betti())
}
