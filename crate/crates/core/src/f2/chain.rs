use super::linalg::{boundary_ranks, kernel_basis, BitVector, SparseMatrix};
use crate::error::{Error, Result};

/// Chain complex of finite-dimensional F₂ vector spaces. `boundaries[k]` is
/// ∂_k : C_k → C_{k−1}, with ∂_0 mapping to the zero space.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// Checks shapes and ∂∘∂ = 0.
    pub fn new(boundaries: Vec<SparseMatrix>) -> Result<Self> {
        for k in 1..boundaries.len() {
            if boundaries[k].nrows != boundaries[k - 1].ncols() {
                return Err(Error::Internal(format!(
                    "∂_{k} has {} rows but C_{} has dimension {}",
                    boundaries[k].nrows,
                    k - 1,
                    boundaries[k - 1].ncols()
                )));
            }
            if !boundaries[k - 1].compose(&boundaries[k]).is_zero() {
                return Err(Error::Internal(format!("∂_{} ∘ ∂_{k} ≠ 0", k - 1)));
            }
        }
        Ok(ChainComplex { boundaries })
    }

    /// The complex with no chains in degrees `0..=top`.
    pub fn zero(top: usize) -> Self {
        ChainComplex { boundaries: vec![SparseMatrix::zero(0, 0); top + 1] }
    }

    pub fn top_degree(&self) -> usize {
        self.boundaries.len().saturating_sub(1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.boundaries.iter().map(SparseMatrix::ncols).collect()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.boundaries.get(k).map_or(0, SparseMatrix::ncols)
    }

    /// ∂_k, or a zero map outside the stored range.
    pub fn boundary(&self, k: usize) -> SparseMatrix {
        match self.boundaries.get(k) {
            Some(m) => m.clone(),
            None => SparseMatrix::zero(self.dim(k.wrapping_sub(1)), 0),
        }
    }

    pub fn boundary_ranks(&self) -> Vec<usize> {
        boundary_ranks(&self.boundaries)
    }

    /// β_k = dim C_k − rank ∂_k − rank ∂_{k+1}, by sparse column reduction.
    pub fn betti(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        (0..self.boundaries.len())
            .map(|k| self.dim(k) - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    /// Same as [`betti`](Self::betti), by dense elimination.
    pub fn betti_dense(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.boundaries.iter().map(SparseMatrix::rank_dense).collect();
        (0..self.boundaries.len())
            .map(|k| self.dim(k) - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims().iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// Basis of Z_k = ker ∂_k.
    pub fn cycles(&self, k: usize) -> Vec<BitVector> {
        match self.boundaries.get(k) {
            Some(m) => kernel_basis(m),
            None => Vec::new(),
        }
    }

    /// Spanning set of B_k = im ∂_{k+1}.
    pub fn boundaries_of(&self, k: usize) -> Vec<BitVector> {
        match self.boundaries.get(k + 1) {
            Some(m) => m.columns_dense(),
            None => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_nonzero_square() {
        // C_1 → C_0 identity-ish, then a 2-cell whose boundary is not a cycle
        let d0 = SparseMatrix::zero(0, 2);
        let d1 = SparseMatrix::from_columns(2, vec![vec![0]]);
        let d2 = SparseMatrix::from_columns(1, vec![vec![0]]);
        assert!(matches!(ChainComplex::new(vec![d0, d1, d2]), Err(Error::Internal(_))));
    }

    #[test]
    fn circle_betti() {
        let d0 = SparseMatrix::zero(0, 3);
        let d1 = SparseMatrix::from_columns(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let c = ChainComplex::new(vec![d0, d1]).unwrap();
        assert_eq!(c.betti(), vec![1, 1]);
        assert_eq!(c.betti_dense(), vec![1, 1]);
        assert_eq!(c.cycles(1).len(), 1);
        assert_eq!(ChainComplex::zero(2).betti(), vec![0, 0, 0]);
    }
}
