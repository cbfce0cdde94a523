//! The Smith exact sequence of a regular simplicial involution c on X:
//!
//! ```text
//! 0 → Sm(X) → S(X) → Sm(X, F) → 0
//! ```
//!
//! with Sm(X) = ker(1 + c) and Sm(X, F) = im(1 + c). In the simplex basis
//! Sm(X) is spanned by fixed simplices and orbit sums σ + cσ, and splits as
//! S(F) ⊕ im(1 + c); im(1 + c) computes the homology of (X/c, F).

use serde::Serialize;

use super::chain::ChainComplex;
use super::complex::faces;
use super::involution::{quotient_from_levels, OrbitLevel, SimplicialInvolution};
use super::linalg::{induced_rank, SparseMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithData {
    pub h_x: Vec<usize>,
    pub h_fixed: Vec<usize>,
    /// Homology of (X/c, F).
    pub h_quotient_rel: Vec<usize>,
    /// Homology of Sm(X).
    pub h_smith: Vec<usize>,
    /// Rank of H_k(Sm X) → H_k(X).
    pub rank_inc: Vec<usize>,
    /// Rank of H_k(X) → H_k(X/c, F).
    pub rank_proj: Vec<usize>,
    /// Rank of the connecting map H_k(X/c, F) → H_{k−1}(Sm X); zero at k = 0.
    pub rank_delta: Vec<usize>,
    pub subdivisions: u32,
}

impl SmithData {
    pub fn beta_star_x(&self) -> usize {
        self.h_x.iter().sum()
    }

    pub fn beta_star_fixed(&self) -> usize {
        self.h_fixed.iter().sum()
    }

    /// β₊(X) − β₊(F).
    pub fn defect(&self) -> usize {
        self.beta_star_x() - self.beta_star_fixed()
    }

    /// Σ_k dim coker(H_k(Sm X) → H_k(X)).
    pub fn cokernel_total(&self) -> usize {
        self.h_x.iter().zip(&self.rank_inc).map(|(h, r)| h - r).sum()
    }

    /// β₊(F) + 2·Σ dim coker = β₊(X).
    pub fn smith_identity_holds(&self) -> bool {
        self.beta_star_fixed() + 2 * self.cokernel_total() == self.beta_star_x()
    }

    /// Dimension checks at every node of the long exact sequence, as
    /// (label, passed) pairs in sequence order from the top degree down.
    pub fn node_checks(&self) -> Vec<(String, bool)> {
        let top = self.h_x.len();
        let mut out = Vec::new();
        for k in (0..top).rev() {
            let delta_above = self.rank_delta.get(k + 1).copied().unwrap_or(0);
            out.push((format!("H{k}(X)"), self.h_x[k] == self.rank_inc[k] + self.rank_proj[k]));
            out.push((format!("H{k}(X/c,F)"), self.h_quotient_rel[k] == self.rank_proj[k] + self.rank_delta[k]));
            out.push((format!("H{k}(Sm X)"), self.h_smith[k] == delta_above + self.rank_inc[k]));
        }
        out
    }
}

/// Chain maps of the short exact sequence, per degree.
struct SmithMaps {
    smith: ChainComplex,
    inc: Vec<SparseMatrix>,
    proj: Vec<SparseMatrix>,
    /// `delta[k]`: Sm(X, F)_k → Sm(X)_{k−1}; empty at k = 0.
    delta: Vec<SparseMatrix>,
}

fn smith_maps(inv: &SimplicialInvolution, levels: &[OrbitLevel]) -> Result<SmithMaps> {
    let base = inv.base();
    let top = base.dim();
    // Sm(X)_k basis: fixed simplices, then orbit sums
    let sm_slot = |k: usize, i: usize| -> u32 {
        let l = &levels[k];
        if l.is_fixed[i] {
            l.slot[i]
        } else {
            l.fixed.len() as u32 + l.slot[i]
        }
    };
    let sm_dim = |k: usize| levels[k].fixed.len() + levels[k].reps.len();

    let mut smith_bd = Vec::with_capacity(top + 1);
    let mut inc = Vec::with_capacity(top + 1);
    let mut proj = Vec::with_capacity(top + 1);
    let mut delta = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let l = &levels[k];
        let basis: Vec<usize> = l.fixed.iter().chain(&l.reps).copied().collect();

        inc.push(SparseMatrix::from_columns(
            base.count(k),
            basis.iter().map(|&i| {
                let j = inv.image_index(k, i);
                if j == i { vec![i as u32] } else { vec![i as u32, j as u32] }
            }),
        ));
        proj.push(SparseMatrix::from_columns(
            l.reps.len(),
            (0..base.count(k)).map(|i| if l.is_fixed[i] { vec![] } else { vec![l.slot[i]] }),
        ));

        if k == 0 {
            smith_bd.push(SparseMatrix::zero(0, basis.len()));
            delta.push(SparseMatrix::zero(0, l.reps.len()));
            continue;
        }
        let below = &levels[k - 1];
        let face_ids = |i: usize| faces(&base.simplices(k)[i]).map(move |f| base.index_of(&f).expect("face present"));
        // ∂ of a fixed simplex stays in S(F); ∂(σ + cσ) only sees free faces
        smith_bd.push(SparseMatrix::from_columns(
            sm_dim(k - 1),
            basis.iter().map(|&i| {
                face_ids(i)
                    .filter(|&f| l.is_fixed[i] || !below.is_fixed[f])
                    .map(|f| sm_slot(k - 1, f))
                    .collect()
            }),
        ));
        // lift an orbit to its representative, take ∂, read the result in
        // the Sm(X) basis (fixed faces, and free faces that are representatives)
        delta.push(SparseMatrix::from_columns(
            sm_dim(k - 1),
            l.reps.iter().map(|&i| {
                face_ids(i)
                    .filter(|&f| below.is_fixed[f] || below.reps[below.slot[f] as usize] == f)
                    .map(|f| sm_slot(k - 1, f))
                    .collect()
            }),
        ));
    }
    Ok(SmithMaps { smith: ChainComplex::new(smith_bd)?, inc, proj, delta })
}

/// Homology ranks of X, F, (X/c, F) and Sm(X), the ranks of the three maps
/// of the long exact sequence, with exactness verified at every node.
pub fn smith_sequence(inv: &SimplicialInvolution) -> Result<SmithData> {
    inv.ensure_regular()?;
    let base = inv.base();
    let top = base.dim();
    let levels = inv.orbit_levels();

    let x = base.chain_complex()?;
    let rel = quotient_from_levels(base, &levels, true);
    let fixed = match inv.fixed_complex()? {
        Some(f) => f.chain_complex()?,
        None => ChainComplex::zero(top),
    };
    let maps = smith_maps(inv, &levels)?;

    let pad = |mut v: Vec<usize>| {
        v.resize(top + 1, 0);
        v
    };
    let h_x = pad(x.betti());
    let h_fixed = pad(fixed.betti());
    let h_quotient_rel = pad(rel.betti());
    let h_smith = pad(maps.smith.betti());

    let mut rank_inc = Vec::with_capacity(top + 1);
    let mut rank_proj = Vec::with_capacity(top + 1);
    let mut rank_delta = Vec::with_capacity(top + 1);
    for k in 0..=top {
        rank_inc.push(induced_rank(&maps.inc[k], &maps.smith.cycles(k), &x.boundaries_of(k)));
        rank_proj.push(induced_rank(&maps.proj[k], &x.cycles(k), &rel.boundaries_of(k)));
        rank_delta.push(if k == 0 {
            0
        } else {
            induced_rank(&maps.delta[k], &rel.cycles(k), &maps.smith.boundaries_of(k - 1))
        });

        // consecutive maps compose to zero in homology
        let zero_checks = [
            ("proj∘inc", induced_rank(&maps.proj[k].compose(&maps.inc[k]), &maps.smith.cycles(k), &rel.boundaries_of(k))),
            (
                "Δ∘proj",
                if k == 0 {
                    0
                } else {
                    induced_rank(&maps.delta[k].compose(&maps.proj[k]), &x.cycles(k), &maps.smith.boundaries_of(k - 1))
                },
            ),
            (
                "inc∘Δ",
                if k == 0 {
                    0
                } else {
                    induced_rank(&maps.inc[k - 1].compose(&maps.delta[k]), &rel.cycles(k), &x.boundaries_of(k - 1))
                },
            ),
        ];
        if let Some((name, r)) = zero_checks.iter().find(|(_, r)| *r != 0) {
            return Err(Error::Internal(format!("{name} has rank {r} in degree {k}")));
        }
    }

    let data = SmithData {
        h_x,
        h_fixed,
        h_quotient_rel,
        h_smith,
        rank_inc,
        rank_proj,
        rank_delta,
        subdivisions: inv.subdivisions(),
    };
    if let Some((node, _)) = data.node_checks().into_iter().find(|(_, ok)| !ok) {
        return Err(Error::Internal(format!("Smith sequence not exact at {node}: {data:?}")));
    }
    let split: Vec<usize> = data.h_fixed.iter().zip(&data.h_quotient_rel).map(|(a, b)| a + b).collect();
    if split != data.h_smith {
        return Err(Error::Internal(format!(
            "H(Sm X) = {:?} differs from H(F) ⊕ H(X/c, F) = {split:?}",
            data.h_smith
        )));
    }
    Ok(data)
}

/// Whether every connecting map is injective and every H_k(Sm X) → H_k(X)
/// is onto; checked against the count β₊(F) = β₊(X).
pub fn maximality_exactness(inv: &SimplicialInvolution) -> Result<bool> {
    let data = smith_sequence(inv)?;
    let by_sequence = (0..data.h_x.len())
        .all(|k| data.rank_delta[k] == data.h_quotient_rel[k] && data.rank_inc[k] == data.h_x[k]);
    let by_count = data.beta_star_fixed() == data.beta_star_x();
    if by_sequence != by_count {
        return Err(Error::Internal(format!(
            "sequence criterion {by_sequence} disagrees with β₊(F) = {} vs β₊(X) = {}",
            data.beta_star_fixed(),
            data.beta_star_x()
        )));
    }
    Ok(by_sequence)
}
