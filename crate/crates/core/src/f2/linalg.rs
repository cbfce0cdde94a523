//! Linear algebra over GF(2).
//!
//! Two representations: [`BitVector`] with an echelon [`XorBasis`] for small
//! dense problems (kernels, induced maps), and [`SparseMatrix`] columns of
//! sorted row indices reduced by the standard low-pivot column algorithm for
//! large boundary matrices.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector { len, words: vec![0; len.div_ceil(WORD)] }
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the first set bit at or after `start`.
    pub fn first_one_from(&self, start: usize) -> Option<usize> {
        if start >= self.len {
            return None;
        }
        let mut w = start / WORD;
        let mut word = self.words[w] & (!0u64 << (start % WORD));
        loop {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.first_one_from(0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVector({bits})")
    }
}

/// Linearly independent vectors in echelon form, keyed by their first set bit.
#[derive(Debug, Clone)]
pub struct XorBasis {
    len: usize,
    pivot_of: Vec<Option<usize>>,
    vectors: Vec<BitVector>,
    /// For each stored vector, which inserted vectors it is the sum of.
    combos: Vec<BitVector>,
    inserted: usize,
    capacity: usize,
}

impl XorBasis {
    pub fn new(len: usize) -> Self {
        Self::with_tracking(len, 0)
    }

    /// Tracks combinations of up to `capacity` inserted vectors, so that
    /// dependent insertions report the relation that killed them.
    pub fn with_tracking(len: usize, capacity: usize) -> Self {
        XorBasis {
            len,
            pivot_of: vec![None; len],
            vectors: Vec::new(),
            combos: Vec::new(),
            inserted: 0,
            capacity,
        }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    fn reduce_tracked(&self, v: &mut BitVector, mut combo: Option<&mut BitVector>) -> Option<usize> {
        let mut start = 0;
        while let Some(p) = v.first_one_from(start) {
            match self.pivot_of[p] {
                Some(j) => {
                    v.xor_assign(&self.vectors[j]);
                    if let Some(c) = combo.as_deref_mut() {
                        c.xor_assign(&self.combos[j]);
                    }
                    start = p + 1;
                }
                None => return Some(p),
            }
        }
        None
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: BitVector) -> BitVector {
        self.reduce_tracked(&mut v, None);
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v`. Returns `Ok(true)` if it was independent; with tracking on,
    /// a dependent insertion returns `Err(relation)` over inserted indices.
    pub fn insert(&mut self, v: BitVector) -> Result<bool, BitVector> {
        debug_assert_eq!(v.len(), self.len);
        let tracking = self.capacity > 0;
        let mut combo = tracking.then(|| {
            assert!(self.inserted < self.capacity, "tracking capacity exhausted");
            BitVector::from_indices(self.capacity, [self.inserted])
        });
        self.inserted += 1;
        let mut v = v;
        match self.reduce_tracked(&mut v, combo.as_mut()) {
            Some(p) => {
                self.pivot_of[p] = Some(self.vectors.len());
                self.vectors.push(v);
                if let Some(c) = combo {
                    self.combos.push(c);
                }
                Ok(true)
            }
            None => match combo {
                Some(c) => Err(c),
                None => Ok(false),
            },
        }
    }
}

/// Rank of a set of dense vectors of length `len`.
pub fn dense_rank(len: usize, vectors: impl IntoIterator<Item = BitVector>) -> usize {
    let mut basis = XorBasis::new(len);
    for v in vectors {
        let _ = basis.insert(v);
    }
    basis.rank()
}

/// Column-sparse matrix: each column is a sorted list of row indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub cols: Vec<Vec<u32>>,
}

impl SparseMatrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    /// Builds from unsorted columns, cancelling repeated entries mod 2.
    pub fn from_columns(nrows: usize, cols: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                let mut out: Vec<u32> = Vec::with_capacity(c.len());
                for r in c {
                    if out.last() == Some(&r) {
                        out.pop();
                    } else {
                        out.push(r);
                    }
                }
                debug_assert!(out.last().is_none_or(|&r| (r as usize) < nrows));
                out
            })
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column_dense(&self, j: usize) -> BitVector {
        BitVector::from_indices(self.nrows, self.cols[j].iter().map(|&r| r as usize))
    }

    pub fn columns_dense(&self) -> Vec<BitVector> {
        (0..self.ncols()).map(|j| self.column_dense(j)).collect()
    }

    /// Matrix-vector product over GF(2).
    pub fn apply(&self, v: &BitVector) -> BitVector {
        debug_assert_eq!(v.len(), self.ncols());
        let mut out = BitVector::zeros(self.nrows);
        for j in v.ones() {
            for &r in &self.cols[j] {
                out.flip(r as usize);
            }
        }
        out
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "shape mismatch in compose");
        let cols = rhs.cols.iter().map(|c| c.iter().flat_map(|&k| self.cols[k as usize].iter().copied()).collect());
        SparseMatrix::from_columns(self.nrows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        reduce(self, &[]).rank
    }

    pub fn rank_dense(&self) -> usize {
        dense_rank(self.nrows, self.columns_dense())
    }
}

fn symmetric_difference_into(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

pub struct Reduction {
    pub rank: usize,
    /// Pivot rows of the nonzero reduced columns.
    pub lows: Vec<u32>,
}

/// Column reduction by low pivots. Columns flagged in `skip` are known to be
/// combinations of earlier columns and are not reduced.
pub fn reduce(m: &SparseMatrix, skip: &[bool]) -> Reduction {
    let mut pivot_col: Vec<u32> = vec![u32::MAX; m.nrows];
    let mut reduced: Vec<Vec<u32>> = Vec::new();
    let mut lows = Vec::new();
    let mut scratch = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        if skip.get(j).copied().unwrap_or(false) || col.is_empty() {
            continue;
        }
        let mut cur = col.clone();
        while let Some(&low) = cur.last() {
            let p = pivot_col[low as usize];
            if p == u32::MAX {
                break;
            }
            symmetric_difference_into(&cur, &reduced[p as usize], &mut scratch);
            std::mem::swap(&mut cur, &mut scratch);
        }
        if let Some(&low) = cur.last() {
            pivot_col[low as usize] = reduced.len() as u32;
            lows.push(low);
            reduced.push(cur);
        }
    }
    Reduction { rank: reduced.len(), lows }
}

/// Ranks of a chain of boundary maps, `boundaries[k]: C_k → C_{k−1}`.
/// Reduces from the top degree down; pivot rows of ∂_{k+1} mark columns of
/// ∂_k that cannot add rank.
pub fn boundary_ranks(boundaries: &[SparseMatrix]) -> Vec<usize> {
    let mut ranks = vec![0; boundaries.len()];
    let mut cleared: Vec<bool> = Vec::new();
    for k in (0..boundaries.len()).rev() {
        let red = reduce(&boundaries[k], &cleared);
        ranks[k] = red.rank;
        cleared = vec![false; boundaries[k].nrows];
        for low in red.lows {
            cleared[low as usize] = true;
        }
    }
    ranks
}

/// Basis of the null space of `m`, as vectors over its columns.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<BitVector> {
    let mut basis = XorBasis::with_tracking(m.nrows, m.ncols().max(1));
    let mut kernel = Vec::new();
    for j in 0..m.ncols() {
        if let Err(relation) = basis.insert(m.column_dense(j)) {
            kernel.push(relation);
        }
    }
    kernel.into_iter().map(|v| truncate(v, m.ncols())).collect()
}

fn truncate(v: BitVector, len: usize) -> BitVector {
    BitVector::from_indices(len, v.ones().filter(|&i| i < len))
}

/// Rank of the map on homology induced by a chain map `f: A_k → B_k`, given a
/// basis of cycles of A and the boundary columns of B:
/// rank [f·Z_A | B_B] − rank B_B.
pub fn induced_rank(f: &SparseMatrix, cycles: &[BitVector], boundaries: &[BitVector]) -> usize {
    let mut basis = XorBasis::new(f.nrows);
    for b in boundaries {
        let _ = basis.insert(b.clone());
    }
    let base = basis.rank();
    for z in cycles {
        let _ = basis.insert(f.apply(z));
    }
    basis.rank() - base
}
