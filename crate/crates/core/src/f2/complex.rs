use arrayvec::ArrayVec;
use rustc_hash::{FxHashMap, FxHashSet};

use super::chain::ChainComplex;
use super::linalg::SparseMatrix;
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 4;

/// Sorted, duplicate-free vertex list.
pub type Simplex = ArrayVec<u32, { MAX_DIM + 1 }>;

pub fn simplex(vertices: &[u32]) -> Simplex {
    let mut s: Simplex = vertices.iter().copied().collect();
    s.sort_unstable();
    s
}

/// Codimension-one faces, the i-th omitting vertex i.
pub fn faces(s: &Simplex) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).filter(move |_| s.len() > 1).map(move |i| {
        let mut f = s.clone();
        f.remove(i);
        f
    })
}

/// All nonempty faces, including `s` itself.
fn all_faces(s: &Simplex) -> impl Iterator<Item = Simplex> + '_ {
    (1u32..1 << s.len()).map(move |mask| {
        s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
    })
}

/// Finite simplicial complex on vertices `0..n_vertices`, dimension ≤ 4.
/// Simplices of each dimension are stored in lexicographic order.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    n_vertices: usize,
    levels: Vec<Vec<Simplex>>,
    index: Vec<FxHashMap<Simplex, u32>>,
}

impl SimplicialComplex {
    /// Closes the given simplices under taking faces. Every vertex below the
    /// largest index must occur.
    pub fn from_simplices<I, S>(simplices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u32]>,
    {
        let mut sets: Vec<FxHashSet<Simplex>> = vec![FxHashSet::default(); MAX_DIM + 1];
        for s in simplices {
            let raw = s.as_ref();
            if raw.is_empty() {
                return Err(Error::InvalidComplex("empty simplex".into()));
            }
            if raw.len() > MAX_DIM + 1 {
                return Err(Error::InvalidComplex(format!(
                    "simplex {raw:?} has dimension {} > {MAX_DIM}",
                    raw.len() - 1
                )));
            }
            let s = simplex(raw);
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidComplex(format!("simplex {raw:?} repeats a vertex")));
            }
            if sets[s.len() - 1].contains(&s) {
                continue;
            }
            for f in all_faces(&s) {
                sets[f.len() - 1].insert(f);
            }
        }
        Self::from_levels(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    fn from_levels(mut levels: Vec<Vec<Simplex>>) -> Result<Self> {
        while levels.last().is_some_and(Vec::is_empty) {
            levels.pop();
        }
        if levels.is_empty() {
            return Err(Error::InvalidComplex("complex has no simplices".into()));
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        let n_vertices = levels[0].len();
        if let Some((i, v)) = levels[0].iter().enumerate().find(|(i, v)| v[0] as usize != *i) {
            return Err(Error::InvalidComplex(format!("vertex {i} is unused (next vertex is {})", v[0])));
        }
        let index = levels
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect())
            .collect();
        Ok(SimplicialComplex { n_vertices, levels, index })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn count(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn total_simplices(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        let s = simplex(s);
        self.index.get(s.len().checked_sub(1)?)?.get(&s).map(|&i| i as usize)
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        self.index_of(s).is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels.iter().enumerate().map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) }).sum()
    }

    /// ∂_k : C_k → C_{k−1}; ∂_0 is the zero map to the zero space.
    pub fn boundary(&self, k: usize) -> SparseMatrix {
        if k == 0 {
            return SparseMatrix::zero(0, self.count(0));
        }
        let cols = self.simplices(k).iter().map(|s| {
            let mut c: Vec<u32> = faces(s).map(|f| self.index[k - 1][&f]).collect();
            c.sort_unstable();
            c
        });
        SparseMatrix { nrows: self.count(k - 1), cols: cols.collect() }
    }

    pub fn chain_complex(&self) -> Result<ChainComplex> {
        ChainComplex::new((0..=self.dim()).map(|k| self.boundary(k)).collect())
    }

    /// Simplices not contained in any larger simplex.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: Vec<Vec<bool>> = self.levels.iter().map(|l| vec![false; l.len()]).collect();
        for k in 1..=self.dim() {
            for s in &self.levels[k] {
                for f in faces(s) {
                    covered[k - 1][self.index[k - 1][&f] as usize] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            out.extend(level.iter().zip(&covered[k]).filter(|(_, &c)| !c).map(|(s, _)| s.clone()));
        }
        out
    }

    /// Subcomplex of the simplices whose vertices all satisfy `keep`, with
    /// vertices renumbered in order. `None` if nothing is kept.
    pub fn induced_subcomplex(&self, keep: impl Fn(u32) -> bool) -> Option<SimplicialComplex> {
        let mut relabel = vec![u32::MAX; self.n_vertices];
        let mut next = 0;
        for v in 0..self.n_vertices as u32 {
            if keep(v) {
                relabel[v as usize] = next;
                next += 1;
            }
        }
        let levels: Vec<Vec<Simplex>> = self
            .levels
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter(|s| s.iter().all(|&v| relabel[v as usize] != u32::MAX))
                    .map(|s| s.iter().map(|&v| relabel[v as usize]).collect())
                    .collect()
            })
            .collect();
        Self::from_levels(levels).ok()
    }

    /// Barycentric subdivision. Vertex `i` of the result is the barycentre of
    /// `labels[i] = (dimension, index)` of this complex.
    pub fn barycentric_subdivision(&self) -> (SimplicialComplex, Vec<(usize, usize)>) {
        let mut labels = Vec::with_capacity(self.total_simplices());
        let mut offset = Vec::with_capacity(self.levels.len());
        for (k, level) in self.levels.iter().enumerate() {
            offset.push(labels.len() as u32);
            labels.extend((0..level.len()).map(|i| (k, i)));
        }
        let mut chains: Vec<Vec<u32>> = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            for (i, s) in level.iter().enumerate() {
                flags_down(self, s, vec![offset[k] + i as u32], &offset, &mut chains);
            }
        }
        let sd = Self::from_simplices(chains).expect("subdivision of a valid complex is valid");
        (sd, labels)
    }
}

fn flags_down(k: &SimplicialComplex, s: &Simplex, chain: Vec<u32>, offset: &[u32], out: &mut Vec<Vec<u32>>) {
    if s.len() == 1 {
        out.push(chain);
        return;
    }
    for f in faces(s) {
        let d = f.len() - 1;
        let mut next = chain.clone();
        next.push(offset[d] + k.index[d][&f]);
        flags_down(k, &f, next, offset, out);
    }
}
