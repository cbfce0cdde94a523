use super::chain::ChainComplex;
use super::complex::{faces, simplex, Simplex, SimplicialComplex};
use super::linalg::SparseMatrix;
use crate::error::{Error, Result};

const NONE: u32 = u32::MAX;

/// Simplicial involution given by a vertex permutation of order ≤ 2.
#[derive(Debug, Clone)]
pub struct SimplicialInvolution {
    base: SimplicialComplex,
    vertex_map: Vec<u32>,
    /// Image index of every simplex, per dimension.
    image: Vec<Vec<u32>>,
    subdivisions: u32,
}

/// How the involution acts on the simplices of one dimension.
#[derive(Debug, Clone)]
pub struct OrbitLevel {
    /// Indices of the simplices fixed by the involution.
    pub fixed: Vec<usize>,
    /// Smallest index in each free orbit.
    pub reps: Vec<usize>,
    /// Per simplex: position in `fixed`, or in `reps` for free orbits.
    pub slot: Vec<u32>,
    pub is_fixed: Vec<bool>,
}

impl SimplicialInvolution {
    pub fn new(base: SimplicialComplex, vertex_map: Vec<u32>) -> Result<Self> {
        let n = base.n_vertices();
        if vertex_map.len() != n {
            return Err(Error::InvalidComplex(format!(
                "vertex map has {} entries for {n} vertices",
                vertex_map.len()
            )));
        }
        for (v, &w) in vertex_map.iter().enumerate() {
            if w as usize >= n || vertex_map[w as usize] as usize != v {
                return Err(Error::InvalidComplex(format!("vertex map is not an involution at vertex {v}")));
            }
        }
        let mut image = Vec::with_capacity(base.dim() + 1);
        for k in 0..=base.dim() {
            let mut level = Vec::with_capacity(base.count(k));
            for s in base.simplices(k) {
                let t: Vec<u32> = s.iter().map(|&v| vertex_map[v as usize]).collect();
                let j = base.index_of(&t).ok_or_else(|| {
                    Error::InvalidComplex(format!("image of simplex {:?} is not a simplex", s.as_slice()))
                })?;
                level.push(j as u32);
            }
            image.push(level);
        }
        Ok(SimplicialInvolution { base, vertex_map, image, subdivisions: 0 })
    }

    pub fn identity(base: SimplicialComplex) -> Self {
        let map = (0..base.n_vertices() as u32).collect();
        Self::new(base, map).expect("identity is an involution")
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn vertex_map(&self) -> &[u32] {
        &self.vertex_map
    }

    /// Number of barycentric subdivisions applied by [`regularized`](Self::regularized).
    pub fn subdivisions(&self) -> u32 {
        self.subdivisions
    }

    pub fn image_index(&self, k: usize, i: usize) -> usize {
        self.image[k][i] as usize
    }

    pub fn image(&self, s: &[u32]) -> Simplex {
        simplex(&s.iter().map(|&v| self.vertex_map[v as usize]).collect::<Vec<_>>())
    }

    /// An invariant simplex whose vertices are not all fixed, if any.
    pub fn irregular_simplex(&self) -> Option<Simplex> {
        (0..=self.base.dim()).find_map(|k| {
            self.base.simplices(k).iter().enumerate().find_map(|(i, s)| {
                let invariant = self.image[k][i] as usize == i;
                let pointwise = s.iter().all(|&v| self.vertex_map[v as usize] == v);
                (invariant && !pointwise).then(|| s.clone())
            })
        })
    }

    pub fn is_regular(&self) -> bool {
        self.irregular_simplex().is_none()
    }

    pub fn ensure_regular(&self) -> Result<()> {
        match self.irregular_simplex() {
            None => Ok(()),
            Some(s) => Err(Error::NonRegularInvolution(format!(
                "simplex {:?} is invariant but not fixed pointwise",
                s.as_slice()
            ))),
        }
    }

    /// The induced involution on the barycentric subdivision.
    pub fn subdivided(&self) -> Self {
        let (sd, labels) = self.base.barycentric_subdivision();
        let mut offset = vec![0u32; self.base.dim() + 1];
        for k in 1..offset.len() {
            offset[k] = offset[k - 1] + self.base.count(k - 1) as u32;
        }
        let map = labels.iter().map(|&(k, i)| offset[k] + self.image[k][i]).collect();
        let mut out = Self::new(sd, map).expect("subdivision of an involution is an involution");
        out.subdivisions = self.subdivisions + 1;
        out
    }

    /// Subdivides until every invariant simplex is fixed pointwise; one
    /// subdivision always suffices.
    pub fn regularized(self) -> Self {
        if self.is_regular() {
            self
        } else {
            self.subdivided()
        }
    }

    /// No fixed vertex. For a regular involution this means no invariant simplex.
    pub fn is_free(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(v, &w)| v as u32 != w)
    }

    /// Subcomplex of fixed simplices, `None` when the fixed set is empty.
    pub fn fixed_complex(&self) -> Result<Option<SimplicialComplex>> {
        self.ensure_regular()?;
        Ok(self.base.induced_subcomplex(|v| self.vertex_map[v as usize] == v))
    }

    pub fn orbit_levels(&self) -> Vec<OrbitLevel> {
        (0..=self.base.dim())
            .map(|k| {
                let n = self.base.count(k);
                let mut level = OrbitLevel { fixed: Vec::new(), reps: Vec::new(), slot: vec![NONE; n], is_fixed: vec![false; n] };
                for i in 0..n {
                    let j = self.image[k][i] as usize;
                    if j == i {
                        level.slot[i] = level.fixed.len() as u32;
                        level.fixed.push(i);
                        level.is_fixed[i] = true;
                    } else if i < j {
                        level.slot[i] = level.reps.len() as u32;
                        level.slot[j] = level.reps.len() as u32;
                        level.reps.push(i);
                    }
                }
                level
            })
            .collect()
    }

    /// Cellular chains of the quotient X/c: one cell per orbit. With
    /// `relative`, fixed cells are dropped, giving the chains of the pair
    /// (X/c, F).
    pub fn quotient_chain_complex(&self, relative: bool) -> Result<ChainComplex> {
        self.ensure_regular()?;
        let levels = self.orbit_levels();
        Ok(quotient_from_levels(&self.base, &levels, relative))
    }
}

/// Column index of a simplex in the quotient basis: fixed cells first (when
/// kept), then free orbits.
fn quotient_slot(level: &OrbitLevel, i: usize, relative: bool) -> Option<u32> {
    match (level.is_fixed[i], relative) {
        (true, true) => None,
        (true, false) => Some(level.slot[i]),
        (false, true) => Some(level.slot[i]),
        (false, false) => Some(level.fixed.len() as u32 + level.slot[i]),
    }
}

pub(crate) fn quotient_from_levels(base: &SimplicialComplex, levels: &[OrbitLevel], relative: bool) -> ChainComplex {
    let size = |l: &OrbitLevel| if relative { l.reps.len() } else { l.fixed.len() + l.reps.len() };
    let mut boundaries = Vec::with_capacity(levels.len());
    for (k, level) in levels.iter().enumerate() {
        let cells: Vec<usize> = if relative {
            level.reps.clone()
        } else {
            level.fixed.iter().chain(&level.reps).copied().collect()
        };
        if k == 0 {
            boundaries.push(SparseMatrix::zero(0, cells.len()));
            continue;
        }
        let below = &levels[k - 1];
        let cols = cells.iter().map(|&i| {
            faces(&base.simplices(k)[i])
                .filter_map(|f| quotient_slot(below, base.index_of(&f).expect("face present"), relative))
                .collect()
        });
        boundaries.push(SparseMatrix::from_columns(size(below), cols));
    }
    ChainComplex::new(boundaries).expect("quotient of a regular involution is a chain complex")
}
