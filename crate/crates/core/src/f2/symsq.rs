//! Brute-force F₂ homology of the symmetric square F⁽²⁾ = (F × F)/swap.
//!
//! F × F is given the product cell structure (cells σ × τ). Its face poset's
//! order complex is a triangulation on which the swap (σ, τ) ↦ (τ, σ) acts
//! simplicially and regularly, and the quotient cell complex computes
//! H(F⁽²⁾).

use rustc_hash::FxHashMap;
use serde::Serialize;

use super::complex::{faces, Simplex, SimplicialComplex};
use super::involution::SimplicialInvolution;
use super::surfaces::triangulate;
use crate::error::{Error, Result};
use crate::profile::RealComponent;

/// Default cap on the number of simplices of the order complex.
pub const DEFAULT_SIMPLEX_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymSquareReport {
    /// Betti numbers of F⁽²⁾ in degrees 0..=4.
    pub betti: Vec<usize>,
    pub beta_f: Vec<usize>,
    /// Simplices of the triangulation of F × F.
    pub simplices: usize,
    /// Cells of the quotient.
    pub cells: usize,
}

/// All simplices of `f`, numbered globally by dimension then index.
struct GlobalSimplices {
    list: Vec<Simplex>,
    id: FxHashMap<Simplex, u32>,
}

impl GlobalSimplices {
    fn new(f: &SimplicialComplex) -> Self {
        let list: Vec<Simplex> = (0..=f.dim()).flat_map(|k| f.simplices(k).iter().cloned()).collect();
        let id = list.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
        GlobalSimplices { list, id }
    }

    fn codim_one(&self, i: usize) -> Vec<u32> {
        faces(&self.list[i]).map(|f| self.id[&f]).collect()
    }

    /// Nonempty faces of simplex `i`, itself included.
    fn all_faces(&self, i: usize) -> Vec<u32> {
        let s = &self.list[i];
        (1u32..1 << s.len())
            .map(|mask| {
                let f: Simplex = s.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &v)| v).collect();
                self.id[&f]
            })
            .collect()
    }
}

/// Number of simplices of the order complex of the product cell poset, i.e.
/// the number of nonempty chains of cells.
pub fn order_complex_size(f: &SimplicialComplex) -> u64 {
    let g = GlobalSimplices::new(f);
    let n = g.list.len();
    let below: Vec<Vec<u32>> = (0..n).map(|i| g.all_faces(i)).collect();
    let mut cells: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
    cells.sort_by_key(|&(a, b)| g.list[a].len() + g.list[b].len());
    // chains ending at each cell
    let mut ending = vec![0u64; n * n];
    let mut total = 0u64;
    for (a, b) in cells {
        let mut count = 1u64;
        for &x in &below[a] {
            for &y in &below[b] {
                let (x, y) = (x as usize, y as usize);
                if (x, y) != (a, b) {
                    count = count.saturating_add(ending[x * n + y]);
                }
            }
        }
        ending[a * n + b] = count;
        total = total.saturating_add(count);
    }
    total
}

/// Triangulation of F × F with the swap involution.
pub fn product_with_swap(f: &SimplicialComplex, budget: u64) -> Result<SimplicialInvolution> {
    let needed = order_complex_size(f);
    if needed > budget {
        return Err(Error::Budget { what: "symmetric square triangulation simplices", needed, budget });
    }
    let g = GlobalSimplices::new(f);
    let n = g.list.len();
    let down: Vec<Vec<u32>> = (0..n).map(|i| g.codim_one(i)).collect();
    let cell = |a: usize, b: usize| (a * n + b) as u32;

    let facets: Vec<usize> = f.facets().iter().map(|s| g.id[s] as usize).collect();
    let mut chains = Vec::new();
    let mut stack: Vec<(usize, usize, Vec<u32>)> = Vec::new();
    for &a in &facets {
        for &b in &facets {
            stack.push((a, b, vec![cell(a, b)]));
        }
    }
    while let Some((a, b, chain)) = stack.pop() {
        if down[a].is_empty() && down[b].is_empty() {
            chains.push(chain);
            continue;
        }
        for &x in &down[a] {
            let mut next = chain.clone();
            next.push(cell(x as usize, b));
            stack.push((x as usize, b, next));
        }
        for &y in &down[b] {
            let mut next = chain.clone();
            next.push(cell(a, y as usize));
            stack.push((a, y as usize, next));
        }
    }
    let complex = SimplicialComplex::from_simplices(chains)?;
    let swap = (0..n * n).map(|c| cell(c % n, c / n)).collect();
    SimplicialInvolution::new(complex, swap)
}

/// F₂ Betti numbers of (F × F)/swap for any complex F of dimension ≤ 2.
pub fn symmetric_square_betti(f: &SimplicialComplex, budget: u64) -> Result<(Vec<usize>, usize, usize)> {
    if f.dim() > 2 {
        return Err(Error::InvalidComplex(format!("dimension {} is above 2", f.dim())));
    }
    let inv = product_with_swap(f, budget)?;
    inv.ensure_regular()?;
    let quotient = inv.quotient_chain_complex(false)?;
    let mut betti = quotient.betti();
    betti.resize(2 * f.dim() + 1, 0);
    Ok((betti, inv.base().total_simplices(), quotient.dims().iter().sum()))
}

/// Symmetric square of a closed surface, checking χ(F⁽²⁾) = ½(χ² + χ) and
/// β₃(F⁽²⁾) = β₁(F).
pub fn symmetric_square_of(f: &SimplicialComplex, budget: u64) -> Result<SymSquareReport> {
    if f.dim() != 2 {
        return Err(Error::InvalidComplex(format!("expected a surface, got dimension {}", f.dim())));
    }
    let beta_f = f.chain_complex()?.betti();
    let (betti, simplices, cells) = symmetric_square_betti(f, budget)?;

    let chi_f = f.euler_characteristic();
    let chi: i64 = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    if 2 * chi != chi_f * chi_f + chi_f {
        return Err(Error::Internal(format!(
            "χ(F⁽²⁾) = {chi} but χ(F) = {chi_f} predicts {}",
            (chi_f * chi_f + chi_f) / 2
        )));
    }
    let beta1_f = beta_f.get(1).copied().unwrap_or(0);
    if betti[3] != beta1_f {
        return Err(Error::Internal(format!("β₃(F⁽²⁾) = {} but β₁(F) = {beta1_f}", betti[3])));
    }
    Ok(SymSquareReport { betti, beta_f, simplices, cells })
}

/// F₂ Betti numbers of the symmetric square of a closed surface, checking
/// β₃(F⁽²⁾) = β₁(F).
pub fn symmetric_square_oracle(component: RealComponent) -> Result<SymSquareReport> {
    symmetric_square_of(&triangulate(component)?, DEFAULT_SIMPLEX_BUDGET)
}
