use super::complex::{SimplicialComplex, MAX_DIM};
use crate::error::{Error, Result};

/// Betti numbers of a product over a field: the convolution of the factors'.
pub fn kunneth_convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// F₂ Betti numbers of K × L by the Künneth formula.
pub fn kunneth_product(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(kunneth_convolve(&k.chain_complex()?.betti(), &l.chain_complex()?.betti()))
}

/// Staircase triangulation of K × L: for facets σ, τ with vertices in
/// increasing order, σ × τ is covered by the simplices along monotone
/// lattice paths. Vertex (a, b) is numbered `a·|L| + b`.
pub fn product_triangulation(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    if k.dim() + l.dim() > MAX_DIM {
        return Err(Error::InvalidComplex(format!(
            "product has dimension {} > {MAX_DIM}",
            k.dim() + l.dim()
        )));
    }
    let width = l.n_vertices() as u32;
    let mut simplices = Vec::new();
    let (kf, lf) = (k.facets(), l.facets());
    for s in &kf {
        for t in &lf {
            let (p, q) = (s.len() - 1, t.len() - 1);
            // each path is a choice of which of the p + q steps advance in K
            for mask in 0u32..1 << (p + q) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                let (mut i, mut j) = (0, 0);
                let mut path = vec![s[0] * width + t[0]];
                for step in 0..p + q {
                    if mask >> step & 1 == 1 {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    path.push(s[i] * width + t[j]);
                }
                simplices.push(path);
            }
        }
    }
    SimplicialComplex::from_simplices(simplices)
}

/// F₂ Betti numbers of the product triangulation, computed directly.
pub fn product_homology(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<Vec<usize>> {
    Ok(product_triangulation(k, l)?.chain_complex()?.betti())
}
