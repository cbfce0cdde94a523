//! Small triangulations used as test models and oracle inputs.

use super::complex::SimplicialComplex;
use crate::error::Result;
use crate::profile::RealComponent;

fn build(facets: Vec<Vec<u32>>) -> SimplicialComplex {
    SimplicialComplex::from_simplices(facets).expect("built-in triangulation is valid")
}

/// Boundary of the tetrahedron.
pub fn tetrahedron_boundary() -> SimplicialComplex {
    build(vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
}

/// Boundary of the 4-simplex, a 3-sphere.
pub fn four_simplex_boundary() -> SimplicialComplex {
    build((0..5u32).map(|skip| (0..5).filter(|&v| v != skip).collect()).collect())
}

/// Octahedron with vertices 0:+x 1:−x 2:+y 3:−y 4:+z 5:−z.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    build(facets)
}

/// Octahedron vertex maps: z ↦ −z, and the antipodal map.
pub const OCTAHEDRON_REFLECTION: [u32; 6] = [0, 1, 2, 3, 5, 4];
pub const OCTAHEDRON_ANTIPODAL: [u32; 6] = [1, 0, 3, 2, 5, 4];

/// Seven-vertex torus.
pub fn torus() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    build(facets)
}

/// Six-vertex projective plane.
pub fn projective_plane() -> SimplicialComplex {
    build(vec![
        vec![0, 1, 2],
        vec![0, 2, 3],
        vec![0, 3, 4],
        vec![0, 4, 5],
        vec![0, 5, 1],
        vec![1, 2, 4],
        vec![2, 3, 5],
        vec![3, 4, 1],
        vec![4, 5, 2],
        vec![5, 1, 3],
    ])
}

/// Cycle on `n ≥ 3` vertices.
pub fn polygon(n: u32) -> SimplicialComplex {
    assert!(n >= 3, "a polygon needs at least 3 vertices");
    build((0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

/// Torus as an `m × n` grid of squares split along the main diagonal;
/// vertex (x, y) is `x·n + y`. Needs m, n ≥ 3.
pub fn grid_torus(m: u32, n: u32) -> SimplicialComplex {
    assert!(m >= 3 && n >= 3, "grid torus needs at least 3×3 squares");
    let v = |x: u32, y: u32| (x % m) * n + (y % n);
    let mut facets = Vec::new();
    for x in 0..m {
        for y in 0..n {
            facets.push(vec![v(x, y), v(x + 1, y), v(x + 1, y + 1)]);
            facets.push(vec![v(x, y), v(x, y + 1), v(x + 1, y + 1)]);
        }
    }
    build(facets)
}

/// Connected sum of two triangulated surfaces: the first triangle of each is
/// removed and their vertices identified in order.
pub fn connected_sum(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let ta = a.simplices(2)[0].clone();
    let tb = b.simplices(2)[0].clone();
    let offset = a.n_vertices() as u32;
    let mut relabel = vec![u32::MAX; b.n_vertices()];
    for (i, &v) in tb.iter().enumerate() {
        relabel[v as usize] = ta[i];
    }
    for (next, slot) in (offset..).zip(relabel.iter_mut().filter(|s| **s == u32::MAX)) {
        *slot = next;
    }
    let mut facets: Vec<Vec<u32>> = a.simplices(2).iter().filter(|t| **t != ta).map(|t| t.to_vec()).collect();
    facets.extend(
        b.simplices(2).iter().filter(|t| **t != tb).map(|t| t.iter().map(|&v| relabel[v as usize]).collect()),
    );
    build(facets)
}

pub fn orientable_surface(genus: u32) -> SimplicialComplex {
    if genus == 0 {
        return tetrahedron_boundary();
    }
    let t = torus();
    (1..genus).fold(t.clone(), |acc, _| connected_sum(&acc, &t))
}

/// Connected sum of `crosscaps ≥ 1` projective planes.
pub fn nonorientable_surface(crosscaps: u32) -> SimplicialComplex {
    assert!(crosscaps >= 1, "at least one crosscap");
    let p = projective_plane();
    (1..crosscaps).fold(p.clone(), |acc, _| connected_sum(&acc, &p))
}

pub fn klein_bottle() -> SimplicialComplex {
    nonorientable_surface(2)
}

pub fn triangulate(component: RealComponent) -> Result<SimplicialComplex> {
    Ok(match component {
        RealComponent::Orientable { genus } => orientable_surface(genus),
        RealComponent::NonOrientable { crosscaps } => {
            if crosscaps == 0 {
                return Err(crate::error::Error::InvalidComplex("non-orientable surface needs a crosscap".into()));
            }
            nonorientable_surface(crosscaps)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn betti(k: &SimplicialComplex) -> Vec<usize> {
        k.chain_complex().unwrap().betti()
    }

    #[test]
    fn standard_betti_numbers() {
        assert_eq!(betti(&tetrahedron_boundary()), vec![1, 0, 1]);
        assert_eq!(betti(&octahedron()), vec![1, 0, 1]);
        assert_eq!(betti(&torus()), vec![1, 2, 1]);
        assert_eq!(betti(&projective_plane()), vec![1, 1, 1]);
        assert_eq!(betti(&four_simplex_boundary()), vec![1, 0, 0, 1]);
        assert_eq!(betti(&polygon(6)), vec![1, 1]);
        assert_eq!(betti(&grid_torus(6, 3)), vec![1, 2, 1]);
    }

    #[test]
    fn connected_sums() {
        assert_eq!(torus().counts(), vec![7, 21, 14]);
        assert_eq!(projective_plane().counts(), vec![6, 15, 10]);
        let k = klein_bottle();
        assert_eq!(k.counts(), vec![9, 27, 18]);
        assert_eq!(betti(&k), vec![1, 2, 1]);
        for g in 0..4 {
            let s = orientable_surface(g);
            assert_eq!(betti(&s), vec![1, 2 * g as usize, 1], "genus {g}");
        }
        for c in 1..5 {
            let s = nonorientable_surface(c);
            assert_eq!(betti(&s), vec![1, c as usize, 1], "crosscaps {c}");
            assert_eq!(s.euler_characteristic(), 2 - c as i64);
        }
    }

    #[test]
    fn surfaces_are_closed_manifolds() {
        // every edge lies in exactly two triangles
        for s in [torus(), projective_plane(), klein_bottle(), orientable_surface(3), grid_torus(3, 3)] {
            let mut degree = vec![0; s.count(1)];
            for t in s.simplices(2) {
                for f in super::super::complex::faces(t) {
                    degree[s.index_of(&f).unwrap()] += 1;
                }
            }
            assert!(degree.iter().all(|&d| d == 2));
        }
    }
}
