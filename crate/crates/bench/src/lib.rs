//! Fixtures shared by the benchmarks.

use maxhilb::f2::surfaces;
use maxhilb::f2::{SimplicialComplex, SimplicialInvolution};
use maxhilb::verify::{grid, maximal_profile};
use maxhilb::SurfaceProfile;

/// Maximal profiles with β₁ = 0 over 1 ≤ r ≤ `max_r`, β₂ ≤ `max_beta2`.
pub fn grid_profiles(max_r: u32, max_beta2: u32) -> Vec<SurfaceProfile> {
    grid(max_r, max_beta2).map(|(r, b2)| maximal_profile(b2, r)).collect()
}

pub fn octahedron_reflection() -> SimplicialInvolution {
    SimplicialInvolution::new(surfaces::octahedron(), surfaces::OCTAHEDRON_REFLECTION.to_vec())
        .expect("valid model")
}

/// Free involution (x, y) ↦ (x + m/2, y) on the m × n grid torus.
pub fn torus_shift(m: u32, n: u32) -> SimplicialInvolution {
    assert!(m.is_multiple_of(2), "shift needs an even number of columns");
    let map = (0..m * n).map(|v| ((v / n + m / 2) % m) * n + v % n).collect();
    SimplicialInvolution::new(surfaces::grid_torus(m, n), map).expect("valid model")
}

/// Staircase triangulation of T² × T².
pub fn torus_squared() -> SimplicialComplex {
    maxhilb::f2::product_triangulation(&surfaces::torus(), &surfaces::torus()).expect("dimension 4")
}
