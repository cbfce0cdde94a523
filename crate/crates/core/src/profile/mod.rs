//! Topological input data for a real nonsingular projective surface.
//!
//! A [`SurfaceProfile`] carries the F₂-Betti numbers of the complex surface,
//! two-torsion flags, optional Hodge numbers and an intrinsic description of
//! each connected component of the real locus. Nothing here checks that a
//! profile is geometrically realizable; formulas are evaluated on the data
//! as given.

mod format;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

pub use format::{parse_profile, render_profile};

/// Largest accepted value for any count in a profile. Keeps every formula
/// comfortably inside `i64`.
pub const MAX_COUNT: u32 = 1_000_000;

/// Largest accepted number of real components.
pub const MAX_COMPONENTS: usize = 100_000;

/// A closed connected surface, described by its topological type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealComponent {
    Orientable { genus: u32 },
    NonOrientable { crosscaps: u32 },
}

impl RealComponent {
    pub const SPHERE: RealComponent = RealComponent::Orientable { genus: 0 };
    pub const TORUS: RealComponent = RealComponent::Orientable { genus: 1 };
    pub const PROJECTIVE_PLANE: RealComponent = RealComponent::NonOrientable { crosscaps: 1 };
    pub const KLEIN_BOTTLE: RealComponent = RealComponent::NonOrientable { crosscaps: 2 };

    /// F₂-Betti numbers `(β₀, β₁, β₂)`.
    pub fn betti(&self) -> [i64; 3] {
        [1, self.beta1(), 1]
    }

    pub fn beta1(&self) -> i64 {
        match *self {
            RealComponent::Orientable { genus } => 2 * genus as i64,
            RealComponent::NonOrientable { crosscaps } => crosscaps as i64,
        }
    }

    pub fn beta_star(&self) -> i64 {
        2 + self.beta1()
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - self.beta1()
    }

    pub fn is_orientable(&self) -> bool {
        matches!(self, RealComponent::Orientable { .. })
    }

    /// Genus for orientable surfaces, number of crosscaps otherwise.
    pub fn genus_or_crosscaps(&self) -> u32 {
        match *self {
            RealComponent::Orientable { genus } => genus,
            RealComponent::NonOrientable { crosscaps } => crosscaps,
        }
    }
}

/// Hodge numbers `h^{1,0}`, `h^{2,0}`, `h^{1,1}` of the complex surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hodge {
    pub h10: u32,
    pub h20: u32,
    pub h11: u32,
}

/// What is known about the rank of the Mayer–Vietoris gluing map μ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankBound {
    Exact(u32),
    AtLeast(u32),
}

/// An externally justified statement about rank μ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankMuHint {
    pub bound: RankBound,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceProfile {
    pub name: String,
    /// F₂-Betti numbers β₀..β₄ of the complex surface.
    pub betti_f2: [u32; 5],
    /// Tors₂ H₁(X; ℤ) ≠ 0.
    pub tors2_h1: bool,
    /// Tors₂ H₊(X; ℤ) ≠ 0.
    pub tors2_hstar: bool,
    pub hodge: Option<Hodge>,
    pub real_components: Vec<RealComponent>,
    pub rank_mu_hint: Option<RankMuHint>,
    /// Exact total F₂-Betti number of the Hilbert square, when known from
    /// outside (only needed when two-torsion rules out the closed formula).
    pub known_beta_star_hilb2: Option<u64>,
}

/// Aggregated invariants of the real locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RealInvariants {
    /// Number of connected components.
    pub r: i64,
    pub beta_star: i64,
    pub beta1: i64,
    pub chi: i64,
}

impl std::ops::Add for RealInvariants {
    type Output = RealInvariants;

    fn add(self, o: RealInvariants) -> RealInvariants {
        RealInvariants {
            r: self.r + o.r,
            beta_star: self.beta_star + o.beta_star,
            beta1: self.beta1 + o.beta1,
            chi: self.chi + o.chi,
        }
    }
}

impl SurfaceProfile {
    /// A torsion-free profile with empty real locus and no optional data.
    pub fn new(name: impl Into<String>, betti_f2: [u32; 5]) -> Self {
        SurfaceProfile {
            name: name.into(),
            betti_f2,
            tors2_h1: false,
            tors2_hstar: false,
            hodge: None,
            real_components: Vec::new(),
            rank_mu_hint: None,
            known_beta_star_hilb2: None,
        }
    }

    pub fn with_hodge(mut self, h10: u32, h20: u32, h11: u32) -> Self {
        self.hodge = Some(Hodge { h10, h20, h11 });
        self
    }

    pub fn with_components(mut self, components: impl IntoIterator<Item = RealComponent>) -> Self {
        self.real_components.extend(components);
        self
    }

    pub fn with_torsion(mut self, tors2_h1: bool, tors2_hstar: bool) -> Self {
        self.tors2_h1 = tors2_h1;
        self.tors2_hstar = tors2_hstar;
        self
    }

    pub fn with_rank_mu(mut self, bound: RankBound, note: impl Into<String>) -> Self {
        self.rank_mu_hint = Some(RankMuHint { bound, note: note.into() });
        self
    }

    pub fn with_known_beta_star_hilb2(mut self, value: u64) -> Self {
        self.known_beta_star_hilb2 = Some(value);
        self
    }

    pub fn beta(&self, i: usize) -> i64 {
        self.betti_f2[i] as i64
    }

    pub fn beta1(&self) -> i64 {
        self.beta(1)
    }

    pub fn beta2(&self) -> i64 {
        self.beta(2)
    }

    /// Total F₂-Betti number β₊(X).
    pub fn beta_star(&self) -> i64 {
        self.betti_f2.iter().map(|&b| b as i64).sum()
    }

    /// Alternating sum of the Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti_f2
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn num_components(&self) -> i64 {
        self.real_components.len() as i64
    }

    /// All violated invariants; empty iff the profile is well formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.name.is_empty()
            || !self
                .name
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '+'))
        {
            out.push(Violation::new(
                "name",
                format!("{:?} is not an identifier ([A-Za-z0-9_.+-]+)", self.name),
            ));
        }
        let b = &self.betti_f2;
        if b[0] != 1 {
            out.push(Violation::new("betti_f2", format!("β₀ = {} ≠ 1 (surface must be connected)", b[0])));
        }
        if b[4] != 1 {
            out.push(Violation::new("betti_f2", format!("β₄ = {} ≠ 1 (closed surface)", b[4])));
        }
        if b[1] != b[3] {
            out.push(Violation::new(
                "betti_f2",
                format!("duality violation β₁ = {} ≠ β₃ = {}", b[1], b[3]),
            ));
        }
        if b.iter().any(|&x| x > MAX_COUNT) {
            out.push(Violation::new("betti_f2", format!("entries must not exceed {MAX_COUNT}")));
        }
        if self.tors2_h1 && !self.tors2_hstar {
            out.push(Violation::new(
                "tors2_hstar",
                "Tors₂ H₁ ≠ 0 forces Tors₂ H₊ ≠ 0 (tors2_h1 = true needs tors2_hstar = true)",
            ));
        }
        if let Some(h) = self.hodge {
            if [h.h10, h.h20, h.h11].iter().any(|&x| x > MAX_COUNT) {
                out.push(Violation::new("hodge", format!("entries must not exceed {MAX_COUNT}")));
            }
            if !self.tors2_h1 {
                if b[1] as u64 != 2 * h.h10 as u64 {
                    out.push(Violation::new(
                        "hodge",
                        format!("β₁ = {} ≠ 2·h10 = {}", b[1], 2 * h.h10 as u64),
                    ));
                }
                if b[2] as u64 != 2 * h.h20 as u64 + h.h11 as u64 {
                    out.push(Violation::new(
                        "hodge",
                        format!("β₂ = {} ≠ 2·h20 + h11 = {}", b[2], 2 * h.h20 as u64 + h.h11 as u64),
                    ));
                }
            }
        }
        if self.real_components.len() > MAX_COMPONENTS {
            out.push(Violation::new("real_components", format!("at most {MAX_COMPONENTS} components")));
        }
        for (i, c) in self.real_components.iter().enumerate() {
            match *c {
                RealComponent::NonOrientable { crosscaps: 0 } => out.push(Violation::new(
                    "real_components",
                    format!("component {i}: a non-orientable surface needs at least one crosscap"),
                )),
                _ if c.genus_or_crosscaps() > MAX_COUNT => out.push(Violation::new(
                    "real_components",
                    format!("component {i}: genus/crosscaps must not exceed {MAX_COUNT}"),
                )),
                _ => {}
            }
        }
        if let Some(hint) = &self.rank_mu_hint {
            let n = match hint.bound {
                RankBound::Exact(n) | RankBound::AtLeast(n) => n,
            };
            if n > MAX_COUNT {
                out.push(Violation::new("rank_mu", format!("must not exceed {MAX_COUNT}")));
            }
            if let RankBound::Exact(n) = hint.bound {
                if (n as i64) < 1 + self.beta1() {
                    out.push(Violation::new(
                        "rank_mu",
                        format!("rank μ = {n} is below 1 + β₁ = {}", 1 + self.beta1()),
                    ));
                }
            }
            if hint.note.contains('\n') || hint.note.trim() != hint.note {
                out.push(Violation::new(
                    "rank_mu_note",
                    "must be a single line without surrounding whitespace",
                ));
            }
        }
        if let Some(v) = self.known_beta_star_hilb2 {
            if v > (MAX_COUNT as u64).pow(2) {
                out.push(Violation::new("beta_star_hilb2", "value out of supported range"));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Returns an error listing every violation, if any.
    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidProfile(v))
        }
    }
}

/// Sums per-component invariants of an arbitrary component list.
pub fn real_invariants_of(components: &[RealComponent]) -> RealInvariants {
    components
        .iter()
        .map(|c| RealInvariants {
            r: 1,
            beta_star: c.beta_star(),
            beta1: c.beta1(),
            chi: c.euler_characteristic(),
        })
        .fold(RealInvariants::default(), |a, b| a + b)
}

/// `(r, β₊(X(ℝ)), β₁(X(ℝ)), χ(X(ℝ)))` for a valid profile.
pub fn derive_real_invariants(profile: &SurfaceProfile) -> Result<RealInvariants> {
    profile.ensure_valid()?;
    let inv = real_invariants_of(&profile.real_components);
    debug_assert_eq!(inv.chi, 2 * inv.r - inv.beta1);
    Ok(inv)
}
