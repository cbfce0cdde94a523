//! Smith–Thom maximality of the surface itself.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::profile::{derive_real_invariants, SurfaceProfile};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmithReport {
    pub beta_star_x: i64,
    pub beta_star_r: i64,
    /// β₊(X) − β₊(X(ℝ)); non-negative and even.
    pub defect: i64,
    pub is_maximal: bool,
    /// `None` when the profile carries no Hodge numbers.
    pub comessatti_ok: Option<bool>,
    /// Lower bound on the number of real components of any maximal real
    /// structure, when the Hodge numbers force one.
    pub hodge_component_bound: Option<i64>,
}

/// Compares the total Betti numbers of X and X(ℝ).
pub fn smith_defect(profile: &SurfaceProfile) -> Result<SmithReport> {
    let real = derive_real_invariants(profile)?;
    let beta_star_x = profile.beta_star();
    let defect = beta_star_x - real.beta_star;
    if defect < 0 {
        return Err(Error::SmithViolation(format!(
            "β₊(X(ℝ)) = {} exceeds β₊(X) = {beta_star_x}",
            real.beta_star
        )));
    }
    if defect % 2 != 0 {
        return Err(Error::SmithViolation(format!(
            "β₊(X) − β₊(X(ℝ)) = {defect} is odd"
        )));
    }
    let comessatti_ok = match profile.hodge {
        Some(_) => Some(comessatti_check(profile)?),
        None => None,
    };
    let hodge_component_bound = match profile.hodge {
        Some(_) if !profile.tors2_h1 => hodge_obstruction_bound(profile)?,
        _ => None,
    };
    Ok(SmithReport {
        beta_star_x,
        beta_star_r: real.beta_star,
        defect,
        is_maximal: defect == 0,
        comessatti_ok,
        hodge_component_bound,
    })
}

/// `2 − χ(X(ℝ)) ≤ h^{1,1}`, with χ(X(ℝ)) = 2r − β₁(X(ℝ)).
pub fn comessatti_check(profile: &SurfaceProfile) -> Result<bool> {
    let hodge = profile.hodge.ok_or(Error::MissingHodge("comessatti_check"))?;
    let real = derive_real_invariants(profile)?;
    Ok(2 - (2 * real.r - real.beta1) <= hodge.h11 as i64)
}

/// Smallest integer ≥ 1 + h20/2 + h10. Every maximal real structure on a
/// surface without 2-torsion in H₁ has at least this many real components.
/// `None` when h20 + h10 = 0, where the bound says nothing beyond r ≥ 1.
pub fn hodge_obstruction_bound(profile: &SurfaceProfile) -> Result<Option<i64>> {
    profile.ensure_valid()?;
    let hodge = profile.hodge.ok_or(Error::MissingHodge("hodge_obstruction_bound"))?;
    if profile.tors2_h1 {
        return Err(Error::NotApplicable {
            op: "hodge_obstruction_bound",
            reason: "the Hodge bound needs H₁(X; ℤ) without 2-torsion".into(),
        });
    }
    let (h10, h20) = (hodge.h10 as i64, hodge.h20 as i64);
    if h10 + h20 == 0 {
        return Ok(None);
    }
    // ⌈1 + h20/2 + h10⌉
    Ok(Some(1 + h10 + (h20 + 1) / 2))
}

/// Rejects profiles that no real surface can have: Smith parity or sign
/// violations, a failed Comessatti inequality, or a maximal real locus with
/// fewer components than the Hodge bound allows.
pub fn consistency_check(profile: &SurfaceProfile) -> Result<SmithReport> {
    let report = smith_defect(profile)?;
    if report.comessatti_ok == Some(false) {
        let real = derive_real_invariants(profile)?;
        return Err(Error::Unrealizable(format!(
            "Comessatti inequality fails: 2 − χ(X(ℝ)) = {} > h11 = {}",
            2 - real.chi,
            profile.hodge.map_or(0, |h| h.h11)
        )));
    }
    if let (true, Some(bound)) = (report.is_maximal, report.hodge_component_bound) {
        let r = profile.num_components();
        if r < bound {
            return Err(Error::Unrealizable(format!(
                "a maximal real structure on this surface needs at least {bound} real components, got {r}"
            )));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::RealComponent;
    use proptest::prelude::*;

    fn k3(components: Vec<RealComponent>) -> SurfaceProfile {
        SurfaceProfile::new("k3", [1, 0, 22, 0, 1]).with_hodge(0, 1, 20).with_components(components)
    }

    fn p2() -> SurfaceProfile {
        SurfaceProfile::new("p2", [1, 0, 1, 0, 1])
            .with_hodge(0, 0, 1)
            .with_components([RealComponent::PROJECTIVE_PLANE])
    }

    #[test]
    fn defect_examples() {
        let r = smith_defect(&k3(vec![RealComponent::Orientable { genus: 10 }, RealComponent::SPHERE])).unwrap();
        assert_eq!((r.beta_star_x, r.beta_star_r, r.defect, r.is_maximal), (24, 24, 0, true));

        let r = smith_defect(&p2()).unwrap();
        assert_eq!((r.defect, r.is_maximal), (0, true));

        let r = smith_defect(&k3(vec![RealComponent::SPHERE])).unwrap();
        assert_eq!((r.defect, r.is_maximal), (22, false));
    }

    #[test]
    fn smith_violations_are_errors() {
        // β₊(X(ℝ)) = 26 > 24
        let err = smith_defect(&k3(vec![RealComponent::Orientable { genus: 11 }, RealComponent::SPHERE]));
        assert!(matches!(err, Err(Error::SmithViolation(_))));
        // odd defect: 24 − 3
        let err = smith_defect(&k3(vec![RealComponent::PROJECTIVE_PLANE]));
        assert!(matches!(err, Err(Error::SmithViolation(_))));
    }

    #[test]
    fn comessatti_examples() {
        assert!(comessatti_check(&k3(vec![RealComponent::Orientable { genus: 10 }, RealComponent::SPHERE])).unwrap());
        assert!(comessatti_check(&p2()).unwrap());
        assert!(comessatti_check(&k3(vec![RealComponent::SPHERE; 12])).unwrap());
        // connected Σ₁₁: 2 − (2 − 22) = 22 > 20
        assert!(!comessatti_check(&k3(vec![RealComponent::Orientable { genus: 11 }])).unwrap());
        let bare = SurfaceProfile::new("x", [1, 0, 1, 0, 1]);
        assert!(matches!(comessatti_check(&bare), Err(Error::MissingHodge(_))));
    }

    #[test]
    fn hodge_bound_examples() {
        assert_eq!(hodge_obstruction_bound(&k3(vec![])).unwrap(), Some(2));
        assert_eq!(hodge_obstruction_bound(&p2()).unwrap(), None);
        let abelian = SurfaceProfile::new("ab", [1, 4, 6, 4, 1]).with_hodge(2, 1, 4);
        assert_eq!(hodge_obstruction_bound(&abelian).unwrap(), Some(4));
        let torsion = SurfaceProfile::new("enr", [1, 1, 12, 1, 1]).with_torsion(true, true).with_hodge(0, 0, 10);
        assert!(matches!(hodge_obstruction_bound(&torsion), Err(Error::NotApplicable { .. })));
    }

    #[test]
    fn consistency_rejects_connected_maximal_k3() {
        let err = consistency_check(&k3(vec![RealComponent::Orientable { genus: 11 }])).unwrap_err();
        assert!(matches!(err, Error::Unrealizable(_)), "{err}");
        assert!(consistency_check(&k3(vec![RealComponent::Orientable { genus: 10 }, RealComponent::SPHERE])).is_ok());
    }

    #[test]
    fn consistency_rejects_maximal_locus_below_bound() {
        // abelian data (bound 4) with a maximal locus of 3 components
        let p = SurfaceProfile::new("ab", [1, 4, 6, 4, 1])
            .with_hodge(2, 1, 4)
            .with_components([
                RealComponent::Orientable { genus: 5 },
                RealComponent::SPHERE,
                RealComponent::SPHERE,
            ]);
        let report = smith_defect(&p).unwrap();
        assert!(report.is_maximal);
        assert!(consistency_check(&p).is_err());
    }

    fn component() -> impl Strategy<Value = RealComponent> {
        prop_oneof![
            (0u32..20).prop_map(|genus| RealComponent::Orientable { genus }),
            (1u32..20).prop_map(|crosscaps| RealComponent::NonOrientable { crosscaps }),
        ]
    }

    /// Components with β₁(X) = b1 and β₂ chosen so that X is maximal.
    fn maximal() -> impl Strategy<Value = SurfaceProfile> {
        (prop::collection::vec(component(), 1..8), 0u32..5).prop_filter_map("β₂ < 0", |(comps, b1)| {
            let total: i64 = comps.iter().map(|c| c.beta_star()).sum();
            let b2 = total - 2 - 2 * b1 as i64;
            (b2 >= 0).then(|| SurfaceProfile::new("m", [1, b1, b2 as u32, b1, 1]).with_components(comps))
        })
    }

    proptest! {
        #[test]
        fn maximal_relations(p in maximal()) {
            let real = derive_real_invariants(&p).unwrap();
            prop_assert!(smith_defect(&p).unwrap().is_maximal);
            prop_assert_eq!(real.chi, 4 * real.r - p.beta_star());
            if p.beta1() == 0 {
                prop_assert_eq!(2 * real.r + real.beta1, 2 + p.beta2());
            }
        }

        #[test]
        fn accepted_defects_are_even(
            b1 in 0u32..6,
            b2 in 0u32..60,
            comps in prop::collection::vec(component(), 0..6),
        ) {
            let p = SurfaceProfile::new("x", [1, b1, b2, b1, 1]).with_components(comps);
            if let Ok(report) = smith_defect(&p) {
                prop_assert!(report.defect >= 0);
                prop_assert_eq!(report.defect % 2, 0);
            }
        }

        #[test]
        fn hodge_bound_is_enforced(h10 in 0u32..4, h20 in 0u32..6, r in 1usize..12) {
            // complex data of a surface with these Hodge numbers, maximal
            // locus of r components: r − 1 spheres plus one large component
            let h11 = 2 * h20 + 2;
            let (b1, b2) = (2 * h10, 2 * h20 + h11);
            let total = 2 + 2 * b1 + b2;
            let rest = total as i64 - 2 * (r as i64 - 1);
            prop_assume!(rest >= 2);
            let big = if rest % 2 == 0 {
                RealComponent::Orientable { genus: (rest as u32 - 2) / 2 }
            } else {
                RealComponent::NonOrientable { crosscaps: rest as u32 - 2 }
            };
            let mut comps = vec![big];
            comps.extend(std::iter::repeat_n(RealComponent::SPHERE, r - 1));
            let p = SurfaceProfile::new("x", [1, b1, b2, b1, 1]).with_hodge(h10, h20, h11).with_components(comps);
            prop_assert!(smith_defect(&p).unwrap().is_maximal);
            if let Some(bound) = hodge_obstruction_bound(&p).unwrap() {
                if (r as i64) < bound {
                    prop_assert!(consistency_check(&p).is_err());
                }
            }
        }
    }
}
