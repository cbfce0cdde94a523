//! Hilbert square X^[2] of a real surface: closed formulas for its complex
//! and real Betti numbers and the maximality verdict.
//!
//! The real locus of X^[2] splits into a main component, glued from pieces
//! ℍ₀ (the quotient of X minus its real points) and ℍ₁..ℍ_r (one per real
//! component F_i, the symmetric square minus the diagonal), plus the
//! products F_i × F_j for i < j. Everything below is exact integer
//! arithmetic on profile data.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::profile::{derive_real_invariants, RankBound, RealInvariants, SurfaceProfile};
use crate::smith::{smith_defect, SmithReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    Maximal,
    NotMaximal,
    Unknown,
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decision::Maximal => "Maximal",
            Decision::NotMaximal => "NotMaximal",
            Decision::Unknown => "Unknown",
        })
    }
}

/// The result a decision rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// X^[2] maximal forces X maximal.
    Converse,
    /// X^[2] maximal forces X(ℝ) ≠ ∅.
    NonEmptiness,
    /// H₁(X; F₂) = 0: X^[2] maximal iff X(ℝ) connected.
    ConnectedLocusCriterion,
    /// H₁(X; F₂) = 0 and h^{2,0} > 0: every maximal real structure has
    /// disconnected real locus, so X^[2] is never maximal.
    HodgeObstruction,
    /// Tors₂ H₁(X; ℤ) = 0 and X(ℝ) connected: X^[2] maximal.
    ConnectedLocusTorsionFree,
    /// Tors₂ H₁(X; ℤ) = 0 and β₀(X(ℝ)) > 1 + β₁(X): X^[2] not maximal.
    TooManyComponents,
    /// X^[2] maximal iff rank μ = 1 + β₁(X), with rank μ supplied by a hint.
    RankMuCriterion,
    /// Two-torsion case with a known β₊(X^[2]) and the bound rank μ ≥ r.
    KnownTotalWithTorsion,
    /// Irregular cubic 4-fold class: the Fano variety's real F₂-Betti total
    /// falls short of the complex one.
    FanoIrregularClass,
}

impl Rule {
    pub fn citation(&self) -> &'static str {
        match self {
            Rule::Converse => "converse: X^[2] maximal implies X maximal",
            Rule::NonEmptiness => "non-emptiness: X^[2] maximal implies X(R) nonempty",
            Rule::ConnectedLocusCriterion => {
                "H1(X;F2)=0 criterion: X^[2] maximal iff X(R) connected (rational surfaces included)"
            }
            Rule::HodgeObstruction => {
                "H1(X;F2)=0 and h20>0: maximal real loci are disconnected, so X^[2] is not maximal (K3 case)"
            }
            Rule::ConnectedLocusTorsionFree => {
                "Tors2 H1(X;Z)=0, X(R) connected: X^[2] maximal"
            }
            Rule::TooManyComponents => {
                "Tors2 H1(X;Z)=0, b0(X(R)) > 1+b1(X): X^[2] not maximal"
            }
            Rule::RankMuCriterion => "X^[2] maximal iff rank mu = 1+b1(X) (rank mu from hint)",
            Rule::KnownTotalWithTorsion => {
                "2-torsion case: known b*(X^[2]) and rank mu >= r leave b1(X^[2](R)) short (Enriques case)"
            }
            Rule::FanoIrregularClass => {
                "irregular cubic 4-fold: 6(S2xS2) plus the main component for a K3 with 3 S2 falls short of b*(X^[2])"
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.citation())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub decision: Decision,
    /// Always present unless the decision is `Unknown`.
    pub rule: Option<Rule>,
    pub notes: String,
}

impl Verdict {
    fn decided(decision: Decision, rule: Rule, notes: impl Into<String>) -> Self {
        Verdict { decision, rule: Some(rule), notes: notes.into() }
    }

    fn unknown(notes: impl Into<String>) -> Self {
        Verdict { decision: Decision::Unknown, rule: None, notes: notes.into() }
    }
}

/// β₊(X^[2]) from the closed formula; a lower bound when `exact` is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComplexTotal {
    pub value: i64,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RankMuSource {
    Beta1Zero,
    ConnectedCase,
    OverflowCase,
    Hint,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankMu {
    pub value: Option<i64>,
    /// Best known lower bound; equals `value` when that is present.
    pub lower_bound: i64,
    pub source: RankMuSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceBetti {
    pub beta1_h0: i64,
    /// β₁(ℍ_i) for i = 1..r, in component order.
    pub beta1_hi: Vec<i64>,
    pub beta1_extra: i64,
    pub rank_mu: RankMu,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hilb2Report {
    pub smith: SmithReport,
    pub beta_star_hilb2_c: ComplexTotal,
    pub known_beta_star_hilb2: Option<i64>,
    pub chi_hilb2_r: i64,
    pub beta_hilb2_r: Option<[i64; 5]>,
    pub required_beta1: Option<i64>,
    pub actual_beta1: Option<i64>,
    pub rank_mu: Option<RankMu>,
    pub defect: Option<i64>,
    pub verdict: Verdict,
}

fn not_applicable(op: &'static str, reason: impl Into<String>) -> Error {
    Error::NotApplicable { op, reason: reason.into() }
}

fn require_maximal(profile: &SurfaceProfile, op: &'static str) -> Result<RealInvariants> {
    let smith = smith_defect(profile)?;
    if !smith.is_maximal {
        return Err(not_applicable(
            op,
            format!(
                "X is not maximal (Smith defect {}); X^[2] cannot be maximal, use hilb2_verdict",
                smith.defect
            ),
        ));
    }
    derive_real_invariants(profile)
}

fn require_no_h1_torsion(profile: &SurfaceProfile, op: &'static str) -> Result<()> {
    if profile.tors2_h1 {
        Err(not_applicable(op, "H₁(X; ℤ) has 2-torsion"))
    } else {
        Ok(())
    }
}

/// ½β₊(β₊+1) + β₊ − 2β₁; exact without 2-torsion, a lower bound otherwise.
pub fn beta_star_hilb2_complex(profile: &SurfaceProfile) -> Result<ComplexTotal> {
    profile.ensure_valid()?;
    let b = profile.beta_star();
    Ok(ComplexTotal {
        value: b * (b + 1) / 2 + b - 2 * profile.beta1(),
        exact: !profile.tors2_hstar,
    })
}

/// Exact β₊(X^[2]) if known: from the closed formula or the profile override.
fn effective_total(profile: &SurfaceProfile) -> Result<Option<i64>> {
    let total = beta_star_hilb2_complex(profile)?;
    Ok(if total.exact {
        Some(total.value)
    } else {
        profile.known_beta_star_hilb2.map(|v| v as i64)
    })
}

/// χ(X^[2](ℝ)) = ½β₊ − 2β₁ + ½χ(X(ℝ))² − χ(X(ℝ)).
pub fn chi_hilb2_real(profile: &SurfaceProfile) -> Result<i64> {
    let real = derive_real_invariants(profile)?;
    let twice = profile.beta_star() + real.chi * real.chi - 2 * real.chi;
    if twice % 2 != 0 {
        return Err(Error::Internal(format!(
            "β₊(X) = {} and χ(X(ℝ)) = {} have different parity",
            profile.beta_star(),
            real.chi
        )));
    }
    Ok(twice / 2 - 2 * profile.beta1())
}

/// β₁ of the union of F_i × F_j over i < j, by the Künneth formula:
/// r·β₊(X(ℝ)) − 2r² − β₊(X(ℝ)) + 2r.
pub fn beta1_extra(profile: &SurfaceProfile) -> Result<i64> {
    let real = derive_real_invariants(profile)?;
    Ok(extra_from(&real))
}

fn extra_from(real: &RealInvariants) -> i64 {
    let (r, b) = (real.r, real.beta_star);
    r * b - 2 * r * r - b + 2 * r
}

/// Rank of the Mayer–Vietoris gluing map μ, where it is determined.
pub fn rank_mu_rule(profile: &SurfaceProfile) -> Result<RankMu> {
    let real = require_maximal(profile, "rank_mu_rule")?;
    require_no_h1_torsion(profile, "rank_mu_rule")?;
    let (r, b1) = (real.r, profile.beta1());
    let exact = |v: i64, source| RankMu { value: Some(v), lower_bound: v, source };
    if b1 == 0 {
        return Ok(exact(r, RankMuSource::Beta1Zero));
    }
    if r == 1 {
        return Ok(exact(1 + b1, RankMuSource::ConnectedCase));
    }
    if r > 1 + b1 {
        return Ok(RankMu { value: None, lower_bound: 2 + b1, source: RankMuSource::OverflowCase });
    }
    // the gluing map is onto H₁(ℍ₀) and has rank r on the ℍ_i blocks
    let floor = (1 + b1).max(r);
    Ok(match profile.rank_mu_hint.as_ref().map(|h| h.bound) {
        Some(RankBound::Exact(n)) => exact(n as i64, RankMuSource::Hint),
        Some(RankBound::AtLeast(n)) => {
            RankMu { value: None, lower_bound: floor.max(n as i64), source: RankMuSource::Hint }
        }
        None => RankMu { value: None, lower_bound: floor, source: RankMuSource::Unknown },
    })
}

/// First Betti numbers of the pieces ℍ₀, ℍ₁..ℍ_r and of the extra part.
pub fn beta1_pieces(profile: &SurfaceProfile) -> Result<PieceBetti> {
    let real = require_maximal(profile, "beta1_pieces")?;
    require_no_h1_torsion(profile, "beta1_pieces")?;
    if real.r == 0 {
        return Err(not_applicable("beta1_pieces", "empty real locus; use hilb2_verdict"));
    }
    let beta1_hi: Vec<i64> = profile.real_components.iter().map(|c| c.beta_star() - 1).collect();
    let sum: i64 = beta1_hi.iter().sum();
    if sum != profile.beta_star() - real.r {
        return Err(Error::Internal(format!(
            "Σβ₁(ℍ_i) = {sum} differs from β₊ − r = {}",
            profile.beta_star() - real.r
        )));
    }
    Ok(PieceBetti {
        beta1_h0: 1 + profile.beta1(),
        beta1_hi,
        beta1_extra: extra_from(&real),
        rank_mu: rank_mu_rule(profile)?,
    })
}

/// The value β₁(X^[2](ℝ)) must take for X^[2] to be maximal:
/// ¼[β₊(X^[2]) − χ(X^[2](ℝ))], which equals r·β₊ − 2r² + r when the closed
/// formula for β₊(X^[2]) applies.
pub fn required_beta1(profile: &SurfaceProfile) -> Result<i64> {
    let real = require_maximal(profile, "required_beta1")?;
    let total = effective_total(profile)?.ok_or_else(|| {
        not_applicable(
            "required_beta1",
            "β₊(X^[2]) is only bounded below under 2-torsion; supply beta_star_hilb2",
        )
    })?;
    let diff = total - chi_hilb2_real(profile)?;
    if diff % 4 != 0 {
        return Err(Error::Internal(format!(
            "β₊(X^[2]) − χ(X^[2](ℝ)) = {diff} is not divisible by 4"
        )));
    }
    let raw = diff / 4;
    if !profile.tors2_hstar {
        let (r, b) = (real.r, profile.beta_star());
        let closed = r * b - 2 * r * r + r;
        if raw != closed {
            return Err(Error::Internal(format!("required β₁ {raw} ≠ closed form {closed}")));
        }
    }
    Ok(raw)
}

/// β₁(X^[2](ℝ)) = β₁(extra) + Σᵢ β₁(ℍᵢ) − rank μ, or `None` while rank μ is
/// undetermined.
pub fn actual_beta1_hilb2_real(profile: &SurfaceProfile) -> Result<Option<i64>> {
    let pieces = beta1_pieces(profile)?;
    Ok(pieces.rank_mu.value.map(|rank| {
        pieces.beta1_extra + pieces.beta1_h0 + pieces.beta1_hi.iter().sum::<i64>() - rank
    }))
}

/// Betti numbers of a closed 4-manifold with `components` components, Euler
/// characteristic `chi` and first Betti number `beta1` (F₂ Poincaré duality).
fn closed_fourfold_betti(components: i64, chi: i64, beta1: i64) -> [i64; 5] {
    let beta2 = chi - 2 * components + 2 * beta1;
    [components, beta1, beta2, beta1, components]
}

fn component_count(r: i64) -> i64 {
    r * (r - 1) / 2 + 1
}

/// Full Betti vector of X^[2](ℝ) when X is maximal with H₁(X; F₂) = 0.
pub fn real_betti_table(profile: &SurfaceProfile) -> Result<[i64; 5]> {
    let real = require_maximal(profile, "real_betti_table")?;
    require_no_h1_torsion(profile, "real_betti_table")?;
    if profile.beta1() != 0 {
        return Err(not_applicable("real_betti_table", "needs β₁(X) = 0"));
    }
    let (r, b) = (real.r, profile.beta_star());
    let outer = r * (r - 1) / 2 + 1;
    let middle = r * b + 1 - 2 * r * r;
    let centre = b * (b - 1) / 2 - 2 * (r - 1) * b + 3 * r * (r - 1);
    Ok([outer, middle, centre, middle, outer])
}

fn sum(b: &[i64; 5]) -> i64 {
    b.iter().sum()
}

/// Decides maximality of X^[2], first match wins:
/// X not maximal; X(ℝ) empty; H₁(X; F₂) = 0; torsion-free H₁ with β₁ > 0
/// (connected locus, too many components, or rank μ); 2-torsion in H₁ with a
/// known β₊(X^[2]).
pub fn hilb2_verdict(profile: &SurfaceProfile) -> Result<Hilb2Report> {
    let smith = smith_defect(profile)?;
    let real = derive_real_invariants(profile)?;
    let mut report = Hilb2Report {
        smith: smith.clone(),
        beta_star_hilb2_c: beta_star_hilb2_complex(profile)?,
        known_beta_star_hilb2: profile.known_beta_star_hilb2.map(|v| v as i64),
        chi_hilb2_r: chi_hilb2_real(profile)?,
        beta_hilb2_r: None,
        required_beta1: None,
        actual_beta1: None,
        rank_mu: None,
        defect: None,
        verdict: Verdict::unknown(""),
    };

    if !smith.is_maximal {
        report.verdict = Verdict::decided(
            Decision::NotMaximal,
            Rule::Converse,
            format!("X has Smith defect {}", smith.defect),
        );
        return Ok(report);
    }
    if real.r == 0 {
        report.verdict = Verdict::decided(Decision::NotMaximal, Rule::NonEmptiness, "X(R) is empty");
        return Ok(report);
    }

    let (r, b1) = (real.r, profile.beta1());
    report.required_beta1 = effective_total(profile)?.map(|_| required_beta1(profile)).transpose()?;

    if profile.tors2_h1 {
        report.verdict = torsion_verdict(profile, &real, report.required_beta1);
        return Ok(report);
    }

    let rank = rank_mu_rule(profile)?;
    report.rank_mu = Some(rank);
    report.actual_beta1 = actual_beta1_hilb2_real(profile)?;

    let verdict = if b1 == 0 {
        let defect = 4 * (r - 1);
        report.defect = Some(defect);
        let h20 = profile.hodge.map_or(0, |h| h.h20);
        if r == 1 {
            Verdict::decided(Decision::Maximal, Rule::ConnectedLocusCriterion, "X(R) connected")
        } else if h20 > 0 {
            Verdict::decided(
                Decision::NotMaximal,
                Rule::HodgeObstruction,
                format!("h20 = {h20} > 0 forces r >= 2; here r = {r}, defect {defect}"),
            )
        } else {
            Verdict::decided(
                Decision::NotMaximal,
                Rule::ConnectedLocusCriterion,
                format!("X(R) has {r} components, defect {defect}"),
            )
        }
    } else if r == 1 {
        report.defect = Some(0);
        Verdict::decided(
            Decision::Maximal,
            Rule::ConnectedLocusTorsionFree,
            format!("rank mu = 1 + b1 = {}", 1 + b1),
        )
    } else if r > 1 + b1 {
        Verdict::decided(
            Decision::NotMaximal,
            Rule::TooManyComponents,
            format!("r = {r} > 1 + b1 = {}; rank mu >= {}, defect >= 4", 1 + b1, rank.lower_bound),
        )
    } else {
        match rank.value {
            Some(m) => {
                let defect = 4 * (m - b1 - 1);
                report.defect = Some(defect);
                let decision = if m == 1 + b1 { Decision::Maximal } else { Decision::NotMaximal };
                Verdict::decided(decision, Rule::RankMuCriterion, format!("rank mu = {m}, defect {defect}"))
            }
            None if rank.lower_bound > 1 + b1 => Verdict::decided(
                Decision::NotMaximal,
                Rule::RankMuCriterion,
                format!(
                    "rank mu >= {} > 1 + b1 = {}; defect >= {}",
                    rank.lower_bound,
                    1 + b1,
                    4 * (rank.lower_bound - b1 - 1)
                ),
            ),
            None => Verdict::unknown(format!(
                "1 < r = {r} <= 1 + b1 = {}: rank mu undetermined without a hint",
                1 + b1
            )),
        }
    };
    report.verdict = verdict;

    if let (Some(actual), Some(total)) = (report.actual_beta1, effective_total(profile)?) {
        let betti = closed_fourfold_betti(component_count(r), report.chi_hilb2_r, actual);
        let defect = total - sum(&betti);
        if defect < 0 || Some(defect) != report.defect {
            return Err(Error::Internal(format!(
                "real Betti total {} inconsistent with β₊(X^[2]) = {total} and defect {:?}",
                sum(&betti),
                report.defect
            )));
        }
        if b1 == 0 && betti != real_betti_table(profile)? {
            return Err(Error::Internal("real Betti table disagrees with the general formula".into()));
        }
        report.beta_hilb2_r = Some(betti);
        if let Some(required) = report.required_beta1 {
            let maximal = report.verdict.decision == Decision::Maximal;
            if (actual == required) != maximal {
                return Err(Error::Internal(format!(
                    "verdict {} but actual β₁ {actual} vs required {required}",
                    report.verdict.decision
                )));
            }
        }
    }
    if report.verdict.decision == Decision::Maximal {
        report.verdict.notes.push_str("; X^[3] is then maximal as well");
    }
    Ok(report)
}

fn torsion_verdict(profile: &SurfaceProfile, real: &RealInvariants, required: Option<i64>) -> Verdict {
    let Some(required) = required else {
        return Verdict::unknown(
            "H1(X;Z) has 2-torsion and b*(X^[2]) is only bounded below; supply beta_star_hilb2",
        );
    };
    let r = real.r;
    if r < 2 {
        return Verdict::unknown("H1(X;Z) has 2-torsion and X(R) is connected");
    }
    // rank μ ≥ r from the blocks of the ℍ_i
    let upper = extra_from(real) + (1 + profile.beta1()) + (profile.beta_star() - r) - r;
    if upper < required {
        Verdict::decided(
            Decision::NotMaximal,
            Rule::KnownTotalWithTorsion,
            format!("b1(X^[2](R)) <= {upper} < required {required}"),
        )
    } else {
        Verdict::unknown(format!(
            "H1(X;Z) has 2-torsion: b1(X^[2](R)) <= {upper} does not rule out the required {required}"
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::RealComponent;
    use crate::profile::RealComponent::{NonOrientable, Orientable};
    use proptest::prelude::*;

    fn k3(components: Vec<RealComponent>) -> SurfaceProfile {
        SurfaceProfile::new("k3", [1, 0, 22, 0, 1]).with_hodge(0, 1, 20).with_components(components)
    }

    fn k3_max() -> SurfaceProfile {
        k3(vec![Orientable { genus: 10 }, RealComponent::SPHERE])
    }

    fn p2() -> SurfaceProfile {
        SurfaceProfile::new("p2", [1, 0, 1, 0, 1])
            .with_hodge(0, 0, 1)
            .with_components([RealComponent::PROJECTIVE_PLANE])
    }

    fn ruled(g: u32) -> SurfaceProfile {
        SurfaceProfile::new("ruled", [1, 2 * g, 2, 2 * g, 1])
            .with_hodge(g, 0, 2)
            .with_components(vec![RealComponent::TORUS; g as usize + 1])
    }

    fn enriques(components: Vec<RealComponent>) -> SurfaceProfile {
        SurfaceProfile::new("enriques", [1, 1, 12, 1, 1])
            .with_torsion(true, true)
            .with_hodge(0, 0, 10)
            .with_components(components)
            .with_known_beta_star_hilb2(154)
    }

    #[test]
    fn complex_totals() {
        assert_eq!(beta_star_hilb2_complex(&k3_max()).unwrap(), ComplexTotal { value: 324, exact: true });
        assert_eq!(beta_star_hilb2_complex(&p2()).unwrap(), ComplexTotal { value: 9, exact: true });
        let e = enriques(vec![]);
        assert_eq!(beta_star_hilb2_complex(&e).unwrap(), ComplexTotal { value: 150, exact: false });
    }

    #[test]
    fn real_euler_characteristics() {
        assert_eq!(chi_hilb2_real(&k3_max()).unwrap(), 156);
        assert_eq!(chi_hilb2_real(&p2()).unwrap(), 1);
        assert_eq!(chi_hilb2_real(&k3(vec![])).unwrap(), 12);
    }

    #[test]
    fn chi_parity_failure_is_internal_error() {
        // β₊ = 24 with χ(X(ℝ)) = 1: formally valid, but no involution does this
        let p = k3(vec![RealComponent::PROJECTIVE_PLANE]);
        assert!(matches!(chi_hilb2_real(&p), Err(Error::Internal(_))));
    }

    #[test]
    fn extra_component_betti() {
        assert_eq!(beta1_extra(&p2()).unwrap(), 0);
        assert_eq!(beta1_extra(&k3_max()).unwrap(), 20);
        // maximal β₁ = 0 form: rβ₂ − 2r² + 4r − β₂ − 2
        assert_eq!(2 * 22 - 8 + 8 - 22 - 2, 20);
        let tori = SurfaceProfile::new("t", [1, 0, 10, 0, 1]).with_components(vec![RealComponent::TORUS; 3]);
        assert_eq!(beta1_extra(&tori).unwrap(), 12);
    }

    #[test]
    fn pieces() {
        let p = beta1_pieces(&p2()).unwrap();
        assert_eq!((p.beta1_h0, p.beta1_hi.clone()), (1, vec![2]));
        let k = beta1_pieces(&k3_max()).unwrap();
        assert_eq!((k.beta1_h0, k.beta1_hi.clone()), (1, vec![21, 1]));
        let r = beta1_pieces(&ruled(2)).unwrap();
        assert_eq!((r.beta1_h0, r.beta1_hi.clone()), (5, vec![3, 3, 3]));

        assert!(matches!(beta1_pieces(&k3(vec![RealComponent::SPHERE])), Err(Error::NotApplicable { .. })));
    }

    #[test]
    fn rank_mu_cases() {
        let one_sphere = SurfaceProfile::new("s", [1, 0, 0, 0, 1]).with_components([RealComponent::SPHERE]);
        assert_eq!(
            rank_mu_rule(&one_sphere).unwrap(),
            RankMu { value: Some(1), lower_bound: 1, source: RankMuSource::Beta1Zero }
        );

        let hinted = ruled(2).with_rank_mu(RankBound::Exact(5), "all [F_i]=0 in H1(X/conj)");
        let m = rank_mu_rule(&hinted).unwrap();
        assert_eq!((m.value, m.source), (Some(5), RankMuSource::Hint));

        let abelian = SurfaceProfile::new("ab", [1, 4, 6, 4, 1])
            .with_hodge(2, 1, 4)
            .with_components(vec![RealComponent::TORUS; 4]);
        let m = rank_mu_rule(&abelian).unwrap();
        assert_eq!((m.value, m.source), (None, RankMuSource::Unknown));
        let m = rank_mu_rule(&abelian.with_rank_mu(RankBound::AtLeast(6), "rank mu > 5")).unwrap();
        assert_eq!((m.value, m.lower_bound, m.source), (None, 6, RankMuSource::Hint));
    }

    #[test]
    fn required_and_actual() {
        assert_eq!(required_beta1(&p2()).unwrap(), 2);
        assert_eq!(required_beta1(&k3_max()).unwrap(), 42);
        assert_eq!(actual_beta1_hilb2_real(&p2()).unwrap(), Some(2));
        assert_eq!(actual_beta1_hilb2_real(&k3_max()).unwrap(), Some(41));
        // closed β₁ = 0 form 1 + rβ₂ + 2r − 2r²
        assert_eq!(1 + 2 * 22 + 4 - 8, 41);
        assert!(required_beta1(&k3(vec![RealComponent::SPHERE])).is_err());
    }

    #[test]
    fn betti_tables() {
        assert_eq!(real_betti_table(&p2()).unwrap(), [1, 2, 3, 2, 1]);
        assert_eq!(real_betti_table(&k3_max()).unwrap(), [2, 41, 234, 41, 2]);
        assert!(real_betti_table(&ruled(1)).is_err());
    }

    #[test]
    fn verdicts() {
        let v = hilb2_verdict(&p2()).unwrap();
        assert_eq!(v.verdict.decision, Decision::Maximal);
        assert_eq!(v.verdict.rule, Some(Rule::ConnectedLocusCriterion));
        assert_eq!(v.beta_hilb2_r, Some([1, 2, 3, 2, 1]));
        assert_eq!(v.defect, Some(0));

        let v = hilb2_verdict(&k3_max()).unwrap();
        assert_eq!(v.verdict.decision, Decision::NotMaximal);
        assert_eq!(v.verdict.rule, Some(Rule::HodgeObstruction));
        assert_eq!(v.defect, Some(4));
        assert_eq!(v.beta_hilb2_r, Some([2, 41, 234, 41, 2]));

        let v = hilb2_verdict(&k3(vec![RealComponent::SPHERE])).unwrap();
        assert_eq!(v.verdict.rule, Some(Rule::Converse));

        let hinted = ruled(2).with_rank_mu(RankBound::Exact(5), "all [F_i]=0 in H1(X/conj)");
        let v = hilb2_verdict(&hinted).unwrap();
        assert_eq!(v.verdict.decision, Decision::Maximal);
        assert_eq!(v.defect, Some(0));
        assert_eq!(v.actual_beta1, v.required_beta1);

        let v = hilb2_verdict(&ruled(2)).unwrap();
        assert_eq!(v.verdict.decision, Decision::Unknown);
        assert_eq!(v.verdict.rule, None);

        let abelian = SurfaceProfile::new("ab", [1, 4, 6, 4, 1])
            .with_hodge(2, 1, 4)
            .with_components(vec![RealComponent::TORUS; 4])
            .with_rank_mu(RankBound::AtLeast(6), "rank mu > 5");
        let v = hilb2_verdict(&abelian).unwrap();
        assert_eq!(v.verdict.decision, Decision::NotMaximal);
        assert_eq!(v.defect, None);
    }

    #[test]
    fn empty_real_locus_of_maximal_looking_data() {
        // β₊ = 0 cannot occur for a valid surface, so empty loci are never
        // maximal; the verdict short-circuits through the converse rule
        let v = hilb2_verdict(&k3(vec![])).unwrap();
        assert_eq!(v.verdict.rule, Some(Rule::Converse));
    }

    #[test]
    fn enriques_is_never_maximal_for_disconnected_loci() {
        // β₊(X(ℝ)) = 16 spread over r ≥ 2 non-orientable components
        for r in 2u32..=5 {
            let mut comps = vec![NonOrientable { crosscaps: 1 }; r as usize - 1];
            comps.push(NonOrientable { crosscaps: 14 - 3 * (r - 1) });
            let v = hilb2_verdict(&enriques(comps)).unwrap();
            assert_eq!(v.verdict.decision, Decision::NotMaximal, "r = {r}");
            assert_eq!(v.verdict.rule, Some(Rule::KnownTotalWithTorsion));
            assert_eq!(v.beta_star_hilb2_c, ComplexTotal { value: 150, exact: false });
        }
        let without_total = SurfaceProfile::new("enr", [1, 1, 12, 1, 1])
            .with_torsion(true, true)
            .with_components([NonOrientable { crosscaps: 10 }, NonOrientable { crosscaps: 2 }]);
        assert_eq!(hilb2_verdict(&without_total).unwrap().verdict.decision, Decision::Unknown);
    }

    #[test]
    fn too_many_components() {
        // product of two maximal genus-3 curves
        let p = SurfaceProfile::new("c3xc3", [1, 12, 38, 12, 1])
            .with_hodge(6, 9, 20)
            .with_components(vec![RealComponent::TORUS; 16]);
        let v = hilb2_verdict(&p).unwrap();
        assert_eq!(v.verdict.rule, Some(Rule::TooManyComponents));
        assert_eq!(v.rank_mu.unwrap().source, RankMuSource::OverflowCase);
    }

    fn component() -> impl Strategy<Value = RealComponent> {
        prop_oneof![
            (0u32..15).prop_map(|genus| Orientable { genus }),
            (1u32..15).prop_map(|crosscaps| NonOrientable { crosscaps }),
        ]
    }

    /// Maximal profiles with torsion-free H₁ and β₁(X) = b1.
    fn maximal() -> impl Strategy<Value = SurfaceProfile> {
        (prop::collection::vec(component(), 1..7), 0u32..4).prop_filter_map("β₂ < 0", |(comps, b1)| {
            let total: i64 = comps.iter().map(|c| c.beta_star()).sum();
            let b2 = total - 2 - 2 * b1 as i64;
            (b2 >= 0).then(|| SurfaceProfile::new("m", [1, b1, b2 as u32, b1, 1]).with_components(comps))
        })
    }

    proptest! {
        #[test]
        fn required_matches_closed_form(p in maximal()) {
            let real = derive_real_invariants(&p).unwrap();
            let (r, b) = (real.r, p.beta_star());
            prop_assert_eq!(required_beta1(&p).unwrap(), r * b - 2 * r * r + r);
            let total = beta_star_hilb2_complex(&p).unwrap().value;
            prop_assert_eq!(total - chi_hilb2_real(&p).unwrap(), 4 * (r * b - 2 * r * r + r));
        }

        #[test]
        fn piece_betti_sum(p in maximal()) {
            let pieces = beta1_pieces(&p).unwrap();
            let r = p.num_components();
            let glued = pieces.beta1_h0 + pieces.beta1_hi.iter().sum::<i64>();
            prop_assert_eq!(glued, 1 + p.beta1() + p.beta_star() - r);
            prop_assert!(pieces.rank_mu.lower_bound >= r.min(1 + p.beta1()));
        }

        #[test]
        fn verdict_agrees_with_betti_count(p in maximal()) {
            let report = hilb2_verdict(&p).unwrap();
            let r = p.num_components();
            if let (Some(actual), Some(required)) = (report.actual_beta1, report.required_beta1) {
                prop_assert_eq!(report.verdict.decision == Decision::Maximal, actual == required);
                prop_assert_eq!(report.defect, Some(4 * (required - actual)));
            }
            if r == 1 {
                prop_assert_eq!(report.verdict.decision, Decision::Maximal);
                prop_assert_eq!(report.actual_beta1, report.required_beta1);
            }
            if p.beta1() == 0 {
                prop_assert_eq!(report.verdict.decision == Decision::Maximal, r == 1);
            }
            if r > 1 + p.beta1() {
                prop_assert_eq!(report.verdict.decision, Decision::NotMaximal);
            }
        }

        #[test]
        fn real_table_is_consistent(p in maximal()) {
            let report = hilb2_verdict(&p).unwrap();
            if let Some(table) = report.beta_hilb2_r {
                let alt = table[0] - table[1] + table[2] - table[3] + table[4];
                prop_assert_eq!(alt, report.chi_hilb2_r);
                prop_assert!(table.iter().sum::<i64>() <= report.beta_star_hilb2_c.value);
                prop_assert!(table.iter().all(|&b| b >= 0));
            }
        }
    }
}
