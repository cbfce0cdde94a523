//! Named example surfaces with known answers, used as a regression corpus.

use serde::Serialize;

use crate::error::Result;
use crate::hilb2::{chi_hilb2_real, hilb2_verdict, Decision, Rule, Verdict};
use crate::profile::RealComponent::{self, NonOrientable, Orientable};
use crate::profile::{derive_real_invariants, RankBound, SurfaceProfile};

/// What the verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Subject {
    /// The Hilbert square of the profile's surface.
    HilbertSquare,
    /// The Fano variety of lines of a cubic 4-fold in a regular class; the
    /// profile is the associated K3 surface.
    FanoRegular,
    /// The Fano variety of a cubic 4-fold in the irregular class; the profile
    /// is the K3 surface with three spheres as real locus.
    FanoIrregular,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub profile: SurfaceProfile,
    pub subject: Subject,
    pub description: &'static str,
    pub expected: Verdict,
    pub citation: &'static str,
    pub facts: Vec<(&'static str, i64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogOutcome {
    pub entry: CatalogEntry,
    /// Computed verdict, or the error message.
    pub computed: std::result::Result<Verdict, String>,
    pub agrees: bool,
}

/// Real loci of the three maximal classes of real cubic 4-folds.
pub const MAXIMAL_CUBIC_FOURFOLD_LOCI: [&str; 3] = [
    "RP4 # 10(S2 x S2) # (S1 x S3)",
    "RP4 # 6(S2 x S2) # 5(S1 x S3)",
    "RP4 # 2(S2 x S2) # 9(S1 x S3)",
];

fn expect(decision: Decision, rule: Rule) -> Verdict {
    Verdict { decision, rule: Some(rule), notes: String::new() }
}

fn entry(
    profile: SurfaceProfile,
    description: &'static str,
    decision: Decision,
    rule: Rule,
    citation: &'static str,
) -> CatalogEntry {
    CatalogEntry {
        profile,
        subject: Subject::HilbertSquare,
        description,
        expected: expect(decision, rule),
        citation,
        facts: Vec::new(),
    }
}

pub fn k3(name: &str, components: Vec<RealComponent>) -> SurfaceProfile {
    SurfaceProfile::new(name, [1, 0, 22, 0, 1]).with_hodge(0, 1, 20).with_components(components)
}

fn spheres(n: usize) -> impl Iterator<Item = RealComponent> {
    std::iter::repeat_n(RealComponent::SPHERE, n)
}

fn curve_product(name: &str, g1: u32, g2: u32) -> SurfaceProfile {
    SurfaceProfile::new(name, [1, 2 * (g1 + g2), 2 + 4 * g1 * g2, 2 * (g1 + g2), 1])
        .with_hodge(g1 + g2, g1 * g2, 2 + 2 * g1 * g2)
        .with_components(vec![RealComponent::TORUS; ((g1 + 1) * (g2 + 1)) as usize])
}

fn ruled(g: u32) -> CatalogEntry {
    let name = ["ruled_genus1", "ruled_genus2", "ruled_genus3"][g as usize - 1];
    let profile = SurfaceProfile::new(name, [1, 2 * g, 2, 2 * g, 1])
        .with_hodge(g, 0, 2)
        .with_components(vec![RealComponent::TORUS; g as usize + 1])
        .with_rank_mu(
            RankBound::Exact(2 * g + 1),
            "dim H1(X/conj) = g and every real component is zero in H1(X/conj)",
        );
    let mut e = entry(
        profile,
        "projectivized real rank-2 bundle over a maximal genus-g curve",
        Decision::Maximal,
        Rule::RankMuCriterion,
        "ruled surfaces over maximal curves have maximal Hilbert square",
    );
    e.facts.push(("rank_mu", 2 * g as i64 + 1));
    e
}

fn fano_regular(name: &str, components: Vec<RealComponent>, description: &'static str) -> CatalogEntry {
    CatalogEntry {
        profile: k3(name, components),
        subject: Subject::FanoRegular,
        description,
        expected: expect(Decision::NotMaximal, Rule::HodgeObstruction),
        citation: "regular cubic 4-folds: the Fano variety is equivariantly diffeomorphic to the Hilbert square of the associated K3",
        facts: vec![("fano_diffeomorphic_to_hilb2", 1)],
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = vec![
        entry(
            SurfaceProfile::new("projective_plane", [1, 0, 1, 0, 1])
                .with_hodge(0, 0, 1)
                .with_components([RealComponent::PROJECTIVE_PLANE]),
            "real projective plane",
            Decision::Maximal,
            Rule::ConnectedLocusCriterion,
            "maximal rational surfaces with connected real locus",
        ),
        entry(
            SurfaceProfile::new("ruled_rational_torus", [1, 0, 2, 0, 1])
                .with_hodge(0, 0, 2)
                .with_components([RealComponent::TORUS]),
            "real ruled surface over P1 with a torus as real locus",
            Decision::Maximal,
            Rule::ConnectedLocusCriterion,
            "maximal rational surfaces with connected real locus",
        ),
        entry(
            SurfaceProfile::new("elliptic_k1", [1, 0, 10, 0, 1])
                .with_hodge(0, 0, 10)
                .with_components([NonOrientable { crosscaps: 10 }]),
            "P2 blown up at the 9 real intersection points of two real cubics",
            Decision::Maximal,
            Rule::ConnectedLocusCriterion,
            "elliptic surfaces with chi(X) = 12: connected maximal real locus, maximal Hilbert square",
        ),
        entry(
            k3("elliptic_k2", vec![Orientable { genus: 10 }, RealComponent::SPHERE]),
            "maximal elliptic K3 surface (chi(X) = 24)",
            Decision::NotMaximal,
            Rule::HodgeObstruction,
            "elliptic surfaces with chi(X) = 12k, k >= 2: h20 > 0, Hilbert square never maximal",
        ),
        entry(
            SurfaceProfile::new("elliptic_k3", [1, 0, 34, 0, 1])
                .with_hodge(0, 2, 30)
                .with_components([Orientable { genus: 16 }, RealComponent::SPHERE]),
            "maximal elliptic surface with chi(X) = 36",
            Decision::NotMaximal,
            Rule::HodgeObstruction,
            "elliptic surfaces with chi(X) = 12k, k >= 2: h20 > 0, Hilbert square never maximal",
        ),
        ruled(1),
        ruled(2),
        ruled(3),
    ];

    let mut abelian = entry(
        SurfaceProfile::new("abelian", [1, 4, 6, 4, 1])
            .with_hodge(2, 1, 4)
            .with_components(vec![RealComponent::TORUS; 4])
            .with_rank_mu(
                RankBound::AtLeast(6),
                "conjugation acts as (-1) x id on E x E, which forces rank mu >= 6",
            ),
        "maximal real abelian surface",
        Decision::NotMaximal,
        Rule::RankMuCriterion,
        "no real abelian surface has a maximal Hilbert square",
    );
    abelian.facts.push(("rank_mu_lower_bound", 6));
    out.push(abelian);

    out.push(entry(
        SurfaceProfile::new("del_pezzo_k2_1", [1, 0, 9, 0, 1])
            .with_hodge(0, 0, 9)
            .with_components(std::iter::once(RealComponent::PROJECTIVE_PLANE).chain(spheres(4))),
        "real del Pezzo surface of degree 1 with real locus RP2 + 4 S2",
        Decision::NotMaximal,
        Rule::ConnectedLocusCriterion,
        "maximal rational surfaces with disconnected real locus",
    ));
    out.push(entry(
        curve_product("curves_3x3", 3, 3),
        "product of two maximal genus-3 curves",
        Decision::NotMaximal,
        Rule::TooManyComponents,
        "products of maximal curves with g1, g2 >= 2 and g1 + g2 > 4",
    ));
    out.push(entry(
        curve_product("curves_2x3", 2, 3),
        "product of maximal curves of genus 2 and 3",
        Decision::NotMaximal,
        Rule::TooManyComponents,
        "products of maximal curves with g1, g2 >= 2 and g1 + g2 > 4",
    ));

    let mut enriques = entry(
        SurfaceProfile::new("enriques", [1, 1, 12, 1, 1])
            .with_torsion(true, true)
            .with_hodge(0, 0, 10)
            .with_components([NonOrientable { crosscaps: 11 }, RealComponent::PROJECTIVE_PLANE])
            .with_known_beta_star_hilb2(154),
        "maximal real Enriques surface (a disconnected real locus with total Betti number 16)",
        Decision::NotMaximal,
        Rule::KnownTotalWithTorsion,
        "no real Enriques surface has a maximal Hilbert square",
    );
    enriques.facts.extend([("beta_star_hilb2", 154), ("beta_star_hilb2_lower_bound", 150)]);
    out.push(enriques);

    out.push(fano_regular(
        "cubic4_regular_sigma10_s2",
        vec![Orientable { genus: 10 }, RealComponent::SPHERE],
        "regular cubic 4-fold class whose K3 has real locus S10 + S2",
    ));
    out.push(fano_regular(
        "cubic4_regular_sigma6_5s2",
        std::iter::once(Orientable { genus: 6 }).chain(spheres(5)).collect(),
        "regular cubic 4-fold class whose K3 has real locus S6 + 5 S2",
    ));
    out.push(fano_regular(
        "cubic4_regular_sigma2_9s2",
        std::iter::once(Orientable { genus: 2 }).chain(spheres(9)).collect(),
        "regular cubic 4-fold class whose K3 has real locus S2 (genus 2) + 9 S2",
    ));
    let mut torus = fano_regular(
        "cubic4_regular_torus",
        vec![RealComponent::TORUS],
        "regular cubic 4-fold class whose K3 has a torus as real locus",
    );
    torus.expected = expect(Decision::NotMaximal, Rule::Converse);
    out.push(torus);
    out.push(CatalogEntry {
        profile: k3("cubic4_irregular", spheres(3).collect()),
        subject: Subject::FanoIrregular,
        description: "irregular cubic 4-fold class; Fano real locus is 6(S2 x S2) plus the main component for a K3 with 3 S2",
        expected: expect(Decision::NotMaximal, Rule::FanoIrregularClass),
        citation: "irregular cubic 4-folds: the Fano variety is not maximal",
        facts: vec![("fano_sphere_product_components", 6)],
    });
    out
}

/// F₂ Betti numbers of the main component of X^[2](ℝ) when H₁(X; F₂) = 0,
/// where rank μ = r: β₁ = 1 + Σ(β₊(F_i) − 1) − r.
pub fn main_component_betti(profile: &SurfaceProfile) -> Result<[i64; 5]> {
    let real = derive_real_invariants(profile)?;
    if profile.beta1() != 0 || profile.tors2_h1 || real.r == 0 {
        return Err(crate::error::Error::NotApplicable {
            op: "main_component_betti",
            reason: "needs H1(X; F2) = 0 and a nonempty real locus".into(),
        });
    }
    let beta1 = 1 + (real.beta_star - real.r) - real.r;
    let chis: Vec<i64> = profile.real_components.iter().map(|c| c.euler_characteristic()).collect();
    let mut chi_extra = 0;
    for i in 0..chis.len() {
        for j in i + 1..chis.len() {
            chi_extra += chis[i] * chis[j];
        }
    }
    let chi = chi_hilb2_real(profile)? - chi_extra;
    Ok([1, beta1, chi - 2 + 2 * beta1, beta1, 1])
}

/// Verdict on the Fano variety of lines of a cubic 4-fold, from the
/// associated K3 surface.
pub fn fano_verdict(k3: &SurfaceProfile, subject: Subject) -> Result<Verdict> {
    match subject {
        Subject::HilbertSquare => Ok(hilb2_verdict(k3)?.verdict),
        Subject::FanoRegular => {
            let all_spheres = k3.real_components.iter().all(|c| *c == RealComponent::SPHERE);
            if all_spheres && k3.real_components.len() == 10 {
                return Ok(Verdict {
                    decision: Decision::Unknown,
                    rule: None,
                    notes: "no equivariant diffeomorphism with the Hilbert square is known for the K3 with 10 S2".into(),
                });
            }
            Ok(hilb2_verdict(k3)?.verdict)
        }
        Subject::FanoIrregular => {
            let main = main_component_betti(k3)?;
            // six copies of S2 × S2, β₊ = 4 each
            let real_total = 6 * 4 + main.iter().sum::<i64>();
            let complex_total = hilb2_verdict(k3)?.beta_star_hilb2_c.value;
            let decision = if real_total < complex_total { Decision::NotMaximal } else { Decision::Unknown };
            Ok(Verdict {
                decision,
                rule: (decision == Decision::NotMaximal).then_some(Rule::FanoIrregularClass),
                notes: format!("real total {real_total} (main component {main:?}) vs complex total {complex_total}"),
            })
        }
    }
}

fn same_verdict(a: &Verdict, b: &Verdict) -> bool {
    a.decision == b.decision && a.rule == b.rule
}

pub fn run_entry(entry: &CatalogEntry) -> CatalogOutcome {
    let computed = crate::smith::consistency_check(&entry.profile)
        .and_then(|_| fano_verdict(&entry.profile, entry.subject))
        .map_err(|e| e.to_string());
    let agrees = computed.as_ref().is_ok_and(|v| same_verdict(v, &entry.expected));
    CatalogOutcome { entry: entry.clone(), computed, agrees }
}

/// Runs every entry whose name contains `filter`.
pub fn run_catalog_filtered(filter: Option<&str>) -> Vec<CatalogOutcome> {
    catalog()
        .iter()
        .filter(|e| filter.is_none_or(|f| e.profile.name.contains(f)))
        .map(run_entry)
        .collect()
}

pub fn run_catalog() -> Vec<CatalogOutcome> {
    run_catalog_filtered(None)
}
