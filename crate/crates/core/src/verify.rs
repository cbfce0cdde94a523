//! Oracle suites run by `maxhilb verify`: the Smith sequence on explicit
//! involutions, brute-force symmetric squares, and grid checks of the
//! closed formulas.

use serde::Serialize;

use crate::f2::involution::SimplicialInvolution;
use crate::f2::product::{kunneth_product, product_homology};
use crate::f2::smith_seq::{maximality_exactness, smith_sequence};
use crate::f2::surfaces::{self, OCTAHEDRON_ANTIPODAL, OCTAHEDRON_REFLECTION};
use crate::f2::symsq::symmetric_square_oracle;
use crate::goettsche::{check_cx_relation, hilb_betti_series};
use crate::hilb2::{actual_beta1_hilb2_real, beta_star_hilb2_complex, chi_hilb2_real, real_betti_table, required_beta1};
use crate::profile::{RealComponent, SurfaceProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Smith,
    Symsq,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::Smith, Suite::Symsq, Suite::Identities];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Smith => "smith",
            Suite::Symsq => "symsq",
            Suite::Identities => "identities",
        }
    }

    pub fn run(self) -> Vec<Check> {
        match self {
            Suite::Smith => smith_suite(),
            Suite::Symsq => symsq_suite(),
            Suite::Identities => identities_suite(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: crate::Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Check::new(name, passed, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

/// A maximal profile with H₁(X; F₂) = 0, β₂(X) = `beta2` and `r` real
/// components: r − 1 spheres and one component carrying the rest.
/// Needs 2 + β₂ ≥ 2r.
pub fn maximal_profile(beta2: u32, r: u32) -> SurfaceProfile {
    assert!(r >= 1 && 2 + beta2 >= 2 * r, "no maximal locus with r = {r}, beta2 = {beta2}");
    let rest = beta2 + 2 - 2 * r;
    let big = if rest.is_multiple_of(2) {
        RealComponent::Orientable { genus: rest / 2 }
    } else {
        RealComponent::NonOrientable { crosscaps: rest }
    };
    let mut components = vec![big];
    components.extend(std::iter::repeat_n(RealComponent::SPHERE, r as usize - 1));
    SurfaceProfile::new(format!("grid_b{beta2}_r{r}"), [1, 0, beta2, 0, 1]).with_components(components)
}

fn smith_check(name: &str, inv: &SimplicialInvolution, defect: usize, exact: bool) -> Check {
    Check::from_result(
        name,
        smith_sequence(inv).and_then(|d| {
            let max = maximality_exactness(inv)?;
            let nodes_ok = d.node_checks().iter().all(|(_, ok)| *ok);
            let passed = d.defect() == defect && d.smith_identity_holds() && max == exact && nodes_ok;
            Ok((
                passed,
                format!(
                    "H(X)={:?} H(F)={:?} H(X/c,F)={:?} defect={} exactness={max} subdivisions={}",
                    d.h_x,
                    d.h_fixed,
                    d.h_quotient_rel,
                    d.defect(),
                    d.subdivisions
                ),
            ))
        }),
    )
}

pub fn smith_suite() -> Vec<Check> {
    let octahedron = |map: [u32; 6]| SimplicialInvolution::new(surfaces::octahedron(), map.to_vec()).expect("valid model");
    let transposition = SimplicialInvolution::new(surfaces::tetrahedron_boundary(), vec![1, 0, 2, 3])
        .expect("valid model")
        .regularized();
    let shift = SimplicialInvolution::new(
        surfaces::grid_torus(6, 3),
        (0..18).map(|v| ((v / 3 + 3) % 6) * 3 + v % 3).collect(),
    )
    .expect("valid model");
    vec![
        smith_check("S2 reflection", &octahedron(OCTAHEDRON_REFLECTION), 0, true),
        smith_check("S2 antipodal", &octahedron(OCTAHEDRON_ANTIPODAL), 2, false),
        smith_check("T2 identity", &SimplicialInvolution::identity(surfaces::torus()), 0, true),
        smith_check("S2 transposition, subdivided", &transposition, 0, true),
        smith_check("T2 free shift", &shift, 4, false),
    ]
}

pub fn symsq_suite() -> Vec<Check> {
    [
        ("S2", RealComponent::SPHERE),
        ("T2", RealComponent::TORUS),
        ("RP2", RealComponent::PROJECTIVE_PLANE),
        ("Klein bottle", RealComponent::KLEIN_BOTTLE),
    ]
    .into_iter()
    .map(|(name, c)| {
        Check::from_result(
            format!("b3(F^(2)) = b1(F), F = {name}"),
            symmetric_square_oracle(c).map(|r| {
                (r.betti[3] == c.beta1() as usize, format!("betti {:?}, {} simplices", r.betti, r.simplices))
            }),
        )
    })
    .collect()
}

/// Grid over 1 ≤ r ≤ `max_r`, 0 ≤ β₂ ≤ `max_beta2`, 2 + β₂ ≥ 2r.
pub fn grid(max_r: u32, max_beta2: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=max_r).flat_map(move |r| (0..=max_beta2).filter(move |&b| 2 + b >= 2 * r).map(move |b| (r, b)))
}

pub fn identities_suite() -> Vec<Check> {
    let mut out = Vec::new();

    let k3 = SurfaceProfile::new("k3", [1, 0, 22, 0, 1])
        .with_components([RealComponent::Orientable { genus: 10 }, RealComponent::SPHERE]);
    out.push(Check::from_result(
        "K3: b*(X^[2]) closed form = Goettsche row sum",
        beta_star_hilb2_complex(&k3).and_then(|c| {
            let series = hilb_betti_series([1, 0, 22, 0, 1], 2)?;
            let sum = series.row_sum(2);
            Ok((sum == (c.value as u64).into() && c.exact, format!("{} vs {sum}", c.value)))
        }),
    ));

    let mut failures = Vec::new();
    for b1 in 0..=8u64 {
        for b2 in 0..=30u64 {
            if !check_cx_relation([1, b1, b2, b1, 1]) {
                failures.push((b1, b2));
            }
        }
    }
    out.push(Check::new("Goettsche n=2 total, b1 <= 8, b2 <= 30", failures.is_empty(), format!("failures {failures:?}")));

    let mut main_failures = Vec::new();
    let mut table_failures = Vec::new();
    let mut count = 0;
    for (r, b2) in grid(20, 200) {
        count += 1;
        let p = maximal_profile(b2, r);
        let run = || -> crate::Result<(bool, bool)> {
            let actual = actual_beta1_hilb2_real(&p)?.expect("rank mu is known when b1 = 0");
            let required = required_beta1(&p)?;
            let main = (actual == required) == (r == 1);
            let table = real_betti_table(&p)?;
            let alt = table[0] - table[1] + table[2] - table[3] + table[4];
            let total: i64 = table.iter().sum();
            let r = r as i64;
            let cx = beta_star_hilb2_complex(&p)?.value;
            let mut tables = alt == chi_hilb2_real(&p)? && total == cx - 4 * (r - 1);
            if r == 1 {
                tables &= required == p.beta_star() - 1;
            }
            Ok((main, tables))
        };
        match run() {
            Ok((main, tables)) => {
                if !main {
                    main_failures.push((r, b2));
                }
                if !tables {
                    table_failures.push((r, b2));
                }
            }
            Err(e) => {
                main_failures.push((r, b2));
                table_failures.push((r, b2));
                out.push(Check::new(format!("grid point r={r} b2={b2}"), false, e.to_string()));
            }
        }
    }
    out.push(Check::new(
        "X^[2] maximal iff r = 1 (b1 = 0, r <= 20, b2 <= 200)",
        main_failures.is_empty(),
        format!("{count} grid points, failures {main_failures:?}"),
    ));
    out.push(Check::new(
        "real Betti table vs chi and totals (same grid)",
        table_failures.is_empty(),
        format!("{count} grid points, failures {table_failures:?}"),
    ));

    for (name, k, l) in [
        ("T2 x T2", surfaces::torus(), surfaces::torus()),
        ("S2 x S2", surfaces::tetrahedron_boundary(), surfaces::tetrahedron_boundary()),
    ] {
        out.push(Check::from_result(
            format!("Kuenneth vs product triangulation, {name}"),
            kunneth_product(&k, &l).and_then(|conv| {
                let direct = product_homology(&k, &l)?;
                Ok((conv == direct, format!("{conv:?} vs {direct:?}")))
            }),
        ));
    }
    out
}
