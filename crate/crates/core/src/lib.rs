//! Maximality of Hilbert squares of real algebraic surfaces, with an
//! F₂-homology toolkit for checking the underlying topology on explicit
//! triangulations.

pub mod catalog;
pub mod error;
pub mod f2;
pub mod goettsche;
pub mod hilb2;
pub mod profile;
pub mod smith;
pub mod verify;

pub use catalog::{catalog, run_catalog, run_catalog_filtered, CatalogEntry, CatalogOutcome, Subject};
pub use error::{Error, Result, Violation};
pub use goettsche::{check_cx_relation, hilb_betti_series, hilb_betti_series_with_budget, BettiSeries};
pub use hilb2::{
    actual_beta1_hilb2_real, beta1_extra, beta1_pieces, beta_star_hilb2_complex, chi_hilb2_real,
    hilb2_verdict, rank_mu_rule, real_betti_table, required_beta1, ComplexTotal, Decision,
    Hilb2Report, PieceBetti, RankMu, RankMuSource, Rule, Verdict,
};
pub use profile::{
    derive_real_invariants, parse_profile, render_profile, real_invariants_of, Hodge, RankBound, RankMuHint, RealComponent,
    RealInvariants, SurfaceProfile,
};
pub use smith::{comessatti_check, consistency_check, hodge_obstruction_bound, smith_defect, SmithReport};
