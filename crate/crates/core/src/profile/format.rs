//! Plain-text profile files.
//!
//! ```text
//! # maximal K3 surface
//! name = k3_max
//! betti_f2 = 1, 0, 22, 0, 1
//! tors2_h1 = false
//! tors2_hstar = false
//! hodge = 0, 1, 20            # h10, h20, h11
//!
//! [component]
//! orientable = true
//! genus_or_crosscaps = 10
//!
//! [component]
//! orientable = true
//! genus_or_crosscaps = 0
//! ```
//!
//! Optional top-level keys: `hodge`, `rank_mu`, `rank_mu_at_least`,
//! `rank_mu_note` and `beta_star_hilb2`. Lines whose first non-blank
//! character is `#` are comments; a trailing `# ...` is stripped from every
//! value except `rank_mu_note`, which runs to the end of the line.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Hodge, RankBound, RankMuHint, RealComponent, SurfaceProfile};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_uint<T: std::str::FromStr>(line: usize, key: &str, s: &str) -> Result<T> {
    s.trim()
        .parse::<T>()
        .map_err(|_| perr(line, format!("{key}: expected a non-negative decimal integer, got {:?}", s.trim())))
}

fn parse_bool(line: usize, key: &str, s: &str) -> Result<bool> {
    match s.trim() {
        "true" => Ok(true),
        "false" => Ok(false),
        other => Err(perr(line, format!("{key}: expected true or false, got {other:?}"))),
    }
}

fn parse_list<const N: usize>(line: usize, key: &str, s: &str) -> Result<[u32; N]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(perr(line, format!("{key}: expected {N} comma-separated integers, got {}", parts.len())));
    }
    let mut out = [0u32; N];
    for (slot, p) in out.iter_mut().zip(parts) {
        *slot = parse_uint(line, key, p)?;
    }
    Ok(out)
}

#[derive(Default)]
struct ComponentDraft {
    start_line: usize,
    orientable: Option<bool>,
    count: Option<u32>,
}

impl ComponentDraft {
    fn finish(self) -> Result<RealComponent> {
        let orientable = self
            .orientable
            .ok_or_else(|| perr(self.start_line, "[component]: missing key orientable"))?;
        let count = self
            .count
            .ok_or_else(|| perr(self.start_line, "[component]: missing key genus_or_crosscaps"))?;
        Ok(if orientable {
            RealComponent::Orientable { genus: count }
        } else {
            RealComponent::NonOrientable { crosscaps: count }
        })
    }
}

/// Parses one profile. The result is not validated; call
/// [`SurfaceProfile::validate`] afterwards.
pub fn parse_profile(text: &str) -> Result<SurfaceProfile> {
    let mut name = None;
    let mut betti = None;
    let mut tors2_h1 = None;
    let mut tors2_hstar = None;
    let mut hodge = None;
    let mut rank_exact: Option<u32> = None;
    let mut rank_at_least: Option<u32> = None;
    let mut rank_note: Option<String> = None;
    let mut known_total = None;
    let mut components = Vec::new();
    let mut current: Option<ComponentDraft> = None;
    let mut seen: HashSet<&'static str> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if trimmed.starts_with('[') {
            if trimmed != "[component]" {
                return Err(perr(line, format!("unknown section {trimmed}")));
            }
            if let Some(draft) = current.take() {
                components.push(draft.finish()?);
            }
            current = Some(ComponentDraft { start_line: line, ..Default::default() });
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| perr(line, format!("expected `key = value`, got {trimmed:?}")))?;
        let key = key.trim();
        let value_raw = value.trim();
        let value = match value_raw.find('#') {
            Some(pos) if key != "rank_mu_note" => value_raw[..pos].trim(),
            _ => value_raw,
        };

        if let Some(draft) = current.as_mut() {
            match key {
                "orientable" if draft.orientable.is_none() => {
                    draft.orientable = Some(parse_bool(line, key, value)?)
                }
                "genus_or_crosscaps" if draft.count.is_none() => {
                    draft.count = Some(parse_uint(line, key, value)?)
                }
                "orientable" | "genus_or_crosscaps" => {
                    return Err(perr(line, format!("[component]: duplicate key {key}")))
                }
                _ => return Err(perr(line, format!("[component]: unknown key {key}"))),
            }
            continue;
        }

        let canonical: &'static str = match key {
            "name" => "name",
            "betti_f2" => "betti_f2",
            "tors2_h1" => "tors2_h1",
            "tors2_hstar" => "tors2_hstar",
            "hodge" => "hodge",
            "rank_mu" => "rank_mu",
            "rank_mu_at_least" => "rank_mu_at_least",
            "rank_mu_note" => "rank_mu_note",
            "beta_star_hilb2" => "beta_star_hilb2",
            other => return Err(perr(line, format!("unknown key {other}"))),
        };
        if !seen.insert(canonical) {
            return Err(perr(line, format!("duplicate key {canonical}")));
        }
        match canonical {
            "name" => name = Some(value.to_string()),
            "betti_f2" => betti = Some(parse_list::<5>(line, key, value)?),
            "tors2_h1" => tors2_h1 = Some(parse_bool(line, key, value)?),
            "tors2_hstar" => tors2_hstar = Some(parse_bool(line, key, value)?),
            "hodge" => {
                let [h10, h20, h11] = parse_list::<3>(line, key, value)?;
                hodge = Some(Hodge { h10, h20, h11 });
            }
            "rank_mu" => rank_exact = Some(parse_uint(line, key, value)?),
            "rank_mu_at_least" => rank_at_least = Some(parse_uint(line, key, value)?),
            "rank_mu_note" => rank_note = Some(value.to_string()),
            "beta_star_hilb2" => known_total = Some(parse_uint(line, key, value)?),
            _ => unreachable!(),
        }
    }
    if let Some(draft) = current.take() {
        components.push(draft.finish()?);
    }

    let last = text.lines().count().max(1);
    let missing = |k: &str| perr(last, format!("missing required key {k}"));
    let rank_mu_hint = match (rank_exact, rank_at_least) {
        (Some(_), Some(_)) => {
            return Err(perr(last, "rank_mu and rank_mu_at_least are mutually exclusive"))
        }
        (Some(n), None) => Some(RankBound::Exact(n)),
        (None, Some(n)) => Some(RankBound::AtLeast(n)),
        (None, None) => {
            if rank_note.is_some() {
                return Err(perr(last, "rank_mu_note given without rank_mu or rank_mu_at_least"));
            }
            None
        }
    }
    .map(|bound| RankMuHint { bound, note: rank_note.unwrap_or_default() });

    Ok(SurfaceProfile {
        name: name.ok_or_else(|| missing("name"))?,
        betti_f2: betti.ok_or_else(|| missing("betti_f2"))?,
        tors2_h1: tors2_h1.ok_or_else(|| missing("tors2_h1"))?,
        tors2_hstar: tors2_hstar.ok_or_else(|| missing("tors2_hstar"))?,
        hodge,
        real_components: components,
        rank_mu_hint,
        known_beta_star_hilb2: known_total,
    })
}

/// Renders a profile in the file format accepted by [`parse_profile`].
pub fn render_profile(p: &SurfaceProfile) -> String {
    let mut s = String::new();
    let b = p.betti_f2;
    let _ = writeln!(s, "name = {}", p.name);
    let _ = writeln!(s, "betti_f2 = {}, {}, {}, {}, {}", b[0], b[1], b[2], b[3], b[4]);
    let _ = writeln!(s, "tors2_h1 = {}", p.tors2_h1);
    let _ = writeln!(s, "tors2_hstar = {}", p.tors2_hstar);
    if let Some(h) = p.hodge {
        let _ = writeln!(s, "hodge = {}, {}, {}", h.h10, h.h20, h.h11);
    }
    if let Some(hint) = &p.rank_mu_hint {
        match hint.bound {
            RankBound::Exact(n) => {
                let _ = writeln!(s, "rank_mu = {n}");
            }
            RankBound::AtLeast(n) => {
                let _ = writeln!(s, "rank_mu_at_least = {n}");
            }
        }
        let _ = writeln!(s, "rank_mu_note = {}", hint.note);
    }
    if let Some(v) = p.known_beta_star_hilb2 {
        let _ = writeln!(s, "beta_star_hilb2 = {v}");
    }
    for c in &p.real_components {
        let _ = writeln!(s, "\n[component]");
        let _ = writeln!(s, "orientable = {}", c.is_orientable());
        let _ = writeln!(s, "genus_or_crosscaps = {}", c.genus_or_crosscaps());
    }
    s
}
