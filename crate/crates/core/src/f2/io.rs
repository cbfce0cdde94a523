//! Plain-text complexes: one maximal simplex per line as space-separated
//! vertex indices, optionally one `involution` line giving the image of each
//! vertex. `#` starts a comment.

use std::fmt::Write;

use super::complex::SimplicialComplex;
use super::involution::SimplicialInvolution;
use crate::error::{Error, Result};

fn parse_indices(line: &str, lineno: usize) -> Result<Vec<u32>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<u32>().map_err(|_| Error::Parse { line: lineno, msg: format!("`{t}` is not a vertex index") })
        })
        .collect()
}

/// Parses a complex and its optional vertex involution.
pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, Option<Vec<u32>>)> {
    let mut simplices = Vec::new();
    let mut involution = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("involution") {
            if involution.is_some() {
                return Err(Error::Parse { line: lineno, msg: "duplicate involution line".into() });
            }
            involution = Some(parse_indices(rest, lineno)?);
        } else {
            simplices.push(parse_indices(line, lineno)?);
        }
    }
    Ok((SimplicialComplex::from_simplices(simplices)?, involution))
}

/// Parses a complex that must carry an involution line.
pub fn parse_involution(text: &str) -> Result<SimplicialInvolution> {
    let (complex, map) = parse_complex(text)?;
    let map = map.ok_or(Error::Parse { line: 0, msg: "missing involution line".into() })?;
    SimplicialInvolution::new(complex, map)
}

pub fn render_complex(complex: &SimplicialComplex, involution: Option<&[u32]>) -> String {
    let mut out = String::new();
    for s in complex.facets() {
        let line: Vec<String> = s.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    if let Some(map) = involution {
        let line: Vec<String> = map.iter().map(u32::to_string).collect();
        let _ = writeln!(out, "involution {}", line.join(" "));
    }
    out
}
