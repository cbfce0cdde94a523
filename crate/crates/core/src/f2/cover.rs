//! Characteristic class of the double cover X → X/c of a free involution,
//! evaluated on 1-cycles of the quotient by tracing lifts.

use rustc_hash::FxHashMap;

use super::involution::SimplicialInvolution;
use crate::error::{Error, Result};

fn not_free(reason: String) -> Error {
    Error::NotApplicable { op: "double_cover_class_eval", reason }
}

/// ω(γ) for a quotient 1-cycle γ, given by one lifted edge per quotient
/// edge. Returns true iff the lift of γ does not close up, i.e. the cover
/// has nontrivial monodromy along γ.
pub fn double_cover_class_eval(cover: &SimplicialInvolution, cycle: &[[u32; 2]]) -> Result<bool> {
    let map = cover.vertex_map();
    let n = map.len() as u32;
    // orbit section: the smaller vertex of each orbit
    let rep = |v: u32| v.min(map[v as usize]);
    let mut degree: FxHashMap<u32, u32> = FxHashMap::default();
    let mut omega = false;
    for &[u, v] in cycle {
        if u >= n || v >= n {
            return Err(Error::InvalidComplex(format!("edge [{u}, {v}] uses a vertex outside the complex")));
        }
        if !cover.base().contains(&[u, v]) || u == v {
            return Err(Error::InvalidComplex(format!("[{u}, {v}] is not an edge of the cover")));
        }
        for w in [u, v] {
            if map[w as usize] == w {
                return Err(not_free(format!("vertex {w} is fixed by the involution")));
            }
        }
        if map[u as usize] == v {
            return Err(not_free(format!("edge [{u}, {v}] is mapped to itself")));
        }
        // lift starting at the section over [u]
        let end = if u == rep(u) { v } else { map[v as usize] };
        omega ^= end != rep(v);
        *degree.entry(rep(u)).or_default() += 1;
        *degree.entry(rep(v)).or_default() += 1;
    }
    if let Some((v, _)) = degree.iter().find(|(_, &d)| d % 2 == 1) {
        return Err(Error::InvalidComplex(format!(
            "edges do not form a cycle in the quotient: orbit of vertex {v} has odd degree"
        )));
    }
    Ok(omega)
}
