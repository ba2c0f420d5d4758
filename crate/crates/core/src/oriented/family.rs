//! The family `G_1 = C_3`, where `G_i` adds a 2-path `u -> x_uv -> v` for
//! every ordered pair of distinct vertices of `G_{i-1}`. Every ear has
//! length 2, yet the oriented chromatic number grows without bound.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::ear::{Ear, EarDecomposition};
use crate::error::{Error, Result};

pub const GI_CAP: usize = 4;

fn check_generation(i: usize) -> Result<()> {
    if i == 0 {
        return Err(Error::precondition("generations start at 1"));
    }
    if i > GI_CAP {
        return Err(Error::CapExceeded {
            what: "G_i generation",
            n: i,
            cap: GI_CAP,
        });
    }
    Ok(())
}

/// `G_i` together with its decomposition: the triangle, then one ear
/// `(u, x_uv, v)` per pair, added generation by generation. The vertices of
/// `G_{i-1}` keep their ids, and new vertices follow in lexicographic order
/// of `(u, v)`.
pub fn build_g_decomposed(i: usize) -> Result<(Digraph, EarDecomposition)> {
    check_generation(i)?;
    let mut arcs = vec![(0, 1), (1, 2), (2, 0)];
    let mut ears = Vec::new();
    let mut n = 3;
    for _ in 1..i {
        let prev = n;
        for u in 0..prev {
            for v in (0..prev).filter(|&v| v != u) {
                arcs.extend([(u, n), (n, v)]);
                ears.push(Ear::new(vec![u, n, v])?);
                n += 1;
            }
        }
    }
    let d = Digraph::from_arcs(n, arcs)?;
    Ok((
        d,
        EarDecomposition {
            base: vec![0, 1, 2],
            ears,
        },
    ))
}

pub fn build_g(i: usize) -> Result<Digraph> {
    build_g_decomposed(i).map(|(d, _)| d)
}

/// Order of `G_i` without building it.
pub fn g_order(i: usize) -> usize {
    (1..i).fold(3, |n, _| n + n * (n - 1))
}

#[derive(Debug, Clone, Serialize)]
pub struct GiCheck {
    pub generation: usize,
    pub previous_order: usize,
    /// Every two vertices of `G_{i-1}` are joined in `G_i` by a directed
    /// path of length at most 2.
    pub holds: bool,
    /// Lower bound on the oriented chromatic number implied when `holds`.
    pub forced_lower_bound: usize,
}

/// Checks that the vertices of `G_{i-1}` are pairwise joined by paths of
/// length at most 2 in `G_i`, which forces them onto distinct vertices of
/// any tournament `G_i` maps into.
pub fn gi_lower_bound_check(i: usize) -> Result<GiCheck> {
    if i < 2 {
        return Err(Error::precondition(
            "the check compares generation i with i - 1 >= 1",
        ));
    }
    let d = build_g(i)?;
    let prev = g_order(i - 1);
    let mut holds = true;
    'outer: for u in 0..prev {
        let mut near = vec![false; d.n()];
        for &w in d.out_neighbors(u) {
            near[w] = true;
            for &x in d.out_neighbors(w) {
                near[x] = true;
            }
        }
        for v in u + 1..prev {
            let back = d
                .out_neighbors(v)
                .iter()
                .any(|&w| w == u || d.has_arc(w, u));
            if !near[v] && !back {
                holds = false;
                break 'outer;
            }
        }
    }
    Ok(GiCheck {
        generation: i,
        previous_order: prev,
        holds,
        forced_lower_bound: if holds { prev } else { 0 },
    })
}
