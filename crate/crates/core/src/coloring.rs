//! Proper 3-colourings along decompositions whose ears have length at
//! least 2, and the resulting bounds on the dichromatic number.

use serde::Serialize;

use crate::cert::{MappingKind, Target, VertexMapping};
use crate::digraph::Digraph;
use crate::ear::{validate_decomposition, EarDecomposition};
use crate::error::{Error, Result};
use crate::oracles::{chromatic_oracles, CHROMATIC_CAP};

fn smallest_free(used: &[usize]) -> usize {
    (1..=3)
        .find(|c| !used.contains(c))
        .expect("at most two colours are excluded")
}

/// Colours of a base cycle of length `n`: alternating 1 and 2, with 3 on
/// the last vertex of an odd cycle.
pub fn base_colours(n: usize) -> Vec<usize> {
    let mut c: Vec<usize> = (0..n).map(|i| 1 + i % 2).collect();
    if n % 2 == 1 {
        c[n - 1] = 3;
    }
    c
}

/// Colours of `x_1 .. x_{r-1}` given the end colours `a` and `b` (equal for
/// a cycle ear).
pub fn ear_colours(a: usize, b: usize, r: usize) -> Result<Vec<usize>> {
    match r {
        0 | 1 => Err(Error::precondition(format!("ear length {r} < 2"))),
        2 => Ok(vec![smallest_free(&[a, b])]),
        3 => {
            let c1 = smallest_free(&[a, b]);
            Ok(vec![c1, smallest_free(&[c1, b])])
        }
        _ => {
            let i = smallest_free(&[a, b]);
            let others: Vec<usize> = (1..=3).filter(|&c| c != i).collect();
            let mut c = vec![i];
            c.extend((0..r - 3).map(|m| others[m % 2]));
            c.push(i);
            Ok(c)
        }
    }
}

/// A proper colouring with colours `1..=3`, built ear by ear.
pub fn proper_3_coloring(d: &Digraph, e: &EarDecomposition) -> Result<VertexMapping> {
    e.require_min_ear_length(2)?;
    let report = validate_decomposition(d, e);
    if let Some(v) = report.violations.first() {
        return Err(Error::precondition(format!("invalid decomposition: {v}")));
    }
    let mut colour = vec![0; d.n()];
    for (&v, c) in e.base.iter().zip(base_colours(e.base.len())) {
        colour[v] = c;
    }
    for ear in &e.ears {
        let inner = ear_colours(colour[ear.start()], colour[ear.end()], ear.length())?;
        for (&v, c) in ear.interior().iter().zip(inner) {
            colour[v] = c;
        }
    }
    VertexMapping {
        assignment: colour,
        target: Target::Colors(3),
        kind: MappingKind::Proper,
    }
    .verified(d, "proper colouring")
}

#[derive(Debug, Clone, Serialize)]
pub struct DichromaticBounds {
    pub lower: usize,
    pub upper: usize,
    /// Exact value when the order is within the oracle cap.
    pub exact: Option<usize>,
    pub chromatic_exact: Option<usize>,
    pub coloring: VertexMapping,
}

/// Between 2 and 3: a strong digraph has a cycle, and the classes of a
/// proper 3-colouring are independent, hence acyclic.
pub fn dichromatic_bounds(d: &Digraph, e: &EarDecomposition) -> Result<DichromaticBounds> {
    let coloring = proper_3_coloring(d, e)?;
    let (exact, chromatic_exact) = if d.n() <= CHROMATIC_CAP {
        let r = chromatic_oracles(d)?;
        (Some(r.dichromatic_number), Some(r.chromatic_number))
    } else {
        (None, None)
    };
    Ok(DichromaticBounds {
        lower: 2,
        upper: 3,
        exact,
        chromatic_exact,
        coloring,
    })
}
