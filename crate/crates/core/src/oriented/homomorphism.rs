//! Homomorphisms into `T`: cycles, ears of length at least 3, and whole
//! decompositions whose ears are all that long.

use serde::Serialize;

use super::walks::{t_catalog, tournament_t};
use crate::cert::{MappingKind, Target, VertexMapping};
use crate::digraph::{Digraph, Vertex};
use crate::ear::{glue_ear, validate_decomposition, Ear, EarDecomposition};
use crate::error::{Error, Result};
use crate::oracles::{find_homomorphism, oriented_chromatic_oracle, OrientedReport};
use crate::oriented::tournament::tournament_classes;

fn into_t(assignment: Vec<Vertex>) -> VertexMapping {
    VertexMapping {
        assignment,
        target: Target::Tournament(tournament_t()),
        kind: MappingKind::Oriented,
    }
}

/// Images of `x_0, .., x_{n-1}` for the directed cycle of length `n`.
///
/// Short cycles use the catalog cycle through 0. Longer ones wind around
/// `(0, 1, 2)` and finish through 4, or through 4 and 5, depending on
/// `n mod 3`.
pub fn cycle_images(n: usize) -> Result<Vec<Vertex>> {
    if n < 3 {
        return Err(Error::precondition(format!("cycle length {n} < 3")));
    }
    if n <= 6 {
        return Ok(t_catalog().cycle(n, 0)[..n].to_vec());
    }
    let wraps = n - n % 3;
    let mut images: Vec<Vertex> = (0..wraps).map(|m| m % 3).collect();
    match n % 3 {
        1 => images.push(4),
        2 => images.extend([4, 5]),
        _ => {}
    }
    Ok(images)
}

pub fn cycle_homomorphism(n: usize) -> Result<VertexMapping> {
    let phi = into_t(cycle_images(n)?);
    phi.verified(&Digraph::cycle(n), "cycle homomorphism")
}

/// Images of `x_0, .., x_r` for an ear of length `r >= 3` whose ends map to
/// `i` and `j`. The walk winds around the catalog triangle at `i` and ends
/// with a catalog segment of length 3, 4 or 5: a closed one when the ear is
/// a cycle or `i == j`, otherwise a walk from `i` to `j`.
pub fn ear_images(i: Vertex, j: Vertex, r: usize, cycle: bool) -> Result<Vec<Vertex>> {
    if r < 3 {
        return Err(Error::precondition(format!("ear length {r} < 3")));
    }
    if cycle && i != j {
        return Err(Error::precondition("a cycle ear has a single end image"));
    }
    let cat = t_catalog();
    let triangle = cat.cycle(3, i);
    let (t, s) = (r / 3, r % 3);
    let closed = cycle || i == j;
    if s == 0 && closed {
        return Ok((0..=r).map(|m| triangle[m % 3]).collect());
    }
    let tail_len = 3 + s;
    let tail = if closed {
        cat.cycle(tail_len, i)
    } else {
        cat.walk(tail_len, i, j)
    };
    let offset = 3 * (t - 1);
    Ok((0..=r)
        .map(|m| {
            if m < offset {
                triangle[m % 3]
            } else {
                tail[m - offset]
            }
        })
        .collect())
}

/// Extends `phi`, a homomorphism of `stage` into `T`, across `ear`, whose
/// interior must be the fresh ids `stage.n()..`.
pub fn extend_homomorphism(
    stage: &Digraph,
    phi: &VertexMapping,
    ear: &Ear,
) -> Result<VertexMapping> {
    stage.require_asymmetric()?;
    if !matches!(phi.target, Target::Tournament(ref t) if *t == tournament_t()) || !phi.check(stage)
    {
        return Err(Error::precondition(
            "phi is not a homomorphism of the stage into T",
        ));
    }
    let glued = glue_ear(stage, ear)?;
    let (i, j) = (phi.assignment[ear.start()], phi.assignment[ear.end()]);
    let images = ear_images(i, j, ear.length(), ear.is_cycle())?;
    let mut assignment = phi.assignment.clone();
    assignment.extend_from_slice(&images[1..ear.length()]);
    into_t(assignment).verified(&glued, "ear homomorphism")
}

/// Homomorphism of `d` into `T` built along a decomposition whose ears all
/// have length at least 3.
pub fn oriented_coloring_le3(d: &Digraph, e: &EarDecomposition) -> Result<VertexMapping> {
    d.require_asymmetric()?;
    e.require_min_ear_length(3)?;
    let report = validate_decomposition(d, e);
    if !report.is_ok() {
        return Err(Error::precondition(format!(
            "invalid decomposition: {}",
            report.violations[0]
        )));
    }
    let mut phi = vec![usize::MAX; d.n()];
    for (&v, c) in e.base.iter().zip(cycle_images(e.base.len())?) {
        phi[v] = c;
    }
    for ear in &e.ears {
        let x = ear.vertices();
        let images = ear_images(
            phi[ear.start()],
            phi[ear.end()],
            ear.length(),
            ear.is_cycle(),
        )?;
        for m in 1..ear.length() {
            phi[x[m]] = images[m];
        }
    }
    into_t(phi).verified(d, "oriented colouring")
}

/// Base triangle plus ears of length 3 on which no order-5 tournament
/// admits a homomorphism.
#[derive(Debug, Clone, Serialize)]
pub struct TightInstance {
    pub digraph: Digraph,
    pub decomposition: EarDecomposition,
    pub oracle: OrientedReport,
    pub candidates_tested: u64,
}

/// Searches asymmetrical digraphs made of the triangle `0 -> 1 -> 2 -> 0`
/// and `ears` ears of length 3 for one with oriented chromatic number 6.
/// Ear ends are enumerated depth first in increasing order, each new ear
/// attaching to at least one vertex of the previous ear; `paths_only`
/// excludes cycle ears. Stops after `budget` complete candidates.
pub fn search_tight_le3(
    ears: usize,
    paths_only: bool,
    budget: u64,
) -> Result<Option<TightInstance>> {
    struct Search {
        ears: usize,
        paths_only: bool,
        budget: u64,
        tested: u64,
        found: Option<(Vec<(Vertex, Vertex)>, Digraph)>,
    }
    fn build(ends: &[(Vertex, Vertex)]) -> (Digraph, EarDecomposition) {
        let mut arcs = vec![(0, 1), (1, 2), (2, 0)];
        let mut list = Vec::new();
        let mut n = 3;
        for &(a, b) in ends {
            list.push(Ear::new(vec![a, n, n + 1, b]).expect("fresh interior"));
            arcs.extend([(a, n), (n, n + 1), (n + 1, b)]);
            n += 2;
        }
        let d = Digraph::from_arcs(n, arcs).expect("valid arcs");
        (
            d,
            EarDecomposition {
                base: vec![0, 1, 2],
                ears: list,
            },
        )
    }
    fn fits_order_5(d: &Digraph) -> bool {
        tournament_classes(5)
            .iter()
            .any(|t| find_homomorphism(d, t.out_masks()).0.is_some())
    }
    fn go(s: &mut Search, ends: &mut Vec<(Vertex, Vertex)>) {
        if s.found.is_some() || s.tested >= s.budget {
            return;
        }
        if ends.len() == s.ears {
            s.tested += 1;
            let (d, _) = build(ends);
            if !fits_order_5(&d) {
                s.found = Some((ends.clone(), d));
            }
            return;
        }
        let n = 3 + 2 * ends.len();
        let fresh = if ends.is_empty() { 0 } else { n - 2 };
        for a in 0..n {
            for b in 0..n {
                if (a < fresh && b < fresh) || (s.paths_only && a == b) {
                    continue;
                }
                ends.push((a, b));
                go(s, ends);
                ends.pop();
            }
        }
    }
    let mut s = Search {
        ears,
        paths_only,
        budget,
        tested: 0,
        found: None,
    };
    go(&mut s, &mut Vec::new());
    let Some((ends, _)) = s.found else {
        return Ok(None);
    };
    let (digraph, decomposition) = build(&ends);
    let oracle = oriented_chromatic_oracle(&digraph, 6)?;
    Ok(Some(TightInstance {
        digraph,
        decomposition,
        oracle,
        candidates_tested: s.tested,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ear::{generate_random_le, LeParams};

    #[test]
    fn cycle_images_small_and_long() {
        assert_eq!(cycle_images(3).unwrap(), [0, 1, 2]);
        assert_eq!(cycle_images(5).unwrap(), [0, 1, 2, 4, 5]);
        assert_eq!(cycle_images(7).unwrap(), [0, 1, 2, 0, 1, 2, 4]);
        assert_eq!(cycle_images(8).unwrap(), [0, 1, 2, 0, 1, 2, 4, 5]);
        assert!(cycle_images(2).is_err());
        for n in 3..40 {
            cycle_homomorphism(n).unwrap();
        }
    }

    #[test]
    fn literal_last_index_reading_fails() {
        // mapping only an index n that does not exist leaves x_{3k} on the
        // triangle, which closes with the arc (0, 0)
        let n = 7;
        let literal: Vec<Vertex> = (0..n).map(|m| m % 3).collect();
        assert!(!into_t(literal).check(&Digraph::cycle(n)));
    }

    #[test]
    fn ear_of_length_three_follows_catalog_walk() {
        assert_eq!(ear_images(0, 1, 3, false).unwrap(), [0, 3, 4, 1]);
        let c4 = ear_images(0, 0, 4, true).unwrap();
        assert_eq!(c4, [0, 1, 2, 4, 0]);
        let wrap = ear_images(2, 2, 6, false).unwrap();
        assert_eq!(wrap, [2, 0, 1, 2, 0, 1, 2]);
    }

    #[test]
    fn ear_images_are_walks_for_all_ends_and_lengths() {
        let t = tournament_t();
        for i in 0..6 {
            for j in 0..6 {
                for r in 3..=14 {
                    for cycle in [false, true] {
                        if cycle && i != j {
                            continue;
                        }
                        let w = ear_images(i, j, r, cycle).unwrap();
                        assert_eq!(w.len(), r + 1);
                        assert_eq!((w[0], w[r]), (i, j));
                        assert!(super::super::walks::is_walk(&t, &w), "{i} {j} {r}: {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn extend_on_triangle() {
        let c3 = Digraph::cycle(3);
        let phi = cycle_homomorphism(3).unwrap();
        let ear = Ear::new(vec![0, 3, 4, 1]).unwrap();
        let ext = extend_homomorphism(&c3, &phi, &ear).unwrap();
        assert_eq!(ext.assignment, [0, 1, 2, 3, 4]);
        let short = Ear::new(vec![0, 3, 1]).unwrap();
        assert!(extend_homomorphism(&c3, &phi, &short).is_err());
    }

    #[test]
    fn colouring_of_generated_instances() {
        for seed in 0..30 {
            let (d, e) = generate_random_le(&LeParams {
                base_length: 3 + seed as usize % 5,
                ear_count: 6,
                min_ear_length: 3,
                max_ear_length: 8,
                cycle_ear_probability: 0.3,
                asymmetric: true,
                seed,
            })
            .unwrap();
            let phi = oriented_coloring_le3(&d, &e).unwrap();
            assert!(phi.check(&d));
            assert!(phi.values_used() <= 6);
        }
    }

    #[test]
    fn colouring_rejects_short_ears_and_digons() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        let e = EarDecomposition {
            base: vec![0, 1, 2],
            ears: vec![Ear::new(vec![0, 3, 1]).unwrap()],
        };
        assert!(oriented_coloring_le3(&d, &e).is_err());
        let digon = Digraph::cycle(2);
        assert!(matches!(
            oriented_coloring_le3(&digon, &EarDecomposition::cycle(vec![0, 1])),
            Err(Error::NotAsymmetric(..))
        ));
    }
}
