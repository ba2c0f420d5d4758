//! The order-6 tournament `T`, its walk property and the walk catalog used
//! by the homomorphism constructions.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::tournament::{tournament_classes, Tournament};
use crate::digraph::Vertex;
use crate::error::{Error, Result};

/// Walks of lengths 3, 4 and 5 between every ordered pair of distinct
/// vertices of `T`, grouped by initial vertex, then final vertex, then
/// length.
pub const REFERENCE_WALKS: [&[Vertex]; 90] = [
    &[0, 3, 4, 1],
    &[0, 3, 4, 0, 1],
    &[0, 3, 4, 5, 3, 1],
    &[0, 1, 5, 2],
    &[0, 3, 1, 5, 2],
    &[0, 3, 1, 5, 3, 2],
    &[0, 1, 5, 3],
    &[0, 1, 5, 0, 3],
    &[0, 1, 5, 2, 0, 3],
    &[0, 3, 2, 4],
    &[0, 1, 5, 3, 4],
    &[0, 3, 1, 5, 2, 4],
    &[0, 3, 1, 5],
    &[0, 1, 2, 4, 5],
    &[0, 1, 2, 0, 1, 5],
    &[1, 2, 4, 0],
    &[1, 2, 4, 5, 0],
    &[1, 2, 4, 1, 2, 0],
    &[1, 5, 3, 2],
    &[1, 5, 0, 3, 2],
    &[1, 5, 3, 1, 5, 2],
    &[1, 2, 0, 3],
    &[1, 2, 4, 0, 3],
    &[1, 2, 0, 1, 5, 3],
    &[1, 5, 2, 4],
    &[1, 2, 0, 3, 4],
    &[1, 2, 0, 1, 2, 4],
    &[1, 2, 4, 5],
    &[1, 2, 0, 1, 5],
    &[1, 2, 0, 3, 4, 5],
    &[2, 4, 5, 0],
    &[2, 4, 1, 2, 0],
    &[2, 4, 1, 2, 4, 0],
    &[2, 0, 3, 1],
    &[2, 0, 3, 4, 1],
    &[2, 0, 3, 2, 0, 1],
    &[2, 4, 0, 3],
    &[2, 0, 1, 5, 3],
    &[2, 0, 1, 2, 0, 3],
    &[2, 0, 3, 4],
    &[2, 0, 3, 2, 4],
    &[2, 0, 1, 5, 2, 4],
    &[2, 0, 1, 5],
    &[2, 0, 3, 1, 5],
    &[2, 0, 1, 2, 4, 5],
    &[3, 1, 5, 0],
    &[3, 1, 2, 4, 0],
    &[3, 1, 2, 4, 5, 0],
    &[3, 2, 0, 1],
    &[3, 2, 4, 0, 1],
    &[3, 2, 0, 3, 4, 1],
    &[3, 1, 5, 2],
    &[3, 1, 5, 3, 2],
    &[3, 1, 5, 0, 1, 2],
    &[3, 1, 2, 4],
    &[3, 1, 5, 2, 4],
    &[3, 1, 2, 0, 3, 4],
    &[3, 2, 4, 5],
    &[3, 1, 2, 4, 5],
    &[3, 1, 2, 0, 1, 5],
    &[4, 1, 5, 0],
    &[4, 1, 2, 4, 0],
    &[4, 1, 2, 4, 5, 0],
    &[4, 0, 3, 1],
    &[4, 0, 3, 4, 1],
    &[4, 0, 3, 2, 0, 1],
    &[4, 0, 1, 2],
    &[4, 0, 1, 5, 2],
    &[4, 1, 5, 0, 1, 2],
    &[4, 1, 5, 3],
    &[4, 0, 1, 5, 3],
    &[4, 0, 1, 2, 0, 3],
    &[4, 0, 1, 5],
    &[4, 0, 3, 1, 5],
    &[4, 0, 1, 2, 4, 5],
    &[5, 2, 4, 0],
    &[5, 2, 4, 5, 0],
    &[5, 2, 4, 1, 2, 0],
    &[5, 2, 4, 1],
    &[5, 3, 2, 0, 1],
    &[5, 3, 4, 5, 0, 1],
    &[5, 0, 1, 2],
    &[5, 0, 1, 5, 2],
    &[5, 0, 1, 5, 3, 2],
    &[5, 2, 0, 3],
    &[5, 0, 1, 5, 3],
    &[5, 0, 1, 2, 0, 3],
    &[5, 0, 3, 4],
    &[5, 0, 1, 2, 4],
    &[5, 0, 1, 5, 2, 4],
];

/// Arcs `T` is rebuilt from; equal to the consecutive pairs of
/// [`REFERENCE_WALKS`].
pub const T_ARCS: [(Vertex, Vertex); 15] = [
    (0, 1),
    (0, 3),
    (1, 2),
    (1, 5),
    (2, 0),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 4),
    (4, 0),
    (4, 1),
    (4, 5),
    (5, 0),
    (5, 2),
    (5, 3),
];

/// The unique order-6 tournament in which every ordered pair of distinct
/// vertices is joined by walks of every length 3, 4 and 5.
pub fn tournament_t() -> Tournament {
    Tournament::from_arcs(6, &T_ARCS).expect("T is a tournament")
}

/// Rebuilds a tournament from the consecutive pairs of `walks`, failing on
/// a pair oriented both ways or a pair never covered.
pub fn tournament_from_walks(k: usize, walks: &[&[Vertex]]) -> Result<Tournament> {
    let mut arcs: Vec<(Vertex, Vertex)> = walks
        .iter()
        .flat_map(|w| w.windows(2).map(|p| (p[0], p[1])))
        .collect();
    arcs.sort_unstable();
    arcs.dedup();
    Tournament::from_arcs(k, &arcs)
}

/// A pair with no walk of the given length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MissingWalk {
    pub from: Vertex,
    pub to: Vertex,
    pub length: usize,
}

/// First missing walk of length 3, 4 or 5, scanning lengths first. Closed
/// walks (`from == to`) are required only when `closed` is set.
pub fn missing_walk(t: &Tournament, closed: bool) -> Option<MissingWalk> {
    for length in 3..=5 {
        let reach = t.walk_reach(length);
        for (from, &r) in reach.iter().enumerate() {
            for to in 0..t.order() {
                if (closed || from != to) && r >> to & 1 == 0 {
                    return Some(MissingWalk { from, to, length });
                }
            }
        }
    }
    None
}

/// Every ordered pair of distinct vertices is joined by a walk of each
/// length 3, 4 and 5.
pub fn verify_walk_property(t: &Tournament) -> bool {
    missing_walk(t, false).is_none()
}

/// The same property, also demanding closed walks of lengths 3, 4 and 5 at
/// every vertex.
pub fn verify_closed_walk_property(t: &Tournament) -> bool {
    missing_walk(t, true).is_none()
}

#[derive(Debug, Clone, Serialize)]
pub struct ReadingCount {
    pub labeled_count: usize,
    pub iso_class_count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassFailure {
    pub class: Tournament,
    pub missing: MissingWalk,
}

#[derive(Debug, Clone, Serialize)]
pub struct Census {
    pub labeled_total: usize,
    /// Labelled tournaments with the walk property.
    pub labeled_count: usize,
    pub iso_class_count: usize,
    /// Smallest-code survivor.
    pub witness: Option<Tournament>,
    /// Relabelling taking the witness onto `T`.
    pub isomorphism_to_t: Option<Vec<Vertex>>,
    pub automorphism_count: usize,
    pub closed_walk_reading: ReadingCount,
    pub readings_agree: bool,
    pub total_iso_classes: usize,
    /// One missing walk per isomorphism class without the property.
    pub failures: Vec<ClassFailure>,
    pub all_failures_at_length_3: bool,
}

/// Runs the walk property over all `2^15` labelled order-6 tournaments and
/// groups the survivors by isomorphism.
pub fn uniqueness_census() -> Census {
    let total = 1usize << 15;
    let survivors = |closed: bool| -> Vec<Tournament> {
        (0..total as u64)
            .into_par_iter()
            .map(|c| Tournament::from_code(6, c))
            .filter(|t| missing_walk(t, closed).is_none())
            .collect()
    };
    let classes = |ts: &[Tournament]| -> usize {
        let mut reps: Vec<&Tournament> = Vec::new();
        for t in ts {
            if !reps.iter().any(|r| r.is_isomorphic(t)) {
                reps.push(t);
            }
        }
        reps.len()
    };
    let open = survivors(false);
    let closed = survivors(true);
    let t = tournament_t();
    let witness = open.first().cloned();
    let isomorphism_to_t = witness.as_ref().and_then(|w| w.isomorphism_to(&t));
    let failures: Vec<ClassFailure> = tournament_classes(6)
        .iter()
        .filter_map(|c| {
            missing_walk(c, false).map(|missing| ClassFailure {
                class: c.clone(),
                missing,
            })
        })
        .collect();
    let open_classes = classes(&open);
    let closed_count = ReadingCount {
        labeled_count: closed.len(),
        iso_class_count: classes(&closed),
    };
    Census {
        labeled_total: total,
        labeled_count: open.len(),
        iso_class_count: open_classes,
        readings_agree: closed == open,
        witness,
        isomorphism_to_t,
        automorphism_count: t.automorphisms().len(),
        closed_walk_reading: closed_count,
        total_iso_classes: tournament_classes(6).len(),
        all_failures_at_length_3: failures.iter().all(|f| f.missing.length == 3),
        failures,
    }
}

/// Anchored cycles and walks of a tournament: `cycle(k, i)` is a closed walk
/// of length `k` from `i` visiting `k` distinct vertices; `walk(k, i, j)`
/// is a walk of length `k` from `i` to `j`. Each entry is the
/// lexicographically first one.
#[derive(Debug, Clone)]
pub struct WalkCatalog {
    cycles: BTreeMap<(usize, Vertex), Vec<Vertex>>,
    walks: BTreeMap<(usize, Vertex, Vertex), Vec<Vertex>>,
}

pub const CATALOG_CYCLE_LENGTHS: std::ops::RangeInclusive<usize> = 3..=6;
pub const CATALOG_WALK_LENGTHS: std::ops::RangeInclusive<usize> = 3..=5;

impl WalkCatalog {
    pub fn cycle(&self, k: usize, i: Vertex) -> &[Vertex] {
        &self.cycles[&(k, i)]
    }

    pub fn walk(&self, k: usize, i: Vertex, j: Vertex) -> &[Vertex] {
        &self.walks[&(k, i, j)]
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn walk_count(&self) -> usize {
        self.walks.len()
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    length: usize,
    from: Vertex,
    to: Vertex,
    walk: &'a [Vertex],
}

impl Serialize for WalkCatalog {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            cycles: Vec<Entry<'a>>,
            walks: Vec<Entry<'a>>,
        }
        Out {
            cycles: self
                .cycles
                .iter()
                .map(|(&(length, i), w)| Entry {
                    length,
                    from: i,
                    to: i,
                    walk: w,
                })
                .collect(),
            walks: self
                .walks
                .iter()
                .map(|(&(length, from, to), w)| Entry {
                    length,
                    from,
                    to,
                    walk: w,
                })
                .collect(),
        }
        .serialize(s)
    }
}

fn first_cycle(t: &Tournament, k: usize, i: Vertex) -> Option<Vec<Vertex>> {
    fn go(t: &Tournament, k: usize, path: &mut Vec<Vertex>, used: u32) -> bool {
        let v = *path.last().unwrap();
        if path.len() == k {
            return t.has_arc(v, path[0]);
        }
        for w in 0..t.order() {
            if used >> w & 1 == 0 && t.has_arc(v, w) {
                path.push(w);
                if go(t, k, path, used | 1 << w) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let mut path = vec![i];
    go(t, k, &mut path, 1 << i).then(|| {
        path.push(i);
        path
    })
}

fn first_walk(t: &Tournament, k: usize, i: Vertex, j: Vertex) -> Option<Vec<Vertex>> {
    // reach[l][v]: vertices ending a walk of length l from v
    let reach: Vec<Vec<u32>> = (0..=k).map(|l| t.walk_reach(l)).collect();
    if reach[k][i] >> j & 1 == 0 {
        return None;
    }
    let mut walk = vec![i];
    let mut v = i;
    for step in 1..=k {
        let rest = k - step;
        v = (0..t.order())
            .find(|&w| t.has_arc(v, w) && reach[rest][w] >> j & 1 == 1)
            .expect("reachability guarantees a next vertex");
        walk.push(v);
    }
    Some(walk)
}

/// Builds the catalog by exhaustive search; fails when some cycle or walk
/// does not exist.
pub fn walk_catalog(t: &Tournament) -> Result<WalkCatalog> {
    let mut cycles = BTreeMap::new();
    let mut walks = BTreeMap::new();
    for k in CATALOG_CYCLE_LENGTHS.filter(|&k| k <= t.order()) {
        for i in 0..t.order() {
            let c = first_cycle(t, k, i).ok_or_else(|| {
                Error::precondition(format!("no {k}-cycle through {i}; catalog incomplete"))
            })?;
            cycles.insert((k, i), c);
        }
    }
    for k in CATALOG_WALK_LENGTHS {
        for i in 0..t.order() {
            for j in (0..t.order()).filter(|&j| j != i) {
                let w = first_walk(t, k, i, j).ok_or_else(|| {
                    Error::precondition(format!(
                        "no walk of length {k} from {i} to {j}; catalog incomplete"
                    ))
                })?;
                walks.insert((k, i, j), w);
            }
        }
    }
    Ok(WalkCatalog { cycles, walks })
}

/// Catalog of `T`, computed once.
pub fn t_catalog() -> &'static WalkCatalog {
    static CATALOG: std::sync::OnceLock<WalkCatalog> = std::sync::OnceLock::new();
    CATALOG.get_or_init(|| walk_catalog(&tournament_t()).expect("T has a complete catalog"))
}

/// `walk` follows arcs of `t`.
pub fn is_walk(t: &Tournament, walk: &[Vertex]) -> bool {
    walk.iter().all(|&v| v < t.order()) && walk.windows(2).all(|p| t.has_arc(p[0], p[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_walks_rebuild_t() {
        assert_eq!(
            tournament_from_walks(6, &REFERENCE_WALKS).unwrap(),
            tournament_t()
        );
    }

    #[test]
    fn reference_walks_cover_every_pair_and_length() {
        let mut seen = std::collections::BTreeSet::new();
        for w in REFERENCE_WALKS {
            assert!(is_walk(&tournament_t(), w));
            assert!(seen.insert((w[0], *w.last().unwrap(), w.len() - 1)));
        }
        assert_eq!(seen.len(), 90);
        assert!(seen.iter().all(|&(i, j, k)| i != j && (3..=5).contains(&k)));
    }

    #[test]
    fn t_arc_queries_and_degrees() {
        let t = tournament_t();
        assert!(t.has_arc(0, 1));
        assert!(!t.has_arc(1, 0));
        assert_eq!(t.out_degrees(), vec![2, 2, 2, 3, 3, 3]);
        assert_eq!(t.encoding(), "101001001010101");
        assert!(t.is_strong());
    }

    #[test]
    fn walk_property_examples() {
        assert!(verify_walk_property(&tournament_t()));
        let transitive = Tournament::from_code(6, (1 << 15) - 1);
        assert!(!verify_walk_property(&transitive));
        // vertex 0 beats everyone
        for code in [0b11111u64, 0b11111 | 0b1010 << 5] {
            let t = Tournament::from_code(6, code);
            assert_eq!(t.out_degrees()[0], 5);
            assert!(!verify_walk_property(&t));
        }
    }

    #[test]
    fn catalog_of_t() {
        let c = t_catalog();
        assert_eq!(c.cycle(3, 0), [0, 1, 2, 0]);
        assert_eq!(c.cycle(4, 0), [0, 1, 2, 4, 0]);
        assert_eq!(c.cycle(5, 0), [0, 1, 2, 4, 5, 0]);
        assert_eq!(c.cycle(6, 0), [0, 1, 5, 3, 2, 4, 0]);
        assert_eq!(c.walk(3, 0, 1), [0, 3, 4, 1]);
        assert_eq!(c.walk(5, 5, 4), [5, 0, 1, 5, 2, 4]);
        assert_eq!(c.cycle_count(), 24);
        assert_eq!(c.walk_count(), 90);
        let t = tournament_t();
        for k in CATALOG_CYCLE_LENGTHS {
            for i in 0..6 {
                let cyc = c.cycle(k, i);
                assert!(is_walk(&t, cyc));
                let distinct: std::collections::BTreeSet<_> = cyc[..k].iter().collect();
                assert_eq!(distinct.len(), k);
            }
        }
    }

    #[test]
    fn incomplete_catalog_is_an_error() {
        let transitive = Tournament::from_code(4, (1 << 6) - 1);
        assert!(walk_catalog(&transitive).is_err());
    }
}
