use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::digraph::{Digraph, Vertex};
use crate::error::{Error, Result};

/// Largest order handled by the bit-packed representation.
pub const MAX_TOURNAMENT_ORDER: usize = 8;

/// Complete asymmetrical digraph on `k <= 8` vertices stored as out-neighbour
/// bitmasks.
///
/// The code of a tournament packs its upper adjacency triangle in row order:
/// bit `p` (least significant first) describes the `p`-th pair `(i, j)`,
/// `i < j`, and is set when the arc is `i -> j`. [`Tournament::encoding`]
/// writes the same bits as a `0`/`1` string, first pair first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    k: usize,
    out: Vec<u32>,
}

/// `(i, j)` pairs with `i < j` in row order.
pub fn upper_pairs(k: usize) -> Vec<(Vertex, Vertex)> {
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect()
}

pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

impl Tournament {
    pub fn from_code(k: usize, code: u64) -> Self {
        assert!(k <= MAX_TOURNAMENT_ORDER);
        let mut out = vec![0u32; k];
        for (p, (i, j)) in upper_pairs(k).into_iter().enumerate() {
            if code >> p & 1 == 1 {
                out[i] |= 1 << j;
            } else {
                out[j] |= 1 << i;
            }
        }
        Tournament { k, out }
    }

    /// Builds a tournament from its arc list; every pair must be covered
    /// exactly once.
    pub fn from_arcs(k: usize, arcs: &[(Vertex, Vertex)]) -> Result<Self> {
        if k > MAX_TOURNAMENT_ORDER {
            return Err(Error::precondition(format!(
                "tournament order {k} too large"
            )));
        }
        let mut out = vec![0u32; k];
        for &(u, v) in arcs {
            if u >= k || v >= k || u == v {
                return Err(Error::precondition(format!(
                    "bad tournament arc ({u}, {v})"
                )));
            }
            if out[v] >> u & 1 == 1 || out[u] >> v & 1 == 1 {
                return Err(Error::precondition(format!(
                    "pair {{{u}, {v}}} oriented more than once"
                )));
            }
            out[u] |= 1 << v;
        }
        let t = Tournament { k, out };
        if let Some((i, j)) = upper_pairs(k)
            .into_iter()
            .find(|&(i, j)| !t.has_arc(i, j) && !t.has_arc(j, i))
        {
            return Err(Error::precondition(format!(
                "pair {{{i}, {j}}} is not oriented"
            )));
        }
        Ok(t)
    }

    pub fn from_encoding(s: &str) -> Result<Self> {
        let len = s.len();
        let k = (0..=MAX_TOURNAMENT_ORDER)
            .find(|&k| pair_count(k) == len)
            .ok_or_else(|| Error::precondition(format!("{len} is not a triangular pair count")))?;
        let mut code = 0u64;
        for (p, c) in s.chars().enumerate() {
            match c {
                '1' => code |= 1 << p,
                '0' => {}
                _ => return Err(Error::precondition(format!("bad encoding character `{c}`"))),
            }
        }
        Ok(Tournament::from_code(k, code))
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn code(&self) -> u64 {
        upper_pairs(self.k)
            .into_iter()
            .enumerate()
            .filter(|&(_, (i, j))| self.has_arc(i, j))
            .fold(0, |acc, (p, _)| acc | 1 << p)
    }

    pub fn encoding(&self) -> String {
        upper_pairs(self.k)
            .into_iter()
            .map(|(i, j)| if self.has_arc(i, j) { '1' } else { '0' })
            .collect()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u] >> v & 1 == 1
    }

    pub fn out_mask(&self, v: Vertex) -> u32 {
        self.out[v]
    }

    pub fn out_masks(&self) -> &[u32] {
        &self.out
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        self.out.iter().map(|m| m.count_ones() as usize).collect()
    }

    pub fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.k)
            .flat_map(|u| {
                (0..self.k)
                    .filter(move |&v| self.has_arc(u, v))
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_arcs(self.k, self.arcs()).expect("tournament arcs are valid")
    }

    pub fn is_strong(&self) -> bool {
        self.to_digraph().is_strong()
    }

    /// `reach[i]` is the set of vertices ending a walk of exactly `len` arcs
    /// from `i`.
    pub fn walk_reach(&self, len: usize) -> Vec<u32> {
        (0..self.k)
            .map(|i| {
                let mut frontier = 1u32 << i;
                for _ in 0..len {
                    let mut next = 0;
                    let mut f = frontier;
                    while f != 0 {
                        let v = f.trailing_zeros() as usize;
                        f &= f - 1;
                        next |= self.out[v];
                    }
                    frontier = next;
                }
                frontier
            })
            .collect()
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Tournament {
        let mut out = vec![0u32; self.k];
        for u in 0..self.k {
            let mut m = self.out[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                out[perm[u]] |= 1 << perm[v];
            }
        }
        Tournament { k: self.k, out }
    }

    fn code_under_inverse(&self, inv: &[Vertex], pairs: &[(Vertex, Vertex)]) -> u64 {
        let mut code = 0u64;
        for (p, &(a, b)) in pairs.iter().enumerate() {
            if self.out[inv[a]] >> inv[b] & 1 == 1 {
                code |= 1 << p;
            }
        }
        code
    }

    /// Smallest code over all relabellings; equal for isomorphic
    /// tournaments.
    pub fn canonical_code(&self) -> u64 {
        let pairs = upper_pairs(self.k);
        permutations(self.k)
            .iter()
            .map(|p| self.code_under_inverse(p, &pairs))
            .min()
            .unwrap_or(0)
    }

    pub fn canonical(&self) -> Tournament {
        Tournament::from_code(self.k, self.canonical_code())
    }

    /// A permutation `p` with `self.permuted(p) == *other`, by brute force.
    pub fn isomorphism_to(&self, other: &Tournament) -> Option<Vec<Vertex>> {
        if self.k != other.k {
            return None;
        }
        permutations(self.k)
            .iter()
            .find(|p| self.permuted(p) == *other)
            .cloned()
    }

    pub fn is_isomorphic(&self, other: &Tournament) -> bool {
        self.isomorphism_to(other).is_some()
    }

    pub fn automorphisms(&self) -> Vec<Vec<Vertex>> {
        permutations(self.k)
            .iter()
            .filter(|p| self.permuted(p) == *self)
            .cloned()
            .collect()
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({}, {})", self.k, self.encoding())
    }
}

impl Serialize for Tournament {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.encoding())
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Tournament::from_encoding(&s).map_err(serde::de::Error::custom)
    }
}

/// All permutations of `0..k` in lexicographic order, cached per `k`.
pub fn permutations(k: usize) -> &'static [Vec<Vertex>] {
    static CACHE: [OnceLock<Vec<Vec<Vertex>>>; MAX_TOURNAMENT_ORDER + 1] =
        [const { OnceLock::new() }; MAX_TOURNAMENT_ORDER + 1];
    CACHE[k].get_or_init(|| {
        let mut all = Vec::new();
        let mut cur: Vec<Vertex> = (0..k).collect();
        loop {
            all.push(cur.clone());
            // next lexicographic permutation
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        all
    })
}

/// One canonical representative per isomorphism class of tournaments of
/// order `k <= 7`, sorted by code. Built by extending the classes of order
/// `k - 1` with every orientation of the edges at a new vertex.
pub fn tournament_classes(k: usize) -> &'static [Tournament] {
    static CACHE: [OnceLock<Vec<Tournament>>; 8] = [const { OnceLock::new() }; 8];
    assert!(k <= 7, "isomorphism classes are tabulated up to order 7");
    CACHE[k].get_or_init(|| {
        if k <= 1 {
            return vec![Tournament::from_code(k, 0)];
        }
        let mut codes = BTreeSet::new();
        for rep in tournament_classes(k - 1) {
            for new_edges in 0u32..(1 << (k - 1)) {
                let mut out = rep.out.clone();
                out.push(0);
                for v in 0..k - 1 {
                    if new_edges >> v & 1 == 1 {
                        out[k - 1] |= 1 << v;
                    } else {
                        out[v] |= 1 << (k - 1);
                    }
                }
                codes.insert(Tournament { k, out }.canonical_code());
            }
        }
        codes
            .into_iter()
            .map(|c| Tournament::from_code(k, c))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip() {
        for code in 0..(1u64 << 6) {
            let t = Tournament::from_code(4, code);
            assert_eq!(t.code(), code);
            assert_eq!(Tournament::from_encoding(&t.encoding()).unwrap(), t);
            for (i, j) in upper_pairs(4) {
                assert!(t.has_arc(i, j) ^ t.has_arc(j, i));
            }
        }
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=7).map(|k| tournament_classes(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 4, 12, 56, 456]);
    }

    #[test]
    fn from_arcs_rejects_incomplete_and_doubled_pairs() {
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 2)]).is_err());
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]).is_err());
        assert!(Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).is_ok());
    }

    #[test]
    fn isomorphism_by_permutation() {
        let t = Tournament::from_code(5, 0b1011001101);
        let p = [3, 0, 4, 1, 2];
        let u = t.permuted(&p);
        let iso = t.isomorphism_to(&u).unwrap();
        assert_eq!(t.permuted(&iso), u);
        assert_eq!(t.canonical_code(), u.canonical_code());
    }

    #[test]
    fn walk_reach_of_cyclic_triangle() {
        let c3 = Tournament::from_arcs(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(c3.walk_reach(1), vec![0b010, 0b100, 0b001]);
        assert_eq!(c3.walk_reach(3), vec![0b001, 0b010, 0b100]);
    }
}
