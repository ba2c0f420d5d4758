//! Finite loop-free digraphs over dense vertex ids and the primitive
//! predicates the rest of the crate is built on.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Vertex sets are kept ordered so certificates print and compare
/// deterministically.
pub type VertexSet = BTreeSet<Vertex>;

/// Immutable digraph. Arcs have set semantics; digons are allowed, loops are
/// not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "crate::io::DigraphJson", try_from = "crate::io::DigraphJson")]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
    inc: Vec<Vec<Vertex>>,
    arc_count: usize,
    labels: Option<Vec<String>>,
}

impl Digraph {
    /// Edgeless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
            arc_count: 0,
            labels: None,
        }
    }

    /// Builds a digraph from an arc list. Repeated arcs collapse to one.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut out = vec![Vec::new(); n];
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::precondition(format!("loop arc on vertex {u}")));
            }
            out[u].push(v);
        }
        let mut inc = vec![Vec::new(); n];
        let mut arc_count = 0;
        for (u, row) in out.iter_mut().enumerate() {
            row.sort_unstable();
            row.dedup();
            arc_count += row.len();
            for &v in row.iter() {
                inc[v].push(u);
            }
        }
        Ok(Digraph {
            out,
            inc,
            arc_count,
            labels: None,
        })
    }

    /// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "a directed cycle needs at least two vertices");
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle arcs are valid")
    }

    /// Directed path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        Digraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).expect("path arcs are valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.out[u].binary_search(&v).is_ok()
    }

    /// Out-neighbours, sorted ascending.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out[v]
    }

    /// In-neighbours, sorted ascending.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.inc[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out[v].len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Returns the first digon `(u, v)` with `u < v`, if any.
    pub fn find_digon(&self) -> Option<(Vertex, Vertex)> {
        self.arcs().find(|&(u, v)| u < v && self.has_arc(v, u))
    }

    pub fn is_asymmetric(&self) -> bool {
        self.find_digon().is_none()
    }

    pub fn require_asymmetric(&self) -> Result<()> {
        match self.find_digon() {
            Some((u, v)) => Err(Error::NotAsymmetric(u, v)),
            None => Ok(()),
        }
    }

    /// Sub-digraph induced by `keep`, relabelled `0..keep.len()` in the order
    /// given.
    pub fn induced(&self, keep: &[Vertex]) -> Digraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let arcs = keep.iter().flat_map(|&u| {
            let local = &local;
            self.out[u]
                .iter()
                .filter(move |&&v| local[v] != usize::MAX)
                .map(move |&v| (local[u], local[v]))
        });
        Digraph::from_arcs(keep.len(), arcs).expect("induced arcs are in range")
    }

    /// Vertices reachable from `start` along arcs, including `start`.
    pub fn reachable_from(&self, start: Vertex) -> Vec<bool> {
        search(start, self.n(), |v| &self.out[v])
    }

    fn reaching(&self, target: Vertex) -> Vec<bool> {
        search(target, self.n(), |v| &self.inc[v])
    }

    /// One strongly connected component covers every vertex. `K1` is strong.
    pub fn is_strong(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        self.reachable_from(0).iter().all(|&b| b) && self.reaching(0).iter().all(|&b| b)
    }

    /// The underlying simple graph is 2-connected. `K1` and `K2` count as
    /// nonseparable.
    pub fn is_nonseparable(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        if n <= 2 {
            return n == 1 || self.has_arc(0, 1) || self.has_arc(1, 0);
        }
        let adj = self.underlying_adjacency();
        !has_articulation_point(&adj)
    }

    /// Adjacency lists of the underlying simple graph (digons collapse).
    pub fn underlying_adjacency(&self) -> Vec<Vec<Vertex>> {
        (0..self.n())
            .map(|v| {
                let mut row: Vec<Vertex> =
                    self.out[v].iter().chain(&self.inc[v]).copied().collect();
                row.sort_unstable();
                row.dedup();
                row
            })
            .collect()
    }

    pub fn is_underlying_bipartite(&self) -> bool {
        let adj = self.underlying_adjacency();
        let mut side = vec![None; self.n()];
        for s in 0..self.n() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for &w in &adj[v] {
                    match side[w] {
                        None => {
                            side[w] = Some(!sv);
                            stack.push(w);
                        }
                        Some(sw) if sw == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn neighborhoods(&self, v: Vertex) -> Result<NeighborhoodReport> {
        self.check_vertex(v)?;
        let first_out: VertexSet = self.out[v].iter().copied().collect();
        let second_out: VertexSet = first_out
            .iter()
            .flat_map(|&u| self.out[u].iter().copied())
            .filter(|w| !first_out.contains(w))
            .collect();
        Ok(NeighborhoodReport {
            vertex: v,
            out_degree: first_out.len(),
            second_out_degree: second_out.len(),
            first_out,
            second_out,
        })
    }

    pub fn set_predicates(&self, set: &VertexSet) -> Result<SetPredicates> {
        for &v in set {
            self.check_vertex(v)?;
        }
        let mut member = vec![false; self.n()];
        for &v in set {
            member[v] = true;
        }
        Ok(SetPredicates {
            independent: self.is_independent_mask(&member),
            absorbent: self.is_absorbent_mask(&member),
            quasi_absorbent: self.is_quasi_absorbent_mask(&member),
        })
    }

    pub fn is_independent_mask(&self, member: &[bool]) -> bool {
        self.arcs().all(|(u, v)| !(member[u] && member[v]))
    }

    pub fn is_absorbent_mask(&self, member: &[bool]) -> bool {
        (0..self.n()).all(|v| member[v] || self.out[v].iter().any(|&w| member[w]))
    }

    pub fn is_quasi_absorbent_mask(&self, member: &[bool]) -> bool {
        // A vertex is "hit" if it is in the set or has an out-arc into it.
        let hit: Vec<bool> = (0..self.n())
            .map(|v| member[v] || self.out[v].iter().any(|&w| member[w]))
            .collect();
        (0..self.n()).all(|v| member[v] || self.out[v].iter().any(|&w| hit[w]))
    }

    pub fn is_kernel(&self, set: &VertexSet) -> bool {
        self.set_predicates(set)
            .map(|p| p.independent && p.absorbent)
            .unwrap_or(false)
    }

    pub fn is_quasi_kernel(&self, set: &VertexSet) -> bool {
        self.set_predicates(set)
            .map(|p| p.independent && p.quasi_absorbent)
            .unwrap_or(false)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.set_predicates(set)
            .map(|p| p.independent)
            .unwrap_or(false)
    }
}

fn search<'a, F>(start: Vertex, n: usize, next: F) -> Vec<bool>
where
    F: Fn(Vertex) -> &'a [Vertex],
{
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in next(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Iterative Hopcroft-Tarjan low-link search over every component.
fn has_articulation_point(adj: &[Vec<Vertex>]) -> bool {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut components = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        components += 1;
        if components > 1 {
            // Disconnected graphs are separable.
            return true;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        return true;
                    }
                }
            }
        }
        if root_children > 1 {
            return true;
        }
    }
    false
}

/// First and second out-neighbourhoods of a vertex. The second
/// neighbourhood is `N+(N+(v)) \ N+(v)` evaluated literally, so `v` itself
/// may appear in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodReport {
    pub vertex: Vertex,
    pub first_out: VertexSet,
    pub second_out: VertexSet,
    pub out_degree: usize,
    pub second_out_degree: usize,
}

impl NeighborhoodReport {
    pub fn is_seymour(&self) -> bool {
        self.second_out_degree >= self.out_degree
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetPredicates {
    pub independent: bool,
    pub absorbent: bool,
    pub quasi_absorbent: bool,
}
