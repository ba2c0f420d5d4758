//! Ear decompositions: construction, validation, the exact `LE_i` search and
//! a seeded generator of decomposed instances.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// A path or cycle `x0 .. xr` glued onto a stage through its endpoints.
/// A cycle ear has `x0 == xr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct Ear {
    vertices: Vec<Vertex>,
}

impl Ear {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::precondition("an ear needs at least one arc"));
        }
        let r = vertices.len() - 1;
        let mut seen = HashSet::new();
        seen.insert(vertices[0]);
        seen.insert(vertices[r]);
        for &x in &vertices[1..r] {
            if !seen.insert(x) {
                return Err(Error::precondition(format!(
                    "ear {vertices:?} repeats vertex {x}"
                )));
            }
        }
        if r == 1 && vertices[0] == vertices[1] {
            return Err(Error::precondition("an ear of length 1 cannot be a loop"));
        }
        Ok(Ear { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of arcs.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_cycle(&self) -> bool {
        self.start() == self.end()
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn interior(&self) -> &[Vertex] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

impl TryFrom<Vec<Vertex>> for Ear {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Ear::new(v)
    }
}

impl From<Ear> for Vec<Vertex> {
    fn from(e: Ear) -> Self {
        e.vertices
    }
}

/// Whether ears may close up on a single attachment vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EarMode {
    #[default]
    AllowCycles,
    /// Every ear has distinct endpoints; on a nonseparable digraph this
    /// keeps every stage nonseparable.
    PathsOnly,
}

/// Base cycle plus ordered ears, in the host digraph's vertex ids. The base
/// is stored without repeating its first vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub base: Vec<Vertex>,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    pub fn cycle(base: Vec<Vertex>) -> Self {
        EarDecomposition {
            base,
            ears: Vec::new(),
        }
    }

    pub fn base_arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let b = self.base.len();
        (0..b).map(move |i| (self.base[i], self.base[(i + 1) % b]))
    }

    /// Shortest ear length, `None` when there are no ears.
    pub fn min_ear_length(&self) -> Option<usize> {
        self.ears.iter().map(Ear::length).min()
    }

    /// Every ear has length at least `i` (vacuous for a bare cycle).
    pub fn certifies_le(&self, i: usize) -> bool {
        self.ears.iter().all(|e| e.length() >= i)
    }

    pub fn has_cycle_ears(&self) -> bool {
        self.ears.iter().any(Ear::is_cycle)
    }

    pub fn require_min_ear_length(&self, i: usize) -> Result<()> {
        match self.ears.iter().position(|e| e.length() < i) {
            Some(p) => Err(Error::precondition(format!(
                "ear {p} has length {} < {i}",
                self.ears[p].length()
            ))),
            None => Ok(()),
        }
    }

    pub fn require_path_ears(&self) -> Result<()> {
        match self.ears.iter().find(|e| e.is_cycle()) {
            Some(e) => Err(Error::CycleEar(e.start())),
            None => Ok(()),
        }
    }

    /// Host vertices in the order stages discover them.
    pub fn discovery_order(&self) -> Vec<Vertex> {
        let mut order = self.base.clone();
        for e in &self.ears {
            order.extend_from_slice(e.interior());
        }
        order
    }

    /// Number of vertices of each stage `D_0 ..= D_k`.
    pub fn stage_sizes(&self) -> Vec<usize> {
        let mut sizes = Vec::with_capacity(self.ears.len() + 1);
        let mut n = self.base.len();
        sizes.push(n);
        for e in &self.ears {
            n += e.interior().len();
            sizes.push(n);
        }
        sizes
    }

    /// Relabels so that stage `j` occupies ids `0..stage_sizes()[j]` and
    /// every ear's interior gets consecutive fresh ids. Returns the
    /// relabelled decomposition and the local-to-host map.
    pub fn canonical(&self) -> (EarDecomposition, Vec<Vertex>) {
        let order = self.discovery_order();
        let max = order.iter().copied().max().map_or(0, |m| m + 1);
        let mut local = vec![usize::MAX; max];
        for (i, &v) in order.iter().enumerate() {
            local[v] = i;
        }
        let base = self.base.iter().map(|&v| local[v]).collect();
        let ears = self
            .ears
            .iter()
            .map(|e| Ear {
                vertices: e.vertices.iter().map(|&v| local[v]).collect(),
            })
            .collect();
        (EarDecomposition { base, ears }, order)
    }

    /// Stage digraph `D_j` in local ids (see [`EarDecomposition::canonical`]).
    pub fn stage(&self, j: usize) -> Stage {
        assert!(j <= self.ears.len(), "stage {j} out of range");
        let (canon, order) = self.canonical();
        let n = canon.stage_sizes()[j];
        let arcs: Vec<_> = canon
            .base_arcs()
            .chain(
                canon.ears[..j]
                    .iter()
                    .flat_map(|e| e.arcs().collect::<Vec<_>>()),
            )
            .collect();
        Stage {
            index: j,
            digraph: Digraph::from_arcs(n, arcs).expect("stage arcs are in range"),
            to_host: order[..n].to_vec(),
        }
    }

    /// All stages `D_0 ..= D_k`.
    pub fn stages(&self) -> Vec<Stage> {
        (0..=self.ears.len()).map(|j| self.stage(j)).collect()
    }
}

/// A stage digraph with its vertices relabelled to `0..n`.
#[derive(Debug, Clone)]
pub struct Stage {
    pub index: usize,
    pub digraph: Digraph,
    pub to_host: Vec<Vertex>,
}

impl Stage {
    pub fn to_local(&self, host: Vertex) -> Option<Vertex> {
        self.to_host.iter().position(|&v| v == host)
    }

    pub fn set_to_host(&self, set: &VertexSet) -> VertexSet {
        set.iter().map(|&v| self.to_host[v]).collect()
    }

    /// Maps a host set into local ids, dropping vertices outside the stage.
    pub fn set_to_local(&self, set: &VertexSet) -> VertexSet {
        set.iter().filter_map(|&v| self.to_local(v)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Clause {
    BaseTooShort,
    VertexOutOfRange { vertex: Vertex },
    RepeatedVertex { vertex: Vertex },
    MissingArc { from: Vertex, to: Vertex },
    ArcReused { from: Vertex, to: Vertex },
    EndpointOutsideStage { vertex: Vertex },
    InternalVertexInStage { vertex: Vertex },
    CycleEarForbidden,
    StageNotStrong,
    UncoveredVertex { vertex: Vertex },
    UncoveredArc { from: Vertex, to: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Stage whose construction broke the clause (`0` for the base cycle,
    /// `j + 1` for ear `j`).
    pub stage: usize,
    #[serde(flatten)]
    pub clause: Clause,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "stage {}: {:?}", self.stage, self.clause)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub min_ear_length: Option<usize>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_decomposition(d: &Digraph, e: &EarDecomposition) -> ValidationReport {
    validate_with(d, e, EarMode::AllowCycles)
}

pub fn validate_with(d: &Digraph, e: &EarDecomposition, mode: EarMode) -> ValidationReport {
    let n = d.n();
    let mut violations = Vec::new();
    let mut in_stage = vec![false; n];
    let mut used: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut stage_arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut push = |stage, clause| violations.push(Violation { stage, clause });

    let mut check_arc =
        |stage: usize, u: Vertex, v: Vertex, push: &mut dyn FnMut(usize, Clause)| {
            if u >= n || v >= n {
                return false;
            }
            if !d.has_arc(u, v) {
                push(stage, Clause::MissingArc { from: u, to: v });
                return false;
            }
            if !used.insert((u, v)) {
                push(stage, Clause::ArcReused { from: u, to: v });
                return false;
            }
            true
        };

    if e.base.len() < 2 {
        push(0, Clause::BaseTooShort);
    }
    for &v in &e.base {
        if v >= n {
            push(0, Clause::VertexOutOfRange { vertex: v });
        } else if in_stage[v] {
            push(0, Clause::RepeatedVertex { vertex: v });
        } else {
            in_stage[v] = true;
        }
    }
    for (u, v) in e.base_arcs() {
        if check_arc(0, u, v, &mut push) {
            stage_arcs.push((u, v));
        }
    }

    let mut stage_vertices: Vec<Vertex> = e.base.iter().copied().filter(|&v| v < n).collect();
    for (j, ear) in e.ears.iter().enumerate() {
        let stage = j + 1;
        if mode == EarMode::PathsOnly && ear.is_cycle() {
            push(stage, Clause::CycleEarForbidden);
        }
        for x in [ear.start(), ear.end()] {
            if x >= n {
                push(stage, Clause::VertexOutOfRange { vertex: x });
            } else if !in_stage[x] {
                push(stage, Clause::EndpointOutsideStage { vertex: x });
            }
        }
        for &x in ear.interior() {
            if x >= n {
                push(stage, Clause::VertexOutOfRange { vertex: x });
            } else if in_stage[x] {
                push(stage, Clause::InternalVertexInStage { vertex: x });
            }
        }
        for (u, v) in ear.arcs() {
            if check_arc(stage, u, v, &mut push) {
                stage_arcs.push((u, v));
            }
        }
        for &x in ear.interior() {
            if x < n && !in_stage[x] {
                in_stage[x] = true;
                stage_vertices.push(x);
            }
        }
        let sub = stage_digraph(n, &stage_vertices, &stage_arcs);
        if !sub.is_strong() {
            push(stage, Clause::StageNotStrong);
        }
    }
    if e.ears.is_empty() && e.base.len() >= 2 {
        let sub = stage_digraph(n, &stage_vertices, &stage_arcs);
        if !sub.is_strong() {
            push(0, Clause::StageNotStrong);
        }
    }

    let last = e.ears.len();
    for v in 0..n {
        if !in_stage[v] {
            push(last, Clause::UncoveredVertex { vertex: v });
        }
    }
    for (u, v) in d.arcs() {
        if !used.contains(&(u, v)) {
            push(last, Clause::UncoveredArc { from: u, to: v });
        }
    }

    ValidationReport {
        violations,
        min_ear_length: e.min_ear_length(),
    }
}

fn stage_digraph(n: usize, vertices: &[Vertex], arcs: &[(Vertex, Vertex)]) -> Digraph {
    let mut local = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i;
    }
    Digraph::from_arcs(
        vertices.len(),
        arcs.iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v])),
    )
    .expect("stage arcs are in range")
}

/// Any ear decomposition of a strong digraph; cycle ears are allowed.
pub fn find_ear_decomposition(d: &Digraph) -> Result<EarDecomposition> {
    find_ear_decomposition_with(d, EarMode::AllowCycles)
}

/// Greedy construction: repeatedly take the uncovered arc leaving the stage
/// with the smallest `(tail, head)` and close it with a shortest path back
/// into the stage.
pub fn find_ear_decomposition_with(d: &Digraph, mode: EarMode) -> Result<EarDecomposition> {
    if d.n() == 0 || !d.is_strong() {
        return Err(Error::NotStrong);
    }
    if d.n() == 1 {
        return Err(Error::precondition("K1 has no cycle to start from"));
    }
    if mode == EarMode::PathsOnly && !d.is_nonseparable() {
        return Err(Error::precondition(
            "path-only decompositions need a nonseparable digraph",
        ));
    }
    let n = d.n();
    let base = shortest_cycle_through(d, 0);
    let mut in_stage = vec![false; n];
    for &v in &base {
        in_stage[v] = true;
    }
    let mut used: HashSet<(Vertex, Vertex)> = HashSet::new();
    let b = base.len();
    for i in 0..b {
        used.insert((base[i], base[(i + 1) % b]));
    }
    let mut ears = Vec::new();
    while used.len() < d.arc_count() {
        let mut found = None;
        'scan: for u in (0..n).filter(|&u| in_stage[u]) {
            for &v in d.out_neighbors(u) {
                if used.contains(&(u, v)) {
                    continue;
                }
                if in_stage[v] {
                    found = Some(vec![u, v]);
                    break 'scan;
                }
                let forbid = (mode == EarMode::PathsOnly).then_some(u);
                if let Some(tail) = path_back_to_stage(d, v, &in_stage, forbid) {
                    let mut ear = vec![u];
                    ear.extend(tail);
                    found = Some(ear);
                    break 'scan;
                }
            }
        }
        let vertices = found.ok_or_else(|| {
            Error::precondition("no admissible ear found; digraph is not decomposable in this mode")
        })?;
        let ear = Ear::new(vertices)?;
        for (u, v) in ear.arcs() {
            used.insert((u, v));
        }
        for &x in ear.interior() {
            in_stage[x] = true;
        }
        ears.push(ear);
    }
    Ok(EarDecomposition { base, ears })
}

/// Shortest cycle through `s`, found by BFS; ties go to smaller ids.
fn shortest_cycle_through(d: &Digraph, s: Vertex) -> Vec<Vertex> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in d.out_neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let last = d
        .in_neighbors(s)
        .iter()
        .copied()
        .filter(|&w| dist[w] != usize::MAX)
        .min_by_key(|&w| (dist[w], w))
        .expect("strong digraph with n >= 2 has a cycle through every vertex");
    let mut cycle = vec![last];
    let mut v = last;
    while v != s {
        v = parent[v];
        cycle.push(v);
    }
    cycle.reverse();
    cycle
}

/// Shortest path from `start` (outside the stage) through non-stage vertices
/// to any stage vertex other than `forbid`.
fn path_back_to_stage(
    d: &Digraph,
    start: Vertex,
    in_stage: &[bool],
    forbid: Option<Vertex>,
) -> Option<Vec<Vertex>> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in d.out_neighbors(v) {
            if in_stage[w] {
                if Some(w) == forbid {
                    continue;
                }
                let mut path = vec![w, v];
                let mut x = v;
                while x != start {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeOutcome {
    Found(EarDecomposition),
    /// The search space was exhausted without finding a decomposition.
    ProvablyNone,
}

/// Glues `ear` onto `h`. The endpoints must be vertices of `h` and the
/// interior must be `h.n(), h.n() + 1, ..` in order.
pub fn glue_ear(h: &Digraph, ear: &Ear) -> Result<Digraph> {
    let n = h.n();
    h.check_vertex(ear.start())?;
    h.check_vertex(ear.end())?;
    if ear
        .interior()
        .iter()
        .copied()
        .ne(n..n + ear.interior().len())
    {
        return Err(Error::precondition(format!(
            "ear interior {:?} must be the fresh ids {n}..",
            ear.interior()
        )));
    }
    if let Some((u, v)) = ear.arcs().find(|&(u, v)| u < n && v < n && h.has_arc(u, v)) {
        return Err(Error::precondition(format!(
            "ear arc ({u}, {v}) already in the stage"
        )));
    }
    Digraph::from_arcs(n + ear.interior().len(), h.arcs().chain(ear.arcs()))
}

/// Exact search for a decomposition whose ears all have length at least
/// `min_len`. Ears are tried longest first; failed stage vertex sets are
/// memoised. Exceeding `budget` search nodes is an error distinct from
/// [`LeOutcome::ProvablyNone`].
pub fn find_le_decomposition(
    d: &Digraph,
    min_len: usize,
    budget: u64,
    mode: EarMode,
) -> Result<LeOutcome> {
    if min_len == 0 {
        return Err(Error::precondition("minimum ear length must be at least 1"));
    }
    if d.n() == 0 || !d.is_strong() {
        return Err(Error::NotStrong);
    }
    if d.n() == 1 {
        return Ok(LeOutcome::ProvablyNone);
    }
    if min_len == 1 {
        return match find_ear_decomposition_with(d, mode) {
            Ok(e) => Ok(LeOutcome::Found(e)),
            Err(Error::Precondition(_)) => Ok(LeOutcome::ProvablyNone),
            Err(err) => Err(err),
        };
    }
    let mut search = LeSearch {
        d,
        min_len,
        mode,
        budget,
        nodes: 0,
        failed: HashSet::new(),
    };
    for base in search.base_cycles() {
        search.tick()?;
        let mut stage = FixedBitSet::with_capacity(d.n());
        for &v in &base {
            stage.insert(v);
        }
        let mut ears = Vec::new();
        if search.extend(&stage, &mut ears)? {
            let e = EarDecomposition { base, ears };
            debug_assert!(validate_with(d, &e, mode).is_ok());
            return Ok(LeOutcome::Found(e));
        }
    }
    Ok(LeOutcome::ProvablyNone)
}

struct LeSearch<'a> {
    d: &'a Digraph,
    min_len: usize,
    mode: EarMode,
    budget: u64,
    nodes: u64,
    failed: HashSet<FixedBitSet>,
}

impl LeSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::BudgetExhausted {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    /// Simple cycles whose vertex set induces no other arc, each listed once
    /// from its smallest vertex, longest first.
    fn base_cycles(&self) -> Vec<Vec<Vertex>> {
        let d = self.d;
        let mut cycles = Vec::new();
        for s in d.vertices() {
            let mut path = vec![s];
            let mut on_path = vec![false; d.n()];
            on_path[s] = true;
            self.cycles_from(s, &mut path, &mut on_path, &mut cycles);
        }
        cycles.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        cycles
    }

    fn cycles_from(
        &self,
        s: Vertex,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let d = self.d;
        let y = *path.last().unwrap();
        let back: Vec<_> = d
            .out_neighbors(y)
            .iter()
            .filter(|&&w| on_path[w])
            .copied()
            .collect();
        if path.len() > 1 && !back.is_empty() {
            if back == [s] {
                out.push(path.clone());
            }
            return;
        }
        for &z in d.out_neighbors(y) {
            if z <= s || on_path[z] {
                continue;
            }
            if d.in_neighbors(z).iter().any(|&w| on_path[w] && w != y) {
                continue;
            }
            path.push(z);
            on_path[z] = true;
            self.cycles_from(s, path, on_path, out);
            on_path[z] = false;
            path.pop();
        }
    }

    fn extend(&mut self, stage: &FixedBitSet, ears: &mut Vec<Ear>) -> Result<bool> {
        self.tick()?;
        if stage.count_ones(..) == self.d.n() {
            return Ok(true);
        }
        if self.failed.contains(stage) {
            return Ok(false);
        }
        for ear in self.candidate_ears(stage) {
            let mut next = stage.clone();
            for &x in ear.interior() {
                next.insert(x);
            }
            ears.push(ear);
            if self.extend(&next, ears)? {
                return Ok(true);
            }
            ears.pop();
        }
        self.failed.insert(stage.clone());
        Ok(false)
    }

    /// Ears that keep the stage an induced subdigraph, ordered longest
    /// first, then by endpoints, then lexicographically.
    fn candidate_ears(&self, stage: &FixedBitSet) -> Vec<Ear> {
        let d = self.d;
        let mut out = Vec::new();
        let mut on_path = vec![false; d.n()];
        for u in stage.ones() {
            for &v in d.out_neighbors(u) {
                if stage.contains(v) {
                    continue;
                }
                if d.in_neighbors(v)
                    .iter()
                    .any(|&w| stage.contains(w) && w != u)
                {
                    continue;
                }
                let mut path = vec![u, v];
                on_path[v] = true;
                self.ear_paths(stage, &mut path, &mut on_path, &mut out);
                on_path[v] = false;
            }
        }
        out.sort_by(|a, b| {
            b.length()
                .cmp(&a.length())
                .then_with(|| (a.start(), a.end()).cmp(&(b.start(), b.end())))
                .then_with(|| a.vertices().cmp(b.vertices()))
        });
        out
    }

    fn ear_paths(
        &self,
        stage: &FixedBitSet,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        out: &mut Vec<Ear>,
    ) {
        let d = self.d;
        let u = path[0];
        let y = *path.last().unwrap();
        let inside: Vec<Vertex> = d
            .out_neighbors(y)
            .iter()
            .copied()
            .filter(|&w| stage.contains(w) || on_path[w])
            .collect();
        match inside.as_slice() {
            [] => {
                for &z in d.out_neighbors(y) {
                    if d.in_neighbors(z)
                        .iter()
                        .any(|&w| (stage.contains(w) || on_path[w]) && w != y)
                    {
                        continue;
                    }
                    path.push(z);
                    on_path[z] = true;
                    self.ear_paths(stage, path, on_path, out);
                    on_path[z] = false;
                    path.pop();
                }
            }
            [w] if stage.contains(*w) => {
                if *w == u && self.mode == EarMode::PathsOnly {
                    return;
                }
                if path.len() >= self.min_len {
                    let mut vertices = path.clone();
                    vertices.push(*w);
                    out.push(Ear { vertices });
                }
            }
            _ => {}
        }
    }
}

/// Parameters of the seeded decomposed-instance generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LeParams {
    pub base_length: usize,
    pub ear_count: usize,
    pub min_ear_length: usize,
    pub max_ear_length: usize,
    pub cycle_ear_probability: f64,
    /// Avoid digons: base length at least 3, cycle ears at least 3 long.
    pub asymmetric: bool,
    pub seed: u64,
}

impl Default for LeParams {
    fn default() -> Self {
        LeParams {
            base_length: 3,
            ear_count: 3,
            min_ear_length: 2,
            max_ear_length: 4,
            cycle_ear_probability: 0.0,
            asymmetric: false,
            seed: 0,
        }
    }
}

/// Generates a digraph together with a decomposition certifying
/// `LE_{min_ear_length}`. Deterministic per seed.
pub fn generate_random_le(p: &LeParams) -> Result<(Digraph, EarDecomposition)> {
    if p.base_length < 2 {
        return Err(Error::precondition("base length must be at least 2"));
    }
    if p.asymmetric && p.base_length < 3 {
        return Err(Error::precondition(
            "an asymmetrical base cycle needs length at least 3",
        ));
    }
    if p.min_ear_length < 1 || p.min_ear_length > p.max_ear_length {
        return Err(Error::precondition(
            "need 1 <= min ear length <= max ear length",
        ));
    }
    if !(0.0..=1.0).contains(&p.cycle_ear_probability) {
        return Err(Error::precondition(
            "cycle ear probability must lie in [0, 1]",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut n = p.base_length;
    let base: Vec<Vertex> = (0..n).collect();
    let mut arcs: HashSet<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let min_cycle = if p.asymmetric { 3 } else { 2 };
    let mut ears = Vec::with_capacity(p.ear_count);
    for _ in 0..p.ear_count {
        let mut placed = false;
        for _attempt in 0..200 {
            let len = rng.random_range(p.min_ear_length..=p.max_ear_length);
            let cycle = len >= min_cycle && rng.random_bool(p.cycle_ear_probability);
            let x0 = rng.random_range(0..n);
            let xr = if cycle {
                x0
            } else {
                if n < 2 {
                    continue;
                }
                let mut xr = rng.random_range(0..n - 1);
                if xr >= x0 {
                    xr += 1;
                }
                xr
            };
            if len == 1 && (arcs.contains(&(x0, xr)) || (p.asymmetric && arcs.contains(&(xr, x0))))
            {
                continue;
            }
            let mut vertices = vec![x0];
            vertices.extend(n..n + len - 1);
            vertices.push(xr);
            n += len - 1;
            let ear = Ear::new(vertices)?;
            arcs.extend(ear.arcs());
            ears.push(ear);
            placed = true;
            break;
        }
        if !placed {
            return Err(Error::precondition(
                "could not place an ear with these parameters",
            ));
        }
    }
    let mut arc_list: Vec<_> = arcs.into_iter().collect();
    arc_list.sort_unstable();
    let d = Digraph::from_arcs(n, arc_list)?;
    Ok((d, EarDecomposition { base, ears }))
}
