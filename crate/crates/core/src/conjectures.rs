//! Constructions along long-ear decompositions: a Seymour vertex, an
//! independent set meeting every longest path, and a small quasi-kernel.

use serde::Serialize;

use crate::cert::{CertifiedSet, Role};
use crate::digraph::{Digraph, NeighborhoodReport, Vertex, VertexSet};
use crate::ear::{validate_decomposition, Ear, EarDecomposition};
use crate::error::{Error, Result};
use crate::oracles::{quasi_kernel_oracle, QUASI_KERNEL_CAP};

fn require_valid(d: &Digraph, e: &EarDecomposition) -> Result<()> {
    let report = validate_decomposition(d, e);
    match report.violations.first() {
        Some(v) => Err(Error::precondition(format!("invalid decomposition: {v}"))),
        None => Ok(()),
    }
}

/// The second-to-last vertex of the last ear. Its only out-neighbour is the
/// ear's end, so its second out-neighbourhood is everything the end points
/// to. On a bare cycle the first base vertex is returned.
pub fn seymour_vertex(d: &Digraph, e: &EarDecomposition) -> Result<(Vertex, NeighborhoodReport)> {
    d.require_asymmetric()?;
    require_valid(d, e)?;
    let v = match e.ears.last() {
        None => e.base[0],
        Some(last) if last.length() < 2 => {
            return Err(Error::precondition(format!(
                "last ear has length {} < 2",
                last.length()
            )))
        }
        Some(last) => last.vertices()[last.length() - 1],
    };
    let report = d.neighborhoods(v)?;
    if !report.is_seymour() {
        return Err(Error::verification(format!(
            "vertex {v}: second out-degree {} < out-degree {}",
            report.second_out_degree, report.out_degree
        )));
    }
    Ok((v, report))
}

/// How an ear changed the transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransversalCase {
    /// `x0` in, `xr` out, length at least 3: add `x2`.
    StartInLong,
    /// `x0` in, `xr` out, length 2: unchanged.
    StartInShort,
    /// `x0` out, `xr` in, length at least 3: add `x1`.
    EndInLong,
    /// `x0` out, `xr` in, length 2: unchanged.
    EndInShort,
    /// Both ends in: unchanged.
    BothIn,
    /// Both ends out: add `x1`.
    BothOut,
}

impl TransversalCase {
    pub fn classify(start_in: bool, end_in: bool, length: usize) -> Self {
        match (start_in, end_in) {
            (true, true) => TransversalCase::BothIn,
            (false, false) => TransversalCase::BothOut,
            (true, false) if length >= 3 => TransversalCase::StartInLong,
            (true, false) => TransversalCase::StartInShort,
            (false, true) if length >= 3 => TransversalCase::EndInLong,
            (false, true) => TransversalCase::EndInShort,
        }
    }

    /// Index of the ear vertex added, if any.
    pub fn added_index(self) -> Option<usize> {
        match self {
            TransversalCase::StartInLong => Some(2),
            TransversalCase::EndInLong | TransversalCase::BothOut => Some(1),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TransversalStep {
    pub ear: usize,
    pub case: TransversalCase,
    pub added: Option<Vertex>,
    pub cycle_ear: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Transversal {
    pub certificate: CertifiedSet,
    pub steps: Vec<TransversalStep>,
}

/// Builds an independent set meeting every longest path, starting from the
/// smallest base vertex and adding at most one vertex per ear. The result is
/// checked against the longest-path oracle.
pub fn longest_path_transversal(d: &Digraph, e: &EarDecomposition) -> Result<Transversal> {
    e.require_min_ear_length(2)?;
    require_valid(d, e)?;
    let mut set = VertexSet::new();
    set.insert(*e.base.iter().min().expect("nonempty base"));
    let mut steps = Vec::with_capacity(e.ears.len());
    for (idx, ear) in e.ears.iter().enumerate() {
        let case = TransversalCase::classify(
            set.contains(&ear.start()),
            set.contains(&ear.end()),
            ear.length(),
        );
        let added = case.added_index().map(|m| ear.vertices()[m]);
        if let Some(v) = added {
            set.insert(v);
        }
        steps.push(TransversalStep {
            ear: idx,
            case,
            added,
            cycle_ear: ear.is_cycle(),
        });
    }
    let certificate = CertifiedSet::certify(d, set, Role::Transversal, e.ears.len())?;
    Ok(Transversal { certificate, steps })
}

/// Indices `a, a + 3, ..` up to `b`, empty when `a > b`.
fn progression(a: usize, b: isize) -> Vec<usize> {
    (a..)
        .step_by(3)
        .take_while(|&m| (m as isize) <= b)
        .collect()
}

/// Ear indices added to the quasi-kernel for an ear of length `r >= 3`,
/// keyed by the membership of its ends and `r mod 3`.
///
/// In the row `x0` in, `xr` out, `r = 0 mod 3` this uses the indices
/// `2, 5, .., r - 1`; see [`quasi_kernel_row_literal`].
pub fn quasi_kernel_row(start_in: bool, end_in: bool, r: usize) -> Vec<usize> {
    let (r, hi_in, hi_out) = (r, r as isize - 3, r as isize - 1);
    match (start_in, end_in, r % 3) {
        (true, true, 0) => progression(3, hi_in),
        (true, true, 1) => with_two(progression(4, hi_in)),
        (true, true, _) => progression(2, hi_in),
        (false, true, 0) => progression(3, hi_in),
        (false, true, 1) => progression(1, hi_in),
        (false, true, _) => progression(2, hi_in),
        (true, false, 0) => progression(2, hi_out),
        (true, false, 1) => progression(3, hi_out),
        (true, false, _) => with_two(progression(4, hi_out)),
        (false, false, 0) => progression(2, hi_out),
        (false, false, 1) => progression(3, hi_out),
        (false, false, _) => progression(1, hi_out),
    }
}

/// The row as printed for `x0` in, `xr` out, `r = 0 mod 3`: indices
/// `1, 4, .., r - 1`. Adding `x1` next to `x0` breaks independence, so
/// [`quasi_kernel_row`] shifts it by one.
pub fn quasi_kernel_row_literal(start_in: bool, end_in: bool, r: usize) -> Vec<usize> {
    if start_in && !end_in && r % 3 == 0 {
        progression(1, r as isize - 1)
    } else {
        quasi_kernel_row(start_in, end_in, r)
    }
}

fn with_two(mut rest: Vec<usize>) -> Vec<usize> {
    rest.insert(0, 2);
    rest
}

/// Positions on a base cycle of length `n`: every third vertex, moving the
/// last one back a step when `n = 1 mod 3` so it does not touch position 0.
pub fn base_quasi_kernel_indices(n: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..n).step_by(3).collect();
    if n % 3 == 1 && n >= 4 {
        *idx.last_mut().unwrap() = n - 2;
    }
    idx
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiKernelStep {
    pub ear: usize,
    pub start_in: bool,
    pub end_in: bool,
    pub length: usize,
    pub added: Vec<Vertex>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmallQuasiKernel {
    pub certificate: CertifiedSet,
    pub steps: Vec<QuasiKernelStep>,
}

/// Builds a quasi-kernel of size at most `n / 2` along a decomposition
/// whose ears all have length at least 3.
pub fn small_quasi_kernel(d: &Digraph, e: &EarDecomposition) -> Result<SmallQuasiKernel> {
    e.require_min_ear_length(3)?;
    require_valid(d, e)?;
    let mut q: VertexSet = base_quasi_kernel_indices(e.base.len())
        .into_iter()
        .map(|i| e.base[i])
        .collect();
    let mut steps = Vec::with_capacity(e.ears.len());
    for (idx, ear) in e.ears.iter().enumerate() {
        let (start_in, end_in) = (q.contains(&ear.start()), q.contains(&ear.end()));
        let added: Vec<Vertex> = quasi_kernel_row(start_in, end_in, ear.length())
            .into_iter()
            .map(|m| ear.vertices()[m])
            .collect();
        q.extend(&added);
        steps.push(QuasiKernelStep {
            ear: idx,
            start_in,
            end_in,
            length: ear.length(),
            added,
        });
    }
    let certificate = CertifiedSet::certify(d, q, Role::QuasiKernel, e.ears.len())?;
    if certificate.size_bound_met != Some(true) {
        return Err(Error::verification(format!(
            "quasi-kernel of size {} exceeds half of {}",
            certificate.members.len(),
            d.n()
        )));
    }
    Ok(SmallQuasiKernel { certificate, steps })
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionAttempt {
    pub set: VertexSet,
    pub quasi_kernel: bool,
    pub small: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    /// Stage the quasi-kernel belongs to; the ear glued next is
    /// `ears[stage]`.
    pub stage: usize,
    pub ear: Ear,
    /// The set itself, then the set with each single interior vertex.
    pub attempts: Vec<ExtensionAttempt>,
    pub any_extension_works: bool,
    pub small_extension_exists: bool,
    /// Whether the next stage has a small quasi-kernel at all, when within
    /// the oracle cap.
    pub next_stage_small_exists: Option<bool>,
}

/// Tries to carry a quasi-kernel of stage `q.stage` across the next ear by
/// keeping it and adding at most one interior vertex. `q.members` are host
/// ids.
pub fn le2_quasi_kernel_obstruction(
    d: &Digraph,
    e: &EarDecomposition,
    q: &CertifiedSet,
) -> Result<ObstructionReport> {
    if !e.ears.iter().any(|p| p.length() == 2) {
        return Err(Error::precondition(
            "the decomposition has no ear of length 2",
        ));
    }
    require_valid(d, e)?;
    let j = q.stage;
    let ear = e
        .ears
        .get(j)
        .ok_or_else(|| Error::precondition(format!("stage {j} has no next ear")))?
        .clone();
    if ear.length() != 2 {
        return Err(Error::precondition(format!(
            "ear {j} has length {}, expected 2",
            ear.length()
        )));
    }
    let here = e.stage(j);
    if !here.digraph.is_quasi_kernel(&here.set_to_local(&q.members))
        || q.members.iter().any(|v| here.to_local(*v).is_none())
    {
        return Err(Error::verification(format!(
            "{:?} is not a quasi-kernel of stage {j}",
            q.members
        )));
    }
    let next = e.stage(j + 1);
    let n = next.digraph.n();
    let mut candidates = vec![q.members.clone()];
    for &x in ear.interior() {
        let mut s = q.members.clone();
        s.insert(x);
        candidates.push(s);
    }
    let attempts: Vec<ExtensionAttempt> = candidates
        .into_iter()
        .map(|set| {
            let ok = next.digraph.is_quasi_kernel(&next.set_to_local(&set));
            ExtensionAttempt {
                quasi_kernel: ok,
                small: ok && 2 * set.len() <= n,
                set,
            }
        })
        .collect();
    let next_stage_small_exists = if n <= QUASI_KERNEL_CAP {
        Some(quasi_kernel_oracle(&next.digraph)?.small_exists)
    } else {
        None
    };
    Ok(ObstructionReport {
        stage: j,
        ear,
        any_extension_works: attempts.iter().any(|a| a.quasi_kernel),
        small_extension_exists: attempts.iter().any(|a| a.small),
        attempts,
        next_stage_small_exists,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionInstance {
    pub digraph: Digraph,
    pub decomposition: EarDecomposition,
    pub quasi_kernel: CertifiedSet,
    pub report: ObstructionReport,
    /// No quasi-kernel of the stage extends, not only this one.
    pub every_quasi_kernel_fails: bool,
}

/// Searches cycles `C_b`, `3 <= b < max_n`, with one ear of length 2 for a
/// quasi-kernel of the cycle that no single-vertex extension carries
/// across. Instances where every quasi-kernel of the cycle fails are
/// preferred; otherwise the first failure found is returned.
pub fn search_le2_obstruction(max_n: usize) -> Result<Option<ObstructionInstance>> {
    let mut first = None;
    for b in 3..max_n {
        for x0 in 0..b {
            for xr in (0..b).filter(|&v| v != x0) {
                let mut arcs: Vec<(Vertex, Vertex)> = (0..b).map(|i| (i, (i + 1) % b)).collect();
                arcs.extend([(x0, b), (b, xr)]);
                let d = Digraph::from_arcs(b + 1, arcs)?;
                let e = EarDecomposition {
                    base: (0..b).collect(),
                    ears: vec![Ear::new(vec![x0, b, xr])?],
                };
                let cycle = Digraph::cycle(b);
                let qks = quasi_kernel_oracle(&cycle)?.quasi_kernels;
                let mut failing = Vec::new();
                for members in &qks {
                    let q = CertifiedSet::certify(&cycle, members.clone(), Role::QuasiKernel, 0)?;
                    let report = le2_quasi_kernel_obstruction(&d, &e, &q)?;
                    if !report.any_extension_works {
                        failing.push((q, report));
                    }
                }
                let every = !failing.is_empty() && failing.len() == qks.len();
                if let Some((q, report)) = failing.into_iter().next() {
                    let inst = ObstructionInstance {
                        digraph: d,
                        decomposition: e,
                        quasi_kernel: q,
                        report,
                        every_quasi_kernel_fails: every,
                    };
                    if every {
                        return Ok(Some(inst));
                    }
                    first.get_or_insert(inst);
                }
            }
        }
    }
    Ok(first)
}
