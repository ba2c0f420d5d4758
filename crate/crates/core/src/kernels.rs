//! Carrying kernels across path ears of length at least 2, in both
//! directions, and tracing kernel existence along a decomposition.
//!
//! The single-ear operations work on a stage `h` in local ids and an ear
//! whose interior is `h.n(), h.n() + 1, ..` (see [`glue_ear`]).

use serde::{Deserialize, Serialize};

use crate::cert::{CertifiedSet, Role};
use crate::digraph::{Digraph, Vertex, VertexSet};
use crate::ear::{glue_ear, validate_with, Ear, EarDecomposition, EarMode};
use crate::error::{Error, Result};
use crate::oracles::kernel_oracle;

/// End membership and parity that block a kernel from crossing an ear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// Both ends in the kernel, odd length: extension not guaranteed.
    BothInOdd,
    /// Start in, end out, even length: extension not guaranteed.
    StartInEndOutEven,
    /// Start out, end in, odd length: restriction not guaranteed.
    StartOutEndInOdd,
    /// Both ends out, even length: restriction not guaranteed.
    BothOutEven,
}

/// What happened at one ear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "case")]
pub enum Transition {
    /// Kernel extended by case 1 to 4.
    Extended(u8),
    /// Kernel restricted under condition 1 to 4.
    Restricted(u8),
    Blocked(Obstruction),
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelStep {
    pub transition: Transition,
    /// The new kernel. A blocked restriction still reports the restricted
    /// set when it happens to be a kernel.
    pub kernel: Option<CertifiedSet>,
    /// The kernel comes from one of the cases or conditions.
    pub guaranteed: bool,
}

fn check_ear(h: &Digraph, p: &Ear) -> Result<Digraph> {
    if p.is_cycle() {
        return Err(Error::CycleEar(p.start()));
    }
    if p.length() < 2 {
        return Err(Error::precondition(format!(
            "ear length {} < 2",
            p.length()
        )));
    }
    if !h.is_strong() {
        return Err(Error::NotStrong);
    }
    if !h.is_nonseparable() {
        return Err(Error::precondition("stage is not nonseparable"));
    }
    glue_ear(h, p)
}

fn require_kernel(d: &Digraph, set: &VertexSet, what: &str) -> Result<()> {
    if set.iter().any(|&v| v >= d.n()) || !d.is_kernel(set) {
        return Err(Error::verification(format!(
            "{set:?} is not a kernel of {what}"
        )));
    }
    Ok(())
}

/// Ear indices `from, from + 2, ..` up to `to`, empty when `from > to`.
fn stride_two(from: usize, to: isize) -> impl Iterator<Item = usize> {
    (from..).step_by(2).take_while(move |&m| (m as isize) <= to)
}

/// The extension case for the given end membership and length, or the
/// obstruction.
pub fn extension_case(
    start_in: bool,
    end_in: bool,
    r: usize,
) -> std::result::Result<(u8, Vec<usize>), Obstruction> {
    let r_i = r as isize;
    let even = r % 2 == 0;
    match (start_in, end_in, even) {
        (true, true, true) => Ok((1, stride_two(2, r_i - 2).collect())),
        (true, true, false) => Err(Obstruction::BothInOdd),
        (true, false, false) => Ok((2, stride_two(2, r_i - 1).collect())),
        (true, false, true) => Err(Obstruction::StartInEndOutEven),
        (false, true, true) => Ok((3, stride_two(2, r_i - 2).collect())),
        (false, true, false) => Ok((3, stride_two(1, r_i - 2).collect())),
        (false, false, true) => Ok((4, stride_two(1, r_i - 1).collect())),
        (false, false, false) => Ok((4, stride_two(2, r_i - 1).collect())),
    }
}

/// The restriction condition for the given end membership and length, or
/// the obstruction.
pub fn restriction_condition(
    start_in: bool,
    end_in: bool,
    r: usize,
) -> std::result::Result<u8, Obstruction> {
    let even = r % 2 == 0;
    match (start_in, end_in) {
        (true, true) => Ok(1),
        (true, false) => Ok(2),
        (false, true) if even => Ok(3),
        (false, true) => Err(Obstruction::StartOutEndInOdd),
        (false, false) if !even => Ok(4),
        (false, false) => Err(Obstruction::BothOutEven),
    }
}

/// Extends a kernel `n` of `h` to a kernel of `h` with `p` glued on.
pub fn extend_kernel(h: &Digraph, p: &Ear, n: &VertexSet) -> Result<KernelStep> {
    let glued = check_ear(h, p)?;
    require_kernel(h, n, "the stage")?;
    match extension_case(n.contains(&p.start()), n.contains(&p.end()), p.length()) {
        Err(o) => Ok(KernelStep {
            transition: Transition::Blocked(o),
            kernel: None,
            guaranteed: false,
        }),
        Ok((case, indices)) => {
            let mut set = n.clone();
            set.extend(indices.into_iter().map(|m| p.vertices()[m]));
            Ok(KernelStep {
                transition: Transition::Extended(case),
                kernel: Some(CertifiedSet::certify(&glued, set, Role::Kernel, 1)?),
                guaranteed: true,
            })
        }
    }
}

/// Restricts a kernel `n_prime` of `h` with `p` glued on to a kernel of `h`.
pub fn restrict_kernel(h: &Digraph, p: &Ear, n_prime: &VertexSet) -> Result<KernelStep> {
    let glued = check_ear(h, p)?;
    require_kernel(&glued, n_prime, "the stage with the ear")?;
    let set: VertexSet = n_prime.range(..h.n()).copied().collect();
    match restriction_condition(
        n_prime.contains(&p.start()),
        n_prime.contains(&p.end()),
        p.length(),
    ) {
        Err(o) => Ok(KernelStep {
            transition: Transition::Blocked(o),
            kernel: CertifiedSet::certify(h, set, Role::Kernel, 0).ok(),
            guaranteed: false,
        }),
        Ok(cond) => Ok(KernelStep {
            transition: Transition::Restricted(cond),
            kernel: Some(CertifiedSet::certify(h, set, Role::Kernel, 0)?),
            guaranteed: true,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Dichotomy {
    AllStagesHaveKernels,
    /// Stage `stage` differs from every later stage, which all agree with the
    /// whole digraph.
    FlipAtStage {
        stage: usize,
    },
    AllStagesLackKernels,
    /// The pattern contradicts both branches.
    Mixed {
        reason: String,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct StageRecord {
    pub stage: usize,
    pub order: usize,
    pub has_kernel: bool,
    /// Smallest kernel in host ids.
    pub kernel: Option<CertifiedSet>,
    /// Forward: what the ear after this stage does to its kernel.
    /// Backward: what the ear into this stage does to its kernel.
    pub transition: Option<Transition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelTrace {
    pub direction: Direction,
    pub base_length: usize,
    pub stages: Vec<StageRecord>,
    /// Every `j` where stages `j` and `j + 1` differ.
    pub flips: Vec<usize>,
    pub dichotomy: Dichotomy,
}

/// Kernel existence at every stage, with the transition each ear induces on
/// the smallest kernel, classified against the two dichotomies: a digraph
/// with a kernel either has kernels at every stage (even base) or gains one
/// at a last flip stage under a blocked restriction; a digraph without one
/// either never has one (odd base) or loses it at a last flip stage under a
/// blocked extension.
pub fn trace_kernels(
    d: &Digraph,
    e: &EarDecomposition,
    direction: Direction,
) -> Result<KernelTrace> {
    e.require_path_ears()?;
    e.require_min_ear_length(2)?;
    let report = validate_with(d, e, EarMode::PathsOnly);
    if let Some(v) = report.violations.first() {
        return Err(Error::precondition(format!("invalid decomposition: {v}")));
    }
    let (canon, _) = e.canonical();
    let stages = e.stages();
    let mut all_kernels = Vec::with_capacity(stages.len());
    for s in &stages {
        all_kernels.push(kernel_oracle(&s.digraph)?.kernels);
    }
    let k = e.ears.len();
    let has: Vec<bool> = all_kernels.iter().map(|ks| !ks.is_empty()).collect();
    let mut records = Vec::with_capacity(k + 1);
    for (j, s) in stages.iter().enumerate() {
        let kernel = all_kernels[j].first();
        let transition = match direction {
            Direction::Forward if j < k => kernel.map(|n| {
                let ear = &canon.ears[j];
                extend_kernel(&s.digraph, ear, n).map(|step| step.transition)
            }),
            Direction::Backward if j > 0 => kernel.map(|n| {
                let ear = &canon.ears[j - 1];
                restrict_kernel(&stages[j - 1].digraph, ear, n).map(|step| step.transition)
            }),
            _ => None,
        }
        .transpose()?;
        records.push(StageRecord {
            stage: j,
            order: s.digraph.n(),
            has_kernel: has[j],
            kernel: kernel
                .map(|n| CertifiedSet::certify(&s.digraph, n.clone(), Role::Kernel, j))
                .transpose()?
                .map(|c| CertifiedSet {
                    members: s.set_to_host(&c.members),
                    ..c
                }),
            transition,
        });
    }
    let flips: Vec<usize> = (0..k).filter(|&j| has[j] != has[j + 1]).collect();
    let base_even = e.base.len() % 2 == 0;
    let dichotomy = match flips.last() {
        None if has[k] && base_even => Dichotomy::AllStagesHaveKernels,
        None if !has[k] && !base_even => Dichotomy::AllStagesLackKernels,
        None => Dichotomy::Mixed {
            reason: format!(
                "no flip, kernels {} but base cycle of length {}",
                if has[k] { "everywhere" } else { "nowhere" },
                e.base.len()
            ),
        },
        Some(&j) => {
            let ear = &canon.ears[j];
            let blocked = |n: &VertexSet| {
                let (s, t) = (n.contains(&ear.start()), n.contains(&ear.end()));
                if has[k] {
                    restriction_condition(s, t, ear.length()).is_err()
                } else {
                    extension_case(s, t, ear.length()).is_err()
                }
            };
            // the kernels at the side of the flip that has them
            let side = if has[k] { j + 1 } else { j };
            match all_kernels[side].iter().find(|n| !blocked(n)) {
                None => Dichotomy::FlipAtStage { stage: j },
                Some(n) => Dichotomy::Mixed {
                    reason: format!(
                        "kernel {:?} of stage {side} crosses ear {j} although the stages differ",
                        stages[side].set_to_host(n)
                    ),
                },
            }
        }
    };
    Ok(KernelTrace {
        direction,
        base_length: e.base.len(),
        stages: records,
        flips,
        dichotomy,
    })
}

/// All kernels of `h` pushed through every applicable extension case for
/// every path ear of the given length between distinct vertices, then
/// restricted back. Returns the number of checks and the first
/// counterexample.
pub fn kernel_sweep(h: &Digraph, lengths: std::ops::RangeInclusive<usize>) -> Result<SweepResult> {
    let kernels = kernel_oracle(h)?.kernels;
    let mut result = SweepResult::default();
    for r in lengths {
        for x0 in 0..h.n() {
            for xr in (0..h.n()).filter(|&v| v != x0) {
                let mut vertices = vec![x0];
                vertices.extend(h.n()..h.n() + r - 1);
                vertices.push(xr);
                let p = Ear::new(vertices)?;
                if r == 1 && h.has_arc(x0, xr) {
                    continue;
                }
                let glued = glue_ear(h, &p)?;
                for n in &kernels {
                    match extend_kernel(h, &p, n) {
                        Ok(step) => match step.kernel {
                            Some(k) => {
                                result.extensions += 1;
                                if !glued.is_kernel(&k.members) {
                                    result
                                        .counterexamples
                                        .push(format!("extend {n:?} across {p:?}"));
                                }
                                let back = restrict_kernel(h, &p, &k.members)?;
                                result.restrictions += 1;
                                match back.kernel {
                                    Some(b) if h.is_kernel(&b.members) => {}
                                    _ => result
                                        .counterexamples
                                        .push(format!("restrict {:?} across {p:?}", k.members)),
                                }
                            }
                            None => result.blocked += 1,
                        },
                        Err(Error::Verification(msg)) => result.counterexamples.push(msg),
                        Err(e) => return Err(e),
                    }
                }
                for n_prime in kernel_oracle(&glued)?.kernels {
                    match restrict_kernel(h, &p, &n_prime) {
                        Ok(step) if step.guaranteed => result.restrictions += 1,
                        Ok(_) => result.blocked += 1,
                        Err(Error::Verification(msg)) => result.counterexamples.push(msg),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Ok(result)
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SweepResult {
    pub extensions: u64,
    pub restrictions: u64,
    pub blocked: u64,
    pub counterexamples: Vec<String>,
}

/// Local copy of an ear from `(x0, xr)` with fresh interior after `n`.
pub fn fresh_ear(n: usize, x0: Vertex, xr: Vertex, r: usize) -> Result<Ear> {
    let mut v = vec![x0];
    v.extend(n..n + r - 1);
    v.push(xr);
    Ear::new(v)
}
