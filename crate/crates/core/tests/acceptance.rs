//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::HashSet;
use std::panic;
use std::time::{Duration, Instant};

use earlab_core::oriented::tournament::permutations;
use earlab_core::oriented::walks::is_walk;
use earlab_core::oriented::{
    build_g, gi_lower_bound_check, oriented_coloring_le3, search_tight_le3, tournament_t,
    uniqueness_census, REFERENCE_WALKS,
};
use earlab_core::*;

const CENSUS_LIMIT: Duration = Duration::from_secs(10);
const LE3_COLOURING_LIMIT: Duration = Duration::from_secs(1);
const TIGHT_SEARCH_LIMIT: Duration = Duration::from_secs(300);
const TIGHT_SEARCH_BUDGET: u64 = 2_000_000;
const SWEEP_LIMIT: Duration = Duration::from_secs(120);
const EXHAUSTIVE_HOST_ORDER: usize = 5;
const STAGE_HOST_ORDER: usize = 8;
const QUASI_KERNEL_ORACLE_ORDER: usize = 14;
const TRANSVERSAL_ORDER: usize = 12;
const TRACE_ORDER: usize = 20;
const CHROMATIC_ORACLE_ORDER: usize = 10;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn generate(p: LeParams) -> (Digraph, EarDecomposition) {
    generate_random_le(&p).expect("generator parameters are feasible")
}

fn le3_instance(seed: u64) -> (Digraph, EarDecomposition) {
    generate(LeParams {
        base_length: 3 + seed as usize % 6,
        ear_count: seed as usize % 8,
        min_ear_length: 3,
        max_ear_length: 8,
        cycle_ear_probability: 0.25,
        asymmetric: true,
        seed,
    })
}

fn census() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let c = pool.install(uniqueness_census);
    let took = start.elapsed();
    ensure(
        c.labeled_total == 32768,
        format!("enumerated {}", c.labeled_total),
    )?;
    ensure(
        c.iso_class_count == 1,
        format!("{} classes", c.iso_class_count),
    )?;
    let w = c.witness.ok_or("no survivor")?;
    ensure(
        w.is_isomorphic(&tournament_t()),
        "survivor is not isomorphic to T",
    )?;
    ensure(took < CENSUS_LIMIT, format!("took {took:?}"))?;
    Ok(format!(
        "{} labelled survivors, 1 class isomorphic to T, single thread {took:?}",
        c.labeled_count
    ))
}

fn table_walks() -> Outcome {
    let t = tournament_t();
    let bad: Vec<_> = REFERENCE_WALKS.iter().filter(|w| !is_walk(&t, w)).collect();
    ensure(REFERENCE_WALKS.len() == 90, "expected 90 walks")?;
    ensure(bad.is_empty(), format!("invalid walks {bad:?}"))?;
    Ok("90/90 walks follow arcs of T".into())
}

fn le3_oriented_colouring() -> Outcome {
    let mut max_n = 0;
    let mut slowest = Duration::ZERO;
    for seed in 0..200 {
        let (d, e) = le3_instance(seed);
        ensure(d.n() <= 60, format!("seed {seed}: n = {}", d.n()))?;
        let start = Instant::now();
        let phi = oriented_coloring_le3(&d, &e).map_err(|err| format!("seed {seed}: {err}"))?;
        let took = start.elapsed();
        ensure(phi.check(&d), format!("seed {seed}: not a homomorphism"))?;
        ensure(
            took < LE3_COLOURING_LIMIT,
            format!("seed {seed}: took {took:?}"),
        )?;
        max_n = max_n.max(d.n());
        slowest = slowest.max(took);
    }
    Ok(format!(
        "200/200 verified, n up to {max_n}, slowest {slowest:?}"
    ))
}

fn tight_instance() -> Outcome {
    let start = Instant::now();
    let found = search_tight_le3(4, true, TIGHT_SEARCH_BUDGET)
        .map_err(|e| e.to_string())?
        .ok_or("no instance within budget")?;
    let took = start.elapsed();
    ensure(
        found.digraph.n() == 11,
        format!("order {}", found.digraph.n()),
    )?;
    ensure(
        found
            .decomposition
            .ears
            .iter()
            .all(|e| e.length() == 3 && !e.is_cycle()),
        "ear shape",
    )?;
    ensure(
        found.oracle.value == Some(6),
        format!("oracle value {:?}", found.oracle.value),
    )?;
    ensure(took < TIGHT_SEARCH_LIMIT, format!("took {took:?}"))?;
    let ears: Vec<_> = found
        .decomposition
        .ears
        .iter()
        .map(|e| e.vertices().to_vec())
        .collect();
    Ok(format!(
        "ears {ears:?}, oriented chromatic number 6, {} candidates, {took:?}",
        found.candidates_tested
    ))
}

fn le3_quasi_kernels() -> Outcome {
    let mut cross_checked = 0;
    for seed in 0..200 {
        let (d, e) = generate(LeParams {
            base_length: 3 + seed as usize % 6,
            ear_count: seed as usize % 7,
            min_ear_length: 3,
            max_ear_length: 6,
            cycle_ear_probability: 0.2,
            asymmetric: false,
            seed,
        });
        let q = small_quasi_kernel(&d, &e).map_err(|err| format!("seed {seed}: {err}"))?;
        let members = &q.certificate.members;
        ensure(
            d.is_independent(members),
            format!("seed {seed}: not independent"),
        )?;
        ensure(
            d.is_quasi_kernel(members),
            format!("seed {seed}: not quasi-absorbent"),
        )?;
        ensure(
            2 * members.len() <= d.n(),
            format!("seed {seed}: |Q| = {}", members.len()),
        )?;
        if d.n() <= QUASI_KERNEL_ORACLE_ORDER {
            let oracle = quasi_kernel_oracle(&d).map_err(|e| e.to_string())?;
            ensure(
                oracle.quasi_kernels.contains(members),
                format!("seed {seed}: oracle disagrees"),
            )?;
            ensure(
                oracle.small_exists,
                format!("seed {seed}: oracle finds no small quasi-kernel"),
            )?;
            cross_checked += 1;
        }
    }
    ensure(cross_checked > 0, "no instance small enough for the oracle")?;
    Ok(format!(
        "200/200 small quasi-kernels, {cross_checked} cross-checked by the oracle"
    ))
}

fn le2_obstruction() -> Outcome {
    let o = search_le2_obstruction(8)
        .map_err(|e| e.to_string())?
        .ok_or("none found")?;
    ensure(o.digraph.n() <= 8, format!("order {}", o.digraph.n()))?;
    ensure(!o.report.any_extension_works, "an extension works")?;
    Ok(format!(
        "n = {}, ears {:?}, quasi-kernel {:?} has no single-vertex extension",
        o.digraph.n(),
        o.decomposition
            .ears
            .iter()
            .map(|e| e.vertices().to_vec())
            .collect::<Vec<_>>(),
        o.quasi_kernel.members
    ))
}

fn seymour() -> Outcome {
    for seed in 0..500 {
        let (d, e) = generate(LeParams {
            base_length: 3 + seed as usize % 6,
            ear_count: seed as usize % 9,
            min_ear_length: 2,
            max_ear_length: 6,
            cycle_ear_probability: 0.2,
            asymmetric: true,
            seed,
        });
        let (v, report) = seymour_vertex(&d, &e).map_err(|err| format!("seed {seed}: {err}"))?;
        let fresh = d.neighborhoods(v).map_err(|e| e.to_string())?;
        ensure(
            fresh.second_out.len() >= fresh.first_out.len() && report.is_seymour(),
            format!("seed {seed}: vertex {v} fails"),
        )?;
    }
    Ok("500/500 returned vertices satisfy |N++| >= |N+|".into())
}

fn transversals() -> Outcome {
    let mut checked = 0;
    for seed in 0..400 {
        let (d, e) = generate(LeParams {
            base_length: 2 + seed as usize % 5,
            ear_count: seed as usize % 5,
            min_ear_length: 2,
            max_ear_length: 3,
            cycle_ear_probability: 0.2,
            asymmetric: false,
            seed,
        });
        if d.n() > TRANSVERSAL_ORDER {
            continue;
        }
        let t = longest_path_transversal(&d, &e).map_err(|err| format!("seed {seed}: {err}"))?;
        let set = &t.certificate.members;
        ensure(
            d.is_independent(set),
            format!("seed {seed}: not independent"),
        )?;
        let oracle = longest_path_oracle(&d).map_err(|e| e.to_string())?;
        let missed = oracle
            .paths
            .iter()
            .find(|p| !p.iter().any(|v| set.contains(v)));
        ensure(missed.is_none(), format!("seed {seed}: misses {missed:?}"))?;
        checked += 1;
    }
    Ok(format!(
        "{checked}/{checked} instances with n <= {TRANSVERSAL_ORDER}"
    ))
}

/// Adjacency code with bit `u * n + v` for the arc `(u, v)`.
fn code_of(d: &Digraph, perm: &[Vertex]) -> u32 {
    let n = d.n();
    d.arcs()
        .fold(0, |c, (u, v)| c | 1 << (perm[u] * n + perm[v]))
}

/// One representative per isomorphism class of strong nonseparable
/// digraphs of order `n`.
fn strong_nonseparable_classes(n: usize) -> Vec<Digraph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let arcs = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a);
        let d = Digraph::from_arcs(n, arcs).unwrap();
        if !d.is_strong() || !d.is_nonseparable() {
            continue;
        }
        let canon = perms.iter().map(|p| code_of(&d, p)).min().unwrap();
        if seen.insert(canon) {
            out.push(d);
        }
    }
    out
}

fn sweep_hosts() -> Outcome {
    let start = Instant::now();
    let mut hosts = Vec::new();
    for n in 2..=EXHAUSTIVE_HOST_ORDER {
        hosts.extend(strong_nonseparable_classes(n));
    }
    let exhaustive = hosts.len();
    let mut seen: HashSet<(usize, Vec<(Vertex, Vertex)>)> = HashSet::new();
    for seed in 0..300 {
        let (_, e) = generate(LeParams {
            base_length: 2 + seed as usize % 7,
            ear_count: 1 + seed as usize % 4,
            min_ear_length: 1,
            max_ear_length: 4,
            cycle_ear_probability: 0.0,
            asymmetric: false,
            seed,
        });
        for stage in e.stages() {
            let h = stage.digraph;
            if h.n() > EXHAUSTIVE_HOST_ORDER
                && h.n() <= STAGE_HOST_ORDER
                && seen.insert((h.n(), h.arcs().collect()))
            {
                hosts.push(h);
            }
        }
    }
    let mut total = SweepResult::default();
    for h in &hosts {
        let r = kernel_sweep(h, 2..=5).map_err(|e| e.to_string())?;
        total.extensions += r.extensions;
        total.restrictions += r.restrictions;
        total.blocked += r.blocked;
        total.counterexamples.extend(r.counterexamples);
    }
    let took = start.elapsed();
    ensure(
        total.counterexamples.is_empty(),
        format!("first counterexample {:?}", total.counterexamples.first()),
    )?;
    ensure(took < SWEEP_LIMIT, format!("took {took:?}"))?;
    Ok(format!(
        "{} hosts ({exhaustive} exhaustive classes n <= {EXHAUSTIVE_HOST_ORDER}, rest generated stages n <= {STAGE_HOST_ORDER}), \
         {} extensions, {} restrictions, {} blocked, 0 counterexamples, {took:?}",
        hosts.len(),
        total.extensions,
        total.restrictions,
        total.blocked
    ))
}

fn dichotomy() -> Outcome {
    let mut counts = [0usize; 3];
    for seed in 0..300 {
        let (d, e) = generate(LeParams {
            base_length: 2 + seed as usize % 7,
            ear_count: seed as usize % 6,
            min_ear_length: 2,
            max_ear_length: 4,
            cycle_ear_probability: 0.0,
            asymmetric: false,
            seed,
        });
        if d.n() > TRACE_ORDER {
            continue;
        }
        for dir in [Direction::Forward, Direction::Backward] {
            let t = trace_kernels(&d, &e, dir).map_err(|err| format!("seed {seed}: {err}"))?;
            let even = t.base_length % 2 == 0;
            match t.dichotomy {
                Dichotomy::AllStagesHaveKernels => {
                    ensure(
                        even,
                        format!("seed {seed}: kernels everywhere on an odd base"),
                    )?;
                    counts[0] += 1;
                }
                Dichotomy::AllStagesLackKernels => {
                    ensure(!even, format!("seed {seed}: no kernels on an even base"))?;
                    counts[1] += 1;
                }
                Dichotomy::FlipAtStage { .. } => counts[2] += 1,
                Dichotomy::Mixed { reason } => return Err(format!("seed {seed}: {reason}")),
            }
        }
    }
    Ok(format!(
        "{} traces: {} all kernels, {} no kernels, {} flips, none mixed",
        counts.iter().sum::<usize>(),
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn three_colouring() -> Outcome {
    let mut oracle_checked = 0;
    for seed in 0..500 {
        let (d, e) = generate(LeParams {
            base_length: 2 + seed as usize % 7,
            ear_count: seed as usize % 7,
            min_ear_length: 2,
            max_ear_length: 5,
            cycle_ear_probability: 0.2,
            asymmetric: false,
            seed,
        });
        let c = proper_3_coloring(&d, &e).map_err(|err| format!("seed {seed}: {err}"))?;
        ensure(
            c.check(&d) && c.values_used() <= 3,
            format!("seed {seed}: bad colouring"),
        )?;
        if d.n() <= CHROMATIC_ORACLE_ORDER {
            let r = chromatic_oracles(&d).map_err(|e| e.to_string())?;
            ensure(
                (2..=3).contains(&r.chromatic_number),
                format!("seed {seed}: chi = {}", r.chromatic_number),
            )?;
            ensure(
                (2..=3).contains(&r.dichromatic_number),
                format!("seed {seed}: dichromatic = {}", r.dichromatic_number),
            )?;
            oracle_checked += 1;
        }
    }
    Ok(format!(
        "500/500 colourings with at most 3 colours, {oracle_checked} confirmed by the oracle"
    ))
}

fn g_family() -> Outcome {
    for (i, n, m) in [(1, 3, 3), (2, 9, 15), (3, 81, 159)] {
        let g = build_g(i).map_err(|e| e.to_string())?;
        ensure(
            g.n() == n && g.arc_count() == m && m == 2 * n - 3,
            format!("G_{i}: {} vertices, {} arcs", g.n(), g.arc_count()),
        )?;
    }
    let mut bound = 0;
    for i in [2, 3] {
        let c = gi_lower_bound_check(i).map_err(|e| e.to_string())?;
        ensure(c.holds, format!("check fails for G_{i}"))?;
        bound = c.forced_lower_bound;
    }
    ensure(bound >= 9, format!("bound {bound}"))?;
    Ok(format!(
        "arc counts 3, 15, 159; oriented chromatic number of G_3 at least {bound}"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("tournament uniqueness census", census),
        ("reference walks", table_walks),
        ("oriented colouring of LE3", le3_oriented_colouring),
        ("tight 11-vertex instance", tight_instance),
        ("small quasi-kernels of LE3", le3_quasi_kernels),
        ("LE2 quasi-kernel obstruction", le2_obstruction),
        ("Seymour vertex of LE2", seymour),
        ("longest-path transversal", transversals),
        ("kernel extension and restriction sweep", sweep_hosts),
        ("kernel dichotomy traces", dichotomy),
        ("proper 3-colouring of LE2", three_colouring),
        ("G_i family", g_family),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
