use earlab_core::ear::validate_with;
use earlab_core::io::digraph_to_json;
use earlab_core::kernels::{extend_kernel, restrict_kernel};
use earlab_core::oracles::{
    chromatic_oracles, kernel_oracle, longest_path_oracle, oriented_chromatic_oracle,
    quasi_kernel_oracle, OracleReport,
};
use earlab_core::oriented::walks::is_walk;
use earlab_core::oriented::{
    build_g_decomposed, oriented_coloring_le3, search_tight_le3, t_catalog, tournament_t,
    uniqueness_census, verify_closed_walk_property, verify_walk_property, REFERENCE_WALKS,
};
use earlab_core::{
    dichromatic_bounds, find_le_decomposition, generate_random_le, longest_path_transversal,
    seymour_vertex, small_quasi_kernel, trace_kernels, Digraph, Ear, EarDecomposition, EarMode,
    LeOutcome, LeParams, VertexSet,
};
use serde_json::json;

use crate::input::{load_digraph, parse_vertices, resolve_decomposition, DecompositionRequest};
use crate::output::{CliError, Reply, Status};
use crate::{Command, GenArgs, Input, KernelCommand, KernelStepArgs, OracleKind};

fn mode(paths_only: bool) -> EarMode {
    if paths_only {
        EarMode::PathsOnly
    } else {
        EarMode::AllowCycles
    }
}

/// Loads the digraph of `input` with a decomposition whose ears are all at
/// least `min_len` long.
fn decomposed(
    input: &Input,
    min_len: usize,
    mode: EarMode,
) -> Result<(Digraph, EarDecomposition), CliError> {
    let (d, embedded) = load_digraph(&input.input)?;
    let e = resolve_decomposition(
        &d,
        DecompositionRequest {
            file: input.decomposition.as_deref(),
            embedded,
            min_len,
            mode,
            budget: input.budget,
        },
    )?;
    Ok((d, e))
}

pub fn run(command: Command) -> Result<Reply, CliError> {
    match command {
        Command::Decompose {
            input,
            min_ear_length,
            paths_only,
            budget,
        } => decompose(&input, min_ear_length, mode(paths_only), budget),
        Command::Classify {
            input,
            paths_only,
            budget,
        } => classify(&input, mode(paths_only), budget),
        Command::Seymour(input) => {
            let (d, e) = decomposed(&input, 2, EarMode::AllowCycles)?;
            let (vertex, neighborhoods) = seymour_vertex(&d, &e)?;
            Reply::ok(json!({
                "vertex": vertex,
                "label": d.label(vertex),
                "neighborhoods": neighborhoods,
                "decomposition": e,
            }))
        }
        Command::Transversal(input) => {
            let (d, e) = decomposed(&input, 2, EarMode::AllowCycles)?;
            let t = longest_path_transversal(&d, &e)?;
            Reply::ok(json!({ "transversal": t, "decomposition": e }))
        }
        Command::QuasiKernel { input, exact } => {
            let (d, e) = decomposed(&input, 3, EarMode::AllowCycles)?;
            let q = small_quasi_kernel(&d, &e)?;
            let oracle = if exact {
                Some(OracleReport::from(quasi_kernel_oracle(&d)?))
            } else {
                None
            };
            Reply::ok(json!({ "quasi_kernel": q, "decomposition": e, "oracle": oracle }))
        }
        Command::Kernel { command } => kernel(command),
        Command::Color(input) => {
            let (d, e) = decomposed(&input, 2, EarMode::AllowCycles)?;
            let bounds = dichromatic_bounds(&d, &e)?;
            Reply::ok(json!({ "bounds": bounds, "decomposition": e }))
        }
        Command::Oriented { input, exact, kmax } => {
            let (d, e) = decomposed(&input, 3, EarMode::AllowCycles)?;
            let phi = oriented_coloring_le3(&d, &e)?;
            let oracle = if exact {
                Some(OracleReport::from(oriented_chromatic_oracle(&d, kmax)?))
            } else {
                None
            };
            Reply::ok(json!({
                "mapping": phi,
                "colours_used": phi.values_used(),
                "decomposition": e,
                "oracle": oracle,
            }))
        }
        Command::VerifyT => verify_t(),
        Command::Census => {
            let c = uniqueness_census();
            Reply::check(c.iso_class_count == 1, c)
        }
        Command::Gen(args) => generate(args),
        Command::Oracle { kind, input, kmax } => oracle(kind, &input, kmax),
    }
}

fn decompose(input: &str, min_len: usize, mode: EarMode, budget: u64) -> Result<Reply, CliError> {
    let (d, _) = load_digraph(input)?;
    match find_le_decomposition(&d, min_len, budget, mode)? {
        LeOutcome::Found(e) => {
            let validation = validate_with(&d, &e, mode);
            Reply::check(
                validation.is_ok(),
                json!({
                    "found": true,
                    "min_ear_length": min_len,
                    "stage_sizes": e.stage_sizes(),
                    "decomposition": e,
                    "validation": validation,
                }),
            )
        }
        LeOutcome::ProvablyNone => Reply::with(
            Status::PropertyFailed,
            json!({ "found": false, "min_ear_length": min_len, "provably_none": true }),
        ),
    }
}

fn classify(input: &str, mode: EarMode, budget: u64) -> Result<Reply, CliError> {
    let (d, _) = load_digraph(input)?;
    let strong = d.n() > 0 && d.is_strong();
    let mut membership = Vec::new();
    let mut largest = None;
    if strong {
        for i in 1..=d.n() {
            match find_le_decomposition(&d, i, budget, mode)? {
                LeOutcome::Found(e) => {
                    largest = Some(i);
                    membership.push(json!({ "i": i, "member": true, "decomposition": e }));
                }
                LeOutcome::ProvablyNone => {
                    membership.push(json!({ "i": i, "member": false }));
                    break;
                }
            }
        }
    }
    Reply::ok(json!({
        "n": d.n(),
        "arc_count": d.arc_count(),
        "strong": strong,
        "nonseparable": d.is_nonseparable(),
        "asymmetric": d.is_asymmetric(),
        "mode": mode,
        "largest_i": largest,
        "membership": membership,
    }))
}

fn kernel(command: KernelCommand) -> Result<Reply, CliError> {
    match command {
        KernelCommand::Extend(args) => {
            let (h, ear, set) = kernel_step_inputs(&args, false)?;
            Reply::ok(json!({ "step": extend_kernel(&h, &ear, &set)?, "ear": ear }))
        }
        KernelCommand::Restrict(args) => {
            let (h, ear, set) = kernel_step_inputs(&args, true)?;
            Reply::ok(json!({ "step": restrict_kernel(&h, &ear, &set)?, "ear": ear }))
        }
        KernelCommand::Trace { input, direction } => {
            let (d, e) = decomposed(&input, 2, EarMode::PathsOnly)?;
            let trace = trace_kernels(&d, &e, direction.into())?;
            Reply::ok(json!({ "trace": trace, "decomposition": e }))
        }
    }
}

/// The stage, the ear and the kernel to carry. Without `--set` the smallest
/// kernel of the stage (or of the glued digraph when restricting) is used.
fn kernel_step_inputs(
    args: &KernelStepArgs,
    glued: bool,
) -> Result<(Digraph, Ear, VertexSet), CliError> {
    let (h, _) = load_digraph(&args.input)?;
    let ear = Ear::new(parse_vertices(&args.ear)?)?;
    let set = match &args.set {
        Some(s) => parse_vertices(s)?.into_iter().collect(),
        None => {
            let host = if glued {
                earlab_core::glue_ear(&h, &ear)?
            } else {
                h.clone()
            };
            kernel_oracle(&host)?.witness.ok_or_else(|| {
                CliError::new(Status::PropertyFailed, "the digraph has no kernel to carry")
            })?
        }
    };
    Ok((h, ear, set))
}

fn verify_t() -> Result<Reply, CliError> {
    let t = tournament_t();
    let walks_valid = REFERENCE_WALKS.iter().filter(|w| is_walk(&t, w)).count();
    let walk_property = verify_walk_property(&t);
    let closed = verify_closed_walk_property(&t);
    let census = uniqueness_census();
    let holds = walks_valid == REFERENCE_WALKS.len()
        && walk_property
        && census.iso_class_count == 1
        && census.witness.as_ref().is_some_and(|w| w.is_isomorphic(&t));
    Reply::check(
        holds,
        json!({
            "tournament": t,
            "arcs": t.arcs(),
            "out_degrees": t.out_degrees(),
            "reference_walks": REFERENCE_WALKS.len(),
            "reference_walks_valid": walks_valid,
            "walk_property": walk_property,
            "closed_walk_property": closed,
            "iso_class_count": census.iso_class_count,
            "labeled_count": census.labeled_count,
            "witness": census.witness,
            "isomorphism_to_t": census.isomorphism_to_t,
            "automorphism_count": census.automorphism_count,
            "catalog": t_catalog(),
        }),
    )
}

fn generate(args: GenArgs) -> Result<Reply, CliError> {
    let (d, e) = if let Some(i) = args.family.gi {
        build_g_decomposed(i)?
    } else if args.family.tight {
        let found = search_tight_le3(4, true, args.budget)?.ok_or_else(|| {
            CliError::new(Status::CapExceeded, "no instance found within the budget")
        })?;
        (found.digraph, found.decomposition)
    } else {
        let min = args.family.le.expect("clap requires one family");
        generate_random_le(&LeParams {
            base_length: args.base_length,
            ear_count: args.ears,
            min_ear_length: min,
            max_ear_length: args.max_ear_length.unwrap_or(min + 2),
            cycle_ear_probability: args.cycle_ear_probability,
            asymmetric: args.asymmetric,
            seed: args.seed,
        })?
    };
    Reply::ok(json!({
        "n": d.n(),
        "arc_count": d.arc_count(),
        "digraph": digraph_to_json(&d),
        "decomposition": e,
    }))
}

fn oracle(kind: OracleKind, input: &str, kmax: usize) -> Result<Reply, CliError> {
    let (d, _) = load_digraph(input)?;
    let report: OracleReport = match kind {
        OracleKind::Kernel => kernel_oracle(&d)?.into(),
        OracleKind::QuasiKernel => quasi_kernel_oracle(&d)?.into(),
        OracleKind::Chromatic => chromatic_oracles(&d)?.into(),
        OracleKind::Oriented => oriented_chromatic_oracle(&d, kmax)?.into(),
        OracleKind::LongestPath => longest_path_oracle(&d)?.into(),
    };
    Reply::ok(json!({ "n": d.n(), "arc_count": d.arc_count(), "report": report }))
}
