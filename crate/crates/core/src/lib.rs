//! Ear decompositions of strong digraphs and the certificates that long ears
//! make constructive: Seymour vertices, longest-path transversals, small
//! quasi-kernels, kernel propagation, proper 3-colourings and oriented
//! colourings into a fixed 6-vertex tournament. Every construction is
//! checked against an independent brute-force oracle.

pub mod cert;
pub mod coloring;
pub mod conjectures;
pub mod digraph;
pub mod ear;
pub mod error;
pub mod io;
pub mod kernels;
pub mod oracles;
pub mod oriented;

pub use cert::{CertifiedSet, MappingKind, Role, Target, VertexMapping};
pub use coloring::{dichromatic_bounds, proper_3_coloring, DichromaticBounds};
pub use conjectures::{
    le2_quasi_kernel_obstruction, longest_path_transversal, search_le2_obstruction, seymour_vertex,
    small_quasi_kernel, ObstructionInstance, ObstructionReport, SmallQuasiKernel, Transversal,
};
pub use digraph::{Digraph, NeighborhoodReport, SetPredicates, Vertex, VertexSet};
pub use ear::{
    find_ear_decomposition, find_ear_decomposition_with, find_le_decomposition, generate_random_le,
    glue_ear, validate_decomposition, Ear, EarDecomposition, EarMode, LeOutcome, LeParams, Stage,
    ValidationReport,
};
pub use error::{Error, Result};
pub use kernels::{
    extend_kernel, kernel_sweep, restrict_kernel, trace_kernels, Dichotomy, Direction, KernelStep,
    KernelTrace, SweepResult, Transition,
};
pub use oracles::{
    chromatic_oracles, kernel_oracle, longest_path_oracle, oriented_chromatic_oracle,
    quasi_kernel_oracle, OracleReport,
};
pub use oriented::Tournament;
