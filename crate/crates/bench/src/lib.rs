//! Seeded instances shared by the benchmarks.

use earlab_core::{generate_random_le, Digraph, EarDecomposition, LeParams};

/// A decomposed instance with `ears` ears of length `min_len ..= min_len + 3`.
pub fn instance(min_len: usize, ears: usize, seed: u64) -> (Digraph, EarDecomposition) {
    generate_random_le(&LeParams {
        base_length: 5,
        ear_count: ears,
        min_ear_length: min_len,
        max_ear_length: min_len + 3,
        cycle_ear_probability: 0.0,
        asymmetric: true,
        seed,
    })
    .expect("feasible parameters")
}
