//! Worlds with closed-form colouring and mixing matrices.

pub mod case1;
pub mod keys;
pub mod signed;

pub use case1::{alpha, case1_diagram, case1_entries, case1_traces, case1_world, minimal, Minimal};
pub use keys::{keys_counts, keys_direct, KeyCounts};
pub use signed::{
    case23_f, case2_traces, case3_traces, dea, y_partition, DEATriple, SignCode, Variant,
    WordEulerTable, YPartition,
};
