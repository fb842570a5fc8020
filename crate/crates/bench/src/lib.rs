//! Instances shared by the benchmarks.

/// `(p, m)` pairs spanning the families, smallest first.
pub const GRAPH_INSTANCES: [(u64, u64); 5] = [(2, 16), (3, 15), (2, 30), (3, 30), (3, 105)];

/// Instances whose three domination numbers finish in well under a second.
pub const SOLVE_INSTANCES: [(u64, u64); 4] = [(3, 15), (2, 18), (3, 18), (2, 30)];
