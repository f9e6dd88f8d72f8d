//! Shared fixtures for the benchmark targets.

use ldiag_core::{enumerate_by_weight, WeightMatrix};

/// Every diagram of weight at most `w`, in canonical order.
pub fn deck_up_to(w: u64) -> Vec<WeightMatrix> {
    (0..=w)
        .flat_map(|n| enumerate_by_weight(n).expect("weight under the default bound"))
        .collect()
}

/// A dense three-column diagram used as the heavy product operand.
pub fn dense_operand() -> WeightMatrix {
    "1 1 0; 0 1 1".parse().expect("well-formed matrix")
}
