//! Coefficient-set analytics and closed-form predictions.

mod atlas;
mod heights;
mod modular;
mod predict;

pub use atlas::{atlas_row, build_atlas, AtlasReport, AtlasRow};
pub use heights::{
    balanced_c, big_b, big_b_minus, big_b_plus, big_b_prime, count_flat_divisors, survey,
    HeightSummary,
};
pub use modular::{
    decker_sums, f43_two_positions, mod_inverse_reciprocity, reciprocity_parity, DeckerSums,
    F43Positions,
};
pub use predict::{predict_p2q, predict_pq, predict_prime_power, PQParams, Prediction};

use num_bigint::BigInt;

use crate::error::Result;
use crate::polyring::{CoeffSet, IntPoly};

/// Flatness and convexity of a coefficient set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexityVerdict {
    /// `C(f) ⊆ [-1, 1]`.
    pub is_flat: bool,
    /// `C_0(f)` is a run of consecutive integers.
    pub is_convex: bool,
    /// `C(f)` itself is a run of consecutive integers.
    pub is_strongly_convex: bool,
    /// Integers in `[min C, max C]` that are not coefficients.
    pub missing: Vec<BigInt>,
}

impl ConvexityVerdict {
    pub fn of_set(set: &CoeffSet) -> Self {
        ConvexityVerdict {
            is_flat: set.is_flat(),
            is_convex: set.clone().with_zero().is_interval(),
            is_strongly_convex: set.is_interval(),
            missing: set.missing(),
        }
    }
}

pub fn classify(f: &IntPoly) -> Result<ConvexityVerdict> {
    Ok(ConvexityVerdict::of_set(&f.coeff_set()?))
}
