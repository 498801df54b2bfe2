//! Weights, the V^r split, vacuum-space detection and the μ-plane classification.

mod map;
mod omega;
mod region;

pub use map::{region_csv, tag_color, AxisRange, GridSpec, RegionMap};
pub use omega::{
    degree, grading_lemma_scan, omega_scan_basis, omega_test, omega_test_over, r_value, vr_split, GradingError,
    LemmaCounterexample, LemmaScanReport, OmegaOutcome, VrSplit,
};
pub use region::{classify, Clause, OmegaDescription, RegionClass, RegionTag, Subcase};
