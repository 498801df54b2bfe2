//! Zhu products, the captured O(V) and C(V) spans, and truncated A(V) certificates.
//!
//! Captured relations are a subset of the true ones, so every dimension reported here
//! is an upper bound for the corresponding piece of A(V).

mod checks;
mod context;
mod products;
mod quotient;
mod report;

pub use checks::{
    budget_profile, d_plus_l, filtration_containment, gr_commutativity, graded_dimension, kernel_containment,
    monotonicity, prop_iii, prop_v, star_gate, weyl_relation, CheckOutcome,
};
pub use context::{ZhuContext, ZhuError};
pub use products::{circ_with, generalized_circ, residue_sum, star_with, WeightInfo};
pub use quotient::{zhu_quotient, LevelDim, StarEntry, ZhuQuotient};
pub use report::{run_checks, zhu_report, BudgetStep, CheckLevel, ZhuReport};
