//! Vertex-operator modes on the Fock space.

mod engine;
mod expansion;
mod gen;
mod ops;

pub use engine::{mode_of, monomial_mode, state_truncation_bound, truncation_bound, ModeEngine, TruncationOverflow};
pub use expansion::{expansion_mode_of, ModeExpansion};
pub use gen::{act_gen, act_gen_monomial, act_word, GenMode, ModeKind};
pub use ops::{
    beta_mode, beta_state, central_charge, commutator_check, commutator_sides, d_op, omega_state,
    virasoro_bracket_sides, virasoro_mode, virasoro_mode_exact,
};
