//! Fock-space states of the rank-one Weyl vertex algebra.

mod basis;
mod monomial;
mod parse;
mod state;

pub use basis::{basis_by_level, basis_up_to, Basis, FockError, ModeWindow, TruncConfig, ZeroDirection};
pub use monomial::Monomial;
pub use parse::{parse_state, print_state};
pub use state::{State, TermJson};

use crate::exactmath::WeightExpr;

pub fn weight(m: &Monomial) -> WeightExpr {
    m.weight()
}
