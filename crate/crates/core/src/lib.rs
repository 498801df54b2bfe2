//! Exact computations in the Weyl vertex algebra under conformal flow: Fock-space
//! states, vertex-operator modes, the μ-plane classification and truncated Zhu
//! algebras.

#![allow(clippy::result_large_err)]

pub mod exactmath;
pub mod flow;
pub mod fock;
pub mod grading;
pub mod modes;
pub mod tensor;
pub mod zhu;
