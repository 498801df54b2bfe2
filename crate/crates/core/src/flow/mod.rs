//! The conformal family ω_μ, spectral flow and the isomorphism exchanging μ and 1 − μ.

use serde::Serialize;

use crate::exactmath::GaussRat;
use crate::fock::{Monomial, State};
use crate::modes::{mode_of, GenMode, ModeKind};

pub use crate::modes::central_charge;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConformalVector {
    pub mu: GaussRat,
    pub state: State,
    pub central_charge: GaussRat,
}

impl ConformalVector {
    pub fn new(mu: GaussRat) -> Self {
        let state = crate::modes::omega_state(&mu);
        let central_charge = central_charge(&mu);
        ConformalVector { mu, state, central_charge }
    }
}

/// The image of one monomial under `F = φ₁∘ρ₁`, as a sign and a monomial.
pub fn flow_iso_monomial(m: &Monomial) -> (i64, Monomial) {
    let image = Monomial::new(m.astar_modes().to_vec(), m.a_modes().to_vec());
    let sign = if m.t().is_multiple_of(2) { 1 } else { -1 };
    (sign, image)
}

/// `a(-m-1)…a*(-n)…1 ↦ (-1)^l a(-n-1)…a*(-m)…1`, extended linearly.
pub fn flow_iso(s: &State) -> State {
    let mut out = State::zero();
    for (m, c) in s.terms() {
        let (sign, image) = flow_iso_monomial(m);
        if sign == 1 {
            out.add_term(image, c);
        } else {
            out.add_term(image, &-c);
        }
    }
    out
}

/// `F(u_n v) = F(u)_n F(v)`.
pub fn flow_hom_check(u: &State, v: &State, n: i64) -> bool {
    flow_iso(&mode_of(u, n, v)) == mode_of(&flow_iso(u), n, &flow_iso(v))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlowError {
    #[error("the scaling automorphism needs t != 0")]
    ZeroScale,
}

/// `ρ_s`: `a(n) ↦ a(n+s)`, `a*(n) ↦ a*(n-s)`.
pub fn rho(s: i64, mode: GenMode) -> GenMode {
    match mode.kind {
        ModeKind::A => GenMode::a(mode.index + s),
        ModeKind::AStar => GenMode::astar(mode.index - s),
    }
}

/// `φ_t`: `a(n) ↦ t a*(n)`, `a*(n) ↦ -t⁻¹ a(n)`.
pub fn phi(t: &GaussRat, mode: GenMode) -> Result<(GaussRat, GenMode), FlowError> {
    let inv = t.inv().ok_or(FlowError::ZeroScale)?;
    Ok(match mode.kind {
        ModeKind::A => (t.clone(), GenMode::astar(mode.index)),
        ModeKind::AStar => (-inv, GenMode::a(mode.index)),
    })
}

/// Applies `φ_t∘ρ_s` factorwise to a mode word.
pub fn spectral_flow(s: i64, t: &GaussRat, word: &[GenMode]) -> Result<Vec<(GaussRat, GenMode)>, FlowError> {
    word.iter().map(|&g| phi(t, rho(s, g))).collect()
}

/// Checks `[σ(x), σ(y)] = σ([x, y])` for `σ = ρ_s` and `σ = φ_t` on all generator
/// modes with indices in `lo..=hi`.
pub fn brackets_preserved(s: i64, t: &GaussRat, lo: i64, hi: i64) -> Result<bool, FlowError> {
    let mut gens = Vec::new();
    for n in lo..=hi {
        gens.push(GenMode::a(n));
        gens.push(GenMode::astar(n));
    }
    for x in &gens {
        for y in &gens {
            let bracket = x.bracket(y);
            if rho(s, *x).bracket(&rho(s, *y)) != bracket {
                return Ok(false);
            }
            let (cx, gx) = phi(t, *x)?;
            let (cy, gy) = phi(t, *y)?;
            let lhs = &(&cx * &cy) * &GaussRat::from_int(gx.bracket(&gy));
            if lhs != GaussRat::from_int(bracket) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
