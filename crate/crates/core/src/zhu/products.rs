use crate::exactmath::{binom, ceil_re, GaussRat, Rat};
use crate::fock::State;
use crate::modes::{mode_of, state_truncation_bound};

/// `Σ_{i>=0} C(top, i) u_{i+shift} v`, together with the number of summands examined
/// before the binomial or lower truncation ended the sum.
pub fn residue_sum(u: &State, v: &State, top: i64, shift: i64) -> (State, usize) {
    let bound = state_truncation_bound(u, v);
    let mut out = State::zero();
    let mut i = 0i64;
    loop {
        if top >= 0 && i > top {
            break;
        }
        if i + shift >= bound {
            break;
        }
        let c = binom(top, i as u64);
        let term = mode_of(u, i + shift, v);
        if !term.is_zero() {
            out.add_scaled(&GaussRat::real(Rat::from(c)), &term);
        }
        i += 1;
    }
    (out, i as usize)
}

/// Weight data of a homogeneous element: `|u|`, `ceil(Re|u|)` and whether `r = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightInfo {
    pub weight: GaussRat,
    pub ceil: i64,
    pub integral: bool,
}

impl WeightInfo {
    pub fn of(weight: GaussRat) -> Self {
        let ceil = i64::try_from(ceil_re(&weight)).expect("weight fits in i64");
        let integral = weight == GaussRat::from_int(ceil);
        WeightInfo { weight, ceil, integral }
    }

    pub fn delta(&self) -> i64 {
        i64::from(self.integral)
    }
}

/// `u∘v = Res (1+z)^{ceil+δ-1} / z^{1+δ} Y(u,z)v`.
pub fn circ_with(u: &State, info: &WeightInfo, v: &State) -> (State, usize) {
    let d = info.delta();
    residue_sum(u, v, info.ceil + d - 1, -1 - d)
}

/// `u*v = δ_{r,0} Res (1+z)^{|u|} / z Y(u,z)v`.
pub fn star_with(u: &State, info: &WeightInfo, v: &State) -> (State, usize) {
    if !info.integral {
        return (State::zero(), 0);
    }
    residue_sum(u, v, info.ceil, -1)
}

/// `Res (1+z)^{ceil+δ-1+n} / z^{1+δ+m} Y(u,z)v`.
pub fn generalized_circ(u: &State, info: &WeightInfo, v: &State, m: i64, n: i64) -> State {
    let d = info.delta();
    residue_sum(u, v, info.ceil + d - 1 + n, -1 - d - m).0
}
