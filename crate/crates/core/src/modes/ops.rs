use super::engine::{mode_of, state_truncation_bound, ModeEngine, TruncationOverflow};
use crate::exactmath::{binom, GaussRat, Rat};
use crate::fock::{Monomial, State};

/// `β = a(-1)a*(0)1`.
pub fn beta_state() -> State {
    State::monomial(Monomial::new(vec![0], vec![0]))
}

/// `ω_μ = (1-μ)a(-1)a*(-1)1 - μ a(-2)a*(0)1`.
pub fn omega_state(mu: &GaussRat) -> State {
    let one = GaussRat::one();
    State::from_terms([(Monomial::new(vec![0], vec![1]), &one - mu), (Monomial::new(vec![1], vec![0]), -mu)])
}

/// `c_μ = 2(6μ(μ-1) + 1)`.
pub fn central_charge(mu: &GaussRat) -> GaussRat {
    let one = GaussRat::one();
    let inner = &(&GaussRat::from_int(6) * &(mu * &(mu - &one))) + &one;
    &GaussRat::from_int(2) * &inner
}

/// `D(v) = v_{-2}1`.
pub fn d_op(v: &State) -> State {
    mode_of(v, -2, &State::vacuum())
}

/// `β(n)s = β_n s`.
pub fn beta_mode(n: i64, s: &State) -> State {
    mode_of(&beta_state(), n, s)
}

/// `L^μ(n)s = (ω_μ)_{n+1} s`, unguarded.
pub fn virasoro_mode_exact(mu: &GaussRat, n: i64, s: &State) -> State {
    mode_of(&omega_state(mu), n + 1, s)
}

/// `L^μ(n)s`, checked against the engine's ambient space.
pub fn virasoro_mode(engine: &ModeEngine, n: i64, s: &State) -> Result<State, TruncationOverflow> {
    engine.mode_of(&omega_state(engine.mu()), n + 1, s)
}

/// Both sides of `[v_n, v'_m]w = Σ_i C(n,i)(v_i v')_{m+n-i} w`.
pub fn commutator_sides(v: &State, v2: &State, n: i64, m: i64, w: &State) -> (State, State) {
    let lhs = &mode_of(v, n, &mode_of(v2, m, w)) - &mode_of(v2, m, &mode_of(v, n, w));
    let mut rhs = State::zero();
    let upper = state_truncation_bound(v, v2);
    for i in 0..upper.max(0) {
        let vi = mode_of(v, i, v2);
        if vi.is_zero() {
            continue;
        }
        let c = GaussRat::real(Rat::from(binom(n, i as u64)));
        if c.is_zero() {
            continue;
        }
        rhs.add_scaled(&c, &mode_of(&vi, m + n - i, w));
    }
    (lhs, rhs)
}

pub fn commutator_check(v: &State, v2: &State, n: i64, m: i64, w: &State) -> bool {
    let (lhs, rhs) = commutator_sides(v, v2, n, m, w);
    lhs == rhs
}

/// `[L(m), L(n)]s` and `(m-n)L(m+n)s + (m³-m)/12 c δ_{m,-n} s` at μ.
pub fn virasoro_bracket_sides(mu: &GaussRat, m: i64, n: i64, s: &State) -> (State, State) {
    let l = |k: i64, x: &State| virasoro_mode_exact(mu, k, x);
    let lhs = &l(m, &l(n, s)) - &l(n, &l(m, s));
    let mut rhs = l(m + n, s).scaled(&GaussRat::from_int(m - n));
    if m + n == 0 {
        let c = central_charge(mu);
        let k = GaussRat::real(Rat::new(m * m * m - m, 12));
        rhs.add_scaled(&(&k * &c), s);
    }
    (lhs, rhs)
}
