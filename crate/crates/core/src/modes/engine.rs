use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use parking_lot::RwLock;

use super::gen::{act_gen_monomial, GenMode, ModeKind};
use crate::exactmath::{binom, GaussRat, Rat};
use crate::fock::{Monomial, State, TruncConfig, ZeroDirection};

type Key = (Monomial, i64, Monomial);

/// Memoized `v_p w` for monomials `v`, `w`. Mode coefficients do not depend on μ, so
/// one cache serves every parameter value.
#[derive(Default)]
struct ModeCache {
    map: RwLock<HashMap<Key, Arc<State>>>,
}

fn cache() -> &'static ModeCache {
    static CACHE: OnceLock<ModeCache> = OnceLock::new();
    CACHE.get_or_init(ModeCache::default)
}

/// Every `p >= truncation_bound(v, w)` gives `v_p w = 0`.
///
/// Weights at μ = 1/2 are non-negative on the whole Fock space, and `v_p w` has
/// weight `|v| + |w| - p - 1` there.
pub fn truncation_bound(v: &Monomial, w: &Monomial) -> i64 {
    ((v.level2() + w.level2()) / 2) as i64
}

/// The largest truncation bound over all monomial pairs of two states.
pub fn state_truncation_bound(v: &State, w: &State) -> i64 {
    let lv = v.terms().map(|(m, _)| m.level2()).max();
    let lw = w.terms().map(|(m, _)| m.level2()).max();
    match (lv, lw) {
        (Some(a), Some(b)) => ((a + b) / 2) as i64,
        _ => i64::MIN,
    }
}

fn parity_sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn big_coeff(k: BigInt) -> GaussRat {
    GaussRat::real(Rat::from(k))
}

/// `(g_k)` for the generating states `a(-1)1` and `a*(0)1`.
fn generator_mode(kind: ModeKind, k: i64) -> GenMode {
    match kind {
        ModeKind::A => GenMode::a(k),
        ModeKind::AStar => GenMode::astar(k + 1),
    }
}

fn apply_gen(mode: GenMode, s: &State, scale: &GaussRat, out: &mut State) {
    for (m, c) in s.terms() {
        if let Some((image, k)) = act_gen_monomial(mode, m) {
            let coeff = c * scale;
            if k == 1 {
                out.add_term(image, &coeff);
            } else {
                out.add_term(image, &(&coeff * &GaussRat::from_int(k)));
            }
        }
    }
}

/// `v_p w` for monomials, by peeling the leftmost generator off `v` and applying the
/// iterate identity
/// `(g_q v')_p w = Σ_j (-1)^j C(q,j) [g_{q-j} v'_{p+j} w - (-1)^q v'_{q+p-j} g_j w]`.
pub fn monomial_mode(v: &Monomial, p: i64, w: &Monomial) -> Arc<State> {
    if p >= truncation_bound(v, w) {
        return Arc::new(State::zero());
    }
    if v.is_vacuum() {
        return Arc::new(if p == -1 { State::monomial(w.clone()) } else { State::zero() });
    }
    let key = (v.clone(), p, w.clone());
    if let Some(hit) = cache().map.read().get(&key) {
        return Arc::clone(hit);
    }
    let result = Arc::new(iterate(v, p, w));
    cache().map.write().entry(key).or_insert_with(|| Arc::clone(&result));
    result
}

fn iterate(v: &Monomial, p: i64, w: &Monomial) -> State {
    let (kind, q, rest) = if let Some(&m) = v.a_modes().first() {
        (ModeKind::A, -(m as i64) - 1, v.without_a(m).expect("leading factor"))
    } else {
        let n = v.astar_modes()[0];
        (ModeKind::AStar, -(n as i64) - 1, v.without_astar(n).expect("leading factor"))
    };
    let mut out = State::zero();

    let upper = truncation_bound(&rest, w);
    let mut j = 0i64;
    while p + j < upper {
        let inner = monomial_mode(&rest, p + j, w);
        if !inner.is_zero() {
            let c = big_coeff(binom(q, j as u64) * parity_sign(j));
            apply_gen(generator_mode(kind, q - j), &inner, &c, &mut out);
        }
        j += 1;
    }

    // g_j w vanishes once j passes the deepest factor of w it could contract with.
    let j_max = match kind {
        ModeKind::A => w.astar_modes().first().map(|&n| n as i64),
        ModeKind::AStar => w.a_modes().first().map(|&m| m as i64),
    };
    if let Some(j_max) = j_max {
        let outer_sign = -parity_sign(q);
        for j in 0..=j_max {
            let Some((gw, k)) = act_gen_monomial(generator_mode(kind, j), w) else {
                continue;
            };
            let inner = monomial_mode(&rest, q + p - j, &gw);
            if inner.is_zero() {
                continue;
            }
            let c = big_coeff(binom(q, j as u64) * (outer_sign * parity_sign(j) * k));
            out.add_scaled(&c, &inner);
        }
    }
    out
}

/// `v_p w` for arbitrary states, exactly and without any truncation guard.
pub fn mode_of(v: &State, p: i64, w: &State) -> State {
    let mut out = State::zero();
    for (vm, vc) in v.terms() {
        for (wm, wc) in w.terms() {
            let r = monomial_mode(vm, p, wm);
            if !r.is_zero() {
                out.add_scaled(&(vc * wc), &r);
            }
        }
    }
    out
}

/// The truncation failure raised when a result leaves the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("truncation overflow: term {term} has Re(weight) {weight} beyond the degree cap {cap}")]
pub struct TruncationOverflow {
    pub term: String,
    pub weight: String,
    pub cap: String,
}

/// Mode computations checked against an ambient truncated space at a fixed μ.
#[derive(Debug, Clone)]
pub struct ModeEngine {
    mu: GaussRat,
    deg_cap: Rat,
    zero_direction: Option<(ZeroDirection, usize)>,
}

impl ModeEngine {
    pub fn new(mu: GaussRat, cfg: &TruncConfig) -> Self {
        let zero_direction = ZeroDirection::for_mu(&mu).map(|d| (d, cfg.mode_window.zero_direction_cap()));
        ModeEngine { mu, deg_cap: cfg.deg_cap.clone(), zero_direction }
    }

    /// An engine with an explicit ambient cap and no zero-direction limit.
    pub fn with_cap(mu: GaussRat, deg_cap: Rat) -> Self {
        ModeEngine { mu, deg_cap, zero_direction: None }
    }

    pub fn mu(&self) -> &GaussRat {
        &self.mu
    }

    pub fn deg_cap(&self) -> &Rat {
        &self.deg_cap
    }

    pub fn fits(&self, m: &Monomial) -> bool {
        if m.weight().re_at(&self.mu) > self.deg_cap {
            return false;
        }
        match self.zero_direction {
            Some((dir, cap)) => dir.count(m) <= cap,
            None => true,
        }
    }

    pub fn check(&self, s: &State) -> Result<(), TruncationOverflow> {
        match s.terms().find(|(m, _)| !self.fits(m)) {
            None => Ok(()),
            Some((m, _)) => Err(TruncationOverflow {
                term: m.to_string(),
                weight: m.weight().re_at(&self.mu).to_string(),
                cap: self.deg_cap.to_string(),
            }),
        }
    }

    pub fn mode_of(&self, v: &State, p: i64, w: &State) -> Result<State, TruncationOverflow> {
        let r = mode_of(v, p, w);
        self.check(&r)?;
        Ok(r)
    }
}
