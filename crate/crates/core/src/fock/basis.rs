use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Monomial;
use crate::exactmath::{GaussRat, ParseError, Rat};

/// Inclusive integer interval of mode indices used by brute-force scans. Its upper
/// end also caps the number of zero-weight factors along a degenerate direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModeWindow {
    pub lo: i64,
    pub hi: i64,
}

impl ModeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self, FockError> {
        if lo > hi {
            return Err(FockError::InvalidConfig(format!("empty mode window {lo}:{hi}")));
        }
        Ok(ModeWindow { lo, hi })
    }

    pub fn symmetric(r: i64) -> Self {
        ModeWindow { lo: -r, hi: r }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Bound on powers of a zero-weight generator.
    pub fn zero_direction_cap(&self) -> usize {
        self.hi.max(0) as usize
    }
}

impl fmt::Display for ModeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

impl FromStr for ModeWindow {
    type Err = ParseError;

    /// `lo:hi`, e.g. `-3:3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| ParseError::new(0, "expected `lo:hi`"))?;
        let lo: i64 = lo.trim().parse().map_err(|_| ParseError::new(0, "invalid lower bound"))?;
        let hi: i64 =
            hi.trim().parse().map_err(|_| ParseError::new(s.find(':').unwrap_or(0) + 1, "invalid upper bound"))?;
        ModeWindow::new(lo, hi).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

/// Truncation parameters shared by every bounded computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncConfig {
    pub deg_cap: Rat,
    pub pair_budget: Rat,
    pub mode_window: ModeWindow,
}

impl TruncConfig {
    pub fn new(deg_cap: Rat, pair_budget: Rat, mode_window: ModeWindow) -> Result<Self, FockError> {
        if deg_cap.is_negative() || pair_budget.is_negative() {
            return Err(FockError::InvalidConfig("caps must be non-negative".into()));
        }
        if &pair_budget + &Rat::one() > deg_cap {
            return Err(FockError::InvalidConfig(format!(
                "pair budget {pair_budget} + 1 exceeds degree cap {deg_cap}"
            )));
        }
        Ok(TruncConfig { deg_cap, pair_budget, mode_window })
    }

    /// Pair budget `deg_cap - 1` (or 0 below a cap of 1).
    pub fn with_default_budget(deg_cap: Rat, mode_window: ModeWindow) -> Result<Self, FockError> {
        let budget = &deg_cap - &Rat::one();
        let budget = if budget.is_negative() { Rat::zero() } else { budget };
        if deg_cap < 1 {
            if deg_cap.is_negative() {
                return Err(FockError::InvalidConfig("caps must be non-negative".into()));
            }
            return Ok(TruncConfig { deg_cap, pair_budget: budget, mode_window });
        }
        TruncConfig::new(deg_cap, budget, mode_window)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("Re(mu) = {0} lies outside [0, 1]; weight spaces are not bounded below")]
    NotLowerFinite(Rat),
    #[error("negative cap {0}")]
    NegativeCap(Rat),
    #[error("invalid truncation config: {0}")]
    InvalidConfig(String),
}

/// The generator whose weight has zero real part when `Re(mu)` is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ZeroDirection {
    /// `a*(0)` at `Re(mu) = 0`.
    AStarZero,
    /// `a(-1)` at `Re(mu) = 1`.
    AMinusOne,
}

impl ZeroDirection {
    pub fn for_mu(mu: &GaussRat) -> Option<Self> {
        if mu.re.is_zero() {
            Some(ZeroDirection::AStarZero)
        } else if mu.re.is_one() {
            Some(ZeroDirection::AMinusOne)
        } else {
            None
        }
    }

    pub fn count(&self, m: &Monomial) -> usize {
        match self {
            ZeroDirection::AStarZero => m.count_astar(0),
            ZeroDirection::AMinusOne => m.count_a(0),
        }
    }
}

/// The monomials of `Re(weight) <= cap`, ordered by real weight then canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    pub monomials: Vec<Monomial>,
    /// Present when the enumeration had to cap a zero-weight direction.
    pub zero_direction: Option<(ZeroDirection, usize)>,
}

/// Enumerates every monomial with `Re(weight at mu) <= cap`.
///
/// At `Re(mu) ∈ {0, 1}` one generator has zero real weight; its power is limited to
/// `window.zero_direction_cap()` and the cap is recorded in the result.
pub fn basis_up_to(mu: &GaussRat, cap: &Rat, window: ModeWindow) -> Result<Basis, FockError> {
    if cap.is_negative() {
        return Err(FockError::NegativeCap(cap.clone()));
    }
    if mu.re.is_negative() || mu.re > 1 {
        return Err(FockError::NotLowerFinite(mu.re.clone()));
    }
    let zero_dir = ZeroDirection::for_mu(mu);
    let zcap = window.zero_direction_cap();
    let one = Rat::one();
    let w_a = |m: u32| &Rat::from(m as i64) + &(&one - &mu.re);
    let w_s = |n: u32| &Rat::from(n as i64) + &mu.re;

    let a_words = multisets(cap, &w_a, zero_dir == Some(ZeroDirection::AMinusOne), zcap);
    let s_words = multisets(cap, &w_s, zero_dir == Some(ZeroDirection::AStarZero), zcap);

    let mut out: Vec<(Rat, Monomial)> = Vec::new();
    for (wa, a) in &a_words {
        for (ws, s) in &s_words {
            let total = wa + ws;
            if &total <= cap {
                out.push((total, Monomial::new(a.clone(), s.clone())));
            }
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
    Ok(Basis { monomials: out.into_iter().map(|(_, m)| m).collect(), zero_direction: zero_dir.map(|d| (d, zcap)) })
}

/// Monomials up to `cap` in the μ-independent level `weight at mu = 1/2`, for scans
/// at parameters where weight spaces are not bounded below.
pub fn basis_by_level(cap: &Rat) -> Result<Basis, FockError> {
    basis_up_to(&GaussRat::frac(1, 2), cap, ModeWindow::symmetric(0))
}

/// All descending multisets of mode labels with total weight `<= cap`. The label `0`
/// may have weight zero, in which case its multiplicity is limited by `zero_cap`.
fn multisets(cap: &Rat, weight: &dyn Fn(u32) -> Rat, zero_is_free: bool, zero_cap: usize) -> Vec<(Rat, Vec<u32>)> {
    let mut max_label = 0u32;
    while weight(max_label + 1) <= *cap {
        max_label += 1;
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(max_label, Rat::zero(), cap, weight, zero_is_free, zero_cap, &mut current, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    top: u32,
    used: Rat,
    cap: &Rat,
    weight: &dyn Fn(u32) -> Rat,
    zero_is_free: bool,
    zero_cap: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<(Rat, Vec<u32>)>,
) {
    out.push((used.clone(), current.clone()));
    for label in (0..=top).rev() {
        let next = &used + &weight(label);
        if &next > cap {
            continue;
        }
        if label == 0 && zero_is_free && current.iter().filter(|&&x| x == 0).count() >= zero_cap {
            continue;
        }
        current.push(label);
        extend(label, next, cap, weight, zero_is_free, zero_cap, current, out);
        current.pop();
    }
}
