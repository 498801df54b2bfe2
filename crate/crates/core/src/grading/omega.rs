use rayon::prelude::*;
use serde::Serialize;

use super::region::{classify, RegionTag};
use crate::exactmath::{ceil_re, GaussRat, Rat, WeightExpr};
use crate::fock::{basis_by_level, basis_up_to, FockError, ModeWindow, Monomial, State, TruncConfig};
use crate::modes::{act_gen, mode_of, truncation_bound, GenMode};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("state {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("the degree grading is undefined at mu = {0}")]
    DegreeUndefined(GaussRat),
}

/// `r = |u| - ceil(Re |u|)` for a weight.
pub fn r_value(weight: &GaussRat) -> GaussRat {
    weight - &GaussRat::real(Rat::from(ceil_re(weight)))
}

/// One block of the decomposition `V = ⊕_r V^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VrSplit {
    pub r: GaussRat,
    pub members: Vec<Monomial>,
}

/// Partitions the basis up to `cap` by `r`-value; the `r = 0` block comes first.
pub fn vr_split(mu: &GaussRat, cap: &Rat, window: ModeWindow) -> Result<Vec<VrSplit>, GradingError> {
    let basis = basis_up_to(mu, cap, window)?;
    let mut blocks: Vec<VrSplit> = Vec::new();
    for m in basis.monomials {
        let r = r_value(&m.weight().evaluate(mu));
        match blocks.iter_mut().find(|b| b.r == r) {
            Some(b) => b.members.push(m),
            None => blocks.push(VrSplit { r, members: vec![m] }),
        }
    }
    blocks.sort_by(|x, y| {
        (!x.r.is_zero()).cmp(&!y.r.is_zero()).then_with(|| x.r.re.cmp(&y.r.re)).then_with(|| x.r.im.cmp(&y.r.im))
    });
    Ok(blocks)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OmegaOutcome {
    InOmegaUpToTruncation,
    Violation { u: Monomial, n: i64 },
}

/// The monomials `u` scanned by [`omega_test`]. Outside the strip the weights are not
/// bounded below, so the scan runs over a μ-independent level instead.
pub fn omega_scan_basis(mu: &GaussRat, cfg: &TruncConfig) -> Result<Vec<Monomial>, GradingError> {
    let basis = if classify(mu).tag == RegionTag::NotOmegaGenerated {
        basis_by_level(&cfg.deg_cap)?
    } else {
        basis_up_to(mu, &cfg.deg_cap, cfg.mode_window)?
    };
    Ok(basis.monomials)
}

/// The first `(u, n)` with `u_n v != 0`, `n != |u| - 1` and `n >= Re|u| - 1`, over the
/// scan basis and the mode window.
pub fn omega_test(mu: &GaussRat, v: &State, cfg: &TruncConfig) -> Result<OmegaOutcome, GradingError> {
    if !v.is_homogeneous(mu) {
        return Err(GradingError::NotHomogeneous(v.to_string()));
    }
    let scan = omega_scan_basis(mu, cfg)?;
    Ok(omega_test_over(mu, v, &scan, cfg.mode_window))
}

pub fn omega_test_over(mu: &GaussRat, v: &State, scan: &[Monomial], window: ModeWindow) -> OmegaOutcome {
    let v_max = v.terms().map(|(m, _)| m.clone()).max_by_key(Monomial::level2);
    let found = scan.par_iter().find_map_first(|u| {
        let gamma = u.weight().evaluate(mu);
        let floor_n = &gamma.re - &Rat::one();
        let bound = v_max.as_ref().map(|w| truncation_bound(u, w)).unwrap_or(i64::MIN);
        let us = State::monomial(u.clone());
        window.iter().find_map(|n| {
            if n >= bound || floor_n > n {
                return None;
            }
            if gamma == GaussRat::from_int(n + 1) {
                return None;
            }
            (!mode_of(&us, n, v).is_zero()).then(|| OmegaOutcome::Violation { u: u.clone(), n })
        })
    });
    found.unwrap_or(OmegaOutcome::InOmegaUpToTruncation)
}

/// The degree of a monomial. Inside the strip the vacuum space is `ℂ1` (or the
/// `a*(0)`-/`a(-1)`-power family at μ ∈ {0, 1}), and the degree equals the weight.
pub fn degree(mu: &GaussRat, m: &Monomial) -> Result<WeightExpr, GradingError> {
    let re = &mu.re;
    let inside = re.is_positive() && *re < 1;
    let integer_point = mu.im.is_zero() && (re.is_zero() || re.is_one());
    if inside || integer_point {
        Ok(m.weight())
    } else {
        Err(GradingError::DegreeUndefined(mu.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCounterexample {
    pub word: String,
    pub base: String,
    pub shift: GaussRat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaScanReport {
    pub omega_basis: Vec<Monomial>,
    pub words_tried: usize,
    pub nonzero: usize,
    pub counterexamples: Vec<LemmaCounterexample>,
}

#[derive(Debug, Clone, Copy)]
enum Generator {
    A,
    AStar,
}

impl Generator {
    fn weight(&self, mu: &GaussRat) -> GaussRat {
        match self {
            Generator::A => &GaussRat::one() - mu,
            Generator::AStar => mu.clone(),
        }
    }

    fn mode(&self, n: i64) -> GenMode {
        match self {
            Generator::A => GenMode::a(n),
            Generator::AStar => GenMode::astar(n + 1),
        }
    }

    fn label(&self, n: i64) -> String {
        match self {
            Generator::A => format!("(a(-1)|0>)_{n}"),
            Generator::AStar => format!("(a*(0)|0>)_{n}"),
        }
    }
}

/// Applies every word `v^k_{n_k}…v^1_{n_1}` of length `<= max_len` in the generators
/// `a(-1)1`, `a*(0)1` to each computed vacuum-space vector, and checks that nonzero
/// results have total shift `Σ(|v^j| - n_j - 1)` either zero or of positive real part.
pub fn grading_lemma_scan(mu: &GaussRat, cfg: &TruncConfig, max_len: usize) -> Result<LemmaScanReport, GradingError> {
    let candidates = basis_up_to(mu, &cfg.pair_budget, cfg.mode_window)?;
    let scan = omega_scan_basis(mu, cfg)?;
    let omega_basis: Vec<Monomial> = candidates
        .monomials
        .into_iter()
        .filter(|m| {
            omega_test_over(mu, &State::monomial(m.clone()), &scan, cfg.mode_window)
                == OmegaOutcome::InOmegaUpToTruncation
        })
        .collect();

    let letters: Vec<(Generator, i64)> =
        cfg.mode_window.iter().flat_map(|n| [(Generator::A, n), (Generator::AStar, n)]).collect();
    let mut words: Vec<Vec<(Generator, i64)>> = vec![vec![]];
    let mut frontier = words.clone();
    for _ in 0..max_len {
        let next: Vec<Vec<(Generator, i64)>> =
            frontier.iter().flat_map(|w| letters.iter().map(move |&l| [w.as_slice(), &[l]].concat())).collect();
        words.extend(next.iter().cloned());
        frontier = next;
    }

    let per_word: Vec<(usize, Vec<LemmaCounterexample>)> = words
        .par_iter()
        .map(|word| {
            let mut nonzero = 0;
            let mut bad = Vec::new();
            let shift =
                word.iter().fold(GaussRat::zero(), |acc, (g, n)| &acc + &(&g.weight(mu) - &GaussRat::from_int(n + 1)));
            for u0 in &omega_basis {
                // word[0] is v^1, the first mode to act.
                let image = word.iter().fold(State::monomial(u0.clone()), |acc, (g, n)| act_gen(g.mode(*n), &acc));
                if image.is_zero() {
                    continue;
                }
                nonzero += 1;
                if !(shift.is_zero() || shift.re.is_positive()) {
                    let text: Vec<String> = word.iter().rev().map(|(g, n)| g.label(*n)).collect();
                    bad.push(LemmaCounterexample { word: text.join(" "), base: u0.to_string(), shift: shift.clone() });
                }
            }
            (nonzero, bad)
        })
        .collect();

    let mut report = LemmaScanReport { omega_basis, words_tried: words.len(), nonzero: 0, counterexamples: Vec::new() };
    for (nz, bad) in per_word {
        report.nonzero += nz;
        report.counterexamples.extend(bad);
    }
    Ok(report)
}
