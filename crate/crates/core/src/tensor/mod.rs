//! Tensor products of rank-one factors with independent parameters μᵢ.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exactmath::{GaussRat, ParseError, Rat};
use crate::fock::{basis_up_to, parse_state, FockError, ModeWindow, Monomial, State};
use crate::grading::{classify, RegionClass, RegionTag};
use crate::modes::{central_charge, mode_of, omega_state, truncation_bound};

const SEPARATOR: &str = "(x)";

/// A pure tensor `v₁ ⊗ … ⊗ vₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorState {
    pub factors: Vec<State>,
}

impl TensorState {
    pub fn new(factors: Vec<State>) -> Self {
        TensorState { factors }
    }

    pub fn vacuum(rank: usize) -> Self {
        TensorState { factors: vec![State::vacuum(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `State::vacuum()` in every slot except `slot`.
    pub fn embed(rank: usize, slot: usize, s: State) -> Self {
        let mut t = TensorState::vacuum(rank);
        t.factors[slot] = s;
        t
    }

    /// Sum of the factor weights, when each factor is homogeneous.
    pub fn weight(&self, mus: &[GaussRat]) -> Option<GaussRat> {
        assert_eq!(mus.len(), self.rank(), "one μ per factor");
        self.factors
            .iter()
            .zip(mus)
            .try_fold(GaussRat::zero(), |acc, (f, mu)| f.homogeneous_weight(mu).map(|w| &acc + &w))
    }

    pub fn expand(&self) -> TensorVec {
        let mut terms: BTreeMap<Vec<Monomial>, GaussRat> = BTreeMap::new();
        terms.insert(Vec::new(), GaussRat::one());
        for f in &self.factors {
            let mut next = BTreeMap::new();
            for (prefix, c) in &terms {
                for (m, d) in f.terms() {
                    let mut key = prefix.clone();
                    key.push(m.clone());
                    next.insert(key, c * d);
                }
            }
            terms = next;
        }
        TensorVec { rank: self.rank(), terms }
    }
}

impl fmt::Display for TensorState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(SEPARATOR)?;
            }
            if s.len() > 1 {
                write!(f, "({s})")?;
            } else {
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// Parses factor states joined by `(x)`; a factor that is a sum is wrapped in parentheses.
pub fn parse_tensor(text: &str) -> Result<TensorState, ParseError> {
    let mut factors = Vec::new();
    let mut offset = 0;
    for part in text.split(SEPARATOR) {
        let trimmed = part.trim();
        let lead = part.len() - part.trim_start().len();
        let (body, inner) = if trimmed.starts_with('(') && trimmed.ends_with(')') {
            (&trimmed[1..trimmed.len() - 1], 1)
        } else {
            (trimmed, 0)
        };
        let s = parse_state(body).map_err(|e| ParseError::new(offset + lead + inner + e.position, e.message))?;
        factors.push(s);
        offset += part.len() + SEPARATOR.len();
    }
    Ok(TensorState { factors })
}

/// A linear combination of tensor monomials `m₁ ⊗ … ⊗ mₙ`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TensorVec {
    pub rank: usize,
    terms: BTreeMap<Vec<Monomial>, GaussRat>,
}

impl TensorVec {
    pub fn zero(rank: usize) -> Self {
        TensorVec { rank, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &GaussRat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: Vec<Monomial>, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, k: &GaussRat, other: &TensorVec) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(k * c));
        }
    }

    pub fn scaled(&self, k: &GaussRat) -> TensorVec {
        let mut out = TensorVec::zero(self.rank);
        out.add_scaled(k, self);
        out
    }

    pub fn monomial(key: Vec<Monomial>) -> Self {
        let mut out = TensorVec::zero(key.len());
        out.add_term(key, &GaussRat::one());
        out
    }
}

impl std::ops::Sub<&TensorVec> for &TensorVec {
    type Output = TensorVec;

    fn sub(self, rhs: &TensorVec) -> TensorVec {
        let mut out = self.clone();
        out.add_scaled(&-GaussRat::one(), rhs);
        out
    }
}

impl std::ops::Add<&TensorVec> for &TensorVec {
    type Output = TensorVec;

    fn add(self, rhs: &TensorVec) -> TensorVec {
        let mut out = self.clone();
        out.add_scaled(&GaussRat::one(), rhs);
        out
    }
}

impl fmt::Display for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (key, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                if c.is_compound() {
                    write!(f, "({c})*")?;
                } else {
                    write!(f, "{c}*")?;
                }
            }
            let parts: Vec<String> = key.iter().map(Monomial::to_string).collect();
            f.write_str(&parts.join(SEPARATOR))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn tensor_central_charge(mus: &[GaussRat]) -> GaussRat {
    mus.iter().fold(GaussRat::zero(), |acc, mu| &acc + &central_charge(mu))
}

fn strength(tag: RegionTag) -> u8 {
    match tag {
        RegionTag::OmegaVoa => 2,
        RegionTag::StripConfOmega => 1,
        RegionTag::NotOmegaGenerated => 0,
    }
}

/// The class of the first factor with the weakest tag; `None` for rank zero.
pub fn tensor_classify(mus: &[GaussRat]) -> Option<RegionClass> {
    let classes: Vec<RegionClass> = mus.iter().map(classify).collect();
    let weakest = classes.iter().map(|c| strength(c.tag)).min()?;
    classes.into_iter().find(|c| strength(c.tag) == weakest)
}

/// `(v₁⊗…⊗vₙ)_p (w₁⊗…⊗wₙ) = Σ_{j₁+…+jₙ = p+1-n} (v₁)_{j₁}w₁ ⊗ … ⊗ (vₙ)_{jₙ}wₙ` on
/// monomials.
fn tensor_mode_monomial(v: &[Monomial], p: i64, w: &[Monomial]) -> TensorVec {
    let rank = v.len();
    let bounds: Vec<i64> = v.iter().zip(w).map(|(a, b)| truncation_bound(a, b)).collect();
    let mut out = TensorVec::zero(rank);
    if rank == 0 {
        if p == -1 {
            out.add_term(Vec::new(), &GaussRat::one());
        }
        return out;
    }
    // suffix_max[i] = largest attainable Σ_{k>=i} j_k
    let mut suffix_max = vec![0i64; rank + 1];
    for i in (0..rank).rev() {
        suffix_max[i] = suffix_max[i + 1] + bounds[i] - 1;
    }
    #[allow(clippy::too_many_arguments)]
    fn go(
        i: usize,
        remaining: i64,
        v: &[Monomial],
        w: &[Monomial],
        bounds: &[i64],
        suffix_max: &[i64],
        acc: (Vec<Monomial>, GaussRat),
        out: &mut TensorVec,
    ) {
        if i + 1 == v.len() {
            if remaining >= bounds[i] {
                return;
            }
            let s = mode_of(&State::monomial(v[i].clone()), remaining, &State::monomial(w[i].clone()));
            for (m, c) in s.terms() {
                let mut key = acc.0.clone();
                key.push(m.clone());
                out.add_term(key, &(&acc.1 * c));
            }
            return;
        }
        // j_i <= bounds[i] - 1 and the rest must reach remaining - j_i
        let lo = remaining - suffix_max[i + 1];
        for j in lo..bounds[i] {
            let s = mode_of(&State::monomial(v[i].clone()), j, &State::monomial(w[i].clone()));
            for (m, c) in s.terms() {
                let mut key = acc.0.clone();
                key.push(m.clone());
                go(i + 1, remaining - j, v, w, bounds, suffix_max, (key, &acc.1 * c), out);
            }
        }
    }
    go(0, p + 1 - rank as i64, v, w, &bounds, &suffix_max, (Vec::new(), GaussRat::one()), &mut out);
    out
}

pub fn tensor_mode(v: &TensorVec, p: i64, w: &TensorVec) -> TensorVec {
    assert_eq!(v.rank, w.rank, "rank mismatch");
    let mut out = TensorVec::zero(v.rank);
    for (vk, vc) in v.terms() {
        for (wk, wc) in w.terms() {
            out.add_scaled(&(vc * wc), &tensor_mode_monomial(vk, p, wk));
        }
    }
    out
}

/// `ω = Σᵢ 1⊗…⊗ω_{μᵢ}⊗…⊗1`.
pub fn tensor_omega(mus: &[GaussRat]) -> TensorVec {
    let rank = mus.len();
    let mut out = TensorVec::zero(rank);
    for (i, mu) in mus.iter().enumerate() {
        out.add_scaled(&GaussRat::one(), &TensorState::embed(rank, i, omega_state(mu)).expand());
    }
    out
}

pub fn tensor_virasoro(mus: &[GaussRat], n: i64, w: &TensorVec) -> TensorVec {
    tensor_mode(&tensor_omega(mus), n + 1, w)
}

/// Both sides of `[L(m), L(n)]w = (m-n)L(m+n)w + (m³-m)/12 c δ_{m+n,0} w` with the
/// summed central charge.
pub fn tensor_bracket_sides(mus: &[GaussRat], m: i64, n: i64, w: &TensorVec) -> (TensorVec, TensorVec) {
    let lm_ln = tensor_virasoro(mus, m, &tensor_virasoro(mus, n, w));
    let ln_lm = tensor_virasoro(mus, n, &tensor_virasoro(mus, m, w));
    let lhs = &lm_ln - &ln_lm;
    let mut rhs = tensor_virasoro(mus, m + n, w).scaled(&GaussRat::from_int(m - n));
    if m + n == 0 {
        let k = GaussRat::real(Rat::new(m * m * m - m, 12));
        rhs.add_scaled(&(&k * &tensor_central_charge(mus)), w);
    }
    (lhs, rhs)
}

/// Tensor monomials of total `Re(weight) <= cap`, in lexicographic factor order.
pub fn tensor_basis(mus: &[GaussRat], cap: &Rat, window: ModeWindow) -> Result<Vec<Vec<Monomial>>, FockError> {
    let factor_bases: Vec<Vec<(Rat, Monomial)>> = mus
        .iter()
        .map(|mu| {
            basis_up_to(mu, cap, window).map(|b| b.monomials.into_iter().map(|m| (m.weight().re_at(mu), m)).collect())
        })
        .collect::<Result<_, _>>()?;
    let mut out: Vec<(Rat, Vec<Monomial>)> = vec![(Rat::zero(), Vec::new())];
    for fb in &factor_bases {
        out = out
            .into_iter()
            .flat_map(|(w, key)| {
                fb.iter().filter_map(move |(fw, m)| {
                    let total = &w + fw;
                    (&total <= cap).then(|| {
                        let mut k = key.clone();
                        k.push(m.clone());
                        (total, k)
                    })
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(|(_, k)| k).collect())
}

/// Checks the Virasoro relations on every tensor basis monomial up to `cap` for
/// `m, n ∈ [lo, hi]`; returns the first failing `(m, n, monomial)`.
pub fn tensor_virasoro_check(
    mus: &[GaussRat],
    cap: &Rat,
    window: ModeWindow,
    lo: i64,
    hi: i64,
) -> Result<Option<(i64, i64, String)>, FockError> {
    let basis = tensor_basis(mus, cap, window)?;
    let cases: Vec<(i64, i64, &Vec<Monomial>)> =
        basis.iter().flat_map(|k| (lo..=hi).flat_map(move |m| (lo..=hi).map(move |n| (m, n, k)))).collect();
    Ok(cases.par_iter().find_map_first(|&(m, n, key)| {
        let w = TensorVec::monomial(key.clone());
        let (l, r) = tensor_bracket_sides(mus, m, n, &w);
        (l != r).then(|| (m, n, format!("{w}")))
    }))
}
