use std::collections::HashMap;

use rayon::prelude::*;

use super::products::{circ_with, star_with, WeightInfo};
use crate::exactmath::{GaussRat, Rat, RowEchelon, SparseVec};
use crate::fock::{basis_up_to, FockError, Monomial, State, TruncConfig, ZeroDirection};
use crate::grading::{classify, RegionTag};
use crate::modes::{ModeEngine, TruncationOverflow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZhuError {
    #[error(
        "mu = {0} lies outside the strip 0 <= Re(mu) <= 1: the integer-weight part is not bounded below \
         and there is no vacuum space to build the Zhu algebra on"
    )]
    OutsideStrip(GaussRat),
    #[error(transparent)]
    Fock(#[from] FockError),
    #[error("{source} (while computing {context})")]
    Overflow { source: TruncationOverflow, context: String },
    #[error("state {0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("report cap {report_cap} exceeds degree cap {deg_cap} - 2")]
    ReportCap { report_cap: Rat, deg_cap: Rat },
}

/// A truncated model of `V` at fixed μ: the ambient monomials of `Re(weight) <= degCap`
/// with their integer-weight part `V⁰` as coordinates, and the captured spans of
/// `O(V)` and `C(V)` projected onto `V⁰`.
///
/// Every non-integer-weight monomial lies in both `O(V)` and `C(V)`, so quotients by
/// either space only see the `V⁰` coordinates.
pub struct ZhuContext {
    mu: GaussRat,
    cfg: TruncConfig,
    engine: ModeEngine,
    ambient: Vec<Monomial>,
    v0: Vec<Monomial>,
    v0_index: HashMap<Monomial, usize>,
    zero_direction: Option<(ZeroDirection, usize)>,
    o_span: RowEchelon,
    c_span: RowEchelon,
    o_generators: usize,
    c_generators: usize,
    max_residue_terms: usize,
    o_history: Vec<(Rat, Vec<usize>)>,
}

impl ZhuContext {
    pub fn new(mu: GaussRat, cfg: TruncConfig) -> Result<Self, ZhuError> {
        if classify(&mu).tag == RegionTag::NotOmegaGenerated {
            return Err(ZhuError::OutsideStrip(mu));
        }
        let basis = basis_up_to(&mu, &cfg.deg_cap, cfg.mode_window)?;
        let v0: Vec<Monomial> =
            basis.monomials.iter().filter(|m| WeightInfo::of(m.weight().evaluate(&mu)).integral).cloned().collect();
        let v0_index = v0.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let dim = v0.len();
        let engine = ModeEngine::new(mu.clone(), &cfg);
        Ok(ZhuContext {
            engine,
            ambient: basis.monomials,
            zero_direction: basis.zero_direction,
            v0,
            v0_index,
            o_span: RowEchelon::new(dim),
            c_span: RowEchelon::new(dim),
            o_generators: 0,
            c_generators: 0,
            max_residue_terms: 0,
            o_history: Vec::new(),
            mu,
            cfg,
        })
    }

    pub fn mu(&self) -> &GaussRat {
        &self.mu
    }

    pub fn cfg(&self) -> &TruncConfig {
        &self.cfg
    }

    pub fn ambient(&self) -> &[Monomial] {
        &self.ambient
    }

    pub fn v0(&self) -> &[Monomial] {
        &self.v0
    }

    pub fn o_span(&self) -> &RowEchelon {
        &self.o_span
    }

    pub fn c_span(&self) -> &RowEchelon {
        &self.c_span
    }

    pub fn o_generators(&self) -> usize {
        self.o_generators
    }

    pub fn c_generators(&self) -> usize {
        self.c_generators
    }

    pub fn zero_direction(&self) -> Option<(ZeroDirection, usize)> {
        self.zero_direction
    }

    /// Longest residue sum evaluated so far.
    pub fn max_residue_terms(&self) -> usize {
        self.max_residue_terms
    }

    pub fn weight_info(&self, m: &Monomial) -> WeightInfo {
        WeightInfo::of(m.weight().evaluate(&self.mu))
    }

    pub fn re_weight(&self, m: &Monomial) -> Rat {
        m.weight().re_at(&self.mu)
    }

    pub(crate) fn zero_count(&self, m: &Monomial) -> usize {
        self.zero_direction.map(|(d, _)| d.count(m)).unwrap_or(0)
    }

    pub(crate) fn zero_cap(&self) -> usize {
        self.zero_direction.map(|(_, c)| c).unwrap_or(usize::MAX)
    }

    fn homogeneous(&self, u: &State) -> Result<WeightInfo, ZhuError> {
        if u.is_zero() {
            return Ok(WeightInfo::of(GaussRat::zero()));
        }
        u.homogeneous_weight(&self.mu).map(WeightInfo::of).ok_or_else(|| ZhuError::NotHomogeneous(u.to_string()))
    }

    fn guard(&self, s: State, what: impl FnOnce() -> String) -> Result<State, ZhuError> {
        self.engine.check(&s).map_err(|source| ZhuError::Overflow { source, context: what() })?;
        Ok(s)
    }

    pub fn circ(&self, u: &State, v: &State) -> Result<State, ZhuError> {
        let info = self.homogeneous(u)?;
        let (s, _) = circ_with(u, &info, v);
        self.guard(s, || format!("({u}) o ({v})"))
    }

    pub fn star(&self, u: &State, v: &State) -> Result<State, ZhuError> {
        let info = self.homogeneous(u)?;
        let (s, _) = star_with(u, &info, v);
        self.guard(s, || format!("({u}) * ({v})"))
    }

    pub fn mode(&self, u: &State, n: i64, v: &State) -> Result<State, ZhuError> {
        self.engine
            .mode_of(u, n, v)
            .map_err(|source| ZhuError::Overflow { source, context: format!("({u})_{n} ({v})") })
    }

    /// The `V⁰` coordinates of a state; non-integer-weight terms are dropped since
    /// they belong to `O(V)` and `C(V)`.
    pub fn project(&self, s: &State) -> Result<SparseVec, ZhuError> {
        self.engine.check(s).map_err(|source| ZhuError::Overflow { source, context: format!("projecting {s}") })?;
        let mut v = SparseVec::zero(self.v0.len());
        for (m, c) in s.terms() {
            if let Some(&i) = self.v0_index.get(m) {
                v.add_at(i, c);
            }
        }
        Ok(v)
    }

    pub fn lift(&self, v: &SparseVec) -> State {
        State::from_terms(v.iter().map(|(i, c)| (self.v0[i].clone(), c.clone())))
    }

    /// Monomial pairs `(u, v)` with `Re(|u|+|v|) <= pairBudget` whose total weight is an
    /// integer, sorted by that total; the other pairs only produce non-integer-weight terms.
    pub fn o_pairs(&self) -> Vec<(Rat, usize, usize)> {
        let budget = &self.cfg.pair_budget;
        let full: Vec<GaussRat> = self.ambient.iter().map(|m| m.weight().evaluate(&self.mu)).collect();
        let zc = self.zero_cap();
        let mut pairs = Vec::new();
        for (i, u) in self.ambient.iter().enumerate() {
            for (j, v) in self.ambient.iter().enumerate() {
                let total = &full[i] + &full[j];
                if &total.re > budget || !total.is_integer() {
                    continue;
                }
                if self.zero_count(u) + self.zero_count(v) > zc {
                    continue;
                }
                pairs.push((total.re, i, j));
            }
        }
        pairs.sort_by(|x, y| x.0.cmp(&y.0));
        pairs
    }

    /// Row-reduces `{u∘v}` over [`ZhuContext::o_pairs`], in pair order.
    pub fn build_o_span(&mut self) -> Result<(), ZhuError> {
        let pairs = self.o_pairs();
        let results: Vec<Result<(SparseVec, usize), ZhuError>> = pairs
            .par_iter()
            .map(|(_, i, j)| {
                let u = State::monomial(self.ambient[*i].clone());
                let v = State::monomial(self.ambient[*j].clone());
                let info = self.weight_info(&self.ambient[*i]);
                let (s, terms) = circ_with(&u, &info, &v);
                let s = self.guard(s, || format!("({u}) o ({v})"))?;
                Ok((self.project(&s)?, terms))
            })
            .collect();
        for ((total, _, _), r) in pairs.into_iter().zip(results) {
            let (vec, terms) = r?;
            self.max_residue_terms = self.max_residue_terms.max(terms);
            self.o_generators += 1;
            let pivot = self.o_span.insert_pivot(&vec);
            if self.o_history.last().map(|(t, _)| t != &total).unwrap_or(true) {
                self.o_history.push((total, Vec::new()));
            }
            if let Some(p) = pivot {
                self.o_history.last_mut().expect("pushed above").1.push(p);
            }
        }
        Ok(())
    }

    /// The pivot columns contributed by the pairs of each total weight, in increasing
    /// order of that weight.
    pub fn o_history(&self) -> &[(Rat, Vec<usize>)] {
        &self.o_history
    }

    /// Integer-weight members of `{u_{-n}v : u ∈ V⁰, n >= 2} ∪ {b_{-m}w : b ∈ V^r, r != 0, m >= 1}`
    /// that fit in the ambient space, as `(u, mode index, v)` triples over monomials.
    pub fn c_generators_list(&self) -> Vec<(usize, i64, usize)> {
        let cap = &self.cfg.deg_cap;
        let zc = self.zero_cap();
        let mut out = Vec::new();
        for (i, u) in self.ambient.iter().enumerate() {
            if u.is_vacuum() {
                continue;
            }
            let ui = self.weight_info(u);
            let first = if ui.integral { 2 } else { 1 };
            for (j, v) in self.ambient.iter().enumerate() {
                let total = &ui.weight + &v.weight().evaluate(&self.mu);
                if !WeightInfo::of(total.clone()).integral {
                    continue;
                }
                if self.zero_count(u) + self.zero_count(v) > zc {
                    continue;
                }
                // |u_{-k} v| = |u| + |v| + k - 1
                let mut k = first;
                while &total.re + &Rat::from(k - 1) <= *cap {
                    out.push((i, -k, j));
                    k += 1;
                }
            }
        }
        out
    }

    pub fn c_generator_state(&self, (i, n, j): (usize, i64, usize)) -> Result<State, ZhuError> {
        self.mode(&State::monomial(self.ambient[i].clone()), n, &State::monomial(self.ambient[j].clone()))
    }

    pub fn build_c_span(&mut self) -> Result<(), ZhuError> {
        let gens = self.c_generators_list();
        let results: Vec<Result<SparseVec, ZhuError>> =
            gens.par_iter().map(|&g| self.project(&self.c_generator_state(g)?)).collect();
        for r in results {
            self.c_generators += 1;
            self.c_span.insert(&r?);
        }
        Ok(())
    }

    /// `dim(ambient / captured C(V))`.
    pub fn c_quotient_dim(&self) -> usize {
        self.v0.len() - self.c_span.rank()
    }

    /// The monomial for column `i` of the `V⁰` coordinates.
    pub fn column(&self, i: usize) -> &Monomial {
        &self.v0[i]
    }

    pub fn column_weight(&self, i: usize) -> Rat {
        self.re_weight(&self.v0[i])
    }
}
