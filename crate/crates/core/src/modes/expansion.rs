use num_bigint::BigInt;
use num_traits::One;

use super::gen::{act_gen, GenMode, ModeKind};
use crate::exactmath::{binom, GaussRat, Rat};
use crate::fock::{Monomial, State};

/// The `p`-th mode of a monomial's field as a list of normally ordered generator
/// words, restricted to the words that can act nonzero on a given target.
///
/// The field of `a(-m-1)…a*(-n)…1` is the normally ordered product of
/// `∂^m a(z)/m!` and `∂^n a*(z)/n!`, with
/// `∂^m a(z)/m! = Σ_k C(-k-1, m) a(k) z^{-k-1-m}` and
/// `∂^n a*(z)/n! = Σ_l C(-l, n) a*(l) z^{-l-n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeExpansion {
    /// Creation modes first, then annihilation modes.
    pub words: Vec<(GaussRat, Vec<GenMode>)>,
}

struct Factor {
    kind: ModeKind,
    derivs: u32,
}

impl ModeExpansion {
    pub fn new(v: &Monomial, p: i64, target: &Monomial) -> Self {
        let factors: Vec<Factor> = v
            .a_modes()
            .iter()
            .map(|&m| Factor { kind: ModeKind::A, derivs: m })
            .chain(v.astar_modes().iter().map(|&n| Factor { kind: ModeKind::AStar, derivs: n }))
            .collect();
        // Σ k_i + Σ l_j must equal this.
        let index_sum: i64 = p + 1
            - factors
                .iter()
                .map(|f| match f.kind {
                    ModeKind::A => 1 + f.derivs as i64,
                    ModeKind::AStar => f.derivs as i64,
                })
                .sum::<i64>();

        // Annihilation indices that can contract with something in the target.
        let mut a_annih: Vec<i64> = target.astar_modes().iter().map(|&n| n as i64).collect();
        a_annih.dedup();
        let mut s_annih: Vec<i64> = target.a_modes().iter().map(|&m| m as i64 + 1).collect();
        s_annih.dedup();

        let mut words = Vec::new();
        let mut choice: Vec<Option<i64>> = Vec::with_capacity(factors.len());
        choose_annihilators(&factors, &a_annih, &s_annih, target, &mut choice, &mut |choice| {
            let annih_sum: i64 = choice.iter().flatten().sum();
            let creators: Vec<usize> = (0..factors.len()).filter(|&i| choice[i].is_none()).collect();
            // Creation a-index is -1-x, creation a*-index is -y, with x, y >= 0.
            let n_a_creators = creators.iter().filter(|&&i| factors[i].kind == ModeKind::A).count() as i64;
            let slack = -(index_sum - annih_sum) - n_a_creators;
            if slack < 0 {
                return;
            }
            let mut idx = choice.to_vec();
            distribute(&creators, slack, &mut |shifts| {
                for (&i, &x) in creators.iter().zip(shifts) {
                    idx[i] = Some(match factors[i].kind {
                        ModeKind::A => -1 - x,
                        ModeKind::AStar => -x,
                    });
                }
                let mut coeff = BigInt::one();
                let mut creation = Vec::new();
                let mut annihilation = Vec::new();
                for (f, k) in factors.iter().zip(&idx) {
                    let k = k.expect("every factor assigned");
                    let mode = match f.kind {
                        ModeKind::A => {
                            coeff *= binom(-k - 1, f.derivs as u64);
                            GenMode::a(k)
                        }
                        ModeKind::AStar => {
                            coeff *= binom(-k, f.derivs as u64);
                            GenMode::astar(k)
                        }
                    };
                    if mode.is_creation() {
                        creation.push(mode);
                    } else {
                        annihilation.push(mode);
                    }
                }
                if coeff != BigInt::from(0) {
                    creation.extend(annihilation);
                    words.push((GaussRat::real(Rat::from(coeff)), creation));
                }
            });
        });
        ModeExpansion { words }
    }

    pub fn apply(&self, w: &State) -> State {
        let mut out = State::zero();
        for (c, word) in &self.words {
            let image = word.iter().rev().fold(w.clone(), |acc, &g| act_gen(g, &acc));
            out.add_scaled(c, &image);
        }
        out
    }
}

fn choose_annihilators(
    factors: &[Factor],
    a_annih: &[i64],
    s_annih: &[i64],
    target: &Monomial,
    choice: &mut Vec<Option<i64>>,
    emit: &mut dyn FnMut(&[Option<i64>]),
) {
    let i = choice.len();
    if i == factors.len() {
        emit(choice);
        return;
    }
    choice.push(None);
    choose_annihilators(factors, a_annih, s_annih, target, choice, emit);
    choice.pop();
    let (options, available) = match factors[i].kind {
        ModeKind::A => (a_annih, target.t()),
        ModeKind::AStar => (s_annih, target.k()),
    };
    let used = (0..i).filter(|&j| factors[j].kind == factors[i].kind && choice[j].is_some()).count();
    if used >= available {
        return;
    }
    for &k in options {
        choice.push(Some(k));
        choose_annihilators(factors, a_annih, s_annih, target, choice, emit);
        choice.pop();
    }
}

/// Every way to write `total` as an ordered sum over `slots` of non-negative parts.
fn distribute(slots: &[usize], total: i64, emit: &mut dyn FnMut(&[i64])) {
    fn rec(n: usize, left: i64, acc: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
        if acc.len() + 1 == n {
            acc.push(left);
            emit(acc);
            acc.pop();
            return;
        }
        for x in 0..=left {
            acc.push(x);
            rec(n, left - x, acc, emit);
            acc.pop();
        }
    }
    if slots.is_empty() {
        if total == 0 {
            emit(&[]);
        }
        return;
    }
    rec(slots.len(), total, &mut Vec::with_capacity(slots.len()), emit);
}

/// `v_p w` through the normally ordered expansion; an independent path to the
/// iterate recursion in the engine.
pub fn expansion_mode_of(v: &State, p: i64, w: &State) -> State {
    let mut out = State::zero();
    for (vm, vc) in v.terms() {
        for (wm, wc) in w.terms() {
            let exp = ModeExpansion::new(vm, p, wm);
            out.add_scaled(&(vc * wc), &exp.apply(&State::monomial(wm.clone())));
        }
    }
    out
}
