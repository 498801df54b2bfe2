use std::fmt;

use crate::exactmath::GaussRat;
use crate::fock::{Monomial, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModeKind {
    A,
    AStar,
}

/// A single Weyl generator mode `a(n)` or `a*(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenMode {
    pub kind: ModeKind,
    pub index: i64,
}

impl GenMode {
    pub fn a(index: i64) -> Self {
        GenMode { kind: ModeKind::A, index }
    }

    pub fn astar(index: i64) -> Self {
        GenMode { kind: ModeKind::AStar, index }
    }

    pub fn is_creation(&self) -> bool {
        match self.kind {
            ModeKind::A => self.index <= -1,
            ModeKind::AStar => self.index <= 0,
        }
    }

    /// The scalar `[self, other]`.
    pub fn bracket(&self, other: &GenMode) -> i64 {
        if self.index + other.index != 0 {
            return 0;
        }
        match (self.kind, other.kind) {
            (ModeKind::A, ModeKind::AStar) => 1,
            (ModeKind::AStar, ModeKind::A) => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for GenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModeKind::A => write!(f, "a({})", self.index),
            ModeKind::AStar => write!(f, "a*({})", self.index),
        }
    }
}

/// Applies a generator mode to a single monomial.
pub fn act_gen_monomial(mode: GenMode, m: &Monomial) -> Option<(Monomial, i64)> {
    let n = mode.index;
    match mode.kind {
        ModeKind::A if n <= -1 => Some((m.with_a((-n - 1) as u32), 1)),
        ModeKind::AStar if n <= 0 => Some((m.with_astar((-n) as u32), 1)),
        ModeKind::A => {
            // a(n) contracts against each a*(-n) factor.
            let target = u32::try_from(n).ok()?;
            let count = m.count_astar(target);
            (count > 0).then(|| (m.without_astar(target).expect("counted factor"), count as i64))
        }
        ModeKind::AStar => {
            // a*(n) contracts against each a(-n) factor with sign -1.
            let target = u32::try_from(n - 1).ok()?;
            let count = m.count_a(target);
            (count > 0).then(|| (m.without_a(target).expect("counted factor"), -(count as i64)))
        }
    }
}

/// The action of `a(n)` or `a*(n)` on a state.
pub fn act_gen(mode: GenMode, s: &State) -> State {
    let mut out = State::zero();
    for (m, c) in s.terms() {
        if let Some((image, k)) = act_gen_monomial(mode, m) {
            if k == 1 {
                out.add_term(image, c);
            } else {
                out.add_term(image, &(c * &GaussRat::from_int(k)));
            }
        }
    }
    out
}

/// Applies the word right-to-left, as operators compose.
pub fn act_word(word: &[GenMode], s: &State) -> State {
    word.iter().rev().fold(s.clone(), |acc, &g| act_gen(g, &acc))
}
