use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use super::Monomial;
use crate::exactmath::{GaussRat, WeightExpr};

/// A finite ℚ(i)-linear combination of monomials. Zero coefficients are never stored,
/// so equality is syntactic.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct State {
    terms: BTreeMap<Monomial, GaussRat>,
}

impl State {
    pub fn zero() -> Self {
        State::default()
    }

    pub fn vacuum() -> Self {
        State::monomial(Monomial::vacuum())
    }

    pub fn monomial(m: Monomial) -> Self {
        State::term(m, GaussRat::one())
    }

    pub fn term(m: Monomial, c: GaussRat) -> Self {
        let mut s = State::zero();
        s.add_term(m, &c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussRat)>) -> Self {
        let mut s = State::zero();
        for (m, c) in terms {
            s.add_term(m, &c);
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRat {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// `self += k · other`
    pub fn add_scaled(&mut self, k: &GaussRat, other: &State) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(k * c));
        }
    }

    pub fn scaled(&self, k: &GaussRat) -> State {
        let mut s = State::zero();
        s.add_scaled(k, self);
        s
    }

    /// The common symbolic weight when every monomial has the same `WeightExpr`.
    pub fn common_weight(&self) -> Option<WeightExpr> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// The weight at `mu` when all monomials share it.
    pub fn homogeneous_weight(&self, mu: &GaussRat) -> Option<GaussRat> {
        let mut it = self.terms.keys().map(|m| m.weight().evaluate(mu));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self, mu: &GaussRat) -> bool {
        self.is_zero() || self.homogeneous_weight(mu).is_some()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, GaussRat> {
        self.terms
    }
}

impl From<Monomial> for State {
    fn from(m: Monomial) -> Self {
        State::monomial(m)
    }
}

impl Add<&State> for &State {
    type Output = State;
    fn add(self, rhs: &State) -> State {
        let mut s = self.clone();
        s.add_scaled(&GaussRat::one(), rhs);
        s
    }
}

impl Sub<&State> for &State {
    type Output = State;
    fn sub(self, rhs: &State) -> State {
        let mut s = self.clone();
        s.add_scaled(&GaussRat::from_int(-1), rhs);
        s
    }
}

impl Add for State {
    type Output = State;
    fn add(self, rhs: State) -> State {
        &self + &rhs
    }
}

impl Sub for State {
    type Output = State;
    fn sub(self, rhs: State) -> State {
        &self - &rhs
    }
}

impl Neg for &State {
    type Output = State;
    fn neg(self) -> State {
        self.scaled(&GaussRat::from_int(-1))
    }
}

impl fmt::Display for State {
    /// Canonical text in the state grammar; terms follow the monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
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
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One entry of the JSON form of a state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct TermJson {
    pub monomial: String,
    pub coeff: String,
}

impl State {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms.iter().map(|(m, c)| TermJson { monomial: m.to_string(), coeff: c.to_string() }).collect()
    }

    pub fn from_json_terms(terms: &[TermJson]) -> Result<State, crate::exactmath::ParseError> {
        let mut s = State::zero();
        for t in terms {
            let m = super::parse_state(&t.monomial)?;
            let c: GaussRat = t.coeff.parse()?;
            s.add_scaled(&c, &m);
        }
        Ok(s)
    }
}

impl Serialize for State {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}
