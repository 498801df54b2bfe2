use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::exactmath::WeightExpr;

/// A creation word `a(-m₁-1)…a(-m_k-1) a*(-n₁)…a*(-n_t) 1` applied to the vacuum.
///
/// `a_modes` holds the `m` values and `astar_modes` the `n` values, each sorted
/// descending. The empty monomial is the vacuum.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    a_modes: Vec<u32>,
    astar_modes: Vec<u32>,
}

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial::default()
    }

    pub fn new(mut a_modes: Vec<u32>, mut astar_modes: Vec<u32>) -> Self {
        a_modes.sort_unstable_by(|x, y| y.cmp(x));
        astar_modes.sort_unstable_by(|x, y| y.cmp(x));
        Monomial { a_modes, astar_modes }
    }

    /// `a(-1)1`
    pub fn a_gen() -> Self {
        Monomial::new(vec![0], vec![])
    }

    /// `a*(0)1`
    pub fn astar_gen() -> Self {
        Monomial::new(vec![], vec![0])
    }

    pub fn is_vacuum(&self) -> bool {
        self.a_modes.is_empty() && self.astar_modes.is_empty()
    }

    pub fn a_modes(&self) -> &[u32] {
        &self.a_modes
    }

    pub fn astar_modes(&self) -> &[u32] {
        &self.astar_modes
    }

    /// Number of `a` factors.
    pub fn k(&self) -> usize {
        self.a_modes.len()
    }

    /// Number of `a*` factors.
    pub fn t(&self) -> usize {
        self.astar_modes.len()
    }

    pub fn len(&self) -> usize {
        self.k() + self.t()
    }

    pub fn is_empty(&self) -> bool {
        self.is_vacuum()
    }

    /// `(Σmᵢ + Σnⱼ + k) + (t − k)·μ`
    pub fn weight(&self) -> WeightExpr {
        let sum: i64 = self.a_modes.iter().chain(&self.astar_modes).map(|&x| x as i64).sum();
        let k = self.k() as i64;
        let t = self.t() as i64;
        WeightExpr::new(sum + k, t - k)
    }

    /// Twice the weight at μ = 1/2. It is a μ-independent grading that every mode
    /// respects, positive on everything except the vacuum.
    pub fn level2(&self) -> u64 {
        self.a_modes.iter().chain(&self.astar_modes).map(|&x| 2 * x as u64 + 1).sum()
    }

    pub fn count_a(&self, m: u32) -> usize {
        self.a_modes.iter().filter(|&&x| x == m).count()
    }

    pub fn count_astar(&self, n: u32) -> usize {
        self.astar_modes.iter().filter(|&&x| x == n).count()
    }

    pub fn with_a(&self, m: u32) -> Monomial {
        let mut a = self.a_modes.clone();
        let pos = a.partition_point(|&x| x > m);
        a.insert(pos, m);
        Monomial { a_modes: a, astar_modes: self.astar_modes.clone() }
    }

    pub fn with_astar(&self, n: u32) -> Monomial {
        let mut s = self.astar_modes.clone();
        let pos = s.partition_point(|&x| x > n);
        s.insert(pos, n);
        Monomial { a_modes: self.a_modes.clone(), astar_modes: s }
    }

    pub fn without_a(&self, m: u32) -> Option<Monomial> {
        let pos = self.a_modes.iter().position(|&x| x == m)?;
        let mut a = self.a_modes.clone();
        a.remove(pos);
        Some(Monomial { a_modes: a, astar_modes: self.astar_modes.clone() })
    }

    pub fn without_astar(&self, n: u32) -> Option<Monomial> {
        let pos = self.astar_modes.iter().position(|&x| x == n)?;
        let mut s = self.astar_modes.clone();
        s.remove(pos);
        Some(Monomial { a_modes: self.a_modes.clone(), astar_modes: s })
    }

    pub fn product(&self, other: &Monomial) -> Monomial {
        let mut a = self.a_modes.clone();
        a.extend_from_slice(&other.a_modes);
        let mut s = self.astar_modes.clone();
        s.extend_from_slice(&other.astar_modes);
        Monomial::new(a, s)
    }
}

impl Ord for Monomial {
    /// Canonical order: by μ-independent level, then words with more/larger
    /// `a` factors first, then the `a*` word.
    fn cmp(&self, other: &Self) -> Ordering {
        self.level2()
            .cmp(&other.level2())
            .then_with(|| Reverse(&self.a_modes).cmp(&Reverse(&other.a_modes)))
            .then_with(|| self.astar_modes.cmp(&other.astar_modes))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &m in &self.a_modes {
            write!(f, "a({})", -(m as i64) - 1)?;
        }
        for &n in &self.astar_modes {
            write!(f, "a*({})", -(n as i64))?;
        }
        f.write_str("|0>")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl serde::Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
