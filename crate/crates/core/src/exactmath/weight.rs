use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use super::{GaussRat, Rat};

/// A weight `int_part + mu_part·μ`, kept symbolic in μ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct WeightExpr {
    pub int_part: i64,
    pub mu_part: i64,
}

impl WeightExpr {
    pub const ZERO: WeightExpr = WeightExpr { int_part: 0, mu_part: 0 };

    pub fn new(int_part: i64, mu_part: i64) -> Self {
        WeightExpr { int_part, mu_part }
    }

    pub fn constant(n: i64) -> Self {
        WeightExpr::new(n, 0)
    }

    pub fn evaluate(&self, mu: &GaussRat) -> GaussRat {
        &GaussRat::from_int(self.int_part) + &mu.scale(&Rat::from(self.mu_part))
    }

    pub fn re_at(&self, mu: &GaussRat) -> Rat {
        Rat::from(self.int_part) + &mu.re * &Rat::from(self.mu_part)
    }
}

impl Add for WeightExpr {
    type Output = WeightExpr;
    fn add(self, rhs: WeightExpr) -> WeightExpr {
        WeightExpr::new(self.int_part + rhs.int_part, self.mu_part + rhs.mu_part)
    }
}

impl Sub for WeightExpr {
    type Output = WeightExpr;
    fn sub(self, rhs: WeightExpr) -> WeightExpr {
        WeightExpr::new(self.int_part - rhs.int_part, self.mu_part - rhs.mu_part)
    }
}

impl Neg for WeightExpr {
    type Output = WeightExpr;
    fn neg(self) -> WeightExpr {
        WeightExpr::new(-self.int_part, -self.mu_part)
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.int_part, self.mu_part) {
            (n, 0) => write!(f, "{n}"),
            (0, d) => write!(f, "{d}mu"),
            (n, d) if d < 0 => write!(f, "{n}{d}mu"),
            (n, d) => write!(f, "{n}+{d}mu"),
        }
    }
}
