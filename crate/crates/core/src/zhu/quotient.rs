use rayon::prelude::*;
use serde::Serialize;

use super::context::{ZhuContext, ZhuError};
use crate::exactmath::{Rat, SparseVec};
use crate::fock::{Monomial, State};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarEntry {
    pub left: Monomial,
    pub right: Monomial,
    /// Normal form of `left * right` modulo the captured O-span.
    pub product: State,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LevelDim {
    pub level: Rat,
    pub dim: usize,
}

/// The captured quotient `V⁰_{<= reportCap} / O`, with `*` structure constants on its
/// coset representatives.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ZhuQuotient {
    pub report_cap: Rat,
    pub repr_basis: Vec<Monomial>,
    pub dim_upper_bound: usize,
    /// `dim F_k / F_{k-1}` of the associated graded, per integer level `k`.
    pub level_dims: Vec<LevelDim>,
    pub star_table: Vec<StarEntry>,
}

/// Columns of integer weight `<= cap`; columns are sorted by weight, so this is a prefix.
pub(crate) fn low_columns(ctx: &ZhuContext, cap: &Rat) -> usize {
    (0..ctx.v0().len()).take_while(|&i| &ctx.column_weight(i) <= cap).count()
}

pub fn zhu_quotient(ctx: &ZhuContext, report_cap: &Rat) -> Result<ZhuQuotient, ZhuError> {
    let deg_cap = &ctx.cfg().deg_cap;
    if report_cap > &(deg_cap - &Rat::from(2)) {
        return Err(ZhuError::ReportCap { report_cap: report_cap.clone(), deg_cap: deg_cap.clone() });
    }
    let low = low_columns(ctx, report_cap);
    let repr: Vec<usize> = (0..low).filter(|&i| !ctx.o_span().is_pivot(i)).collect();

    let mut level_dims: Vec<LevelDim> = Vec::new();
    for &i in &repr {
        let level = ctx.column_weight(i);
        match level_dims.last_mut() {
            Some(l) if l.level == level => l.dim += 1,
            _ => level_dims.push(LevelDim { level, dim: 1 }),
        }
    }

    let pairs: Vec<(usize, usize)> = repr
        .iter()
        .flat_map(|&i| repr.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| ctx.star_fits(ctx.column(i), ctx.column(j)))
        .collect();
    let star_table = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (x, y) = (ctx.column(i), ctx.column(j));
            let prod = ctx.star(&State::monomial(x.clone()), &State::monomial(y.clone()))?;
            let nf = ctx.normal_form(&prod)?;
            Ok(StarEntry { left: x.clone(), right: y.clone(), product: nf })
        })
        .collect::<Result<Vec<_>, ZhuError>>()?;

    Ok(ZhuQuotient {
        report_cap: report_cap.clone(),
        repr_basis: repr.iter().map(|&i| ctx.column(i).clone()).collect(),
        dim_upper_bound: repr.len(),
        level_dims,
        star_table,
    })
}

impl ZhuQuotient {
    pub fn star_entry(&self, left: &Monomial, right: &Monomial) -> Option<&State> {
        self.star_table.iter().find(|e| &e.left == left && &e.right == right).map(|e| &e.product)
    }
}

impl ZhuContext {
    /// Whether `x * y` stays inside the ambient space: its weight is at most
    /// `|x| + |y|` and its zero-direction power at most the sum of the factors'.
    pub fn star_fits(&self, x: &Monomial, y: &Monomial) -> bool {
        let w = &self.re_weight(x) + &self.re_weight(y);
        w <= self.cfg().deg_cap && self.zero_count(x) + self.zero_count(y) <= self.zero_cap()
    }

    pub fn reduce_o(&self, s: &State) -> Result<SparseVec, ZhuError> {
        Ok(self.o_span().reduce(&self.project(s)?))
    }

    /// The representative of `s + O` supported on non-pivot columns.
    pub fn normal_form(&self, s: &State) -> Result<State, ZhuError> {
        Ok(self.lift(&self.reduce_o(s)?))
    }

    pub fn in_o(&self, s: &State) -> Result<bool, ZhuError> {
        Ok(self.reduce_o(s)?.is_zero())
    }
}
