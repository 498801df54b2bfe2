use serde::Serialize;

use super::checks::{
    budget_profile, d_plus_l, filtration_containment, gr_commutativity, graded_dimension, kernel_containment,
    monotonicity, prop_iii, prop_v, star_gate, weyl_relation, CheckOutcome,
};
use super::context::{ZhuContext, ZhuError};
use super::quotient::{zhu_quotient, LevelDim, StarEntry, ZhuQuotient};
use crate::exactmath::{GaussRat, Rat};
use crate::fock::{Monomial, TruncConfig};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BudgetStep {
    pub pair_budget: Rat,
    pub dim_upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ZhuReport {
    pub mu: GaussRat,
    pub deg_cap: Rat,
    pub pair_budget: Rat,
    pub report_cap: Rat,
    pub dim_upper_bound: usize,
    pub v0_dim: usize,
    pub c_quotient_dim: usize,
    pub repr_basis: Vec<Monomial>,
    pub level_dims: Vec<LevelDim>,
    pub star_table: Vec<StarEntry>,
    pub o_generators: usize,
    pub o_rank: usize,
    pub c_generators: usize,
    pub c_rank: usize,
    pub max_residue_terms: usize,
    pub budget_profile: Vec<BudgetStep>,
    /// `None` when `a(-1)1` does not have integer weight.
    pub weyl_relation: Option<bool>,
    pub checks: Vec<CheckOutcome>,
}

impl ZhuReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Which identity checks to run alongside the quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckLevel {
    None,
    Full,
}

/// Builds both spans at μ and assembles the quotient, its star table and (optionally)
/// the identity checks.
pub fn zhu_report(
    mu: &GaussRat,
    cfg: &TruncConfig,
    report_cap: &Rat,
    level: CheckLevel,
) -> Result<ZhuReport, ZhuError> {
    let mut ctx = ZhuContext::new(mu.clone(), cfg.clone())?;
    ctx.build_o_span()?;
    ctx.build_c_span()?;
    let q = zhu_quotient(&ctx, report_cap)?;
    let checks = match level {
        CheckLevel::None => Vec::new(),
        CheckLevel::Full => run_checks(&ctx, &q)?,
    };
    assemble(&ctx, q, checks)
}

pub fn run_checks(ctx: &ZhuContext, q: &ZhuQuotient) -> Result<Vec<CheckOutcome>, ZhuError> {
    let (v1, v2) = prop_v(ctx, &q.report_cap, &ctx.cfg().deg_cap)?;
    Ok(vec![
        star_gate(ctx)?,
        filtration_containment(ctx, q)?,
        gr_commutativity(ctx, q)?,
        d_plus_l(ctx, &q.report_cap)?,
        prop_iii(ctx)?,
        v1,
        v2,
        kernel_containment(ctx)?,
        monotonicity(ctx, &q.report_cap),
        graded_dimension(q),
    ])
}

fn assemble(ctx: &ZhuContext, q: ZhuQuotient, checks: Vec<CheckOutcome>) -> Result<ZhuReport, ZhuError> {
    let cfg = ctx.cfg();
    Ok(ZhuReport {
        mu: ctx.mu().clone(),
        deg_cap: cfg.deg_cap.clone(),
        pair_budget: cfg.pair_budget.clone(),
        budget_profile: budget_profile(ctx, &q.report_cap)
            .into_iter()
            .map(|(pair_budget, dim_upper_bound)| BudgetStep { pair_budget, dim_upper_bound })
            .collect(),
        report_cap: q.report_cap,
        dim_upper_bound: q.dim_upper_bound,
        v0_dim: ctx.v0().len(),
        c_quotient_dim: ctx.c_quotient_dim(),
        repr_basis: q.repr_basis,
        level_dims: q.level_dims,
        star_table: q.star_table,
        o_generators: ctx.o_generators(),
        o_rank: ctx.o_span().rank(),
        c_generators: ctx.c_generators(),
        c_rank: ctx.c_span().rank(),
        max_residue_terms: ctx.max_residue_terms(),
        weyl_relation: weyl_relation(ctx)?,
        checks,
    })
}
