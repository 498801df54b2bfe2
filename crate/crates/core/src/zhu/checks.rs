use rayon::prelude::*;
use serde::Serialize;

use super::context::{ZhuContext, ZhuError};
use super::products::{generalized_circ, residue_sum, WeightInfo};
use super::quotient::{low_columns, ZhuQuotient};
use crate::exactmath::{Rat, SparseVec};
use crate::fock::{Monomial, State};
use crate::modes::d_op;

const MAX_WITNESSES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub tried: usize,
    pub failures: usize,
    pub witnesses: Vec<String>,
}

impl CheckOutcome {
    fn collect(name: &str, results: Vec<Result<Option<String>, ZhuError>>) -> Result<Self, ZhuError> {
        let tried = results.len();
        let mut witnesses = Vec::new();
        let mut failures = 0;
        for r in results {
            if let Some(w) = r? {
                failures += 1;
                if witnesses.len() < MAX_WITNESSES {
                    witnesses.push(w);
                }
            }
        }
        Ok(CheckOutcome { name: name.to_string(), passed: failures == 0, tried, failures, witnesses })
    }
}

fn mono(m: &Monomial) -> State {
    State::monomial(m.clone())
}

/// Highest weight among the nonzero coordinates of `v`.
fn top_weight(ctx: &ZhuContext, v: &SparseVec) -> Option<Rat> {
    v.leading().map(|i| ctx.column_weight(i))
}

fn below(ctx: &ZhuContext, v: &SparseVec, level: &Rat) -> bool {
    top_weight(ctx, v).map(|w| &w < level).unwrap_or(true)
}

fn repr_pairs(ctx: &ZhuContext, q: &ZhuQuotient) -> Vec<(Monomial, Monomial)> {
    q.repr_basis
        .iter()
        .flat_map(|x| q.repr_basis.iter().map(move |y| (x.clone(), y.clone())))
        .filter(|(x, y)| ctx.star_fits(x, y))
        .collect()
}

/// `F_s * F_t ⊆ F_{s+t}` on the coset representatives.
pub fn filtration_containment(ctx: &ZhuContext, q: &ZhuQuotient) -> Result<CheckOutcome, ZhuError> {
    let results = repr_pairs(ctx, q)
        .par_iter()
        .map(|(x, y)| {
            let level = &ctx.re_weight(x) + &ctx.re_weight(y);
            let v = ctx.project(&ctx.star(&mono(x), &mono(y))?)?;
            let ok = top_weight(ctx, &v).map(|w| w <= level).unwrap_or(true);
            Ok((!ok).then(|| format!("{x} * {y} leaves F_{level}")))
        })
        .collect();
    CheckOutcome::collect("filtration containment", results)
}

/// `x*y - y*x ∈ F_{s+t-1} + O` on the coset representatives.
pub fn gr_commutativity(ctx: &ZhuContext, q: &ZhuQuotient) -> Result<CheckOutcome, ZhuError> {
    let results = repr_pairs(ctx, q)
        .par_iter()
        .map(|(x, y)| {
            let level = &ctx.re_weight(x) + &ctx.re_weight(y);
            let c = &ctx.star(&mono(x), &mono(y))? - &ctx.star(&mono(y), &mono(x))?;
            let r = ctx.reduce_o(&c)?;
            Ok((!below(ctx, &r, &level)).then(|| format!("[{x}, {y}] = {} mod O", ctx.lift(&r))))
        })
        .collect();
    CheckOutcome::collect("gr commutativity", results)
}

/// `(D + L)u ∈ O` for the `V⁰` monomials up to the report cap.
pub fn d_plus_l(ctx: &ZhuContext, report_cap: &Rat) -> Result<CheckOutcome, ZhuError> {
    let low = low_columns(ctx, report_cap);
    let results = (0..low)
        .into_par_iter()
        .map(|i| {
            let u = ctx.column(i);
            let w = u.weight().evaluate(ctx.mu());
            let s = &d_op(&mono(u)) + &mono(u).scaled(&w);
            Ok((!ctx.in_o(&s)?).then(|| format!("(D+L){u} = {s}")))
        })
        .collect();
    CheckOutcome::collect("(D+L)u in O", results)
}

/// `Res (1+z)^{ceil+δ-1+n} / z^{1+δ+m} Y(u,z)v ∈ O` for `m >= n >= 0`, `m <= 2`, on the
/// monomial pairs with `Re(|u|+|v|) + m <= pairBudget`.
pub fn prop_iii(ctx: &ZhuContext) -> Result<CheckOutcome, ZhuError> {
    let budget = &ctx.cfg().pair_budget;
    let amb = ctx.ambient();
    let mut cases = Vec::new();
    for u in amb {
        for v in amb {
            let total = &u.weight().evaluate(ctx.mu()) + &v.weight().evaluate(ctx.mu());
            if !total.is_integer() || ctx.zero_count(u) + ctx.zero_count(v) > ctx.zero_cap() {
                continue;
            }
            for m in 0..=2i64 {
                if &total.re + &Rat::from(m) > *budget {
                    continue;
                }
                for n in 0..=m {
                    cases.push((u, v, m, n));
                }
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|&(u, v, m, n)| {
            let info = ctx.weight_info(u);
            let s = generalized_circ(&mono(u), &info, &mono(v), m, n);
            Ok((!ctx.in_o(&s)?).then(|| format!("u = {u}, v = {v}, m = {m}, n = {n}")))
        })
        .collect();
    CheckOutcome::collect("generalized residues in O", results)
}

/// `V⁰` monomial pairs with each factor up to `each` and total weight up to `total`.
fn v0_pairs(ctx: &ZhuContext, each: &Rat, total: &Rat) -> Vec<(Monomial, Monomial)> {
    let low = low_columns(ctx, each);
    let cols: Vec<&Monomial> = (0..low).map(|i| ctx.column(i)).collect();
    cols.iter()
        .flat_map(|x| cols.iter().map(move |y| ((*x).clone(), (*y).clone())))
        .filter(|(x, y)| ctx.star_fits(x, y) && &(&ctx.re_weight(x) + &ctx.re_weight(y)) <= total)
        .collect()
}

/// `u*v ≡ Res (1+z)^{|v|-1}/z Y(v,z)u` and `u*v - v*u ≡ Res (1+z)^{|u|-1} Y(u,z)v`
/// modulo O, on `V⁰` monomial pairs up to the report cap with total weight at most `total`.
pub fn prop_v(ctx: &ZhuContext, report_cap: &Rat, total: &Rat) -> Result<(CheckOutcome, CheckOutcome), ZhuError> {
    let pairs = v0_pairs(ctx, report_cap, total);
    let star = |x: &Monomial, y: &Monomial| ctx.star(&mono(x), &mono(y));
    let ceil = |m: &Monomial| WeightInfo::of(m.weight().evaluate(ctx.mu())).ceil;
    let first = pairs
        .par_iter()
        .map(|(u, v)| {
            let (rhs, _) = residue_sum(&mono(v), &mono(u), ceil(v) - 1, -1);
            let d = &star(u, v)? - &rhs;
            Ok((!ctx.in_o(&d)?).then(|| format!("u = {u}, v = {v}")))
        })
        .collect();
    let second = pairs
        .par_iter()
        .map(|(u, v)| {
            let (rhs, _) = residue_sum(&mono(u), &mono(v), ceil(u) - 1, 0);
            let d = &(&star(u, v)? - &star(v, u)?) - &rhs;
            Ok((!ctx.in_o(&d)?).then(|| format!("u = {u}, v = {v}")))
        })
        .collect();
    Ok((
        CheckOutcome::collect("u*v against the opposite residue", first)?,
        CheckOutcome::collect("commutator residue", second)?,
    ))
}

/// Every captured C-generator of weight `k <= pairBudget` lies in `F_{k-1} + O`, so it
/// maps to zero in the associated graded.
pub fn kernel_containment(ctx: &ZhuContext) -> Result<CheckOutcome, ZhuError> {
    let budget = &ctx.cfg().pair_budget;
    let gens: Vec<(usize, i64, usize)> = ctx
        .c_generators_list()
        .into_iter()
        .filter(|&(i, n, j)| {
            let w = &(&ctx.re_weight(&ctx.ambient()[i]) + &ctx.re_weight(&ctx.ambient()[j])) - &Rat::from(n + 1);
            &w <= budget
        })
        .collect();
    let results = gens
        .par_iter()
        .map(|&g| {
            let (i, n, j) = g;
            let (u, v) = (&ctx.ambient()[i], &ctx.ambient()[j]);
            let level = &(&ctx.re_weight(u) + &ctx.re_weight(v)) - &Rat::from(n + 1);
            let s = ctx.c_generator_state(g)?;
            let r = ctx.reduce_o(&s)?;
            Ok((!below(ctx, &r, &level)).then(|| format!("({u})_{n} {v} = {} mod O", ctx.lift(&r))))
        })
        .collect();
    CheckOutcome::collect("C(V) in ker f", results)
}

/// `dimUpperBound` after adding the O-generators of each pair weight in turn.
pub fn budget_profile(ctx: &ZhuContext, report_cap: &Rat) -> Vec<(Rat, usize)> {
    let low = low_columns(ctx, report_cap);
    let mut dim = low;
    ctx.o_history()
        .iter()
        .map(|(t, pivots)| {
            dim -= pivots.iter().filter(|&&p| p < low).count();
            (t.clone(), dim)
        })
        .collect()
}

pub fn monotonicity(ctx: &ZhuContext, report_cap: &Rat) -> CheckOutcome {
    let profile = budget_profile(ctx, report_cap);
    let low = low_columns(ctx, report_cap);
    let mut prev = low;
    let mut witnesses = Vec::new();
    for (t, d) in &profile {
        if *d > prev {
            witnesses.push(format!("pairBudget {t}: {d} > {prev}"));
        }
        prev = *d;
    }
    CheckOutcome {
        name: "monotone in pairBudget".into(),
        passed: witnesses.is_empty(),
        tried: profile.len(),
        failures: witnesses.len(),
        witnesses,
    }
}

pub fn graded_dimension(q: &ZhuQuotient) -> CheckOutcome {
    let total: usize = q.level_dims.iter().map(|l| l.dim).sum();
    let ok = total == q.dim_upper_bound;
    CheckOutcome {
        name: "gr dimension".into(),
        passed: ok,
        tried: 1,
        failures: usize::from(!ok),
        witnesses: if ok { vec![] } else { vec![format!("{total} != {}", q.dim_upper_bound)] },
    }
}

/// `δ_{r,0}` gate of `*`: products with a non-integer-weight left factor vanish.
pub fn star_gate(ctx: &ZhuContext) -> Result<CheckOutcome, ZhuError> {
    let amb = ctx.ambient();
    let results = amb
        .par_iter()
        .filter(|u| !ctx.weight_info(u).integral)
        .flat_map_iter(|u| amb.iter().map(move |v| (u, v)))
        .filter(|(u, v)| ctx.star_fits(u, v))
        .map(|(u, v)| {
            let s = ctx.star(&mono(u), &mono(v))?;
            Ok((!s.is_zero()).then(|| format!("{u} * {v} = {s}")))
        })
        .collect();
    CheckOutcome::collect("star gate", results)
}

/// `[a]*[a*] - [a*]*[a] - [1] ∈ O`, the Weyl relation, when both classes are integral.
pub fn weyl_relation(ctx: &ZhuContext) -> Result<Option<bool>, ZhuError> {
    let a = Monomial::a_gen();
    let s = Monomial::astar_gen();
    if !ctx.weight_info(&a).integral || !ctx.star_fits(&a, &s) {
        return Ok(None);
    }
    let c = &(&ctx.star(&mono(&a), &mono(&s))? - &ctx.star(&mono(&s), &mono(&a))?) - &State::vacuum();
    ctx.in_o(&c).map(Some)
}
