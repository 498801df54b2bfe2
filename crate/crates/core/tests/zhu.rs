use weylflow::exactmath::{GaussRat, Rat};
use weylflow::fock::{parse_state, ModeWindow, State, TruncConfig};
use weylflow::zhu::*;

fn st(s: &str) -> State {
    parse_state(s).unwrap()
}

fn cfg(deg: i64, budget: i64, window: i64) -> TruncConfig {
    TruncConfig::new(Rat::from(deg), Rat::from(budget), ModeWindow::symmetric(window)).unwrap()
}

fn built(mu: GaussRat, c: TruncConfig) -> ZhuContext {
    let mut ctx = ZhuContext::new(mu, c).unwrap();
    ctx.build_o_span().unwrap();
    ctx.build_c_span().unwrap();
    ctx
}

#[test]
fn vacuum_circ_vanishes() {
    let ctx = ZhuContext::new(GaussRat::frac(1, 3), cfg(3, 2, 3)).unwrap();
    for v in ["|0>", "a(-1)|0>", "a(-1)a*(0)|0>"] {
        assert!(ctx.circ(&State::vacuum(), &st(v)).unwrap().is_zero());
        assert_eq!(ctx.star(&State::vacuum(), &st(v)).unwrap(), st(v));
    }
}

#[test]
fn circ_examples() {
    let ctx = ZhuContext::new(GaussRat::frac(1, 3), cfg(3, 2, 3)).unwrap();
    let u = st("a*(0)|0>");
    assert_eq!(ctx.circ(&u, &st("a(-1)|0>")).unwrap(), st("a(-1)a*(0)|0>"));
    assert!(ctx.star(&u, &st("a(-1)|0>")).unwrap().is_zero());

    let ctx0 = ZhuContext::new(GaussRat::zero(), cfg(3, 2, 3)).unwrap();
    assert_eq!(ctx0.circ(&st("a(-1)|0>"), &st("a*(0)|0>")).unwrap(), st("a(-2)a*(0)|0> + a(-1)a*(0)|0>"));
}

#[test]
fn weyl_relation_is_exact() {
    let ctx = ZhuContext::new(GaussRat::zero(), cfg(3, 2, 3)).unwrap();
    let a = st("a(-1)|0>");
    let s = st("a*(0)|0>");
    let c = &ctx.star(&a, &s).unwrap() - &ctx.star(&s, &a).unwrap();
    assert_eq!(c, State::vacuum());
}

#[test]
fn inhomogeneous_left_factor_rejected() {
    let ctx = ZhuContext::new(GaussRat::frac(1, 3), cfg(3, 2, 3)).unwrap();
    let err = ctx.circ(&st("a(-1)|0> + a*(0)|0>"), &State::vacuum()).unwrap_err();
    assert!(matches!(err, ZhuError::NotHomogeneous(_)));
}

#[test]
fn outside_strip_refused() {
    for mu in [GaussRat::from_int(2), GaussRat::frac(-1, 2)] {
        assert!(matches!(ZhuContext::new(mu, cfg(3, 2, 3)), Err(ZhuError::OutsideStrip(_))));
    }
}

#[test]
fn report_cap_guard() {
    let ctx = built(GaussRat::frac(1, 3), cfg(3, 2, 3));
    assert!(matches!(zhu_quotient(&ctx, &Rat::from(2)), Err(ZhuError::ReportCap { .. })));
    assert!(zhu_quotient(&ctx, &Rat::one()).is_ok());
}

#[test]
fn o_span_traps_integer_weight_monomial() {
    let ctx = built(GaussRat::frac(1, 3), cfg(3, 2, 3));
    let nf = ctx.normal_form(&st("a(-1)a*(0)|0>")).unwrap();
    assert!(nf.terms().all(|(m, _)| m.is_vacuum()), "normal form {nf}");
    assert!(ctx.in_o(&State::zero()).unwrap());
    assert!(!ctx.in_o(&State::vacuum()).unwrap());
    // non-integer-weight monomials have no V⁰ coordinates
    assert!(ctx.in_o(&st("a*(-1)|0>")).unwrap());
}

#[test]
fn c_span_contains_all_nonvacuum_monomials() {
    let ctx = built(GaussRat::frac(1, 3), cfg(3, 2, 3));
    for m in ctx.v0() {
        let s = State::monomial(m.clone());
        let inside = ctx.c_span().contains(&ctx.project(&s).unwrap());
        assert_eq!(inside, !m.is_vacuum(), "{m}");
    }
    assert_eq!(ctx.c_quotient_dim(), 1);
}

#[test]
fn c_span_at_zero() {
    let ctx = built(GaussRat::zero(), cfg(3, 2, 3));
    let s = st("a(-2)a*(0)|0>");
    assert!(ctx.c_span().contains(&ctx.project(&s).unwrap()));
}

#[test]
fn one_dimensional_at_report_cap_three() {
    for mu in [GaussRat::frac(1, 3), GaussRat::frac(1, 2)] {
        let r = zhu_report(&mu, &cfg(5, 4, 5), &Rat::from(3), CheckLevel::None).unwrap();
        assert_eq!(r.dim_upper_bound, 1, "mu = {mu}");
        assert_eq!(r.repr_basis.len(), 1);
        assert!(r.repr_basis[0].is_vacuum());
    }
}

#[test]
fn zero_contrast_report() {
    let r = zhu_report(&GaussRat::zero(), &cfg(4, 3, 3), &Rat::from(2), CheckLevel::None).unwrap();
    assert!(r.dim_upper_bound >= 3);
    assert_eq!(r.weyl_relation, Some(true));
}

#[test]
fn filtration_example_at_zero() {
    let ctx = built(GaussRat::zero(), cfg(4, 3, 3));
    let u = st("a(-1)a*(0)|0>");
    let p = ctx.star(&u, &u).unwrap();
    assert!(p.terms().all(|(m, _)| ctx.re_weight(m) <= 2));
    let v = st("a(-1)|0>");
    let c = &ctx.star(&u, &v).unwrap() - &ctx.star(&v, &u).unwrap();
    assert!(!c.is_zero());
    let r = ctx.reduce_o(&c).unwrap();
    assert!(r.leading().map(|i| ctx.column_weight(i) < 2).unwrap_or(true));
}

#[test]
fn d_plus_l_on_weight_one() {
    let ctx = built(GaussRat::frac(1, 3), cfg(3, 2, 3));
    let u = st("a(-1)a*(0)|0>");
    let s = &weylflow::modes::d_op(&u) + &u;
    assert!(ctx.in_o(&s).unwrap());
    assert!(weylflow::modes::d_op(&State::vacuum()).is_zero());
}

#[test]
fn residue_sums_terminate() {
    let u = st("a(-1)|0>");
    let v = st("a*(-1)a*(0)|0>");
    let (_, terms) = residue_sum(&u, &v, -1, 0);
    assert!(terms > 0 && terms < 10);
}

#[test]
fn report_json_fields() {
    let r = zhu_report(&GaussRat::frac(1, 3), &cfg(3, 2, 3), &Rat::one(), CheckLevel::Full).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in
        ["mu", "degCap", "pairBudget", "reportCap", "dimUpperBound", "v0Dim", "cQuotientDim", "starTable", "checks"]
    {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["mu"], "1/3");
    assert!(r.all_passed());
}
