use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

use weylflow::exactmath::{GaussRat, Rat};
use weylflow::flow::{flow_hom_check, flow_iso};
use weylflow::fock::{basis_by_level, basis_up_to, ModeWindow, Monomial, State, TruncConfig};
use weylflow::grading::{
    classify, grading_lemma_scan, omega_test, Clause, OmegaOutcome, RegionMap, RegionTag, Subcase,
};
use weylflow::modes::{
    central_charge, expansion_mode_of, mode_of, omega_state, virasoro_bracket_sides, virasoro_mode_exact,
};
use weylflow::tensor::{tensor_central_charge, tensor_classify, tensor_virasoro_check};
use weylflow::zhu::{zhu_report, CheckLevel};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn q(p: i64, d: i64) -> GaussRat {
    GaussRat::frac(p, d)
}

fn c(a: i64, b: i64, cc: i64, d: i64) -> GaussRat {
    GaussRat::complex(a, b, cc, d)
}

fn cfg(deg: i64, budget: i64, window: ModeWindow) -> TruncConfig {
    TruncConfig::new(Rat::from(deg), Rat::from(budget), window).unwrap()
}

fn within(t: Instant, limit: Duration) -> bool {
    t.elapsed() < limit
}

fn central_charges() -> Outcome {
    let t = Instant::now();
    let cases = [(GaussRat::zero(), 2), (q(1, 2), -1), (q(-1, 2), 11), (GaussRat::from_int(2), 26)];
    let bad: Vec<String> = cases
        .iter()
        .filter(|(mu, want)| central_charge(mu) != GaussRat::from_int(*want))
        .map(|(mu, _)| format!("c({mu}) = {}", central_charge(mu)))
        .collect();
    outcome(bad.is_empty() && within(t, Duration::from_secs(1)), format!("{bad:?} in {:?}", t.elapsed()))
}

/// Monomials of `Re(weight at μ) <= cap`. Outside the strip the weights are unbounded
/// below, so the enumeration is limited to the same level.
fn weight_basis(mu: &GaussRat, cap: i64, window: ModeWindow) -> Vec<Monomial> {
    let cap = Rat::from(cap);
    if mu.re.is_negative() || mu.re > 1 {
        basis_by_level(&cap).unwrap().monomials.into_iter().filter(|m| m.weight().re_at(mu) <= cap).collect()
    } else {
        basis_up_to(mu, &cap, window).unwrap().monomials
    }
}

fn virasoro_suite() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for mu in [GaussRat::zero(), q(1, 3), q(1, 2), c(1, 4, 1, 4), q(-1, 2)] {
        let t = Instant::now();
        let basis = weight_basis(&mu, 3, ModeWindow::symmetric(3));
        let mut checked = 0;
        let mut failure = None;
        'outer: for m0 in &basis {
            let s = State::monomial(m0.clone());
            for m in -3..=3 {
                for n in -3..=3 {
                    let (l, r) = virasoro_bracket_sides(&mu, m, n, &s);
                    checked += 1;
                    if l != r {
                        failure = Some(format!("[L({m}), L({n})] on {m0}"));
                        break 'outer;
                    }
                }
            }
        }
        let fast = within(t, Duration::from_secs(60));
        ok &= failure.is_none() && fast;
        details.push(format!(
            "mu={mu}: {checked} brackets {:?}{}",
            t.elapsed(),
            failure.map(|f| format!(" FAIL {f}")).unwrap_or_default()
        ));
    }
    outcome(ok, details.join("; "))
}

fn weight_formula() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for mu in [q(1, 3), q(1, 2), c(1, 4, 1, 4), c(2, 5, 1, 5)] {
        for m in weight_basis(&mu, 4, ModeWindow::symmetric(4)) {
            let s = State::monomial(m.clone());
            n += 1;
            if virasoro_mode_exact(&mu, 0, &s) != s.scaled(&m.weight().evaluate(&mu)) {
                bad.push(format!("{m} at {mu}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{n} monomials, failures {bad:?}"))
}

fn two_paths() -> Outcome {
    let t = Instant::now();
    let basis = basis_by_level(&Rat::from(3)).unwrap().monomials;
    let mut n = 0;
    let mut bad = None;
    'outer: for v in &basis {
        let vs = State::monomial(v.clone());
        for w in &basis {
            let ws = State::monomial(w.clone());
            for p in -4..=4 {
                n += 1;
                if mode_of(&vs, p, &ws) != expansion_mode_of(&vs, p, &ws) {
                    bad = Some(format!("{v} _{p} {w}"));
                    break 'outer;
                }
            }
        }
    }
    outcome(bad.is_none(), format!("{n} cases in {:?}, first mismatch {bad:?}", t.elapsed()))
}

fn flow_isomorphism() -> Outcome {
    let mus = [GaussRat::zero(), q(1, 3), q(1, 2), c(1, 4, 1, 4), GaussRat::from_int(2)];
    let omega_bad: Vec<String> = mus
        .iter()
        .filter(|mu| flow_iso(&omega_state(mu)) != omega_state(&(&GaussRat::one() - *mu)))
        .map(|mu| mu.to_string())
        .collect();
    let basis = basis_by_level(&Rat::from(2)).unwrap().monomials;
    let mut n = 0;
    let mut hom_bad = None;
    'outer: for u in &basis {
        for v in &basis {
            for k in -3..=3 {
                n += 1;
                if !flow_hom_check(&State::monomial(u.clone()), &State::monomial(v.clone()), k) {
                    hom_bad = Some(format!("{u} _{k} {v}"));
                    break 'outer;
                }
            }
        }
    }
    outcome(
        omega_bad.is_empty() && hom_bad.is_none(),
        format!("omega failures {omega_bad:?}; {n} homomorphism cases, first failure {hom_bad:?}"),
    )
}

fn region_classification() -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut expect = |mu: GaussRat, ok: &dyn Fn(&weylflow::grading::RegionClass) -> bool, label: &str| {
        let cl = classify(&mu);
        if !ok(&cl) {
            bad.push(format!("{mu}: expected {label}, got {} {}", cl.tag, cl.subcase));
        }
    };
    expect(q(1, 2), &|c| c.tag == RegionTag::OmegaVoa && c.clause == Clause::FirstHalf, "I(i)");
    expect(q(1, 4), &|c| c.tag == RegionTag::OmegaVoa && c.clause == Clause::FirstHalf, "I(i)");
    expect(q(3, 4), &|c| c.tag == RegionTag::OmegaVoa && c.clause == Clause::SecondHalf, "I(ii)");
    expect(GaussRat::i(), &|c| c.subcase == Subcase::Case3EdgeImag && c.clause == Clause::Strip, "Case 3");
    expect(
        c(1, 4, 1, 2),
        &|c| c.subcase == Subcase::Case4bStripWideIm && c.tag == RegionTag::StripConfOmega,
        "Case 4(b)",
    );
    expect(GaussRat::zero(), &|c| c.subcase == Subcase::Case1Integer && c.clause == Clause::Strip, "Case 1");
    for mu in [GaussRat::from_int(2), q(-1, 2)] {
        expect(mu, &|c| c.subcase == Subcase::Case5Outside && c.clause == Clause::Outside, "Case 5 / III");
    }
    let map = RegionMap::standard(16);
    let mut tags: Vec<RegionTag> = map.cells.clone();
    tags.sort();
    tags.dedup();
    let three = tags == vec![RegionTag::OmegaVoa, RegionTag::StripConfOmega, RegionTag::NotOmegaGenerated];
    let svg = map.svg();
    let rects = svg.matches("data-tag=").count();
    let ok = bad.is_empty() && three && rects == map.cells.len() && within(t, Duration::from_secs(5));
    outcome(ok, format!("{bad:?}; map tags {tags:?}, {rects} cells in {:?}", t.elapsed()))
}

fn omega_certificates() -> Outcome {
    let c4 = cfg(4, 3, ModeWindow::symmetric(4));
    let mut bad = Vec::new();
    for mu in [q(1, 3), c(1, 4, 1, 4)] {
        for m in weight_basis(&mu, 3, ModeWindow::symmetric(4)) {
            let passes =
                omega_test(&mu, &State::monomial(m.clone()), &c4).unwrap() == OmegaOutcome::InOmegaUpToTruncation;
            if passes != m.is_vacuum() {
                bad.push(format!("{m} at {mu}: passes = {passes}"));
            }
        }
    }
    let two = GaussRat::from_int(2);
    let witness = OmegaOutcome::Violation { u: Monomial::a_gen(), n: -1 };
    let tried = weight_basis(&two, 3, ModeWindow::symmetric(4));
    for m in &tried {
        let got = omega_test(&two, &State::monomial(m.clone()), &c4).unwrap();
        if got != witness {
            bad.push(format!("{m} at 2: {got:?}"));
        }
    }
    for t in 0..=3u32 {
        let v = State::monomial(Monomial::new(vec![], vec![0; t as usize]));
        if omega_test(&GaussRat::zero(), &v, &c4).unwrap() != OmegaOutcome::InOmegaUpToTruncation {
            bad.push(format!("a*(0)^{t} at 0"));
        }
    }
    outcome(bad.is_empty(), format!("{} states at mu=2, failures {bad:?}", tried.len()))
}

fn zhu_one_dimensional() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for mu in [q(1, 3), q(1, 2), c(1, 4, 1, 4), c(2, 5, 1, 5)] {
        let t = Instant::now();
        let r = zhu_report(&mu, &cfg(4, 3, ModeWindow::symmetric(4)), &Rat::from(2), CheckLevel::None).unwrap();
        let pass = r.dim_upper_bound == 1 && r.c_quotient_dim == 1 && within(t, Duration::from_secs(300));
        ok &= pass;
        details.push(format!(
            "mu={mu}: dimUpperBound {} cQuotientDim {} {:?}",
            r.dim_upper_bound,
            r.c_quotient_dim,
            t.elapsed()
        ));
    }
    outcome(ok, details.join("; "))
}

fn zhu_zero_contrast() -> Outcome {
    let r = zhu_report(&GaussRat::zero(), &cfg(3, 2, ModeWindow::symmetric(3)), &Rat::one(), CheckLevel::None).unwrap();
    let a = Monomial::a_gen();
    let s = Monomial::astar_gen();
    let entry = |x: &Monomial, y: &Monomial| {
        r.star_table.iter().find(|e| &e.left == x && &e.right == y).map(|e| e.product.clone())
    };
    let relation = match (entry(&a, &s), entry(&s, &a)) {
        (Some(x), Some(y)) => &x - &y == State::vacuum(),
        _ => false,
    };
    outcome(
        r.dim_upper_bound >= 3 && relation,
        format!("dimUpperBound {}, [a]*[a*] - [a*]*[a] = [1]: {relation}", r.dim_upper_bound),
    )
}

fn zhu_identities() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for mu in [q(1, 3), GaussRat::zero()] {
        let r = zhu_report(&mu, &cfg(4, 3, ModeWindow::symmetric(3)), &Rat::from(2), CheckLevel::Full).unwrap();
        ok &= r.all_passed() && !r.checks.is_empty();
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        let tried: usize = r.checks.iter().map(|c| c.tried).sum();
        details.push(format!("mu={mu}: {} checks over {tried} cases, failed {failed:?}", r.checks.len()));
    }
    outcome(ok, details.join("; "))
}

fn lemma_scan() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for mu in [q(1, 3), q(1, 2)] {
        let r = grading_lemma_scan(&mu, &cfg(3, 2, ModeWindow::symmetric(3)), 3).unwrap();
        ok &= r.counterexamples.is_empty() && r.nonzero > 0;
        details.push(format!(
            "mu={mu}: {} words, {} nonzero, {} counterexamples",
            r.words_tried,
            r.nonzero,
            r.counterexamples.len()
        ));
    }
    outcome(ok, details.join("; "))
}

fn rank_n() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let component = (-6i64..=10, 1i64..=4).prop_map(|(p, d)| Rat::new(p, d));
    let mu = (component.clone(), component).prop_map(|(re, im)| GaussRat::new(re, im));
    let tuples = prop::collection::vec(mu, 2..=3);
    let mut bad = Vec::new();
    for _ in 0..10 {
        let mus = tuples.new_tree(&mut runner).unwrap().current();
        let sum = mus.iter().fold(GaussRat::zero(), |acc, m| &acc + &central_charge(m));
        if tensor_central_charge(&mus) != sum {
            bad.push(format!("charge {mus:?}"));
        }
        let factor_tags: Vec<RegionTag> = mus.iter().map(|m| classify(m).tag).collect();
        let expected = if factor_tags.iter().all(|t| *t == RegionTag::OmegaVoa) {
            RegionTag::OmegaVoa
        } else if factor_tags.contains(&RegionTag::NotOmegaGenerated) {
            RegionTag::NotOmegaGenerated
        } else {
            RegionTag::StripConfOmega
        };
        if tensor_classify(&mus).map(|c| c.tag) != Some(expected) {
            bad.push(format!("classify {mus:?}"));
        }
    }
    let t = Instant::now();
    let mus = [q(1, 3), c(1, 4, 1, 4)];
    let bracket = tensor_virasoro_check(&mus, &Rat::from(2), ModeWindow::symmetric(3), -3, 3).unwrap();
    outcome(
        bad.is_empty() && bracket.is_none(),
        format!("10 tuples, failures {bad:?}; rank-2 brackets first failure {bracket:?} in {:?}", t.elapsed()),
    )
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("central-charge constants", central_charges),
        ("Virasoro brackets", virasoro_suite),
        ("weight formula", weight_formula),
        ("two-path mode agreement", two_paths),
        ("conformal-flow isomorphism", flow_isomorphism),
        ("region classification", region_classification),
        ("vacuum-space certificates", omega_certificates),
        ("Zhu one-dimensionality", zhu_one_dimensional),
        ("Zhu contrast at mu = 0", zhu_zero_contrast),
        ("Zhu identity suite", zhu_identities),
        ("grading lemma scan", lemma_scan),
        ("rank-n tensor products", rank_n),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
