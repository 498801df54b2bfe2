use rayon::prelude::*;
use serde_json::json;

use weylflow::exactmath::{GaussRat, Rat};
use weylflow::flow::{brackets_preserved, flow_hom_check, flow_iso};
use weylflow::fock::{basis_by_level, basis_up_to, FockError, ModeWindow, Monomial, State, TruncConfig};
use weylflow::grading::{classify, grading_lemma_scan, omega_test, GradingError, OmegaOutcome, RegionTag};
use weylflow::modes::{commutator_check, expansion_mode_of, mode_of, omega_state, virasoro_bracket_sides, GenMode};
use weylflow::zhu::{zhu_report, CheckLevel, ZhuError};

use crate::report::{CheckLine, RunReport};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Virasoro,
    Modes,
    Flow,
    Grading,
    ZhuProps,
}

pub struct SuiteArgs {
    pub mu: GaussRat,
    pub deg_cap: Rat,
    pub window: ModeWindow,
}

fn quoted(mu: &GaussRat) -> String {
    format!("\"{mu}\"")
}

/// Monomials of `Re(weight) <= cap` at μ; outside the strip, those of the same level.
fn enumerate(mu: &GaussRat, cap: &Rat, window: ModeWindow) -> Result<Vec<Monomial>, FockError> {
    if classify(mu).tag == RegionTag::NotOmegaGenerated {
        Ok(basis_by_level(cap)?.monomials.into_iter().filter(|m| &m.weight().re_at(mu) <= cap).collect())
    } else {
        Ok(basis_up_to(mu, cap, window)?.monomials)
    }
}

pub fn run(suite: Suite, args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    match suite {
        Suite::Virasoro => virasoro(args, report),
        Suite::Modes => modes(args, report),
        Suite::Flow => flow(args, report),
        Suite::Grading => grading(args, report),
        Suite::ZhuProps => zhu_props(args, report),
    }
}

fn virasoro(args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    let mu = &args.mu;
    let basis = enumerate(mu, &args.deg_cap, args.window)?;
    let cases: Vec<(i64, i64, &Monomial)> = basis
        .iter()
        .flat_map(|b| args.window.iter().flat_map(move |m| args.window.iter().map(move |n| (m, n, b))))
        .collect();
    let failures: Vec<(i64, i64, &Monomial)> = cases
        .par_iter()
        .filter(|(m, n, b)| {
            let (l, r) = virasoro_bracket_sides(mu, *m, *n, &State::monomial((*b).clone()));
            l != r
        })
        .copied()
        .collect();
    report.results = json!({ "states": basis.len(), "brackets": cases.len(), "failures": failures.len() });
    let first = failures.first().map(|(m, n, b)| format!("[L({m}), L({n})] on {b}"));
    let repro = failures
        .first()
        .map(|(m, n, b)| format!("weylflow eval --expr \"{b}\" --apply \"L({n}) L({m})\" --mu {}", quoted(mu)));
    report.check_outcomes.push(CheckLine::from_witness("Virasoro relations", first, || repro.unwrap_or_default()));
    Ok(())
}

fn modes(args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    let basis = basis_by_level(&args.deg_cap)?.monomials;
    let cases: Vec<(&Monomial, i64, &Monomial)> =
        basis.iter().flat_map(|v| basis.iter().flat_map(move |w| args.window.iter().map(move |p| (v, p, w)))).collect();
    let mismatch = cases.par_iter().find_map_first(|&(v, p, w)| {
        let (vs, ws) = (State::monomial(v.clone()), State::monomial(w.clone()));
        (mode_of(&vs, p, &ws) != expansion_mode_of(&vs, p, &ws)).then(|| format!("({v})_{p} {w}"))
    });
    report.check_outcomes.push(CheckLine::from_witness("two-path mode agreement", mismatch, || {
        format!("weylflow verify --suite modes --degcap {} --modewindow {}", args.deg_cap, args.window)
    }));

    let gens: Vec<State> = vec![State::monomial(Monomial::a_gen()), State::monomial(Monomial::astar_gen())];
    let mut bad = None;
    'outer: for v in &gens {
        for v2 in &gens {
            for w in basis.iter().take(20) {
                for n in args.window.iter() {
                    for m in args.window.iter() {
                        if !commutator_check(v, v2, n, m, &State::monomial(w.clone())) {
                            bad = Some(format!("[({v})_{n}, ({v2})_{m}] on {w}"));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    report.check_outcomes.push(CheckLine::from_witness("commutator formula", bad, || {
        format!("weylflow verify --suite modes --degcap {} --modewindow {}", args.deg_cap, args.window)
    }));
    let mut gen_bad = None;
    for m in args.window.iter() {
        for n in args.window.iter() {
            let expected = if m + n == 0 { 1 } else { 0 };
            if GenMode::a(m).bracket(&GenMode::astar(n)) != expected {
                gen_bad = Some(format!("[a({m}), a*({n})]"));
            }
        }
    }
    report.check_outcomes.push(CheckLine::from_witness("Weyl relations", gen_bad, String::new));
    report.results = json!({ "states": basis.len(), "modeCases": cases.len() });
    Ok(())
}

fn flow(args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    let mu = &args.mu;
    let flipped = &GaussRat::one() - mu;
    let image = flow_iso(&omega_state(mu));
    let omega_ok = image == omega_state(&flipped);
    report.check_outcomes.push(CheckLine::from_witness(
        format!("F(omega_{mu}) = omega_{flipped}"),
        (!omega_ok).then(|| format!("F(omega) = {image}")),
        || format!("weylflow verify --suite flow --mu {}", quoted(mu)),
    ));

    let basis = basis_by_level(&args.deg_cap)?.monomials;
    let cases: Vec<(&Monomial, &Monomial, i64)> =
        basis.iter().flat_map(|u| basis.iter().flat_map(move |v| args.window.iter().map(move |n| (u, v, n)))).collect();
    let bad = cases.par_iter().find_map_first(|&(u, v, n)| {
        (!flow_hom_check(&State::monomial(u.clone()), &State::monomial(v.clone()), n))
            .then(|| format!("F(({u})_{n} {v})"))
    });
    report.check_outcomes.push(CheckLine::from_witness("F(u_n v) = F(u)_n F(v)", bad, || {
        format!(
            "weylflow verify --suite flow --mu {} --degcap {} --modewindow {}",
            quoted(mu),
            args.deg_cap,
            args.window
        )
    }));

    let mut auto_bad = None;
    for s in -2..=2 {
        for t in [GaussRat::one(), GaussRat::from_int(-2), GaussRat::complex(1, 2, 1, 1)] {
            if !brackets_preserved(s, &t, args.window.lo, args.window.hi).expect("nonzero scale") {
                auto_bad = Some(format!("s = {s}, t = {t}"));
            }
        }
    }
    report.check_outcomes.push(CheckLine::from_witness("spectral flow preserves brackets", auto_bad, String::new));
    report.results = json!({ "omegaImage": image.to_string(), "homomorphismCases": cases.len() });
    Ok(())
}

fn grading(args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    let mu = &args.mu;
    let cfg = TruncConfig::with_default_budget(args.deg_cap.clone(), args.window)?;
    let class = classify(mu);
    let vac = omega_test(mu, &State::vacuum(), &cfg)?;
    let expect_vacuum = class.tag != RegionTag::NotOmegaGenerated;
    let vac_ok = (vac == OmegaOutcome::InOmegaUpToTruncation) == expect_vacuum;
    report.check_outcomes.push(CheckLine::from_witness(
        "vacuum in the vacuum space exactly inside the strip",
        (!vac_ok).then(|| format!("{vac:?}")),
        || format!("weylflow verify --suite grading --mu {} --degcap {}", quoted(mu), args.deg_cap),
    ));
    let mut results = json!({ "tag": class.tag, "vacuumOutcome": vac });
    if expect_vacuum {
        let scan = grading_lemma_scan(mu, &cfg, 3)?;
        let first = scan.counterexamples.first().map(|c| format!("{} on {}", c.word, c.base));
        report.check_outcomes.push(CheckLine::from_witness("grading lemma scan", first, || {
            format!(
                "weylflow verify --suite grading --mu {} --degcap {} --modewindow {}",
                quoted(mu),
                args.deg_cap,
                args.window
            )
        }));
        results["wordsTried"] = json!(scan.words_tried);
        results["nonzero"] = json!(scan.nonzero);
        results["vacuumSpace"] = json!(scan.omega_basis);
    }
    report.results = results;
    Ok(())
}

fn zhu_props(args: &SuiteArgs, report: &mut RunReport) -> Result<(), CliError> {
    let cfg = TruncConfig::with_default_budget(args.deg_cap.clone(), args.window)?;
    let report_cap = &args.deg_cap - &Rat::from(2);
    let report_cap = if report_cap.is_negative() { Rat::zero() } else { report_cap };
    let r = zhu_report(&args.mu, &cfg, &report_cap, CheckLevel::Full)?;
    for c in &r.checks {
        report.check_outcomes.push(CheckLine::from_witness(&c.name, c.witnesses.first().cloned(), || {
            format!(
                "weylflow zhu --mu {} --degcap {} --reportcap {report_cap} --modewindow {} --json",
                quoted(&args.mu),
                args.deg_cap,
                args.window
            )
        }));
    }
    report.results = serde_json::to_value(&r).expect("report serializes");
    Ok(())
}

impl From<FockError> for CliError {
    fn from(e: FockError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GradingError> for CliError {
    fn from(e: GradingError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<ZhuError> for CliError {
    fn from(e: ZhuError) -> Self {
        match e {
            ZhuError::Overflow { .. } => CliError::Overflow(e.to_string()),
            ZhuError::OutsideStrip(ref mu) => CliError::Usage(format!("refusing: {} ({})", e, classify(mu).subcase)),
            other => CliError::Usage(other.to_string()),
        }
    }
}
