mod eval;
mod report;
mod suites;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use weylflow::exactmath::{GaussRat, Rat};
use weylflow::fock::{parse_state, ModeWindow, State, TruncConfig};
use weylflow::grading::{classify, region_csv, GridSpec, RegionMap};
use weylflow::modes::{central_charge, ModeEngine};
use weylflow::tensor::tensor_central_charge;
use weylflow::zhu::{zhu_report, CheckLevel};

use crate::report::{CheckLine, RunReport};
use crate::suites::{Suite, SuiteArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Overflow(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Overflow(_) => 3,
        }
    }
}

#[derive(Parser)]
#[command(name = "weylflow", version, about = "Exact computations on the conformal flow of the Weyl vertex algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one μ or a grid of μ values.
    Classify(ClassifyArgs),
    /// Run an exact-equality suite.
    Verify(VerifyArgs),
    /// Compute a truncated Zhu algebra certificate.
    Zhu(ZhuArgs),
    /// Apply modes to a state.
    Eval(EvalArgs),
    /// Central charge of one μ, or of a tensor product when repeated.
    CentralCharge(CentralChargeArgs),
    /// Render the classification of the μ-plane.
    RegionMap(RegionMapArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "point")]
struct Point {
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<GaussRat>,
    /// `reLo:reHi:step,imLo:imHi:step`
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    point: Point,
    #[arg(long)]
    json: bool,
    #[arg(long, conflicts_with = "svg")]
    csv: bool,
    #[arg(long)]
    svg: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    mu: GaussRat,
    #[arg(long, default_value = "3", allow_hyphen_values = true)]
    degcap: Rat,
    /// `lo:hi`
    #[arg(long, default_value = "-3:3", allow_hyphen_values = true)]
    modewindow: ModeWindow,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ZhuArgs {
    #[arg(long, allow_hyphen_values = true)]
    mu: GaussRat,
    #[arg(long, default_value = "4", allow_hyphen_values = true)]
    degcap: Rat,
    #[arg(long, default_value = "2", allow_hyphen_values = true)]
    reportcap: Rat,
    /// Defaults to `degcap - 1`.
    #[arg(long, allow_hyphen_values = true)]
    pairbudget: Option<Rat>,
    /// Defaults to a symmetric window of radius `ceil(degcap)`.
    #[arg(long, allow_hyphen_values = true)]
    modewindow: Option<ModeWindow>,
    /// Also run the identity checks.
    #[arg(long)]
    checks: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    expr: String,
    /// Modes applied left to right: `a(n)`, `a*(n)`, `L(n)`, `beta(n)`, `D`.
    #[arg(long, allow_hyphen_values = true)]
    apply: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<GaussRat>,
    /// Fail with exit code 3 when an intermediate state leaves `Re(weight) <= degcap`.
    #[arg(long, requires = "mu", allow_hyphen_values = true)]
    degcap: Option<Rat>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CentralChargeArgs {
    #[arg(long, required = true, allow_hyphen_values = true)]
    mu: Vec<GaussRat>,
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RegionMapArgs {
    /// Cells per unit length on the standard window.
    #[arg(long, default_value_t = 16)]
    n: usize,
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<GridSpec>,
    #[arg(long, conflicts_with = "svg")]
    csv: bool,
    #[arg(long)]
    svg: bool,
}

/// What a command prints and how it exits.
struct Outcome {
    stdout: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Classify(a) => cmd_classify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Zhu(a) => cmd_zhu(a),
        Command::Eval(a) => cmd_eval(a),
        Command::CentralCharge(a) => cmd_central_charge(a),
        Command::RegionMap(a) => cmd_region_map(a),
    }
}

fn finish(mut report: RunReport, started: Instant, json: bool, text: String) -> Outcome {
    report.timing = started.elapsed();
    let passed = report.passed();
    let stdout = if json { format!("{}\n", report.json()) } else { format!("{text}{}", report.text()) };
    Outcome { stdout, passed }
}

fn cmd_classify(a: ClassifyArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    if let Some(mu) = a.point.mu {
        let class = classify(&mu);
        let c = central_charge(&mu);
        let mut report = RunReport::new("classify").param("mu", &mu);
        report.results = json!({
            "tag": class.tag,
            "subcase": class.subcase,
            "clause": class.clause,
            "omegaDescription": class.omega_description,
            "centralCharge": c.to_string(),
        });
        let text = format!(
            "mu = {mu}: {} ({}, clause {}), vacuum space {}, c = {c}\n",
            class.tag,
            class.subcase,
            json!(class.clause).as_str().unwrap_or_default(),
            class.omega_description
        );
        return Ok(if a.json { finish(report, started, true, text) } else { Outcome { stdout: text, passed: true } });
    }
    let grid = a.point.grid.expect("clap enforces one of --mu/--grid");
    if a.svg {
        let map = RegionMap::from_grid(&grid).map_err(|e| CliError::Usage(e.to_string()))?;
        return Ok(Outcome { stdout: map.svg(), passed: true });
    }
    let rows = grid.classify();
    if a.json {
        let mut report = RunReport::new("classify").param(
            "grid",
            format!("{}:{}:{},{}:{}:{}", grid.re.lo, grid.re.hi, grid.re.step, grid.im.lo, grid.im.hi, grid.im.step),
        );
        report.results = json!(rows
            .iter()
            .map(|(mu, c)| json!({ "mu": mu.to_string(), "tag": c.tag, "subcase": c.subcase }))
            .collect::<Vec<_>>());
        return Ok(finish(report, started, true, String::new()));
    }
    Ok(Outcome { stdout: region_csv(&rows), passed: true })
}

fn cmd_verify(a: VerifyArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let mut report = RunReport::new("verify")
        .param("suite", a.suite.to_possible_value().expect("no skipped suites").get_name())
        .param("mu", &a.mu)
        .param("degcap", &a.degcap)
        .param("modewindow", a.modewindow);
    let args = SuiteArgs { mu: a.mu, deg_cap: a.degcap, window: a.modewindow };
    suites::run(a.suite, &args, &mut report)?;
    Ok(finish(report, started, a.json, String::new()))
}

fn cmd_zhu(a: ZhuArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let window = match a.modewindow {
        Some(w) => w,
        None => {
            let r = a.degcap.ceil().try_into().map_err(|_| CliError::Usage("degcap too large".into()))?;
            ModeWindow::symmetric(r)
        }
    };
    let cfg = match a.pairbudget {
        Some(b) => TruncConfig::new(a.degcap.clone(), b, window),
        None => TruncConfig::with_default_budget(a.degcap.clone(), window),
    }?;
    let level = if a.checks { CheckLevel::Full } else { CheckLevel::None };
    let r = zhu_report(&a.mu, &cfg, &a.reportcap, level)?;
    let mut report = RunReport::new("zhu")
        .param("mu", &a.mu)
        .param("degcap", &cfg.deg_cap)
        .param("pairbudget", &cfg.pair_budget)
        .param("reportcap", &a.reportcap)
        .param("modewindow", window);
    for c in &r.checks {
        report.check_outcomes.push(CheckLine::from_witness(&c.name, c.witnesses.first().cloned(), || {
            format!(
                "weylflow zhu --mu \"{}\" --degcap {} --pairbudget {} --reportcap {} --modewindow {} --checks --json",
                a.mu, cfg.deg_cap, cfg.pair_budget, a.reportcap, window
            )
        }));
    }
    let mut text = format!("dimUpperBound = {}\n", r.dim_upper_bound);
    text.push_str(&format!(
        "V0 dim {}, O rank {}/{}, C rank {}/{}, C-quotient dim {}\n",
        r.v0_dim, r.o_rank, r.o_generators, r.c_rank, r.c_generators, r.c_quotient_dim
    ));
    for l in &r.level_dims {
        text.push_str(&format!("  weight {}: {}\n", l.level, l.dim));
    }
    if let Some(w) = r.weyl_relation {
        text.push_str(&format!("Weyl relation [a(-1)1, a*(0)1]_* = 1 holds: {w}\n"));
    }
    report.results = serde_json::to_value(&r).expect("report serializes");
    Ok(finish(report, started, a.json, text))
}

fn cmd_eval(a: EvalArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let parse = |what: &str, e: weylflow::exactmath::ParseError| CliError::Usage(format!("{what}: {e}"));
    let mut state: State = parse_state(&a.expr).map_err(|e| parse("--expr", e))?;
    let ops = eval::parse_modes(&a.apply).map_err(|e| parse("--apply", e))?;
    if a.mu.is_none() && ops.iter().any(|op| op.needs_mu()) {
        return Err(CliError::Usage("L(n) needs --mu".into()));
    }
    let engine =
        a.degcap.as_ref().map(|cap| ModeEngine::with_cap(a.mu.clone().expect("clap requires --mu"), cap.clone()));
    for op in &ops {
        if let Some(engine) = &engine {
            engine.check(&state).map_err(|e| CliError::Overflow(e.to_string()))?;
        }
        state = op.apply(a.mu.as_ref(), &state);
    }
    if let Some(engine) = &engine {
        engine.check(&state).map_err(|e| CliError::Overflow(e.to_string()))?;
    }
    if a.json {
        let mut report = RunReport::new("eval").param("expr", &a.expr).param("apply", &a.apply);
        if let Some(mu) = &a.mu {
            report = report.param("mu", mu);
        }
        report.results = json!({ "state": state.to_string(), "terms": state.to_json_terms() });
        return Ok(finish(report, started, true, String::new()));
    }
    Ok(Outcome { stdout: format!("{state}\n"), passed: true })
}

fn cmd_central_charge(a: CentralChargeArgs) -> Result<Outcome, CliError> {
    let started = Instant::now();
    let total = tensor_central_charge(&a.mu);
    if a.csv {
        let mut out = String::from("mu,c\n");
        for mu in &a.mu {
            out.push_str(&format!("{mu},{}\n", central_charge(mu)));
        }
        if a.mu.len() > 1 {
            out.push_str(&format!("total,{total}\n"));
        }
        return Ok(Outcome { stdout: out, passed: true });
    }
    if a.json {
        let mut report = RunReport::new("central-charge")
            .param("mu", a.mu.iter().map(ToString::to_string).collect::<Vec<_>>().join(";"));
        report.results = json!({
            "factors": a.mu.iter().map(|mu| json!({ "mu": mu.to_string(), "c": central_charge(mu).to_string() })).collect::<Vec<_>>(),
            "total": total.to_string(),
        });
        return Ok(finish(report, started, true, String::new()));
    }
    Ok(Outcome { stdout: format!("c = {total}\n"), passed: true })
}

fn cmd_region_map(a: RegionMapArgs) -> Result<Outcome, CliError> {
    if a.csv {
        let rows = match &a.grid {
            Some(g) => g.classify(),
            None => {
                let step = Rat::new(1, a.n.max(1) as i64);
                let grid = format!("-1/2:3/2:{step},-1:1:{step}");
                grid.parse::<GridSpec>().map_err(|e| CliError::Usage(e.to_string()))?.classify()
            }
        };
        return Ok(Outcome { stdout: region_csv(&rows), passed: true });
    }
    let map = match &a.grid {
        Some(g) => RegionMap::from_grid(g).map_err(|e| CliError::Usage(e.to_string()))?,
        None => RegionMap::standard(a.n.max(1)),
    };
    Ok(Outcome { stdout: map.svg(), passed: true })
}
