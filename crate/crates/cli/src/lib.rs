//! Command-line front end for `fuzzy_prior`.
//!
//! Functions are read from TOML documents ([`spec::FunctionSpec`]); curves
//! are written as CSV and summaries as TOML ([`output`]).

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod output;
pub mod spec;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use fuzzy_prior::{
    calibrate_a2zero, calibrate_b2, core, fuzzy_update, gamma_cut, is_convex_fuzzy, is_crisp,
    membership_to_prior, prior_to_membership, reproduce_figure1, risk, support, uniqueness_report,
    Density, LossParams, Membership, Regime,
};

pub use error::CliError;
use output::{Curve, Report};
use spec::FunctionSpec;

/// Default cut levels: 0.1, 0.2, ..., 0.9, 1.0.
pub const DEFAULT_GAMMAS: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

#[derive(Debug, Parser)]
#[command(
    name = "fuzzy-prior",
    version,
    about = "Convert between prior densities and fuzzy memberships"
)]
pub struct Cli {
    /// Sample count for named families (odd, >= 3; default 2001).
    #[arg(long, global = true, value_name = "N")]
    pub grid: Option<usize>,
    /// Write the curve here (a directory for `figure1`); the summary then goes to stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Tolerance for crispness and monotonicity checks.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "X")]
    pub tol: f64,
    /// Comma-separated cut levels in [0, 1].
    #[arg(long, global = true, value_delimiter = ',', value_name = "LIST")]
    pub gamma: Option<Vec<f64>>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Optimal membership for a prior: PRIOR A1 A2 B1 B2.
    Convert {
        prior: PathBuf,
        #[arg(num_args = 4, allow_negative_numbers = true, value_names = ["A1", "A2", "B1", "B2"])]
        params: Vec<f64>,
    },
    /// Prior yielding a membership: MEMBERSHIP A1 A2 B1 [B2], or MEMBERSHIP --a2zero R1.
    /// Without B2 it is calibrated so the prior integrates to 1.
    Invert {
        membership: PathBuf,
        #[arg(num_args = 1..=4, allow_negative_numbers = true, value_name = "PARAM")]
        params: Vec<f64>,
        /// Treat the single parameter as the crisp rate r1 of the a2 = 0 loss.
        #[arg(long)]
        a2zero: bool,
    },
    /// Bayesian update of a membership: MEMBERSHIP LIKELIHOOD A1 A2 B1 [B2].
    Update {
        membership: PathBuf,
        likelihood: PathBuf,
        #[arg(num_args = 3..=4, allow_negative_numbers = true, value_name = "PARAM")]
        params: Vec<f64>,
    },
    /// Recompute the example membership, its calibration constants and four priors.
    Figure1,
    /// Cut table, core, support, crispness and convexity of a membership.
    Cuts { membership: PathBuf },
    /// Expected loss of a membership under a prior, against the optimum.
    Risk {
        membership: PathBuf,
        prior: PathBuf,
        #[arg(num_args = 4, allow_negative_numbers = true, value_names = ["A1", "A2", "B1", "B2"])]
        params: Vec<f64>,
    },
}

/// Parsed primary input with its effective sample count.
struct Input {
    spec: FunctionSpec,
    n: usize,
}

impl Input {
    fn primary(path: &Path, grid: Option<usize>) -> Result<Self, CliError> {
        let spec = FunctionSpec::load(path)?;
        let n = spec.resolve_n(grid)?;
        Ok(Input { spec, n })
    }

    /// A further input sampled like `self`, on the same domain.
    fn secondary(&self, path: &Path) -> Result<FunctionSpec, CliError> {
        let spec = FunctionSpec::load(path)?;
        spec.resolve_n(Some(self.n))
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        if spec.domain() != self.spec.domain() {
            let (a, b) = (self.spec.domain(), spec.domain());
            return Err(CliError::Validation(format!(
                "{}: domain [{}, {}] differs from [{}, {}]",
                path.display(),
                b.lo(),
                b.hi(),
                a.lo(),
                a.hi()
            )));
        }
        Ok(spec)
    }
}

fn loss_params(v: &[f64]) -> Result<LossParams, CliError> {
    LossParams::new(v[0], v[1], v[2], v[3]).map_err(|e| CliError::Validation(e.to_string()))
}

/// Loss from three parameters (b2 calibrated against `m`) or four.
fn loss_for(v: &[f64], m: &Membership, report: &mut Report) -> Result<LossParams, CliError> {
    let p = match v.len() {
        3 => {
            let cal = calibrate_b2(v[0], v[1], v[2], m)?;
            report
                .real("c1", cal.constants.c1)
                .real("c2", cal.constants.c2)
                .real("b1_max", cal.b1_max)
                .flag("b2_calibrated", true);
            cal.params
        }
        4 => {
            report.flag("b2_calibrated", false);
            loss_params(v)?
        }
        k => {
            return Err(CliError::Validation(format!(
                "expected A1 A2 B1 [B2], got {k} parameters"
            )))
        }
    };
    report
        .real("a1", p.a1())
        .real("a2", p.a2())
        .real("b1", p.b1())
        .real("b2", p.b2());
    Ok(p)
}

fn gammas(cli: &Cli) -> Result<Vec<f64>, CliError> {
    let list = cli.gamma.clone().unwrap_or_else(|| DEFAULT_GAMMAS.to_vec());
    if list.is_empty() {
        return Err(CliError::Validation("--gamma: empty list".into()));
    }
    if let Some(g) = list.iter().find(|g| !(0.0..=1.0).contains(*g)) {
        return Err(CliError::Validation(format!(
            "--gamma: {g} is outside [0, 1]"
        )));
    }
    Ok(list)
}

fn cut_table(report: &mut Report, m: &Membership, gammas: &[f64]) -> Result<(), CliError> {
    for &g in gammas {
        let cut = gamma_cut(m, g)?;
        report
            .table("cuts")
            .real("gamma", g)
            .int("components", cut.components())
            .real("measure", cut.measure())
            .cut("intervals", &cut);
    }
    Ok(())
}

/// Whether membership is a nondecreasing function of density, up to `tol`.
fn monotone_link(prior: &Density, m: &Membership, tol: f64) -> bool {
    let mut pairs: Vec<(f64, f64)> = prior
        .values()
        .iter()
        .copied()
        .zip(m.values().iter().copied())
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pairs.windows(2).all(|w| w[1].1 >= w[0].1 - tol)
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::Unique => "unique",
        Regime::Family => "family",
        Regime::Boundary => "boundary",
    }
}

fn uniqueness(report: &mut Report, m: &Membership) {
    let u = uniqueness_report(m);
    report
        .real("membership_min", u.min)
        .real("membership_max", u.max)
        .flag("strictly_inside", u.strictly_inside)
        .real("zero_measure", u.zero_measure)
        .real("one_measure", u.one_measure)
        .text("regime", regime_name(u.regime));
}

/// Sends a curve and its summary to their destinations: with `--out` the
/// curve goes to the file and the summary to stdout, otherwise the curve
/// goes to stdout and the summary to stderr.
fn emit(
    cli: &Cli,
    curve: &Curve,
    report: &Report,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, curve.to_csv())?;
            out.write_all(report.finish().as_bytes())?;
        }
        None => {
            out.write_all(curve.to_csv().as_bytes())?;
            err.write_all(report.finish().as_bytes())?;
        }
    }
    Ok(())
}

/// Summary-only commands print to stdout, or to the `--out` file.
fn emit_report(cli: &Cli, report: &Report, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, report.finish())?,
        None => out.write_all(report.finish().as_bytes())?,
    }
    Ok(())
}

fn convert(
    cli: &Cli,
    prior: &Path,
    params: &[f64],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let input = Input::primary(prior, cli.grid)?;
    let p = loss_params(params)?;
    let gammas = gammas(cli)?;
    let density = input.spec.density(input.n)?;
    let m = prior_to_membership(&p, &density);
    let t = p.thresholds();

    let mut report = Report::new();
    report
        .text("command", "convert")
        .int("n", input.n)
        .real("a1", p.a1())
        .real("a2", p.a2())
        .real("b1", p.b1())
        .real("b2", p.b2())
        .real("threshold_lo", t.lo)
        .real("threshold_hi", t.hi)
        .real("risk", risk(&p, &m, &density)?)
        .flag("monotone_link", monotone_link(&density, &m, cli.tol));
    cut_table(&mut report, &m, &gammas)?;
    emit(
        cli,
        &Curve::from_grid("membership", m.grid()),
        &report,
        out,
        err,
    )
}

fn invert(
    cli: &Cli,
    path: &Path,
    params: &[f64],
    a2zero: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let input = Input::primary(path, cli.grid)?;
    let m = input.spec.membership(input.n)?;
    let mut report = Report::new();
    report.text("command", "invert").int("n", input.n);
    let prior = if a2zero {
        let [r1] = params else {
            return Err(CliError::Validation(format!(
                "--a2zero takes exactly one parameter R1, got {}",
                params.len()
            )));
        };
        let cal = calibrate_a2zero(*r1, &m)?;
        report
            .real("r1", cal.rates.r1())
            .real("r2", cal.rates.r2())
            .real("r1_max", 1.0 / m.grid().domain().length())
            .real("a1", cal.params.a1())
            .real("a2", cal.params.a2())
            .real("b1", cal.params.b1())
            .real("b2", cal.params.b2());
        cal.prior
    } else {
        if params.len() < 3 {
            return Err(CliError::Validation(format!(
                "expected A1 A2 B1 [B2] (or --a2zero R1), got {} parameters",
                params.len()
            )));
        }
        let p = loss_for(params, &m, &mut report)?;
        membership_to_prior(&p, &m)?
    };
    let back = prior.grid().integrate();
    let (argmax, max) = prior.grid().argmax();
    report
        .real("prior_integral", back)
        .real("prior_max", max)
        .real("prior_argmax", argmax);
    uniqueness(&mut report, &m);
    emit(
        cli,
        &Curve::from_grid("prior", prior.grid()),
        &report,
        out,
        err,
    )
}

fn update(
    cli: &Cli,
    mpath: &Path,
    lpath: &Path,
    params: &[f64],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let input = Input::primary(mpath, cli.grid)?;
    let lik = input.secondary(lpath)?.likelihood(input.n)?;
    let gammas = gammas(cli)?;
    let m = input.spec.membership(input.n)?;
    let mut report = Report::new();
    report.text("command", "update").int("n", input.n);
    let p = loss_for(params, &m, &mut report)?;
    let updated = fuzzy_update(&m, &p, &lik)?;
    let (argmax, max) = updated.grid().argmax();
    report
        .real("updated_max", max)
        .real("updated_argmax", argmax);
    cut_table(&mut report, &updated, &gammas)?;
    emit(
        cli,
        &Curve::from_grid("membership", updated.grid()),
        &report,
        out,
        err,
    )
}

fn cuts(cli: &Cli, path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let input = Input::primary(path, cli.grid)?;
    let gammas = gammas(cli)?;
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(CliError::Validation(format!(
            "--tol: {} must be finite and nonnegative",
            cli.tol
        )));
    }
    let m = input.spec.membership(input.n)?;
    let mut report = Report::new();
    report
        .text("command", "cuts")
        .int("n", input.n)
        .cut("core", &core(&m))
        .cut("support", &support(&m))
        .flag("crisp", is_crisp(&m, cli.tol)?)
        .flag("convex", is_convex_fuzzy(&m));
    uniqueness(&mut report, &m);
    cut_table(&mut report, &m, &gammas)?;
    emit_report(cli, &report, out)
}

fn risk_cmd(
    cli: &Cli,
    mpath: &Path,
    ppath: &Path,
    params: &[f64],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let input = Input::primary(mpath, cli.grid)?;
    let density = input.secondary(ppath)?.density(input.n)?;
    let p = loss_params(params)?;
    let m = input.spec.membership(input.n)?;
    let given = risk(&p, &m, &density)?;
    let best_m = prior_to_membership(&p, &density);
    let best = risk(&p, &best_m, &density)?;
    let mut report = Report::new();
    report
        .text("command", "risk")
        .int("n", input.n)
        .real("risk", given)
        .real("optimal_risk", best)
        .real("excess_risk", given - best)
        .real("distance_to_optimal", m.grid().sup_distance(best_m.grid())?);
    emit_report(cli, &report, out)
}

fn figure1(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let n = match cli.grid {
        Some(n) if n < 3 || n.is_multiple_of(2) => {
            return Err(CliError::Validation(format!(
                "--grid {n} must be odd and at least 3"
            )))
        }
        Some(n) => n,
        None => fuzzy_prior::DEFAULT_GRID_SIZE,
    };
    let fig = reproduce_figure1(n)?;
    let points = fuzzy_prior::gallery::CURVE_POINTS;
    let (argmax, max) = fig.membership.grid().argmax();

    let mut report = Report::new();
    report
        .text("command", "figure1")
        .int("n", n)
        .int("curve_points", points)
        .real("membership_max", max)
        .real("membership_argmax", argmax)
        .real("membership_integral", fig.membership.grid().integrate());
    let order: Vec<String> = fig
        .order_by_max()
        .iter()
        .map(|i| (i + 1).to_string())
        .collect();
    report.text("order_by_max", &order.join(","));
    for row in &fig.a_cases {
        report
            .table("a_cases")
            .real("a1", row.a1)
            .real("a2", row.a2)
            .real("c1", row.constants.c1)
            .real("c2", row.constants.c2)
            .real("b1_max", row.b1_max)
            .real("b1_max_reported", row.b1_max_reported);
    }
    for (k, row) in fig.rows.iter().enumerate() {
        report
            .table("priors")
            .int("index", k + 1)
            .text("label", row.case.label)
            .real("a1", row.case.a1)
            .real("a2", row.case.a2)
            .real("b1", row.case.b1)
            .real("b2", row.b2)
            .real("b2_reported", row.case.b2_expected)
            .real("prior_max", row.prior_max)
            .real("prior_argmax", row.prior_argmax)
            .real("roundtrip_error", row.roundtrip_error);
    }

    if let Some(dir) = &cli.out {
        std::fs::create_dir_all(dir)?;
        let curve = Curve::resampled("membership", fig.membership.grid(), points);
        std::fs::write(dir.join("membership.csv"), curve.to_csv())?;
        for (k, row) in fig.rows.iter().enumerate() {
            let curve = Curve::resampled(&format!("prior_{}", k + 1), row.prior.grid(), points);
            std::fs::write(dir.join(format!("prior_{}.csv", k + 1)), curve.to_csv())?;
        }
        std::fs::write(dir.join("constants.toml"), report.finish())?;
    }
    out.write_all(report.finish().as_bytes())?;
    Ok(())
}

/// Runs a parsed command, writing primary output to `out` and secondary
/// output to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Convert { prior, params } => convert(cli, prior, params, out, err),
        Command::Invert {
            membership,
            params,
            a2zero,
        } => invert(cli, membership, params, *a2zero, out, err),
        Command::Update {
            membership,
            likelihood,
            params,
        } => update(cli, membership, likelihood, params, out, err),
        Command::Figure1 => figure1(cli, out),
        Command::Cuts { membership } => cuts(cli, membership, out),
        Command::Risk {
            membership,
            prior,
            params,
        } => risk_cmd(cli, membership, prior, params, out),
    }
}
