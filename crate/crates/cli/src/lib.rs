//! Command-line front end for `circle-bundles`.
//!
//! Each subcommand builds a serializable report ([`report`]) and renders it
//! either as aligned text or, with `--json`, as a single JSON document.

pub mod error;
pub mod expr;
pub mod gram;
pub mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use circle_bundles::{
    classify, cohomology, enumerate_primitive, find_spin_euler_class, is_total_space_spin,
    s2_bundle, Error, EulerClass, FiveManifoldType, FourManifold,
};

pub use error::CliError;
use report::{
    BaseReport, BundleReport, OutcomeCount, ResultReport, S2BundleReport, SpinClassReport,
    SurveyReport,
};

/// Exit code for a non-primitive Euler class passed to `classify`.
pub const EXIT_NON_PRIMITIVE: i32 = 3;

/// Circle bundles over simply-connected 4-manifolds.
#[derive(Debug, Parser)]
#[command(name = "cbundle", version)]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homeomorphism type of the total space for a primitive Euler class.
    Classify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        alpha: AlphaArg,
    },
    /// Integral cohomology and low homotopy of the total space.
    Cohomology {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        alpha: AlphaArg,
    },
    /// Tabulate outcomes over all primitive classes with |coordinates| <= bound.
    Survey {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
    },
    /// Circle bundle over S^2 with Euler number P.
    #[command(name = "s2-bundle")]
    S2Bundle {
        #[arg(allow_hyphen_values = true)]
        p: i64,
    },
    /// A primitive Euler class whose total space is a connected sum of S^2 x S^3.
    #[command(name = "spin-class")]
    SpinClass {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Manifold expression, e.g. "CP2 # -CP2" or "3*S2xS2 # 2*-E8".
    #[arg(allow_hyphen_values = true)]
    pub expr: Option<String>,

    /// Read the intersection form from a Gram-matrix file instead.
    #[arg(long, value_name = "FILE", conflicts_with = "expr")]
    pub gram: Option<PathBuf>,
}

impl Source {
    pub fn expression(expr: &str) -> Self {
        Self {
            expr: Some(expr.to_string()),
            gram: None,
        }
    }

    pub fn load(&self) -> Result<FourManifold, CliError> {
        match (&self.expr, &self.gram) {
            (Some(e), None) => expr::manifold_from_expression(e),
            (None, Some(path)) => gram::read_gram_file(path),
            _ => Err(CliError::Usage(
                "give either a manifold expression or --gram <FILE>".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct AlphaArg {
    /// Euler class coordinates, comma separated, e.g. 1,0. A bare 0 is the zero class.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
}

pub fn parse_alpha(text: &str, rank: usize) -> Result<EulerClass, CliError> {
    let coords: Vec<i64> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("bad Euler class coordinate `{}`", t.trim())))
        })
        .collect::<Result<_, _>>()?;
    if coords == [0] {
        return Ok(EulerClass::zero(rank));
    }
    if coords.len() != rank {
        return Err(Error::DimensionMismatch {
            expected: rank,
            found: coords.len(),
        }
        .into());
    }
    Ok(EulerClass::from_i64(&coords))
}

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub diagnostic: Option<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            diagnostic: None,
            code: 0,
        }
    }
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(value)
    }
}

/// Report for `classify`; `result` is `None` for non-primitive `α`.
pub fn bundle_report(m: &FourManifold, alpha: &EulerClass) -> Result<BundleReport, CliError> {
    let profile = cohomology(m, alpha)?;
    let spin = is_total_space_spin(m, alpha)?;
    let result = match classify(m, alpha) {
        Ok(t) => Some(t),
        Err(Error::NonPrimitive { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(BundleReport::new(
        BaseReport::from(m),
        alpha.coords(),
        spin,
        result,
        &profile,
    ))
}

pub fn cmd_classify(m: &FourManifold, alpha: &EulerClass, json: bool) -> Result<Output, CliError> {
    let report = bundle_report(m, alpha)?;
    let stdout = render(json, &report, BundleReport::classify_text);
    if report.result.is_none() {
        return Ok(Output {
            stdout,
            diagnostic: Some(format!(
                "Euler class is not primitive (divisibility {}); see `cohomology`",
                report.divisibility
            )),
            code: EXIT_NON_PRIMITIVE,
        });
    }
    Ok(Output::ok(stdout))
}

pub fn cmd_cohomology(
    m: &FourManifold,
    alpha: &EulerClass,
    json: bool,
) -> Result<Output, CliError> {
    let report = bundle_report(m, alpha)?;
    Ok(Output::ok(render(
        json,
        &report,
        BundleReport::cohomology_text,
    )))
}

pub fn survey_report(m: &FourManifold, bound: u32) -> Result<SurveyReport, CliError> {
    let mut tally: BTreeMap<FiveManifoldType, u64> = BTreeMap::new();
    let mut total = 0;
    for alpha in enumerate_primitive(m, bound) {
        *tally.entry(classify(m, &alpha)?).or_default() += 1;
        total += 1;
    }
    let base = BaseReport::from(m);
    Ok(SurveyReport {
        manifold: base.manifold,
        rank: base.rank,
        even: base.even,
        wu: base.wu,
        bound,
        primitive_classes: total,
        outcomes: tally
            .into_iter()
            .map(|(t, count)| {
                let r = ResultReport::from(t);
                OutcomeCount {
                    kind: r.kind,
                    s2xs3_count: r.s2xs3_count,
                    display: r.display,
                    count,
                }
            })
            .collect(),
    })
}

pub fn cmd_survey(m: &FourManifold, bound: u32, json: bool) -> Result<Output, CliError> {
    let report = survey_report(m, bound)?;
    Ok(Output::ok(render(json, &report, SurveyReport::text)))
}

pub fn spin_class_report(m: &FourManifold) -> Result<SpinClassReport, CliError> {
    let alpha = find_spin_euler_class(m);
    let result = classify(m, &alpha)?;
    debug_assert_eq!(result, FiveManifoldType::conn_sum(m.rank() - 1));
    let base = BaseReport::from(m);
    Ok(SpinClassReport {
        manifold: base.manifold,
        rank: base.rank,
        wu: base.wu,
        alpha: alpha.coords().iter().map(report::small).collect(),
        result: result.into(),
    })
}

pub fn cmd_spin_class(m: &FourManifold, json: bool) -> Result<Output, CliError> {
    let report = spin_class_report(m)?;
    Ok(Output::ok(render(json, &report, SpinClassReport::text)))
}

pub fn s2_bundle_report(p: i64) -> S2BundleReport {
    S2BundleReport {
        euler_number: p,
        display: s2_bundle(p).to_string(),
    }
}

pub fn cmd_s2_bundle(p: i64, json: bool) -> Output {
    Output::ok(render(json, &s2_bundle_report(p), S2BundleReport::text))
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Classify { source, alpha } => {
            let m = source.load()?;
            let a = parse_alpha(&alpha.alpha, m.rank())?;
            cmd_classify(&m, &a, cli.json)
        }
        Command::Cohomology { source, alpha } => {
            let m = source.load()?;
            let a = parse_alpha(&alpha.alpha, m.rank())?;
            cmd_cohomology(&m, &a, cli.json)
        }
        Command::Survey { source, bound } => cmd_survey(&source.load()?, *bound, cli.json),
        Command::S2Bundle { p } => Ok(cmd_s2_bundle(*p, cli.json)),
        Command::SpinClass { source } => cmd_spin_class(&source.load()?, cli.json),
    }
}
