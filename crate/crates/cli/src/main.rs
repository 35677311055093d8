//! Command-line front end: normalize operator expressions, evaluate
//! pairings, run verification suites, and emit coefficient tables.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use signumcalc_core::kernel::{prop35_coefficient, Prop35Family};
use signumcalc_core::oracle::{
    pair_cartesian, pair_signum, pair_spherical, run_suite, OracleError, SuiteConfig, SuiteName,
    SuiteReport, VerifyConfig,
};
use signumcalc_core::parser::{self, ParserError};
use signumcalc_core::poly::{parse_poly, PolyError};
use signumcalc_core::{GeneralizedFunction, KernelError, Rational};

const SEED_ENV: &str = "SIGNUMCALC_SEED";

#[derive(Parser)]
#[command(
    name = "signumcalc",
    about = "Exact calculus of radial operators on the delta distribution",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Md,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum RouteArg {
    Cartesian,
    Spherical,
    #[default]
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print its canonical form
    Normalize {
        /// Operator expression, e.g. "dr^2 delta"
        expr: String,
        /// Evaluate coefficients at a fixed dimension (>= 2) instead of symbolic m
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Pair an expression against a polynomial test function
    Pair {
        /// Operator expression, e.g. "L delta"
        expr: String,
        /// Polynomial in x1..xm, e.g. "3*x1^2*x2 - 1/2*x3"
        poly: String,
        /// Concrete dimension (>= 2)
        #[arg(long)]
        m: u32,
        /// Pairing route for distribution values
        #[arg(long, value_enum, default_value_t)]
        route: RouteArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification suites (exit code 0 iff all pass)
    Verify {
        /// Run a single named suite
        #[arg(long, conflicts_with = "all")]
        suite: Option<String>,
        /// Run all eleven suites (the default)
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        lmax: usize,
        /// Dimensions for randomized pairing trials
        #[arg(long = "m-list", value_delimiter = ',', default_value = "2,3,5")]
        m_list: Vec<u32>,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long = "max-degree", default_value_t = 8)]
        max_degree: u32,
        /// Trial seed (overrides SIGNUMCALC_SEED; default 0)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Emit the closed-form coefficient tables
    Table {
        /// "prop35" for all four families, or one of i, ii, iii, iv
        #[arg(long, default_value = "prop35")]
        family: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long, default_value_t = 4)]
        lmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<ParserError> for CliError {
    fn from(e: ParserError) -> Self {
        let code = match &e {
            ParserError::Parse { .. } | ParserError::Arity { .. } => 2,
            ParserError::Eval { .. } => 3,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        CliError {
            message: e.to_string(),
            code: 2,
        }
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        let code = match &e {
            KernelError::UnsupportedAction(_) => 3,
            KernelError::DomainError(_) => 2,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError {
            message: e.to_string(),
            code: 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn seed_with_env(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(SEED_ENV)
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
    })
    .unwrap_or(0)
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Normalize { expr, m, format } => cmd_normalize(&expr, m, format),
        Command::Pair {
            expr,
            poly,
            m,
            route,
            format,
        } => cmd_pair(&expr, &poly, m, route, format),
        Command::Verify {
            suite,
            all: _,
            kmax,
            lmax,
            m_list,
            trials,
            max_degree,
            seed,
            format,
        } => {
            let cfg = SuiteConfig {
                kmax,
                lmax,
                verify: VerifyConfig {
                    dims: m_list,
                    trials,
                    max_degree,
                    seed: seed_with_env(seed),
                },
            };
            cmd_verify(suite.as_deref(), &cfg, format)
        }
        Command::Table {
            family,
            kmax,
            lmax,
            format,
        } => cmd_table(&family, kmax, lmax, format),
    }
}

/// Canonical form with coefficients evaluated at a fixed dimension.
fn fixed_form(g: &GeneralizedFunction, m: u32) -> Result<String, CliError> {
    fn render(
        terms: Vec<(usize, Rational)>,
        basis: impl Fn(usize) -> String,
    ) -> String {
        use num_traits::{One, Signed, Zero};
        let mut out = String::new();
        for (n, c) in terms {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&basis(n));
            } else {
                out.push_str(&format!("{mag} * {}", basis(n)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
    let eval =
        |c: &signumcalc_core::DimScalar| c.dim_eval(m).map_err(|e| CliError::usage(e.to_string()));
    Ok(match g {
        GeneralizedFunction::Dist(d) => {
            let mut terms = Vec::new();
            for (n, c) in d.terms() {
                terms.push((n, eval(c)?));
            }
            render(terms, |n| match n {
                0 => "delta".to_string(),
                1 => "D delta".to_string(),
                _ => format!("D^{n} delta"),
            })
        }
        GeneralizedFunction::Sign(s) => {
            let mut terms = Vec::new();
            for (n, c) in s.terms() {
                terms.push((n, eval(c)?));
            }
            render(terms, |n| format!("s[{n}]"))
        }
    })
}

fn cmd_normalize(expr: &str, m: Option<u32>, format: Format) -> Result<u8, CliError> {
    if let Some(m0) = m {
        if m0 < 2 {
            return Err(CliError::usage("--m must be at least 2"));
        }
    }
    let value = parser::evaluate_str(expr)?;
    let canonical = parser::print_canonical(&value);
    let fixed = m.map(|m0| fixed_form(&value, m0)).transpose()?;
    match format {
        Format::Json => {
            // for signum values, "canonical" is the radial alias and
            // "basis" the underlying s[n] expansion
            let json = serde_json::json!({
                "schema": "1",
                "input": expr,
                "space": value.space().to_string(),
                "canonical": canonical,
                "basis": value.to_string(),
                "fixed": fixed,
                "m": m,
            });
            println!("{json}");
        }
        Format::Text | Format::Md => match fixed {
            Some(f) => println!("{f}"),
            None => println!("{canonical}"),
        },
    }
    Ok(0)
}

fn cmd_pair(
    expr: &str,
    poly_text: &str,
    m: u32,
    route: RouteArg,
    format: Format,
) -> Result<u8, CliError> {
    if m < 2 {
        return Err(CliError::usage("--m must be at least 2"));
    }
    let value = parser::evaluate_str(expr)?;
    let phi = parse_poly(poly_text, m as usize)?;
    let mut agree = true;
    let (text, json) = match &value {
        GeneralizedFunction::Dist(d) => {
            let cart = matches!(route, RouteArg::Cartesian | RouteArg::Both)
                .then(|| pair_cartesian(d, &phi, m))
                .transpose()?;
            let sph = matches!(route, RouteArg::Spherical | RouteArg::Both)
                .then(|| pair_spherical(d, &phi, m))
                .transpose()?;
            match (cart, sph) {
                (Some(c), Some(s)) => {
                    agree = c.agrees(&s);
                    (
                        format!(
                            "{c} | {s} ({})",
                            if agree { "agree" } else { "DISAGREE" }
                        ),
                        serde_json::json!({
                            "schema": "1",
                            "m": m,
                            "phi": phi.to_json(),
                            "cartesian": c.to_string(),
                            "spherical": s.to_string(),
                            "agree": agree,
                        }),
                    )
                }
                (Some(c), None) => (
                    c.to_string(),
                    serde_json::json!({
                        "schema": "1", "m": m, "phi": phi.to_json(),
                        "cartesian": c.to_string(),
                    }),
                ),
                (None, Some(s)) => (
                    s.to_string(),
                    serde_json::json!({
                        "schema": "1", "m": m, "phi": phi.to_json(),
                        "spherical": s.to_string(),
                    }),
                ),
                (None, None) => unreachable!("route always selects at least one"),
            }
        }
        GeneralizedFunction::Sign(s) => {
            let v = pair_signum(s, &phi, m)?;
            (
                v.to_string(),
                serde_json::json!({
                    "schema": "1", "m": m, "phi": phi.to_json(),
                    "signum": v.to_string(),
                }),
            )
        }
    };
    match format {
        Format::Json => println!("{json}"),
        Format::Text | Format::Md => println!("{text}"),
    }
    Ok(if agree { 0 } else { 1 })
}

fn cmd_verify(suite: Option<&str>, cfg: &SuiteConfig, format: Format) -> Result<u8, CliError> {
    let names: Vec<SuiteName> = match suite {
        Some(name) => vec![name
            .parse()
            .map_err(|e: OracleError| CliError::usage(e.to_string()))?],
        None => SuiteName::ALL.to_vec(),
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        reports.push(run_suite(name, cfg)?);
    }
    let all_pass = reports.iter().all(SuiteReport::all_pass);
    match format {
        Format::Json => {
            let json = serde_json::json!({
                "schema": "1",
                "seed": cfg.verify.seed,
                "dims": cfg.verify.dims,
                "suites": reports.iter().map(SuiteReport::to_json).collect::<Vec<_>>(),
                "all_pass": all_pass,
            });
            println!("{json}");
        }
        Format::Md => {
            for r in &reports {
                println!("{}", r.to_markdown());
            }
        }
        Format::Text => {
            for r in &reports {
                let passed = r.entries.iter().filter(|e| e.status == signumcalc_core::oracle::SuiteStatus::Pass).count();
                let total = r.entries.len();
                let verdict = if r.all_pass() { "pass" } else { "FAIL" };
                println!("suite {:<20} {verdict} ({passed}/{total})", r.suite);
                if !r.all_pass() {
                    for e in &r.entries {
                        if e.status != signumcalc_core::oracle::SuiteStatus::Pass {
                            println!("  FAIL {}: lhs = {} ; rhs = {}", e.id, e.lhs, e.rhs);
                        }
                    }
                }
            }
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn dirac_basis_str(n: usize) -> String {
    match n {
        0 => "delta".to_string(),
        1 => "D delta".to_string(),
        _ => format!("D^{n} delta"),
    }
}

fn cmd_table(family: &str, kmax: usize, lmax: usize, format: Format) -> Result<u8, CliError> {
    let families: Vec<Prop35Family> = match family {
        "prop35" => Prop35Family::ALL.to_vec(),
        other => vec![other
            .parse()
            .map_err(|e: KernelError| CliError::usage(e.to_string()))?],
    };
    let mut rows = Vec::new();
    for fam in &families {
        for k in 0..=kmax {
            for l in 0..=lmax.min(k) {
                let (coeff, target) = prop35_coefficient(*fam, k, l)?;
                rows.push((fam.token(), k, l, fam.describe(k, l), coeff, target));
            }
        }
    }
    match format {
        Format::Json => {
            let json = serde_json::json!({
                "schema": "1",
                "table": family,
                "rows": rows
                    .iter()
                    .map(|(fam, k, l, desc, coeff, target)| {
                        serde_json::json!({
                            "family": fam,
                            "k": k,
                            "l": l,
                            "expression": desc,
                            "coefficient": coeff.to_string(),
                            "target": dirac_basis_str(*target),
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{json}");
        }
        Format::Md | Format::Text => {
            println!("| family | k | l | expression | coefficient | target basis |");
            println!("|---|---|---|---|---|---|");
            for (fam, k, l, desc, coeff, target) in &rows {
                println!(
                    "| {fam} | {k} | {l} | {desc} | {coeff} | {} |",
                    dirac_basis_str(*target)
                );
            }
        }
    }
    Ok(0)
}
