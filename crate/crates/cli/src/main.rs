//! `polar-legendre`: build polar Legendre families, locate their zeros,
//! run the verification suite and tabulate asymptotic limits.
//!
//! Exit codes: 0 success, 2 configuration error, 3 internal consistency
//! failure, 4 root-finder non-convergence, 5 verification failure.

mod parse;
mod svg;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use polar_legendre::legendre::gauss_rule;
use polar_legendre::polar::polar_fundamental;
use polar_legendre::report::json_number;
use polar_legendre::roots::{default_cluster_radius, polar_roots_with_radius};
use polar_legendre::scalar::{fmt_sig17, ExactComplex, Scalar};
use polar_legendre::verify::{
    nth_root_sequence, ratio_sequences, run_suite, AsymPoint, CheckKind, Limit, Mode, Pole,
    SuiteConfig,
};
use polar_legendre::{Error, Polynomial};

const EXIT_CONFIG: u8 = 2;
const EXIT_CONSISTENCY: u8 = 3;
const EXIT_CONVERGENCE: u8 = 4;
const EXIT_VERIFICATION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "polar-legendre",
    version,
    about = "Polar Legendre polynomials: families, zeros, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monic coefficients of P_0..P_n, ascending powers.
    Family(FamilyArgs),
    /// Zeros of P_n with multiplicities and residuals.
    Zeros(ZerosArgs),
    /// Run the verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// Convergence sequences of the asymptotic limits.
    Asym(AsymArgs),
    /// Gauss-Legendre nodes and weights.
    Quad(QuadArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum LimitArg {
    Nthroot,
    Ratio1,
    Ratio2,
}

#[derive(Args)]
struct PoleArgs {
    /// Pole ζ as `re,im`; exact mode also accepts `p/q` components.
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    pole: String,
    /// Arithmetic: exact Gaussian rationals or complex binary64.
    #[arg(long, value_enum, default_value = "float")]
    mode: ModeArg,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(flatten)]
    pole: PoleArgs,
    /// Highest degree.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Output format on stdout.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Also list the primitives (z − ζ) P_k.
    #[arg(long)]
    primitive: bool,
    /// Also list the monic Legendre polynomials L_k.
    #[arg(long)]
    legendre: bool,
    /// Write CSV here as well.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write JSON here as well.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct ZerosArgs {
    /// Pole ζ as `re,im`.
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    pole: String,
    /// Degree of P_n.
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// CSV output path (stdout when absent).
    #[arg(long)]
    csv: Option<PathBuf>,
    /// SVG scatter output path.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Roots closer than this merge into a double root
    /// (default `1e-6 (1 + Δ_ζ)`).
    #[arg(long)]
    cluster_radius: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    pole: PoleArgs,
    /// Largest degree for the per-degree checks.
    #[arg(long, default_value_t = 10)]
    nmax: usize,
    /// Checks to run, comma separated: legendre, 1, 2, polar, sobolev,
    /// zeros, equilibrium, 5, 6, nthroot. Default: all but 5, 6 and nthroot.
    #[arg(long, value_delimiter = ',')]
    theorem: Vec<String>,
    /// Evaluation point for the asymptotic checks.
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Degrees for the asymptotic checks (default 25,50,100,200; 25,50,100 for 5).
    #[arg(long)]
    nlist: Option<String>,
    /// Replaces the relative tolerance of the binary64 identity checks.
    #[arg(long)]
    tol: Option<f64>,
    /// Report path (stdout when absent).
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct AsymArgs {
    /// Which limit to tabulate.
    #[arg(long, value_enum)]
    limit: LimitArg,
    /// Pole ζ as `re,im` (ratio limits).
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    pole: String,
    /// Evaluation point as `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    /// Degrees, comma separated.
    #[arg(long, default_value = "25,50,100,200")]
    nlist: String,
    /// CSV output path (stdout when absent).
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct QuadArgs {
    /// Number of nodes.
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Output format on stdout.
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidArgument(_)
            | Error::Precondition(_)
            | Error::ExactBoundExceeded { .. } => EXIT_CONFIG,
            Error::BranchUndefined { .. } => EXIT_CONFIG,
            Error::Consistency(_) | Error::ClusterTooLarge { .. } => EXIT_CONSISTENCY,
            Error::BracketNonConvergence { .. } | Error::RootNonConvergence { .. } => {
                EXIT_CONVERGENCE
            }
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Family(a) => cmd_family(a),
        Command::Zeros(a) => cmd_zeros(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Asym(a) => cmd_asym(a),
        Command::Quad(a) => cmd_quad(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents)
        .map_err(|e| Failure::config(format!("cannot write {}: {e}", path.display())))
}

fn resolve_pole(args: &PoleArgs) -> Result<Pole, Failure> {
    match args.mode {
        ModeArg::Exact => parse::parse_exact_complex(&args.pole)
            .map(Pole::exact)
            .map_err(Failure::config),
        ModeArg::Float => parse::parse_complex(&args.pole)
            .map(Pole::float)
            .map_err(Failure::config),
    }
}

#[derive(Serialize)]
struct PolyRow {
    family: &'static str,
    n: usize,
    coeffs: Vec<[Box<RawValue>; 2]>,
}

#[derive(Serialize)]
struct FamilyDoc {
    pole: String,
    mode: Mode,
    polys: Vec<PolyRow>,
}

/// One coefficient as `[re, im]`: JSON numbers in float mode, rational
/// strings in exact mode.
trait CoeffText: Scalar {
    fn parts(&self) -> [String; 2];
    fn json(&self) -> [Box<RawValue>; 2];
}

impl CoeffText for Complex64 {
    fn parts(&self) -> [String; 2] {
        [fmt_sig17(self.re), fmt_sig17(self.im)]
    }
    fn json(&self) -> [Box<RawValue>; 2] {
        [json_number(self.re), json_number(self.im)]
    }
}

impl CoeffText for ExactComplex {
    fn parts(&self) -> [String; 2] {
        [self.re.to_string(), self.im.to_string()]
    }
    fn json(&self) -> [Box<RawValue>; 2] {
        let s = |r: &num_rational::BigRational| {
            RawValue::from_string(serde_json::to_string(&r.to_string()).expect("string"))
                .expect("json")
        };
        [s(&self.re), s(&self.im)]
    }
}

type FamilyRow<T> = (&'static str, usize, Polynomial<T>);

fn family_rows<T: CoeffText>(a: &FamilyArgs, zeta: &T) -> Result<Vec<FamilyRow<T>>, Failure> {
    let mut rows = Vec::new();
    for k in 0..=a.n {
        let p = polar_fundamental(k, zeta)?;
        if a.primitive {
            rows.push(("Pi", k + 1, p.mul_linear(zeta)));
        }
        rows.push(("P", k, p));
    }
    if a.legendre {
        rows.extend(
            polar_legendre::legendre::legendre_polys::<T>(a.n)
                .into_iter()
                .enumerate()
                .map(|(k, l)| ("L", k, l)),
        );
    }
    rows.sort_by(|x, y| x.0.cmp(y.0).then(x.1.cmp(&y.1)));
    Ok(rows)
}

fn emit_family<T: CoeffText>(a: &FamilyArgs, zeta: &T, mode: Mode) -> CmdResult {
    let rows = family_rows(a, zeta)?;
    let mut csv = String::from("family,n,k,re,im\n");
    for (fam, n, p) in &rows {
        for (k, c) in p.coeffs().iter().enumerate() {
            let [re, im] = c.parts();
            let _ = writeln!(csv, "{fam},{n},{k},{re},{im}");
        }
    }
    let doc = FamilyDoc {
        pole: zeta.label(),
        mode,
        polys: rows
            .iter()
            .map(|(fam, n, p)| PolyRow {
                family: fam,
                n: *n,
                coeffs: p.coeffs().iter().map(|c| c.json()).collect(),
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&doc).expect("family serializes");
    json.push('\n');
    if let Some(path) = &a.csv {
        write_file(path, &csv)?;
    }
    if let Some(path) = &a.report {
        write_file(path, &json)?;
    }
    match a.format {
        Format::Json => print!("{json}"),
        Format::Csv => print!("{csv}"),
    }
    Ok(())
}

fn cmd_family(a: FamilyArgs) -> CmdResult {
    let pole = resolve_pole(&a.pole)?;
    match a.pole.mode {
        ModeArg::Exact => emit_family(&a, pole.exact.as_ref().expect("exact pole"), Mode::Exact),
        ModeArg::Float => emit_family(&a, &pole.value, Mode::Float),
    }
}

fn cmd_zeros(a: ZerosArgs) -> CmdResult {
    let zeta = parse::parse_complex(&a.pole).map_err(Failure::config)?;
    if a.n == 0 {
        return Err(Failure::config("zeros needs n >= 1"));
    }
    let radius = a
        .cluster_radius
        .unwrap_or_else(|| default_cluster_radius(zeta));
    let roots = polar_roots_with_radius(a.n, zeta, radius)?;
    let mut csv = String::from("re,im,multiplicity,residual\n");
    for ((r, m), res) in roots
        .roots
        .iter()
        .zip(&roots.multiplicities)
        .zip(&roots.residuals)
    {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_sig17(r.re),
            fmt_sig17(r.im),
            m,
            fmt_sig17(*res)
        );
    }
    if !roots.converged {
        let _ = writeln!(csv, "# converged,false");
    }
    match &a.csv {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    if let Some(path) = &a.svg {
        write_file(path, &svg::render(zeta, &roots))?;
    }
    if roots.converged {
        Ok(())
    } else {
        Err(Error::RootNonConvergence {
            iterations: roots.iterations,
            max_step: roots.max_step,
        }
        .into())
    }
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let pole = resolve_pole(&a.pole)?;
    let mut cfg = SuiteConfig::new(pole, a.nmax, a.pole.mode.into());
    if !a.theorem.is_empty() {
        cfg.checks = a
            .theorem
            .iter()
            .map(|t| {
                CheckKind::parse(t).ok_or_else(|| Failure::config(format!("unknown check `{t}`")))
            })
            .collect::<Result<_, _>>()?;
    }
    if let Some(z) = &a.z {
        cfg.z = Some(parse::parse_complex(z).map_err(Failure::config)?);
    }
    if let Some(list) = &a.nlist {
        cfg.n_list = Some(parse::parse_list(list).map_err(Failure::config)?);
    }
    if let Some(t) = a.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::config("--tol must be positive"));
        }
        cfg.tol = Some(t);
    }
    let report = run_suite(&cfg)?;
    let json = report.to_json();
    match &a.report {
        Some(path) => write_file(path, &json)?,
        None => print!("{json}"),
    }
    let s = &report.summary;
    eprintln!(
        "{} checks: {} passed, {} failed, {} inconclusive",
        s.total, s.passed, s.failed, s.inconclusive
    );
    if report.all_passed() {
        Ok(())
    } else {
        let first = report
            .failures()
            .next()
            .map(|c| c.check_id.clone())
            .unwrap_or_default();
        Err(Failure {
            code: EXIT_VERIFICATION,
            message: format!("{} check(s) failed, first: {first}", s.failed),
        })
    }
}

fn complex_token(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { "" } else { "+" };
    format!("{}{sign}{}i", fmt_sig17(z.re), fmt_sig17(z.im))
}

fn cmd_asym(a: AsymArgs) -> CmdResult {
    let z = parse::parse_complex(&a.z).map_err(Failure::config)?;
    let n_list = parse::parse_list(&a.nlist).map_err(Failure::config)?;
    let limit = match a.limit {
        LimitArg::Nthroot => Limit::NthRoot,
        LimitArg::Ratio1 => Limit::Ratio1,
        LimitArg::Ratio2 => Limit::Ratio2,
    };
    let points: Vec<AsymPoint> = match limit {
        Limit::NthRoot => nth_root_sequence(z, &n_list)?,
        Limit::Ratio1 | Limit::Ratio2 => {
            let zeta = parse::parse_complex(&a.pole).map_err(Failure::config)?;
            let (r1, r2) = ratio_sequences(zeta, z, &n_list)?;
            if limit == Limit::Ratio1 {
                r1
            } else {
                r2
            }
        }
    };
    let mut csv = String::from("n,value,target,abs_err\n");
    for p in &points {
        let (value, target) = if limit == Limit::NthRoot {
            (fmt_sig17(p.value.re), fmt_sig17(p.target.re))
        } else {
            (complex_token(p.value), complex_token(p.target))
        };
        let _ = writeln!(csv, "{},{value},{target},{}", p.n, fmt_sig17(p.abs_err));
    }
    match &a.csv {
        Some(path) => write_file(path, &csv),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct QuadDoc {
    n: usize,
    nodes: Vec<Box<RawValue>>,
    weights: Vec<Box<RawValue>>,
}

fn cmd_quad(a: QuadArgs) -> CmdResult {
    let rule = gauss_rule(a.n)?;
    match a.format {
        Format::Csv => {
            let mut csv = String::from("k,node,weight\n");
            for (k, (x, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
                let _ = writeln!(csv, "{k},{},{}", fmt_sig17(*x), fmt_sig17(*w));
            }
            print!("{csv}");
        }
        Format::Json => {
            let doc = QuadDoc {
                n: a.n,
                nodes: rule.nodes.iter().map(|&x| json_number(x)).collect(),
                weights: rule.weights.iter().map(|&w| json_number(w)).collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("quad serializes")
            );
        }
    }
    Ok(())
}
