use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nltrace_core::choquet::{choquet_integral, choquet_trace, ValueVector};
use nltrace_core::io::{parse_alpha, parse_matrix, parse_measure, MatrixFile};
use nltrace_core::majorization::{
    contraction_factor, eigen_dominates, factorization_residual, majorizes, weak_majorizes,
};
use nltrace_core::norms::{alpha_norm, ky_fan_decomposition, ky_fan_norm, non_two_positive_witness};
use nltrace_core::spectral::psd_eigenvalues;
use nltrace_core::suite::{run_suite, SuiteConfig, SuiteKind, DEFAULT_TOL};
use nltrace_core::sugeno::{sugeno_integral, sugeno_trace};
use nltrace_core::{
    eig_desc, AlphaWeights, CoefficientVector, ComplexMatrix, Error, HermitianMatrix,
};

/// Non-linear traces of Choquet and Sugeno type on positive semidefinite
/// matrices.
///
/// Input files are JSON: matrices as {"n": n, "entries": [[[re, im], ...], ...]},
/// weights as {"alpha": [0, a1, ..., an]} and measures as
/// {"n": n, "values": {"<mask>": v, ...}}.
#[derive(Parser)]
#[command(name = "nltrace", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Choquet,
    Sugeno,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Choquet,
    Sugeno,
    Majorization,
    Norms,
    All,
}

impl From<SuiteArg> for SuiteKind {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Choquet => SuiteKind::Choquet,
            SuiteArg::Sugeno => SuiteKind::Sugeno,
            SuiteArg::Majorization => SuiteKind::Majorization,
            SuiteArg::Norms => SuiteKind::Norms,
            SuiteArg::All => SuiteKind::All,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct NormChoice {
    /// Weight file defining the alpha-norm.
    #[arg(long)]
    alpha: Option<PathBuf>,
    /// Sum of the k largest singular values.
    #[arg(long)]
    kyfan: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of a Hermitian matrix, decreasing.
    Eig { matrix: PathBuf },
    /// Choquet or Sugeno trace of a PSD matrix.
    Trace {
        kind: Kind,
        alpha: PathBuf,
        matrix: PathBuf,
    },
    /// Alpha-norm or Ky Fan norm of a square matrix.
    Norm {
        #[command(flatten)]
        choice: NormChoice,
        matrix: PathBuf,
    },
    /// Concavity, coefficients and Ky Fan weights of an alpha file.
    Check { alpha: PathBuf },
    /// Eigenvalue dominance of a by b, with an optional contraction c: a = c b c*.
    Dominate {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        factor: bool,
    },
    /// Diagonal counterexample to 2-positivity of sum_i c_i s_i(.).
    Witness {
        /// Comma-separated coefficients c_1,...,c_n.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        coeffs: Vec<f64>,
        /// Index with c_k < c_(k+1), 1-based.
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: f64,
    },
    /// Run property suites and print a JSON report. NLTRACE_TOL overrides the
    /// default 1e-8 comparison tolerance.
    Suite {
        /// Largest dimension; samples cycle through 2..=N.
        #[arg(long = "n", default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..=8))]
        max_n: u64,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Discrete Choquet or Sugeno integral of a vector against a measure file.
    Integral {
        kind: Kind,
        measure: PathBuf,
        /// Comma-separated nonnegative values.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        values: Vec<f64>,
    },
}

/// A failed command: message for standard error and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidMatrix(_)
            | Error::InvalidAlpha(_)
            | Error::InvalidMeasure(_)
            | Error::InvalidVector(_) => 2,
            Error::NotHermitian { .. } | Error::NotPsd { .. } => 3,
            Error::DimensionMismatch { .. } | Error::Size(_) | Error::Range(_) | Error::Alignment { .. } => 4,
            Error::Precondition(_) => 5,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(Value, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load_matrix(path: &Path) -> Result<ComplexMatrix, Failure> {
    Ok(parse_matrix(&read(path)?)?)
}

fn load_hermitian(path: &Path) -> Result<HermitianMatrix, Failure> {
    Ok(HermitianMatrix::new(load_matrix(path)?)?)
}

fn load_alpha(path: &Path) -> Result<AlphaWeights, Failure> {
    Ok(parse_alpha(&read(path)?)?)
}

fn matrix_json(m: &ComplexMatrix) -> Value {
    serde_json::to_value(MatrixFile::from(m)).expect("matrix serializes")
}

fn ok(v: Value) -> CmdResult {
    Ok((v, true))
}

fn cmd_eig(matrix: &Path) -> CmdResult {
    let a = load_hermitian(matrix)?;
    ok(json!({ "eigenvalues": eig_desc(&a)?.eigenvalues() }))
}

fn cmd_trace(kind: Kind, alpha: &Path, matrix: &Path) -> CmdResult {
    let alpha = load_alpha(alpha)?;
    let a = load_hermitian(matrix)?;
    let value = match kind {
        Kind::Choquet => choquet_trace(&a, &alpha)?,
        Kind::Sugeno => sugeno_trace(&a, &alpha)?,
    };
    ok(json!({ "value": value }))
}

fn cmd_norm(choice: &NormChoice, matrix: &Path) -> CmdResult {
    let a = load_matrix(matrix)?;
    let value = match (&choice.alpha, choice.kyfan) {
        (Some(path), _) => alpha_norm(&a, &load_alpha(path)?)?,
        (None, Some(k)) => ky_fan_norm(&a, k)?,
        (None, None) => unreachable!("clap requires one of --alpha and --kyfan"),
    };
    ok(json!({ "value": value }))
}

fn cmd_check(alpha: &Path) -> CmdResult {
    let alpha = load_alpha(alpha)?;
    let concave = alpha.is_concave();
    let weights = if concave {
        Some(ky_fan_decomposition(&alpha)?)
    } else {
        None
    };
    ok(json!({
        "concave": concave,
        "coeffs": alpha.to_coeffs().values(),
        "kyfan_weights": weights,
    }))
}

fn cmd_dominate(a: &Path, b: &Path, factor: bool) -> CmdResult {
    let a = load_hermitian(a)?;
    let b = load_hermitian(b)?;
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            got: a.dim(),
        }
        .into());
    }
    let (la, lb) = (psd_eigenvalues(&a)?, psd_eigenvalues(&b)?);
    let dominates = eigen_dominates(&b, &a)?;
    let (contraction, residual) = if factor && dominates {
        let c = contraction_factor(&a, &b)?;
        let r = factorization_residual(&a, &b, &c);
        (matrix_json(&c), json!(r))
    } else {
        (Value::Null, Value::Null)
    };
    ok(json!({
        "eigen_dominates": dominates,
        "weak_majorizes": weak_majorizes(&lb, &la)?,
        "majorizes": majorizes(&lb, &la)?,
        "contraction": contraction,
        "residual": residual,
    }))
}

fn cmd_witness(coeffs: &[f64], k: usize, t: f64) -> CmdResult {
    let c = CoefficientVector::new(coeffs.to_vec())?;
    let w = non_two_positive_witness(&c, k, t)?;
    let v = json!({
        "coeffs": c.values(),
        "k": k,
        "t": t,
        "a": matrix_json(w.a.as_matrix()),
        "b": matrix_json(w.b.as_matrix()),
        "c": matrix_json(w.c.as_matrix()),
        "s_a": w.s_a,
        "s_b": w.s_b,
        "s_c": w.s_c,
        "determinant": w.determinant,
        "verified": w.verified,
    });
    Ok((v, w.verified))
}

fn suite_tolerance() -> Result<f64, Failure> {
    match std::env::var("NLTRACE_TOL") {
        Err(_) => Ok(DEFAULT_TOL),
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
            _ => Err(Failure {
                code: 2,
                message: format!("NLTRACE_TOL must be a positive number, got {s:?}"),
            }),
        },
    }
}

fn cmd_suite(max_n: u64, samples: u64, seed: u64, suite: SuiteArg) -> CmdResult {
    let cfg = SuiteConfig {
        max_n: max_n as usize,
        samples: samples as usize,
        seed,
        tol: suite_tolerance()?,
    };
    let report = run_suite(suite.into(), &cfg)?;
    let pass = report.pass;
    Ok((serde_json::to_value(report).expect("report serializes"), pass))
}

fn cmd_integral(kind: Kind, measure: &Path, values: &[f64]) -> CmdResult {
    let mu = parse_measure(&read(measure)?)?;
    let f = ValueVector::new(values.to_vec())?;
    let value = match kind {
        Kind::Choquet => choquet_integral(&f, &mu)?,
        Kind::Sugeno => sugeno_integral(&f, &mu)?,
    };
    ok(json!({ "value": value }))
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Eig { matrix } => cmd_eig(matrix),
        Command::Trace { kind, alpha, matrix } => cmd_trace(*kind, alpha, matrix),
        Command::Norm { choice, matrix } => cmd_norm(choice, matrix),
        Command::Check { alpha } => cmd_check(alpha),
        Command::Dominate { a, b, factor } => cmd_dominate(a, b, *factor),
        Command::Witness { coeffs, k, t } => cmd_witness(coeffs, *k, *t),
        Command::Suite {
            max_n,
            samples,
            seed,
            suite,
        } => cmd_suite(*max_n, *samples, *seed, *suite),
        Command::Integral {
            kind,
            measure,
            values,
        } => cmd_integral(*kind, measure, values),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((value, success)) => {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON output"));
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
