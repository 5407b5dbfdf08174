//! Command-line front end. [`run`] is the whole program minus process
//! plumbing, so it can be driven from tests.

mod args;
mod suites;

pub use args::{parse_range, Cli};

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify, Certificate};
use crate::code::{Budget, LinearCode};
use crate::constructions::{direct, hamming, kron_code, q_repeat_times, repetition};
use crate::error::Error;
use crate::gf::{factor_prime_power, FieldSpec};
use crate::json::{parse_code, to_pretty, CertificateJson, CodeJson, ProfileJson};
use crate::linalg::MonomialMap;
use crate::regularity::{covering_set, cr_oracle_set, is_completely_regular, CodeSet};

use args::{Command, Family, FieldArgs, Global};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_NOT_APPLICABLE: i32 = 4;

/// A failed command: exit code and a one-line diagnostic.
#[derive(Debug)]
pub(crate) struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::Overflow(_) => EXIT_BUDGET,
            Error::NotPrime(_)
            | Error::NotPrimePower(_)
            | Error::ReducibleModulus { .. }
            | Error::InvalidModulus(_)
            | Error::UnsupportedOrder(_)
            | Error::ElementOutOfRange { .. }
            | Error::LengthMismatch { .. }
            | Error::DimensionMismatch(_)
            | Error::ZeroCode
            | Error::FullSpace
            | Error::ZeroVector
            | Error::InvalidParameter(_)
            | Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced: text for stdout and the exit code.
pub(crate) struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI with `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if let Err(f) = emit(&cli.global, &out.text, stdout) {
                let _ = writeln!(stderr, "error: {}", f.message);
                return f.code;
            }
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(global: &Global, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &global.out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }),
    }
}

fn budget(g: &Global) -> Budget {
    let d = Budget::default();
    Budget {
        codewords: g.budget_codewords.unwrap_or(d.codewords),
        cosets: g.budget_cosets.unwrap_or(d.cosets),
        oracle: g.budget_oracle.unwrap_or(d.oracle),
        monomial: g.budget_monomial.unwrap_or(d.monomial),
    }
}

pub(crate) fn field_of(q: u64, poly: Option<&[u32]>) -> Result<FieldSpec, Failure> {
    let (p, m) = factor_prime_power(q)?;
    Ok(FieldSpec::new(p, m, poly)?)
}

fn field(args: &FieldArgs) -> Result<FieldSpec, Failure> {
    field_of(args.q, args.poly.as_deref())
}

fn read_code(path: &std::path::Path) -> Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_code(&text)?)
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let b = budget(&cli.global);
    match &cli.command {
        Command::Build(family) => build(family).map(|c| Output::ok(to_pretty(&CodeJson::from(&c)))),
        Command::Analyze { file } => analyze(&read_code(file)?, &b, cli.global.json),
        Command::Classify {
            file,
            scramble_check,
        } => classify_cmd(&read_code(file)?, *scramble_check, cli.global.seed, &b),
        Command::Check(suite) => suites::run(suite, &b, cli.global.json),
        Command::Oracle { file, covering_set } => {
            oracle(&read_code(file)?, *covering_set, &b, cli.global.json)
        }
    }
}

fn build(family: &Family) -> Result<LinearCode, Failure> {
    Ok(match family {
        Family::Hamming { field: f, mb } => hamming(&field(f)?, *mb)?,
        Family::Repetition { field: f, n } => repetition(&field(f)?, *n)?,
        Family::Direct { field: f, h } => {
            let fs = field(f)?;
            let h = h
                .iter()
                .map(|&v| fs.check(v))
                .collect::<crate::Result<Vec<u8>>>()?;
            direct(&fs, &h)?
        }
        Family::Kron { field: f, na, mb } => kron_code(&field(f)?, *na, *mb)?,
        Family::QRepeat { input, times } => q_repeat_times(&read_code(input)?, *times)?,
    })
}

#[derive(Serialize)]
struct AnalyzeReport {
    field: crate::json::FieldJson,
    n: usize,
    k: usize,
    d: usize,
    e: usize,
    rho: usize,
    weight_distribution: Vec<u64>,
    completely_regular: bool,
    profile: Option<ProfileJson>,
}

fn analyze(code: &LinearCode, b: &Budget, json: bool) -> Result<Output, Failure> {
    let regularity = is_completely_regular(code, b)?;
    let report = AnalyzeReport {
        field: code.field().into(),
        n: code.n(),
        k: code.k(),
        d: code.min_distance(b)?,
        e: code.packing_radius(b)?,
        rho: code.covering_radius(b)?,
        weight_distribution: code.weight_distribution(b)?.to_vec(),
        completely_regular: regularity.is_regular(),
        profile: regularity.profile().map(Into::into),
    };
    if json {
        return Ok(Output::ok(to_pretty(&report)));
    }
    let mut s = format!(
        "code                [{}, {}, {}]_{}\npacking radius e    {}\ncovering radius     {}\nweight distribution {:?}\ncompletely regular  {}\n",
        report.n,
        report.k,
        report.d,
        code.field().q(),
        report.e,
        report.rho,
        report.weight_distribution,
        report.completely_regular
    );
    if let Some(p) = &report.profile {
        for (t, a) in &p.alpha {
            s.push_str(&format!("alpha[{t}]            {a:?}\n"));
        }
        if let Some(n_a) = p.n_a {
            s.push_str(&format!("n_a                 {n_a}\n"));
        }
    }
    Ok(Output::ok(s))
}

#[derive(Serialize)]
struct ScrambleReport {
    seed: u64,
    trials: usize,
    agreed: usize,
}

#[derive(Serialize)]
struct ClassifyOutput {
    #[serde(flatten)]
    certificate: CertificateJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    scramble_check: Option<ScrambleReport>,
}

fn signature(
    c: &Certificate,
) -> (
    crate::classify::Case,
    usize,
    Option<usize>,
    Option<usize>,
    Option<usize>,
) {
    (c.case, c.peel_count, c.n_a, c.n_b, c.m_b)
}

fn classify_cmd(
    code: &LinearCode,
    trials: usize,
    seed: u64,
    b: &Budget,
) -> Result<Output, Failure> {
    let cert = classify(code, b)?;
    let mut report = None;
    let mut code_out = if cert.is_classified() {
        EXIT_OK
    } else {
        EXIT_NOT_APPLICABLE
    };
    if trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut agreed = 0;
        for _ in 0..trials {
            let sigma = MonomialMap::random(code.field(), code.n(), &mut rng);
            let other = classify(&code.transform(&sigma)?, b)?;
            if signature(&other) == signature(&cert) {
                agreed += 1;
            }
        }
        if agreed != trials && code_out == EXIT_OK {
            code_out = EXIT_FAILURE;
        }
        report = Some(ScrambleReport {
            seed,
            trials,
            agreed,
        });
    }
    let out = ClassifyOutput {
        certificate: (&cert).into(),
        scramble_check: report,
    };
    Ok(Output {
        text: to_pretty(&out),
        code: code_out,
    })
}

#[derive(Serialize)]
struct OracleReport {
    set: &'static str,
    size: usize,
    completely_regular: bool,
    min_distance: Option<usize>,
}

fn oracle(code: &LinearCode, covering: bool, b: &Budget, json: bool) -> Result<Output, Failure> {
    let (name, set) = if covering {
        ("covering set", covering_set(code, b)?)
    } else {
        ("code", CodeSet::from_code(code, b)?)
    };
    let report = OracleReport {
        set: name,
        size: set.len(),
        completely_regular: cr_oracle_set(&set, b)?,
        min_distance: if covering {
            set.min_distance()
        } else {
            Some(code.min_distance(b)?)
        },
    };
    if json {
        return Ok(Output::ok(to_pretty(&report)));
    }
    Ok(Output::ok(format!(
        "set                 {}\nsize                {}\ncompletely regular  {}\nminimum distance    {}\n",
        report.set,
        report.size,
        report.completely_regular,
        report.min_distance.map_or("-".to_string(), |d| d.to_string())
    )))
}
