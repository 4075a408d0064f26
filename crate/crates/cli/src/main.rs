//! `toric`: command-line access to the toric-core library.
//!
//! Every verb writes one JSON document. Exit status: 0 success or HOLDS,
//! 1 property fails, 2 INDETERMINATE, 3 input or usage error.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use toric_core::json::Dec;
use toric_core::presets::{four_six_curve, negative_control, two_delta_example, CriterionInput, CurveBase};
use toric_core::stci::{build_family, verify_certificate, Family, FamilyOutcome, StciCertificate, Transcript};
use toric_core::toric::{Characteristic, CriterionOptions, FalsifierConfig};
use toric_core::{
    gcd_maximal_minors, hnf, image_lattice, is_projection, kernel_basis, presentation, radical_criterion, IntMat,
    Poly, Verdict,
};

const BUNDLED: [(&str, &str); 3] = [
    ("ex55-N.json", include_str!("../data/ex55-N.json")),
    ("ex55-M.json", include_str!("../data/ex55-M.json")),
    ("id2.json", include_str!("../data/id2.json")),
];

#[derive(Parser)]
#[command(name = "toric", version, about = "Exact computations with toric ideals and their projections")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Lattice basis of the integer kernel.
    Kernel(MatrixArg),
    /// Row Hermite normal form.
    Hnf(MatrixArg),
    /// gcd of the maximal minors.
    Minors(MatrixArg),
    /// Height of the toric ideal (number of columns minus rank).
    Height(MatrixArg),
    /// Whether the toric ideal of --m contains that of --n.
    Project(PairArgs),
    /// Image of the kernel of --m under --n.
    ImageLattice(PairArgs),
    /// Radical-generation criterion for a projection.
    Criterion(CriterionArgs),
    /// Build a certificate for one of the explicit families.
    Stci(StciArgs),
    /// Re-verify a certificate.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct MatrixArg {
    /// Matrix as a JSON file or inline JSON.
    #[arg(long)]
    matrix: String,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    n: String,
    #[arg(long)]
    m: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Diagonal,
    Paired,
}

#[derive(Args)]
struct CriterionArgs {
    #[arg(long, required_unless_present = "example")]
    n: Option<String>,
    #[arg(long, required_unless_present = "example")]
    m: Option<String>,
    /// Generators of the target toric ideal: a JSON array of polynomials or strings.
    #[arg(long = "gens-im", required_unless_present = "example")]
    gens_im: Option<String>,
    /// Extra binomials, same format as --gens-im.
    #[arg(long, default_value = "[]")]
    fs: String,
    /// Bundled input: four-six-curve (ex46, needs --a) or negative-control (rem33).
    #[arg(long, conflicts_with_all = ["n", "m", "gens_im"])]
    example: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    /// Base for the four-six-curve example.
    #[arg(long, value_enum, default_value = "diagonal")]
    base: Base,
    /// Characteristic: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[command(flatten)]
    falsifier: FalsifierArgs,
}

#[derive(Args)]
struct FalsifierArgs {
    /// Comma-separated primes for the finite-field search.
    #[arg(long, value_delimiter = ',')]
    primes: Option<Vec<u64>>,
    /// Enumerate every point when the field has at most this many points.
    #[arg(long)]
    budget: Option<u64>,
    /// Random points drawn when enumeration is over budget.
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct StciArgs {
    /// scroll (thm61), quintic (thm62) or four-six (thm63).
    #[arg(long, required_unless_present = "example")]
    family: Option<String>,
    /// Bundled certificate: two-delta (ex55).
    #[arg(long, conflicts_with = "family")]
    example: Option<String>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated c1,...,c_{m+1} for the scroll family.
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<u64>>,
    /// Attach a verification transcript; exit 1 if it fails.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Certificate as a JSON file or inline JSON.
    #[arg(long)]
    cert: String,
}

/// A failure that maps to exit status 3.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Out = Result<(Value, u8), InputError>;

fn field<T>(flag: &str, r: toric_core::Result<T>) -> Result<T, InputError> {
    r.map_err(|e| InputError(format!("--{flag}: {e}")))
}

/// Inline JSON, a file path, or the name of a bundled data file.
fn load(flag: &str, src: &str) -> Result<Value, InputError> {
    let trimmed = src.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        src.to_string()
    } else if Path::new(src).exists() {
        fs::read_to_string(src).map_err(|e| InputError(format!("--{flag}: cannot read {src}: {e}")))?
    } else if let Some((_, t)) = BUNDLED.iter().find(|(name, _)| *name == src) {
        t.to_string()
    } else {
        return Err(InputError(format!("--{flag}: no such file {src}")));
    };
    serde_json::from_str(&text).map_err(|e| InputError(format!("--{flag}: malformed JSON: {e}")))
}

/// Accepts the `{rows, cols, entries}` form or a bare array of rows.
fn matrix(flag: &str, src: &str) -> Result<IntMat, InputError> {
    let v = load(flag, src)?;
    let v = match v {
        Value::Array(rows) => {
            let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
            json!({"rows": rows.len(), "cols": cols, "entries": rows})
        }
        other => other,
    };
    serde_json::from_value(v).map_err(|e| InputError(format!("--{flag}: {e}")))
}

/// A JSON array whose items are polynomial objects or plain-text polynomials.
fn polys(flag: &str, src: &str, nvars: usize) -> Result<Vec<Poly>, InputError> {
    let Value::Array(items) = load(flag, src)? else {
        return Err(InputError(format!("--{flag}: expected a JSON array")));
    };
    items
        .into_iter()
        .enumerate()
        .map(|(k, item)| match item {
            Value::String(s) => field(flag, Poly::parse(&s, nvars)),
            other => serde_json::from_value(other).map_err(|e| InputError(format!("--{flag}[{k}]: {e}"))),
        })
        .collect()
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<Value, InputError> {
    Ok(serde_json::to_value(x)?)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Indeterminate => 2,
    }
}

fn criterion_input(args: &CriterionArgs) -> Result<CriterionInput, InputError> {
    if let Some(name) = &args.example {
        return match name.as_str() {
            "four-six-curve" | "ex46" => {
                let a = args.a.ok_or_else(|| InputError("--a is required for the four-six-curve example".into()))?;
                let base = match args.base {
                    Base::Diagonal => CurveBase::Diagonal,
                    Base::Paired => CurveBase::Paired,
                };
                field("a", four_six_curve(a, base))
            }
            "negative-control" | "rem33" => field("example", negative_control()),
            other => Err(InputError(format!("--example: unknown example {other:?}"))),
        };
    }
    let (n, m) = (args.n.as_deref().unwrap_or_default(), args.m.as_deref().unwrap_or_default());
    let (n, m) = (matrix("n", n)?, matrix("m", m)?);
    let gens_im = polys("gens-im", args.gens_im.as_deref().unwrap_or("[]"), n.cols())?;
    let fs = polys("fs", &args.fs, n.cols())?;
    Ok(CriterionInput { name: "input".into(), n, m, gens_im, fs })
}

fn criterion(args: &CriterionArgs) -> Out {
    let input = criterion_input(args)?;
    let mut falsifier = FalsifierConfig::default();
    let f = &args.falsifier;
    if let Some(p) = &f.primes {
        falsifier.primes = p.clone();
    }
    falsifier.exhaustive_limit = f.budget.unwrap_or(falsifier.exhaustive_limit);
    falsifier.samples = f.samples.unwrap_or(falsifier.samples);
    falsifier.seed = f.seed.unwrap_or(falsifier.seed);
    let opts = CriterionOptions { characteristic: Some(field("char", Characteristic::new(args.characteristic))?), falsifier };
    let report = radical_criterion(&input.n, &input.m, &input.gens_im, &input.fs, &opts)?;
    eprintln!("{}: overall {}", input.name, report.overall);
    Ok((to_json(&report)?, verdict_code(report.overall)))
}

fn need<T: Copy>(flag: &str, x: Option<T>) -> Result<T, InputError> {
    x.ok_or_else(|| InputError(format!("--{flag} is required for this family")))
}

fn print_transcript(t: &Transcript) {
    for c in &t.checks {
        eprintln!("[{}] {} {}: {}", if c.passed { "ok" } else { "FAILED" }, c.id, c.name, c.detail);
    }
}

fn certificate_out(cert: StciCertificate, verify: bool) -> Out {
    if !verify {
        return Ok((to_json(&cert)?, 0));
    }
    let cert = cert.verified();
    let t = cert.transcript.as_ref().expect("just verified");
    print_transcript(t);
    let code = if t.verified { 0 } else { 1 };
    Ok((to_json(&cert)?, code))
}

fn stci(args: &StciArgs) -> Out {
    if let Some(name) = &args.example {
        return match name.as_str() {
            "two-delta" | "ex55" => certificate_out(field("example", two_delta_example())?.certificate, args.verify),
            other => Err(InputError(format!("--example: unknown example {other:?}"))),
        };
    }
    let family = match args.family.as_deref().unwrap_or_default() {
        "scroll" | "thm61" => Family::Scroll {
            d: need("d", args.d)?,
            c: args.c.clone().ok_or_else(|| InputError("--c is required for this family".into()))?,
        },
        "quintic" | "thm62" => Family::Quintic { a: need("a", args.a)?, b: need("b", args.b)? },
        "four-six" | "thm63" => Family::FourSix { a: need("a", args.a)? },
        other => return Err(InputError(format!("--family: unknown family {other:?}"))),
    };
    match field("family", build_family(&family))? {
        FamilyOutcome::Certificate(c) => certificate_out(*c, args.verify),
        FamilyOutcome::Trivial { target, note } => {
            eprintln!("{note}");
            Ok((json!({"trivial": true, "target": to_json(&target)?, "note": note}), 0))
        }
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.verb {
        Verb::Kernel(a) => {
            let l = kernel_basis(&matrix("matrix", &a.matrix)?);
            Ok((json!({"rank": l.rank(), "lattice": to_json(&l)?}), 0))
        }
        Verb::Hnf(a) => Ok((to_json(&hnf(&matrix("matrix", &a.matrix)?))?, 0)),
        Verb::Minors(a) => {
            let g = field("matrix", gcd_maximal_minors(&matrix("matrix", &a.matrix)?))?;
            Ok((json!({"gcd": to_json(&Dec(g))?}), 0))
        }
        Verb::Height(a) => {
            let p = field("matrix", presentation(&matrix("matrix", &a.matrix)?))?;
            Ok((json!({"height": p.height(), "kernel": to_json(p.kernel())?}), 0))
        }
        Verb::Project(a) => {
            let r = is_projection(&matrix("n", &a.n)?, &matrix("m", &a.m)?)?;
            let report = json!({
                "holds": r.holds(),
                "sublattice_holds": r.sublattice_holds,
                "witness": r.witness.as_ref().map(to_json).transpose()?,
            });
            Ok((report, if r.holds() { 0 } else { 1 }))
        }
        Verb::ImageLattice(a) => {
            let l = image_lattice(&matrix("n", &a.n)?, &matrix("m", &a.m)?)?;
            Ok((json!({"rank": l.rank(), "lattice": to_json(&l)?}), 0))
        }
        Verb::Criterion(a) => criterion(a),
        Verb::Stci(a) => stci(a),
        Verb::Verify(a) => {
            let cert: StciCertificate =
                serde_json::from_value(load("cert", &a.cert)?).map_err(|e| InputError(format!("--cert: {e}")))?;
            let t = verify_certificate(&cert);
            print_transcript(&t);
            let code = if t.verified { 0 } else { 1 };
            Ok((to_json(&t)?, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((report, code)) => {
            let text = serde_json::to_string_pretty(&report).expect("values serialize");
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text + "\n") {
                        eprintln!("error: --out: cannot write {path}: {e}");
                        return ExitCode::from(3);
                    }
                }
                None => {
                    // A closed pipe is not an error worth reporting.
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
            }
            ExitCode::from(code)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
