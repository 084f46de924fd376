//! Command-line front end: verify Salem polynomials, build realization
//! certificates, compute quadratic-form invariants, run obstruction tests and
//! searches, and regenerate the Salem fixture CSV.
//!
//! Exit codes: 0 success; 1 verification/obstruction came back negative;
//! 2 invalid input; 3 indeterminate verdict; 4 bounded search exhausted.

use clap::{Parser, Subcommand};
use num_traits::ToPrimitive;
use salemforge::polynomials::IntPoly;
use salemforge::qforms::{
    self, find_obstructed, hasse_class, obstruct_dim3, obstruct_dim4,
    obstruct_dim5, ram_at_infinity_table, signed_det, witt_class, DiagForm, ObstructionReport,
    Verdict,
};
use salemforge::realizer::{realize_any_deg4, realize_deg2, RealizationCertificate, SalemInput};
use salemforge::salem::{
    disc_class_deg2, disc_class_deg4, enumerate_salem, salem_check_deg4, salem_with_disc,
    SalemQuadratic, SalemQuartic,
};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;
const EXIT_EXHAUSTED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "salemforge",
    about = "Certified realizations of Salem numbers of degree <= 4 in a hyperbolic 6-lattice, and the obstructions below dimension 6",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a palindromic polynomial defines a Salem number and report
    /// its square-rootability and discriminant class.
    Verify {
        /// Coefficients in descending degree, e.g. 1,-1,-3,-1,1
        #[arg(long)]
        poly: String,
    },
    /// Build a certified realization (a loxodromic Vahlen matrix over the
    /// order Q whose SO(1,6) image has the Salem number as an eigenvalue).
    Realize {
        /// Salem minimal polynomial, descending coefficients.
        #[arg(long, conflicts_with = "trace")]
        poly: Option<String>,
        /// Degree-2 shortcut: the trace N of x^2 - Nx + 1.
        #[arg(long)]
        trace: Option<i64>,
        /// Emit the certificate as JSON (schema salemforge/1).
        #[arg(long)]
        json: bool,
    },
    /// Invariants of a diagonal quadratic form: determinant classes, Hasse
    /// and Witt ramification sets, behavior at infinity.
    Invariants {
        /// Diagonal entries, e.g. 1,-1,-1,-1,-1
        #[arg(long)]
        form: String,
    },
    /// Run the dimension-3/4/5 obstruction test for a form against a Salem
    /// quartic.
    Obstruct {
        #[arg(long)]
        dim: u8,
        #[arg(long)]
        form: String,
        #[arg(long)]
        poly: String,
    },
    /// Search for a Salem quartic with discriminant class -d.
    FindSalem {
        /// The (positive squarefree) d with target class -d.
        #[arg(long)]
        disc: i64,
        /// Require square-rootability over Q.
        #[arg(long)]
        square_rootable: bool,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Search for a square-rootable Salem quartic obstructed for the form.
    FindObstructed {
        #[arg(long)]
        dim: u8,
        #[arg(long)]
        form: String,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Regenerate the Salem fixture CSV (a,b,k-or-dash,disc class).
    Fixtures {
        #[arg(long)]
        regenerate: bool,
        #[arg(long)]
        bound: Option<i64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn default_bound(explicit: Option<i64>) -> i64 {
    explicit.unwrap_or_else(|| {
        std::env::var("SALEMFORGE_BOUND")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(30)
    })
}

/// Parse a Salem minimal polynomial (degree 2 or 4). Shape errors are
/// invalid input (exit 2); a well-formed non-Salem polynomial is a negative
/// verification result (exit 1).
fn parse_salem(poly: &str) -> Result<SalemInput, Failure> {
    let p = IntPoly::parse_descending(poly).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    if !p.is_monic() {
        return Err(fail(EXIT_INVALID, "polynomial must be monic"));
    }
    let small = |c: num_bigint::BigInt| -> Result<i64, Failure> {
        c.to_i64()
            .ok_or_else(|| fail(EXIT_INVALID, "coefficients exceed i64 range"))
    };
    match p.degree() {
        Some(2) => {
            if !p.coeff(0).to_i64().map_or(false, |c| c == 1) {
                return Err(fail(
                    EXIT_INVALID,
                    "a degree-2 Salem polynomial has the form x^2 - Nx + 1",
                ));
            }
            let n = small(-p.coeff(1))?;
            let s = SalemQuadratic::new(n)
                .map_err(|e| fail(EXIT_NEGATIVE, format!("not Salem: {e}")))?;
            Ok(SalemInput::Quadratic(s))
        }
        Some(4) => {
            if !p.is_palindromic() || !p.coeff(0).to_i64().map_or(false, |c| c == 1) {
                return Err(fail(
                    EXIT_INVALID,
                    "a degree-4 Salem polynomial is palindromic with constant term 1",
                ));
            }
            let a = small(p.coeff(3))?;
            let b = small(p.coeff(2))?;
            let s = salem_check_deg4(a, b).map_err(|r| fail(EXIT_NEGATIVE, r.to_string()))?;
            Ok(SalemInput::Quartic(s))
        }
        _ => Err(fail(
            EXIT_INVALID,
            "expected a monic palindromic polynomial of degree 2 or 4",
        )),
    }
}

fn parse_form(form: &str) -> Result<DiagForm, Failure> {
    DiagForm::parse(form).map_err(|e| fail(EXIT_INVALID, e.to_string()))
}

fn describe_quartic(s: &SalemQuartic) -> Result<String, Failure> {
    let class = disc_class_deg4(s).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    let sr = match s.sqrt_witness() {
        Some(w) => format!("square-rootable (k={})", w.k),
        None => "not square-rootable".to_string(),
    };
    Ok(format!(
        "Salem, {sr}, disc class {class}  [F = {}]",
        s.minimal_polynomial()
    ))
}

fn cmd_verify(poly: &str) -> Result<u8, Failure> {
    match parse_salem(poly)? {
        SalemInput::Quartic(s) => {
            println!("{}", describe_quartic(&s)?);
        }
        SalemInput::Quadratic(s) => {
            let class = disc_class_deg2(&s).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
            println!(
                "Salem of degree 2, trace {}, disc class {class}  [F = {}]",
                s.trace(),
                s.minimal_polynomial()
            );
        }
    }
    Ok(EXIT_OK)
}

fn print_certificate(cert: &RealizationCertificate) {
    let realized = match cert.exponent {
        1 => "lambda".to_string(),
        e => format!("lambda^{e}"),
    };
    println!("realized:     {realized} with F = {}", cert.realized.minimal_polynomial());
    println!("matrix:       [[0, -1], [1, v]] with v = {}", cert.matrix.d());
    println!("quartic:      {}", cert.quartic);
    println!("charpoly:     {}", cert.charpoly);
    println!("quotient:     {}", cert.quotient);
    println!("ell numeric:  {:.10}", cert.ell_numeric);
    println!("log lambda:   {:.10}", cert.log_lambda);
    println!("checks:       order membership, Vahlen conditions, divisibility, length match");
}

fn cmd_realize(poly: Option<&str>, trace: Option<i64>, json: bool) -> Result<u8, Failure> {
    let cert = match (poly, trace) {
        (Some(p), None) => match parse_salem(p)? {
            SalemInput::Quartic(s) => {
                realize_any_deg4(&s).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?
            }
            SalemInput::Quadratic(s) => {
                realize_deg2(s.trace()).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?
            }
        },
        (None, Some(n)) => realize_deg2(n).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?,
        _ => {
            return Err(fail(
                EXIT_INVALID,
                "exactly one of --poly or --trace is required",
            ))
        }
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&cert.to_json()).expect("certificate serializes")
        );
    } else {
        print_certificate(&cert);
    }
    Ok(EXIT_OK)
}

fn cmd_invariants(form: &str) -> Result<u8, Failure> {
    let q = parse_form(form)?;
    let to_failure = |e: qforms::QFormError| fail(EXIT_INVALID, e.to_string());
    println!("form:         {q}");
    println!("rank:         {}", q.rank());
    println!("admissible:   {}", q.is_admissible());
    println!("det:          {}", q.det());
    println!("signed det:   {}", signed_det(&q).map_err(to_failure)?);
    println!("hasse class:  {}", hasse_class(&q).map_err(to_failure)?);
    println!("witt class:   {}", witt_class(&q).map_err(to_failure)?);
    if q.is_admissible() {
        let ram = ram_at_infinity_table(&q).map_err(to_failure)?;
        println!(
            "at infinity:  {}",
            if ram { "ramified" } else { "split" }
        );
    }
    Ok(EXIT_OK)
}

fn print_report(report: &ObstructionReport) {
    println!(
        "dim {}: {} for {} against F = {}",
        report.dim,
        report.verdict,
        report.form,
        report.salem.minimal_polynomial()
    );
    println!("evidence: {}", report.evidence);
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Possible => EXIT_OK,
        Verdict::Obstructed => EXIT_NEGATIVE,
        Verdict::Indeterminate => EXIT_INDETERMINATE,
    }
}

fn cmd_obstruct(dim: u8, form: &str, poly: &str) -> Result<u8, Failure> {
    let q = parse_form(form)?;
    let s = match parse_salem(poly)? {
        SalemInput::Quartic(s) => s,
        SalemInput::Quadratic(_) => {
            return Err(fail(
                EXIT_INVALID,
                "obstruction tests take a degree-4 Salem polynomial",
            ))
        }
    };
    let report = match dim {
        3 => obstruct_dim3(&q, &s),
        4 => obstruct_dim4(&q, &s),
        5 => obstruct_dim5(&q, &s),
        _ => return Err(fail(EXIT_INVALID, "--dim must be 3, 4 or 5")),
    }
    .map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    print_report(&report);
    Ok(verdict_code(report.verdict))
}

fn cmd_find_salem(disc: i64, square_rootable: bool, bound: Option<i64>) -> Result<u8, Failure> {
    let bound = default_bound(bound);
    if square_rootable {
        match salem_with_disc(disc, bound).map_err(|e| fail(EXIT_INVALID, e.to_string()))? {
            Some(s) => {
                println!("{}", describe_quartic(&s)?);
                Ok(EXIT_OK)
            }
            None => Err(fail(
                EXIT_EXHAUSTED,
                format!("no square-rootable Salem quartic with disc class -{disc} within bound"),
            )),
        }
    } else {
        let target = num_bigint::BigInt::from(-disc);
        for s in enumerate_salem(bound) {
            let class = disc_class_deg4(&s).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
            if class == target {
                println!("{}", describe_quartic(&s)?);
                return Ok(EXIT_OK);
            }
        }
        Err(fail(
            EXIT_EXHAUSTED,
            format!("no Salem quartic with disc class -{disc} within bound {bound}"),
        ))
    }
}

fn cmd_find_obstructed(dim: u8, form: &str, bound: Option<i64>) -> Result<u8, Failure> {
    let q = parse_form(form)?;
    let bound = default_bound(bound);
    let (hit, stats) =
        find_obstructed(&q, dim, bound).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
    match hit {
        Some(report) => {
            print_report(&report);
            println!(
                "scanned {} Salem quartics ({} square-rootable, {} indeterminate)",
                stats.scanned, stats.square_rootable, stats.indeterminate
            );
            Ok(EXIT_OK)
        }
        None => Err(fail(
            EXIT_EXHAUSTED,
            format!(
                "no obstructed witness within bound {bound} \
                 (scanned {}, {} indeterminate); not a universality claim",
                stats.scanned, stats.indeterminate
            ),
        )),
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// The fixture CSV: `a,b,k_or_dash,disc_class` per Salem quartic.
fn fixture_csv(bound: i64) -> Result<String, Failure> {
    let mut body = String::new();
    for s in enumerate_salem(bound) {
        let k = match s.sqrt_witness() {
            Some(w) => w.k.to_string(),
            None => "-".to_string(),
        };
        let class = disc_class_deg4(&s).map_err(|e| fail(EXIT_INVALID, e.to_string()))?;
        body.push_str(&format!("{},{},{},{}\n", s.a(), s.b(), k, class));
    }
    Ok(body)
}

fn cmd_fixtures(regenerate: bool, bound: Option<i64>, out: Option<&PathBuf>) -> Result<u8, Failure> {
    if !regenerate {
        return Err(fail(EXIT_INVALID, "pass --regenerate to produce fixtures"));
    }
    let bound = default_bound(bound);
    let body = fixture_csv(bound)?;
    let output = format!("{body}# checksum: {:016x}\n", fnv1a64(body.as_bytes()));
    match out {
        Some(path) => {
            std::fs::write(path, &output)
                .map_err(|e| fail(EXIT_INVALID, format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {} rows to {}", body.lines().count(), path.display());
        }
        None => print!("{output}"),
    }
    Ok(EXIT_OK)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Verify { poly } => cmd_verify(poly),
        Command::Realize { poly, trace, json } => cmd_realize(poly.as_deref(), *trace, *json),
        Command::Invariants { form } => cmd_invariants(form),
        Command::Obstruct { dim, form, poly } => cmd_obstruct(*dim, form, poly),
        Command::FindSalem {
            disc,
            square_rootable,
            bound,
        } => cmd_find_salem(*disc, *square_rootable, *bound),
        Command::FindObstructed { dim, form, bound } => cmd_find_obstructed(*dim, form, *bound),
        Command::Fixtures {
            regenerate,
            bound,
            out,
        } => cmd_fixtures(*regenerate, *bound, out.as_ref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("{message}");
            ExitCode::from(code)
        }
    }
}
