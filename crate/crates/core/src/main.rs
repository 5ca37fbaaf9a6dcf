use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use alexander::braid::{zvk_presentation, BraidWord};
use alexander::fox::{alexander_one_variable, alexander_polynomial};
use alexander::group::{AbelMap, Presentation};
use alexander::io::{self, InputError};
use alexander::linkpoly::{hat_delta, multivariable_delta, one_variable_delta, LinkError, MarkedLink};
use alexander::ring::{LaurentPoly, MultiLaurentPoly, UnitNormalForm};
use alexander::verify::{generic_infinity, verify_curve};

#[derive(Parser)]
#[command(name = "alexander", version, about = "Alexander polynomials of curve complements and links")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of a presentation with its map to Z^k.
    Fox { presentation: PathBuf },
    /// Zariski–van Kampen presentation of a braid monodromy factorization.
    Zvk { factorization: PathBuf },
    /// Alexander polynomials of a braid closure.
    Closure(ClosureArgs),
    /// Euler characteristic, first Betti number, boundary polynomial and affine counts.
    Curve { curve: PathBuf },
    /// Run every divisibility and bound check on a curve.
    Verify(VerifyArgs),
    /// Split a polynomial into cyclotomic factors.
    Cyclo { polynomial: String },
}

#[derive(Args)]
struct ClosureArgs {
    braid: PathBuf,
    /// Multivariable polynomial, one variable per component.
    #[arg(long, conflicts_with_all = ["one", "hat"])]
    multi: bool,
    /// One-variable polynomial (the default).
    #[arg(long, conflicts_with = "hat")]
    one: bool,
    /// Twisted polynomial with the marked meridian sent to -d.
    #[arg(long, value_name = "D", requires = "marked", allow_negative_numbers = true)]
    hat: Option<i64>,
    /// Marked component, named by its smallest strand.
    #[arg(long, value_name = "COMPONENT", requires = "hat")]
    marked: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    curve: PathBuf,
    /// Polynomial text, or a presentation / factorization JSON file.
    #[arg(long)]
    delta: String,
    /// Link JSON of the link at infinity, or "generic".
    #[arg(long, default_value = "generic")]
    infinity: String,
}

/// Why a run stopped: a failed check (1) or bad input (2).
enum Failure {
    Check(String),
    Input(String),
}

type Outcome = Result<(String, Value, bool), Failure>;

fn input_error(file: &Path, e: InputError) -> Failure {
    Failure::Input(format!("{}: {e}", file.display()))
}

fn read(file: &Path) -> Result<String, Failure> {
    fs::read_to_string(file).map_err(|e| Failure::Input(format!("{}: cannot read: {e}", file.display())))
}

fn load<T>(file: &Path, parse: impl Fn(&str) -> Result<T, InputError>) -> Result<T, Failure> {
    parse(&read(file)?).map_err(|e| input_error(file, e))
}

/// Multivariable polynomials in one variable print as polynomials in `t`.
fn show_multi(p: &UnitNormalForm<MultiLaurentPoly>) -> String {
    match p.to_univariate() {
        Some(u) => u.normalize().to_string(),
        None => p.to_string(),
    }
}

fn presentation_json(p: &Presentation) -> Value {
    let ab = p.abelianization();
    json!({
        "generators": p.generators(),
        "relators": p.relators().iter().map(|r| r.format(p.generators())).collect::<Vec<_>>(),
        "abelianization": {"free_rank": ab.free_rank, "torsion": ab.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()},
    })
}

fn fox(file: &Path) -> Outcome {
    let (p, phi) = load(file, io::parse_presentation)?;
    let delta = alexander_polynomial(&p, &phi).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let text = show_multi(&delta);
    Ok((text.clone(), json!({"variables": phi.rank(), "alexander": text}), true))
}

fn zvk(file: &Path) -> Outcome {
    let (f, projective) = load(file, io::parse_factorization)?;
    let p = zvk_presentation(&f, projective).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let mut value = presentation_json(&p);
    value["projective"] = json!(projective);
    value["components"] = json!(f.component_count());
    if projective {
        let text = p.relators().iter().map(|r| r.format(p.generators())).collect::<Vec<_>>().join("\n");
        return Ok((text, value, true));
    }
    let delta = alexander_one_variable(&p, &AbelMap::all_ones(p.generator_count()))
        .map_err(|e| Failure::Check(e.to_string()))?;
    value["alexander"] = json!(delta.to_string());
    Ok((delta.to_string(), value, true))
}

fn link_failure(e: LinkError) -> Failure {
    match e {
        LinkError::PathMismatch { .. } => Failure::Check(e.to_string()),
        e => Failure::Input(e.to_string()),
    }
}

fn closure(args: &ClosureArgs) -> Outcome {
    let braid: BraidWord = load(&args.braid, io::parse_braid)?;
    let components = braid.strand_components();
    let (kind, text) = if let (Some(d), Some(s)) = (args.hat, args.marked) {
        let m = components.iter().position(|c| c[0] + 1 == s).ok_or_else(|| {
            Failure::Input(format!("--marked: {s} is not the smallest strand of a component"))
        })?;
        let link = MarkedLink::with_marked(braid, m, d).map_err(|e| Failure::Input(format!("--hat: {e}")))?;
        ("hat", hat_delta(&link).map_err(link_failure)?.to_string())
    } else if args.multi {
        let link = MarkedLink::plain(braid);
        ("multi", multivariable_delta(&link).map_err(link_failure)?.to_string())
    } else {
        ("one", one_variable_delta(&MarkedLink::plain(braid)).map_err(link_failure)?.to_string())
    };
    let strands: Vec<Vec<usize>> = components.iter().map(|c| c.iter().map(|s| s + 1).collect()).collect();
    Ok((text.clone(), json!({"kind": kind, "components": strands, "alexander": text}), true))
}

fn curve(file: &Path) -> Outcome {
    let c = load(file, io::parse_curve)?;
    let boundary = c.boundary_delta().map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
    let counts = c.affine_counts();
    let value = json!({
        "euler_characteristic": {"curve": c.euler_characteristic(false), "with_line": c.euler_characteristic(true)},
        "first_betti": {"curve": c.first_betti(false), "with_line": c.first_betti(true)},
        "boundary_delta": boundary.to_string(),
        "affine": counts,
    });
    let text = format!(
        "chi(C) = {}\nchi(C+L) = {}\nb1(C) = {}\nb1(C+L) = {}\nboundary delta = {}\naffine: s = {}, l = {}, chi_ns = {}",
        c.euler_characteristic(false),
        c.euler_characteristic(true),
        c.first_betti(false),
        c.first_betti(true),
        boundary,
        counts.singularities,
        counts.components,
        counts.euler_nonsingular,
    );
    Ok((text, value, true))
}

/// `--delta`: a polynomial, or a JSON file holding a factorization (the
/// affine presentation is used) or a one-variable presentation.
fn delta_argument(arg: &str) -> Result<LaurentPoly, Failure> {
    let path = Path::new(arg);
    if !path.is_file() {
        return arg.parse().map_err(|e| Failure::Input(format!("--delta: {e}")));
    }
    let src = read(path)?;
    let is_factorization = serde_json::from_str::<Value>(&src).is_ok_and(|v| v.get("factors").is_some());
    let (p, phi) = if is_factorization {
        let (f, _) = io::parse_factorization(&src).map_err(|e| input_error(path, e))?;
        let p = zvk_presentation(&f, false).map_err(|e| Failure::Input(e.to_string()))?;
        let n = p.generator_count();
        (p, AbelMap::all_ones(n))
    } else {
        io::parse_presentation(&src).map_err(|e| input_error(path, e))?
    };
    if phi.rank() != 1 {
        return Err(Failure::Input(format!("{}: field `phi`: expected a map to Z", path.display())));
    }
    let delta = alexander_one_variable(&p, &phi).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(delta.into_poly())
}

fn verify(args: &VerifyArgs) -> Outcome {
    let c = load(&args.curve, io::parse_curve)?;
    let delta = delta_argument(&args.delta)?;
    let infinity = if args.infinity == "generic" {
        generic_infinity(c.degree())
    } else {
        let link = load(Path::new(&args.infinity), io::parse_link)?;
        one_variable_delta(&link).map_err(link_failure)?.into_poly()
    };
    let report = verify_curve(&c, &delta, &infinity).map_err(|e| Failure::Input(format!("{}: {e}", args.curve.display())))?;
    let value = serde_json::to_value(&report).expect("report serializes");
    Ok((report.to_string(), json!({"passed": report.passed(), "report": value}), report.passed()))
}

fn cyclo(text: &str) -> Outcome {
    let p: LaurentPoly = text.parse().map_err(|e| Failure::Input(format!("polynomial: {e}")))?;
    match p.cyclotomic_factorization() {
        Err(_) => Ok(("0".into(), json!({"polynomial": "0", "cyclotomic": true}), true)),
        Ok(f) => {
            let ok = f.is_cyclotomic_product();
            let value = json!({
                "polynomial": p.normalize().to_string(),
                "factorization": f.to_string(),
                "factors": f.factors.iter().map(|&(n, m)| json!({"n": n, "multiplicity": m})).collect::<Vec<_>>(),
                "remainder": f.remainder.to_string(),
                "cyclotomic": ok,
            });
            Ok((f.to_string(), value, ok))
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn print_out(s: &str) {
    let _ = writeln!(std::io::stdout(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Fox { presentation } => fox(presentation),
        Command::Zvk { factorization } => zvk(factorization),
        Command::Closure(args) => closure(args),
        Command::Curve { curve: file } => curve(file),
        Command::Verify(args) => verify(args),
        Command::Cyclo { polynomial } => cyclo(polynomial),
    };
    match outcome {
        Ok((text, value, ok)) => {
            match cli.output {
                Output::Text => print_out(&text),
                Output::Json => print_out(&serde_json::to_string_pretty(&value).expect("json")),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
