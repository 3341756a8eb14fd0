use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skein_core::element::{self, Label, SkeinElement};
use skein_core::polyseq::{chebyshev, seq_leq};
use skein_core::ptorus::{self, PTorusLabel};
use skein_core::s04::{self, S04Label};
use skein_core::torus::{self, TorusLabel};
use skein_core::verify::{self, CheckReport};
use skein_core::{positivity, Basis, ChebKind, PolySeq, PositivityReport, SkeinError};

type CliResult<T = ExitCode> = Result<T, Box<dyn std::error::Error>>;

const VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(name = "skein", version, about = "Kauffman bracket skein algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The closed torus.
    #[command(subcommand)]
    Tor(TorCmd),
    /// The once-punctured torus.
    #[command(subcommand)]
    Ptor(PtorCmd),
    /// The four-punctured sphere.
    #[command(subcommand)]
    S04(S04Cmd),
    /// Bounded positivity certificates.
    #[command(subcommand)]
    Certify(CertifyCmd),
    /// Print a Chebyshev polynomial.
    Cheb {
        kind: Cheb,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare polynomial sequences.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Read a JSON element and print it again.
    Element {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct MulArgs {
    /// A label such as "(2,1)", or @FILE holding a JSON element.
    a: String,
    b: String,
    /// that | s | monomial | file:PATH. Defaults to the flavor letter on the
    /// labels, then to the surface default.
    #[arg(long)]
    basis: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum TorCmd {
    Mul(MulArgs),
    /// Check every structure constant over the labels with |r|,|s| <= bound.
    Scan {
        #[arg(long, default_value = "that")]
        basis: String,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        /// Specialize to q = 1 before checking signs.
        #[arg(long)]
        q1: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PtorCheck {
    GClosed,
    Induction,
}

#[derive(Subcommand)]
enum PtorCmd {
    Mul(MulArgs),
    Verify {
        check: PtorCheck,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lowest q-power part of P(n,1) P(0,1) in B_P.
    Extract {
        #[arg(long, default_value = "s")]
        seq: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum S04Check {
    HBounds,
    Fg,
    Sigma,
    GClosed,
}

#[derive(Subcommand)]
enum S04Cmd {
    Mul(MulArgs),
    Verify {
        check: S04Check,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Lowest q-power part of S(n,1) S(0,1).
    Extract {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// P1(a) P1(b) for P_1 = x + delta.
    ForceP1 {
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CertifyCmd {
    /// Perturb That at levels 2..=n-max and look for violations.
    TorusUnique {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long = "box", default_value_t = 2)]
        coeff_box: i64,
        #[arg(long)]
        json: bool,
    },
    /// (That) <= (P) <= (S).
    Sandwich {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// (That) <= (P) read off P_n(a) P_1(b) on the four-punctured sphere.
    Lower {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OrderCmd {
    /// Is every Q_n a positive combination of P_0..P_n?
    Leq {
        p: String,
        q: String,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Cheb {
    T,
    That,
    S,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(SkeinError::Parse { input, pos, .. }) = e.downcast_ref::<SkeinError>() {
                eprintln!("  {input}");
                eprintln!("  {}^", " ".repeat(input[..*pos.min(&input.len())].chars().count()));
            }
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Tor(TorCmd::Mul(args)) => multiply::<TorusLabel>(&args, "that", |x, y, p| {
            via_that(x, y, p, torus::mul)
        }),
        Command::Tor(TorCmd::Scan { basis, bound, q1, json }) => {
            let p = PolySeq::resolve(&basis)?;
            p.basis()?;
            let rep = torus::positivity_scan(&p, bound, q1)?;
            let head = format!(
                "positivity scan of ({}) on the torus, |r|,|s| <= {bound}{}",
                p.display_name(),
                if q1 { ", q = 1" } else { "" }
            );
            emit(json, rep.to_json(), report_text(&head, &rep));
            Ok(verdict(rep.is_certified()))
        }
        Command::Ptor(PtorCmd::Mul(args)) => multiply::<PTorusLabel>(&args, "that", |x, y, p| {
            via_that(x, y, p, ptorus::mul)
        }),
        Command::Ptor(PtorCmd::Verify { check, n_max, json }) => {
            let rep = match check {
                PtorCheck::GClosed => verify::ptor_g_closed(n_max),
                PtorCheck::Induction => verify::ptor_induction(n_max)?,
            };
            Ok(check_out(json, &rep))
        }
        Command::Ptor(PtorCmd::Extract { seq, n, json }) => {
            let p = PolySeq::resolve(&seq)?;
            let (e, part) = ptorus::upper_bound_extract(&p, n)?;
            let head = format!(
                "lowest q-power of P(({n},1)) P((0,1)) on the once-punctured torus, P = {}",
                p.display_name()
            );
            Ok(extract_out(json, &head, &p, n, e, &part))
        }
        Command::S04(S04Cmd::Mul(args)) => multiply::<S04Label>(&args, "s", s04_mul),
        Command::S04(S04Cmd::Verify { check, n_max, json }) => {
            let rep = match check {
                S04Check::HBounds => verify::s04_h_bounds(n_max)?,
                S04Check::Fg => verify::s04_fg(n_max)?,
                S04Check::Sigma => verify::s04_sigma(n_max)?,
                S04Check::GClosed => verify::s04_g_closed(n_max)?,
            };
            Ok(check_out(json, &rep))
        }
        Command::S04(S04Cmd::Extract { n, json }) => {
            let (e, part) = s04::lowest_q_term_s04(n)?;
            let head = format!("lowest q-power of S(({n},1)) S((0,1)) on the four-punctured sphere");
            Ok(extract_out(json, &head, &PolySeq::s(), n, e, &part))
        }
        Command::S04(S04Cmd::ForceP1 { delta, json }) => {
            let w = s04::p1_forcing_witness(delta)?;
            let rep = w.report();
            let mut text = report_text(
                &format!("P1(a) P1(b) with P_1 = x{delta:+} on the four-punctured sphere"),
                &rep,
            );
            let _ = writeln!(text, "product: {}", w.product);
            let mut v = rep.to_json();
            v["product"] = w.product.to_json();
            emit(json, v, text);
            Ok(verdict(rep.is_certified()))
        }
        Command::Certify(CertifyCmd::TorusUnique { n_max, coeff_box, json }) => {
            let rep = positivity::torus_uniqueness(n_max, coeff_box)?;
            emit(json, rep.to_json(), format!("{rep}\n"));
            Ok(verdict(rep.certified()))
        }
        Command::Certify(CertifyCmd::Sandwich { seq, n_max, json }) => {
            let p = PolySeq::resolve(&seq)?;
            let v = positivity::sandwich_check(&p, n_max)?;
            emit(json, v.to_json(), format!("{v}\n"));
            Ok(verdict(v.holds()))
        }
        Command::Certify(CertifyCmd::Lower { seq, n_max, json }) => {
            let p = PolySeq::resolve(&seq)?;
            let rep = positivity::lower_bound_certify(&p, n_max)?;
            let head = format!(
                "lower bound (That) <= ({}) from Pn(a) P1(b), n <= {n_max}",
                p.display_name()
            );
            emit(json, rep.to_json(), report_text(&head, &rep));
            Ok(verdict(rep.is_certified()))
        }
        Command::Cheb { kind, n, json } => {
            let (k, name) = match kind {
                Cheb::T => (ChebKind::T, "T"),
                Cheb::That => (ChebKind::THat, "That"),
                Cheb::S => (ChebKind::S, "S"),
            };
            let p = chebyshev(k, n);
            let v = json!({
                "kind": name,
                "n": n,
                "coeffs": p.coeffs().iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            });
            emit(json, v, format!("{name}_{n}(x) = {}\n", p.display_with("x")));
            Ok(ExitCode::SUCCESS)
        }
        Command::Order(OrderCmd::Leq { p, q, n_max, json }) => {
            let (ps, qs) = (PolySeq::resolve(&p)?, PolySeq::resolve(&q)?);
            let v = seq_leq(&ps, &qs, n_max)?;
            let rel = format!("({}) <= ({})", ps.display_name(), qs.display_name());
            let text = match &v.witness {
                None => format!("{rel} certified to n={n_max}\n"),
                Some(w) => format!(
                    "{rel} fails at n={}: coefficient of {}_{} is {}\n",
                    w.n,
                    ps.display_name(),
                    w.k,
                    w.coeff
                ),
            };
            let value = json!({
                "relation": rel,
                "p": ps.name(),
                "q": qs.name(),
                "n_max": n_max,
                "verdict": if v.holds { "certified" } else { "violation" },
                "witness": v.witness.as_ref().map(|w| json!({
                    "n": w.n,
                    "k": w.k,
                    "coeff": w.coeff.to_json(),
                })),
            });
            emit(json, value, text);
            Ok(verdict(v.holds))
        }
        Command::Element { file, json } => {
            let v = read_json(&file)?;
            let text = match v.get("surface").and_then(Value::as_str) {
                Some(TorusLabel::SURFACE) => echo::<TorusLabel>(&v)?,
                Some(PTorusLabel::SURFACE) => echo::<PTorusLabel>(&v)?,
                Some(S04Label::SURFACE) => echo::<S04Label>(&v)?,
                other => return Err(SkeinError::Json(format!("unknown surface {other:?}")).into()),
            };
            emit(json, v, text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(VIOLATION)
    }
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn report_text(head: &str, rep: &PositivityReport) -> String {
    let mut s = format!("{head}: {}", rep.verdict());
    if !rep.is_certified() {
        let n = rep.witnesses.len();
        let _ = write!(s, " ({n} witness{})", if n == 1 { "" } else { "es" });
    }
    s.push('\n');
    for w in &rep.witnesses {
        let _ = writeln!(s, "  {w}");
    }
    s
}

fn check_out(json: bool, rep: &CheckReport) -> ExitCode {
    emit(json, rep.to_json(), rep.to_string());
    verdict(rep.passed())
}

fn extract_out<L: Label>(
    json: bool,
    head: &str,
    p: &PolySeq,
    n: usize,
    e: i64,
    part: &SkeinElement<L>,
) -> ExitCode {
    let positive = part.is_positive();
    let v = json!({
        "surface": L::SURFACE,
        "sequence": p.name(),
        "n": n,
        "exponent": e,
        "part": part.to_json(),
        "positive": positive,
    });
    emit(json, v, format!("{head}, n={n}: q^{e} * ({part})\n"));
    verdict(positive)
}

fn read_json(path: &Path) -> CliResult<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(serde_json::from_str(&text).map_err(|e| SkeinError::Json(e.to_string()))?)
}

fn echo<L: Label>(v: &Value) -> CliResult<String> {
    let x = SkeinElement::<L>::from_json(v)?;
    Ok(format!("{x}\n"))
}

/// The basis named on the command line, else the one the flavor letters on
/// the labels agree on, else the surface default.
fn pick_basis(args: &MulArgs, default: &str) -> CliResult<PolySeq> {
    if let Some(b) = &args.basis {
        return Ok(PolySeq::resolve(b)?);
    }
    let mut found: Option<&str> = None;
    for arg in [&args.a, &args.b] {
        for (i, _) in arg.match_indices('(') {
            let letter = arg[..i].chars().next_back();
            let name = match letter {
                Some('T') => "that",
                Some('S') => "s",
                Some('P') => continue,
                Some(c) if c.is_ascii_alphabetic() => {
                    return Err(format!("unknown flavor letter {c:?} in {arg:?}").into())
                }
                _ => continue,
            };
            if found.is_some_and(|f| f != name) {
                return Err("labels use different flavor letters; pass --basis".into());
            }
            found = Some(name);
        }
    }
    Ok(PolySeq::resolve(found.unwrap_or(default))?)
}

fn operand<L>(arg: &str, p: &PolySeq) -> CliResult<SkeinElement<L>>
where
    L: Label + FromStr<Err = SkeinError>,
{
    let basis = p.basis()?;
    if let Some(path) = arg.strip_prefix('@') {
        let x = SkeinElement::<L>::from_json(&read_json(Path::new(path))?)?;
        if *x.basis() == basis {
            return Ok(x);
        }
        let source = x.basis().builtin_seq().ok_or_else(|| {
            format!("{path}: cannot convert from basis {} to {}", x.basis().id(), basis.id())
        })?;
        return Ok(element::convert(&x, &source, p)?);
    }
    Ok(SkeinElement::from_label(basis, arg.parse()?))
}

fn multiply<L>(
    args: &MulArgs,
    default: &str,
    f: impl Fn(&SkeinElement<L>, &SkeinElement<L>, &PolySeq) -> skein_core::Result<SkeinElement<L>>,
) -> CliResult
where
    L: Label + FromStr<Err = SkeinError>,
{
    let p = pick_basis(args, default)?;
    let x = operand::<L>(&args.a, &p)?;
    let y = operand::<L>(&args.b, &p)?;
    let prod = f(&x, &y, &p)?;
    emit(args.json, prod.to_json(), format!("{prod}\n"));
    Ok(ExitCode::SUCCESS)
}

/// Multiplies in the `T̂` flavor and converts back to `p`.
fn via_that<L: Label>(
    x: &SkeinElement<L>,
    y: &SkeinElement<L>,
    p: &PolySeq,
    mul: fn(&SkeinElement<L>, &SkeinElement<L>) -> skein_core::Result<SkeinElement<L>>,
) -> skein_core::Result<SkeinElement<L>> {
    let that = PolySeq::t_hat();
    let prod = mul(&element::convert(x, p, &that)?, &element::convert(y, p, &that)?)?;
    element::convert(&prod, &that, p)
}

fn s04_mul(
    x: &s04::S04Element,
    y: &s04::S04Element,
    p: &PolySeq,
) -> skein_core::Result<s04::S04Element> {
    match x.basis() {
        Basis::S | Basis::THat => s04::mul(x, y),
        _ => {
            let s = PolySeq::s();
            let prod = s04::mul(&element::convert(x, p, &s)?, &element::convert(y, p, &s)?)?;
            element::convert(&prod, &s, p)
        }
    }
}
