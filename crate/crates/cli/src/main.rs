use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use steep::closed_forms as cf;
use steep::extended::{self as ext, DiamondWord, ExtendedSeq, MatchingWindow};
use steep::render;
use steep::steep::{seq_to_tiling, sufficient_half_width, BoundaryMode, InterlacedSeq, SignWord, TilingWindow};
use steep::verify::{self, Bounds, Suite};
use steep::{Integer, MultiSeries, UniSeries};

#[derive(Parser)]
#[command(name = "steep", version, about = "Generating functions, bijections and pictures of steep domino tilings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a product formula.
    Formula(SeriesArgs),
    /// Evaluate the same generating function with vertex operators.
    Oracle(SeriesArgs),
    /// Generating function of an extended model given by a diamond word.
    Extended(ExtendedArgs),
    /// Run verification suites; exit code 1 on any failure.
    Verify(VerifyArgs),
    /// Convert between partition sequences, tilings and matchings (JSON).
    Bijection(BijectionArgs),
    /// Draw a tiling or matching as SVG or ASCII.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Pure,
    Mixed,
    Free,
    #[value(alias = "cyclic", alias = "periodic")]
    Cylindric,
}

impl From<Model> for BoundaryMode {
    fn from(m: Model) -> BoundaryMode {
        match m {
            Model::Pure => BoundaryMode::Pure,
            Model::Mixed => BoundaryMode::Mixed,
            Model::Free => BoundaryMode::Free,
            Model::Cylindric => BoundaryMode::Periodic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Args)]
struct SeriesArgs {
    /// Asymptotic data as `+`/`-` characters, even length.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long, value_enum, default_value = "pure")]
    model: Model,
    #[arg(long, env = "OBLIQUE_TRUNC_DEFAULT", default_value_t = 10)]
    trunc: usize,
    /// Refine by one variable per diagonal (or rim).
    #[arg(long, conflicts_with = "at_one")]
    multi: bool,
    /// Value at q = 1; only for polynomial generating functions within the truncation.
    #[arg(long)]
    at_one: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Enumerate,
}

#[derive(Args)]
struct ExtendedArgs {
    /// Comma-separated relations among h+, h-, v+, v-.
    #[arg(long, allow_hyphen_values = true)]
    diamond: String,
    #[arg(long, env = "OBLIQUE_TRUNC_DEFAULT", default_value_t = 10)]
    trunc: usize,
    #[arg(long, value_enum, default_value = "formula")]
    method: Method,
    #[arg(long)]
    multi: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run; all of them when omitted.
    #[arg(long, value_enum)]
    suite: Vec<SuiteArg>,
    #[arg(long, default_value_t = Bounds::default().max_len)]
    max_len: usize,
    #[arg(long, default_value_t = Bounds::default().trunc)]
    trunc: usize,
    #[arg(long, default_value_t = Bounds::default().max_size)]
    max_size: usize,
    #[arg(long, default_value_t = Bounds::default().samples)]
    samples: usize,
    #[arg(long, default_value_t = Bounds::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Commutation,
    Reflection,
    Formulas,
    Flips,
    Bijection,
    Extended,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Commutation => Suite::Commutation,
            SuiteArg::Reflection => Suite::Reflection,
            SuiteArg::Formulas => Suite::Formulas,
            SuiteArg::Flips => Suite::Flips,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Extended => Suite::Extended,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// `{"word", "partitions"}` to a tiling window.
    SeqToTiling,
    TilingToSeq,
    /// `{"diamond", "partitions"}` to a matching window.
    SeqToMatching,
    MatchingToSeq,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    direction: Direction,
    /// JSON input file; standard input when omitted or `-`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Half-width (tilings) or half-height (matchings) of the window; the smallest safe value
    /// when omitted.
    #[arg(long)]
    window: Option<i64>,
}

#[derive(Args)]
struct RenderArgs {
    /// Draw the minimal tiling of this word.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["diamond", "input"])]
    word: Option<String>,
    /// Draw the minimal matching of this diamond word.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "input")]
    diamond: Option<String>,
    /// A sequence, tiling, extended sequence or matching as JSON.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    window: Option<i64>,
    /// Overlay occupied and empty sites.
    #[arg(long)]
    particles: bool,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
}

/// An input or usage error, reported with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure(e.to_string())
    }
}

type Result<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, output, ok) = match run(cli.command) {
        Ok(x) => x,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match output {
        Some(path) => fs::write(&path, &out).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout().write_all(out.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cmd: Command) -> Result<(String, Option<PathBuf>, bool)> {
    let (out, ok, output) = match cmd {
        Command::Formula(a) => (series(&a, false)?, true, None),
        Command::Oracle(a) => (series(&a, true)?, true, None),
        Command::Extended(a) => (extended(&a)?, true, None),
        Command::Verify(a) => {
            let (s, ok) = verify(&a)?;
            (s, ok, None)
        }
        Command::Bijection(a) => (bijection(&a)?, true, a.output),
        Command::Render(a) => (render(&a)?, true, a.output),
    };
    let out = if out.ends_with('\n') { out } else { out + "\n" };
    Ok((out, output, ok))
}

fn parse_word(s: &str) -> Result<SignWord> {
    Ok(s.parse::<SignWord>()?)
}

fn parse_diamond(s: &str) -> Result<DiamondWord> {
    Ok(s.parse::<DiamondWord>()?)
}

fn uni_output(s: &UniSeries, format: Format, header: Value) -> Result<String> {
    match format {
        Format::Text => Ok(s.to_string()),
        Format::Json => Ok(pretty(&with(header, "series", s.to_json()))),
        _ => Err(Failure("series output is text or json".into())),
    }
}

fn multi_output(s: &MultiSeries, format: Format, header: Value) -> Result<String> {
    match format {
        Format::Text => Ok(s.to_string()),
        Format::Json => Ok(pretty(&with(header, "series", s.to_json()))),
        _ => Err(Failure("series output is text or json".into())),
    }
}

fn with(mut header: Value, key: &str, v: Value) -> Value {
    header[key] = v;
    header
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn integer_json(x: &Integer) -> Value {
    serde_json::from_str(&x.to_string()).expect("integers are JSON numbers")
}

fn series(a: &SeriesArgs, oracle: bool) -> Result<String> {
    let w = parse_word(&a.word)?;
    let mode = BoundaryMode::from(a.model);
    let header = json!({
        "word": w.to_string(),
        "model": format!("{mode:?}").to_lowercase(),
        "trunc": a.trunc,
        "method": if oracle { "oracle" } else { "formula" },
    });
    if a.multi {
        let s = if oracle { verify::oracle_multi(mode, &w, a.trunc)? } else { cf::formula_multi(mode, &w, a.trunc)? };
        return multi_output(&s, a.format, header);
    }
    let s = if oracle { verify::oracle_q(mode, &w, a.trunc)? } else { cf::formula_q(mode, &w, a.trunc)? };
    if a.at_one {
        let degree = match (mode, cf::pure_degree(&w)) {
            (BoundaryMode::Pure, Some(d)) => d,
            _ => {
                return Err(Failure(
                    format!("the {mode:?} generating function of {w} is not a polynomial").to_lowercase(),
                ))
            }
        };
        if degree > a.trunc {
            return Err(Failure(format!("degree {degree} exceeds the truncation {}", a.trunc)));
        }
        let v = cf::value_at_one(&s);
        return match a.format {
            Format::Json => Ok(pretty(&with(header, "value_at_one", integer_json(&v)))),
            _ => Ok(v.to_string()),
        };
    }
    uni_output(&s, a.format, header)
}

fn extended(a: &ExtendedArgs) -> Result<String> {
    let d = parse_diamond(&a.diamond)?;
    let method = match a.method {
        Method::Formula => "formula",
        Method::Oracle => "oracle",
        Method::Enumerate => "enumerate",
    };
    let header = json!({ "diamond": d.to_string(), "trunc": a.trunc, "method": method });
    if a.multi {
        let s = match a.method {
            Method::Formula => cf::extended_multi(d.symbols(), a.trunc),
            Method::Oracle => verify::extended_oracle_multi(&d, a.trunc),
            Method::Enumerate => return Err(Failure("enumeration counts by total size only".into())),
        };
        return multi_output(&s, a.format, header);
    }
    let s = match a.method {
        Method::Formula => cf::extended_q(d.symbols(), a.trunc),
        Method::Oracle => verify::extended_oracle_q(&d, a.trunc),
        Method::Enumerate => UniSeries::from_coeffs(
            ext::pure_extended_counts(&d, a.trunc).into_iter().map(Integer::from).collect(),
            a.trunc,
        ),
    };
    uni_output(&s, a.format, header)
}

fn verify(a: &VerifyArgs) -> Result<(String, bool)> {
    let bounds = Bounds { max_len: a.max_len, trunc: a.trunc, max_size: a.max_size, samples: a.samples, seed: a.seed };
    if bounds.max_len == 0 || bounds.max_len > 8 || bounds.trunc > 16 || bounds.max_size > 8 {
        return Err(Failure("bounds out of range: max-len 1..=8, trunc ≤ 16, max-size ≤ 8".into()));
    }
    let suites: Vec<Suite> =
        if a.suite.is_empty() { Suite::ALL.to_vec() } else { a.suite.iter().map(|&s| s.into()).collect() };
    let reports: Vec<_> = suites.iter().map(|&s| verify::run(s, &bounds)).collect();
    let ok = reports.iter().all(|r| r.passed());
    let out = match a.format {
        Format::Json => pretty(&json!({
            "passed": ok,
            "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        })),
        Format::Text => reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"),
        _ => return Err(Failure("verification reports are text or json".into())),
    };
    Ok((out, ok))
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn bijection(a: &BijectionArgs) -> Result<String> {
    let input = read_input(&a.input)?;
    let out = match a.direction {
        Direction::SeqToTiling => {
            let s: InterlacedSeq = serde_json::from_str(&input)?;
            let t = seq_to_tiling(&s, a.window.unwrap_or_else(|| sufficient_half_width(&s)))?;
            serde_json::to_value(&t)?
        }
        Direction::TilingToSeq => {
            let t: TilingWindow = serde_json::from_str(&input)?;
            serde_json::to_value(t.to_seq()?)?
        }
        Direction::SeqToMatching => {
            let s: ExtendedSeq = serde_json::from_str(&input)?;
            let m = ext::psi_inverse(&s, a.window.unwrap_or_else(|| ext::sufficient_half_height(&s)))?;
            serde_json::to_value(&m)?
        }
        Direction::MatchingToSeq => {
            let m: MatchingWindow = serde_json::from_str(&input)?;
            serde_json::to_value(m.psi()?)?
        }
    };
    Ok(pretty(&out))
}

enum Picture {
    Tiling(TilingWindow, Option<InterlacedSeq>),
    Matching(MatchingWindow),
}

fn picture(a: &RenderArgs) -> Result<Picture> {
    if let Some(w) = &a.word {
        let s = InterlacedSeq::empty(&parse_word(w)?);
        let t = seq_to_tiling(&s, a.window.unwrap_or_else(|| sufficient_half_width(&s)))?;
        return Ok(Picture::Tiling(t, Some(s)));
    }
    if let Some(d) = &a.diamond {
        let s = ExtendedSeq::empty(&parse_diamond(d)?);
        return Ok(Picture::Matching(ext::psi_inverse(
            &s,
            a.window.unwrap_or_else(|| ext::sufficient_half_height(&s)),
        )?));
    }
    let input = read_input(&a.input)?;
    let v: Value = serde_json::from_str(&input)?;
    if v.get("dominos").is_some() {
        let t: TilingWindow = serde_json::from_value(v)?;
        let s = t.to_seq().ok();
        Ok(Picture::Tiling(t, s))
    } else if v.get("edges").is_some() {
        Ok(Picture::Matching(serde_json::from_value(v)?))
    } else if v.get("diamond").is_some() {
        let s: ExtendedSeq = serde_json::from_value(v)?;
        Ok(Picture::Matching(ext::psi_inverse(&s, a.window.unwrap_or_else(|| ext::sufficient_half_height(&s)))?))
    } else if v.get("word").is_some() {
        let s: InterlacedSeq = serde_json::from_value(v)?;
        let t = seq_to_tiling(&s, a.window.unwrap_or_else(|| sufficient_half_width(&s)))?;
        Ok(Picture::Tiling(t, Some(s)))
    } else {
        Err(Failure("input is not a sequence, tiling or matching".into()))
    }
}

fn render(a: &RenderArgs) -> Result<String> {
    let out = match (picture(a)?, a.format) {
        (Picture::Tiling(t, _), Format::Svg) => render::tiling_svg(&t, a.particles)?,
        (Picture::Tiling(t, Some(s)), Format::Ascii) if a.particles => render::particle_ascii(&s, t.half_width()),
        (Picture::Tiling(_, None), Format::Ascii) if a.particles => {
            return Err(Failure("the tiling does not decode to a sequence".into()))
        }
        (Picture::Tiling(t, _), Format::Ascii) => render::tiling_ascii(&t),
        (Picture::Matching(m), Format::Svg) => render::matching_svg(&m),
        (Picture::Matching(_), _) => return Err(Failure("matchings render as svg only".into())),
        (Picture::Tiling(..), _) => return Err(Failure("tilings render as svg or ascii".into())),
    };
    Ok(out)
}
