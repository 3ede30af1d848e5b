
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use coxring::foxneuwirth::{self, Variant};
use coxring::gf2::BitMatrix;
use coxring::hopf_b::{self, RenderFormat};
use coxring::hopf_d;
use coxring::quillen::{self, Partition2, Site, SiteD};
use coxring::steenrod;
use coxring::verify::{self, Report};
use coxring::{Charge, ChargedMonomial, ElementB, ElementD, Monomial};

use coxring_cli::expr::{self, Value};

#[derive(Parser)]
#[command(name = "coxring", version, about = "Mod-2 cohomology Hopf rings of B_n and D_n")]
struct Cli {
    /// Directory for coboundary matrices in sparse triplet text.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    B,
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Coprod,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Betti,
    Axioms,
    Relations,
    Steenrod,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Additive basis in one component and degree.
    Basis {
        #[arg(long, value_enum, ignore_case = true)]
        ring: RingArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        deg: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate an expression, optionally applying the coproduct.
    Eval {
        #[arg(long, value_enum, default_value = "none")]
        op: Op,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        expr: String,
    },
    /// Restriction to an elementary abelian subgroup, e.g. `B:(2,1,1)` or `D:(4,4):s0`.
    Restrict {
        expr: String,
        #[arg(long)]
        site: String,
    },
    /// Steenrod square `Sq^i`.
    Sq {
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        expr: String,
    },
    /// Skyline diagrams of the monomials of an expression.
    Render {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        expr: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_deg: Option<u32>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_value(text: &str) -> Result<Value, Failure> {
    let (ring, e) = expr::parse(text).map_err(usage)?;
    expr::eval(ring, &e).map_err(Failure::Verification)
}

fn charge_name(c: Charge) -> &'static str {
    match c {
        Charge::Neutral => "neutral",
        Charge::Plus => "plus",
        Charge::Minus => "minus",
    }
}

fn monomial_json(m: &Monomial, charge: Option<Charge>) -> Json {
    let blocks: Vec<Json> = m.blocks().iter().map(|b| json!({"width": b.width, "profile": b.profile()})).collect();
    json!({"blocks": blocks, "charge": charge.map(charge_name)})
}

/// The common value of `f` over the items, or null.
fn common<T>(items: &[T], f: impl Fn(&T) -> u32) -> Json {
    let mut vals = items.iter().map(f);
    match vals.next() {
        Some(v) if vals.all(|w| w == v) => json!(v),
        _ => Json::Null,
    }
}

fn basis_json(ring: &str, ms: &[(Monomial, Option<Charge>)]) -> Json {
    json!({
        "ring": ring,
        "component": common(ms, |(m, _)| m.component()),
        "degree": common(ms, |(m, _)| m.degree()),
        "monomials": ms.iter().map(|(m, c)| monomial_json(m, *c)).collect::<Vec<_>>(),
    })
}

fn value_monomials(v: &Value) -> (&'static str, Vec<(Monomial, Option<Charge>)>) {
    match v {
        Value::B(x) => ("B", x.terms().map(|m| (m.clone(), None)).collect()),
        Value::D(x) => ("D", x.terms().map(|m| (m.base().clone(), Some(m.charge()))).collect()),
    }
}

fn pretty(j: &Json) -> String {
    serde_json::to_string_pretty(j).expect("json values serialize") + "\n"
}

fn show_value(v: &Value, format: Format) -> Outcome {
    match format {
        Format::Text => Ok(format!("{v}\n")),
        Format::Json => {
            let (ring, ms) = value_monomials(v);
            Ok(pretty(&basis_json(ring, &ms)))
        }
        Format::Svg => render(v, Format::Svg),
    }
}

fn cmd_basis(ring: RingArg, n: u32, deg: u32, format: Format) -> Outcome {
    let (name, ms, lines): (&str, Vec<(Monomial, Option<Charge>)>, Vec<String>) = match ring {
        RingArg::B => {
            let b = hopf_b::basis(n, deg);
            let lines = b.iter().map(|m| ElementB::from(m.clone()).to_string()).collect();
            ("B", b.into_iter().map(|m| (m, None)).collect(), lines)
        }
        RingArg::D => {
            let b = hopf_d::basis_d(n, deg);
            let lines = b.iter().map(|m| ElementD::from(m.clone()).to_string()).collect();
            ("D", b.into_iter().map(|m| (m.base().clone(), Some(m.charge()))).collect(), lines)
        }
    };
    match format {
        Format::Text => Ok(lines.iter().map(|l| format!("{l}\n")).collect()),
        Format::Json => Ok(pretty(&basis_json(name, &ms))),
        Format::Svg => Ok(svg_stack(&ms)),
    }
}

fn tensor_json(ring: &str, pairs: Vec<(Json, Json)>) -> Json {
    json!({
        "ring": ring,
        "terms": pairs.into_iter().map(|(l, r)| json!({"left": l, "right": r})).collect::<Vec<_>>(),
    })
}

fn cmd_eval(op: Op, format: Format, text: &str) -> Outcome {
    let v = parse_value(text)?;
    if op == Op::None {
        return show_value(&v, format);
    }
    match (&v, format) {
        (Value::B(x), Format::Text) => Ok(format!("{}\n", x.coproduct())),
        (Value::D(x), Format::Text) => Ok(format!("{}\n", x.coproduct())),
        (Value::B(x), Format::Json) => {
            let pairs = x.coproduct().terms().map(|(a, b)| (monomial_json(a, None), monomial_json(b, None))).collect();
            Ok(pretty(&tensor_json("B", pairs)))
        }
        (Value::D(x), Format::Json) => {
            let pairs = x
                .coproduct()
                .terms()
                .map(|(a, b)| (monomial_json(a.base(), Some(a.charge())), monomial_json(b.base(), Some(b.charge()))))
                .collect();
            Ok(pretty(&tensor_json("D", pairs)))
        }
        (_, Format::Svg) => Err(usage("coproducts have no svg output")),
    }
}

fn parse_site(label: &str) -> Result<Site, Failure> {
    let bad = || usage(format!("invalid site label '{label}'; expected e.g. B:(4,2,1) or D:(4,4):s0"));
    let (ring, rest) = label.split_once(':').ok_or_else(bad)?;
    let (parts, twisted) = match rest.strip_suffix(":s0") {
        Some(p) => (p, true),
        None => (rest, false),
    };
    let inner = parts.strip_prefix('(').and_then(|p| p.strip_suffix(')')).ok_or_else(bad)?;
    let nums = inner.split(',').map(|t| t.trim().parse::<u32>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
    let pi = Partition2::new(nums).ok_or_else(bad)?;
    match (ring, twisted) {
        ("B", false) => Ok(Site::B(pi)),
        ("D", _) => Ok(Site::D(SiteD { pi, twisted })),
        _ => Err(bad()),
    }
}

fn component_of(v: &Value) -> Option<u32> {
    let (_, ms) = value_monomials(v);
    let mut comps = ms.iter().map(|(m, _)| m.component());
    let c = comps.next()?;
    comps.all(|d| d == c).then_some(c)
}

fn cmd_restrict(text: &str, label: &str) -> Outcome {
    let site = parse_site(label)?;
    let v = parse_value(text)?;
    let n = site.partition().total();
    if let Some(c) = component_of(&v) {
        if c != n {
            return Err(usage(format!("expression lives in component {c}, site {label} in component {n}")));
        }
    }
    let valid = match &v {
        Value::B(_) => quillen::sites(quillen::Ring::B, n),
        Value::D(_) => quillen::sites(quillen::Ring::D, n),
    };
    if !valid.contains(&site) {
        let names: Vec<String> = valid.iter().map(|s| s.label()).collect();
        return Err(usage(format!("site {label} does not apply; sites here: {}", names.join(" "))));
    }
    let p = match (&v, &site) {
        (Value::B(x), Site::B(pi)) => quillen::restrict_b(x, pi),
        (Value::D(x), Site::D(sd)) => quillen::restrict_d(x, sd),
        _ => unreachable!("site ring checked above"),
    }
    .map_err(|e| Failure::Verification(e.to_string()))?;
    Ok(format!("{p}\n"))
}

fn cmd_sq(i: u32, format: Format, text: &str) -> Outcome {
    let v = parse_value(text)?;
    let out = match &v {
        Value::B(x) => steenrod::sq(i, x).map(Value::B),
        Value::D(x) => steenrod::sq_d(i, x).map(Value::D),
    }
    .map_err(|e| Failure::Verification(e.to_string()))?;
    show_value(&out, format)
}

fn svg_size(svg: &str, attr: &str) -> f64 {
    let key = format!("{attr}=\"");
    svg.find(&key)
        .and_then(|i| svg[i + key.len()..].split('"').next())
        .and_then(|s| s.parse().ok())
        .unwrap_or(0.0)
}

/// The skylines stacked vertically in one document, each with its label.
fn svg_stack(ms: &[(Monomial, Option<Charge>)]) -> String {
    let mut body = String::new();
    let (mut y, mut width) = (0.0f64, 0.0f64);
    for (m, c) in ms {
        let label = match c {
            None => ElementB::from(m.clone()).to_string(),
            Some(c) => ChargedMonomial::neutral(m.clone())
                .filter(|_| *c == Charge::Neutral)
                .or_else(|| ChargedMonomial::signed(m.clone(), *c == Charge::Plus))
                .map(|cm| ElementD::from(cm).to_string())
                .unwrap_or_default(),
        };
        let inner = hopf_b::render(m, RenderFormat::Svg);
        let (w, h) = (svg_size(&inner, "width"), svg_size(&inner, "height"));
        body += &format!("  <text x=\"4\" y=\"{:.0}\" font-size=\"12\">{}</text>\n", y + 14.0, xml_escape(&label));
        y += 20.0;
        body += &format!("  <svg x=\"0\" y=\"{y:.0}\" width=\"{w:.0}\" height=\"{h:.0}\">\n");
        body += inner.lines().skip(1).filter(|l| *l != "</svg>").map(|l| format!("  {l}\n")).collect::<String>().as_str();
        body += "  </svg>\n";
        y += h + 10.0;
        width = width.max(w).max(8.0 * label.len() as f64);
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{y:.0}\" viewBox=\"0 0 {width:.0} {y:.0}\">\n{body}</svg>\n"
    )
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn render(v: &Value, format: Format) -> Outcome {
    let (_, ms) = value_monomials(v);
    match format {
        Format::Svg => Ok(svg_stack(&ms)),
        Format::Json => Err(usage("render supports text and svg")),
        Format::Text => {
            let mut out = String::new();
            for (m, c) in &ms {
                match c {
                    None => out += &format!("{}\n", ElementB::from(m.clone())),
                    Some(c) => out += &format!("{} [{}]\n", ElementB::from(m.clone()), charge_name(*c)),
                }
                out += &hopf_b::render(m, RenderFormat::Ascii);
                out.push('\n');
            }
            if ms.is_empty() {
                out += "0\n";
            }
            Ok(out)
        }
    }
}

fn cmd_verify(suite: Suite, max_n: Option<u32>, max_deg: Option<u32>, seed: u64, count: usize) -> Outcome {
    let reports: Vec<Report> = match suite {
        Suite::Betti => {
            let (n, d) = (max_n.unwrap_or(5), max_deg.unwrap_or(10));
            vec![verify::betti_b(n, d), verify::betti_d(n.min(4), d.min(8))]
        }
        Suite::Axioms => vec![verify::axioms(seed, count, max_n.unwrap_or(5), max_deg.unwrap_or(8))],
        Suite::Relations => vec![verify::relations(max_n.unwrap_or(5), max_deg.unwrap_or(6))],
        Suite::Steenrod => {
            let (n, d) = (max_n.unwrap_or(4), max_deg.unwrap_or(6));
            vec![verify::steenrod_suite(n.min(4), d, 8)]
        }
        Suite::Oracle => vec![verify::oracle(max_n.unwrap_or(5), max_deg.unwrap_or(10))],
    };
    let text: String = reports.iter().map(|r| r.to_string()).collect();
    if reports.iter().all(|r| r.passed()) {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn cache_name(v: Variant, n: usize, d: usize) -> String {
    format!("{v:?}-{n}-{d}.txt")
}

fn load_cache(dir: &Path) {
    let Ok(entries) = fs::read_dir(dir) else { return };
    for e in entries.flatten() {
        let name = e.file_name().to_string_lossy().into_owned();
        let Some(stem) = name.strip_suffix(".txt") else { continue };
        let parts: Vec<&str> = stem.split('-').collect();
        let [v, n, d] = parts[..] else { continue };
        let variant = match v {
            "B" => Variant::B,
            "D" => Variant::D,
            "Dprime" => Variant::Dprime,
            _ => continue,
        };
        let (Ok(n), Ok(d)) = (n.parse(), d.parse()) else { continue };
        let loaded = fs::read_to_string(e.path())
            .map_err(|e| e.to_string())
            .and_then(|t| BitMatrix::from_triplet_text(&t).map_err(|e| e.to_string()))
            .and_then(|m| foxneuwirth::preload_coboundary(variant, n, d, m).map_err(|e| e.to_string()));
        if let Err(msg) = loaded {
            eprintln!("warning: ignoring cached {name}: {msg}");
        }
    }
}

fn save_cache(dir: &Path) {
    if let Err(e) = fs::create_dir_all(dir) {
        eprintln!("warning: cannot create {}: {e}", dir.display());
        return;
    }
    for ((v, n, d), m) in foxneuwirth::cached_coboundaries() {
        let path = dir.join(cache_name(v, n, d));
        if path.exists() {
            continue;
        }
        if let Err(e) = fs::write(&path, m.to_triplet_text()) {
            eprintln!("warning: cannot write {}: {e}", path.display());
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Basis { ring, n, deg, format } => cmd_basis(ring, n, deg, format),
        Command::Eval { op, format, expr } => cmd_eval(op, format, &expr),
        Command::Restrict { expr, site } => cmd_restrict(&expr, &site),
        Command::Sq { i, format, expr } => cmd_sq(i, format, &expr),
        Command::Render { format, expr } => render(&parse_value(&expr)?, format),
        Command::Verify { suite, max_n, max_deg, seed, count } => cmd_verify(suite, max_n, max_deg, seed, count),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cli.cache_dir.clone();
    if let Some(dir) = &cache {
        load_cache(dir);
    }
    let result = run(cli);
    if let Some(dir) = &cache {
        save_cache(dir);
    }
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
