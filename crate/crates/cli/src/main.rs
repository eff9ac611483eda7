//! `adual`: exact arithmetic-duality computations over a JSON exchange format.
//!
//! Exit codes: 0 on success, 1 on malformed input, 2 when a well-formed input
//! violates the precondition of the requested operation.

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use adual::adc::{self, Component};
use adual::aspace::{self, SeparationPolicy, Subset};
use adual::draft;
use adual::json::{FromJson, ToJson};
use adual::lgroup;
use adual::pwl::{self, PwlOp};
use adual::{Den, Draft, Error, FnGroup, GroupTerm, IntPwl, Rat, Region, Result, Space, Values};

#[derive(Parser)]
#[command(
    name = "adual",
    version,
    about = "Exact computations with a-spaces, drafts and function groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Where points outside both sets go when separating.
    #[arg(long, value_enum, default_value_t = Policy::U, global = true)]
    policy: Policy,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    /// Leftover points with nonzero denominator join U.
    U,
    /// Leftover points with nonzero denominator join V.
    V,
}

impl From<Policy> for SeparationPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::U => SeparationPolicy::LeftoverToU,
            Policy::V => SeparationPolicy::LeftoverToV,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Admissible denominators of a rational region.
    Adc(AdcArgs),
    /// Points of a space whose denominator is admissible for a region.
    Ac {
        #[arg(long)]
        space: String,
        #[arg(long)]
        region: String,
    },
    /// Finite a-spaces: map checks, products, separation.
    #[command(subcommand)]
    Aspace(AspaceCmd),
    /// Drafts: validation, refinement, realisation, Urysohn maps.
    #[command(subcommand)]
    Draft(DraftCmd),
    /// Function groups on finite a-spaces.
    #[command(subcommand)]
    Lgroup(LgroupCmd),
    /// Piecewise linear functions with integer coefficients.
    #[command(subcommand)]
    Pwl(PwlCmd),
}

#[derive(Args)]
struct AdcArgs {
    /// Region as a JSON list of {"point"} and {"interval"} components.
    #[arg(long)]
    region: String,
    /// Report membership of this natural instead of the whole set.
    #[arg(long)]
    contains: Option<String>,
    /// Treat the components as a lower-directed family of intervals and
    /// compute the set for their intersection.
    #[arg(long)]
    intersect: bool,
}

#[derive(Subcommand)]
enum AspaceCmd {
    /// Check an a-map (--map) or emit the normality witnesses of a space (--space).
    Check {
        #[arg(long, conflicts_with = "space", required_unless_present = "space")]
        map: Option<String>,
        #[arg(long)]
        space: Option<String>,
    },
    /// Product with the lcm denominator.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Disjoint U ⊇ A, V ⊇ B leaving only denominator-0 points outside.
    Separate {
        #[arg(long)]
        space: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Subcommand)]
enum DraftCmd {
    /// Check the draft axioms; exits 2 naming the first violation.
    Validate {
        #[arg(long = "in")]
        input: String,
    },
    /// Insert levels, given explicitly or as a Stern–Brocot prefix.
    Refine {
        #[arg(long = "in")]
        input: String,
        /// Level to insert; repeatable.
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambdas: Vec<String>,
        /// Insert the first N Stern–Brocot rationals inside (alpha, beta).
        #[arg(long, conflicts_with = "lambdas")]
        stern_brocot: Option<usize>,
    },
    /// The realisation of a valid draft.
    Realize {
        #[arg(long = "in")]
        input: String,
    },
    /// An a-map equal to alpha on A and beta on B.
    Urysohn {
        #[arg(long)]
        space: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// A map with f(x) = 0 and f(y) = 1.
    Separating {
        #[arg(long)]
        space: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// A map attaining the denominator of a point.
    Witness {
        #[arg(long)]
        space: String,
        #[arg(long)]
        point: String,
    },
    /// Separating maps and denominator witnesses for every point.
    Embed {
        #[arg(long)]
        space: String,
    },
}

#[derive(Subcommand)]
enum LgroupCmd {
    /// Sup norm of a function.
    Norm {
        #[arg(long)]
        values: String,
    },
    /// Evaluate a term.
    Eval {
        #[arg(long)]
        group: String,
        #[arg(long)]
        term: String,
    },
    /// Max of a separating group with its spectral denominators.
    Max {
        #[arg(long)]
        group: String,
    },
    /// The two density conditions.
    SwCheck {
        #[arg(long)]
        group: String,
    },
    /// A term within eps of the target.
    Approx {
        #[arg(long)]
        group: String,
        #[arg(long)]
        target: String,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
    },
    /// The unit of the duality on a space.
    Eta {
        #[arg(long)]
        space: String,
    },
    /// Whether the group is all of C(X).
    Complete {
        #[arg(long)]
        group: String,
    },
}

#[derive(Subcommand)]
enum PwlCmd {
    Eval {
        #[arg(long)]
        f: String,
        #[arg(long)]
        x: String,
    },
    Combine {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// One of + - ∨ ∧ (or add, sub, max, min).
        #[arg(long, allow_hyphen_values = true)]
        op: String,
    },
    Norm {
        #[arg(long)]
        f: String,
    },
    /// Value group at x: of all integer pwl maps, or of --fs.
    Valuegroup {
        #[arg(long)]
        fs: Option<String>,
        #[arg(long)]
        x: String,
    },
    /// Restrict maps to rational points, giving a function group.
    Sample {
        #[arg(long)]
        fs: String,
        #[arg(long)]
        points: String,
    },
}

/// A command result: JSON for machines and a text rendering for people.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Output {
            json,
            text: text.into(),
        }
    }

    fn plain(json: Value) -> Self {
        let text = render(&json, 0);
        Output { json, text }
    }
}

/// Locale-independent text for any JSON value.
fn render(v: &Value, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    match v {
        Value::Null => "none".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(|i| render(i, 0)).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, item)| format!("{pad}- {}:\n{}", i + 1, render(item, indent + 1)))
            .collect::<Vec<_>>()
            .join("\n"),
        Value::Object(m) => m
            .iter()
            .map(|(k, val)| {
                if val.is_object()
                    || (val.is_array() && val.as_array().is_some_and(|a| a.iter().any(|i| i.is_object())))
                {
                    format!("{pad}{k}:\n{}", render(val, indent + 1))
                } else {
                    format!("{pad}{k}: {}", render(val, 0))
                }
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

/// Reads an argument as inline JSON, `@path`, or a path to a JSON file.
fn load(arg: &str) -> Result<Value> {
    let text = if let Some(path) = arg.strip_prefix('@') {
        read_file(path)?
    } else if let Ok(v) = serde_json::from_str::<Value>(arg) {
        return Ok(v);
    } else if Path::new(arg).is_file() {
        read_file(arg)?
    } else {
        return Err(Error::Malformed(format!("{arg:?} is neither JSON nor a readable file")));
    };
    serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
}

fn read_file(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {path}: {e}")))
}

fn doc<T: FromJson>(arg: &str) -> Result<T> {
    T::from_json(&load(arg)?)
}

/// A rational given bare (`1/2`) or as a JSON string.
fn rat(arg: &str) -> Result<Rat> {
    let bare = arg.trim().trim_matches('"');
    match adual::scalar::parse_ratio(bare) {
        Some(r) => Ok(r),
        None => Err(Error::Malformed(format!("{arg:?} is not a rational p/q"))),
    }
}

fn rat_list(arg: &str) -> Result<Vec<Rat>> {
    let v = load(arg)?;
    let items = v
        .as_array()
        .ok_or_else(|| Error::Malformed(format!("expected a list of rationals, got {v}")))?;
    items.iter().map(Rat::from_json).collect()
}

fn pwl_list(arg: &str) -> Result<Vec<IntPwl>> {
    let v = load(arg)?;
    let items = v
        .as_array()
        .ok_or_else(|| Error::Malformed(format!("expected a list of pwl functions, got {v}")))?;
    items.iter().map(IntPwl::from_json).collect()
}

fn set_text(s: &Subset) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(", "))
}

fn values_text(v: &Values) -> String {
    v.iter()
        .map(|(k, r)| format!("{k} = {r}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: &Cli) -> Result<Output> {
    let policy: SeparationPolicy = cli.policy.into();
    match &cli.command {
        Command::Adc(a) => {
            let region: Region = doc(&a.region)?;
            let set = if a.intersect {
                let family: Vec<Component<_>> = region.components.clone();
                adc::adc_intersect_intervals(&family)?
            } else {
                adc::adc(&region)
            };
            match &a.contains {
                Some(n) => {
                    let n: Den = Den::from_json(&load(n)?)?;
                    let b = adc::adc_contains(&set, &n);
                    Ok(Output::new(json!(b), b.to_string()))
                }
                None => {
                    let text = set.to_string();
                    Ok(Output::new(set.to_json(), text))
                }
            }
        }
        Command::Ac { space, region } => {
            let x: Space = doc(space)?;
            let r: Region = doc(region)?;
            let s = adc::ac(&x, &r);
            Ok(Output::new(s.to_json(), set_text(&s)))
        }
        Command::Aspace(cmd) => aspace_cmd(cmd, policy),
        Command::Draft(cmd) => draft_cmd(cmd, policy),
        Command::Lgroup(cmd) => lgroup_cmd(cmd),
        Command::Pwl(cmd) => pwl_cmd(cmd),
    }
}

fn aspace_cmd(cmd: &AspaceCmd, policy: SeparationPolicy) -> Result<Output> {
    match cmd {
        AspaceCmd::Check { map: Some(m), .. } => {
            let f: aspace::AMapFin = doc(m)?;
            let ok = aspace::check_amap(&f)?;
            Ok(Output::new(json!(ok), ok.to_string()))
        }
        AspaceCmd::Check { space, .. } => {
            let x: Space = doc(space.as_deref().unwrap_or_default())?;
            Ok(Output::plain(aspace::verify_anormal(&x).to_json()))
        }
        AspaceCmd::Product { left, right } => {
            let (x, y): (Space, Space) = (doc(left)?, doc(right)?);
            Ok(Output::plain(aspace::product(&x, &y).to_json()))
        }
        AspaceCmd::Separate { space, a, b } => {
            let x: Space = doc(space)?;
            let (u, v) = aspace::separate(&x, &doc(a)?, &doc(b)?, policy)?;
            let text = format!("U = {}\nV = {}", set_text(&u), set_text(&v));
            Ok(Output::new(json!({ "u": u.to_json(), "v": v.to_json() }), text))
        }
    }
}

fn function_output(f: &adual::RatFunction) -> Output {
    Output::new(f.to_json(), values_text(&f.values))
}

fn draft_cmd(cmd: &DraftCmd, policy: SeparationPolicy) -> Result<Output> {
    match cmd {
        DraftCmd::Validate { input } => {
            let d: Draft = doc(input)?;
            d.validate()?;
            Ok(Output::new(json!({ "valid": true }), "valid"))
        }
        DraftCmd::Refine {
            input,
            lambdas,
            stern_brocot,
        } => {
            let d: Draft = doc(input)?;
            let seq = match stern_brocot {
                Some(n) => draft::stern_brocot_sequence(&d.alpha, &d.beta, *n),
                None => lambdas.iter().map(|l| rat(l)).collect::<Result<_>>()?,
            };
            let r = draft::refine_sequence(&d, &seq, policy)?;
            let text = r
                .levels
                .iter()
                .map(|(l, lv)| format!("{l}: down {} up {}", set_text(&lv.down), set_text(&lv.up)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(r.to_json(), text))
        }
        DraftCmd::Realize { input } => {
            let d: Draft = doc(input)?;
            Ok(function_output(&draft::realize(&d)?))
        }
        DraftCmd::Urysohn {
            space,
            a,
            b,
            alpha,
            beta,
        } => {
            let x: Space = doc(space)?;
            let f = draft::urysohn(&x, &doc(a)?, &doc(b)?, &rat(alpha)?, &rat(beta)?)?;
            Ok(function_output(&f))
        }
        DraftCmd::Separating { space, x, y } => {
            let s: Space = doc(space)?;
            Ok(function_output(&draft::separating_map(&s, x, y)?))
        }
        DraftCmd::Witness { space, point } => {
            let s: Space = doc(space)?;
            Ok(function_output(&draft::denominator_witness(&s, point)?))
        }
        DraftCmd::Embed { space } => {
            let s: Space = doc(space)?;
            let fam = draft::embed(&s)?;
            let vecs = draft::embedding_vectors(&fam);
            let text = vecs
                .iter()
                .map(|(k, v)| {
                    let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                    format!("{k} ↦ ({})", parts.join(", "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            let maps: Vec<Value> = fam.iter().map(ToJson::to_json).collect();
            Ok(Output::new(json!({ "maps": maps }), text))
        }
    }
}

fn lgroup_cmd(cmd: &LgroupCmd) -> Result<Output> {
    match cmd {
        LgroupCmd::Norm { values } => {
            let v: Values = doc(values)?;
            let n = lgroup::seminorm(&v)?;
            Ok(Output::new(n.to_json(), n.to_string()))
        }
        LgroupCmd::Eval { group, term } => {
            let g: FnGroup = doc(group)?;
            let t: GroupTerm = doc(term)?;
            let v = lgroup::eval_term(&g, &t)?;
            Ok(Output::new(v.to_json(), values_text(&v)))
        }
        LgroupCmd::Max { group } => {
            let g: FnGroup = doc(group)?;
            let (m, corr) = lgroup::max_of_group(&g)?;
            let corr: serde_json::Map<String, Value> = corr.into_iter().map(|(k, v)| (k, Value::String(v))).collect();
            Ok(Output::plain(json!({ "space": m.to_json(), "correspondence": corr })))
        }
        LgroupCmd::SwCheck { group } => {
            let g: FnGroup = doc(group)?;
            Ok(Output::plain(lgroup::sw_conditions(&g).to_json()))
        }
        LgroupCmd::Approx { group, target, eps } => {
            let g: FnGroup = doc(group)?;
            let t: Values = doc(target)?;
            let a = lgroup::sw_approximate(&g, &t, &rat(eps)?)?;
            let text = format!("term: {}\nerror: {}", a.term, a.error);
            Ok(Output::new(a.to_json(), text))
        }
        LgroupCmd::Eta { space } => {
            let x: Space = doc(space)?;
            Ok(Output::plain(lgroup::eta_check(&x)?.to_json()))
        }
        LgroupCmd::Complete { group } => {
            let g: FnGroup = doc(group)?;
            Ok(Output::plain(lgroup::completeness_check(&g)?.to_json()))
        }
    }
}

fn pwl_cmd(cmd: &PwlCmd) -> Result<Output> {
    match cmd {
        PwlCmd::Eval { f, x } => {
            let f: IntPwl = doc(f)?;
            let v = f.eval(&rat(x)?)?;
            Ok(Output::new(v.to_json(), v.to_string()))
        }
        PwlCmd::Combine { f, g, op } => {
            let (f, g): (IntPwl, IntPwl) = (doc(f)?, doc(g)?);
            let op: PwlOp = op.parse()?;
            Ok(Output::plain(f.combine(&g, op).to_json()))
        }
        PwlCmd::Norm { f } => {
            let f: IntPwl = doc(f)?;
            let n = f.norm();
            Ok(Output::new(n.to_json(), n.to_string()))
        }
        PwlCmd::Valuegroup { fs, x } => {
            let fs = match fs {
                Some(s) => pwl_list(s)?,
                None => Vec::new(),
            };
            let d = pwl::value_group(&fs, &rat(x)?)?;
            Ok(Output::new(d.to_json(), d.to_string()))
        }
        PwlCmd::Sample { fs, points } => {
            let g = pwl::sample(&pwl_list(fs)?, &rat_list(points)?)?;
            Ok(Output::plain(g.to_json()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.json),
                Format::Text => println!("{}", out.text),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
