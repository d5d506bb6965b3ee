//! Command-line front end: argument parsing, JSON document IO, and text
//! rendering that mirrors the notation used in the library reports.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 construction-hypothesis
//! violation, 4 mathematical failure (singular matrix, degenerate cone).

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::chains::{blowup_chain, contract_to_minimal, CurveChain};
use crate::exact::SymPoly;
use crate::exact::{format_rational, parse_int, Int, Rational};
use crate::hjcf::hj_expand;
use crate::json::{ChainDoc, ConfigDoc, FanDoc, SurfaceDoc, VolumesDoc};
use crate::kahler::{
    assemble_Q, builtin_example, solve_class, Cp1T2Report, Cp2Report,
    ExampleReport, KahlerError, VolumeAssignment, Wps123Report,
};
use crate::surface::{
    instability_report, realize_degree, theoremB_construction, ConstructionReport, Section,
    SurfaceError,
};
use crate::toric::{classify_cone, resolve_fan, self_intersections, wps_fan, Cone2D, ConeType,
    Fan2D, LatticeVector, ToricError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_MATH: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "paratoric", disable_help_subcommand = true)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Continued-fraction expansion.
    Hj {
        #[command(subcommand)]
        cmd: HjCommand,
    },
    /// The blow-up chain attached to a weight p/q.
    Chain {
        /// Weight as "p/q".
        fraction: String,
        /// Print only the one-line chain diagram.
        #[arg(long)]
        ascii: bool,
    },
    /// Fan construction and queries.
    Fan {
        #[command(subcommand)]
        cmd: FanCommand,
    },
    /// Classify the cone spanned by two lattice vectors.
    Classify {
        ux: String,
        uy: String,
        vx: String,
        vy: String,
    },
    /// Run the model construction for given genus, r, and point orders.
    Construct(ConstructArgs),
    /// Realize a bundle degree over a given genus.
    Realize {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        degree: String,
    },
    /// Slopes of the zero and infinity sections of a surface document.
    Stability {
        /// Path to a surface JSON file.
        surface: String,
    },
    /// Kähler class computations.
    Kahler {
        #[command(subcommand)]
        cmd: KahlerCommand,
    },
    /// Built-in worked examples.
    Example {
        /// One of: cp2, cp1t2, wps123.
        name: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum HjCommand {
    /// Expand p/q into its minus-sign continued fraction.
    Expand {
        /// Fraction as "p/q" with 0 < p < q.
        fraction: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FanCommand {
    /// Fan of the weighted projective plane with the given weights.
    Wps { a: String, b: String, c: String },
    /// Minimal resolution of the fan in a JSON document.
    Resolve { fan: String },
    /// Self-intersections of the rays of a smooth complete fan.
    Selfint { fan: String },
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(short = 'r', long)]
    pub r: String,
    /// Comma-separated point orders.
    #[arg(long, value_delimiter = ',')]
    pub orders: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum KahlerCommand {
    /// Solve Q·C = I for a curve configuration and symbolic volumes.
    Solve {
        /// Path to a config JSON file.
        config: String,
        /// Path to a volumes JSON file.
        volumes: String,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        let code = match e {
            SurfaceError::HypothesisViolation(_)
            | SurfaceError::UnsupportedDegree { .. }
            | SurfaceError::Degenerate => EXIT_HYPOTHESIS,
            SurfaceError::InvalidData(_) => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        let code = match e {
            ToricError::InvalidWeights(..)
            | ToricError::InvalidGroupSpec { .. }
            | ToricError::NotPrimitive(_)
            | ToricError::DuplicateRay(_) => EXIT_USAGE,
            ToricError::DegenerateCone(..) | ToricError::NotComplete | ToricError::NotSmooth(..) => {
                EXIT_MATH
            }
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<KahlerError> for CliError {
    fn from(e: KahlerError) -> Self {
        let code = match e {
            KahlerError::SingularMatrix | KahlerError::DimensionMismatch(..) => EXIT_MATH,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Runs the CLI on the given argv (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            println!("{output}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Hj {
            cmd: HjCommand::Expand { fraction },
        } => cmd_hj_expand(fraction, cli.format),
        Command::Chain { fraction, ascii } => cmd_chain(fraction, *ascii, cli.format),
        Command::Fan { cmd } => match cmd {
            FanCommand::Wps { a, b, c } => cmd_fan_wps(a, b, c, cli.format),
            FanCommand::Resolve { fan } => cmd_fan_resolve(fan, cli.format),
            FanCommand::Selfint { fan } => cmd_fan_selfint(fan, cli.format),
        },
        Command::Classify { ux, uy, vx, vy } => cmd_classify(ux, uy, vx, vy, cli.format),
        Command::Construct(args) => cmd_construct(args, cli.format),
        Command::Realize { genus, degree } => cmd_realize(*genus, degree, cli.format),
        Command::Stability { surface } => cmd_stability(surface, cli.format),
        Command::Kahler {
            cmd: KahlerCommand::Solve { config, volumes },
        } => cmd_kahler_solve(config, volumes, cli.format),
        Command::Example { name } => cmd_example(name, cli.format),
    }
}

fn parse_fraction(text: &str) -> Result<(Int, Int), CliError> {
    let (p_text, q_text) = text
        .split_once('/')
        .ok_or_else(|| CliError::usage(format!("expected a fraction \"p/q\", got {text:?}")))?;
    let p = parse_int(p_text.trim()).map_err(|e| CliError::usage(e.to_string()))?;
    let q = parse_int(q_text.trim()).map_err(|e| CliError::usage(e.to_string()))?;
    if !crate::exact::is_proper_fraction(&p, &q) {
        return Err(CliError::usage(format!(
            "{text} is not a reduced fraction with 0 < p < q"
        )));
    }
    Ok((p, q))
}

fn parse_cli_int(text: &str) -> Result<Int, CliError> {
    parse_int(text.trim()).map_err(|e| CliError::usage(e.to_string()))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("invalid JSON in {path}: {e}")))
}

fn jint(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

fn jrat(v: &Rational) -> Value {
    json!(format_rational(v))
}

fn jray(v: &LatticeVector) -> Value {
    json!([jint(&v.x), jint(&v.y)])
}

/// One-line chain diagram: `(-2)[F]--(-1)--(-2)`, marker node tagged.
pub fn render_chain_ascii(chain: &CurveChain) -> String {
    chain
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| {
            let marker = if chain.marker == Some(i) { "[F]" } else { "" };
            format!("({}){}", node.self_int, marker)
        })
        .collect::<Vec<_>>()
        .join("--")
}

fn cmd_hj_expand(fraction: &str, format: Format) -> Result<String, CliError> {
    let (p, q) = parse_fraction(fraction)?;
    let exp = hj_expand(&p, &q).map_err(|e| CliError::usage(e.to_string()))?;
    let digits: Vec<Value> = exp.digits().iter().map(jint).collect();
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&json!({
            "p": jint(&p),
            "q": jint(&q),
            "digits": digits,
            "nested": exp.nested_fraction_string(),
        }))
        .unwrap()),
        Format::Text => Ok(format!(
            "{}/{} = [{}]\n{}/{} = {}",
            p,
            q,
            exp.digits()
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", "),
            p,
            q,
            exp.nested_fraction_string()
        )),
    }
}

fn cmd_chain(fraction: &str, ascii: bool, format: Format) -> Result<String, CliError> {
    let (p, q) = parse_fraction(fraction)?;
    let chain = blowup_chain(&p, &q).map_err(|e| CliError::usage(e.to_string()))?;
    if ascii {
        return Ok(render_chain_ascii(&chain));
    }
    match format {
        Format::Json => {
            Ok(serde_json::to_string_pretty(&ChainDoc::from_chain(&chain)).unwrap())
        }
        Format::Text => {
            let (_, contractions) = contract_to_minimal(&chain);
            Ok(format!(
                "{}\n{} curves, {} contractions to the minimal model",
                render_chain_ascii(&chain),
                chain.len(),
                contractions
            ))
        }
    }
}

fn fan_output(fan: &Fan2D, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&FanDoc::from_fan(fan)).unwrap(),
        Format::Text => fan
            .rays()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn cmd_fan_wps(a: &str, b: &str, c: &str, format: Format) -> Result<String, CliError> {
    let fan = wps_fan(&parse_cli_int(a)?, &parse_cli_int(b)?, &parse_cli_int(c)?)?;
    Ok(fan_output(&fan, format))
}

fn cmd_fan_resolve(path: &str, format: Format) -> Result<String, CliError> {
    let doc: FanDoc = read_json(path)?;
    let fan = doc.to_fan()?;
    Ok(fan_output(&resolve_fan(&fan), format))
}

fn cmd_fan_selfint(path: &str, format: Format) -> Result<String, CliError> {
    let doc: FanDoc = read_json(path)?;
    let fan = doc.to_fan()?;
    let selfints = self_intersections(&fan)?;
    match format {
        Format::Json => {
            let items: Vec<Value> = selfints
                .iter()
                .map(|(ray, s)| json!({"ray": jray(ray), "self_int": jint(s)}))
                .collect();
            Ok(serde_json::to_string_pretty(&json!({ "self_intersections": items })).unwrap())
        }
        Format::Text => Ok(selfints
            .iter()
            .map(|(ray, s)| format!("{ray} -> {s}"))
            .collect::<Vec<_>>()
            .join("\n")),
    }
}

fn cone_type_value(ty: &ConeType) -> Value {
    match ty {
        ConeType::Smooth => json!({"type": "smooth"}),
        ConeType::Quotient { p, q } => json!({"type": "quotient", "p": jint(p), "q": jint(q)}),
    }
}

fn cone_type_text(ty: &ConeType) -> String {
    match ty {
        ConeType::Smooth => "smooth".to_string(),
        ConeType::Quotient { p, q } => format!("A_{{{p},{q}}}"),
    }
}

fn cmd_classify(ux: &str, uy: &str, vx: &str, vy: &str, format: Format) -> Result<String, CliError> {
    let u = LatticeVector::new(parse_cli_int(ux)?, parse_cli_int(uy)?);
    let v = LatticeVector::new(parse_cli_int(vx)?, parse_cli_int(vy)?);
    let cone = Cone2D::new(u, v)?;
    let ty = classify_cone(&cone);
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&cone_type_value(&ty)).unwrap()),
        Format::Text => Ok(cone_type_text(&ty)),
    }
}

fn construction_value(rep: &ConstructionReport) -> Value {
    let points: Vec<Value> = rep
        .points
        .iter()
        .map(|pt| {
            json!({
                "label": pt.label,
                "q": jint(&pt.q),
                "p": jint(&pt.p),
                "n": jint(&pt.n),
                "alpha": jrat(&pt.alpha),
                "sing_zero": [jint(&pt.sing_zero.0), jint(&pt.sing_zero.1)],
                "sing_infinity": [jint(&pt.sing_infinity.0), jint(&pt.sing_infinity.1)],
                "chain": serde_json::to_value(ChainDoc::from_chain(&pt.chain)).unwrap(),
            })
        })
        .collect();
    json!({
        "genus": rep.genus,
        "r": jint(&rep.r),
        "chi_orb": jrat(&rep.chi_orb),
        "degree": jint(&rep.bundle_degree),
        "points": points,
    })
}

fn construction_text(rep: &ConstructionReport) -> String {
    let mut lines = vec![
        format!("genus {}  r = {}", rep.genus, rep.r),
        format!("chi_orb = {}", format_rational(&rep.chi_orb)),
        format!("deg L = {}", rep.bundle_degree),
    ];
    for pt in &rep.points {
        lines.push(format!(
            "{}: q = {}, p = {}, n = {}, alpha = {}, singularities A_{{{},{}}} | A_{{{},{}}}",
            pt.label,
            pt.q,
            pt.p,
            pt.n,
            format_rational(&pt.alpha),
            pt.sing_zero.0,
            pt.sing_zero.1,
            pt.sing_infinity.0,
            pt.sing_infinity.1
        ));
        lines.push(format!("    {}", render_chain_ascii(&pt.chain)));
    }
    lines.join("\n")
}

fn construction_output(rep: &ConstructionReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&construction_value(rep)).unwrap(),
        Format::Text => construction_text(rep),
    }
}

fn cmd_construct(args: &ConstructArgs, format: Format) -> Result<String, CliError> {
    let r = parse_cli_int(&args.r)?;
    let orders = args
        .orders
        .iter()
        .map(|q| parse_cli_int(q))
        .collect::<Result<Vec<_>, _>>()?;
    let rep = theoremB_construction(args.genus, &r, &orders)?;
    Ok(construction_output(&rep, format))
}

fn cmd_realize(genus: u32, degree: &str, format: Format) -> Result<String, CliError> {
    let d = parse_cli_int(degree)?;
    let rep = realize_degree(genus, &d)?;
    Ok(construction_output(&rep, format))
}

fn section_name(s: Section) -> &'static str {
    match s {
        Section::Zero => "zero",
        Section::Infinity => "infinity",
    }
}

fn cmd_stability(path: &str, format: Format) -> Result<String, CliError> {
    let doc: SurfaceDoc = read_json(path)?;
    let m = doc.to_surface()?;
    let report = instability_report(&m);
    match format {
        Format::Json => {
            let items: Vec<Value> = report
                .iter()
                .map(|(s, mu)| json!({"section": section_name(*s), "slope": jrat(mu)}))
                .collect();
            Ok(serde_json::to_string_pretty(&json!({ "destabilizing": items })).unwrap())
        }
        Format::Text => {
            if report.is_empty() {
                Ok("no destabilizing canonical section".to_string())
            } else {
                Ok(report
                    .iter()
                    .map(|(s, mu)| format!("S_{} destabilizes: mu = {}", section_name(*s),
                        format_rational(mu)))
                    .collect::<Vec<_>>()
                    .join("\n"))
            }
        }
    }
}

fn cmd_kahler_solve(config_path: &str, volumes_path: &str, format: Format) -> Result<String, CliError> {
    let config_doc: ConfigDoc = read_json(config_path)?;
    let volumes_doc: VolumesDoc = read_json(volumes_path)?;
    let config = config_doc.to_config()?;
    let mut values = BTreeMap::new();
    for (label, text) in &volumes_doc {
        let poly = SymPoly::parse(text).map_err(|e| CliError::usage(e.to_string()))?;
        values.insert(label.clone(), poly);
    }
    let basis = config.labels();
    let q = assemble_Q(&config, &basis)?;
    let solution = solve_class(&q, &VolumeAssignment::new(values))?;
    match format {
        Format::Json => {
            let coeffs: BTreeMap<&String, String> = solution
                .coefficients
                .iter()
                .map(|(l, c)| (l, c.to_string()))
                .collect();
            Ok(serde_json::to_string_pretty(&json!({
                "basis": solution.basis,
                "coefficients": coeffs,
                "det": jint(&solution.det),
                "residual_zero": solution.residual_checked,
            }))
            .unwrap())
        }
        Format::Text => {
            let mut lines = vec![format!("det Q = {}", solution.det)];
            for label in &solution.basis {
                lines.push(format!("c_{label} = {}", solution.coefficients[label]));
            }
            Ok(lines.join("\n"))
        }
    }
}

fn cp2_value(rep: &Cp2Report) -> Value {
    let q_rows: Vec<Vec<Value>> = rep
        .q
        .entries
        .iter()
        .map(|row| row.iter().map(jint).collect())
        .collect();
    let volumes: BTreeMap<&String, String> = rep
        .volumes
        .values
        .iter()
        .map(|(l, v)| (l, v.to_string()))
        .collect();
    let coeffs: BTreeMap<&String, String> = rep
        .solution
        .coefficients
        .iter()
        .map(|(l, c)| (l, c.to_string()))
        .collect();
    json!({
        "basis": rep.q.basis,
        "Q": q_rows,
        "I": volumes,
        "C": coeffs,
        "det": jint(&rep.solution.det),
        "residual_zero": rep.solution.residual_checked,
    })
}

fn cp2_text(rep: &Cp2Report) -> String {
    let mut lines = vec![format!("basis: {}", rep.q.basis.join(", "))];
    for (label, row) in rep.q.basis.iter().zip(&rep.q.entries) {
        lines.push(format!(
            "Q[{label}] = [{}]",
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    for label in &rep.q.basis {
        lines.push(format!("I_{label} = {}", rep.volumes.values[label]));
    }
    for label in &rep.q.basis {
        lines.push(format!("c_{label} = {}", rep.solution.coefficients[label]));
    }
    lines.join("\n")
}

fn cp1t2_value(rep: &Cp1T2Report) -> Value {
    let evals: Vec<Value> = rep
        .evaluations
        .iter()
        .map(|(l, v)| json!({"curve": l, "value": v.to_string()}))
        .collect();
    json!({
        "construction": construction_value(&rep.construction),
        "chain": serde_json::to_value(ChainDoc::from_chain(&rep.chain)).unwrap(),
        "evaluations": evals,
    })
}

fn cp1t2_text(rep: &Cp1T2Report) -> String {
    let mut lines = vec![construction_text(&rep.construction)];
    lines.push(render_chain_ascii(&rep.chain));
    for (label, value) in &rep.evaluations {
        lines.push(format!("[omega].{label} = {value}"));
    }
    lines.join("\n")
}

fn wps123_value(rep: &Wps123Report) -> Value {
    let sings: Vec<Value> = rep
        .singularities
        .iter()
        .map(|((u, v), ty)| json!({"cone": [jray(u), jray(v)], "class": cone_type_value(ty)}))
        .collect();
    let selfints: Vec<Value> = rep
        .self_ints
        .iter()
        .map(|(ray, s)| json!({"ray": jray(ray), "self_int": jint(s)}))
        .collect();
    json!({
        "fan": serde_json::to_value(FanDoc::from_fan(&rep.fan)).unwrap(),
        "resolved": serde_json::to_value(FanDoc::from_fan(&rep.resolved)).unwrap(),
        "self_intersections": selfints,
        "singularities": sings,
    })
}

fn wps123_text(rep: &Wps123Report) -> String {
    let mut lines = vec!["fan rays:".to_string()];
    lines.extend(rep.fan.rays().iter().map(|r| format!("  {r}")));
    lines.push("resolved rays:".to_string());
    lines.extend(rep.resolved.rays().iter().map(|r| format!("  {r}")));
    lines.push("self-intersections:".to_string());
    lines.extend(
        rep.self_ints
            .iter()
            .map(|(ray, s)| format!("  {ray} -> {s}")),
    );
    lines.push("singularities:".to_string());
    lines.extend(
        rep.singularities
            .iter()
            .map(|((u, v), ty)| format!("  cone({u}, {v}): {}", cone_type_text(ty))),
    );
    lines.join("\n")
}

fn cmd_example(name: &str, format: Format) -> Result<String, CliError> {
    let report = builtin_example(name)?;
    Ok(match (&report, format) {
        (ExampleReport::Cp2(rep), Format::Json) => {
            serde_json::to_string_pretty(&cp2_value(rep)).unwrap()
        }
        (ExampleReport::Cp2(rep), Format::Text) => cp2_text(rep),
        (ExampleReport::Cp1T2(rep), Format::Json) => {
            serde_json::to_string_pretty(&cp1t2_value(rep)).unwrap()
        }
        (ExampleReport::Cp1T2(rep), Format::Text) => cp1t2_text(rep),
        (ExampleReport::Wps123(rep), Format::Json) => {
            serde_json::to_string_pretty(&wps123_value(rep)).unwrap()
        }
        (ExampleReport::Wps123(rep), Format::Text) => wps123_text(rep),
    })
}
