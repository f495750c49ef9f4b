//! Command line interface: argument definitions, dispatch and JSON output.

use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use qforms_core::artin::{artin_parity, criterion_example_f3, criterion_x2_dy2, decide};
use qforms_core::local::{critical_places, local_solvable};
use qforms_core::oracle::enumerate_solutions;
use qforms_core::symbols::{hilbert_symbol, jacobi_symbol_with_seed, residue_symbol};
use qforms_core::{
    factor::factorize_with_seed, is_irreducible, ClassFieldSpec, EquationInstance, Fq, Place, Poly, SolveReport,
    Verdict, DEFAULT_SEED,
};
use serde::Serialize;
use serde_json::json;

use crate::error::InputError;
use crate::parse::parse_poly;
use crate::specfile::load_spec;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

const EXAMPLE_A: &str = "-1";
const EXAMPLE_B: &str = "t";
const EXAMPLE_C: &str = "-(t^3-t^2+1)";

#[derive(Debug, Parser)]
#[command(name = "qforms", version, about = "Solvability of a x^2 + b x y + c y^2 + g = 0 over F_q[t]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide solvability through local conditions, the Artin condition and the search.
    Solve(InstanceCmd),
    /// Local solvability at every place.
    Local(InstanceCmd),
    /// Evaluate the explicit criterion (worked example, or x^2 + D y^2 = l with --l).
    Criterion(CriterionCmd),
    /// Exhaustive search for solutions.
    Oracle(InstanceCmd),
    /// Quadratic residue symbol (f / p), or the Jacobi symbol for composite p.
    Symbol(SymbolCmd),
    /// Hilbert symbol (f, h) at a place.
    Hilbert(HilbertCmd),
    /// Factor a polynomial into monic irreducibles.
    Factor(FactorCmd),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Odd prime q.
    #[arg(long, default_value_t = 3)]
    pub q: u64,
    /// Seed for randomized factorization (decimal or 0x-prefixed hex).
    #[arg(long, env = "QFORMS_SEED", value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Print a human readable summary on standard error.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Args)]
pub struct Coefficients {
    /// Coefficient of x^2 (default: the worked example's form).
    #[arg(long, allow_hyphen_values = true, default_value = EXAMPLE_A)]
    pub a: String,
    /// Coefficient of x y.
    #[arg(long, allow_hyphen_values = true, default_value = EXAMPLE_B)]
    pub b: String,
    /// Coefficient of y^2.
    #[arg(long, allow_hyphen_values = true, default_value = EXAMPLE_C)]
    pub c: String,
    /// Constant term.
    #[arg(long, allow_hyphen_values = true)]
    pub g: Option<String>,
}

#[derive(Debug, Args)]
pub struct InstanceCmd {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub coeffs: Coefficients,
    /// Class field description: a preset name, inline JSON or a JSON file.
    #[arg(long)]
    pub spec: Option<String>,
    /// Cap on deg y for instances with two places above infinity.
    #[arg(long)]
    pub bound: Option<u32>,
    /// Report every solution found instead of the first.
    #[arg(long)]
    pub all_witnesses: bool,
}

#[derive(Debug, Args)]
pub struct CriterionCmd {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub coeffs: Coefficients,
    /// Class field description (defaults to f3-example over F_3).
    #[arg(long)]
    pub spec: Option<String>,
    /// Description of the wide class field when it differs from --spec.
    #[arg(long)]
    pub spec_hilbert: Option<String>,
    /// Prime l: evaluate the criterion for x^2 + D y^2 = l.
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<String>,
    /// D for --l (defaults to the description's d).
    #[arg(long = "D", allow_hyphen_values = true)]
    pub big_d: Option<String>,
}

#[derive(Debug, Args)]
pub struct SymbolCmd {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Monic modulus; a prime gives the residue symbol.
    #[arg(long, allow_hyphen_values = true)]
    pub p: String,
}

#[derive(Debug, Args)]
pub struct HilbertCmd {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    #[arg(long, allow_hyphen_values = true)]
    pub h: String,
    /// Monic irreducible, or "inf" for the infinite place.
    #[arg(long)]
    pub p: String,
}

#[derive(Debug, Args)]
pub struct FactorCmd {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|e| format!("invalid seed '{s}': {e}"))
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: serde_json::Value,
    pub exit_code: i32,
    pub summary: String,
}

impl Outcome {
    pub fn input_error(err: &InputError) -> Self {
        Outcome {
            json: json!({ "error": err.message, "input": err.input, "position": err.column }),
            exit_code: EXIT_INPUT,
            summary: format!("error: {err}"),
        }
    }
}

#[derive(Serialize)]
struct InstanceJson {
    q: u32,
    a: String,
    b: String,
    c: String,
    g: String,
    d: String,
    n: String,
}

impl InstanceJson {
    fn new(inst: &EquationInstance) -> Self {
        InstanceJson {
            q: inst.field().q(),
            a: inst.a().to_string(),
            b: inst.b().to_string(),
            c: inst.c().to_string(),
            g: inst.g().to_string(),
            d: inst.d().to_string(),
            n: inst.n().to_string(),
        }
    }
}

#[derive(Serialize)]
struct PlaceJson {
    place: String,
    solvable: bool,
    method: String,
}

#[derive(Serialize)]
struct ReportJson {
    command: &'static str,
    instance: InstanceJson,
    verdict: String,
    witnesses: Vec<[String; 2]>,
    failed_place: Option<String>,
    artin_parity: Option<u8>,
    complete: bool,
    stage: String,
    elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    places: Option<Vec<PlaceJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    branch: Option<String>,
}

impl ReportJson {
    fn from_report(command: &'static str, inst: &EquationInstance, r: &SolveReport) -> Self {
        ReportJson {
            command,
            instance: InstanceJson::new(inst),
            verdict: r.verdict.to_string(),
            witnesses: r.witnesses.iter().map(|w| [w.x.to_string(), w.y.to_string()]).collect(),
            failed_place: r.failed_place.as_ref().map(Place::to_string),
            artin_parity: r.artin_parity,
            complete: r.complete,
            stage: r.stage.to_string(),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            spec: None,
            places: None,
            branch: None,
        }
    }
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::Solvable => EXIT_TRUE,
        Verdict::Unsolvable => EXIT_FALSE,
        Verdict::UnknownWithinBound => EXIT_UNKNOWN,
    }
}

fn field(common: &Common) -> Result<Fq, InputError> {
    Fq::new(common.q).map_err(|e| InputError::from(e).in_input("q"))
}

fn poly(field: Fq, name: &str, src: &str) -> Result<Poly, InputError> {
    parse_poly(src, field).map_err(|e| InputError::parse(name, e))
}

fn seed(common: &Common) -> u64 {
    common.seed.unwrap_or(DEFAULT_SEED)
}

fn instance(common: &Common, coeffs: &Coefficients) -> Result<EquationInstance, InputError> {
    let field = field(common)?;
    let g = coeffs.g.as_deref().ok_or_else(|| InputError::new("--g is required").in_input("g"))?;
    let inst = EquationInstance::new(
        poly(field, "a", &coeffs.a)?,
        poly(field, "b", &coeffs.b)?,
        poly(field, "c", &coeffs.c)?,
        poly(field, "g", g)?,
    )?;
    Ok(inst.with_seed(seed(common)))
}

fn spec(arg: Option<&str>) -> Result<Option<ClassFieldSpec>, InputError> {
    arg.map(load_spec).transpose()
}

fn witness_summary(r: &SolveReport) -> String {
    match r.witnesses.first() {
        Some(w) => format!("; x = {}, y = {}", w.x, w.y),
        None => String::new(),
    }
}

fn solve(cmd: &InstanceCmd) -> Result<Outcome, InputError> {
    let inst = instance(&cmd.common, &cmd.coeffs)?;
    let spec = spec(cmd.spec.as_deref())?;
    let started = Instant::now();
    let mut report = decide(&inst, spec.as_ref(), cmd.bound)?;
    report.elapsed = started.elapsed();
    if !cmd.all_witnesses {
        report.witnesses.truncate(1);
    }
    let mut out = ReportJson::from_report("solve", &inst, &report);
    out.spec = spec.map(|s| s.label().to_string());
    let mut summary = format!("{} (stage {}){}", report.verdict, report.stage, witness_summary(&report));
    if let Some(place) = &report.failed_place {
        summary.push_str(&format!("; no local solution at {place}"));
    }
    Ok(Outcome { json: serde_json::to_value(out).expect("serializable"), exit_code: verdict_exit(report.verdict), summary })
}

fn oracle(cmd: &InstanceCmd) -> Result<Outcome, InputError> {
    let inst = instance(&cmd.common, &cmd.coeffs)?;
    let started = Instant::now();
    let mut report = enumerate_solutions(&inst, cmd.bound)?;
    report.elapsed = started.elapsed();
    let found = report.witnesses.len();
    if !cmd.all_witnesses {
        report.witnesses.truncate(1);
    }
    let out = ReportJson::from_report("oracle", &inst, &report);
    let summary = format!("{} ({found} solutions in range){}", report.verdict, witness_summary(&report));
    Ok(Outcome { json: serde_json::to_value(out).expect("serializable"), exit_code: verdict_exit(report.verdict), summary })
}

fn parity_if_applicable(inst: &EquationInstance, spec: Option<&ClassFieldSpec>) -> Option<u8> {
    spec.and_then(|s| artin_parity(inst, s).ok())
}

fn local(cmd: &InstanceCmd) -> Result<Outcome, InputError> {
    let inst = instance(&cmd.common, &cmd.coeffs)?;
    let spec = spec(cmd.spec.as_deref())?;
    let started = Instant::now();
    let verdicts = if inst.n().is_zero() {
        Vec::new()
    } else {
        critical_places(&inst)?.iter().map(|v| local_solvable(&inst, v)).collect::<Result<Vec<_>, _>>()?
    };
    let failed = verdicts.iter().find(|v| !v.solvable).map(|v| v.place.clone());
    let verdict = if failed.is_some() { Verdict::Unsolvable } else { Verdict::Solvable };
    let mut report = SolveReport {
        verdict,
        witnesses: Vec::new(),
        failed_place: failed,
        artin_parity: parity_if_applicable(&inst, spec.as_ref()),
        complete: true,
        stage: qforms_core::Stage::Local,
        elapsed: Default::default(),
    };
    report.elapsed = started.elapsed();
    let mut out = ReportJson::from_report("local", &inst, &report);
    out.places = Some(
        verdicts
            .iter()
            .map(|v| PlaceJson { place: v.place.to_string(), solvable: v.solvable, method: v.method.to_string() })
            .collect(),
    );
    let summary = match &report.failed_place {
        Some(p) => format!("not locally solvable at {p}"),
        None => format!("locally solvable at all {} critical places", verdicts.len()),
    };
    Ok(Outcome { json: serde_json::to_value(out).expect("serializable"), exit_code: verdict_exit(verdict), summary })
}

fn is_example_form(inst: &EquationInstance) -> bool {
    inst.field().q() == 3
        && EquationInstance::f3_example(Poly::zero(inst.field()))
            .is_ok_and(|e| e.a() == inst.a() && e.b() == inst.b() && e.c() == inst.c())
}

fn criterion_report(
    inst: &EquationInstance,
    holds: bool,
    parity: Option<u8>,
    stage: &str,
    branch: Option<String>,
    started: Instant,
) -> ReportJson {
    ReportJson {
        command: "criterion",
        instance: InstanceJson::new(inst),
        verdict: holds.to_string(),
        witnesses: Vec::new(),
        failed_place: None,
        artin_parity: parity,
        complete: true,
        stage: stage.to_string(),
        elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        spec: None,
        places: None,
        branch,
    }
}

fn criterion(cmd: &CriterionCmd) -> Result<Outcome, InputError> {
    let field = field(&cmd.common)?;
    let default_spec = (field.q() == 3).then(ClassFieldSpec::f3_example);
    let spec_plus = spec(cmd.spec.as_deref())?.or(default_spec);
    let started = Instant::now();
    if let Some(l_src) = &cmd.l {
        let spec_plus = spec_plus.ok_or_else(|| InputError::new("--spec is required with --l").in_input("spec"))?;
        let spec_hilbert = spec(cmd.spec_hilbert.as_deref())?.unwrap_or_else(|| spec_plus.clone());
        let l = poly(field, "l", l_src)?;
        let d = match &cmd.big_d {
            Some(src) => poly(field, "D", src)?,
            None => spec_plus.d().clone(),
        };
        let out = criterion_x2_dy2(&d, &l, &spec_plus, &spec_hilbert)?;
        let inst = EquationInstance::new(Poly::one(field), Poly::zero(field), d, -&l)?;
        let mut json = criterion_report(&inst, out.holds, None, "x2+Dy2", Some(out.branch.to_string()), started);
        json.spec = Some(spec_plus.label().to_string());
        let summary = format!("x^2 + ({}) y^2 = {l}: {} ({} branch)", inst.c(), out.holds, out.branch);
        let exit_code = if out.holds { EXIT_TRUE } else { EXIT_FALSE };
        return Ok(Outcome { json: serde_json::to_value(json).expect("serializable"), exit_code, summary });
    }
    let inst = instance(&cmd.common, &cmd.coeffs)?;
    let parity = parity_if_applicable(&inst, spec_plus.as_ref());
    let (holds, stage) = if is_example_form(&inst) {
        (criterion_example_f3(inst.g())?, "worked-example")
    } else {
        let spec = spec_plus.as_ref().ok_or_else(|| InputError::new("--spec is required").in_input("spec"))?;
        let parity = artin_parity(&inst, spec)?;
        let local = qforms_core::local::everywhere_locally_solvable(&inst)?.0;
        (local && parity == 0, "local+artin")
    };
    let mut json = criterion_report(&inst, holds, parity, stage, None, started);
    json.spec = spec_plus.map(|s| s.label().to_string());
    let exit_code = if holds { EXIT_TRUE } else { EXIT_FALSE };
    let summary = format!("criterion for g = {}: {holds}", inst.g());
    Ok(Outcome { json: serde_json::to_value(json).expect("serializable"), exit_code, summary })
}

fn symbol(cmd: &SymbolCmd) -> Result<Outcome, InputError> {
    let field = field(&cmd.common)?;
    let f = poly(field, "f", &cmd.f)?;
    let p = poly(field, "p", &cmd.p)?;
    let (value, kind) = if p.is_monic() && !p.is_constant() && is_irreducible(&p)? {
        (residue_symbol(&f, &p)?, "residue")
    } else {
        (jacobi_symbol_with_seed(&f, &p, seed(&cmd.common))?, "jacobi")
    };
    Ok(Outcome {
        json: json!({ "command": "symbol", "q": field.q(), "f": f.to_string(), "p": p.to_string(), "kind": kind, "value": value.as_i8() }),
        exit_code: EXIT_TRUE,
        summary: format!("({f} / {p}) = {value}"),
    })
}

fn hilbert(cmd: &HilbertCmd) -> Result<Outcome, InputError> {
    let field = field(&cmd.common)?;
    let f = poly(field, "f", &cmd.f)?;
    let h = poly(field, "h", &cmd.h)?;
    let place = match cmd.p.trim() {
        "inf" | "infinity" => Place::Infinite,
        src => Place::finite(poly(field, "p", src)?).map_err(|e| InputError::from(e).in_input("p"))?,
    };
    let value = hilbert_symbol(&f, &h, &place)?;
    Ok(Outcome {
        json: json!({ "command": "hilbert", "q": field.q(), "f": f.to_string(), "h": h.to_string(), "place": place.to_string(), "value": value.as_i8() }),
        exit_code: EXIT_TRUE,
        summary: format!("({f}, {h})_{place} = {value}"),
    })
}

fn factor(cmd: &FactorCmd) -> Result<Outcome, InputError> {
    let field = field(&cmd.common)?;
    let f = poly(field, "f", &cmd.f)?;
    let fac = factorize_with_seed(&f, seed(&cmd.common)).map_err(|e| InputError::from(e).in_input("f"))?;
    let factors: Vec<(String, u32)> = fac.factors.iter().map(|(p, e)| (p.to_string(), *e)).collect();
    let summary = std::iter::once(fac.unit.to_string())
        .chain(fac.factors.iter().map(|(p, e)| if *e == 1 { format!("({p})") } else { format!("({p})^{e}") }))
        .collect::<Vec<_>>()
        .join(" * ");
    Ok(Outcome {
        json: json!({
            "command": "factor",
            "q": field.q(),
            "f": f.to_string(),
            "unit": fac.unit,
            "factors": factors,
            "squarefree": fac.is_squarefree(),
        }),
        exit_code: EXIT_TRUE,
        summary,
    })
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Solve(cmd) => solve(cmd),
        Command::Local(cmd) => local(cmd),
        Command::Criterion(cmd) => criterion(cmd),
        Command::Oracle(cmd) => oracle(cmd),
        Command::Symbol(cmd) => symbol(cmd),
        Command::Hilbert(cmd) => hilbert(cmd),
        Command::Factor(cmd) => factor(cmd),
    };
    result.unwrap_or_else(|e| Outcome::input_error(&e))
}

impl Cli {
    pub fn pretty(&self) -> bool {
        match &self.command {
            Command::Solve(c) | Command::Local(c) | Command::Oracle(c) => c.common.pretty,
            Command::Criterion(c) => c.common.pretty,
            Command::Symbol(c) => c.common.pretty,
            Command::Hilbert(c) => c.common.pretty,
            Command::Factor(c) => c.common.pretty,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("qforms").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn solve_examples() {
        let out = run_args(&["solve", "--q", "3", "--g", "1"]);
        assert_eq!(out.exit_code, EXIT_TRUE);
        assert_eq!(out.json["verdict"], "solvable");
        assert_eq!(out.json["witnesses"][0], json!(["1", "0"]));
        let out = run_args(&["solve", "--q", "3", "--a", "-1", "--b", "t", "--c", "-(t^3-t^2+1)", "--g", "t-1"]);
        assert_eq!(out.exit_code, EXIT_FALSE);
        assert_eq!(out.json["failed_place"], "t+2");
    }

    #[test]
    fn criterion_example() {
        let out = run_args(&["criterion", "--spec", "f3-example", "--g", "(t-1)*(t^2-t-1)"]);
        assert_eq!(out.json["verdict"], "true");
        assert_eq!(out.exit_code, EXIT_TRUE);
        let out = run_args(&["criterion", "--l", "t^3+2*t^2+2*t+2"]);
        assert_eq!(out.json["verdict"], "true");
        assert_eq!(out.json["branch"], "square-sign");
    }

    #[test]
    fn input_errors() {
        let out = run_args(&["solve", "--g", "t +"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert_eq!(out.json["position"], 4);
        assert_eq!(out.json["input"], "g");
        let out = run_args(&["solve", "--q", "9", "--g", "1"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let out = run_args(&["solve", "--a", "1", "--b", "0", "--c", "-1", "--g", "1"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0x10"), Ok(16));
        assert_eq!(parse_seed("1_000"), Ok(1000));
        assert!(parse_seed("zz").is_err());
    }
}
