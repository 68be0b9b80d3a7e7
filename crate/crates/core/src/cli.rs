//! Command line front end: argument parsing, the five commands and their
//! JSON or CSV reports.

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use serde_json::{json, Value};
use thiserror::Error;

use crate::building::{
    compute_s_phi, is_attained, parahoric_quotient, verify_composition_law, verify_partition, verify_zero_coherence,
    Apartment,
};
use crate::classical::{char_polynomial, compatibility_grid, is_self_dual, ClassicalType};
use crate::error::Error;
use crate::functoriality::{
    is_discrete, levi_param_map, restriction_fibers, satisfies_equivalence_criterion, LeviContext,
};
use crate::group::Group;
use crate::inertial_params::{centralizer_connected, connectedness_label, enumerate_inertial_params, InertialParam};
use crate::spec_file::{GroupSpec, SpecError};
use crate::ss_classes::{ClassVector, Lambda};

pub const LIBRARY_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "level-zero", version, about = "Tame inertial parameters and level-zero class systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters, per-facet classes and the partition check.
    Decompose(RunArgs),
    /// Coherence of every class system and the composition law.
    Coherence(RunArgs),
    /// Restriction fibers to a standard Levi.
    Fibers {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated positions in the simple root list; empty for the torus.
        #[arg(long, default_value = "")]
        levi: String,
    },
    /// Compatibility grid over all vertex types of a classical group.
    Classical(RunArgs),
    /// Spec of the dual root datum.
    Dual {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct RunArgs {
    pub spec: PathBuf,
    #[arg(long = "order-bound", short = 'N')]
    pub order_bound: u64,
    #[arg(long, value_enum)]
    pub lambda: Option<LambdaArg>,
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LambdaArg {
    Qlbar,
    Zlbar,
}

impl From<LambdaArg> for Lambda {
    fn from(l: LambdaArg) -> Lambda {
        match l {
            LambdaArg::Qlbar => Lambda::Qlbar,
            LambdaArg::Zlbar => Lambda::Zlbar,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
    #[error("cannot write {path}: {message}")]
    Write { path: String, message: String },
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Run(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 3 when a size bound was exceeded, 2 for every other failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Run(Error::BoundExceeded { .. }) | CliError::Spec(SpecError::Invalid(Error::BoundExceeded { .. })) => 3,
            _ => 2,
        }
    }
}

/// Rendered report and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Run options shared by the report commands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub order_bound: u64,
    pub lambda: Option<Lambda>,
    pub ell: Option<u64>,
    pub format: Format,
}

impl RunOptions {
    pub fn new(order_bound: u64) -> Self {
        RunOptions { order_bound, lambda: None, ell: None, format: Format::Json }
    }
}

/// Parses arguments, runs the command, writes the report and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out_path = match &cli.command {
        Command::Decompose(a) | Command::Coherence(a) | Command::Classical(a) => a.out.clone(),
        Command::Fibers { run, .. } => run.out.clone(),
        Command::Dual { out, .. } => out.clone(),
    };
    let outcome = execute(&cli).and_then(|o| {
        match &out_path {
            Some(path) => fs::write(path, &o.text)
                .map_err(|e| CliError::Write { path: path.display().to_string(), message: e.to_string() })?,
            None => print!("{}", o.text),
        }
        Ok(o)
    });
    match outcome {
        Ok(o) => o.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Decompose(a) => cmd_decompose(&read_spec(&a.spec)?, &options(a)),
        Command::Coherence(a) => cmd_coherence(&read_spec(&a.spec)?, &options(a)),
        Command::Fibers { run, levi } => cmd_fibers(&read_spec(&run.spec)?, &parse_positions(levi)?, &options(run)),
        Command::Classical(a) => cmd_classical(&read_spec(&a.spec)?, &options(a)),
        Command::Dual { spec, .. } => cmd_dual(&read_spec(spec)?),
    }
}

fn options(a: &RunArgs) -> RunOptions {
    RunOptions { order_bound: a.order_bound, lambda: a.lambda.map(Lambda::from), ell: a.ell, format: a.format }
}

fn read_spec(path: &PathBuf) -> Result<GroupSpec, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Read { path: path.display().to_string(), message: e.to_string() })?;
    Ok(GroupSpec::parse(&text)?)
}

fn parse_positions(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad simple position {t:?}"))))
        .collect()
}

/// The spec with command line overrides applied, and its group.
fn prepare(spec: &GroupSpec, opts: &RunOptions) -> Result<(GroupSpec, Group), CliError> {
    let mut effective = spec.clone();
    if let Some(l) = opts.lambda {
        effective.lambda = l;
    }
    if opts.ell.is_some() {
        effective.ell = opts.ell;
    }
    let group = effective.build()?;
    group.frobenius().check_level(opts.order_bound)?;
    crate::ss_classes::check_level_size(group.datum().rank(), opts.order_bound)?;
    Ok((effective, group))
}

fn meta(command: &str, spec: &GroupSpec, effective: &GroupSpec, order_bound: Option<u64>) -> Value {
    json!({
        "command": command,
        "library_version": LIBRARY_VERSION,
        "spec_hash": spec.hash(),
        "order_bound": order_bound,
        "lambda": effective.lambda.to_string(),
        "ell": effective.ell,
        "group": effective.name,
    })
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

/// `num/den`, with zero written `0/1`.
pub fn format_rational(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn class_json(v: &ClassVector) -> Value {
    json!(v.to_strings())
}

fn csv_text(header: &[&str], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let write_err = |e: csv::Error| CliError::Write { path: "<csv>".into(), message: e.to_string() };
    w.write_record(header).map_err(write_err)?;
    for row in rows {
        w.write_record(row).map_err(write_err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Write { path: "<csv>".into(), message: e.to_string() })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn cmd_decompose(spec: &GroupSpec, opts: &RunOptions) -> Result<Outcome, CliError> {
    let (effective, group) = prepare(spec, opts)?;
    let lambda = group.frobenius().lambda();
    let n = opts.order_bound;
    let ap = Apartment::new(&group)?;
    let params = enumerate_inertial_params(&group, n, lambda)?;
    let partition = verify_partition(&ap, n, lambda)?;
    let label = connectedness_label(&group);

    let facets: Vec<Value> = ap
        .facets()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let quotient = parahoric_quotient(&group, f).map(|q| q.num_roots()).ok();
            json!({
                "label": ap.facet_label(i),
                "nodes": f.nodes,
                "barycenter": f.barycenter.iter().map(format_rational).collect::<Vec<_>>(),
                "quotient_roots": quotient,
                "hyperspecial": ap.hyperspecial_facet() == Some(i),
            })
        })
        .collect();

    let mut s_table = BTreeMap::new();
    let mut rows = Vec::new();
    let mut param_values = Vec::new();
    let mut coherent = true;
    let mut all_attained = true;
    for phi in &params {
        let system = compute_s_phi(&ap, phi);
        coherent &= verify_zero_coherence(&ap, &system).passed;
        let attained = is_attained(&ap, phi);
        all_attained &= attained;
        let key = phi.rep().to_string();
        let mut per_facet = BTreeMap::new();
        for (i, f) in ap.facets().iter().enumerate() {
            let classes = system.at(&f.nodes);
            for c in &classes {
                rows.push(vec![key.clone(), ap.facet_label(i), c.to_strings().join(" ")]);
            }
            per_facet.insert(ap.facet_label(i), classes.iter().map(class_json).collect::<Vec<_>>());
        }
        s_table.insert(key, json!(per_facet));
        param_values.push(json!({
            "class": class_json(phi.rep()),
            "order": phi.order,
            "attained": attained,
            "centralizer_connected": centralizer_connected(&group, phi),
            "connectedness_label": label,
            "discrete": is_discrete(&group, phi).discrete,
        }));
    }
    let passed = partition.passed;
    if opts.format == Format::Csv {
        return Ok(Outcome { text: csv_text(&["parameter", "facet", "class"], &rows)?, passed });
    }
    let report = json!({
        "meta": meta("decompose", spec, &effective, Some(n)),
        "facets": facets,
        "parameters": param_values,
        "S": s_table,
        "checks": {
            "coherence": coherent,
            "partition": partition.passed,
            "attained": all_attained,
        },
        "partition": partition,
    });
    Ok(Outcome { text: render(&report), passed })
}

pub fn cmd_coherence(spec: &GroupSpec, opts: &RunOptions) -> Result<Outcome, CliError> {
    if opts.format == Format::Csv {
        return Err(CliError::Usage("csv output is available for decompose and fibers only".into()));
    }
    let (effective, group) = prepare(spec, opts)?;
    let lambda = group.frobenius().lambda();
    let ap = Apartment::new(&group)?;
    let params = enumerate_inertial_params(&group, opts.order_bound, lambda)?;
    let mut entries = Vec::new();
    let mut coherent = true;
    for phi in &params {
        let report = verify_zero_coherence(&ap, &compute_s_phi(&ap, phi));
        coherent &= report.passed;
        entries.push(json!({ "class": class_json(phi.rep()), "report": report }));
    }
    let composition = verify_composition_law(&ap, opts.order_bound, lambda)?;
    let composition_value = match &composition {
        Ok(checks) => json!({ "passed": true, "checks": checks, "counterexample": null }),
        Err(msg) => json!({ "passed": false, "checks": null, "counterexample": msg }),
    };
    let passed = coherent && composition.is_ok();
    let report = json!({
        "meta": meta("coherence", spec, &effective, Some(opts.order_bound)),
        "parameters": entries,
        "composition": composition_value,
        "checks": { "coherence": coherent, "composition": composition.is_ok() },
    });
    Ok(Outcome { text: render(&report), passed })
}

pub fn cmd_fibers(spec: &GroupSpec, levi: &[usize], opts: &RunOptions) -> Result<Outcome, CliError> {
    let (effective, group) = prepare(spec, opts)?;
    let lambda = group.frobenius().lambda();
    let m = LeviContext::from_positions(&group, levi)?;
    let params = enumerate_inertial_params(&group, opts.order_bound, lambda)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut round_trip = true;
    for phi in &params {
        let fibers = restriction_fibers(&group, phi, &m);
        let mut fiber_values = Vec::new();
        for f in &fibers {
            let back = levi_param_map(&group, &f.rep) == *phi;
            round_trip &= back;
            let criterion = satisfies_equivalence_criterion(&group, &f.rep, &m);
            rows.push(vec![
                phi.rep().to_strings().join(" "),
                f.rep.to_strings().join(" "),
                criterion.to_string(),
            ]);
            fiber_values.push(json!({
                "class": class_json(&f.rep),
                "equivalence_criterion": criterion,
                "round_trip": back,
            }));
        }
        let discreteness = is_discrete(&group, phi);
        entries.push(json!({
            "class": class_json(phi.rep()),
            "fibers": fiber_values,
            "discrete": discreteness.discrete,
            "discreteness_witness": discreteness.witness,
        }));
    }
    if opts.format == Format::Csv {
        return Ok(Outcome {
            text: csv_text(&["parameter", "levi_class", "equivalence_criterion"], &rows)?,
            passed: round_trip,
        });
    }
    let rd = group.datum();
    let report = json!({
        "meta": meta("fibers", spec, &effective, Some(opts.order_bound)),
        "levi": {
            "simple_positions": levi,
            "simple_roots": m.delta_m().iter().map(|&a| rd.root(a).to_vec()).collect::<Vec<_>>(),
            "weyl_order": m.weyl().order(),
        },
        "parameters": entries,
        "checks": { "round_trip": round_trip },
    });
    Ok(Outcome { text: render(&report), passed: round_trip })
}

pub fn cmd_classical(spec: &GroupSpec, opts: &RunOptions) -> Result<Outcome, CliError> {
    if opts.format == Format::Csv {
        return Err(CliError::Usage("csv output is available for decompose and fibers only".into()));
    }
    let (effective, group) = prepare(spec, opts)?;
    let t: ClassicalType = spec
        .classical
        .ok_or_else(|| CliError::Usage("the spec has no classical field".into()))?;
    if t.n != group.datum().rank() {
        return Err(CliError::Usage(format!("classical rank {} differs from the datum rank", t.n)));
    }
    let q = group.frobenius().q();
    let n = opts.order_bound;
    let mut polys = Vec::new();
    let mut self_dual = true;
    for phi in enumerate_inertial_params(&group, n, Lambda::Qlbar)? {
        let p = char_polynomial(phi.rep(), t, q)?;
        let ok = is_self_dual(&p) && p.degree() == t.dimension();
        self_dual &= ok;
        polys.push(json!({ "class": class_json(phi.rep()), "polynomial": p.to_string(), "self_dual": ok }));
    }
    let grid = compatibility_grid(t, q, n)?;
    let compatible = grid.iter().all(|r| r.passed);
    let report = json!({
        "meta": meta("classical", spec, &effective, Some(n)),
        "type": t.to_string(),
        "polynomials": polys,
        "compatibility": grid,
        "checks": { "compatibility": compatible, "self_dual": self_dual, "cases": grid.len() },
    });
    Ok(Outcome { text: render(&report), passed: compatible && self_dual })
}

pub fn cmd_dual(spec: &GroupSpec) -> Result<Outcome, CliError> {
    Ok(Outcome { text: spec.dual()?.to_canonical_json(), passed: true })
}

/// Convenience for callers holding a parameter: its report line.
pub fn describe_parameter(group: &Group, phi: &InertialParam) -> String {
    format!(
        "{} order {} connected {} discrete {}",
        phi.rep(),
        phi.order,
        centralizer_connected(group, phi),
        is_discrete(group, phi).discrete
    )
}
