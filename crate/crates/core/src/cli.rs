//! The `flagkneser` command line: batch runs that write JSON reports and a run manifest.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed, 2 on bad
//! input or a refused request.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::constructions::{
    build_ekr_plane_family, build_ekr_solid_family, build_lambda, canonical_anchors, count_lambda, trivial_coloring,
    ColoringScheme, ConstructionError, FlagSetFile, FlagSetParseError, LambdaKind, LambdaSpec, PlaneFamilyKind,
    SolidFamilyKind,
};
use crate::counting::{
    chromatic_upper, independence_number, lambda_hyperplane_size, s_points, FormulaError, FormulaRegistry,
    FormulaValue,
};
use crate::kneser::{dimacs_header_full, write_dimacs, FlagSet, FlagUniverse, KneserError};
use crate::oracle::{self, OracleError, OracleResult, OracleSweep, ThreePlaneConfig, TwoSolidConfig};
use crate::projective::{ProjectiveError, ProjectiveSpace, Subspace};
use crate::verify::{self, CheckResult, VerificationReport};

// Report lines must not panic when a downstream pipe closes early.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}
macro_rules! err {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stderr(), $($t)*);
    }};
}

pub const THREADS_ENV: &str = "FLAGKNESER_THREADS";

#[derive(Debug, Parser, Serialize)]
#[command(name = "flagkneser", version, about = "Plane-solid flag Kneser graphs of PG(6,q)")]
pub struct Cli {
    /// Worker threads for parallel scans (results do not depend on it).
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,
    /// Write the run manifest here instead of to stderr.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Zero all timings so reports and manifests are byte-stable.
    #[arg(long, global = true)]
    pub deterministic: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
pub enum Command {
    /// Evaluate closed-form counts (`name` or `name:arg,arg`).
    Count(CountArgs),
    /// Build a Λ family and write it as a flag set file.
    Construct(ConstructArgs),
    /// Run checks on a flag set file.
    Verify(VerifyArgs),
    /// Build a coloring and check that it is a proper cover.
    Color(ColorArgs),
    /// Run a brute-force counting oracle.
    Oracle(OracleArgs),
    /// Export Γ or an induced subgraph in DIMACS format.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableFormat {
    Json,
    Csv,
}

#[derive(Debug, Args, Serialize)]
pub struct CountArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(required = true)]
    pub formulas: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: TableFormat,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EkrKind {
    #[value(alias = "point_pencil")]
    PointPencil,
    #[value(alias = "subspace_full")]
    SubspaceFull,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolidKind {
    #[value(alias = "in_hyperplane")]
    InHyperplane,
    #[value(alias = "on_line")]
    OnLine,
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    /// One of H_E, P_S, P_H, H_P, P_l, H_U, P_empty, H_empty.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub q: u32,
    /// Fill unspecified anchors from the coordinate frame.
    #[arg(long)]
    pub canonical: bool,
    /// `NAME=SUBSPACE` with NAME in H, P, l, U and SUBSPACE in `d;row;row` form.
    #[arg(long = "anchor")]
    pub anchors: Vec<String>,
    /// Plane family for H_E.
    #[arg(long, value_enum)]
    pub ekr: Option<EkrKind>,
    /// Solid family for P_S.
    #[arg(long, value_enum)]
    pub solids: Option<SolidKind>,
    /// Flag set file to write.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Report file (stdout if absent).
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Count by constrained enumeration without building the universe.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub independent: bool,
    #[arg(long)]
    pub maximal: bool,
    #[arg(long)]
    pub saturation: bool,
    /// Hyperplane trace check (anchor H, else the hyperplane x0 = 0).
    #[arg(long)]
    pub trace: bool,
    /// Point trace check (anchor P, else e6).
    #[arg(long)]
    pub point_trace: bool,
    /// Disjoint-plane count around one member flag.
    #[arg(long)]
    pub f3289: bool,
    /// Member flag for --f3289 (default: the first member).
    #[arg(long)]
    pub flag: Option<u32>,
    /// Per-solid multiplicity bound for --f3289 (default: the measured maximum).
    #[arg(long)]
    pub xi: Option<u64>,
    #[arg(long)]
    pub hyperplane: Option<String>,
    #[arg(long)]
    pub point: Option<String>,
    /// Every check above.
    #[arg(long)]
    pub all: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Mi,
    Trivial,
}

#[derive(Debug, Args, Serialize)]
pub struct ColorArgs {
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    #[arg(long)]
    pub q: u32,
    /// At q = 3, build the universe and check the cover (independence is not scanned).
    #[arg(long)]
    pub cover: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum OracleName {
    #[value(alias = "skew_count")]
    SkewCount,
    A0b3,
    Hilfslemma,
    #[value(alias = "line_meeting")]
    LineMeeting,
    Complement,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Grid {
    /// n <= 3.
    Small,
    /// n <= 5.
    Full,
}

#[derive(Debug, Args, Serialize)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub name: OracleName,
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Random configurations (per tuple for skew-count).
    #[arg(long)]
    pub sweeps: Option<usize>,
    /// skew-count: run the parameter grid.
    #[arg(long, value_enum)]
    pub grid: Option<Grid>,
    /// hilfslemma: trace dimension (1 or 2; both if absent).
    #[arg(long)]
    pub u: Option<i32>,
    /// skew-count / line-meeting / complement: ambient dimension.
    #[arg(long)]
    pub n: Option<usize>,
    /// skew-count: subspace dimension; complement: vector dimension.
    #[arg(long)]
    pub d: Option<i32>,
    /// skew-count: the subspace to avoid.
    #[arg(long)]
    pub l_sub: Option<String>,
    /// skew-count: the subspace to contain.
    #[arg(long)]
    pub k_sub: Option<String>,
    /// a0b3 / hilfslemma: explicit points (a0b3 takes two, hilfslemma one).
    #[arg(long = "point")]
    pub points: Vec<String>,
    /// a0b3: three planes.
    #[arg(long = "plane")]
    pub planes: Vec<String>,
    /// hilfslemma: two solids.
    #[arg(long = "solid")]
    pub solids: Vec<String>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    Dimacs,
}

#[derive(Debug, Args, Serialize)]
pub struct ExportArgs {
    #[arg(long, value_enum, default_value = "dimacs")]
    pub format: GraphFormat,
    #[arg(long)]
    pub q: u32,
    /// Required for a whole-graph export.
    #[arg(long)]
    pub confirm_size: bool,
    /// Export only the subgraph induced on this flag set file.
    #[arg(long)]
    pub subset: Option<PathBuf>,
    /// Print the whole-graph header line and stop.
    #[arg(long)]
    pub header_only: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Kneser(#[from] KneserError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Parse { path: String, source: FlagSetParseError },
    #[error("{0}: {1}")]
    Io(String, std::io::Error),
    #[error("{0}")]
    Refused(String),
    #[error("{0}")]
    Usage(String),
}

/// What a run produced, for the manifest and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub q: Option<u32>,
    pub seed: Option<u64>,
    pub outputs: Vec<PathBuf>,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub q: Option<u32>,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub tool_version: &'static str,
    pub started_unix_ms: u128,
    pub elapsed_ms: u128,
    pub outputs: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count(_) => "count",
        Command::Construct(_) => "construct",
        Command::Verify(_) => "verify",
        Command::Color(_) => "color",
        Command::Oracle(_) => "oracle",
        Command::Export(_) => "export",
    }
}

fn command_params(c: &Command) -> Value {
    let v = serde_json::to_value(c).unwrap_or(Value::Null);
    // externally tagged: {"Count": {...}}
    v.as_object().and_then(|o| o.values().next().cloned()).unwrap_or(v)
}

/// Parses `args`, runs the command, writes the manifest, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        // a pool may already exist when called in-process; the setting is advisory then
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let started = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_millis()).unwrap_or(0);
    let t = Instant::now();
    let result = run(&cli);
    let (code, outcome, error) = match result {
        Ok(o) => (if o.pass { 0 } else { 1 }, o, None),
        Err(e) => {
            err!("error: {e}");
            (2, Outcome::default(), Some(e.to_string()))
        }
    };
    let parameters = command_params(&cli.command);
    let manifest = RunManifest {
        command: command_name(&cli.command).to_string(),
        q: outcome.q.or_else(|| parameters.get("q").and_then(Value::as_u64).map(|q| q as u32)),
        parameters,
        seed: outcome.seed,
        tool_version: env!("CARGO_PKG_VERSION"),
        started_unix_ms: if cli.deterministic { 0 } else { started },
        elapsed_ms: if cli.deterministic { 0 } else { t.elapsed().as_millis() },
        outputs: outcome.outputs.iter().map(|p| p.display().to_string()).collect(),
        pass: code == 0,
        error,
    };
    match &cli.manifest {
        Some(p) => {
            if let Err(e) = fs::write(p, serde_json::to_string_pretty(&manifest).unwrap() + "\n") {
                err!("error: cannot write manifest {}: {e}", p.display());
                return 2;
            }
        }
        None => err!("{}", serde_json::to_string(&manifest).unwrap()),
    }
    code
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let det = cli.deterministic;
    match &cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Construct(a) => cmd_construct(a, det),
        Command::Verify(a) => cmd_verify(a, det),
        Command::Color(a) => cmd_color(a, det),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Export(a) => cmd_export(a),
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
}

/// Writes to `output` when given (recording it), otherwise to stdout.
fn emit(text: &str, output: Option<&PathBuf>, outcome: &mut Outcome) -> Result<(), CliError> {
    match output {
        Some(p) => {
            write_text(p, text)?;
            outcome.outputs.push(p.clone());
        }
        None => out!("{}", text.trim_end()),
    }
    Ok(())
}

fn finish_report(r: &mut VerificationReport, det: bool) -> String {
    if det {
        r.zero_timings();
    }
    for c in &r.checks {
        err!("{}: {}{}", c.name, if c.pass { "PASS" } else { "FAIL" }, witness_text(c));
    }
    r.to_json() + "\n"
}

fn witness_text(c: &CheckResult) -> String {
    match &c.witness {
        Some(w) => format!(" witness {}", serde_json::to_string(w).unwrap()),
        None => String::new(),
    }
}

fn cmd_count(a: &CountArgs) -> Result<Outcome, CliError> {
    let reg = FormulaRegistry::new();
    let export = reg.export(a.q, &a.formulas)?;
    let text = match a.format {
        TableFormat::Json => serde_json::to_string_pretty(&export).unwrap() + "\n",
        TableFormat::Csv => {
            let mut s = String::from("name,params,value,anchor\n");
            for (name, r) in &export.formulas {
                let params = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
                s += &format!("{name},{params},{},\"{}\"\n", r.value, r.anchor.replace('"', "\"\""));
            }
            s
        }
    };
    let mut o = Outcome { pass: true, q: Some(a.q), ..Default::default() };
    emit(&text, a.output.as_ref(), &mut o)?;
    Ok(o)
}

fn parse_anchor_args(space: &ProjectiveSpace, raw: &[String]) -> Result<Vec<(String, Subspace)>, CliError> {
    raw.iter()
        .map(|s| {
            let (name, text) = s
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("anchor {s:?} is not NAME=SUBSPACE")))?;
            if !["H", "P", "l", "U"].contains(&name) {
                return Err(CliError::Usage(format!("unknown anchor name {name:?}; use H, P, l or U")));
            }
            Ok((name.to_string(), space.parse_subspace(text)?))
        })
        .collect()
}

/// The family description plus the anchors to record in the file.
fn spec_from_args(a: &ConstructArgs, space: &ProjectiveSpace) -> Result<(LambdaSpec, Vec<(String, Subspace)>), CliError> {
    let kind: LambdaKind = a.kind.parse()?;
    let given = parse_anchor_args(space, &a.anchors)?;
    let canon = canonical_anchors(space);
    let get = |name: &str| -> Result<Subspace, CliError> {
        if let Some((_, s)) = given.iter().find(|(n, _)| n == name) {
            return Ok(s.clone());
        }
        if a.canonical {
            return Ok(match name {
                "H" => canon.hyperplane.clone(),
                "P" => canon.point.clone(),
                "l" => canon.line.clone(),
                _ => canon.four_space.clone(),
            });
        }
        Err(CliError::Usage(format!("kind {kind} needs anchor {name}; pass --anchor {name}=... or --canonical")))
    };
    let mut recorded: Vec<(String, Subspace)> = Vec::new();
    let mut rec = |n: &str, s: &Subspace| recorded.push((n.to_string(), s.clone()));
    let spec = match kind {
        LambdaKind::HyperplaneFamily => {
            let h = get("H")?;
            rec("H", &h);
            let fam = match a.ekr.ok_or_else(|| CliError::Usage("H_E needs --ekr point-pencil|subspace-full".into()))? {
                EkrKind::PointPencil => {
                    let p = get("P")?;
                    rec("P", &p);
                    build_ekr_plane_family(&PlaneFamilyKind::PointPencil(p), &h, space)?
                }
                EkrKind::SubspaceFull => {
                    let u = get("U")?;
                    rec("U", &u);
                    build_ekr_plane_family(&PlaneFamilyKind::SubspaceFull(u), &h, space)?
                }
            };
            LambdaSpec::hyperplane_family(h, fam)
        }
        LambdaKind::PointFamily => {
            let p = get("P")?;
            rec("P", &p);
            let fam = match a.solids.ok_or_else(|| CliError::Usage("P_S needs --solids in-hyperplane|on-line".into()))? {
                SolidKind::InHyperplane => {
                    let h = get("H")?;
                    rec("H", &h);
                    build_ekr_solid_family(&p, &SolidFamilyKind::InHyperplane(h), space)?
                }
                SolidKind::OnLine => {
                    let l = get("l")?;
                    rec("l", &l);
                    build_ekr_solid_family(&p, &SolidFamilyKind::OnLine(l), space)?
                }
            };
            LambdaSpec::point_family(p, fam)
        }
        LambdaKind::PointHyperplane => LambdaSpec::point_hyperplane(get("P")?, get("H")?),
        LambdaKind::HyperplanePoint => LambdaSpec::hyperplane_point(get("H")?, get("P")?),
        LambdaKind::PointLine => LambdaSpec::point_line(get("P")?, get("l")?),
        LambdaKind::HyperplaneFourSpace => LambdaSpec::hyperplane_four_space(get("H")?, get("U")?),
        LambdaKind::PointEmpty => LambdaSpec::point_empty(get("P")?),
        LambdaKind::HyperplaneEmpty => LambdaSpec::hyperplane_empty(get("H")?),
    };
    if recorded.is_empty() {
        recorded = spec.anchors().into_iter().map(|(n, s)| (n.to_string(), s.clone())).collect();
    }
    spec.validate(space)?;
    Ok((spec, recorded))
}

fn expected_size(spec: &LambdaSpec, q: u32) -> FormulaValue {
    match spec.kind {
        LambdaKind::HyperplaneFamily => lambda_hyperplane_size(spec.plane_family.len() as u64, q),
        LambdaKind::PointFamily => lambda_hyperplane_size(spec.solid_family.len() as u64, q),
        LambdaKind::PointEmpty | LambdaKind::HyperplaneEmpty => lambda_hyperplane_size(0, q),
        _ => independence_number(q),
    }
}

fn cmd_construct(a: &ConstructArgs, det: bool) -> Result<Outcome, CliError> {
    let space = ProjectiveSpace::new(6, a.q)?;
    let (spec, anchors) = spec_from_args(a, &space)?;
    let expected = expected_size(&spec, a.q);
    let mut o = Outcome { q: Some(a.q), ..Default::default() };
    let subject = format!("construct {}", spec.kind);
    let mut report = if a.count_only {
        let n = count_lambda(&spec, &space)?;
        VerificationReport::new(subject, a.q, n).with_expected(expected)
    } else {
        let out = a
            .output
            .as_ref()
            .ok_or_else(|| CliError::Usage("construct needs --output FILE (or --count-only)".into()))?;
        let universe = FlagUniverse::build(a.q)?;
        let set = build_lambda(&spec, &universe)?;
        let names: Vec<(&str, &Subspace)> = anchors.iter().map(|(n, s)| (n.as_str(), s)).collect();
        let file = FlagSetFile::from_set(&set, spec.kind.name(), &names);
        write_text(out, &file.to_text())?;
        o.outputs.push(out.clone());
        VerificationReport::for_set(subject, &set).with_expected(expected)
    };
    o.pass = report.pass();
    let text = finish_report(&mut report, det);
    emit(&text, a.report.as_ref(), &mut o)?;
    Ok(o)
}

fn read_flag_file(path: &Path) -> Result<FlagSetFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    FlagSetFile::parse(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn cmd_verify(a: &VerifyArgs, det: bool) -> Result<Outcome, CliError> {
    let file = read_flag_file(&a.file)?;
    let universe = FlagUniverse::build(file.q)?;
    let space = universe.space();
    let set = file.to_flag_set(&universe)?;
    let subject = format!("{} ({})", a.file.display(), file.kind);
    let mut report = VerificationReport::for_set(subject, &set);
    let any = a.independent || a.maximal || a.saturation || a.trace || a.point_trace || a.f3289;
    let independent = a.all || a.independent || a.maximal || !any;
    if independent {
        report.push(verify::independence_check(&set));
    }
    if a.all || a.maximal {
        if report.pass() {
            report.push(verify::maximality_check(&set));
        } else {
            report.push(CheckResult {
                name: "maximal".into(),
                pass: false,
                witness: None,
                ms: 0,
                detail: [("skipped".to_string(), json!("set is not independent"))].into_iter().collect(),
            });
        }
    }
    let hyperplane = match &a.hyperplane {
        Some(t) => Some(space.parse_subspace(t)?),
        None => file.anchor("H").cloned(),
    };
    if a.all || a.saturation {
        // the saturated solids are pinned only for the hyperplane-based kinds
        let pin = file.kind.starts_with("H_").then_some(hyperplane.as_ref()).flatten();
        let (r, _) = verify::check_saturation(&set, pin);
        report.extend(r);
    }
    if a.all || a.trace {
        let h = hyperplane.clone().unwrap_or_else(|| space.coordinate_subspace(&[1, 2, 3, 4, 5, 6]));
        report.extend(verify::check_hyperplane_trace_ekr(&set, &h));
    }
    if a.all || a.point_trace {
        let p = match &a.point {
            Some(t) => space.parse_subspace(t)?,
            None => file.anchor("P").cloned().unwrap_or_else(|| space.coordinate_subspace(&[6])),
        };
        report.extend(verify::check_point_trace_ekr(&set, &p));
    }
    if a.all || a.f3289 {
        let f = match a.flag.or_else(|| set.iter().next()) {
            Some(f) => f,
            None => return Err(CliError::Usage("--f3289 needs a non-empty set or --flag".into())),
        };
        let xi = a.xi.unwrap_or_else(|| {
            let mut per: std::collections::HashMap<u32, u64> = std::collections::HashMap::new();
            for g in set.iter() {
                *per.entry(universe.ids(g).1).or_default() += 1;
            }
            per.values().copied().max().unwrap_or(0)
        });
        report.extend(verify::check_f3289_bound(&set, f, xi));
    }
    let mut o = Outcome { q: Some(file.q), pass: report.pass(), ..Default::default() };
    let text = finish_report(&mut report, det);
    emit(&text, a.output.as_ref(), &mut o)?;
    Ok(o)
}

fn class_list(scheme: &ColoringScheme) -> Value {
    json!(scheme.classes.iter().map(|(x, l)| json!({"point": x.to_string(), "line": l.to_string()})).collect::<Vec<_>>())
}

fn cmd_color(a: &ColorArgs, det: bool) -> Result<Outcome, CliError> {
    let q = a.q;
    let space = ProjectiveSpace::new(6, q)?;
    let (count, formula, classes_json, scheme) = match a.scheme {
        Scheme::Mi => {
            let s = ColoringScheme::canonical(&space)?;
            (s.classes.len() as u64, chromatic_upper(q), class_list(&s), Some(s))
        }
        Scheme::Trivial => {
            let v = canonical_anchors(&space).four_space;
            let pts: Vec<String> = space.points_of(&v).into_iter().map(|i| space.point_at(i).to_string()).collect();
            (pts.len() as u64, s_points(4, q), json!(pts), None)
        }
    };
    let mut report = VerificationReport::new(format!("{:?} coloring", a.scheme).to_lowercase(), q, count);
    report.push(CheckResult {
        name: "class_count".into(),
        pass: formula == count,
        witness: None,
        ms: 0,
        detail: [("formula".to_string(), json!(formula)), ("classes".to_string(), classes_json)]
            .into_iter()
            .collect(),
    });
    match q {
        2 => {
            let u = FlagUniverse::build(2)?;
            let classes = match &scheme {
                Some(s) => crate::constructions::build_coloring(s, &u)?,
                None => trivial_coloring(&canonical_anchors(u.space()).four_space, &u)?,
            };
            report.extend(verify::check_coloring(&classes, &u));
        }
        3 if a.cover => {
            let u = FlagUniverse::build(3)?;
            let specs: Vec<LambdaSpec> = match &scheme {
                Some(s) => s.class_specs(),
                None => {
                    let v = canonical_anchors(&space).four_space;
                    space.points_of(&v).into_iter().map(|i| LambdaSpec::point_empty(space.point_at(i))).collect()
                }
            };
            let mut bits = Vec::new();
            for s in &specs {
                bits.push(build_lambda(s, &u)?.bits().clone());
            }
            let mut c = verify::cover_check(bits, &u);
            c.detail.insert("independence".into(), json!("not scanned at q=3; every class has a verified Λ shape"));
            report.push(c);
        }
        _ => {}
    }
    let mut o = Outcome { q: Some(q), pass: report.pass(), ..Default::default() };
    let text = finish_report(&mut report, det);
    emit(&text, a.output.as_ref(), &mut o)?;
    Ok(o)
}

#[derive(Serialize)]
struct OracleReport {
    oracle: OracleName,
    q: u32,
    seed: Option<u64>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_count: Option<u64>,
    results: Vec<OracleResult>,
}

fn oracle_report(name: OracleName, q: u32, seed: Option<u64>, results: Vec<OracleResult>) -> OracleReport {
    let pass = results.iter().all(|r| r.pass);
    OracleReport { oracle: name, q, seed, pass, max_count: None, results }
}

fn from_sweep(name: OracleName, q: u32, s: OracleSweep) -> OracleReport {
    OracleReport { oracle: name, q, seed: Some(s.seed), pass: s.pass, max_count: Some(s.max_count), results: s.results }
}

fn cmd_oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    let q = a.q;
    let report = match a.name {
        OracleName::SkewCount => match (&a.l_sub, &a.k_sub) {
            (Some(l), Some(k)) => {
                let n = a.n.ok_or_else(|| CliError::Usage("explicit skew-count needs --n".into()))?;
                let d = a.d.ok_or_else(|| CliError::Usage("explicit skew-count needs --d".into()))?;
                let space = ProjectiveSpace::new(n, q)?;
                let r = oracle::count_skew_constrained(&space, &space.parse_subspace(l)?, &space.parse_subspace(k)?, d)?;
                oracle_report(a.name, q, None, vec![r])
            }
            (None, None) => {
                let n_max = match (a.grid, a.n) {
                    (Some(Grid::Small), _) => 3,
                    (Some(Grid::Full), _) | (None, None) => 5,
                    (None, Some(n)) => n,
                };
                let sweeps = a.sweeps.unwrap_or(10);
                oracle_report(a.name, q, Some(a.seed), oracle::skew_count_grid(q, n_max, sweeps, a.seed)?)
            }
            _ => return Err(CliError::Usage("give both --l-sub and --k-sub, or neither".into())),
        },
        OracleName::A0b3 => {
            if a.planes.is_empty() && a.points.is_empty() {
                from_sweep(a.name, q, oracle::a0b3_sweep(q, a.sweeps.unwrap_or(20), a.seed)?)
            } else {
                let space = ProjectiveSpace::new(6, q)?;
                if a.points.len() != 2 || a.planes.len() != 3 {
                    return Err(CliError::Usage("a0b3 needs --point P1 --point P2 and three --plane".into()));
                }
                let p = |t: &String| space.parse_subspace(t);
                let cfg = ThreePlaneConfig {
                    p1: p(&a.points[0])?,
                    p2: p(&a.points[1])?,
                    planes: [p(&a.planes[0])?, p(&a.planes[1])?, p(&a.planes[2])?],
                };
                oracle_report(a.name, q, None, vec![oracle::count_solids_meeting_three_planes(&space, &cfg)?])
            }
        }
        OracleName::Hilfslemma => {
            if a.solids.is_empty() && a.points.is_empty() {
                let us: Vec<i32> = a.u.map_or(vec![1, 2], |u| vec![u]);
                let mut results = Vec::new();
                let mut max = 0;
                for u in us {
                    let s = oracle::hilfslemma_sweep(q, u, a.sweeps.unwrap_or(0), a.seed)?;
                    max = max.max(s.max_count);
                    results.extend(s.results);
                }
                let mut r = oracle_report(a.name, q, Some(a.seed), results);
                r.max_count = Some(max);
                r
            } else {
                let space = ProjectiveSpace::new(6, q)?;
                if a.points.len() != 1 || a.solids.len() != 2 {
                    return Err(CliError::Usage("hilfslemma needs one --point and two --solid".into()));
                }
                let p = |t: &String| space.parse_subspace(t);
                let cfg = TwoSolidConfig { point: p(&a.points[0])?, solids: [p(&a.solids[0])?, p(&a.solids[1])?] };
                oracle_report(a.name, q, None, oracle::count_planes_meeting_two_solids(&space, &cfg)?)
            }
        }
        OracleName::LineMeeting => oracle_report(a.name, q, None, oracle::max_line_meeting_family_check(a.n.unwrap_or(5), q)?),
        OracleName::Complement => {
            let n = a.n.unwrap_or(4);
            let ds: Vec<usize> = match a.d {
                Some(d) if d >= 0 => vec![d as usize],
                Some(d) => return Err(CliError::Usage(format!("--d must be non-negative, got {d}"))),
                None => (0..=n).collect(),
            };
            let results = ds.into_iter().map(|d| oracle::complement_count_check(d, n, q)).collect::<Result<Vec<_>, _>>()?;
            oracle_report(a.name, q, None, results)
        }
    };
    let mut o = Outcome { q: Some(q), seed: report.seed, pass: report.pass, ..Default::default() };
    err!(
        "{:?}: {} ({} results){}",
        a.name,
        if report.pass { "PASS" } else { "FAIL" },
        report.results.len(),
        report.max_count.map_or(String::new(), |m| format!(", max count {m}"))
    );
    emit(&(serde_json::to_string_pretty(&report).unwrap() + "\n"), a.output.as_ref(), &mut o)?;
    Ok(o)
}

fn cmd_export(a: &ExportArgs) -> Result<Outcome, CliError> {
    let GraphFormat::Dimacs = a.format;
    let mut o = Outcome { q: Some(a.q), pass: true, ..Default::default() };
    if a.header_only {
        let u = FlagUniverse::build(a.q)?;
        emit(&(dimacs_header_full(&u) + "\n"), a.output.as_ref(), &mut o)?;
        return Ok(o);
    }
    let subset = a.subset.as_ref().map(|p| read_flag_file(p)).transpose()?;
    if subset.is_none() && !a.confirm_size {
        let v = crate::counting::flag_count(a.q);
        let e = (crate::counting::kneser_degree(a.q).0 * &v.0) / 2u32;
        return Err(CliError::Refused(format!(
            "refusing to export the whole graph at q={} without --confirm-size \
             ({v} vertices, {e} edges); use --header-only or --subset",
            a.q
        )));
    }
    if let Some(f) = &subset {
        if f.q != a.q {
            return Err(CliError::Usage(format!("subset file is for q={}, not q={}", f.q, a.q)));
        }
    }
    let out = a.output.as_ref().ok_or_else(|| CliError::Usage("export needs --output FILE".into()))?;
    let u = FlagUniverse::build(a.q)?;
    let set = match &subset {
        Some(f) => f.to_flag_set(&u)?,
        None => FlagSet::full(&u),
    };
    let file = fs::File::create(out).map_err(|e| CliError::Io(out.display().to_string(), e))?;
    let edges = write_dimacs(&set, std::io::BufWriter::new(file))?;
    err!("wrote {} vertices, {edges} edges", set.len());
    o.outputs.push(out.clone());
    Ok(o)
}
