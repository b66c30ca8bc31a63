use clap::{Parser, Subcommand, ValueEnum};
use insdraw::drawing::json::{CombinatorialJson, GeometricJson};
use insdraw::drawing::{colored_dual, resolve_vertex, validate_simple, Planarization};
use insdraw::geom::{build_planarization, Simplicity};
use insdraw::insertion::{
    insertable, kernelize, Answer, InsertionError, SearchedMap, Strategy, DEFAULT_BUDGET,
};
use insdraw::pseudocircles::{
    extend_traced, oracle_extend, ArrangementJson, ExtendOutcome, PseudocircleError, ScanOrder,
    DEFAULT_ORACLE_BUDGET,
};
use insdraw::reduction::{brute_force_sat, build_instance, CnfFormula, ReductionError};
use insdraw::{gen, render};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "insdraw", version, about = "Edge insertion in simple drawings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a drawing is simple.
    Validate { drawing: PathBuf },
    /// Decide whether edge uv can be inserted.
    Insert {
        drawing: PathBuf,
        /// Name or id of u.
        #[arg(long)]
        u: String,
        /// Name or id of v.
        #[arg(long)]
        v: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Oracle)]
        strategy: StrategyArg,
        /// Node-expansion budget.
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Build the drawing for a DIMACS 3CNF formula.
    Reduce {
        cnf: PathBuf,
        /// Write PREFIX.drawing.json and PREFIX.sidecar.json instead of
        /// printing both.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce, insert, and compare with brute-force satisfiability.
    Roundtrip {
        cnf: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Oracle)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Decide whether sigma extends to a pseudocircle.
    Extend {
        arrangement: PathBuf,
        /// Use the exhaustive route search instead of the region algorithm.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
    /// Print a random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = gen::DEFAULT_SEED)]
        seed: u64,
    },
    /// Draw a drawing or arrangement file.
    Render {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Render the dual graph instead of the planarization (DOT only).
        #[arg(long)]
        dual: bool,
        /// With --dual: remove the colors at u and v and mark their faces.
        #[arg(long, requires = "v")]
        u: Option<String>,
        #[arg(long, requires = "u")]
        v: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Oracle,
    Fpt,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Oracle => Strategy::Oracle,
            StrategyArg::Fpt => Strategy::Fpt,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Drawing,
    Arrangement,
    /// DIMACS 3CNF formula.
    Cnf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Svg,
}

/// Failure classes, one exit code each.
enum Failure {
    Parse(String),
    Validation(String),
    Timeout(u64),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 2,
            Failure::Validation(_) => 3,
            Failure::Timeout(_) => 4,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Validation(m) => write!(f, "invalid input: {m}"),
            Failure::Timeout(b) => write!(f, "timeout: budget of {b} nodes exhausted"),
        }
    }
}

impl From<InsertionError> for Failure {
    fn from(e: InsertionError) -> Self {
        match e {
            InsertionError::Timeout(b) => Failure::Timeout(b),
            InsertionError::Drawing(d) => Failure::Validation(d.to_string()),
        }
    }
}

impl From<PseudocircleError> for Failure {
    fn from(e: PseudocircleError) -> Self {
        match e {
            PseudocircleError::Timeout(b) => Failure::Timeout(b),
            other => Failure::Validation(other.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Dimacs(_) | ReductionError::BadLiteral(..) => Failure::Parse(e.to_string()),
            other => Failure::Validation(other.to_string()),
        }
    }
}

/// Result of a successful run: text for stdout and the exit code (0 or 1).
struct Output {
    text: String,
    code: u8,
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::Parse(e.to_string()))
}

/// Loads a drawing from geometric (`curves`) or combinatorial
/// (`half_edges`) JSON, or the planarization of an arrangement file.
fn load_map(path: &Path) -> Result<Planarization, Failure> {
    let v = read_json(path)?;
    if v.get("sigma").is_some() {
        let a: ArrangementJson = from_value(v)?;
        return Ok(a.to_arrangement()?.planarization().clone());
    }
    if v.get("half_edges").is_some() {
        let c: CombinatorialJson = from_value(v)?;
        return c.to_planarization().map_err(|e| Failure::Validation(e.to_string()));
    }
    if v.get("curves").is_some() {
        let g: GeometricJson = from_value(v)?;
        let cs = g.to_curve_set().map_err(|e| Failure::Validation(e.to_string()))?;
        return build_planarization(&cs, Simplicity::Simple).map_err(|e| Failure::Validation(e.to_string()));
    }
    Err(Failure::Parse(format!(
        "{}: expected a drawing (curves or half_edges) or an arrangement (sigma)",
        path.display()
    )))
}

fn load_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    Ok(CnfFormula::parse_dimacs(&read(path)?)?)
}

fn vertex(p: &Planarization, key: &str) -> Result<usize, Failure> {
    resolve_vertex(p, key).map_err(|e| Failure::Validation(e.to_string()))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Validate { drawing } => {
            let p = load_map(&drawing)?;
            let report = validate_simple(&p).map_err(|e| Failure::Validation(e.to_string()))?;
            let text = pretty(&json!({
                "simple": report.is_ok(),
                "violations": report.violations,
                "vertices": p.vertices().len(),
                "edges": p.colors().len(),
                "segments": p.num_edges(),
                "faces": p.faces().len(),
                "crossings": p.crossing_count(),
            }));
            Ok(Output {
                text,
                code: if report.is_ok() { 0 } else { 3 },
            })
        }
        Command::Insert { drawing, u, v, strategy, budget } => {
            let p = load_map(&drawing)?;
            let (u, v) = (vertex(&p, &u)?, vertex(&p, &v)?);
            let d = insertable(&p, u, v, strategy.into(), budget)?;
            let mut out = serde_json::to_value(&d).expect("serializable");
            if let Answer::Yes(w) = &d.answer {
                // Kernelizing is deterministic, so recomputing it recovers
                // the color table the witness refers to.
                let kernel;
                let map = match d.witness_on {
                    SearchedMap::Input => &p,
                    SearchedMap::Kernel => {
                        kernel = kernelize(&p, u, v);
                        &kernel.map
                    }
                };
                let names: Vec<&str> = w
                    .steps
                    .iter()
                    .map(|s| map.colors()[s.color].name.as_str())
                    .collect();
                out["crossed"] = json!(names);
            }
            Ok(Output {
                text: pretty(&out),
                code: if d.is_yes() { 0 } else { 1 },
            })
        }
        Command::Reduce { cnf, out } => {
            let f = load_cnf(&cnf)?;
            let inst = build_instance(&f)?;
            let drawing = serde_json::to_value(inst.drawing_json()).expect("serializable");
            let sidecar = inst.sidecar_json();
            let text = match out {
                None => pretty(&json!({ "drawing": drawing, "sidecar": sidecar })),
                Some(prefix) => {
                    let dp = suffixed(&prefix, "drawing.json");
                    let sp = suffixed(&prefix, "sidecar.json");
                    for (path, v) in [(&dp, &drawing), (&sp, &sidecar)] {
                        std::fs::write(path, pretty(v))
                            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
                    }
                    format!("{}\n{}\n", dp.display(), sp.display())
                }
            };
            Ok(Output { text, code: 0 })
        }
        Command::Roundtrip { cnf, strategy, budget } => {
            let f = load_cnf(&cnf)?;
            let sat = brute_force_sat(&f)?;
            let inst = build_instance(&f)?;
            let p = build_planarization(&inst.drawing, Simplicity::Simple)
                .map_err(|e| Failure::Validation(e.to_string()))?;
            let (u, v) = (vertex(&p, &inst.u)?, vertex(&p, &inst.v)?);
            let d = insertable(&p, u, v, strategy.into(), budget)?;
            let agree = sat == d.is_yes();
            Ok(Output {
                text: format!(
                    "sat={sat} insertable={} agree={agree} nodes={}\n",
                    d.is_yes(),
                    d.stats.nodes_expanded
                ),
                code: if agree { 0 } else { 3 },
            })
        }
        Command::Extend { arrangement, oracle, budget } => {
            let a: ArrangementJson = from_value(read_json(&arrangement)?)?;
            let a = a.to_arrangement()?;
            let names = |ids: &[usize]| -> Vec<&str> { ids.iter().map(|&i| a.circle_id(i)).collect() };
            if oracle {
                let c = oracle_extend(&a, budget)?;
                let text = pretty(&match &c {
                    Some(c) => json!({"answer": "yes", "side": c.side, "crossings": c.crossings, "faces": c.faces}),
                    None => json!({"answer": "no", "side": null, "crossings": [], "faces": []}),
                });
                return Ok(Output {
                    text,
                    code: if c.is_some() { 0 } else { 1 },
                });
            }
            let t = extend_traced(&a, ScanOrder::Ascending)?;
            let cls = &t.classification;
            let classes = json!({"c0": names(&cls.c0), "c1": names(&cls.c1), "c2": names(&cls.c2)});
            let (body, code) = match &t.outcome {
                ExtendOutcome::Yes(c) => (
                    json!({"answer": "yes", "side": c.side, "crossings": c.crossings, "faces": c.faces}),
                    0,
                ),
                ExtendOutcome::No(o) => (
                    json!({"answer": "no", "side": null, "crossings": [], "faces": [], "obstruction": o}),
                    1,
                ),
            };
            let mut body = body;
            body["classification"] = classes;
            body["iterations"] = json!(t.iterations);
            Ok(Output { text: pretty(&body), code })
        }
        Command::Gen { kind, seed } => {
            let mut r = gen::rng(seed);
            let text = match kind {
                GenKind::Drawing => {
                    let cs = gen::random_drawing(&mut r, &gen::DrawingParams::default());
                    pretty(&GeometricJson::from_curve_set(&cs))
                }
                GenKind::Arrangement => {
                    let a = gen::random_arrangement(&mut r, &gen::ArrangementParams::default());
                    pretty(&a.to_json())
                }
                GenKind::Cnf => gen::random_cnf(&mut r, &gen::CnfParams::default()).to_dimacs(),
            };
            Ok(Output { text, code: 0 })
        }
        Command::Render { input, format, dual, u, v } => {
            let p = load_map(&input)?;
            let text = match format {
                Format::Svg => render::svg(&p)
                    .ok_or_else(|| Failure::Validation("input carries no coordinates".into()))?,
                Format::Dot if dual => match (u, v) {
                    (Some(u), Some(v)) => {
                        let (u, v) = (vertex(&p, &u)?, vertex(&p, &v)?);
                        let d = colored_dual(&p, u, v).map_err(|e| Failure::Validation(e.to_string()))?;
                        render::dual_dot(&p, Some(&d))
                    }
                    _ => render::dual_dot(&p, None),
                },
                Format::Dot => render::planarization_dot(&p),
                Format::Json => pretty(&CombinatorialJson::from_planarization(&p)),
            };
            Ok(Output { text, code: 0 })
        }
    }
}

fn suffixed(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("insdraw: {f}");
            ExitCode::from(f.code())
        }
    }
}
