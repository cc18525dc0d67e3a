//! The `rainbow` command line. Every run writes its artifacts and one
//! `manifest.json` into `--out-dir`, and maps its outcome to a fixed exit
//! code (see [`ExitStatus`]).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::constructions::{construct, ConstructionSpec, Family};
use crate::extremal::{bound_report, theta_scan, Extremal, ExtremalError, ExtremalRecord};
use crate::graph::{graph6, Graph, GraphJson};
use crate::rainbow::{verify_rainbow_k_connected_par, Colour, ColouringJson, EdgeColouring, Verdict};
use crate::solver::{rc_exact, SolveError, SolverConfig};

pub const BUDGET_ENV: &str = "RAINBOW_BUDGET";
pub const MANIFEST: &str = "manifest.json";

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    /// 0: the run succeeded and every checked statement holds.
    Ok = 0,
    /// 1: a colouring failed verification or a report row is violated.
    CounterexampleFound = 1,
    /// 2: bad arguments, unreadable input or a violated parameter hypothesis.
    UsageError = 2,
    /// 3: the requested extremal value is undefined.
    Undefined = 3,
    /// 4: the solver node budget ran out; the answer is unknown.
    BudgetExceeded = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn name(self) -> &'static str {
        match self {
            ExitStatus::Ok => "ok",
            ExitStatus::CounterexampleFound => "counterexample-found",
            ExitStatus::UsageError => "usage-error",
            ExitStatus::Undefined => "undefined",
            ExitStatus::BudgetExceeded => "budget-exceeded",
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Rainbow k-connectivity: verification, exact rc_k, constructions and extremal tables"
)]
pub struct Cli {
    /// Directory for output files and the run manifest.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Worker threads. Outputs do not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    T,
    S,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction: graph6, colouring CSV (if coloured) and a JSON description.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check that a colouring is rainbow k-connected.
    Verify {
        /// Graph file (graph6, or JSON when the name ends in .json).
        #[arg(long)]
        graph: PathBuf,
        /// Colouring file (`u,v,colour` CSV, or JSON when the name ends in .json).
        #[arg(long)]
        colours: PathBuf,
        #[arg(long)]
        k: usize,
        /// Colour count; defaults to the largest colour present.
        #[arg(long)]
        r: Option<Colour>,
    },
    /// Exact rc_k of a graph.
    Rc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Exact t_k(n, r) or s_k(n, r) by exhaustive enumeration.
    Extremal {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Colour,
        /// graph6 file of candidate graphs replacing the built-in enumeration.
        #[arg(long)]
        graphs: Option<PathBuf>,
    },
    /// rc_2 of every theta graph on n vertices.
    ScanTheta {
        #[arg(long)]
        n: usize,
    },
    /// Exact values and construction edge counts against the known bounds.
    Report {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        /// Largest n for the construction rows.
        #[arg(long, default_value_t = 60)]
        construction_n_max: usize,
    },
}

#[derive(Debug, Serialize)]
struct RunManifest {
    command: &'static str,
    parameters: BTreeMap<&'static str, Value>,
    input_digests: BTreeMap<String, String>,
    outputs: Vec<String>,
    exit_status: &'static str,
}

struct Run {
    out_dir: PathBuf,
    manifest: RunManifest,
}

/// A failure that ends the run with the given status.
struct Stop(ExitStatus, String);

impl From<SolveError> for Stop {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => Stop(ExitStatus::BudgetExceeded, e.to_string()),
            _ => Stop(ExitStatus::UsageError, e.to_string()),
        }
    }
}

impl From<ExtremalError> for Stop {
    fn from(e: ExtremalError) -> Self {
        match e {
            ExtremalError::Solve(s) => s.into(),
            _ => Stop(ExitStatus::UsageError, e.to_string()),
        }
    }
}

fn usage(msg: impl ToString) -> Stop {
    Stop(ExitStatus::UsageError, msg.to_string())
}

impl Run {
    fn read(&mut self, path: &Path) -> Result<String, Stop> {
        let bytes = fs::read(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        self.manifest
            .input_digests
            .insert(path.display().to_string(), hex::encode(Sha256::digest(&bytes)));
        String::from_utf8(bytes).map_err(|_| usage(format!("{} is not UTF-8 text", path.display())))
    }

    fn write(&mut self, name: &str, contents: &str) -> Result<(), Stop> {
        let path = self.out_dir.join(name);
        fs::write(&path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        self.manifest.outputs.push(name.to_string());
        Ok(())
    }

    fn write_json(&mut self, name: &str, value: &impl Serialize) -> Result<(), Stop> {
        let mut text = serde_json::to_string_pretty(value).expect("serialisable");
        text.push('\n');
        self.write(name, &text)
    }

    fn param(&mut self, key: &'static str, value: impl Serialize) {
        self.manifest
            .parameters
            .insert(key, serde_json::to_value(value).expect("serialisable"));
    }

    fn read_graph(&mut self, path: &Path) -> Result<Graph, Stop> {
        let text = self.read(path)?;
        if is_json(path) {
            let json: GraphJson = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            return Graph::try_from(json).map_err(|e| usage(format!("{}: {e}", path.display())));
        }
        let graphs = graph6::decode_lines(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        match <[Graph; 1]>::try_from(graphs) {
            Ok([g]) => Ok(g),
            Err(v) => Err(usage(format!(
                "{}: expected one graph, found {}",
                path.display(),
                v.len()
            ))),
        }
    }
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

fn solver_config(threads: usize) -> Result<SolverConfig, Stop> {
    let node_budget = match std::env::var(BUDGET_ENV) {
        Ok(s) => Some(
            s.trim()
                .parse::<u64>()
                .map_err(|_| usage(format!("{BUDGET_ENV} must be a node count, got {s:?}")))?,
        ),
        Err(_) => None,
    };
    Ok(SolverConfig {
        node_budget,
        parallel: threads > 1,
    })
}

fn stem(spec: &ConstructionSpec) -> String {
    let mut s = format!("{}_n{}", spec.family.name().to_lowercase(), spec.n);
    if let Some(r) = spec.r {
        s += &format!("_r{r}");
    }
    if let Some(k) = spec.k {
        s += &format!("_k{k}");
    }
    s
}

fn execute(run: &mut Run, command: Command, config: &SolverConfig) -> Result<ExitStatus, Stop> {
    match command {
        Command::Generate { family, n, r, k } => {
            let spec = ConstructionSpec { family, n, r, k };
            run.param("family", family.name());
            run.param("n", n);
            run.param("r", r);
            run.param("k", k);
            let bundle = construct(&spec).map_err(usage)?;
            let stem = stem(&spec);
            run.write(&format!("{stem}.g6"), &(graph6::encode(&bundle.graph) + "\n"))?;
            let colours = match &bundle.colouring {
                Some(c) => {
                    let name = format!("{stem}.csv");
                    run.write(&name, &c.to_csv(&bundle.graph))?;
                    Some(name)
                }
                None => None,
            };
            let description = json!({
                "family": family.name(),
                "params": { "n": n, "r": r, "k": k },
                "predicted_edges": bundle.predicted_edges,
                "predicted_rc_relation": bundle.predicted_rc_relation,
                "derived": bundle.derived,
                "graph6": graph6::encode(&bundle.graph),
                "colours": colours,
            });
            run.write_json(&format!("{stem}.json"), &description)?;
            println!(
                "{stem}: {} vertices, {} edges, {}",
                n,
                bundle.graph.edge_count(),
                bundle.predicted_rc_relation
            );
            Ok(ExitStatus::Ok)
        }
        Command::Verify { graph, colours, k, r } => {
            run.param("graph", graph.display().to_string());
            run.param("colours", colours.display().to_string());
            run.param("k", k);
            run.param("r", r);
            let g = run.read_graph(&graph)?;
            let text = run.read(&colours)?;
            let colouring = if is_json(&colours) {
                let json: ColouringJson =
                    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", colours.display())))?;
                EdgeColouring::from_json(&g, &json)
            } else {
                EdgeColouring::from_csv(&g, &text, r)
            }
            .map_err(|e| usage(format!("{}: {e}", colours.display())))?;
            match verify_rainbow_k_connected_par(&g, &colouring, k).map_err(usage)? {
                Verdict::Connected(cert) => {
                    run.write_json("verify.json", &json!({ "result": "ok", "k": k, "certificate": cert }))?;
                    println!("ok: rainbow {k}-connected");
                    Ok(ExitStatus::Ok)
                }
                Verdict::Fails { u, v } => {
                    run.write_json(
                        "verify.json",
                        &json!({ "result": "counterexample-found", "k": k, "pair": [u, v] }),
                    )?;
                    println!("counterexample-found: no {k} disjoint rainbow paths between {u} and {v}");
                    Ok(ExitStatus::CounterexampleFound)
                }
            }
        }
        Command::Rc { graph, k } => {
            run.param("graph", graph.display().to_string());
            run.param("k", k);
            let g = run.read_graph(&graph)?;
            let res = rc_exact(&g, k, config)?;
            run.write("rc_witness.csv", &res.witness.to_csv(&g))?;
            run.write_json(
                "rc.json",
                &json!({
                    "rc": res.rc_value,
                    "k": k,
                    "witness": "rc_witness.csv",
                    "nodes_explored": res.nodes_explored,
                    "lower_bound_used": res.lower_bound_used,
                    "upper_bound_used": res.upper_bound_used,
                    "exhausted": res.exhausted,
                }),
            )?;
            println!("rc{k} = {}", res.rc_value);
            Ok(ExitStatus::Ok)
        }
        Command::Extremal { kind, k, n, r, graphs } => {
            run.param("kind", if kind == KindArg::T { "t" } else { "s" });
            run.param("k", k);
            run.param("n", n);
            run.param("r", r);
            run.param("graphs", graphs.as_ref().map(|p| p.display().to_string()));
            let mut ex = Extremal::new(config.clone());
            if let Some(path) = graphs {
                let text = run.read(&path)?;
                let list = graph6::decode_lines(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                ex.use_external_graphs(n, k, list)?;
            }
            let rec = match kind {
                KindArg::T => ex.extremal_t(n, r, k)?,
                KindArg::S => ex.extremal_s(n, r, k)?,
            };
            run.write(
                "extremal.csv",
                &format!("{}\n{}\n", ExtremalRecord::CSV_HEADER, rec.to_csv_line()),
            )?;
            println!("{}", rec.to_csv_line());
            Ok(if rec.value.is_some() {
                ExitStatus::Ok
            } else {
                ExitStatus::Undefined
            })
        }
        Command::ScanTheta { n } => {
            run.param("n", n);
            let scan = theta_scan(n, config)?;
            run.write_json(&format!("theta_n{n}.json"), &scan)?;
            println!("n = {n}: {} theta graphs, min rc2 = {}", scan.rows.len(), scan.min_rc2);
            Ok(ExitStatus::Ok)
        }
        Command::Report {
            k,
            n_max,
            n_min,
            construction_n_max,
        } => {
            run.param("k", k);
            run.param("n_min", n_min);
            run.param("n_max", n_max);
            run.param("construction_n_max", construction_n_max);
            let mut ex = Extremal::new(config.clone());
            let report = bound_report(&mut ex, n_min..=n_max, 1..=n_max as Colour + 1, k, construction_n_max)?;
            run.write_json("report.json", &report)?;
            println!("{} rows, {} violations", report.rows.len(), report.violations);
            Ok(if report.violations == 0 {
                ExitStatus::Ok
            } else {
                ExitStatus::CounterexampleFound
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Generate { .. } => "generate",
        Command::Verify { .. } => "verify",
        Command::Rc { .. } => "rc",
        Command::Extremal { .. } => "extremal",
        Command::ScanTheta { .. } => "scan-theta",
        Command::Report { .. } => "report",
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Argument errors that prevent locating `--out-dir` exit without a
/// manifest; every other run writes one.
pub fn run_cli<I, T>(args: I) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitStatus::UsageError
            } else {
                ExitStatus::Ok
            };
        }
    };
    let mut run = Run {
        out_dir: cli.out_dir.clone(),
        manifest: RunManifest {
            command: command_name(&cli.command),
            parameters: BTreeMap::new(),
            input_digests: BTreeMap::new(),
            outputs: Vec::new(),
            exit_status: "",
        },
    };
    let result = (|| {
        if cli.threads == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        fs::create_dir_all(&run.out_dir).map_err(|e| usage(format!("cannot create {}: {e}", run.out_dir.display())))?;
        let config = solver_config(cli.threads)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build()
            .map_err(|e| usage(format!("cannot start {} threads: {e}", cli.threads)))?;
        pool.install(|| execute(&mut run, cli.command, &config))
    })();
    let status = match result {
        Ok(status) => status,
        Err(Stop(status, msg)) => {
            eprintln!("error: {msg}");
            status
        }
    };
    run.manifest.exit_status = status.name();
    let mut text = serde_json::to_string_pretty(&run.manifest).expect("serialisable");
    text.push('\n');
    if let Err(e) = fs::write(run.out_dir.join(MANIFEST), text) {
        eprintln!("error: cannot write {MANIFEST}: {e}");
    }
    status
}
