//! The `crossbound` command line.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use crossbound_core::bounds::lemma21_report;
use crossbound_core::critical::{bound_report, AnalysisBudget, BoundReport, Verdict};
use crossbound_core::generate;
use crossbound_core::oracle::{crossing_number_with_witness, OracleBudget, OracleError};
use crossbound_core::router::{build_drawing, PlanarizationDrawing};
use crossbound_core::skewness::{default_budget, planar_subgraph_heuristic, skewness_exact, SkewnessError};
use crossbound_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::drawing::{render_svg, DrawingJson};
use crate::format::{parse_graph, serialize_graph, Format};
use crate::parallel::{criticality_check, with_jobs};
use crate::report::{
    to_json, AnalysisJson, AnalyzeReport, Budgets, CriticalReport, GraphSummary, Lemma21Report, OracleReport,
    RunInfo,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FINDING: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_MAX_K: usize = 4;
const DEFAULT_MAX_EDGES: usize = 20;

#[derive(Parser, Debug)]
#[command(name = "crossbound", version, about = "Skewness, light cycles, edge insertion and crossing numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Read the graph from a file.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Input or output graph format: graph6 or edgelist.
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Also write an SVG picture (draw).
    #[arg(long, global = true)]
    pub svg: Option<String>,
    /// Largest crossing number the oracle tries.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_K)]
    pub max_k: usize,
    /// Largest edge count the oracle accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_EDGES)]
    pub max_edges: usize,
    /// Largest skewness searched exactly.
    #[arg(long, global = true)]
    pub sk_budget: Option<usize>,
    /// Seed for random generators.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads.
    #[arg(long, global = true, env = "CROSSBOUND_JOBS", value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
    /// Print a human-readable summary to stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Skewness, light cycle, crossing number and bounds of a graph.
    Analyze {
        /// A graph name such as K5, K3,3, C6 or petersen.
        graph: Option<String>,
        /// Evaluate the bounds for k-crossing-critical graphs with this k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Draw a graph by routing the skewness edges into a planar embedding.
    Draw {
        graph: Option<String>,
        /// Use the greedy planar subgraph instead of exact skewness.
        #[arg(long)]
        heuristic: bool,
    },
    /// Exact crossing number.
    Oracle { graph: Option<String> },
    /// Decide k-crossing-criticality and check the bounds.
    Critical {
        graph: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Check the degree-sum inequalities exhaustively.
    Lemma21 {
        #[arg(long, default_value_t = 60)]
        d_max: usize,
    },
    /// Write a graph: `complete N`, `complete-bipartite A B`,
    /// `planar-plus N T` or `named NAME`.
    Generate {
        family: String,
        params: Vec<String>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_ERROR,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Budget(e.to_string())
    }
}

impl From<SkewnessError> for CliError {
    fn from(e: SkewnessError) -> Self {
        CliError::Budget(e.to_string())
    }
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let jobs = cli.opts.jobs.map_or_else(
        || std::thread::available_parallelism().map_or(1, |n| n.get()),
        usize::from,
    );
    let mut session = Session {
        opts: cli.opts.clone(),
        jobs,
        stdout,
        stderr,
    };
    match session.dispatch(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(session.stderr, "error: {e}");
            e.code()
        }
    }
}

struct Session<'a> {
    opts: Options,
    jobs: usize,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

impl Session<'_> {
    fn dispatch(&mut self, command: &Command) -> Result<i32, CliError> {
        if self.opts.max_k > DEFAULT_MAX_K || self.opts.max_edges > DEFAULT_MAX_EDGES {
            let _ = writeln!(
                self.stderr,
                "warning: oracle budget above the defaults (k ≤ {DEFAULT_MAX_K}, |E| ≤ {DEFAULT_MAX_EDGES}) may run for a long time"
            );
        }
        match command {
            Command::Analyze { graph, k } => self.analyze(graph.as_deref(), *k),
            Command::Draw { graph, heuristic } => self.draw(graph.as_deref(), *heuristic),
            Command::Oracle { graph } => self.oracle(graph.as_deref()),
            Command::Critical { graph, k } => self.critical(graph.as_deref(), *k),
            Command::Lemma21 { d_max } => self.lemma21(*d_max),
            Command::Generate { family, params } => self.generate(family, params),
        }
    }

    fn oracle_budget(&self) -> OracleBudget {
        OracleBudget {
            max_k: self.opts.max_k,
            max_edges: self.opts.max_edges,
        }
    }

    fn analysis_budget(&self) -> AnalysisBudget {
        AnalysisBudget {
            oracle: self.oracle_budget(),
            skewness: self.opts.sk_budget,
        }
    }

    fn run_info(&self, command: &'static str, g: Option<&Graph>) -> RunInfo {
        RunInfo::new(
            command,
            g,
            self.opts.seed,
            Budgets {
                max_k: self.opts.max_k,
                max_edges: self.opts.max_edges,
                sk_budget: self.opts.sk_budget,
            },
        )
    }

    fn load(&self, source: Option<&str>) -> Result<Graph, CliError> {
        match (source, &self.opts.input) {
            (Some(_), Some(_)) => Err(CliError::Usage("give either a graph name or --input, not both".into())),
            (None, None) => Err(CliError::Usage("no graph given: pass a name such as K5 or --input PATH".into())),
            (Some(name), None) => graph_by_name(name)
                .ok_or_else(|| CliError::Usage(format!("unknown graph name `{name}`"))),
            (None, Some(path)) => {
                let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
                let format = self.opts.format.unwrap_or_else(|| Format::from_path(path));
                parse_graph(&bytes, format).map_err(|e| CliError::Usage(format!("{path}: {e}")))
            }
        }
    }

    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        match &self.opts.out {
            Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {path}: {e}"))),
            None => self
                .stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string())),
        }
    }

    fn note(&mut self, text: &str) {
        if self.opts.pretty {
            let _ = writeln!(self.stderr, "{text}");
        }
    }

    fn certificate(&self, g: &Graph) -> Result<crossbound_core::skewness::SkewnessCertificate, CliError> {
        let budget = self.opts.sk_budget.unwrap_or_else(|| default_budget(g));
        Ok(skewness_exact(g, budget)?)
    }

    fn drawing(&self, g: &Graph, heuristic: bool) -> Result<PlanarizationDrawing, CliError> {
        let cert = if heuristic {
            planar_subgraph_heuristic(g)
        } else {
            self.certificate(g)?
        };
        build_drawing(g, &cert).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn report(&self, g: &Graph, k: Option<usize>) -> Result<BoundReport, CliError> {
        bound_report(g, k, &self.analysis_budget()).map_err(|e| match e {
            crossbound_core::critical::ReportError::Skewness(s) => s.into(),
            crossbound_core::critical::ReportError::Oracle(o) => o.into(),
            other => CliError::Usage(other.to_string()),
        })
    }

    fn bounds_table(&mut self, r: &BoundReport) {
        let cr = r.cr.map_or("unknown".to_string(), |c| c.to_string());
        self.note(&format!("n = {}, δ = {}, sk = {}, cr = {cr}", r.n, r.delta, r.skewness.value));
        if let Some(w) = &r.mu_witness {
            self.note(&format!("light cycle {:?}, μ = {}", w.cycle, w.mu));
        }
        self.note(&format!("{:<8}{:>24}  holds", "bound", "value"));
        self.note(&format!("{:<8}{:>24}  {}", "thm32", r.bound_thm32.to_string(), verdict(r, 0)));
        if let Some(b) = r.bound_thm41 {
            self.note(&format!("{:<8}{:>24}  {}", "thm41", b.to_string(), verdict(r, 1)));
        }
        if let Some(b) = &r.bound_thm42 {
            self.note(&format!("{:<8}{:>24.6}  {}", "thm42", b.approx(), verdict(r, 2)));
        }
    }

    fn analyze(&mut self, source: Option<&str>, k: Option<usize>) -> Result<i32, CliError> {
        let g = self.load(source)?;
        let report = self.report(&g, k)?;
        let drawing = self.drawing(&g, false)?;
        self.bounds_table(&report);
        let out = AnalyzeReport {
            run: self.run_info("analyze", Some(&g)),
            analysis: AnalysisJson::new(&g, &report, Some(&drawing)),
        };
        self.emit(&to_json(&out))?;
        Ok(finding_code(&report))
    }

    fn draw(&mut self, source: Option<&str>, heuristic: bool) -> Result<i32, CliError> {
        let g = self.load(source)?;
        let d = self.drawing(&g, heuristic)?;
        self.emit(&DrawingJson::from_drawing(&d).to_json())?;
        if let Some(path) = self.opts.svg.clone() {
            std::fs::write(&path, render_svg(&d)).map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
        }
        self.note(&format!(
            "{} crossings, bound {} {}",
            d.crossing_count,
            d.bound_thm32,
            if d.bound_met { "met" } else { "exceeded" }
        ));
        Ok(if d.bound_met { EXIT_OK } else { EXIT_FINDING })
    }

    fn oracle(&mut self, source: Option<&str>) -> Result<i32, CliError> {
        let g = self.load(source)?;
        let mut out = OracleReport {
            run: self.run_info("oracle", Some(&g)),
            graph: GraphSummary::of(&g),
            cr: None,
            cr_exceeds: None,
            witness: Vec::new(),
        };
        let code = match crossing_number_with_witness(&g, &self.oracle_budget()) {
            Ok((cr, w)) => {
                out.cr = Some(cr);
                out.witness = w.pairs.iter().map(|(a, b)| [[a.lo(), a.hi()], [b.lo(), b.hi()]]).collect();
                self.note(&format!("cr = {cr}"));
                EXIT_OK
            }
            Err(OracleError::BudgetExceeded { max_k }) => {
                out.cr_exceeds = Some(max_k);
                let _ = writeln!(self.stderr, "error: crossing number exceeds the budget: cr(G) > {max_k}");
                EXIT_BUDGET
            }
            Err(e) => return Err(e.into()),
        };
        self.emit(&to_json(&out))?;
        Ok(code)
    }

    fn critical(&mut self, source: Option<&str>, k: usize) -> Result<i32, CliError> {
        let g = self.load(source)?;
        let budget = self.oracle_budget();
        let check = with_jobs(self.jobs, || criticality_check(&g, k, &budget))?;
        let critical = check.is_critical();
        let (analysis, code) = if critical {
            let r = self.report(&g, Some(k))?;
            self.bounds_table(&r);
            (Some(AnalysisJson::new(&g, &r, None)), finding_code(&r))
        } else {
            (None, EXIT_OK)
        };
        self.note(&format!("{k}-crossing-critical: {critical}"));
        let out = CriticalReport {
            run: self.run_info("critical", Some(&g)),
            graph: GraphSummary::of(&g),
            k,
            critical,
            reaches_k: check.reaches_k,
            failing_edge: check
                .deletions
                .iter()
                .find(|(_, ok)| !ok)
                .map(|(e, _)| [e.lo(), e.hi()]),
            analysis,
        };
        self.emit(&to_json(&out))?;
        Ok(code)
    }

    fn lemma21(&mut self, d_max: usize) -> Result<i32, CliError> {
        if d_max < 3 {
            return Err(CliError::Usage("--d-max must be at least 3".into()));
        }
        let parts = lemma21_report(d_max);
        let verified = parts.iter().all(|p| p.counterexamples.is_empty());
        for p in &parts {
            self.note(&format!(
                "{} terms: {} tuples satisfy the hypothesis, {} counterexamples",
                p.part.terms,
                p.hypothesis_tuples,
                p.counterexamples.len()
            ));
        }
        let out = Lemma21Report {
            run: self.run_info("lemma21", None),
            d_max,
            verified,
            parts: parts.iter().map(Into::into).collect(),
        };
        self.emit(&to_json(&out))?;
        Ok(if verified { EXIT_OK } else { EXIT_FINDING })
    }

    fn generate(&mut self, family: &str, params: &[String]) -> Result<i32, CliError> {
        let nums = params
            .iter()
            .map(|p| p.parse::<usize>().map_err(|_| CliError::Usage(format!("`{p}` is not a count"))))
            .collect::<Result<Vec<_>, _>>();
        let g = match (family, params) {
            ("named", [name]) => generate::named(name).ok_or_else(|| {
                CliError::Usage(format!("unknown named graph `{name}`; known: {}", generate::NAMED.join(", ")))
            })?,
            ("complete", [_]) => {
                let n = nums?[0];
                check_size(n, 1, 2000)?;
                generate::complete(n)
            }
            ("complete-bipartite", [_, _]) => {
                let v = nums?;
                check_size(v[0], 1, 2000)?;
                check_size(v[1], 1, 2000)?;
                generate::complete_bipartite(v[0], v[1])
            }
            ("planar-plus", [_, _]) => {
                let v = nums?;
                let (n, t) = (v[0], v[1]);
                check_size(n, 3, 100_000)?;
                let room = n * (n - 1) / 2 - (3 * n - 6);
                if t > room {
                    return Err(CliError::Usage(format!("a maximal planar graph on {n} vertices has only {room} non-edges")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed.unwrap_or(0));
                generate::planar_plus(n, t, &mut rng).0
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "bad family `{family}` with {} parameters; expected complete N, complete-bipartite A B, planar-plus N T or named NAME",
                    params.len()
                )))
            }
        };
        let format = self.opts.format.unwrap_or(Format::Graph6);
        let mut text = serialize_graph(&g, format);
        if format == Format::Graph6 {
            text.push('\n');
        }
        self.emit(&text)?;
        Ok(EXIT_OK)
    }
}

fn check_size(n: usize, lo: usize, hi: usize) -> Result<(), CliError> {
    if (lo..=hi).contains(&n) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("size {n} outside {lo}..={hi}")))
    }
}

fn verdict(r: &BoundReport, i: usize) -> &'static str {
    r.satisfied.get(i).map_or("unknown", |(_, v)| v.name())
}

fn finding_code(r: &BoundReport) -> i32 {
    if r.satisfied.iter().any(|&(_, v)| v == Verdict::Violated) {
        EXIT_FINDING
    } else {
        EXIT_OK
    }
}

/// Graphs by name: `K<n>`, `K<a>,<b>`, `C<n>`, `P<n>` and the named
/// families.
pub fn graph_by_name(name: &str) -> Option<Graph> {
    if let Some(g) = generate::named(&name.to_ascii_lowercase()) {
        return Some(g);
    }
    let (head, rest) = name.split_at_checked(1)?;
    let size = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=2000).contains(&n));
    match head {
        "K" | "k" => match rest.split_once([',', 'x']) {
            Some((a, b)) => Some(generate::complete_bipartite(size(a)?, size(b)?)),
            None => Some(generate::complete(size(rest)?)),
        },
        "C" | "c" => Some(generate::cycle(size(rest).filter(|&n| n >= 3)?)),
        "P" | "p" => Some(generate::path(size(rest)?)),
        _ => None,
    }
}
