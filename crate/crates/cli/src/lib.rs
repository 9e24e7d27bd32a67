//! `stabdim` command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 constraint
//! violation (disconnected input without `--components`, size caps),
//! 4 internal consistency failure (two independent computations disagree).

pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use stabdim::config::{self, Configuration};
use stabdim::graph::{generate, Family, Graph};
use stabdim::oracle::{self, OracleOptions, DEFAULT_ORACLE_CAP};
use stabdim::stabilizer::{self, EnumerateOptions, LowWeightElement, Mode, DEFAULT_ENUMERATE_CAP};
use stabdim::{theorem, Error, Strategy};

pub use report::{format_report, AnalysisReport, ConfigurationEntry, OutputMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONSTRAINT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "stabdim", version, about = "Stabilizer dimension of graph states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Detect configurations and compute the stabilizer dimension and g2.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Sum over connected components instead of rejecting disconnected input.
        #[arg(long)]
        components: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputMode,
    },
    /// Like `analyze`, cross-checked against the exact statevector oracle.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Verify every graph in a directory (`*.g6`: one graph6 string per line; otherwise edge lists).
        #[arg(long, conflicts_with_all = ["file", "graph6", "family"])]
        corpus: Option<PathBuf>,
        #[arg(long)]
        components: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_ENUMERATE_CAP)]
        enumerate_max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputMode,
    },
    /// List the stabilizer elements of support at most two.
    Enumerate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_enum, default_value_t)]
        mode: EnumerateMode,
        #[arg(long, default_value_t = DEFAULT_ENUMERATE_CAP)]
        enumerate_max_n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: OutputMode,
    },
    /// Print a generated graph.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        encoding: Encoding,
    },
    /// Check the built-in reference examples.
    Selftest {
        #[arg(long, value_enum, default_value_t)]
        format: OutputMode,
    },
}

#[derive(Debug, Args)]
struct SourceArgs {
    /// Edge-list file (`p edge n m` / `e u v`, 1-based).
    #[arg(long, group = "src")]
    file: Option<PathBuf>,
    #[arg(long, group = "src", allow_hyphen_values = true)]
    graph6: Option<String>,
    #[arg(long, group = "src", requires = "n")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum EnumerateMode {
    /// Run both and require identical results.
    #[default]
    Both,
    Brute,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Encoding {
    #[default]
    Graph6,
    EdgeList,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::InvalidParameter(_) | Error::VertexOutOfRange { .. } | Error::LengthMismatch { .. } => {
                EXIT_USAGE
            }
            Error::Disconnected
            | Error::TooSmall { .. }
            | Error::CapExceeded { .. }
            | Error::UnsupportedSize { .. } => EXIT_CONSTRAINT,
            Error::Consistency(_) => EXIT_INTERNAL,
        };
        CliError::new(code, e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "stabdim: {}", e.message);
            e.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Analyze { source, components, oracle_max_n, format } => {
            let (g, fmt, name) = load(&source)?;
            let opts = AnalyzeOptions { components, oracle: None, oracle_cap: oracle_max_n, enumerate_cap: 0 };
            let r = analyze_graph(&g, &opts, fmt, name)?;
            emit(out, &format_report(&r, format))?;
            Ok(status(&r))
        }
        Command::Verify { source, corpus: Some(dir), components, oracle_max_n, enumerate_max_n, format } => {
            let _ = source;
            verify_corpus(&dir, components, oracle_max_n, enumerate_max_n, format, out)
        }
        Command::Verify { source, corpus: None, components, oracle_max_n, enumerate_max_n, format } => {
            let (g, fmt, name) = load(&source)?;
            let opts = AnalyzeOptions {
                components,
                oracle: Some(oracle_max_n),
                oracle_cap: oracle_max_n,
                enumerate_cap: enumerate_max_n,
            };
            let r = analyze_graph(&g, &opts, fmt, name)?;
            emit(out, &format_report(&r, format))?;
            Ok(status(&r))
        }
        Command::Enumerate { source, mode, enumerate_max_n, format } => {
            let (g, _, _) = load(&source)?;
            enumerate(&g, mode, enumerate_max_n, format, out)
        }
        Command::Gen { family, n, p, seed, encoding } => {
            let g = generate(family, n, p, seed)?;
            let text = match encoding {
                Encoding::Graph6 => g.to_graph6() + "\n",
                Encoding::EdgeList => g.to_edge_list(),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Selftest { format } => selftest(format, out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::new(EXIT_USAGE, format!("write failed: {e}")))
}

fn load(src: &SourceArgs) -> CliResult<(Graph, String, String)> {
    if let Some(path) = &src.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
        let g = Graph::parse_edge_list(&text)
            .map_err(|e| CliError::from(e).with_context(&path.display().to_string()))?;
        return Ok((g, "edge-list".into(), path.display().to_string()));
    }
    if let Some(s) = &src.graph6 {
        return Ok((Graph::parse_graph6(s)?, "graph6".into(), s.clone()));
    }
    if let Some(family) = src.family {
        let n = src.n.expect("clap enforces --n");
        let g = generate(family, n, src.p, src.seed)?;
        let name = match family {
            Family::Gnp => format!("{family} n={n} p={} seed={}", src.p, src.seed),
            Family::Tree => format!("{family} n={n} seed={}", src.seed),
            _ => format!("{family} n={n}"),
        };
        return Ok((g, "family".into(), name));
    }
    Err(CliError::new(EXIT_USAGE, "one of --file, --graph6 or --family is required"))
}

impl CliError {
    fn with_context(mut self, ctx: &str) -> Self {
        self.message = format!("{ctx}: {}", self.message);
        self
    }
}

struct AnalyzeOptions {
    components: bool,
    /// Oracle cap when the oracle is mandatory (`verify`).
    oracle: Option<usize>,
    /// Cap for the optional cross-check of the component extension.
    oracle_cap: usize,
    /// Brute-force `g2` up to this size (`verify` only; 0 disables).
    enumerate_cap: usize,
}

fn status(r: &AnalysisReport) -> i32 {
    if r.oracle_agrees == Some(false) {
        EXIT_INTERNAL
    } else {
        EXIT_OK
    }
}

fn analyze_graph(g: &Graph, opts: &AnalyzeOptions, input_format: String, source: String) -> CliResult<AnalysisReport> {
    let n = g.order();
    let connected = g.is_connected();
    let strategy = Strategy::default();
    let core_applies = connected && n >= 2;

    if !core_applies && !opts.components {
        let why = if n < 2 { "single-vertex graph" } else { "disconnected graph" };
        return Err(CliError::new(EXIT_CONSTRAINT, format!("{why}: rerun with --components")));
    }
    if let Some(cap) = opts.oracle {
        if n > cap.min(oracle::MAX_ORACLE) {
            return Err(Error::CapExceeded { what: "exact oracle", n, cap: cap.min(oracle::MAX_ORACLE) }.into());
        }
    }

    let mut r = AnalysisReport {
        n,
        m: g.edge_count(),
        connected,
        dimension: 0,
        g2: 0,
        theorem_holds: false,
        configurations: Vec::new(),
        oracle_nullity: None,
        oracle_agrees: None,
        extension: None,
        input_format,
        source,
    };

    if core_applies {
        let configs = config::detect_configurations_with(g, strategy)?;
        r.dimension = config::slot_rank(configs.iter().map(Configuration::lie_generator), n);
        r.configurations = configs.iter().map(ConfigurationEntry::from).collect();
        let mode = if n <= opts.enumerate_cap { Mode::Brute } else { Mode::Fast };
        let enumerate = EnumerateOptions { cap: opts.enumerate_cap.max(DEFAULT_ENUMERATE_CAP), strategy };
        let elems = stabilizer::low_weight_elements_with(g, mode, &enumerate)?;
        r.g2 = stabilizer::g2_rank(elems.iter().map(|e| &e.exponents));
    } else {
        r.extension = Some("components");
        r.dimension = config::stabilizer_dimension_by_components(g, strategy)?;
        r.g2 = stabilizer::g2_rank_by_components(g, strategy)?;
        for comp in g.components().into_iter().filter(|c| c.len() > 1) {
            let sub = g.induced(&comp)?;
            for c in config::detect_configurations_with(&sub, strategy)? {
                let mapped = Configuration::new(c.kind, comp[c.a], comp[c.b]);
                r.configurations.push(ConfigurationEntry::from(&mapped));
            }
        }
        r.configurations.sort_by_key(|c| (c.kind, c.a, c.b));
    }
    r.theorem_holds = r.dimension == r.g2;
    if core_applies && n >= 3 && !r.theorem_holds {
        return Err(CliError::new(
            EXIT_INTERNAL,
            format!("dimension {} != g2 {} on a connected graph with n = {n}", r.dimension, r.g2),
        ));
    }

    let run_oracle = match opts.oracle {
        Some(_) => true,
        None => r.extension.is_some() && n <= opts.oracle_cap.min(oracle::MAX_ORACLE),
    };
    if run_oracle {
        let oracle_opts = OracleOptions { cap: opts.oracle.unwrap_or(opts.oracle_cap), ..Default::default() };
        let k = oracle::local_algebra_nullity_with(g, &oracle_opts)?;
        r.oracle_nullity = Some(k);
        r.oracle_agrees = Some(k == r.dimension);
    }
    Ok(r)
}

fn corpus_graphs(dir: &Path) -> CliResult<Vec<(String, Result<Graph, Error>)>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::new(EXIT_USAGE, format!("{}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut graphs = Vec::new();
    for path in paths {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if path.extension().is_some_and(|e| e == "g6") {
            for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                graphs.push((format!("{name}:{}", i + 1), Graph::parse_graph6(line.trim())));
            }
        } else {
            graphs.push((name, Graph::parse_edge_list(&text)));
        }
    }
    Ok(graphs)
}

#[derive(Serialize)]
struct CorpusLine<'a> {
    source: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a AnalysisReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
    exit: i32,
}

fn verify_corpus(
    dir: &Path,
    components: bool,
    oracle_cap: usize,
    enumerate_cap: usize,
    format: OutputMode,
    out: &mut dyn Write,
) -> CliResult<i32> {
    let graphs = corpus_graphs(dir)?;
    let opts = AnalyzeOptions { components, oracle: Some(oracle_cap), oracle_cap, enumerate_cap };
    let results: Vec<(String, CliResult<AnalysisReport>)> = Strategy::default().map(graphs, |(name, parsed)| {
        let r = parsed
            .map_err(CliError::from)
            .and_then(|g| analyze_graph(&g, &opts, "corpus".into(), name.clone()));
        (name, r)
    });

    let mut worst = EXIT_OK;
    for (name, r) in &results {
        let (code, report, error) = match r {
            Ok(rep) => (status(rep), Some(rep), None),
            Err(e) => (e.code, None, Some(e.message.as_str())),
        };
        worst = worst.max(code);
        match format {
            OutputMode::Json => {
                let line = CorpusLine { source: name, report, error, exit: code };
                emit(out, &(serde_json::to_string(&line).unwrap() + "\n"))?;
            }
            OutputMode::Text => {
                emit(out, &format!("== {name} (exit {code})\n"))?;
                match (report, error) {
                    (Some(rep), _) => emit(out, &format_report(rep, OutputMode::Text))?,
                    (_, Some(msg)) => emit(out, &format!("error: {msg}\n"))?,
                    _ => {}
                }
            }
        }
    }
    Ok(worst)
}

#[derive(Serialize)]
struct ElementEntry {
    exponents: String,
    pauli: String,
    support: Vec<usize>,
}

#[derive(Serialize)]
struct EnumerationReport {
    n: usize,
    mode: &'static str,
    elements: Vec<ElementEntry>,
    g2: usize,
}

fn enumerate(g: &Graph, mode: EnumerateMode, cap: usize, format: OutputMode, out: &mut dyn Write) -> CliResult<i32> {
    let opts = EnumerateOptions { cap, strategy: Strategy::default() };
    let (elems, label): (Vec<LowWeightElement>, &'static str) = match mode {
        EnumerateMode::Brute => (stabilizer::low_weight_elements_with(g, Mode::Brute, &opts)?, "brute"),
        EnumerateMode::Fast => (stabilizer::low_weight_elements_with(g, Mode::Fast, &opts)?, "fast"),
        EnumerateMode::Both => {
            let brute = stabilizer::low_weight_elements_with(g, Mode::Brute, &opts)?;
            let fast = stabilizer::low_weight_elements_with(g, Mode::Fast, &opts)?;
            if brute != fast {
                return Err(CliError::new(
                    EXIT_INTERNAL,
                    format!("brute force found {} elements, configurations {}", brute.len(), fast.len()),
                ));
            }
            (brute, "both")
        }
    };
    let report = EnumerationReport {
        n: g.order(),
        mode: label,
        g2: stabilizer::g2_rank(elems.iter().map(|e| &e.exponents)),
        elements: elems
            .iter()
            .map(|e| ElementEntry {
                exponents: e.exponents.to_string(),
                pauli: e.pauli.to_string(),
                support: e.pauli.support().iter_ones().collect(),
            })
            .collect(),
    };
    let text = match format {
        OutputMode::Json => serde_json::to_string(&report).unwrap() + "\n",
        OutputMode::Text => {
            let mut s = format!("n: {}\nmode: {}\nelements: {}\n", report.n, report.mode, report.elements.len());
            for e in &report.elements {
                s += &format!("  {}  {}\n", e.exponents, e.pauli);
            }
            s + &format!("g2: {}\n", report.g2)
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SelftestLine {
    name: String,
    pass: bool,
    detail: String,
}

fn selftest(format: OutputMode, out: &mut dyn Write) -> CliResult<i32> {
    let mut lines = Vec::new();
    let mut check = |name: &str, f: &dyn Fn() -> Result<(bool, String), Error>| {
        let (pass, detail) = f().unwrap_or_else(|e| (false, e.to_string()));
        lines.push(SelftestLine { name: name.into(), pass, detail });
    };
    let fam = |f: Family, n: usize| generate(f, n, 0.0, 0);

    check("two-qubit graph has dimension 3", &|| {
        let g = Graph::parse_graph6("A_")?;
        let d = config::stabilizer_dimension(&g)?;
        let k = oracle::local_algebra_nullity(&g)?;
        Ok((d == 3 && k == 3, format!("dimension {d}, oracle {k}")))
    });
    check("two-qubit generators X0-Z1, X1-Z0, Y0-Y1", &|| {
        let g = Graph::parse_graph6("A_")?;
        let got: Vec<String> =
            config::detect_configurations(&g)?.iter().map(|c| c.lie_generator().to_string()).collect();
        Ok((got == ["X0-Z1", "X1-Z0", "Y0-Y1"], got.join(", ")))
    });
    check("star on 7 vertices has dimension 6", &|| {
        let g = fam(Family::Star, 7)?;
        let d = config::stabilizer_dimension(&g)?;
        let k = oracle::local_algebra_nullity(&g)?;
        Ok((d == 6 && k == 6, format!("dimension {d}, oracle {k}")))
    });
    check("theta vanishes on the two-qubit graph", &|| {
        let basis = oracle::nullspace_basis(&Graph::parse_graph6("A_")?)?;
        Ok((basis.iter().all(|b| b.theta_is_zero()), format!("{} basis vectors", basis.len())))
    });
    check("dimension equals g2 for star, path, cycle, complete (n = 3..8)", &|| {
        for n in 3..=8 {
            for f in [Family::Star, Family::Path, Family::Cycle, Family::Complete] {
                let r = theorem::check_equivalence(&fam(f, n)?, true)?;
                if !r.holds || r.oracle_agrees != Some(true) {
                    return Ok((false, format!("{f} n={n}: {r:?}")));
                }
            }
        }
        Ok((true, "24 graphs".into()))
    });
    check("two-vertex boundary (dimension, g2) = (3, 2)", &|| {
        let r = theorem::check_equivalence(&Graph::parse_graph6("A_")?, false)?;
        Ok(((r.dimension, r.g2) == (3, 2), format!("({}, {})", r.dimension, r.g2)))
    });

    let all = lines.iter().all(|l| l.pass);
    let mut text = String::new();
    for l in &lines {
        match format {
            OutputMode::Json => text += &(serde_json::to_string(l).unwrap() + "\n"),
            OutputMode::Text => {
                text += &format!("{} {} ({})\n", if l.pass { "PASS" } else { "FAIL" }, l.name, l.detail)
            }
        }
    }
    emit(out, &text)?;
    Ok(if all { EXIT_OK } else { EXIT_INTERNAL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("stabdim").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json(args: &[&str]) -> serde_json::Value {
        let (code, out, err) = run_args(args);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn star_seven_has_dimension_six() {
        let v = json(&["analyze", "--family", "star", "--n", "7", "--format", "json"]);
        assert_eq!(v["dimension"], 6);
        assert_eq!(v["g2"], 6);
    }

    #[test]
    fn two_qubit_machine_record() {
        let (code, out, _) = run_args(&["analyze", "--graph6", "A_", "--format", "json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"dimension\":3") && out.contains("\"g2\":2"));
        assert!(out.starts_with("{\"n\":2,\"m\":1,\"connected\":true,\"dimension\":3"));
        assert_eq!(out.lines().count(), 1);
    }

    #[test]
    fn verify_cycle_five() {
        let v = json(&["verify", "--family", "cycle", "--n", "5", "--format", "json"]);
        assert_eq!(v["dimension"], 0);
        assert_eq!(v["oracle_nullity"], 0);
        assert_eq!(v["oracle_agrees"], true);
    }

    #[test]
    fn cycle_five_text_lists_no_configurations() {
        let (_, out, _) = run_args(&["analyze", "--family", "cycle", "--n", "5"]);
        assert!(out.contains("configurations: none"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["analyze"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["analyze", "--graph6", "A_", "--family", "star", "--n", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["analyze", "--family", "gnp", "--n", "5", "--p", "1.5"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
        assert_eq!(run_args(&["analyze", "--graph6", "A"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["analyze", "--file", "/nonexistent/graph.txt"]).0, EXIT_PARSE);
        assert_eq!(run_args(&["analyze", "--graph6", "C?"]).0, EXIT_CONSTRAINT);
        assert_eq!(run_args(&["analyze", "--graph6", "@"]).0, EXIT_CONSTRAINT);
        assert_eq!(run_args(&["verify", "--family", "path", "--n", "15"]).0, EXIT_CONSTRAINT);
        assert_eq!(run_args(&["enumerate", "--family", "path", "--n", "25"]).0, EXIT_CONSTRAINT);
        assert_eq!(run_args(&["verify", "--family", "path", "--n", "15", "--oracle-max-n", "15"]).0, EXIT_OK);
    }

    #[test]
    fn components_extension() {
        let v = json(&["analyze", "--graph6", "C?", "--components", "--format", "json"]);
        assert_eq!(v["dimension"], 4);
        assert_eq!(v["extension"], "components");
        assert_eq!(v["oracle_agrees"], true);
        // Two disjoint edges: 3 each; configurations relabeled into the parent graph.
        let g = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap().to_graph6();
        let v = json(&["verify", "--graph6", &g, "--components", "--format", "json"]);
        assert_eq!((v["dimension"].as_u64(), v["oracle_nullity"].as_u64()), (Some(6), Some(6)));
        let pairs: Vec<(u64, u64)> = v["configurations"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["a"].as_u64().unwrap(), c["b"].as_u64().unwrap()))
            .collect();
        assert!(pairs.contains(&(2, 0)) && pairs.contains(&(1, 3)));
    }

    #[test]
    fn enumerate_lists_star_elements() {
        let v = json(&["enumerate", "--family", "star", "--n", "4", "--format", "json"]);
        assert_eq!(v["mode"], "both");
        assert_eq!(v["g2"], 3);
        let paulis: Vec<&str> = v["elements"].as_array().unwrap().iter().map(|e| e["pauli"].as_str().unwrap()).collect();
        assert!(paulis.contains(&"+ZXII"));
        assert!(v["elements"].as_array().unwrap().iter().all(|e| e["support"].as_array().unwrap().len() <= 2));
    }

    #[test]
    fn gen_round_trips_through_analyze() {
        let (code, g6, _) = run_args(&["gen", "--family", "gnp", "--n", "9", "--p", "0.6", "--seed", "4"]);
        assert_eq!(code, 0);
        let a = json(&["analyze", "--graph6", g6.trim(), "--components", "--format", "json"]);
        let b = json(&["analyze", "--family", "gnp", "--n", "9", "--p", "0.6", "--seed", "4", "--components", "--format", "json"]);
        assert_eq!(a, b);
        let (_, el, _) = run_args(&["gen", "--family", "gnp", "--n", "9", "--p", "0.6", "--seed", "4", "--encoding", "edge-list"]);
        assert_eq!(Graph::parse_edge_list(&el).unwrap().to_graph6(), g6.trim());
    }

    #[test]
    fn selftest_passes() {
        let (code, out, _) = run_args(&["selftest"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn corpus_verification_is_ordered_and_aggregates_exit_codes() {
        let dir = std::env::temp_dir().join(format!("stabdim-corpus-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("b.g6"), "A_\nC~\n").unwrap();
        std::fs::write(dir.join("a.txt"), "p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        std::fs::write(dir.join("c.txt"), "p edge 4 1\ne 1 2\n").unwrap();
        let (code, out, _) = run_args(&["verify", "--corpus", dir.to_str().unwrap(), "--format", "json"]);
        std::fs::remove_dir_all(&dir).unwrap();
        let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        let sources: Vec<&str> = lines.iter().map(|l| l["source"].as_str().unwrap()).collect();
        assert_eq!(sources, ["a.txt", "b.g6:1", "b.g6:2", "c.txt"]);
        assert_eq!(lines[1]["report"]["dimension"], 3);
        assert_eq!(lines[2]["report"]["dimension"], 3);
        assert_eq!(lines[3]["exit"], EXIT_CONSTRAINT);
        assert_eq!(code, EXIT_CONSTRAINT);
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["verify", "--family", "gnp", "--n", "11", "--p", "0.5", "--seed", "2", "--components", "--format", "json"];
        assert_eq!(run_args(&args), run_args(&args));
    }
}
