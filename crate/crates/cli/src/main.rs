//! `strongsub`: strong subgraph k-connectivity from the command line.
//!
//! Reports are plain text ending in a `RESULT: <value>` line, or a single
//! JSON object with `--json`. Exit status: 0 computed, 1 negative decision,
//! 2 usage or input error.

mod engine;

use clap::{Args, Parser, Subcommand, ValueEnum};
use engine::{Engine, EngineChoice};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use strongsub::combinatorics::combinations;
use strongsub::extremal::{bounds, hamiltonian_decomposition, is_upper_bound_extremal};
use strongsub::gadgets::{cllm_gadget, linkage_gadget, CLLMInstance, Linkage2Instance};
use strongsub::{
    biorient, check_packing, directed_linkage, generate, io, undirected_linkage, Digraph, Error, KappaResult,
    OracleConfig, Packing, VertexSet,
};

#[derive(Parser)]
#[command(name = "strongsub", version, about = "Strong subgraph k-connectivity of digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit one JSON object instead of the text report.
    #[arg(long, global = true)]
    json: bool,

    /// Size guard for the exponential engines.
    #[arg(long, global = true, env = "STRONGSUB_MAX_N", default_value_t = strongsub::packing::DEFAULT_MAX_N)]
    max_n: usize,

    /// Run past the size guard (up to the hard cap).
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Args)]
struct EngineArgs {
    #[arg(long, value_enum, default_value_t = EngineChoice::Auto)]
    engine: EngineChoice,
    /// Same as `--engine semicomplete`.
    #[arg(long, conflicts_with_all = ["engine", "symmetric"])]
    semicomplete: bool,
    /// Same as `--engine symmetric`.
    #[arg(long, conflicts_with = "engine")]
    symmetric: bool,
}

impl EngineArgs {
    fn choice(&self) -> EngineChoice {
        match (self.semicomplete, self.symmetric) {
            (true, _) => EngineChoice::Semicomplete,
            (_, true) => EngineChoice::Symmetric,
            _ => self.engine,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// κ_S of a digraph for the anchor `--s`.
    KappaS {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "s")]
        s: String,
        #[command(flatten)]
        engine: EngineArgs,
        /// Also write the certificate packing to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// κ_k of a digraph.
    KappaK {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// The sharp bounds on κ_k of a strong digraph.
    Bounds {
        #[arg(value_name = "FILE", required_unless_present = "input")]
        file: Option<PathBuf>,
        #[arg(value_name = "K", required_unless_present = "k")]
        k_pos: Option<usize>,
        #[arg(long, conflicts_with = "file")]
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "k_pos")]
        k: Option<usize>,
    },
    /// Whether κ_S ≥ ℓ (with `--s`) or κ_k ≥ ℓ (with `--k`). Exit 1 on no.
    Decide {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "s", required_unless_present = "k", conflicts_with = "k")]
        s: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        engine: EngineArgs,
    },
    /// Hamiltonian decomposition of the complete biorientation on n vertices.
    Decompose { n: usize },
    /// Reduction gadgets.
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Checks a packing file against a host digraph.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        packing: PathBuf,
    },
    /// Biorientation of an undirected edge list.
    Biorient {
        #[arg(long)]
        input: PathBuf,
    },
    /// Disjoint paths for a terminals file (one `s t` pair per line).
    Linkage {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        terminals: PathBuf,
        /// Read the input as an undirected graph.
        #[arg(long)]
        undirected: bool,
    },
    /// Graphviz rendering of a digraph.
    Dot {
        #[arg(long)]
        input: PathBuf,
    },
    /// A seeded random instance as an edge list.
    Random {
        #[arg(long, value_enum)]
        kind: RandomKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// From a 2-linkage instance. Terminals come from `--terminals` or a
    /// `terminals: s1 t1 s2 t2` line in the base file.
    Linkage2 {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        terminals: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
    },
    /// From an undirected tripartite graph on 3q vertices with parts
    /// `0..q`, `q..2q`, `2q..3q`.
    Cllm {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RandomKind {
    Digraph,
    Strong,
    Semicomplete,
    Tournament,
    Graph,
    Connected,
    Symmetric,
}

/// What a verb produced: report lines, the `RESULT` value, a JSON payload
/// and an exit status.
struct Report {
    lines: Vec<String>,
    result: String,
    json: serde_json::Value,
    status: u8,
}

impl Report {
    fn new(result: impl Into<String>, json: serde_json::Value) -> Self {
        Report {
            lines: Vec::new(),
            result: result.into(),
            json,
            status: 0,
        }
    }

    fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }

    fn render(&self, json: bool) -> String {
        if json {
            return format!("{}\n", serde_json::to_string_pretty(&self.json).expect("serializable"));
        }
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            if !l.ends_with('\n') {
                out.push('\n');
            }
        }
        if !self.result.is_empty() {
            let _ = writeln!(out, "RESULT: {}", self.result);
        }
        out
    }
}

/// A usage, input or validation failure; always exit status 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<Report, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> std::result::Result<Digraph, Failure> {
    Ok(io::parse_digraph(&read(path)?)?)
}

fn joined(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct KappaJson<'a> {
    verb: &'a str,
    engine: &'a str,
    value: usize,
    witness_set: Option<&'a VertexSet>,
    certificate: Option<&'a Packing>,
}

fn kappa_report(verb: &str, engine: Engine, r: &KappaResult, certificate: Option<&Path>) -> Outcome {
    if let (Some(path), Some(p)) = (certificate, &r.certificate) {
        write(path, &io::write_packing(p))?;
    }
    let json = serde_json::to_value(KappaJson {
        verb,
        engine: engine.name(),
        value: r.value,
        witness_set: r.witness_set.as_ref(),
        certificate: r.certificate.as_ref(),
    })
    .expect("serializable");
    let mut rep = Report::new(r.value.to_string(), json).line(format!("engine: {}", engine.name()));
    if let Some(w) = &r.witness_set {
        rep = rep.line(format!("S: {}", joined(w)));
    }
    if let Some(p) = &r.certificate {
        rep = rep.line(format!("parts: {}", p.len()));
        for (i, part) in p.parts.iter().enumerate() {
            rep = rep.line(format!("part {i}: {} vertices, {} arcs", part.vertices.len(), part.arcs.len()));
        }
    }
    Ok(rep.line(format!("value: {}", r.value)))
}

fn run(cli: Cli) -> Outcome {
    let cfg = OracleConfig {
        max_n: cli.max_n,
        force: cli.force,
    };
    match cli.command {
        Command::KappaS {
            input,
            s,
            engine,
            certificate,
        } => {
            let d = load_digraph(&input)?;
            let s = io::parse_vertex_list(&s, d.n())?;
            let e = engine::select(&d, engine.choice())?;
            let r = engine::value_s(&d, &s, e, &cfg)?;
            kappa_report("kappa-s", e, &r, certificate.as_deref())
        }
        Command::KappaK {
            input,
            k,
            engine,
            certificate,
        } => {
            let d = load_digraph(&input)?;
            let e = engine::select(&d, engine.choice())?;
            let r = engine::value_k(&d, k, e, &cfg)?;
            kappa_report("kappa-k", e, &r, certificate.as_deref())
        }
        Command::Bounds { file, k_pos, input, k } => {
            let path = file.or(input).expect("clap requires a file");
            let k = k_pos.or(k).expect("clap requires k");
            let d = load_digraph(&path)?;
            let (lo, hi) = bounds(&d, k)?;
            let extremal = is_upper_bound_extremal(&d, k);
            let json = serde_json::json!({ "verb": "bounds", "lower": lo, "upper": hi, "extremal": extremal });
            Ok(Report::new(format!("{lo} {hi}"), json)
                .line(format!("lower: {lo}"))
                .line(format!("upper: {hi}"))
                .line(format!("upper bound attained: {extremal}")))
        }
        Command::Decide {
            input,
            s,
            k,
            ell,
            engine,
        } => {
            let d = load_digraph(&input)?;
            let e = engine::select(&d, engine.choice())?;
            let anchors: Vec<VertexSet> = match (s, k) {
                (Some(s), _) => vec![io::parse_vertex_list(&s, d.n())?],
                (None, Some(k)) => {
                    if k < 2 || k > d.n() {
                        return Err(Error::InvalidK { k, n: d.n() }.into());
                    }
                    combinations(d.n(), k).map(VertexSet::from_iter_dedup).collect()
                }
                (None, None) => unreachable!("clap requires --s or --k"),
            };
            let mut failing = None;
            for s in &anchors {
                if engine::decide(&d, s, ell, e, &cfg)?.is_none() {
                    failing = Some(s.clone());
                    break;
                }
            }
            let holds = failing.is_none();
            let json = serde_json::json!({
                "verb": "decide",
                "engine": e.name(),
                "ell": ell,
                "holds": holds,
                "failing_set": failing,
            });
            let mut rep = Report::new(if holds { "yes" } else { "no" }, json).line(format!("engine: {}", e.name()));
            if let Some(f) = &failing {
                rep = rep.line(format!("failing S: {}", joined(f)));
            }
            rep.status = if holds { 0 } else { 1 };
            Ok(rep)
        }
        Command::Decompose { n } => {
            let h = hamiltonian_decomposition(n);
            let cycles = h.as_ref().map(|h| h.cycles.clone());
            let json = serde_json::json!({ "verb": "decompose", "n": n, "cycles": cycles });
            let mut rep = Report::new(
                match &h {
                    Some(h) => h.cycles.len().to_string(),
                    None => "none".into(),
                },
                json,
            );
            for c in h.iter().flat_map(|h| &h.cycles) {
                rep = rep.line(c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            Ok(rep)
        }
        Command::Gadget(g) => gadget(g),
        Command::Verify { input, packing } => {
            let d = load_digraph(&input)?;
            let p = io::parse_packing(&read(&packing)?)?;
            match check_packing(&d, &p)? {
                Some(v) => Err(Failure(format!("invalid packing: {v}"))),
                None => {
                    let json = serde_json::json!({ "verb": "verify", "valid": true, "parts": p.len() });
                    Ok(Report::new("valid", json).line(format!("parts: {}", p.len())))
                }
            }
        }
        Command::Biorient { input } => {
            let g = io::parse_undirected(&read(&input)?)?;
            let text = io::write_digraph(&biorient(&g));
            Ok(Report::new("", serde_json::json!({ "verb": "biorient", "edge_list": text })).line(text))
        }
        Command::Linkage {
            input,
            terminals,
            undirected,
        } => {
            let text = read(&input)?;
            let (n, found) = if undirected {
                let g = io::parse_undirected(&text)?;
                let t = io::parse_terminals(&read(&terminals)?, g.n())?;
                (g.n(), undirected_linkage(&g, &t)?)
            } else {
                let d = io::parse_digraph(&text)?;
                let t = io::parse_terminals(&read(&terminals)?, d.n())?;
                (d.n(), directed_linkage(&d, &t)?)
            };
            let paths = found.as_ref().map(|l| l.paths.clone());
            let json = serde_json::json!({ "verb": "linkage", "n": n, "paths": paths });
            let mut rep = Report::new(if found.is_some() { "yes" } else { "no" }, json);
            for p in paths.iter().flatten() {
                rep = rep.line(p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            }
            rep.status = if found.is_some() { 0 } else { 1 };
            Ok(rep)
        }
        Command::Dot { input } => {
            let text = io::to_dot(&load_digraph(&input)?);
            Ok(Report::new("", serde_json::json!({ "verb": "dot", "dot": text })).line(text))
        }
        Command::Random { kind, n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure(format!("probability {p} outside [0, 1]")));
            }
            let rng = &mut ChaCha8Rng::seed_from_u64(seed);
            let text = match kind {
                RandomKind::Digraph => io::write_digraph(&generate::random_digraph(n, p, rng)),
                RandomKind::Strong => io::write_digraph(&generate::random_strong_digraph(n, p, rng)),
                RandomKind::Semicomplete => io::write_digraph(&generate::random_semicomplete(n, p, rng)),
                RandomKind::Tournament => io::write_digraph(&generate::random_tournament(n, rng)),
                RandomKind::Graph => io::write_undirected(&generate::random_graph(n, p, rng)),
                RandomKind::Connected => io::write_undirected(&generate::random_connected_graph(n, p, rng)),
                RandomKind::Symmetric => io::write_digraph(&generate::random_symmetric_digraph(n, p, rng)),
            };
            Ok(Report::new("", serde_json::json!({ "verb": "random", "edge_list": text })).line(text))
        }
    }
}

fn gadget(g: GadgetCommand) -> Outcome {
    let (d, s, ell) = match g {
        GadgetCommand::Linkage2 { base, terminals, k, ell } => {
            let list = io::parse_edge_list(&read(&base)?)?;
            let d = Digraph::new(list.n, list.pairs)?;
            let t = match terminals {
                Some(path) => io::parse_terminals(&read(&path)?, d.n())?,
                None => {
                    let (_, value) = list
                        .sidecar
                        .iter()
                        .find(|(key, _)| key == "terminals")
                        .ok_or_else(|| Failure("no --terminals file and no `terminals:` line in the base file".into()))?;
                    let nums: Vec<&str> = value.split_whitespace().collect();
                    let [s1, t1, s2, t2] = nums[..] else {
                        return Err(Failure("`terminals:` needs four vertices s1 t1 s2 t2".into()));
                    };
                    io::parse_terminals(&format!("{s1} {t1}\n{s2} {t2}\n"), d.n())?
                }
            };
            let (gd, s) = linkage_gadget(&Linkage2Instance::new(d, t)?, k, ell)?;
            (gd, s, ell)
        }
        GadgetCommand::Cllm { base, k } => {
            let g = io::parse_undirected(&read(&base)?)?;
            if g.n() % 3 != 0 {
                return Err(Failure(format!("order {} is not a multiple of 3", g.n())));
            }
            let q = g.n() / 3;
            let parts = [0, 1, 2].map(|i| VertexSet::from_iter_dedup(i * q..(i + 1) * q));
            let gad = cllm_gadget(&CLLMInstance::new(g, parts)?, k)?;
            (gad.digraph, gad.anchor, gad.ell)
        }
    };
    let text = format!("{}S: {}\nell: {ell}\n", io::write_digraph(&d), joined(&s));
    let json = serde_json::json!({ "verb": "gadget", "n": d.n(), "arcs": d.arcs(), "S": s, "ell": ell });
    Ok(Report::new("", json).line(text))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(rep) => {
            print!("{}", rep.render(json));
            ExitCode::from(rep.status)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
