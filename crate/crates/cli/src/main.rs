//! `sparsecolor`: seeded experiments with JSON reports.
//!
//! Exit codes: 0 every verification passed, 1 a verification failed,
//! 2 bad arguments or unparsable input, 3 file I/O error, 4 input beyond a
//! size limit, 5 the algorithm itself failed (e.g. restart budget spent).

mod report;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use sparsecolor::constructions::{self, strategy_tree_graph, zykov_like, DEFAULT_SIZE_LIMIT};
use sparsecolor::graph::format::{
    parse_edge_list, parse_ordered_json, write_edge_list, write_ordered_json, LabeledGraph, ORDERED_GRAPH_FORMAT,
};
use sparsecolor::graph::{clique_number, degeneracy_order, generators, is_proper_coloring, Graph, OrderedGraph};
use sparsecolor::online::spec::{build_builder, build_painter, BUILDERS, PAINTERS};
use sparsecolor::online::{play, verify_transcript, GameConfig, GameTranscript, Normalized, TRANSCRIPT_FORMAT};
use sparsecolor::oracles::{
    chromatic_number, fractional_chromatic, ratio_text, CertificateFile, OracleError, OracleLimits, Verdict,
    WeightCertificate,
};
use sparsecolor::peel::{peel_color, PeelMode, PeelParams};
use sparsecolor::sampler::{estimate_marginals, estimate_sparse_marginals, MarginalReport, SamplerParams};
use sparsecolor::Rational;

use report::{Failure, Report, ReportBuilder, EXIT_OK, EXIT_VERIFICATION_FAILED};

#[derive(Parser)]
#[command(
    name = "sparsecolor",
    version,
    about = "Coloring experiments on sparse triangle-free graphs"
)]
struct Cli {
    /// Worker threads for Monte-Carlo and tournament verbs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(flatten)]
    limits: LimitArgs,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone)]
struct LimitArgs {
    /// Largest graph for the exact fractional chromatic LP.
    #[arg(long, global = true, env = "SPARSECOLOR_FRACTIONAL_LIMIT", default_value_t = OracleLimits::default().fractional)]
    fractional_limit: usize,
    /// Largest graph for the exact chromatic number.
    #[arg(long, global = true, env = "SPARSECOLOR_CHROMATIC_LIMIT", default_value_t = OracleLimits::default().chromatic)]
    chromatic_limit: usize,
    /// Largest graph for maximum-weight independent set searches.
    #[arg(long, global = true, env = "SPARSECOLOR_WEIGHT_LIMIT", default_value_t = OracleLimits::default().max_weight)]
    weight_limit: usize,
}

impl LimitArgs {
    fn resolve(&self) -> OracleLimits {
        OracleLimits {
            fractional: self.fractional_limit,
            chromatic: self.chromatic_limit,
            max_weight: self.weight_limit,
            maximal_independent_sets: self
                .fractional_limit
                .max(OracleLimits::default().maximal_independent_sets),
        }
    }
}

#[derive(Subcommand)]
enum Verb {
    /// Estimate per-vertex marginals of the capped (or sparse) sampler.
    Sample(SampleArgs),
    /// Color a degenerate triangle-free graph by repeated peeling.
    Color(ColorArgs),
    /// Play Builder against Painter.
    Game(GameArgs),
    /// Re-verify a game transcript and, when possible, replay it.
    Replay { transcript: PathBuf },
    /// Build a strategy-tree or Zykov-like graph.
    #[command(subcommand)]
    Construct(ConstructVerb),
    /// Exact fractional chromatic number with a dual certificate.
    Chif(ChifArgs),
    /// Re-check an emitted artifact: certificate, transcript or graph file.
    Verify { file: PathBuf },
}

#[derive(Args)]
struct GraphInput {
    /// Edge list, or ordered-graph JSON.
    #[arg(long)]
    graph: PathBuf,
    /// Override the left-degree bound (default: the file's, else the degeneracy).
    #[arg(long)]
    d: Option<f64>,
    /// Left-edge sparsity bound `f`.
    #[arg(long)]
    f: Option<f64>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Initial weight (default: half of ln d / (4d), or of ln f / (8 sqrt f) when sparse).
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0.99)]
    confidence: f64,
    /// Disable the weight cap.
    #[arg(long)]
    no_cap: bool,
    /// Use the sparse-neighborhood sampler (needs `f`).
    #[arg(long)]
    sparse: bool,
    /// Also write a flat CSV table of the marginals.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Desk,
    Paper,
}

#[derive(Args)]
struct ColorArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value = "desk")]
    mode: ModeArg,
    #[arg(long)]
    seed: Option<u64>,
    /// Rounds per level (desk mode).
    #[arg(long)]
    rounds: Option<usize>,
    /// Initial weight (desk mode).
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    restart_budget: Option<usize>,
    /// Write `label,color` rows here.
    #[arg(long)]
    coloring_out: Option<PathBuf>,
    /// Write the full trace as JSON here.
    #[arg(long)]
    trace_out: Option<PathBuf>,
}

#[derive(Args)]
struct GameArgs {
    /// Builder strategy, e.g. `random:p=0.2` or `force-colors:k=3`.
    #[arg(long)]
    builder: String,
    /// Painter strategy, e.g. `first-fit` or `split:s=3,inner=witness:t=8`.
    #[arg(long)]
    painter: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    palette: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Play this many games with seeds `seed, seed+1, ...`.
    #[arg(long, default_value_t = 1)]
    games: u64,
    /// Write the transcript (single game only).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructVerb {
    /// Graph of all outcomes of a Builder strategy against colors `0..d`.
    StrategyTree {
        #[arg(long)]
        builder: String,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// `N`: labels have length at most `N - 1`.
        #[arg(long)]
        rounds: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Keep one neighbor per color in every move.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Iterated blow-up of `Gamma`.
    ZykovLike {
        /// Edge list for `Gamma` (default: a single vertex).
        #[arg(long)]
        gamma: Option<PathBuf>,
        /// Use the complete graph on this many vertices as `Gamma`.
        #[arg(long, conflicts_with = "gamma")]
        gamma_complete: Option<usize>,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SIZE_LIMIT)]
        size_limit: usize,
        /// Also check the fractional recursion from level `n - 1` to `n`.
        #[arg(long)]
        check_recursion: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ChifArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Write the normalized dual weights as a certificate file.
    #[arg(long)]
    certificate_out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(report::EXIT_FAILED);
        }
    }
    let limits = cli.limits.resolve();
    let result = match cli.verb {
        Verb::Sample(a) => sample(a),
        Verb::Color(a) => color(a, &limits),
        Verb::Game(a) => game(a),
        Verb::Replay { transcript } => replay(transcript),
        Verb::Construct(c) => construct(c, &limits),
        Verb::Chif(a) => chif(a, &limits),
        Verb::Verify { file } => verify(file, &limits),
    };
    match result.and_then(|r| emit(&r, cli.report.as_ref()).map(|_| r)) {
        Ok(r) => ExitCode::from(if r.passed() { EXIT_OK } else { EXIT_VERIFICATION_FAILED }),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}

fn emit(r: &Report, path: Option<&PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(r).expect("serializable") + "\n";
    match path {
        Some(p) => write(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::io(&path.display().to_string(), e))
}

fn write(path: &PathBuf, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::io(&path.display().to_string(), e))
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let now = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .unwrap_or_default();
        now.as_nanos() as u64
    })
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn load_graph(path: &PathBuf) -> Result<LabeledGraph, Failure> {
    let text = read(path)?;
    if is_json(&text) {
        let (og, labels) = parse_ordered_json(&text)?;
        Ok(LabeledGraph {
            graph: og.graph().clone(),
            labels,
        })
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

/// The file's order and bounds if it has them, else a smallest-last order.
fn load_ordered(input: &GraphInput) -> Result<(OrderedGraph, Vec<String>), Failure> {
    let text = read(&input.graph)?;
    let (og, labels) = if is_json(&text) {
        parse_ordered_json(&text)?
    } else {
        let lg = parse_edge_list(&text)?;
        (degeneracy_order(&lg.graph).0, lg.labels)
    };
    let d = input.d.unwrap_or(og.d());
    let f = input.f.or(og.f());
    let og = og
        .with_bounds(d, f)
        .map_err(|e| Failure::parse(format!("declared bounds do not hold: {e}")))?;
    Ok((og, labels))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn sample(a: SampleArgs) -> Result<Report, Failure> {
    let seed = resolve_seed(a.seed);
    let (og, labels) = load_ordered(&a.input)?;
    let d = og.d();
    let (report, alpha): (MarginalReport, f64) = if a.sparse {
        let f = og
            .f()
            .ok_or_else(|| Failure::parse("--sparse needs f (flag or file)"))?;
        let alpha = a.alpha.unwrap_or(0.5 * f.ln() / (8.0 * f.sqrt()));
        (
            estimate_sparse_marginals(&og, alpha, seed, a.trials, a.confidence)?,
            alpha,
        )
    } else {
        let alpha = a.alpha.unwrap_or(0.5 * SamplerParams::alpha_limit(d.max(2.0)));
        let mut p = SamplerParams::new(alpha, d, seed);
        p.cap_enabled = !a.no_cap;
        (estimate_marginals(&og, &p, a.trials, a.confidence)?, alpha)
    };
    let config = json!({
        "graph": a.input.graph, "n": og.n(), "d": d, "f": og.f(), "alpha": alpha, "trials": a.trials,
        "confidence": a.confidence, "cap": !a.no_cap, "sparse": a.sparse,
    });
    let mut rb = ReportBuilder::new("sample", config, Some(seed));
    if let Some(path) = &a.csv {
        let mut csv = String::from("vertex,count,frequency,lower,upper\n");
        for (v, label) in labels.iter().enumerate().take(og.n()) {
            csv += &format!(
                "{},{},{},{},{}\n",
                label, report.counts[v], report.frequency[v], report.lower[v], report.upper[v]
            );
        }
        write(path, &csv)?;
    }
    if report.regime.in_guarantee() {
        let flagged: Vec<&String> = report.flagged.iter().map(|&v| &labels[v]).collect();
        rb.check(
            "marginal lower bound",
            flagged.is_empty(),
            format!(
                "{} vertices with upper confidence bound below {}: {flagged:?}",
                flagged.len(),
                report.threshold
            ),
        );
    }
    Ok(rb.finish(json!({ "labels": labels, "marginals": report })))
}

fn color(a: ColorArgs, limits: &OracleLimits) -> Result<Report, Failure> {
    let seed = resolve_seed(a.seed);
    let (og, labels) = load_ordered(&a.input)?;
    let mut p = match a.mode {
        ModeArg::Desk => PeelParams::desk(seed),
        ModeArg::Paper => PeelParams::paper(seed),
    };
    if let Some(r) = a.rounds {
        p.rounds = Some(r);
    }
    if let Some(al) = a.alpha {
        p.alpha = al;
    }
    if let Some(b) = a.restart_budget {
        p.restart_budget = b;
    }
    let config = json!({ "graph": a.input.graph, "n": og.n(), "d": og.d(), "f": og.f(), "params": p });
    let mut rb = ReportBuilder::new("color", config, Some(seed));
    let (coloring, trace) = peel_color(&og, &p)?;
    let g = og.graph();
    rb.check(
        "proper coloring",
        is_proper_coloring(g, &coloring.color),
        format!("{} colors", coloring.num_colors),
    );
    let trace_check = trace.check(&coloring);
    rb.check(
        "trace consistent",
        trace_check.is_ok(),
        trace_check.err().unwrap_or_default(),
    );
    if p.mode == PeelMode::Desk {
        let bound = og.d().floor() as usize + 1;
        rb.check(
            "at most d + 1 colors",
            coloring.num_colors <= bound,
            format!("{} <= {bound}", coloring.num_colors),
        );
    }
    let chi = (g.n() <= limits.chromatic)
        .then(|| chromatic_number(g, limits.chromatic))
        .transpose()?;
    if let Some(path) = &a.coloring_out {
        let mut csv = String::from("vertex,color\n");
        for (v, c) in coloring.color.iter().enumerate() {
            csv += &format!("{},{c}\n", labels[v]);
        }
        write(path, &csv)?;
    }
    if let Some(path) = &a.trace_out {
        write(path, &serde_json::to_string_pretty(&trace).expect("serializable"))?;
    }
    let by_color = coloring.color.iter().fold(BTreeMap::new(), |mut m, &c| {
        *m.entry(c).or_insert(0usize) += 1;
        m
    });
    Ok(rb.finish(json!({
        "colors": coloring.num_colors,
        "chromatic_number": chi,
        "class_sizes": by_color,
        "levels": trace.levels.len(),
        "restarts": trace.restarts,
        "tail": trace.tail,
    })))
}

fn game_config(a: &GameArgs, seed: u64) -> GameConfig {
    GameConfig {
        n: a.n,
        r: a.r,
        palette: a.palette,
        seed,
    }
}

fn play_one(a: &GameArgs, seed: u64) -> Result<GameTranscript, Failure> {
    let cfg = game_config(a, seed);
    let mut b = build_builder(&a.builder, &cfg).map_err(|e| Failure::parse(format!("builder: {e}")))?;
    let mut p = build_painter(&a.painter, &cfg).map_err(|e| Failure::parse(format!("painter: {e}")))?;
    play(&mut b, &mut p, &cfg).map_err(|e| Failure::failed(format!("protocol violation: {e}")))
}

fn game(a: GameArgs) -> Result<Report, Failure> {
    let seed = resolve_seed(a.seed);
    if a.games == 0 {
        return Err(Failure::parse("--games must be positive"));
    }
    if a.games > 1 && a.out.is_some() {
        return Err(Failure::parse("--out needs a single game"));
    }
    let config = json!({
        "builder": a.builder, "painter": a.painter, "n": a.n, "r": a.r, "palette": a.palette, "games": a.games,
        "known_builders": BUILDERS, "known_painters": PAINTERS,
    });
    let mut rb = ReportBuilder::new("game", config, Some(seed));
    // validate the specs once before fanning out
    play_one(&a, seed)?;
    let transcripts: Vec<Result<GameTranscript, Failure>> = (0..a.games)
        .into_par_iter()
        .map(|i| play_one(&a, seed.wrapping_add(i)))
        .collect();
    let mut rows = Vec::new();
    let mut outcomes: BTreeMap<String, u64> = BTreeMap::new();
    let mut bad = Vec::new();
    for (i, t) in transcripts.into_iter().enumerate() {
        let t = t?;
        if let Err(e) = verify_transcript(&t) {
            bad.push(format!("game {i}: {e}"));
        }
        let kind = to_value(&t.outcome)["kind"].as_str().unwrap_or("?").to_string();
        *outcomes.entry(kind).or_default() += 1;
        rows.push(json!({
            "index": i, "seed": t.config.seed, "outcome": t.outcome, "rounds": t.rounds(), "colors_used": t.colors_used(),
        }));
        if let Some(path) = &a.out {
            write(path, &t.to_json())?;
        }
    }
    rb.check("transcripts verify", bad.is_empty(), bad.join("; "));
    Ok(rb.finish(json!({ "outcomes": outcomes, "games": rows })))
}

fn replay(path: PathBuf) -> Result<Report, Failure> {
    let text = read(&path)?;
    let t: GameTranscript = serde_json::from_str(&text).map_err(|e| Failure::parse(format!("transcript: {e}")))?;
    let mut rb = ReportBuilder::new("replay", json!({ "transcript": path }), Some(t.config.seed));
    let v = verify_transcript(&t);
    rb.check(
        "transcript verifies",
        v.is_ok(),
        v.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    // strategies whose names are specs can be re-run
    let cfg = t.config.clone();
    let rerun = match (build_builder(&t.builder, &cfg), build_painter(&t.painter, &cfg)) {
        (Ok(mut b), Ok(mut p)) => play(&mut b, &mut p, &cfg).ok(),
        _ => None,
    };
    let identical = rerun.as_ref().map(|r| r.to_json() == t.to_json());
    if let Some(same) = identical {
        rb.check(
            "re-run reproduces transcript",
            same,
            if same { "byte-identical" } else { "differs" },
        );
    }
    Ok(rb.finish(json!({
        "outcome": t.outcome, "rounds": t.rounds(), "colors_used": t.colors_used(), "rerun_identical": identical,
    })))
}

/// Degeneracy, clique number and, within limits, exact chi and chi_f.
fn graph_properties(g: &Graph, limits: &OracleLimits) -> Result<Value, Failure> {
    let (_, degeneracy) = degeneracy_order(g);
    let chi = (g.n() <= limits.chromatic)
        .then(|| chromatic_number(g, limits.chromatic))
        .transpose()?;
    let chi_f = (g.n() <= limits.fractional)
        .then(|| fractional_chromatic::<Rational>(g, limits.fractional))
        .transpose()?
        .map(|r| ratio_text(&r.value));
    Ok(json!({
        "vertices": g.n(), "edges": g.edge_count(), "degeneracy": degeneracy, "clique_number": clique_number(g),
        "chromatic_number": chi, "fractional_chromatic_number": chi_f,
    }))
}

fn construct(c: ConstructVerb, limits: &OracleLimits) -> Result<Report, Failure> {
    match c {
        ConstructVerb::StrategyTree {
            builder,
            d,
            r,
            rounds,
            seed,
            normalize,
            out,
        } => {
            let seed = resolve_seed(seed);
            let cfg = GameConfig {
                n: rounds,
                r,
                palette: d,
                seed,
            };
            build_builder(&builder, &cfg).map_err(|e| Failure::parse(format!("builder: {e}")))?;
            let make = || build_builder(&builder, &cfg).expect("validated");
            let tree = if normalize {
                strategy_tree_graph(|| Normalized(make()), d, r, rounds)?
            } else {
                strategy_tree_graph(make, d, r, rounds)?
            };
            let config = json!({ "builder": builder, "d": d, "r": r, "rounds": rounds, "normalize": normalize });
            let mut rb = ReportBuilder::new("construct strategy-tree", config, Some(seed));
            let g = tree.graph.graph();
            rb.check("clique-free", tree.is_clique_free(), format!("no K_{r}"));
            rb.check(
                "vertex bound",
                g.n() as u128 <= tree.vertex_bound,
                format!("{} <= {}", g.n(), tree.vertex_bound),
            );
            rb.check(
                "left degree",
                tree.graph.max_left_degree() <= d,
                format!("max {}", tree.graph.max_left_degree()),
            );
            let labels: Vec<String> = tree.labels.iter().map(|l| label_text(l)).collect();
            if let Some(path) = &out {
                write(path, &write_ordered_json(&tree.graph, &labels))?;
            }
            let props = graph_properties(g, limits)?;
            Ok(rb.finish(json!({ "properties": props, "dead_ends": tree.dead_ends.len(), "vertex_bound": tree.vertex_bound.to_string() })))
        }
        ConstructVerb::ZykovLike {
            gamma,
            gamma_complete,
            d,
            n,
            size_limit,
            check_recursion,
            out,
        } => {
            let gamma_graph = match (&gamma, gamma_complete) {
                (Some(p), _) => load_graph(p)?.graph,
                (None, Some(k)) => generators::complete(k),
                (None, None) => Graph::empty(1),
            };
            let z = zykov_like(&gamma_graph, d, n, size_limit)?;
            let config = json!({
                "gamma": gamma, "gamma_complete": gamma_complete, "gamma_vertices": gamma_graph.n(), "d": d, "n": n,
                "size_limit": size_limit,
            });
            let mut rb = ReportBuilder::new("construct zykov-like", config, None);
            let g = z.graph.graph();
            let omega = clique_number(g);
            rb.check(
                "clique bound",
                omega <= z.gamma_clique + 1,
                format!("omega = {omega}, Gamma has {}", z.gamma_clique),
            );
            let bound = d + z.gamma_degeneracy;
            rb.check(
                "left degree",
                z.graph.max_left_degree() <= bound,
                format!("{} <= {bound}", z.graph.max_left_degree()),
            );
            let mut results = json!({ "sizes": z.sizes, "properties": graph_properties(g, limits)? });
            if check_recursion && n >= 2 {
                let rc = constructions::check_fractional_recursion(&gamma_graph, d, n - 1, limits)?;
                rb.check(
                    "fractional recursion",
                    rc.all_hold(),
                    format!("{} <= {}", rc.lhs, rc.rhs),
                );
                results["recursion"] = to_value(&rc);
            }
            if let Some(path) = &out {
                let labels: Vec<String> = (0..g.n()).map(|v| v.to_string()).collect();
                write(path, &write_ordered_json(&z.graph, &labels))?;
            }
            Ok(rb.finish(results))
        }
    }
}

fn label_text(l: &[usize]) -> String {
    let parts: Vec<String> = l.iter().map(|c| c.to_string()).collect();
    format!("w{}", parts.join("."))
}

fn chif(a: ChifArgs, limits: &OracleLimits) -> Result<Report, Failure> {
    let lg = load_graph(&a.graph)?;
    let mut rb = ReportBuilder::new("chif", json!({ "graph": a.graph, "n": lg.graph.n() }), None);
    let res = fractional_chromatic::<Rational>(&lg.graph, limits.fractional)?;
    let v = res.verify(&lg.graph, limits.max_weight);
    rb.check(
        "primal and dual optimal",
        v.is_ok(),
        v.err().map(|e| e.to_string()).unwrap_or_default(),
    );
    let cert =
        WeightCertificate::from_fractional(&res).ok_or_else(|| Failure::failed("empty graph has no certificate"))?;
    let file = CertificateFile {
        graph: lg.clone(),
        certificate: cert,
    };
    let verdict = file.verify(limits.max_weight)?;
    rb.check(
        "dual certificate",
        verdict.holds(),
        verdict_text(&verdict, &lg.labels, &file.certificate.bound),
    );
    if let Some(path) = &a.certificate_out {
        write(path, &file.to_text())?;
    }
    let weights: BTreeMap<&String, String> = lg
        .labels
        .iter()
        .zip(&file.certificate.weights)
        .map(|(l, w)| (l, ratio_text(w)))
        .collect();
    Ok(rb.finish(json!({
        "fractional_chromatic_number": ratio_text(&res.value),
        "weights": weights,
        "cover": res.primal.iter().map(|(s, x)| json!({
            "set": s.iter().map(|v| &lg.labels[v]).collect::<Vec<_>>(), "weight": ratio_text(x),
        })).collect::<Vec<_>>(),
    })))
}

fn verdict_text(v: &Verdict, labels: &[String], bound: &Rational) -> String {
    match v {
        Verdict::Certified { heaviest, weight } => format!(
            "heaviest independent set {:?} weighs {} <= {}",
            heaviest.iter().map(|x| &labels[x]).collect::<Vec<_>>(),
            ratio_text(weight),
            ratio_text(bound)
        ),
        Verdict::Violated { set, weight } => format!(
            "independent set {:?} weighs {} > bound {}",
            set.iter().map(|x| &labels[x]).collect::<Vec<_>>(),
            ratio_text(weight),
            ratio_text(bound)
        ),
    }
}

fn verify(path: PathBuf, limits: &OracleLimits) -> Result<Report, Failure> {
    let text = read(&path)?;
    let mut rb;
    let results;
    if is_json(&text) {
        let v: Value = serde_json::from_str(&text).map_err(|e| Failure::parse(format!("json: {e}")))?;
        match v["format"].as_str() {
            Some(TRANSCRIPT_FORMAT) => {
                let t: GameTranscript =
                    serde_json::from_value(v).map_err(|e| Failure::parse(format!("transcript: {e}")))?;
                rb = ReportBuilder::new(
                    "verify",
                    json!({ "file": path, "kind": "transcript" }),
                    Some(t.config.seed),
                );
                let r = verify_transcript(&t);
                rb.check(
                    "transcript verifies",
                    r.is_ok(),
                    r.err().map(|e| e.to_string()).unwrap_or_default(),
                );
                results = json!({ "outcome": t.outcome });
            }
            Some(ORDERED_GRAPH_FORMAT) => {
                rb = ReportBuilder::new("verify", json!({ "file": path, "kind": "ordered-graph" }), None);
                match parse_ordered_json(&text) {
                    Ok((og, _)) => {
                        rb.check(
                            "declared bounds hold",
                            true,
                            format!("n = {}, d = {}, f = {:?}", og.n(), og.d(), og.f()),
                        );
                        results = graph_properties(og.graph(), limits)?;
                    }
                    Err(e) => {
                        rb.check("declared bounds hold", false, e.to_string());
                        results = Value::Null;
                    }
                }
            }
            other => return Err(Failure::parse(format!("unrecognized artifact format {other:?}"))),
        }
    } else if text.lines().any(|l| l.trim_start().starts_with("bound")) {
        let file = CertificateFile::parse(&text)?;
        rb = ReportBuilder::new("verify", json!({ "file": path, "kind": "certificate" }), None);
        match file.verify(limits.max_weight) {
            Ok(verdict) => {
                rb.check(
                    "certificate",
                    verdict.holds(),
                    verdict_text(&verdict, &file.graph.labels, &file.certificate.bound),
                );
            }
            Err(e @ OracleError::GraphTooLarge { .. }) => return Err(e.into()),
            Err(e) => rb.check("certificate", false, e.to_string()),
        }
        results = json!({
            "bound": ratio_text(&file.certificate.bound),
            "implied_lower_bound": file.certificate.implied_lower_bound().map(|b| ratio_text(&b)),
        });
    } else {
        let lg = parse_edge_list(&text)?;
        rb = ReportBuilder::new("verify", json!({ "file": path, "kind": "edge-list" }), None);
        rb.check("edge list loads", true, format!("{} vertices", lg.graph.n()));
        let round_trip = parse_edge_list(&write_edge_list(&lg)).map(|x| x == lg).unwrap_or(false);
        rb.check("round trip", round_trip, "");
        results = graph_properties(&lg.graph, limits)?;
    }
    Ok(rb.finish(results))
}
