//! `islabel`: build, query, inspect and update shortest-distance indexes.

mod input;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use islabel::label::LabelDirection;
use islabel::store::{IndexReader, Section, SECTION_NAMES};
use islabel::{
    generate, load_edge_list, load_index, oracle, save_index, should_rebuild, HierarchyOptions, Index,
    IndexOptions, Orientation, QueryOptions, QueryType, RebuildPolicy, VertexId,
};
use log::info;
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "islabel", version, about = "Exact shortest distances through an independent-set label index")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an index from an edge list.
    Build(BuildArgs),
    /// Answer distance (and optionally path) queries from an index.
    Query(QueryArgs),
    /// Answer the same queries with plain Dijkstra on the edge list.
    Oracle(OracleArgs),
    /// Print header fields, section sizes and hierarchy statistics.
    Stats(StatsArgs),
    /// Time random queries, split into label retrieval and search.
    Bench(BenchArgs),
    /// Insert or delete a vertex and rewrite the index in place.
    Update(UpdateArgs),
    /// Write a synthetic edge list.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: PathBuf,
    /// Stop once a level keeps more than this fraction of |V| + |E|.
    #[arg(long, default_value_t = 0.95)]
    sigma: f64,
    #[arg(long)]
    max_k: Option<u32>,
    #[arg(long)]
    directed: bool,
    /// Omit path data; the index then answers distances only.
    #[arg(long)]
    no_path: bool,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long)]
    pairs: PathBuf,
    /// Append the vertex sequence of a shortest path.
    #[arg(long)]
    path: bool,
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    pairs: PathBuf,
    #[arg(long)]
    directed: bool,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    index: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long, default_value_t = 1000)]
    queries: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("op").required(true).args(["insert", "delete"])))]
struct UpdateArgs {
    #[arg(long)]
    index: PathBuf,
    /// `u: v1 w1, v2 w2, ...`
    #[arg(long)]
    insert: Option<String>,
    #[arg(long)]
    delete: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Uniform,
    Pa,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    model: Model,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 4.0)]
    degree: f64,
    #[arg(long, default_value_t = 100)]
    max_weight: u32,
    #[arg(long)]
    directed: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: PathBuf,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().filter_or("ISLABEL_LOG", "warn")).init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Build(args) => build(args, &mut out),
        Command::Query(args) => query(args, &mut out),
        Command::Oracle(args) => run_oracle(args, &mut out),
        Command::Stats(args) => stats(args, &mut out),
        Command::Bench(args) => bench(args, &mut out),
        Command::Update(args) => update(args, &mut out),
        Command::Generate(args) => generate_graph(args, &mut out),
    }
    .and_then(|()| out.flush().context("writing output"));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            drop(out);
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn read_pairs(path: &Path) -> Result<Vec<(u64, u64)>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    input::parse_pairs(BufReader::new(file))
}

fn label_bytes(path: &Path) -> Result<u64> {
    let reader = IndexReader::open_path(path)?;
    let header = reader.header();
    let sections = [
        Section::OutLabelOffsets,
        Section::OutLabelEntries,
        Section::OutLabelVias,
        Section::InLabelOffsets,
        Section::InLabelEntries,
        Section::InLabelVias,
    ];
    Ok(sections.iter().map(|&s| header.section(s).1).sum())
}

fn top_edges(index: &Index) -> usize {
    let arcs = index.hierarchy().top().arc_count();
    if index.is_directed() {
        arcs
    } else {
        arcs / 2
    }
}

fn build(args: BuildArgs, out: &mut impl Write) -> Result<()> {
    if args.input == args.output {
        bail!("input and output must be different files");
    }
    let (graph, ids) = load_edge_list(&args.input, args.directed)
        .with_context(|| format!("loading {}", args.input.display()))?;
    info!("loaded {} vertices, {} arcs", graph.vertex_count(), graph.arc_count());
    let opts = IndexOptions {
        hierarchy: HierarchyOptions {
            sigma: args.sigma,
            max_k: args.max_k,
            ..Default::default()
        },
        path_data: !args.no_path,
    };
    let started = Instant::now();
    let index = Index::build(&graph, ids, &opts)?;
    let seconds = started.elapsed().as_secs_f64();
    save_index(&index, &args.output)?;
    let stats = index.hierarchy().stats();
    writeln!(out, "k={}", stats.k)?;
    writeln!(out, "top_vertices={}", stats.top_vertices)?;
    writeln!(out, "top_edges={}", top_edges(&index))?;
    writeln!(out, "label_bytes={}", label_bytes(&args.output)?)?;
    writeln!(out, "build_seconds={seconds:.3}")?;
    Ok(())
}

fn open_index(path: &Path, directed: bool) -> Result<Index> {
    let index = load_index(path).with_context(|| format!("loading index {}", path.display()))?;
    index.orientation().ensure(Orientation::of(directed))?;
    if index.is_stale() {
        log::warn!("index is stale; answers are not guaranteed until it is rebuilt");
    }
    Ok(index)
}

fn query(args: QueryArgs, out: &mut impl Write) -> Result<()> {
    let index = open_index(&args.index, args.directed)?;
    let pairs = read_pairs(&args.pairs)?;
    let lines: Vec<String> = pairs
        .par_iter()
        .map(|&(s, t)| -> Result<String> {
            if !args.path {
                return Ok(format!("{s} {t} {}", index.distance_external(s, t)?));
            }
            Ok(match index.shortest_path_external(s, t)? {
                Some((d, path)) => {
                    let path: Vec<String> = path.iter().map(u64::to_string).collect();
                    format!("{s} {t} {d} {}", path.join(","))
                }
                None => format!("{s} {t} INF"),
            })
        })
        .collect::<Result<_>>()?;
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn run_oracle(args: OracleArgs, out: &mut impl Write) -> Result<()> {
    let (graph, ids) = load_edge_list(&args.input, args.directed)
        .with_context(|| format!("loading {}", args.input.display()))?;
    let pairs = read_pairs(&args.pairs)?;
    let lines: Vec<String> = pairs
        .par_iter()
        .map(|&(s, t)| -> Result<String> {
            let lookup = |x| ids.internal(x).ok_or(islabel::Error::UnknownVertex(x));
            let d = oracle::dijkstra_oracle(&graph, lookup(s)?, lookup(t)?)?;
            Ok(format!("{s} {t} {d}"))
        })
        .collect::<Result<_>>()?;
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn stats(args: StatsArgs, out: &mut impl Write) -> Result<()> {
    let reader = IndexReader::open_path(&args.index)
        .with_context(|| format!("opening index {}", args.index.display()))?;
    let h = reader.header().clone();
    writeln!(out, "version={}", h.version)?;
    writeln!(out, "directed={}", h.directed)?;
    writeln!(out, "path_data={}", h.path_data)?;
    writeln!(out, "stale={}", h.stale)?;
    writeln!(out, "k={}", h.k)?;
    writeln!(out, "vertex_slots={}", h.slots)?;
    writeln!(out, "top_vertices={}", h.top_vertices)?;
    writeln!(out, "top_arcs={}", h.top_arcs)?;
    writeln!(out, "inserted={}", h.log.inserted)?;
    writeln!(out, "deleted={}", h.log.deleted)?;
    writeln!(out, "touched_labels={}", h.log.touched_labels)?;
    for (name, (offset, len)) in SECTION_NAMES.iter().zip(&h.sections) {
        writeln!(out, "section.{name}=offset:{offset},bytes:{len}")?;
    }
    let index = reader.load()?;
    let labels = index.labels().stats();
    let hstats = index.hierarchy().stats();
    let sizes: Vec<String> = hstats.level_sizes.iter().map(usize::to_string).collect();
    writeln!(out, "live_vertices={}", index.vertex_count())?;
    writeln!(out, "top_edges={}", top_edges(&index))?;
    writeln!(out, "level_sizes={}", sizes.join(","))?;
    writeln!(out, "label_entries={}", labels.entries)?;
    writeln!(out, "label_max_entries={}", labels.max_len)?;
    writeln!(out, "label_mean_entries={:.2}", labels.mean_len)?;
    writeln!(out, "rebuild_recommended={}", should_rebuild(&index, &RebuildPolicy::default()))?;
    Ok(())
}

fn micros(d: Duration) -> f64 {
    d.as_secs_f64() * 1e6
}

fn summary(times: &mut [Duration]) -> (f64, f64) {
    if times.is_empty() {
        return (0.0, 0.0);
    }
    times.sort_unstable();
    let mean = times.iter().map(|&d| micros(d)).sum::<f64>() / times.len() as f64;
    (mean, micros(times[times.len() / 2]))
}

fn bench(args: BenchArgs, out: &mut impl Write) -> Result<()> {
    let index = load_index(&args.index).with_context(|| format!("loading index {}", args.index.display()))?;
    let mut reader = IndexReader::open_path(&args.index)?;
    let live: Vec<VertexId> = (0..index.hierarchy().universe() as VertexId)
        .filter(|&v| index.hierarchy().is_live(v))
        .collect();
    let pairs: Vec<(VertexId, VertexId)> = if live.is_empty() {
        Vec::new()
    } else {
        generate::random_pairs(live.len(), args.queries, args.seed)
            .into_iter()
            .map(|(a, b)| (live[a as usize], live[b as usize]))
            .collect()
    };
    let top = index.hierarchy().top();
    let mut retrieval = Vec::with_capacity(pairs.len());
    let mut search = Vec::with_capacity(pairs.len());
    let (mut type1, mut type2) = (0, 0);
    let mut membership = [0usize; 3];
    for &(s, t) in &pairs {
        let started = Instant::now();
        let ls = reader.load_label(s, LabelDirection::Out)?;
        let lt = reader.load_label(t, LabelDirection::In)?;
        retrieval.push(started.elapsed());
        let started = Instant::now();
        let answer = islabel::query::answer(top, &ls, &lt, &QueryOptions::default());
        search.push(started.elapsed());
        match answer.kind {
            QueryType::Type1 => type1 += 1,
            QueryType::Type2 => type2 += 1,
        }
        let m = index.classify(s, t)?;
        membership[usize::from(m.source_in_top) + usize::from(m.target_in_top)] += 1;
    }
    let total: Vec<Duration> = retrieval.iter().zip(&search).map(|(a, b)| *a + *b).collect();
    let (ret_mean, ret_median) = summary(&mut retrieval);
    let (search_mean, search_median) = summary(&mut search);
    let (total_mean, total_median) = summary(&mut total.clone());
    writeln!(out, "queries={}", pairs.len())?;
    writeln!(out, "type1={type1}")?;
    writeln!(out, "type2={type2}")?;
    writeln!(out, "endpoints_in_top_none={}", membership[0])?;
    writeln!(out, "endpoints_in_top_one={}", membership[1])?;
    writeln!(out, "endpoints_in_top_both={}", membership[2])?;
    writeln!(out, "label_us_mean={ret_mean:.2}")?;
    writeln!(out, "label_us_median={ret_median:.2}")?;
    writeln!(out, "search_us_mean={search_mean:.2}")?;
    writeln!(out, "search_us_median={search_median:.2}")?;
    writeln!(out, "total_us_mean={total_mean:.2}")?;
    writeln!(out, "total_us_median={total_median:.2}")?;
    Ok(())
}

fn update(args: UpdateArgs, out: &mut impl Write) -> Result<()> {
    let mut index = load_index(&args.index).with_context(|| format!("loading index {}", args.index.display()))?;
    if let Some(spec) = &args.insert {
        let (u, edges) = input::parse_insert(spec)?;
        index.insert_vertex(u, &edges)?;
        writeln!(out, "inserted={u}")?;
    }
    if let Some(u) = args.delete {
        let stale = index.delete_vertex(u)?;
        writeln!(out, "deleted={u}")?;
        if stale {
            log::warn!("deleting {u} invalidated stored shortcuts; rebuild the index from the updated graph");
        }
    }
    save_index(&index, &args.index)?;
    let log = index.update_log();
    writeln!(out, "stale={}", index.is_stale())?;
    writeln!(out, "rebuild_required={}", index.is_stale())?;
    writeln!(out, "rebuild_recommended={}", should_rebuild(&index, &RebuildPolicy::default()))?;
    writeln!(out, "updates_inserted={}", log.inserted)?;
    writeln!(out, "updates_deleted={}", log.deleted)?;
    writeln!(out, "touched_labels={}", log.touched_labels)?;
    Ok(())
}

fn generate_graph(args: GenerateArgs, out: &mut impl Write) -> Result<()> {
    let graph = match args.model {
        Model::Uniform => generate::uniform(args.n, args.degree, args.max_weight, args.directed, args.seed),
        Model::Pa => {
            if args.directed {
                bail!("the preferential-attachment model is undirected");
            }
            generate::preferential_attachment(args.n, args.degree, args.max_weight, args.seed)
        }
    };
    let file = File::create(&args.output).with_context(|| format!("creating {}", args.output.display()))?;
    let mut w = BufWriter::new(file);
    let ids = islabel::IdMap::identity(graph.vertex_count());
    islabel::graph::write_edge_list(&graph, &ids, &mut w)?;
    w.flush()?;
    writeln!(out, "vertices={}", graph.vertex_count())?;
    writeln!(out, "edges={}", graph.edge_count())?;
    Ok(())
}
