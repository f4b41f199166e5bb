//! `gallai` — batch command-line front end for the longest-path laboratory.
//!
//! Subcommands: `recognize`, `longest`, `intersect`, `verify`, `dominate`,
//! `hunt`, `gen`. Graphs come from graph6 lines (file or standard input),
//! an edge-list file, or a named fixture. Data goes to standard output,
//! diagnostics to standard error. Exit codes: 0 success, 1 usage error,
//! 2 input parse error, 3 a `verify` run produced a violated verdict or a
//! `hunt` found a counterexample.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gallai_core::codec::{self, CodecError};
use gallai_core::fixtures;
use gallai_core::generate::{derived_seed, GenSpec, GraphClass};
use gallai_core::graph::Graph;
use gallai_core::longest::{
    enumerate_longest_paths_capped, intersection_with, longest_path_order_with, EngineOptions,
    IntersectionMethod,
};
use gallai_core::recognizers::{find_induced_2k2, is_chordal, is_cochordal, split_partition};
use gallai_core::theorem::{
    connected_graphs_exhaustive, find_dominating_path, verify_theorem1_with, TheoremError,
    TheoremVerdict,
};

#[derive(Parser)]
#[command(
    name = "gallai",
    version,
    about = "Longest-path intersection laboratory for 2K2-free graphs",
    after_help = "Exit codes: 0 success, 1 usage error, 2 input parse error, \
                  3 violated verdict or counterexample found."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class verdicts with certificates: 2K2-free, split, chordal, cochordal
    Recognize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Longest-path order, optionally listing the longest paths
    Longest {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also enumerate and print the longest paths
        #[arg(long)]
        paths: bool,
    },
    /// Intersection of all longest paths
    Intersect {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check that every maximum-degree vertex lies on all longest paths
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Grow a dominating path by the 2K2-free extension rule
    Dominate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Scan graphs for empty longest-path intersections
    Hunt {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        engine: EngineArgs,
        /// Scan all connected graphs of order 1..=N instead of reading input
        #[arg(long, value_name = "N", conflicts_with_all = ["input", "fixture"])]
        exhaustive: Option<usize>,
        /// Skip graphs with more vertices than this
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
        /// Skip the first N input records (resume a previous scan)
        #[arg(long, value_name = "N", default_value_t = 0)]
        skip: usize,
    },
    /// Emit seeded random graphs from a class generator as graph6 lines
    Gen {
        /// Graph class: split, chordal, cochordal, twok2free, er
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        n: usize,
        /// Edge probability in [0, 1]
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of graphs; instance i uses the derived seed mix(seed, i)
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Read graphs from FILE, or '-' for standard input (the default)
    #[arg(long, value_name = "FILE", conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Use a named fixture as the single input graph
    #[arg(long, value_name = "NAME")]
    fixture: Option<String>,
    /// Format of --input data
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    input_format: InputFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// One graph6 record per line
    Graph6,
    /// A single graph: first line `n m`, then `m` lines `u v`
    Edges,
}

#[derive(Args)]
struct EngineArgs {
    /// Intersection method
    #[arg(long, value_enum, default_value_t = MethodArg::Enumeration)]
    method: MethodArg,
    /// Cap on enumerated longest paths; intersections fall back to the
    /// deletion method when it trips
    #[arg(long)]
    cap: Option<usize>,
    /// Use the subset DP up to this order, branch-and-bound beyond
    #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..=25))]
    dp_threshold: u64,
    /// Worker threads for batch processing (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
}

impl EngineArgs {
    fn options(&self) -> EngineOptions {
        EngineOptions {
            dp_threshold: self.dp_threshold as usize,
            enumeration_cap: self.cap,
        }
    }

    fn method(&self) -> IntersectionMethod {
        match self.method {
            MethodArg::Enumeration => IntersectionMethod::Enumeration,
            MethodArg::Deletion => IntersectionMethod::Deletion,
        }
    }

    fn install_pool(&self) {
        if let Some(workers) = self.workers {
            // a failed build means a pool already exists; keep going
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(workers.max(1))
                .build_global();
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enumeration,
    Deletion,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Prose, one block per graph
    Human,
    /// Line-oriented records with stable field order
    Machine,
}

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_FINDING: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

/// One input record: the graph or its parse failure.
type Record = Result<Graph, CodecError>;

fn read_records(input: &InputArgs) -> Result<Vec<Record>, String> {
    if let Some(name) = &input.fixture {
        let g = fixtures::fixture(name).map_err(|e| e.to_string())?;
        return Ok(vec![Ok(g)]);
    }
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => {
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            buf
        }
    };
    match input.input_format {
        InputFormat::Graph6 => Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(codec::parse_graph6)
            .collect()),
        InputFormat::Edges => Ok(vec![codec::parse_edge_list(&text)]),
    }
}

/// Applies `f` to the parsed records in parallel, prints the output blocks
/// in input order, reports parse and per-record failures to standard error,
/// and returns the exit code (`finding` turns any flagged record into
/// exit 3).
fn process_records<F>(records: Vec<Record>, f: F) -> u8
where
    F: Fn(usize, &Graph) -> Result<(String, bool), String> + Sync,
{
    let results: Vec<Result<(String, bool), String>> = records
        .par_iter()
        .enumerate()
        .map(|(i, rec)| match rec {
            Ok(g) => f(i, g),
            Err(e) => Err(e.to_string()),
        })
        .collect();
    let mut record_errors = false;
    let mut finding = false;
    for (i, res) in results.iter().enumerate() {
        match res {
            Ok((block, flagged)) => {
                print!("{block}");
                finding |= flagged;
            }
            Err(e) => {
                eprintln!("record {}: {e}", i + 1);
                record_errors = true;
            }
        }
    }
    if finding {
        EXIT_FINDING
    } else if record_errors {
        EXIT_PARSE
    } else {
        EXIT_OK
    }
}

fn fmt_set(vs: &[usize]) -> String {
    if vs.is_empty() {
        "-".to_string()
    } else {
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn fmt_braces(vs: &[usize]) -> String {
    format!(
        "{{{}}}",
        vs.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Recognize { input, output } => {
            let records = read_records(&input)?;
            Ok(process_records(records, |i, g| {
                Ok((recognize_block(i, g, output.format), false))
            }))
        }
        Command::Longest {
            input,
            engine,
            output,
            paths,
        } => {
            engine.install_pool();
            let opts = engine.options();
            let records = read_records(&input)?;
            Ok(process_records(records, |i, g| {
                Ok((longest_block(i, g, &opts, paths, output.format)?, false))
            }))
        }
        Command::Intersect {
            input,
            engine,
            output,
        } => {
            engine.install_pool();
            let opts = engine.options();
            let method = engine.method();
            let records = read_records(&input)?;
            Ok(process_records(records, |i, g| {
                Ok((intersect_block(i, g, method, &opts, output.format)?, false))
            }))
        }
        Command::Verify {
            input,
            engine,
            output,
        } => {
            engine.install_pool();
            let opts = engine.options();
            let records = read_records(&input)?;
            Ok(process_records(records, |i, g| {
                verify_block(i, g, &opts, output.format)
            }))
        }
        Command::Dominate { input, output } => {
            let records = read_records(&input)?;
            Ok(process_records(records, |i, g| {
                Ok((dominate_block(i, g, output.format), false))
            }))
        }
        Command::Hunt {
            input,
            engine,
            exhaustive,
            max_order,
            skip,
        } => hunt(input, engine, exhaustive, max_order, skip),
        Command::Gen {
            class,
            n,
            density,
            seed,
            count,
        } => {
            if !(0.0..=1.0).contains(&density) {
                return Err("density must lie in [0, 1]".to_string());
            }
            for i in 0..count {
                let g = GenSpec {
                    n,
                    density,
                    seed: derived_seed(seed, i as u64),
                    class,
                }
                .generate();
                println!("{}", codec::write_graph6(&g));
            }
            Ok(EXIT_OK)
        }
    }
}

fn recognize_block(i: usize, g: &Graph, format: Format) -> String {
    let witness = find_induced_2k2(g);
    let split = split_partition(g);
    let chordal = is_chordal(g);
    let cochordal = is_cochordal(g);
    match format {
        Format::Machine => {
            let mut line = format!(
                "graph={i} n={} m={} twok2free={}",
                g.order(),
                g.size(),
                witness.is_none()
            );
            if let Some(w) = &witness {
                line.push_str(&format!(" witness={},{},{},{}", w.a, w.b, w.c, w.d));
            }
            line.push_str(&format!(" split={}", split.is_some()));
            if let Some(p) = &split {
                line.push_str(&format!(
                    " clique={} independent={}",
                    fmt_set(&p.clique),
                    fmt_set(&p.independent)
                ));
            }
            line.push_str(&format!(" chordal={}", chordal.is_some()));
            if let Some(o) = &chordal {
                line.push_str(&format!(" peo={}", fmt_set(&o.order)));
            }
            line.push_str(&format!(" cochordal={cochordal}\n"));
            line
        }
        Format::Human => {
            let mut out = format!("graph {i}: {} vertices, {} edges\n", g.order(), g.size());
            match &witness {
                None => out.push_str("  2K2-free: yes\n"),
                Some(w) => out.push_str(&format!(
                    "  2K2-free: no (induced 2K2 on edges {}-{} and {}-{})\n",
                    w.a, w.b, w.c, w.d
                )),
            }
            match &split {
                Some(p) => out.push_str(&format!(
                    "  split: yes (clique {}, independent {})\n",
                    fmt_braces(&p.clique),
                    fmt_braces(&p.independent)
                )),
                None => out.push_str("  split: no\n"),
            }
            match &chordal {
                Some(o) => out.push_str(&format!(
                    "  chordal: yes (elimination order {})\n",
                    fmt_set(&o.order)
                )),
                None => out.push_str("  chordal: no\n"),
            }
            out.push_str(&format!(
                "  cochordal: {}\n",
                if cochordal { "yes" } else { "no" }
            ));
            out
        }
    }
}

fn longest_block(
    i: usize,
    g: &Graph,
    opts: &EngineOptions,
    list_paths: bool,
    format: Format,
) -> Result<String, String> {
    if list_paths {
        let cap = opts.enumeration_cap.unwrap_or(usize::MAX);
        let e = enumerate_longest_paths_capped(g, cap, opts).map_err(|e| e.to_string())?;
        let order = e.paths.first().map_or(0, |p| p.order());
        let count = if e.complete {
            e.paths.len().to_string()
        } else {
            format!(">{}", e.paths.len())
        };
        Ok(match format {
            Format::Machine => {
                let mut out = format!("graph={i} order={order} count={count}\n");
                for p in &e.paths {
                    out.push_str(&format!("graph={i} path={p}\n"));
                }
                out
            }
            Format::Human => {
                let mut out = format!("graph {i}: longest order {order}, {count} longest paths\n");
                for p in &e.paths {
                    out.push_str(&format!("  {p}\n"));
                }
                out
            }
        })
    } else {
        let order = longest_path_order_with(g, opts).map_err(|e| e.to_string())?;
        Ok(match format {
            Format::Machine => format!("graph={i} order={order} count=-\n"),
            Format::Human => format!("graph {i}: longest order {order}\n"),
        })
    }
}

fn intersect_block(
    i: usize,
    g: &Graph,
    method: IntersectionMethod,
    opts: &EngineOptions,
    format: Format,
) -> Result<String, String> {
    let rep = intersection_with(g, method, opts).map_err(|e| e.to_string())?;
    let count = rep
        .path_count
        .map_or_else(|| "-".to_string(), |c| c.to_string());
    Ok(match format {
        Format::Machine => {
            let mut out = format!(
                "graph={i} order={} count={count} method={}\n",
                rep.longest_order, rep.method
            );
            for v in &rep.intersection {
                out.push_str(&format!("graph={i} vertex={v}\n"));
            }
            out
        }
        Format::Human => format!(
            "graph {i}: longest order {}, intersection {} ({} method)\n",
            rep.longest_order,
            fmt_braces(&rep.intersection),
            rep.method
        ),
    })
}

fn verify_block(
    i: usize,
    g: &Graph,
    opts: &EngineOptions,
    format: Format,
) -> Result<(String, bool), String> {
    let rep = verify_theorem1_with(g, opts).map_err(|e| e.to_string())?;
    let block = match format {
        Format::Machine => {
            let mut line = format!("graph={i} verdict={}", rep.verdict);
            line.push_str(&format!(" delta={}", fmt_set(&rep.delta_vertices)));
            line.push_str(&format!(" intersection={}", fmt_set(&rep.intersection)));
            if let Some(w) = &rep.two_k2 {
                line.push_str(&format!(" witness={},{},{},{}", w.a, w.b, w.c, w.d));
            }
            if let Some(p) = &rep.witness_path {
                line.push_str(&format!(" missingpath={p}"));
            }
            line.push('\n');
            line
        }
        Format::Human => match rep.verdict {
            TheoremVerdict::Holds => format!(
                "graph {i}: holds — max-degree vertices {} all lie in the intersection {}\n",
                fmt_braces(&rep.delta_vertices),
                fmt_braces(&rep.intersection)
            ),
            TheoremVerdict::NotApplicable => match &rep.two_k2 {
                Some(w) => format!(
                    "graph {i}: not applicable — induced 2K2 on edges {}-{} and {}-{}\n",
                    w.a, w.b, w.c, w.d
                ),
                None => format!("graph {i}: not applicable — the graph has no edges\n"),
            },
            TheoremVerdict::Violated => format!(
                "graph {i}: VIOLATED — max-degree vertices {}, intersection {}, \
                 longest path {} misses a max-degree vertex\n",
                fmt_braces(&rep.delta_vertices),
                fmt_braces(&rep.intersection),
                rep.witness_path
                    .as_ref()
                    .map_or_else(|| "?".to_string(), |p| p.to_string())
            ),
        },
    };
    Ok((block, rep.verdict == TheoremVerdict::Violated))
}

fn dominate_block(i: usize, g: &Graph, format: Format) -> String {
    match (find_dominating_path(g), format) {
        (Ok(p), Format::Machine) => {
            format!("graph={i} status=ok path={p} order={}\n", p.order())
        }
        (Ok(p), Format::Human) => {
            format!("graph {i}: dominating path {p} (order {})\n", p.order())
        }
        (Err(TheoremError::NoEdges), Format::Machine) => {
            format!("graph={i} status=no-edges\n")
        }
        (Err(TheoremError::NoEdges), Format::Human) => {
            format!("graph {i}: no edges, nothing to dominate\n")
        }
        (
            Err(TheoremError::Unconnectable {
                path_edge,
                missed,
                witness,
            }),
            Format::Machine,
        ) => {
            format!(
                "graph={i} status=not-2k2-free pathedge={},{} missed={},{} witness={},{},{},{}\n",
                path_edge.0,
                path_edge.1,
                missed.0,
                missed.1,
                witness.a,
                witness.b,
                witness.c,
                witness.d
            )
        }
        (
            Err(TheoremError::Unconnectable {
                path_edge,
                missed,
                witness,
            }),
            Format::Human,
        ) => {
            format!(
                "graph {i}: not 2K2-free — edge {}-{} cannot reach path edge {}-{} \
                 (witness {},{},{},{})\n",
                missed.0,
                missed.1,
                path_edge.0,
                path_edge.1,
                witness.a,
                witness.b,
                witness.c,
                witness.d
            )
        }
        (Err(e), _) => format!("graph {i}: error: {e}\n"),
    }
}

fn hunt(
    input: InputArgs,
    engine: EngineArgs,
    exhaustive: Option<usize>,
    max_order: Option<usize>,
    skip: usize,
) -> Result<u8, String> {
    engine.install_pool();
    let opts = engine.options();

    let records: Vec<Record> = match exhaustive {
        Some(bound) => {
            if bound > 7 {
                return Err(
                    "exhaustive mode is capped at order 7; stream larger orders as graph6"
                        .to_string(),
                );
            }
            (1..=bound)
                .flat_map(connected_graphs_exhaustive)
                .map(Ok)
                .collect()
        }
        None => read_records(&input)?,
    };

    let mut scanned = 0usize;
    let mut skipped = 0usize;
    let mut found = 0usize;
    let mut parse_errors = false;

    // chunked so large streams keep bounded memory and parallel workers busy
    for (chunk_idx, chunk) in records[skip.min(records.len())..].chunks(8192).enumerate() {
        let verdicts: Vec<Result<Option<bool>, &CodecError>> = chunk
            .par_iter()
            .map(|rec| match rec {
                Err(e) => Err(e),
                Ok(g) => {
                    if g.order() == 0
                        || max_order.is_some_and(|b| g.order() > b)
                        || !g.is_connected()
                    {
                        return Ok(None);
                    }
                    let rep = intersection_with(g, IntersectionMethod::Deletion, &opts)
                        .expect("nonempty graph");
                    Ok(Some(rep.intersection.is_empty()))
                }
            })
            .collect();
        for (offset, verdict) in verdicts.iter().enumerate() {
            match verdict {
                Err(e) => {
                    eprintln!("record {}: {e}", skip + chunk_idx * 8192 + offset + 1);
                    parse_errors = true;
                }
                Ok(None) => skipped += 1,
                Ok(Some(empty)) => {
                    scanned += 1;
                    if *empty {
                        found += 1;
                        let g = chunk[offset].as_ref().expect("verdict implies parse ok");
                        println!("{}", codec::write_graph6(g));
                    }
                }
            }
        }
    }
    println!("scanned={scanned} skipped={skipped} found={found}");
    Ok(if found > 0 {
        EXIT_FINDING
    } else if parse_errors {
        EXIT_PARSE
    } else {
        EXIT_OK
    })
}
