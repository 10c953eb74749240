mod cache;
mod report;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use ramsey_trails::enumerate::{canonical_keys, value_over, RamseyTable, MAX_ENUM_ORDER};
use ramsey_trails::lower_bound::{check_certificate, witness};
use ramsey_trails::prover::{find_trail, validate_trace};
use ramsey_trails::solver::{longest_trail, MAX_SEARCH_ORDER};
use ramsey_trails::{canon, Graph};

use cache::Cache;
use report::RunReport;

#[derive(Parser)]
#[command(name = "ramsey-trails", version, about = "Ramsey numbers of trails")]
struct Cli {
    /// Print wall time to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute value(n) for n = 2..=max-n and the resulting R(T_k, T_k).
    Ramsey {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=MAX_ENUM_ORDER as u64))]
        max_n: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Neither read nor write the value cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Lower-bound witness graph for T_k.
    Witness {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        /// Check the certificate; exit 1 if it does not hold.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// For each graph6 line on k vertices, a trail with k vertices in G or its complement.
    FindTrail {
        /// Required vertex count of every input graph.
        #[arg(long)]
        k: Option<usize>,
        /// Read graph6 lines from this file instead of stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Longest trail of each graph6 line.
    LongestTrail {
        /// Work on the complement.
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// All graphs on n vertices up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=MAX_ENUM_ORDER as u64))]
        n: u64,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(cli.command);
    if cli.timing {
        eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match command {
        Command::Ramsey {
            max_n,
            jobs,
            format,
            no_cache,
        } => cmd_ramsey(&mut out, max_n as usize, jobs, format, no_cache)?,
        Command::Witness { k, verify, format } => cmd_witness(&mut out, k as usize, verify, format)?,
        Command::FindTrail { k, input, format } => cmd_find_trail(&mut out, k, input, format)?,
        Command::LongestTrail {
            complement,
            input,
            format,
        } => cmd_longest_trail(&mut out, complement, input, format)?,
        Command::Enumerate { n } => cmd_enumerate(&mut out, n as usize)?,
    };
    out.flush()?;
    Ok(code)
}

fn cmd_ramsey(out: &mut impl Write, max_n: usize, jobs: Option<usize>, format: Format, no_cache: bool) -> anyhow::Result<ExitCode> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .context("building the thread pool")?;
    let cache = if no_cache { None } else { Cache::locate() };
    let mut values = BTreeMap::new();
    for n in 2..=max_n {
        let cached = cache.as_ref().and_then(|c| c.get(n));
        let v = match cached {
            Some(v) => v,
            None => {
                let v = pool.install(|| canonical_keys(n).map(|keys| value_over(n, &keys)))?;
                if let Some(c) = &cache {
                    c.put(n, v);
                }
                v
            }
        };
        log::info!("value({n}) = {v}");
        values.insert(n, v);
    }
    let table = RamseyTable::from_values(values)?;
    match format {
        Format::Json => {
            let report = RunReport::new("ramsey", &table).param("max_n", max_n);
            writeln!(out, "{}", report.to_json())?;
        }
        Format::Text => {
            let ns: Vec<String> = table.values().keys().map(|n| n.to_string()).collect();
            let vs: Vec<String> = table.values().values().map(|v| v.to_string()).collect();
            let ks: Vec<String> = table.ramsey().keys().map(|k| k.to_string()).collect();
            let rs: Vec<String> = table.ramsey().values().map(|r| r.to_string()).collect();
            writeln!(out, "n: {}", ns.join(" "))?;
            writeln!(out, "value(n): {}", vs.join(" "))?;
            writeln!(out, "k: {}", ks.join(" "))?;
            writeln!(out, "R(T_k,T_k): {}", rs.join(" "))?;
            writeln!(
                out,
                "unresolved: k > {} at max-n {}",
                table.resolved_up_to(),
                max_n
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(out: &mut impl Write, k: usize, verify: bool, format: Format) -> anyhow::Result<ExitCode> {
    let cert = witness(k)?;
    let verified = if verify {
        Some(check_certificate(&cert)?)
    } else {
        None
    };
    match format {
        Format::Json => {
            let mut report = RunReport::new("witness", &cert).param("k", k).param("verify", verify);
            report.verified = verified;
            writeln!(out, "{}", report.to_json())?;
        }
        Format::Text => {
            writeln!(out, "{}", cert.graph.to_graph6())?;
            writeln!(out, "{}", serde_json::to_string(&cert)?)?;
            if let Some(ok) = verified {
                writeln!(out, "verified: {ok}")?;
            }
        }
    }
    Ok(if verified == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

/// Non-empty graph6 lines with their 1-based line numbers.
fn read_graphs(input: Option<PathBuf>) -> anyhow::Result<Vec<(usize, Graph)>> {
    let reader: Box<dyn BufRead> = match &input {
        Some(path) => Box::new(BufReader::new(
            File::open(path).with_context(|| format!("opening {}", path.display()))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(text).with_context(|| format!("line {}: malformed graph6 {text:?}", i + 1))?;
        graphs.push((i + 1, g));
    }
    Ok(graphs)
}

fn cmd_find_trail(out: &mut impl Write, k: Option<usize>, input: Option<PathBuf>, format: Format) -> anyhow::Result<ExitCode> {
    let graphs = read_graphs(input)?;
    for (line, g) in &graphs {
        if g.order() == 0 {
            bail!("line {line}: graph has no vertices");
        }
        if let Some(k) = k {
            if g.order() != k {
                bail!("line {line}: graph has {} vertices, expected {k}", g.order());
            }
        }
    }
    let mut failed = false;
    for (line, g) in &graphs {
        let trace = find_trail(g);
        let check = validate_trace(g, &trace);
        if let Err(e) = &check {
            eprintln!("line {line}: invalid trace: {e}");
            failed = true;
        }
        match format {
            Format::Json => {
                let report = RunReport::new("find-trail", &trace)
                    .param("k", g.order())
                    .param("graph6", g.to_graph6())
                    .verified(check.is_ok());
                writeln!(out, "{}", report.to_json())?;
            }
            Format::Text => {
                let vs: Vec<String> = trace.vertices.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{} {}", trace.side, vs.join(" "))?;
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_longest_trail(out: &mut impl Write, complement: bool, input: Option<PathBuf>, format: Format) -> anyhow::Result<ExitCode> {
    let graphs = read_graphs(input)?;
    for (line, g) in &graphs {
        if g.order() == 0 || g.order() > MAX_SEARCH_ORDER {
            bail!("line {line}: exact search needs 1..={MAX_SEARCH_ORDER} vertices, got {}", g.order());
        }
    }
    for (_, g) in &graphs {
        let target = if complement { g.complement() } else { g.clone() };
        let result = longest_trail(&target);
        match format {
            Format::Json => {
                let report = RunReport::new("longest-trail", &result)
                    .param("complement", complement)
                    .param("graph6", g.to_graph6());
                writeln!(out, "{}", report.to_json())?;
            }
            Format::Text => {
                let vs: Vec<String> = result.witness.vertices().iter().map(|v| v.to_string()).collect();
                writeln!(out, "{} {}", result.best_vertex_count, vs.join(" "))?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(out: &mut impl Write, n: usize) -> anyhow::Result<ExitCode> {
    for key in canonical_keys(n)? {
        writeln!(out, "{}", canon::graph_from_key(n, key).to_graph6())?;
    }
    Ok(ExitCode::SUCCESS)
}
