//! `cfcol` command-line front end.
//!
//! Exit codes: 0 success, 1 a verification or bound check failed, 2 usage or
//! input error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use cfcol::bench::{parse_corpus, run_corpus, write_csv};
use cfcol::colouring::DEFAULT_EXACT_LIMIT;
use cfcol::io::{
    format_colouring, parse_colouring, parse_graph, parse_ordering, save_graph, GraphFormat,
};
use cfcol::reach::DEFAULT_SCOL_LIMIT;
use cfcol::{
    back_reach_profile, exact_chromatic, exact_scol, generate, greedy_cf_colouring,
    verify_colouring, Criterion, Error, GenSpec, Graph, Strategy, VertexOrdering,
};

#[derive(Parser)]
#[command(
    name = "cfcol",
    version,
    about = "Conflict-free colouring from strong colouring orderings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `4` or `3,5` or `8,0.5`.
        #[arg(long)]
        params: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "edgelist")]
        format: String,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Print the back-reach maximum of an ordering, or the exact scol value.
    #[command(group(ArgGroup::new("source").required(true).args(["order", "strategy", "exact"])))]
    Scol {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        strategy: Option<String>,
        #[arg(long)]
        exact: bool,
        #[arg(long, default_value_t = DEFAULT_SCOL_LIMIT)]
        limit: usize,
        /// Also print per-vertex reach-set sizes.
        #[arg(long)]
        verbose: bool,
    },
    /// Colour a graph left to right along an ordering.
    #[command(group(ArgGroup::new("source").required(true).args(["order", "strategy"])))]
    Colour {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        strategy: Option<String>,
        #[arg(long, default_value = "-")]
        out: String,
    },
    /// Check a colouring against a criterion.
    Verify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        colouring: String,
        /// proper, odd or conflict_free
        #[arg(long)]
        criterion: String,
    },
    /// Exact (proper) chromatic number of a variant.
    Exact {
        #[arg(long)]
        graph: String,
        /// proper, odd or conflict_free
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Run a corpus and write CSV.
    Bench {
        #[arg(long)]
        corpus: String,
        /// Comma-separated strategy names.
        #[arg(long)]
        strategies: String,
        #[arg(long, default_value_t = 0)]
        exact_up_to: usize,
        #[arg(long, default_value = "-")]
        out: String,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Error::from(e).context(path.to_string()))?;
    }
    Ok(text)
}

fn write_output(path: &str, text: &str) -> Result<(), Error> {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()?;
    } else {
        fs::write(path, text).map_err(|e| Error::from(e).context(path.to_string()))?;
    }
    Ok(())
}

fn read_graph(path: &str) -> Result<Graph, Error> {
    let text = read_input(path)?;
    parse_graph(&text, GraphFormat::detect(&text)).map_err(|e| e.context(path.to_string()))
}

fn ordering_for(
    g: &Graph,
    order: Option<&str>,
    strategy: Option<&str>,
) -> Result<VertexOrdering, Error> {
    match (order, strategy) {
        (Some(path), _) => {
            parse_ordering(&read_input(path)?, g.n()).map_err(|e| e.context(path.to_string()))
        }
        (None, Some(name)) => Ok(name.parse::<Strategy>()?.build(g)),
        (None, None) => Err(Error::Usage(
            "one of --order or --strategy is required".into(),
        )),
    }
}

/// Ok(true) for success, Ok(false) for a failed check.
fn dispatch(command: Command) -> Result<bool, Error> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            format,
            out,
        } => {
            let format: GraphFormat = format.parse()?;
            let g = generate(&GenSpec::parse(&family, &params, seed)?)?;
            write_output(&out, &save_graph(&g, format))?;
            Ok(true)
        }
        Command::Scol {
            graph,
            s,
            order,
            strategy,
            exact,
            limit,
            verbose,
        } => {
            let g = read_graph(&graph)?;
            let ord = if exact {
                exact_scol(&g, s, limit)?.1
            } else {
                ordering_for(&g, order.as_deref(), strategy.as_deref())?
            };
            let profile = back_reach_profile(&g, &ord, s)?;
            let mut text = format!("max={}\n", profile.max);
            if verbose {
                for (v, size) in profile.sizes.iter().enumerate() {
                    text.push_str(&format!("{} {size}\n", v + 1));
                }
            }
            write_output("-", &text)?;
            Ok(true)
        }
        Command::Colour {
            graph,
            order,
            strategy,
            out,
        } => {
            let g = read_graph(&graph)?;
            let ord = ordering_for(&g, order.as_deref(), strategy.as_deref())?;
            let col = greedy_cf_colouring(&g, &ord);
            write_output(&out, &format_colouring(&col))?;
            let summary = format!("colours={} bound={}", col.used(), col.palette());
            if out == "-" {
                eprintln!("{summary}");
            } else {
                println!("{summary}");
            }
            let valid = Criterion::ALL
                .iter()
                .all(|&c| verify_colouring(&g, &col, c).map(|v| v.ok).unwrap_or(false));
            Ok(valid && col.used() <= col.palette())
        }
        Command::Verify {
            graph,
            colouring,
            criterion,
        } => {
            let criterion: Criterion = criterion.parse()?;
            let g = read_graph(&graph)?;
            let col = parse_colouring(&read_input(&colouring)?)
                .map_err(|e| e.context(colouring.clone()))?;
            let verdict = verify_colouring(&g, &col, criterion)?;
            match verdict.witness {
                Some(w) if !verdict.ok => println!("fail witness={} {}", w + 1, verdict.detail),
                _ => println!("ok {}", verdict.detail),
            }
            Ok(verdict.ok)
        }
        Command::Exact {
            graph,
            variant,
            limit,
        } => {
            let variant: Criterion = variant.parse()?;
            let g = read_graph(&graph)?;
            let (value, _) = exact_chromatic(&g, variant, limit)?;
            println!("{value}");
            Ok(true)
        }
        Command::Bench {
            corpus,
            strategies,
            exact_up_to,
            out,
        } => {
            let strategies = strategies
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(str::parse)
                .collect::<Result<Vec<Strategy>, _>>()?;
            let text = read_input(&corpus)?;
            let base = if corpus == "-" {
                PathBuf::from(".")
            } else {
                Path::new(&corpus)
                    .parent()
                    .map(Path::to_path_buf)
                    .unwrap_or_default()
            };
            let entries = parse_corpus(&text, &base).map_err(|e| e.context(corpus.clone()))?;
            let records = run_corpus(&entries, &strategies, exact_up_to)?;
            let mut buf = Vec::new();
            write_csv(&records, &mut buf)?;
            write_output(&out, &String::from_utf8(buf).expect("csv is utf-8"))?;
            for r in records.iter().filter(|r| !r.passed()) {
                eprintln!("check failed: {} under {}", r.graph_id, r.strategy);
            }
            Ok(records.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
