//! Command-line front end. Graphs travel as edge lists, everything else as JSON.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hermspec::oracle::{build_census, dhs_bruteforce, enumeration_cap, verify_theorem, Theorem};
use hermspec::rank2dhs::{cor513_is_dhs, cor513_sweep, is_dhs_rank2, mates_rank2, table_knn, table_label, TableRow};
use hermspec::spectral::{char_poly_of, hermitian_matrix, rank_of, spectrum_json, spectrum_of};
use hermspec::structure::classify_rank2;
use hermspec::switching::{apply_four_way, are_switching_equivalent, GaugePartition};
use hermspec::{Error, Family, MixedGraph};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "hermspec", version, about = "Hermitian spectra of mixed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphArg {
    /// Edge-list file, or `-` for standard input.
    graph: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial and eigenvalues.
    Spectrum {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        pretty: bool,
    },
    /// Exact characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Exact rank of the Hermitian adjacency matrix.
    Rank {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Reverse every arc.
    Converse {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Apply a four-way switching.
    Switch {
        #[command(flatten)]
        input: GraphArg,
        /// Classes and their vertices, e.g. "1:0,3 i:1 -1:2"; unlisted vertices are in class 1.
        #[arg(long, allow_hyphen_values = true)]
        gauge: String,
    },
    /// Decide switching equivalence, with a witness.
    Equiv {
        first: String,
        second: String,
        /// Allow a relabeling of the second graph.
        #[arg(long)]
        iso: bool,
    },
    /// Classify a graph of rank 2.
    Classify {
        #[command(flatten)]
        input: GraphArg,
    },
    /// All rank-2 forms with the given edge and vertex counts.
    Mates {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        vertices: usize,
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Whether the graph is determined by its Hermitian spectrum.
    Dhs {
        #[command(flatten)]
        input: GraphArg,
    },
    /// Mates of K_{n,n} for n = 2..max.
    Table {
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
        #[arg(long, conflicts_with_all = ["pretty", "format"])]
        markdown: bool,
        #[arg(long, conflicts_with = "format")]
        pretty: bool,
    },
    /// DHS decision for C3(n-a, n, n+a).
    Cor513 {
        #[arg(long, requires = "a", conflicts_with = "sweep")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        a: Option<usize>,
        /// Check that both deciders agree for a = 1..=AMAX.
        #[arg(long, value_name = "AMAX")]
        sweep: Option<usize>,
    },
    /// Bucket all graphs on n vertices by characteristic polynomial.
    Census {
        #[arg(long)]
        n: usize,
        /// Write the JSON lines here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Check a theorem exhaustively or on samples.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
    },
    /// Generate a named family.
    Gen {
        /// One of complete_bipartite, c3, path, cycle, directed_cycle, star, k4_minus,
        /// complete, odd_triangle, even_triangle.
        family: String,
        params: Vec<usize>,
        /// Add isolated vertices.
        #[arg(long, default_value_t = 0)]
        isolated: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Json,
    Markdown,
    Pretty,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs the command line `argv` (program name first), reading `-` from standard input.
pub fn run(argv: &[String]) -> (i32, String) {
    run_with_stdin(argv, &mut std::io::stdin())
}

/// As [`run`], with an explicit source for `-`.
pub fn run_with_stdin(argv: &[String], stdin: &mut dyn Read) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(out) => (0, out),
        Err(Failure::Usage(msg)) => (2, format!("error: {msg}\n")),
        Err(Failure::Domain(msg)) => (1, format!("error: {msg}\n")),
    }
}

fn read_graph(path: &str, stdin: &mut dyn Read) -> std::result::Result<MixedGraph, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Failure::Domain(format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Domain(format!("reading {path}: {e}")))?
    };
    Ok(MixedGraph::parse_edge_list(&text)?)
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Outcome {
    match command {
        Command::Spectrum { input, pretty } => {
            let d = read_graph(&input.graph, stdin)?;
            if pretty {
                let mut out = format!("charpoly: {}\neigenvalues:\n", char_poly_of(&d));
                for l in spectrum_of(&d).eigenvalues() {
                    writeln!(out, "  {l:.10}").expect("string write");
                }
                return Ok(out);
            }
            Ok(line(spectrum_json(&hermitian_matrix(&d))))
        }
        Command::Charpoly { input } => {
            let d = read_graph(&input.graph, stdin)?;
            let p = char_poly_of(&d);
            Ok(line(json!({"n": d.n(), "charpoly": p.to_json(), "text": p.to_string()})))
        }
        Command::Rank { input } => {
            let d = read_graph(&input.graph, stdin)?;
            Ok(line(json!({"n": d.n(), "rank": rank_of(&d)})))
        }
        Command::Converse { input } => Ok(read_graph(&input.graph, stdin)?.converse().to_edge_list()),
        Command::Switch { input, gauge } => {
            let d = read_graph(&input.graph, stdin)?;
            let g = GaugePartition::parse(&gauge, d.n())?;
            Ok(apply_four_way(&d, &g)?.to_edge_list())
        }
        Command::Equiv { first, second, iso } => {
            if first == "-" && second == "-" {
                return Err(Failure::Usage("only one graph can come from standard input".into()));
            }
            let d1 = read_graph(&first, stdin)?;
            let d2 = read_graph(&second, stdin)?;
            let out = match are_switching_equivalent(&d1, &d2, iso)? {
                Some(w) => json!({
                    "equivalent": true,
                    "gauge": w.gauge.to_string(),
                    "converse": w.converse,
                    "perm": w.perm,
                }),
                None => json!({"equivalent": false}),
            };
            Ok(line(out))
        }
        Command::Classify { input } => {
            let d = read_graph(&input.graph, stdin)?;
            Ok(line(classify_rank2(&d)?.to_json()))
        }
        Command::Mates { edges, vertices, json: _, pretty } => {
            if edges == 0 || vertices < 2 {
                return Err(Failure::Usage("need --edges >= 1 and --vertices >= 2".into()));
            }
            let set = mates_rank2(edges, vertices);
            if pretty {
                let mut out = format!("{edges} edges on {vertices} vertices:\n");
                for m in &set.mates {
                    writeln!(out, "  {}", table_label(m)).expect("string write");
                }
                return Ok(out);
            }
            Ok(line(set.to_json()))
        }
        Command::Dhs { input } => dhs(&read_graph(&input.graph, stdin)?),
        Command::Table { max, format, markdown, pretty } => {
            if max < 2 {
                return Err(Failure::Usage("--max must be at least 2".into()));
            }
            let format = if markdown {
                TableFormat::Markdown
            } else if pretty {
                TableFormat::Pretty
            } else {
                format
            };
            Ok(render_table(&table_knn(max), format))
        }
        Command::Cor513 { n, a, sweep } => match (n, a, sweep) {
            (Some(n), Some(a), None) => Ok(line(cor513_is_dhs(n, a)?.to_json())),
            (None, None, Some(amax)) => {
                let rows = cor513_sweep(amax)?;
                let rows: Vec<Value> = rows.iter().map(|(a, d)| json!({"a": a, "dhs": d})).collect();
                Ok(line(json!({"amax": amax, "deciders_agree": true, "rows": rows})))
            }
            _ => Err(Failure::Usage("cor513 needs --n and --a, or --sweep".into())),
        },
        Command::Census { n, out } => {
            let census = build_census(n)?;
            let text = census.to_json_lines();
            match out {
                None => Ok(text),
                Some(path) => {
                    fs::write(&path, text).map_err(|e| Failure::Domain(format!("writing {path}: {e}")))?;
                    Ok(line(json!({"n": n, "graphs": census.total(), "classes": census.classes.len(), "out": path})))
                }
            }
        }
        Command::Verify { theorem, n } => {
            let t: Theorem = theorem.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let report = verify_theorem(t, n)?;
            if report.passed() {
                Ok(line(report.to_json()))
            } else {
                Err(Failure::Domain(report.to_json().to_string()))
            }
        }
        Command::Gen { family, params, isolated } => {
            let f = Family::from_args(&family, &params).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(f.generate()?.with_isolated(isolated).to_edge_list())
        }
    }
}

fn dhs(d: &MixedGraph) -> Outcome {
    if let Some(form) = classify_rank2(d)?.form() {
        let (dhs, set) = is_dhs_rank2(&form);
        let mates: Vec<Value> = set.mates.iter().filter(|m| **m != form).map(|m| m.to_json()).collect();
        return Ok(line(json!({"method": "rank2", "form": form.to_json(), "dhs": dhs, "mates": mates})));
    }
    if d.n() > enumeration_cap() {
        return Err(Failure::Domain(format!(
            "DHS is decided for rank-2 graphs or by enumeration up to {} vertices; this graph has rank {} and {} vertices",
            enumeration_cap(),
            rank_of(d),
            d.n()
        )));
    }
    let r = dhs_bruteforce(d)?;
    let mates: Vec<String> = r.mates.iter().map(MixedGraph::to_edge_list).collect();
    Ok(line(json!({"method": "bruteforce", "dhs": r.dhs, "cospectral": r.cospectral, "mates": mates})))
}

/// Renders table rows. Output depends only on the rows.
pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Json => line(Value::Array(rows.iter().map(TableRow::to_json).collect())),
        TableFormat::Markdown => {
            let mut out = String::from("| graph | cospectral mates |\n|---|---|\n");
            for r in rows {
                writeln!(out, "| {} | {} |", r.graph_label(), r.mates_label()).expect("string write");
            }
            out
        }
        TableFormat::Pretty => {
            let width = rows.iter().map(|r| r.graph_label().len()).max().unwrap_or(0).max(5);
            let mut out = format!("{:<width$}  cospectral mates\n", "graph");
            for r in rows {
                writeln!(out, "{:<width$}  {}", r.graph_label(), r.mates_label()).expect("string write");
            }
            out
        }
    }
}
