//! Command-line front end.
//!
//! Exit codes: `analyze` returns 0 with a certificate and 1 without one;
//! `scan` returns 1 when it finds a hypomorphic non-isomorphic group on at
//! least three vertices; every error returns 2.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::format::{emit_graph6, parse_edge_list, parse_graph6};
use crate::graph::{canonical_form, generate, Family, Graph};
use crate::reconstruction::{brute_force_oracle, deck, enumerate_graphs, reconstruct_from_card, MAX_ENUMERATION_ORDER};
use crate::report::{analyze, AnalyzeOptions};

#[derive(Parser, Debug)]
#[command(name = "flagrecon", version, about = "Reconstructibility certificates for graphs via flag complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// graph6 if the input is a single token, otherwise an edge list
    Auto,
    G6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full analysis of one graph with a reconstructibility certificate
    Analyze {
        /// Input file; standard input when omitted or `-`
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
        /// Write the JSON report here (`-` for standard output)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Fail if the flag complex has a simplex above this dimension
        #[arg(long)]
        max_dim: Option<usize>,
        /// Include per-stage timings in the report
        #[arg(long)]
        timings: bool,
    },
    /// Card multiset: one `graph6 multiplicity` line per isomorphism class
    Deck {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
    },
    /// Recover a graph from one vertex-deleted card
    Reconstruct {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
        /// Dimension n of the homology manifold
        #[arg(long)]
        dim: usize,
    },
    /// Search a graph6 corpus (or all graphs of one order) for hypomorphic
    /// non-isomorphic pairs
    Scan {
        corpus: Option<PathBuf>,
        /// Order of the internally enumerated graphs when no corpus is given
        #[arg(long, default_value_t = MAX_ENUMERATION_ORDER)]
        max_n: usize,
    },
    /// Emit a named graph as graph6
    Gen {
        /// cycle | path | complete | complete_multipartite | cross_polytope |
        /// torus_grid | icosahedron
        family: String,
        params: Vec<String>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Io(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: Option<&PathBuf>) -> CliResult<String> {
        match path {
            Some(p) if p.as_os_str() != "-" => {
                std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
            }
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn out(&mut self, s: &str) -> CliResult<()> {
        self.stdout.write_all(s.as_bytes()).map_err(|e| CliError::Io(format!("stdout: {e}")))
    }
}

fn parse_input(text: &str, format: InputFormat) -> CliResult<(Graph, &'static str)> {
    let format = match format {
        InputFormat::Auto => {
            let mut tokens = text.split_whitespace();
            match (tokens.next(), tokens.next()) {
                (Some(t), None) if !t.starts_with('#') => InputFormat::G6,
                _ => InputFormat::Edges,
            }
        }
        f => f,
    };
    Ok(match format {
        InputFormat::G6 => (parse_graph6(text.trim())?, "g6"),
        _ => (parse_edge_list(text)?, "edges"),
    })
}

#[derive(Serialize)]
struct ScanReport {
    classes_scanned: usize,
    duplicates_skipped: usize,
    hypomorphic_groups: Vec<Vec<String>>,
}

fn run_command(cmd: Command, io: &mut Io<'_>) -> CliResult<i32> {
    match cmd {
        Command::Analyze { input, format, json, max_dim, timings } => {
            let text = io.read_input(input.as_ref())?;
            let (g, fmt) = parse_input(&text, format)?;
            let report = analyze(&g, fmt, &AnalyzeOptions { dimension_cap: max_dim, timings })?;
            match json {
                Some(p) if p.as_os_str() == "-" => io.out(&report.to_json())?,
                Some(p) => {
                    std::fs::write(&p, report.to_json()).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
                    io.out(&report.summary())?;
                }
                None => io.out(&report.summary())?,
            }
            if let Some(c) = &report.coxeter.cross_check {
                if !c.consistent {
                    return Err(CliError::Io(format!(
                        "internal inconsistency: equivalent conditions disagree (vpd={}, sphere={}, vanishing={})",
                        c.virtual_pd, c.sphere, c.vanishing
                    )));
                }
            }
            Ok(if report.is_certified() { 0 } else { 1 })
        }
        Command::Deck { input, format } => {
            let text = io.read_input(input.as_ref())?;
            let (g, _) = parse_input(&text, format)?;
            let d = deck(&g)?;
            for (card, mult) in d.key() {
                io.out(&format!("{} {mult}\n", emit_graph6(&card.to_graph())?))?;
            }
            Ok(0)
        }
        Command::Reconstruct { input, format, dim } => {
            let text = io.read_input(input.as_ref())?;
            let (card, _) = parse_input(&text, format)?;
            let g = reconstruct_from_card(&card, dim)?;
            io.out(&format!("{}\n", emit_graph6(&g)?))?;
            Ok(0)
        }
        Command::Scan { corpus, max_n } => {
            let (graphs, duplicates) = match corpus {
                Some(path) => {
                    let text = io.read_input(Some(&path))?;
                    let mut seen = BTreeSet::new();
                    let mut graphs = Vec::new();
                    let mut duplicates = 0;
                    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
                        let g = parse_graph6(line.trim())
                            .map_err(|e| Error::Parse { line: i + 1, message: e.to_string() })?;
                        if seen.insert(canonical_form(&g)) {
                            graphs.push(g);
                        } else {
                            duplicates += 1;
                        }
                    }
                    (graphs, duplicates)
                }
                None => (enumerate_graphs(max_n)?, 0),
            };
            let groups = brute_force_oracle(&graphs);
            let counterexample = groups.iter().any(|grp| graphs[grp[0]].order() >= 3);
            let hypomorphic_groups = groups
                .iter()
                .map(|grp| grp.iter().map(|&i| emit_graph6(&graphs[i])).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let report =
                ScanReport { classes_scanned: graphs.len(), duplicates_skipped: duplicates, hypomorphic_groups };
            io.out(&format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")))?;
            Ok(if counterexample { 1 } else { 0 })
        }
        Command::Gen { family, params } => {
            let g = generate(&Family::parse(&family, &params)?)?;
            io.out(&format!("{}\n", emit_graph6(&g)?))?;
            Ok(0)
        }
    }
}

/// Run the CLI with explicit streams; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut io = Io { stdin, stdout };
    match run_command(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
