//! `twodom`: command-line front end for the 2-domination toolkit.
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when an exact
//! solver exhausts its node budget.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use twodom_core::harness::{scan, GraphClass, ScanSpec};
use twodom_core::invariants::{
    annihilation, conjecture_check_with_budget, gamma2_branch_and_bound_with_budget, gamma2_bruteforce,
    gamma2_cactus, gamma2_with_budget, DEFAULT_NODE_BUDGET,
};
use twodom_core::reductions::{reduce_trace_with, verify_step_with_budget, ReduceOptions};
use twodom_core::structure::{cycle_reports, is_bipartite, is_cactus, sun_free_hypotheses};
use twodom_core::{Error, FamilyParams, Graph};

#[derive(Debug, Parser)]
#[command(name = "twodom", version, about = "Exact 2-domination and annihilation numbers")]
struct Cli {
    /// Report encoding; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendChoice {
    Auto,
    Bruteforce,
    BranchAndBound,
    CactusDp,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact 2-domination number with a witness set.
    Gamma2 {
        /// Edge-list file, or `-` for stdin.
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        backend: BackendChoice,
        /// Node budget for branch and bound.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Annihilation number with the canonical annihilation set.
    Annihilation {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Compares γ₂ with a + 1.
    Check {
        #[arg(default_value = "-")]
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Prints a member of the cycle-and-hub family as an edge list.
    GenFamily {
        t: usize,
        /// One cycle parameter per cycle.
        ks: Vec<usize>,
    },
    /// Applies reduction rules until K₂ or until none applies.
    Reduce {
        #[arg(default_value = "-")]
        file: PathBuf,
        /// Stop at the first tree or cycle.
        #[arg(long)]
        stop_at_base: bool,
        /// Check every step's inequalities exactly.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Scans random instances of a graph class for violations of γ₂ ≤ a + 1.
    Scan {
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 18)]
        n_max: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Family member `t:k1,...,kt` appended to the scan; repeatable.
        #[arg(long)]
        inject: Vec<String>,
        /// Record per-instance runtimes (makes output non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Cactus structure: cycles, exit vertices, suns and class hypotheses.
    Structure {
        #[arg(default_value = "-")]
        file: PathBuf,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_budget() => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_graph(path: &PathBuf) -> CliResult<Graph> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: name.clone(), source })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?
    };
    Ok(Graph::parse_edge_list(&text)?)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_rows<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("rows serialize");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn run(cli: Cli) -> CliResult<String> {
    let format = cli.format;
    match cli.command {
        Command::Gamma2 { file, backend, budget } => {
            let g = read_graph(&file)?;
            let cert = match backend {
                BackendChoice::Auto => gamma2_with_budget(&g, budget)?,
                BackendChoice::Bruteforce => gamma2_bruteforce(&g)?,
                BackendChoice::BranchAndBound => gamma2_branch_and_bound_with_budget(&g, budget)?,
                BackendChoice::CactusDp => gamma2_cactus(&g)?,
            };
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&cert),
                Format::Text => format!(
                    "gamma2 {} backend {} witness {}\n",
                    cert.gamma2,
                    cert.backend,
                    join(&cert.witness, " ")
                ),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        gamma2: usize,
                        backend: String,
                        witness: String,
                    }
                    csv_rows(&[Row { gamma2: cert.gamma2, backend: cert.backend.to_string(), witness: join(&cert.witness, " ") }])
                }
            })
        }
        Command::Annihilation { file } => {
            let g = read_graph(&file)?;
            let cert = annihilation(&g);
            let d_star = cert.d_star.map_or("-".to_string(), |d| d.to_string());
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&cert),
                Format::Text => format!(
                    "a {} degree_sum {} m {} d_star {} set {}\n",
                    cert.a,
                    cert.degree_sum,
                    g.m(),
                    d_star,
                    join(&cert.canonical_set, " ")
                ),
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        a: usize,
                        degree_sum: usize,
                        d_star: String,
                        canonical_set: String,
                    }
                    csv_rows(&[Row { a: cert.a, degree_sum: cert.degree_sum, d_star, canonical_set: join(&cert.canonical_set, " ") }])
                }
            })
        }
        Command::Check { file, budget } => {
            let g = read_graph(&file)?;
            let rec = conjecture_check_with_budget(&g, budget)?;
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&rec),
                Format::Csv => csv_rows(&[rec]),
                Format::Text => format!("gamma2 {} a {} gap {} holds {}\n", rec.gamma2, rec.a, rec.gap, rec.holds),
            })
        }
        Command::GenFamily { t, ks } => {
            let params = FamilyParams::new(t, ks)?;
            let g = params.generate();
            Ok(match format.unwrap_or(Format::Text) {
                Format::Text => g.to_edge_list(),
                Format::Json => {
                    #[derive(Serialize)]
                    struct Member<'a> {
                        name: String,
                        params: &'a FamilyParams,
                        n: usize,
                        m: usize,
                        closed_a: usize,
                        closed_gamma2: usize,
                        closed_gap: usize,
                        graph: &'a Graph,
                    }
                    json(&Member {
                        name: params.to_string(),
                        params: &params,
                        n: g.n(),
                        m: g.m(),
                        closed_a: params.closed_a(),
                        closed_gamma2: params.closed_gamma2(),
                        closed_gap: params.closed_gap(),
                        graph: &g,
                    })
                }
                Format::Csv => {
                    let edges: Vec<_> = g.edges().collect();
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["u", "v"]).expect("in-memory writer");
                    for (u, v) in edges {
                        w.write_record([u.to_string(), v.to_string()]).expect("in-memory writer");
                    }
                    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
                }
            })
        }
        Command::Reduce { file, stop_at_base, verify, budget } => {
            let g = read_graph(&file)?;
            if !g.is_connected() || g.n() < 2 {
                return Err(CliError::Usage("reduce needs a connected graph on at least two vertices".into()));
            }
            let trace = reduce_trace_with(&g, ReduceOptions { stop_at_base });
            let checks = if verify {
                let graphs = trace.graphs()?;
                trace
                    .steps
                    .iter()
                    .enumerate()
                    .map(|(i, s)| verify_step_with_budget(&graphs[i], s, &graphs[i + 1], budget))
                    .collect::<Result<Vec<_>, _>>()?
            } else {
                Vec::new()
            };
            Ok(match format.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut out = trace.to_text();
                    if verify {
                        let passed = checks.iter().filter(|c| c.passed()).count();
                        out.push_str(&format!("verified {passed}/{}\n", checks.len()));
                    }
                    out
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct Out<'a, T, V> {
                        trace: &'a T,
                        #[serde(skip_serializing_if = "Vec::is_empty")]
                        verification: Vec<V>,
                    }
                    json(&Out { trace: &trace, verification: checks })
                }
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        step: usize,
                        rule: String,
                        anchors: String,
                        f_before: usize,
                        f_after: usize,
                        offset: String,
                        passed: String,
                    }
                    let rows: Vec<Row> = trace
                        .steps
                        .iter()
                        .enumerate()
                        .map(|(i, s)| Row {
                            step: i,
                            rule: s.rule.to_string(),
                            anchors: join(s.anchors.iter().map(|a| format!("{}={}", a.role, a.id)), " "),
                            f_before: s.f_before,
                            f_after: s.f_after,
                            offset: s.offset.map_or("unknown".into(), |o| o.to_string()),
                            passed: checks.get(i).map_or(String::new(), |c| c.passed().to_string()),
                        })
                        .collect();
                    csv_rows(&rows)
                }
            })
        }
        Command::Scan { class, count, n_min, n_max, budget, inject, timings } => {
            let class: GraphClass = class.parse()?;
            let mut spec = ScanSpec::new(class, n_min, n_max, count, cli.seed);
            spec.solver_budget = budget;
            spec.timings = timings;
            spec.inject = inject.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            let report = scan(&spec)?;
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => {
                    let mut s = report.to_json();
                    s.push('\n');
                    s
                }
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
            })
        }
        Command::Structure { file } => {
            let g = read_graph(&file)?;
            #[derive(Serialize)]
            struct Report {
                n: usize,
                m: usize,
                connected: bool,
                cactus: bool,
                bipartite: bool,
                cycles: Vec<twodom_core::CycleReport>,
                hypotheses: twodom_core::structure::SunFreeHypotheses,
            }
            let cactus = is_cactus(&g);
            let report = Report {
                n: g.n(),
                m: g.m(),
                connected: g.is_connected(),
                cactus,
                bipartite: is_bipartite(&g),
                cycles: if cactus { cycle_reports(&g)? } else { Vec::new() },
                hypotheses: sun_free_hypotheses(&g),
            };
            Ok(match format.unwrap_or(Format::Json) {
                Format::Json => json(&report),
                Format::Text => {
                    let mut out = format!(
                        "n {} m {} connected {} cactus {} bipartite {}\n",
                        report.n, report.m, report.connected, report.cactus, report.bipartite
                    );
                    for c in &report.cycles {
                        out.push_str(&format!(
                            "cycle {} length {} exits {} outer {} sun {}\n",
                            join(&c.cycle, "-"),
                            c.length,
                            if c.exit_vertices.is_empty() { "-".into() } else { join(&c.exit_vertices, ",") },
                            c.is_outer,
                            c.has_sun
                        ));
                    }
                    let h = report.hypotheses;
                    out.push_str(&format!(
                        "sun_free_hypotheses connected {} bipartite {} cactus {} no_sun_at_outer {} \
                         outer_4cycle_exit_degree_ok {} all {}\n",
                        h.connected, h.bipartite, h.cactus, h.no_sun_at_outer, h.outer_4cycle_exit_degree_ok, h.all
                    ));
                    out
                }
                Format::Csv => {
                    #[derive(Serialize)]
                    struct Row {
                        cycle: String,
                        length: usize,
                        exit_vertices: String,
                        is_outer: bool,
                        has_sun: bool,
                    }
                    let rows: Vec<Row> = report
                        .cycles
                        .iter()
                        .map(|c| Row {
                            cycle: join(&c.cycle, " "),
                            length: c.length,
                            exit_vertices: join(&c.exit_vertices, " "),
                            is_outer: c.is_outer,
                            has_sun: c.has_sun,
                        })
                        .collect();
                    csv_rows(&rows)
                }
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
