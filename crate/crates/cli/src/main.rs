//! `prim5`: construct the groups of the tables, inspect their suborbits and
//! orbital digraphs, export graphs and run the verification suite.
//!
//! Exit status: 0 on success, 1 when a check fails or a computation errors,
//! 2 on usage errors (including rows or primes a table does not admit).

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prim5::atlas::{build_table1_row, build_table2_row, identify, psl2_on_a5_cosets, Construction};
use prim5::orbital::{enumerate_digraphs, norm_quotient_order_via_suborbits, suborbits, coset_digraphs, suborbit_pairing};
use prim5::perm::{fingerprint, PermGroup, DEFAULT_NORMALIZER_ORBIT_BOUND, NORMALIZER_SUBGROUP_LIMIT};
use prim5::verify::{
    centralizer_check, decomposition_check, graph_aut_order_small, identify_graph, run_suite, selftest, table3_graph,
    Report, SuiteConfig, Target, MAX_AUT_VERTICES,
};
use prim5::Error;

#[derive(Parser, Debug)]
#[command(name = "prim5", version, about = "Primitive groups with a suborbit of length five")]
struct Cli {
    /// Seed for every randomized step; echoed into reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct RowSelector {
    /// Table number: 1 (sporadic) or 2 (infinite families).
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    table: u8,
    #[arg(long)]
    row: u8,
    /// Prime parameter of an infinite-family row.
    #[arg(long)]
    p: Option<u64>,
    /// Generator file for rows built from external generators (Suz(8)).
    #[arg(long)]
    generators: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// PSL(2,p) on the cosets of A5.
    Psl2A5,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModrepMode {
    Centralizer,
    Decomposition,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a row and print degree, order and stabilizer.
    Construct(RowSelector),
    /// List the suborbits of a point.
    Suborbits {
        #[command(flatten)]
        sel: RowSelector,
        #[arg(long, default_value_t = 0)]
        point: usize,
    },
    /// Enumerate the orbital digraphs of a given out-valency.
    Digraphs {
        #[command(flatten)]
        sel: RowSelector,
        #[arg(long, default_value_t = 5)]
        valency: usize,
        /// Directory receiving one edge file per digraph.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Build, export and identify a graph of the 5-valent graph table.
    Graph {
        /// Must be 3.
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=3))]
        table: u8,
        #[arg(long)]
        row: u8,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Edge-list output file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// |N_G(H)/H| by counting suborbits and, when H is small, via the normalizer.
    Normquot {
        #[arg(long, conflicts_with_all = ["table", "row"])]
        family: Option<Family>,
        #[arg(long, requires = "row", value_parser = clap::value_parser!(u8).range(1..=2))]
        table: Option<u8>,
        #[arg(long, requires = "table")]
        row: Option<u8>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        generators: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NORMALIZER_ORBIT_BOUND)]
        normalizer_bound: usize,
    },
    /// Centralizer group and module decomposition of a symplectic target.
    Modrep {
        #[arg(long)]
        target: Target,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = ModrepMode::Both)]
        mode: ModrepMode,
    },
    /// Run the verification suite; one report per line.
    Verify {
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Only checks whose id starts with one of these prefixes.
        #[arg(long = "select", num_args = 1..)]
        select: Vec<String>,
        /// Suz(8) generator file.
        #[arg(long)]
        suz8: Option<PathBuf>,
        /// Report file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out runtimes so identical runs give identical bytes.
        #[arg(long)]
        omit_timing: bool,
    },
    /// Run the randomized property checks.
    Selftest {
        /// Number of consecutive seeds, starting at --seed.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
    },
}

/// A failure classified by exit status.
enum Failure {
    Usage(String),
    Run(String),
    ChecksFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Argument(_) | Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Run(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Run(e.to_string())
    }
}

fn build(sel: &RowSelector, seed: u64) -> Result<Construction, Failure> {
    Ok(match sel.table {
        1 => build_table1_row(sel.row, sel.generators.as_deref(), seed)?,
        _ => {
            let p = sel.p.ok_or_else(|| Failure::Usage("infinite-family rows need --p".into()))?;
            build_table2_row(sel.row, p, seed)?
        }
    })
}

fn stabilizer_label(c: &Construction) -> Result<String, Failure> {
    let order = c.stabilizer.order()?;
    let name = fingerprint(&c.stabilizer).ok().and_then(|fp| identify(&fp)).unwrap_or("unidentified");
    Ok(format!("{name}({order})"))
}

fn print_reports(reports: &[Report], omit_timing: bool, out: &mut dyn std::io::Write) -> std::io::Result<()> {
    for r in reports {
        let line = if omit_timing { r.to_line_without_timing() } else { r.to_line() };
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let seed = cli.seed;
    match cli.command {
        Command::Construct(sel) => {
            let c = build(&sel, seed)?;
            println!(
                "degree {}, order {}, stabilizer {}",
                c.group.degree(),
                c.group.order()?,
                stabilizer_label(&c)?
            );
        }
        Command::Suborbits { sel, point } => {
            let c = build(&sel, seed)?;
            let report = suborbits(&c.group, point)?;
            let pairing = suborbit_pairing(&c.group, &report)?;
            println!("point {point}: {} suborbits", report.orbits.len());
            for (i, o) in report.orbits.iter().enumerate() {
                println!("  length {:>6}  representative {:>6}  paired with suborbit of {}", o.len(), o[0], report.orbits[pairing[i]][0]);
            }
        }
        Command::Digraphs { sel, valency, out_dir } => {
            let c = build(&sel, seed)?;
            let digraphs = enumerate_digraphs(&c.group, 0, valency)?;
            println!("{} orbital digraphs of out-valency {valency}", digraphs.len());
            for (i, d) in digraphs.iter().enumerate() {
                let kind = if d.is_symmetric() { "graph" } else { "digraph" };
                println!("  #{i}: {} arcs, {kind}", d.arc_count());
                if let Some(dir) = &out_dir {
                    fs::create_dir_all(dir)?;
                    fs::write(dir.join(format!("digraph{i}.el")), d.to_edge_list())?;
                }
            }
        }
        Command::Graph { row, p, generators, out, .. } => {
            let inst = table3_graph(row, p, generators.as_deref(), seed)?;
            let g = &inst.graph;
            let id = identify_graph(g)?;
            if let Some(path) = out {
                fs::write(path, g.to_edge_list())?;
            }
            println!("vertices {}, edges {}, valency {}, {}", id.vertices, id.edges, id.valency, id.summary());
            if g.vertex_count() <= MAX_AUT_VERTICES {
                println!("automorphism group order {}", graph_aut_order_small(g)?);
            }
        }
        Command::Normquot { family, table, row, p, generators, normalizer_bound } => {
            let group: PermGroup = match (family, table, row) {
                (Some(Family::Psl2A5), _, _) => {
                    let p = p.ok_or_else(|| Failure::Usage("--family psl2-a5 needs --p".into()))?;
                    psl2_on_a5_cosets(p, seed)?.0
                }
                (None, Some(table), Some(row)) => build(&RowSelector { table, row, p, generators }, seed)?.group,
                _ => return Err(Failure::Usage("give --family or --table with --row".into())),
            };
            let nq = norm_quotient_order_via_suborbits(&group, 0, 5, seed)?;
            if nq == 1 {
                println!("1 (no length-5 suborbit)");
            } else {
                println!("{nq} ({} length-5 suborbits)", nq - 1);
            }
            let h_order = group.point_stabilizer(0)?.order()? / 5;
            if h_order <= NORMALIZER_SUBGROUP_LIMIT {
                let corr = coset_digraphs(&group, 0, 5, seed, normalizer_bound)?;
                println!("normalizer: {}", corr.quotient_order());
            } else {
                println!("normalizer: not run (|H| = {h_order} exceeds {NORMALIZER_SUBGROUP_LIMIT})");
            }
        }
        Command::Modrep { target, p, mode } => {
            let mut reports = Vec::new();
            if matches!(mode, ModrepMode::Centralizer | ModrepMode::Both) {
                reports.push(centralizer_check(p, target, seed));
            }
            if matches!(mode, ModrepMode::Decomposition | ModrepMode::Both) {
                reports.push(decomposition_check(p, target, seed));
            }
            // Congruence violations surface as argument errors in the reports.
            if let Some(e) = reports.iter().filter_map(|r| r.error.as_ref()).find(|e| e.contains("violates")) {
                return Err(Failure::Usage(e.clone()));
            }
            print_reports(&reports, true, &mut std::io::stdout())?;
            if reports.iter().any(Report::is_fail) {
                return Err(Failure::ChecksFailed);
            }
        }
        Command::Verify { jobs, select, suz8, out, omit_timing } => {
            let config = SuiteConfig {
                seed,
                jobs,
                select: if select.is_empty() { None } else { Some(select) },
                suz8_file: suz8,
            };
            let outcome = run_suite(&config)?;
            match out {
                Some(path) => {
                    let mut f = fs::File::create(path)?;
                    print_reports(&outcome.reports, omit_timing, &mut f)?;
                    f.flush()?;
                }
                None => print_reports(&outcome.reports, omit_timing, &mut std::io::stdout())?,
            }
            eprintln!("{} pass, {} fail, {} skip", outcome.passed(), outcome.failed(), outcome.skipped());
            if outcome.exit_code() != 0 {
                return Err(Failure::ChecksFailed);
            }
        }
        Command::Selftest { seeds } => {
            let reports: Vec<Report> = (seed..seed.saturating_add(seeds)).flat_map(selftest).collect();
            print_reports(&reports, true, &mut std::io::stdout())?;
            if reports.iter().any(Report::is_fail) {
                return Err(Failure::ChecksFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ChecksFailed) => ExitCode::from(1),
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `prim5 --help` for usage");
            ExitCode::from(2)
        }
    }
}
