//! JSON-speaking command-line front end for the heterotree library.
//!
//! Exit codes: 0 success, 1 verified negative (a property that provably
//! fails, an absent tree or embedding), 2 invalid input, 3 enumeration
//! budget exceeded. Errors and warnings go to standard error as one-line
//! JSON objects; primary output goes to standard output or `--output`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heterotree::{
    akbari_alipour_check, beautiful_tree_family, bipartite_nice_colouring,
    enumerate_heterochromatic_spanning_trees, find_heterochromatic_spanning_tree,
    graceful_colouring, heterochromatic_embedding, lemma1_condition_holds, nice_tree_family,
    random_cute_colouring, random_nice_colouring, stellar_colouring, suzuki_check,
    unique_tree_graph, verify_beautiful, EdgeColouredGraph, Error, Lemma1Verdict, Tree,
    DEFAULT_ENUMERATION_BUDGET,
};
use serde_json::json;

const BUDGET_ENV: &str = "HETEROTREE_BUDGET";

/// Hard cap on `--n`/`--m` for the generators; keeps outputs at a few
/// hundred thousand edges.
const MAX_GENERATED_ORDER: usize = 1000;

/// Fixed edge-colour palette for DOT export, cycled by colour index.
const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
    "#bcf60c", "#fabebe", "#008080", "#e6beff",
];

#[derive(Parser)]
#[command(
    name = "heterotree",
    version,
    about = "Heterochromatic spanning trees in edge-coloured graphs: \
             generators, checkers, certified families, and an exhaustive oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the primary output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an edge-coloured graph from one of the built-in families.
    Generate {
        #[command(subcommand)]
        family: GenerateCommand,
    },
    /// Decide a property of a coloured graph; exit 1 when it fails.
    Check {
        kind: CheckKind,
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Search for one heterochromatic spanning tree.
    Find {
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Construct a certified family of pairwise-distinct trees.
    Family {
        kind: FamilyKind,
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
    },
    /// Exhaustively count heterochromatic spanning trees.
    Count {
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Refuse enumeration when the search space exceeds this size
        /// (also settable via HETEROTREE_BUDGET; the flag wins).
        #[arg(long)]
        budget: Option<u64>,
        /// Retain up to this many trees in the report.
        #[arg(long, default_value_t = 0)]
        keep: usize,
    },
    /// Embed a tree heterochromatically into a complete coloured graph.
    Embed {
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Tree JSON file.
        #[arg(long)]
        tree: PathBuf,
    },
    /// Render a coloured graph as Graphviz DOT.
    ExportDot {
        /// Graph JSON file.
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenerateCommand {
    /// Complete graph K_{n+1}, edge colour = difference of endpoint labels.
    Graceful {
        #[arg(long)]
        n: usize,
    },
    /// Complete graph K_{n+1}, edge colour = larger endpoint label.
    Stellar {
        #[arg(long)]
        n: usize,
    },
    /// Random colouring of K_{n+1} with class sizes 1..n.
    Nice {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random graph on n+1 vertices with class sizes 1, 1, 2, .., n-1.
    Cute {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random colouring of K_{m,m} with paired class sizes.
    BipartiteNice {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Supergraph of the given tree whose unique heterochromatic spanning
    /// tree is that tree.
    UniqueTree {
        /// Tree JSON file.
        #[arg(long)]
        tree: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Nice,
    Cute,
    Beautiful,
    Suzuki,
    Akbari,
    #[value(name = "lemma1")]
    Lemma1,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Nice => "nice",
            CheckKind::Cute => "cute",
            CheckKind::Beautiful => "beautiful",
            CheckKind::Suzuki => "suzuki",
            CheckKind::Akbari => "akbari",
            CheckKind::Lemma1 => "lemma1",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Nice,
    Beautiful,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((body, negative)) => {
            if let Err(err) = write_output(cli.output.as_deref(), &body) {
                eprintln!("{}", error_json(&err));
                return ExitCode::from(2);
            }
            if negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("{}", error_json(&err));
            match err {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

/// Runs one subcommand; returns the newline-terminated output body and
/// whether it is a verified negative (exit 1).
fn run(command: &Command) -> Result<(String, bool), Error> {
    match command {
        Command::Generate { family } => Ok((generate(family)?, false)),
        Command::Check { kind, input } => check(*kind, &read_graph(input)?),
        Command::Find { input } => {
            let g = read_graph(input)?;
            Ok(match find_heterochromatic_spanning_tree(&g) {
                Some(tree) => (line(json!({ "tree": tree })), false),
                None => (line(json!("absent")), true),
            })
        }
        Command::Family { kind, input } => {
            let g = read_graph(input)?;
            let family = match kind {
                FamilyKind::Nice => nice_tree_family(&g)?,
                FamilyKind::Beautiful => beautiful_tree_family(&g)?,
            };
            Ok((typed_line(&family), false))
        }
        Command::Count {
            input,
            budget,
            keep,
        } => {
            let g = read_graph(input)?;
            if g.num_colours() > g.num_vertices().saturating_sub(1) {
                eprintln!(
                    "{}",
                    json!({"warning": {
                        "kind": "complexity",
                        "message": "more colours than vertices - 1: enumeration ranges \
                                    over all heterochromatic edge subsets of spanning-tree size",
                    }})
                );
            }
            let report = enumerate_heterochromatic_spanning_trees(&g, *keep, resolve_budget(*budget)?)?;
            Ok((typed_line(&report), false))
        }
        Command::Embed { input, tree } => {
            let g = read_graph(input)?;
            let t = read_tree(tree)?;
            Ok(match heterochromatic_embedding(&g, &t)? {
                Some(mapping) => (line(json!({ "mapping": mapping })), false),
                None => (line(json!("absent")), true),
            })
        }
        Command::ExportDot { input } => Ok((dot(&read_graph(input)?), false)),
    }
}

fn generate(family: &GenerateCommand) -> Result<String, Error> {
    let graph = match *family {
        GenerateCommand::Graceful { n } => {
            check_order(n)?;
            graceful_colouring(n)
        }
        GenerateCommand::Stellar { n } => {
            check_order(n)?;
            stellar_colouring(n)
        }
        GenerateCommand::Nice { n, seed } => {
            check_order(n)?;
            random_nice_colouring(n, seed)
        }
        GenerateCommand::Cute { n, seed } => {
            check_order(n)?;
            random_cute_colouring(n, seed)?
        }
        GenerateCommand::BipartiteNice { m, seed } => {
            check_order(m)?;
            bipartite_nice_colouring(m, seed)?
        }
        GenerateCommand::UniqueTree { ref tree } => unique_tree_graph(&read_tree(tree)?)?,
    };
    Ok(typed_line(&graph))
}

fn check(kind: CheckKind, g: &EdgeColouredGraph) -> Result<(String, bool), Error> {
    let mut extra = None;
    let holds = match kind {
        CheckKind::Nice => g.classify().nice,
        CheckKind::Cute => g.classify().cute,
        CheckKind::Beautiful => {
            if g.classify().nice {
                match verify_beautiful(g)? {
                    Some(bipartition) => {
                        extra = Some(("bipartition", serde_json::to_value(bipartition).unwrap()));
                        true
                    }
                    None => false,
                }
            } else {
                false
            }
        }
        CheckKind::Suzuki => suzuki_check(g)?,
        CheckKind::Akbari => akbari_alipour_check(g)?,
        CheckKind::Lemma1 => match lemma1_condition_holds(g)? {
            Lemma1Verdict::Holds => true,
            Lemma1Verdict::ViolatedBy(x) => {
                extra = Some(("violating", serde_json::to_value(x).unwrap()));
                false
            }
        },
    };
    let mut verdict = json!({"check": kind.name(), "holds": holds});
    if let Some((key, value)) = extra {
        verdict[key] = value;
    }
    Ok((line(verdict), !holds))
}

fn check_order(n: usize) -> Result<(), Error> {
    if n > MAX_GENERATED_ORDER {
        return Err(Error::InvalidInput(format!(
            "generator size {n} exceeds the cap of {MAX_GENERATED_ORDER}"
        )));
    }
    Ok(())
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, Error> {
    if let Some(value) = flag {
        return Ok(value);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text.parse().map_err(|_| {
            Error::InvalidInput(format!("{BUDGET_ENV} must be an unsigned integer, got {text:?}"))
        }),
        Err(_) => Ok(DEFAULT_ENUMERATION_BUDGET),
    }
}

fn read_graph(path: &Path) -> Result<EdgeColouredGraph, Error> {
    serde_json::from_str(&read_file(path)?)
        .map_err(|e| Error::InvalidInput(format!("cannot parse {}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<Tree, Error> {
    serde_json::from_str(&read_file(path)?)
        .map_err(|e| Error::InvalidInput(format!("cannot parse {}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, body: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, body)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Compact one-line JSON for ad-hoc values (object keys sorted).
fn line(value: serde_json::Value) -> String {
    let mut text = value.to_string();
    text.push('\n');
    text
}

/// Compact one-line JSON for library types, preserving their canonical
/// field order.
fn typed_line<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("serializable output");
    text.push('\n');
    text
}

fn error_json(err: &Error) -> String {
    let kind = match err {
        Error::InvalidGraph(_) => "invalid_graph",
        Error::InvalidEdgeSet(_) => "invalid_edge_set",
        Error::InvalidInput(_) => "invalid_input",
        Error::TooLarge(_) => "too_large",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Internal(_) => "internal",
    };
    json!({"error": {"kind": kind, "message": err.to_string()}}).to_string()
}

fn dot(g: &EdgeColouredGraph) -> String {
    let mut out = String::from("graph heterotree {\n");
    out.push_str("  // palette:");
    for colour in 1..=g.num_colours() {
        let sep = if colour > 1 { ";" } else { "" };
        out.push_str(&format!(
            "{sep} {colour} -> {}",
            PALETTE[(colour - 1) % PALETTE.len()]
        ));
    }
    out.push('\n');
    for v in 0..g.num_vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -- {} [color_index={}, color=\"{}\"];\n",
            e.u,
            e.v,
            e.colour,
            PALETTE[(e.colour - 1) % PALETTE.len()]
        ));
    }
    out.push_str("}\n");
    out
}
