//! Command-line surface for the percolation and operad library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or parse error,
//! 3 budget exceeded.

mod render;
mod report;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use percoperm::filtration::{Filtration, FiltrationError, FILTRATION_CAP};
use percoperm::grid::{family_a, minimal_census, GridConfig, GridError, CENSUS_CAP};
use percoperm::models::chord::step_family;
use percoperm::models::chord::to_chord;
use percoperm::perm::Permutation;
use percoperm::series::{schroeder_numbers, simple_counts};
use percoperm::verify::{run_acceptance, Level};

use report::{CheckLine, RunReport};

// command-line budgets for the open-ended series computations
const SIMPLE_SERIES_CAP: usize = 64;
const SCHROEDER_CAP: usize = 512;

#[derive(Parser)]
#[command(
    name = "percoperm",
    version,
    about = "Bootstrap percolation on grids and the operad of permutations",
    propagate_version = true
)]
struct Cli {
    /// Emit a JSON run report instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Percolation runs, censuses and named grid families
    Grid {
        #[command(subcommand)]
        cmd: GridCmd,
    },
    /// Permutation queries: composition, separability, decomposition
    Perm {
        #[command(subcommand)]
        cmd: PermCmd,
    },
    /// Filtration levels, generator sets and simple-permutation counts
    Operad {
        #[command(subcommand)]
        cmd: OperadCmd,
    },
    /// Print a named integer sequence, optionally as an OEIS b-file
    Seq {
        /// Sequence name
        #[arg(value_enum)]
        name: SeqName,
        /// Largest index to compute
        #[arg(long)]
        max: usize,
        /// Also write the values in b-file format (`n a(n)` per line)
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Run the acceptance suite
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

#[derive(Subcommand)]
enum GridCmd {
    /// Read a grid file and run the percolation process to its fixpoint
    Run {
        file: PathBuf,
        /// Print every intermediate configuration
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Render::Ascii)]
        render: Render,
    },
    /// Count the minimal percolating sets of size n in the n-by-n grid
    MinimalCount {
        #[arg(long)]
        n: usize,
    },
    /// Emit a named configuration family member in grid text format
    Family {
        #[arg(value_enum)]
        family: FamilyName,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum PermCmd {
    /// Partial composition a ∘_i b
    Compose { a: String, i: usize, b: String },
    /// Is the permutation separable?
    Separable { s: String },
    /// Is the permutation simple?
    Simple { s: String },
    /// Does the permutation matrix percolate?
    Percolates { s: String },
    /// Print the substitution decomposition tree
    Decompose { s: String },
    /// Print the Hamiltonian-cycle chord diagram
    Chord { s: String },
    /// Realize a separable permutation as a series-parallel network
    Network {
        s: String,
        #[arg(long, value_enum, default_value_t = NetFormat::Text)]
        format: NetFormat,
    },
}

#[derive(Subcommand)]
enum OperadCmd {
    /// Generator set G_n of the filtration
    Generators {
        #[arg(long)]
        n: usize,
        /// List the elements, not just the count
        #[arg(long)]
        list: bool,
    },
    /// Per-arity cardinalities of the filtration level P_m
    Filtration {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Row)]
        format: TableFormat,
    },
    /// Simple-permutation counts s_1..s_max
    SimpleCounts {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum NetFormat {
    /// One `label: from -> to` line per edge
    Text,
    /// GraphViz digraph
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    /// Corner family on a 3m-by-3m grid
    #[value(name = "A")]
    A,
    /// Step-2 cycle family on a 2m-by-2m grid
    #[value(name = "E")]
    E,
    /// Step-m cycle family on a 2m-by-2m grid
    #[value(name = "Eprime")]
    Eprime,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    /// Comma-separated counts for the requested level
    Row,
    /// Aligned table of every level up to m
    Table,
    /// One `m <TAB> arity <TAB> count` record per line
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Schroeder,
    MinimalPercolating,
    Generators,
    Simple,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum LevelArg {
    Quick,
    Full,
}

enum CliError {
    /// Malformed input: exit 2
    Input(String),
    /// Beyond a configured budget: exit 3
    Budget(String),
}

impl From<GridError> for CliError {
    fn from(e: GridError) -> Self {
        match e {
            GridError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FiltrationError> for CliError {
    fn from(e: FiltrationError) -> Self {
        match e {
            FiltrationError::CapExceeded(_) | FiltrationError::CycleCapExceeded(..) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<percoperm::perm::PermError> for CliError {
    fn from(e: percoperm::perm::PermError) -> Self {
        match e {
            percoperm::perm::PermError::EnumerationCapExceeded(..) => {
                CliError::Budget(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<percoperm::models::chord::ChordError> for CliError {
    fn from(e: percoperm::models::chord::ChordError) -> Self {
        CliError::Input(e.to_string())
    }
}

struct Outcome {
    text: String,
    outputs: BTreeMap<String, String>,
    steps: Option<u64>,
    checks: Vec<CheckLine>,
    all_passed: bool,
}

impl Outcome {
    fn text(text: String) -> Self {
        Outcome {
            text,
            outputs: BTreeMap::new(),
            steps: None,
            checks: Vec::new(),
            all_passed: true,
        }
    }

    fn with_output(mut self, key: &str, value: impl ToString) -> Self {
        self.outputs.insert(key.to_string(), value.to_string());
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let mut report = RunReport::new(&command_name(&cli.command));
    let result = dispatch(&cli.command, &mut report);
    report.elapsed_ms = started.elapsed().as_millis();
    match result {
        Ok(outcome) => {
            report.outputs = outcome.outputs;
            report.steps = outcome.steps;
            report.checks = outcome.checks;
            report.all_passed = outcome.all_passed;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", outcome.text);
            }
            if report.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn command_name(command: &Command) -> String {
    match command {
        Command::Grid { cmd } => match cmd {
            GridCmd::Run { .. } => "grid run",
            GridCmd::MinimalCount { .. } => "grid minimal-count",
            GridCmd::Family { .. } => "grid family",
        },
        Command::Perm { cmd } => match cmd {
            PermCmd::Compose { .. } => "perm compose",
            PermCmd::Separable { .. } => "perm separable",
            PermCmd::Simple { .. } => "perm simple",
            PermCmd::Percolates { .. } => "perm percolates",
            PermCmd::Decompose { .. } => "perm decompose",
            PermCmd::Chord { .. } => "perm chord",
            PermCmd::Network { .. } => "perm network",
        },
        Command::Operad { cmd } => match cmd {
            OperadCmd::Generators { .. } => "operad generators",
            OperadCmd::Filtration { .. } => "operad filtration",
            OperadCmd::SimpleCounts { .. } => "operad simple-counts",
        },
        Command::Seq { .. } => "seq",
        Command::Verify { .. } => "verify",
    }
    .to_string()
}

fn dispatch(command: &Command, report: &mut RunReport) -> Result<Outcome, CliError> {
    match command {
        Command::Grid { cmd } => run_grid(cmd, report),
        Command::Perm { cmd } => run_perm(cmd, report),
        Command::Operad { cmd } => run_operad(cmd, report),
        Command::Seq { name, max, bfile } => run_seq(*name, *max, bfile.as_deref(), report),
        Command::Verify { level } => run_verify(*level, report),
    }
}

fn parse_perm(s: &str) -> Result<Permutation, CliError> {
    s.parse::<Permutation>().map_err(CliError::from)
}

fn run_grid(cmd: &GridCmd, report: &mut RunReport) -> Result<Outcome, CliError> {
    match cmd {
        GridCmd::Run {
            file,
            trace,
            render,
        } => {
            report.input("file", file.display());
            let raw = std::fs::read_to_string(file)
                .map_err(|e| CliError::Input(format!("{}: {e}", file.display())))?;
            let start = GridConfig::parse_text(&raw)?;
            let mut states = vec![start.clone()];
            loop {
                let next = states.last().unwrap().percolate_step();
                if &next == states.last().unwrap() {
                    break;
                }
                states.push(next);
            }
            let final_config = states.last().unwrap().clone();
            let percolating = final_config.red_count() == start.rows() * start.cols();
            let steps = (states.len() - 1) as u64;

            let rendered: Vec<String> = if *trace {
                states.iter().map(|s| render_config(s, *render)).collect()
            } else {
                vec![render_config(&final_config, *render)]
            };
            let mut text = rendered.join("\n");
            match render {
                Render::Ascii => {
                    let _ = write!(text, "\npercolating: {percolating}\n");
                }
                Render::Svg => {
                    let _ = writeln!(text, "<!-- percolating: {percolating} -->");
                }
            }
            Ok(Outcome {
                text,
                outputs: BTreeMap::from([
                    ("percolating".to_string(), percolating.to_string()),
                    ("final".to_string(), final_config.to_text()),
                ]),
                steps: Some(steps),
                checks: Vec::new(),
                all_passed: true,
            })
        }
        GridCmd::MinimalCount { n } => {
            report.input("n", n);
            let count = minimal_census(*n)?;
            Ok(Outcome::text(format!("{count}\n")).with_output("count", count))
        }
        GridCmd::Family { family, m } => {
            report.input("m", m);
            let side = match family {
                FamilyName::A => 3 * m,
                FamilyName::E | FamilyName::Eprime => 2 * m,
            };
            if side > percoperm::grid::MAX_COLS {
                return Err(CliError::Budget(format!(
                    "family member needs a {side}x{side} grid; the limit is {} columns",
                    percoperm::grid::MAX_COLS
                )));
            }
            let grid = match family {
                FamilyName::A => {
                    report.input("family", "A");
                    family_a(*m)?
                }
                FamilyName::E => {
                    report.input("family", "E");
                    step_family(2 * m, 2)?.to_grid()
                }
                FamilyName::Eprime => {
                    report.input("family", "Eprime");
                    step_family(2 * m, *m)?.to_grid()
                }
            };
            Ok(Outcome::text(grid.to_text()).with_output("grid", grid.to_text()))
        }
    }
}

fn render_config(config: &GridConfig, render: Render) -> String {
    match render {
        Render::Ascii => config.to_text(),
        Render::Svg => render::to_svg(config),
    }
}

fn run_perm(cmd: &PermCmd, report: &mut RunReport) -> Result<Outcome, CliError> {
    match cmd {
        PermCmd::Compose { a, i, b } => {
            report.input("a", a).input("i", i).input("b", b);
            let result = parse_perm(a)?.compose(*i, &parse_perm(b)?)?;
            Ok(Outcome::text(format!("{result}\n")).with_output("result", result))
        }
        PermCmd::Separable { s } => {
            report.input("s", s);
            let value = parse_perm(s)?.is_separable();
            Ok(Outcome::text(format!("{value}\n")).with_output("separable", value))
        }
        PermCmd::Simple { s } => {
            report.input("s", s);
            let value = parse_perm(s)?.is_simple();
            Ok(Outcome::text(format!("{value}\n")).with_output("simple", value))
        }
        PermCmd::Percolates { s } => {
            report.input("s", s);
            let value = parse_perm(s)?.to_grid().is_percolating();
            Ok(Outcome::text(format!("{value}\n")).with_output("percolates", value))
        }
        PermCmd::Decompose { s } => {
            report.input("s", s);
            let tree = percoperm::decompose::decompose(&parse_perm(s)?);
            Ok(Outcome::text(format!("{tree}\n")).with_output("tree", tree))
        }
        PermCmd::Chord { s } => {
            report.input("s", s);
            let diagram = to_chord(&parse_perm(s)?);
            Ok(Outcome::text(format!("{diagram}\n")).with_output("chord", diagram))
        }
        PermCmd::Network { s, format } => {
            report.input("s", s);
            let sigma = parse_perm(s)?;
            let tree = percoperm::models::bitree::perm_to_tree(&sigma)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let realized = percoperm::models::spnet::sp_realize(
                &percoperm::models::spnet::sp_from_tree(&tree),
            );
            let text = match format {
                NetFormat::Text => realized.to_text(),
                NetFormat::Dot => realized.to_dot(),
            };
            Ok(Outcome::text(text.clone()).with_output("network", text))
        }
    }
}

fn run_operad(cmd: &OperadCmd, report: &mut RunReport) -> Result<Outcome, CliError> {
    match cmd {
        OperadCmd::Generators { n, list } => {
            report.input("n", n);
            if *n < 2 || *n > FILTRATION_CAP {
                return Err(CliError::Budget(format!(
                    "generator arity {n} outside 2..={FILTRATION_CAP}"
                )));
            }
            let filtration = Filtration::build(*n)?;
            let generators = filtration.generators(*n)?;
            let mut text = format!("|G_{n}| = {}\n", generators.len());
            if *list {
                for g in generators {
                    let _ = writeln!(text, "{g}");
                }
            }
            let joined = generators
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok(Outcome::text(text)
                .with_output("count", generators.len())
                .with_output("elements", joined))
        }
        OperadCmd::Filtration {
            m,
            max_arity,
            format,
        } => {
            report.input("m", m).input("max_arity", max_arity);
            if *max_arity > FILTRATION_CAP || *m > FILTRATION_CAP {
                return Err(CliError::Budget(format!(
                    "arity {} beyond the cap {FILTRATION_CAP}",
                    max_arity.max(m)
                )));
            }
            let filtration = Filtration::build((*max_arity).max(*m).max(2))?;
            let counts = filtration.filtration_counts(*m, *max_arity)?.counts;
            let row = counts
                .iter()
                .map(|(_, c)| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let text = match format {
                TableFormat::Row => format!("{row}\n"),
                TableFormat::Table => {
                    let mut text = String::from("level");
                    for k in 2..=*max_arity {
                        let _ = write!(text, " {:>9}", format!("k={k}"));
                    }
                    text.push('\n');
                    for level in 2..=*m {
                        let level_counts = filtration.filtration_counts(level, *max_arity)?.counts;
                        let _ = write!(text, "P_{level:<3}");
                        for (_, c) in level_counts {
                            let _ = write!(text, " {c:>9}");
                        }
                        text.push('\n');
                    }
                    text
                }
                TableFormat::Records => {
                    let mut text = String::new();
                    for level in 2..=*m {
                        let level_counts = filtration.filtration_counts(level, *max_arity)?.counts;
                        for (arity, c) in level_counts {
                            let _ = writeln!(text, "{level}\t{arity}\t{c}");
                        }
                    }
                    text
                }
            };
            Ok(Outcome::text(text).with_output("counts", row))
        }
        OperadCmd::SimpleCounts { max } => {
            report.input("max", max);
            if *max == 0 {
                return Err(CliError::Input("--max must be positive".to_string()));
            }
            if *max > SIMPLE_SERIES_CAP {
                return Err(CliError::Budget(format!(
                    "simple counts capped at n <= {SIMPLE_SERIES_CAP}"
                )));
            }
            let counts = simple_counts(*max);
            let row = counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok(Outcome::text(format!("{row}\n")).with_output("counts", row))
        }
    }
}

fn run_seq(
    name: SeqName,
    max: usize,
    bfile: Option<&std::path::Path>,
    report: &mut RunReport,
) -> Result<Outcome, CliError> {
    report.input("max", max);
    if max == 0 {
        return Err(CliError::Input("--max must be positive".to_string()));
    }
    // (index, value) pairs; generator counts start at n = 2
    let values: Vec<(usize, String)> = match name {
        SeqName::Schroeder => {
            report.input("name", "schroeder");
            if max > SCHROEDER_CAP {
                return Err(CliError::Budget(format!(
                    "schroeder sequence capped at n <= {SCHROEDER_CAP}"
                )));
            }
            schroeder_numbers(max)
                .iter()
                .enumerate()
                .map(|(idx, v)| (idx + 1, v.to_string()))
                .collect()
        }
        SeqName::MinimalPercolating => {
            report.input("name", "minimal-percolating");
            if max > CENSUS_CAP {
                return Err(CliError::Budget(format!(
                    "census budget is n <= {CENSUS_CAP}"
                )));
            }
            (1..=max)
                .map(|n| Ok((n, minimal_census(n)?.to_string())))
                .collect::<Result<_, CliError>>()?
        }
        SeqName::Generators => {
            report.input("name", "generators");
            if !(2..=FILTRATION_CAP).contains(&max) {
                return Err(CliError::Budget(format!(
                    "generator counts need 2 <= max <= {FILTRATION_CAP}"
                )));
            }
            Filtration::build(max)?
                .generator_counts()
                .into_iter()
                .map(|(n, c)| (n, c.to_string()))
                .collect()
        }
        SeqName::Simple => {
            report.input("name", "simple");
            if max > SIMPLE_SERIES_CAP {
                return Err(CliError::Budget(format!(
                    "simple counts capped at n <= {SIMPLE_SERIES_CAP}"
                )));
            }
            simple_counts(max)
                .iter()
                .enumerate()
                .map(|(idx, v)| (idx + 1, v.to_string()))
                .collect()
        }
    };
    let line = values
        .iter()
        .map(|(_, v)| v.clone())
        .collect::<Vec<_>>()
        .join(" ");
    if let Some(path) = bfile {
        let mut contents = String::new();
        for (n, v) in &values {
            let _ = writeln!(contents, "{n} {v}");
        }
        std::fs::write(path, contents)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        report.output("bfile", path.display());
    }
    Ok(Outcome::text(format!("{line}\n")).with_output("values", line))
}

fn run_verify(level: LevelArg, report: &mut RunReport) -> Result<Outcome, CliError> {
    let lvl = match level {
        LevelArg::Quick => {
            report.input("level", "quick");
            Level::Quick
        }
        LevelArg::Full => {
            report.input("level", "full");
            Level::Full
        }
    };
    let results = run_acceptance(lvl);
    let mut text = String::new();
    let mut all_passed = true;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        all_passed &= r.passed;
        let _ = writeln!(text, "{status}  {:<55} {}", r.name, r.detail);
    }
    let _ = writeln!(
        text,
        "{}  {} checks",
        if all_passed { "OK" } else { "FAILED" },
        results.len()
    );
    let checks = results
        .into_iter()
        .map(|r| CheckLine {
            name: r.name,
            passed: r.passed,
            detail: r.detail,
        })
        .collect();
    Ok(Outcome {
        text,
        outputs: BTreeMap::new(),
        steps: None,
        checks,
        all_passed,
    })
}
