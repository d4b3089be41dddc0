//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 usage error, 2 validation failure, 3
//! cross-method disagreement.

use std::fmt::Display;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use qcrystal::decompose::lr_graph_bounded;
use qcrystal::render::{
    crystal_dot, crystal_text, parse_partition, parse_tableau, parse_word, CrystalRecord,
    HwvEntry, HwvRecord, InsertRecord, InsertStep, LrRecord, LrRow, FORMAT_TAG,
};
use qcrystal::{
    enumerate_highest, insert_letter, lr_insertion, lr_words, CrystalElement, CrystalGraph,
    LrResult, ShiftedTableau, StrictPartition, Word,
};

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "Crystals of the queer superalgebra q(n)")]
struct Cli {
    /// Worker threads for the library sweeps (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    /// Render odd operator labels as "i~" instead of "i\u{0304}"
    #[arg(long, global = true)]
    ascii: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Method {
    Words,
    Insertion,
    Graph,
    #[default]
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build the irreducible crystal B(shape) and print its graph
    Crystal {
        /// Crystal rank n
        #[arg(short = 'n', long)]
        rank: u8,
        /// Strict partition, e.g. "3,1" ("0" for the empty shape)
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Refuse closures past this many vertices
        #[arg(long, default_value_t = 250_000)]
        max_size: usize,
    },
    /// Decompose B(lhs) ⊗ B(rhs) into irreducible summands
    Lr {
        #[arg(short = 'n', long)]
        rank: u8,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long, default_value_t = 250_000)]
        max_size: usize,
    },
    /// Insert letters or a tableau into a tableau, printing every step
    Insert {
        #[arg(short = 'n', long)]
        rank: u8,
        /// Starting tableau, rows joined by '/', e.g. "66135/324"
        #[arg(long)]
        tableau: String,
        #[command(flatten)]
        operand: InsertOperand,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List the highest weight words of a given length
    Hwv {
        #[arg(short = 'n', long)]
        rank: u8,
        /// Word length N
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InsertOperand {
    /// Letters to insert one by one, e.g. "213"
    #[arg(long)]
    letters: Option<String>,
    /// Tableau whose reading word is inserted
    #[arg(long)]
    rhs: Option<String>,
}

enum CliError {
    Validation(String),
    Disagreement(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Disagreement(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Disagreement(m) => m,
        }
    }
}

fn validation(err: impl Display) -> CliError {
    CliError::Validation(err.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn shape_for_rank(literal: &str, rank: u8) -> Result<StrictPartition, CliError> {
    if rank == 0 {
        return Err(CliError::Validation("rank must be at least 1".into()));
    }
    let shape = parse_partition(literal).map_err(validation)?;
    if shape.len() > rank as usize {
        return Err(CliError::Validation(format!(
            "shape {shape} has more rows than the rank {rank}"
        )));
    }
    Ok(shape)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Crystal {
            rank,
            shape,
            format,
            max_size,
        } => cmd_crystal(*rank, shape, *format, *max_size, cli.ascii),
        Command::Lr {
            rank,
            lhs,
            rhs,
            method,
            format,
            max_size,
        } => cmd_lr(*rank, lhs, rhs, *method, *format, *max_size),
        Command::Insert {
            rank,
            tableau,
            operand,
            format,
        } => cmd_insert(*rank, tableau, operand, *format),
        Command::Hwv {
            rank,
            length,
            format,
        } => cmd_hwv(*rank, *length, *format),
    }
}

fn cmd_crystal(
    rank: u8,
    shape: &str,
    format: Format,
    max_size: usize,
    ascii: bool,
) -> Result<(), CliError> {
    let shape = shape_for_rank(shape, rank)?;
    let top = qcrystal::highest_tableau(&shape, rank);
    let graph: CrystalGraph<ShiftedTableau> =
        CrystalGraph::closure(rank, [top], Some(max_size)).map_err(validation)?;
    match format {
        Format::Dot => print!("{}", crystal_dot(&graph, ascii)),
        Format::Text => {
            println!("crystal shape={shape} rank={rank}");
            print!("{}", crystal_text(&graph, ascii));
        }
        Format::Json => {
            let record = CrystalRecord::new(&graph, &shape);
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
    }
    Ok(())
}

fn method_results(
    method: Method,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    rank: u8,
    max_size: usize,
) -> Result<Vec<(&'static str, LrResult)>, CliError> {
    let mut out = Vec::new();
    if matches!(method, Method::Words | Method::All) {
        out.push(("words", lr_words(lambda, mu, rank)));
    }
    if matches!(method, Method::Insertion | Method::All) {
        out.push(("insertion", lr_insertion(lambda, mu, rank)));
    }
    if matches!(method, Method::Graph | Method::All) {
        out.push((
            "graph",
            lr_graph_bounded(lambda, mu, rank, Some(max_size)).map_err(validation)?,
        ));
    }
    Ok(out)
}

fn cmd_lr(
    rank: u8,
    lhs: &str,
    rhs: &str,
    method: Method,
    format: Format,
    max_size: usize,
) -> Result<(), CliError> {
    let lambda = shape_for_rank(lhs, rank)?;
    let mu = shape_for_rank(rhs, rank)?;
    let results = method_results(method, &lambda, &mu, rank, max_size)?;
    let (first_name, first) = &results[0];
    for (name, other) in &results[1..] {
        if !first.agrees_with(other) {
            let mut witness = String::new();
            for (label, result) in [(first_name, first), (&name, other)] {
                witness.push_str(&format!("\n  {label}:"));
                for (nu, count) in &result.counts {
                    witness.push_str(&format!(" {nu}x{count}"));
                }
            }
            return Err(CliError::Disagreement(format!(
                "methods {first_name} and {name} disagree on {lambda} ⊗ {mu} at rank {rank}:{witness}"
            )));
        }
    }

    // Merge the per-method witnesses into one table.
    let mut rows: Vec<LrRow> = first
        .counts
        .iter()
        .map(|(nu, &count)| LrRow {
            shape: nu.parts().to_vec(),
            multiplicity: count,
            word_witnesses: Vec::new(),
            tableau_witnesses: Vec::new(),
        })
        .collect();
    for (_, result) in &results {
        for (k, (nu, _)) in first.counts.iter().enumerate() {
            if rows[k].word_witnesses.is_empty() {
                if let Some(ws) = result.word_witnesses.get(nu) {
                    rows[k].word_witnesses = ws.iter().map(|w| w.to_string()).collect();
                }
            }
            if rows[k].tableau_witnesses.is_empty() {
                if let Some(ts) = result.tableau_witnesses.get(nu) {
                    rows[k].tableau_witnesses = ts.iter().map(|t| t.to_string()).collect();
                }
            }
        }
    }

    let method_name = match method {
        Method::Words => "words",
        Method::Insertion => "insertion",
        Method::Graph => "graph",
        Method::All => "all",
    };
    match format {
        Format::Json => {
            let record = LrRecord {
                format: FORMAT_TAG,
                kind: "lr",
                rank,
                lhs: lambda.parts().to_vec(),
                rhs: mu.parts().to_vec(),
                method: method_name.to_string(),
                rows,
                methods_agree: (results.len() > 1).then_some(true),
            };
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
        _ => {
            println!("lr lhs={lambda} rhs={mu} rank={rank} method={method_name}");
            for (nu, count) in &first.counts {
                println!("{nu} {count}");
            }
            if results.len() > 1 {
                let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
                println!("methods agree: {}", names.join("="));
            }
        }
    }
    Ok(())
}

fn cmd_insert(
    rank: u8,
    tableau: &str,
    operand: &InsertOperand,
    format: Format,
) -> Result<(), CliError> {
    if rank == 0 {
        return Err(CliError::Validation("rank must be at least 1".into()));
    }
    let start = parse_tableau(tableau, rank).map_err(validation)?;
    start.validate().map_err(validation)?;
    let letters: Vec<u8> = match (&operand.letters, &operand.rhs) {
        (Some(raw), None) => parse_word(raw, rank).map_err(validation)?.letters().to_vec(),
        (None, Some(raw)) => {
            let other = parse_tableau(raw, rank).map_err(validation)?;
            other.validate().map_err(validation)?;
            other.reading_word().letters().to_vec()
        }
        _ => unreachable!("clap enforces exactly one operand"),
    };
    let mut steps = Vec::with_capacity(letters.len());
    let mut current = start.clone();
    for &c in &letters {
        current = insert_letter(&current, c);
        steps.push(InsertStep {
            letter: c,
            tableau: current.to_string(),
        });
    }
    match format {
        Format::Json => {
            let record = InsertRecord {
                format: FORMAT_TAG,
                kind: "insert",
                rank,
                start: start.to_string(),
                steps,
                result: current.to_string(),
                shape: current.shape().parts().to_vec(),
            };
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
        _ => {
            println!("insert into {start} rank={rank}");
            for step in &steps {
                println!("<- {}: {}", step.letter, step.tableau);
            }
            println!("result: {current}");
            println!("shape: {}", current.shape());
        }
    }
    Ok(())
}

fn cmd_hwv(rank: u8, length: usize, format: Format) -> Result<(), CliError> {
    if rank == 0 {
        return Err(CliError::Validation("rank must be at least 1".into()));
    }
    let words = enumerate_highest(length, rank);
    let entries: Vec<HwvEntry> = words
        .iter()
        .map(|w| {
            let component: CrystalGraph<Word> = CrystalGraph::closure(rank, [w.clone()], None)
                .expect("unbounded closure");
            HwvEntry {
                word: w.to_string(),
                weight: w.weight().counts().to_vec(),
                component_size: component.vertex_count(),
            }
        })
        .collect();
    match format {
        Format::Json => {
            let record = HwvRecord {
                format: FORMAT_TAG,
                kind: "hwv",
                rank,
                length,
                entries,
            };
            println!("{}", serde_json::to_string_pretty(&record).unwrap());
        }
        _ => {
            for (w, entry) in words.iter().zip(&entries) {
                println!("{} {} {}", entry.word, w.weight(), entry.component_size);
            }
        }
    }
    Ok(())
}

