//! Serialization: literals for words, partitions and tableaux, DOT export
//! for crystal graphs, and the self-describing JSON records emitted by the
//! command-line front end.
//!
//! Literal conventions (all round-trip):
//! - partitions are comma-separated parts, `0` for the empty partition;
//! - words are bare digits for rank <= 9, `.`-separated integers above;
//! - tableaux are rows joined by `/` (`,` is accepted on input), top row
//!   first, e.g. `211/1`; `-` denotes the empty word or tableau.

use std::fmt::Display;

use serde::Serialize;
use thiserror::Error;

use crate::graph::CrystalGraph;
use crate::ssdt::{ShiftedTableau, StrictPartition};
use crate::word::{CrystalElement, Letter, OperatorLabel, Word};

pub const FORMAT_TAG: &str = "qcrystal/1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: u32, rank: u8 },
    #[error("parts {0:?} do not form a strict partition")]
    NotStrict(Vec<u32>),
    #[error("{0}")]
    BadTableau(String),
}

pub fn parse_partition(s: &str) -> Result<StrictPartition, ParseError> {
    let s = s.trim();
    if s.is_empty() || s == "0" || s == "-" {
        return Ok(StrictPartition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        let value: u32 = piece
            .parse()
            .map_err(|_| ParseError::BadInteger(piece.to_string()))?;
        parts.push(value);
    }
    StrictPartition::try_new(parts.clone()).ok_or(ParseError::NotStrict(parts))
}

/// Compact partition literal: `3,1` or `0` for the empty partition.
pub fn partition_literal(p: &StrictPartition) -> String {
    if p.is_empty() {
        "0".to_string()
    } else {
        p.parts()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_letters(s: &str, rank: u8) -> Result<Vec<Letter>, ParseError> {
    let mut letters = Vec::new();
    if rank > 9 {
        for piece in s.split('.') {
            let value: u32 = piece
                .parse()
                .map_err(|_| ParseError::BadInteger(piece.to_string()))?;
            if value < 1 || value > rank as u32 {
                return Err(ParseError::LetterOutOfRange {
                    letter: value,
                    rank,
                });
            }
            letters.push(value as Letter);
        }
    } else {
        for ch in s.chars() {
            let value = ch
                .to_digit(10)
                .ok_or_else(|| ParseError::BadInteger(ch.to_string()))?;
            if value < 1 || value > rank as u32 {
                return Err(ParseError::LetterOutOfRange {
                    letter: value,
                    rank,
                });
            }
            letters.push(value as Letter);
        }
    }
    Ok(letters)
}

pub fn parse_word(s: &str, rank: u8) -> Result<Word, ParseError> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Word::empty(rank));
    }
    Ok(Word::new(rank, parse_letters(s, rank)?))
}

/// Parse a tableau literal.  Only the shape and the letter bounds are
/// enforced here; semistandardness is the caller's concern.
pub fn parse_tableau(s: &str, rank: u8) -> Result<ShiftedTableau, ParseError> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(ShiftedTableau::empty(rank));
    }
    let mut rows = Vec::new();
    for row in s.split(['/', ',']) {
        let row = row.trim();
        if row.is_empty() {
            return Err(ParseError::Empty);
        }
        rows.push(parse_letters(row, rank)?);
    }
    ShiftedTableau::from_rows(rank, rows).map_err(|e| ParseError::BadTableau(e.to_string()))
}

pub fn operator_label(op: OperatorLabel, ascii: bool) -> String {
    if ascii {
        op.ascii()
    } else {
        op.to_string()
    }
}

/// DOT rendering of a crystal graph: solid edges for even operators, dashed
/// for odd ones, nodes in canonical order so output diffs cleanly.
pub fn crystal_dot<V>(graph: &CrystalGraph<V>, ascii: bool) -> String
where
    V: CrystalElement + Display,
{
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for v in graph.vertices() {
        out.push_str(&format!("  \"{v}\";\n"));
    }
    for (from, op, to) in graph.edges() {
        let style = if op.is_odd() { ", style=dashed" } else { "" };
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"{}];\n",
            graph.vertex(from),
            graph.vertex(to),
            operator_label(op, ascii),
            style
        ));
    }
    out.push_str("}\n");
    out
}

/// Plain-text rendering: a header, one vertex per line, one edge per line.
pub fn crystal_text<V>(graph: &CrystalGraph<V>, ascii: bool) -> String
where
    V: CrystalElement + Display,
{
    let mut out = String::new();
    out.push_str(&format!(
        "vertices: {}\nedges: {}\n",
        graph.vertex_count(),
        graph.edge_count()
    ));
    for v in graph.vertices() {
        out.push_str(&format!("{v} {}\n", v.weight()));
    }
    for (from, op, to) in graph.edges() {
        out.push_str(&format!(
            "{} -> {} [{}]\n",
            graph.vertex(from),
            graph.vertex(to),
            operator_label(op, ascii)
        ));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeRecord {
    pub from: String,
    pub to: String,
    pub index: u8,
    pub odd: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexRecord {
    pub id: String,
    pub weight: Vec<u32>,
}

/// Self-describing record for one crystal graph.
#[derive(Debug, Clone, Serialize)]
pub struct CrystalRecord {
    pub format: &'static str,
    pub kind: &'static str,
    pub rank: u8,
    pub shape: Vec<u32>,
    pub vertex_count: usize,
    pub highest: Vec<String>,
    pub lowest: Vec<String>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

impl CrystalRecord {
    pub fn new<V>(graph: &CrystalGraph<V>, shape: &StrictPartition) -> Self
    where
        V: CrystalElement + Display,
    {
        CrystalRecord {
            format: FORMAT_TAG,
            kind: "crystal",
            rank: graph.rank(),
            shape: shape.parts().to_vec(),
            vertex_count: graph.vertex_count(),
            highest: graph
                .highest_vertex_indices()
                .into_iter()
                .map(|k| graph.vertex(k).to_string())
                .collect(),
            lowest: graph
                .lowest_vertex_indices()
                .into_iter()
                .map(|k| graph.vertex(k).to_string())
                .collect(),
            vertices: graph
                .vertices()
                .iter()
                .map(|v| VertexRecord {
                    id: v.to_string(),
                    weight: v.weight().counts().to_vec(),
                })
                .collect(),
            edges: graph
                .edges()
                .map(|(from, op, to)| EdgeRecord {
                    from: graph.vertex(from).to_string(),
                    to: graph.vertex(to).to_string(),
                    index: op.index(),
                    odd: op.is_odd(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LrRow {
    pub shape: Vec<u32>,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub word_witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub tableau_witnesses: Vec<String>,
}

/// Self-describing record for one Littlewood-Richardson run.
#[derive(Debug, Clone, Serialize)]
pub struct LrRecord {
    pub format: &'static str,
    pub kind: &'static str,
    pub rank: u8,
    pub lhs: Vec<u32>,
    pub rhs: Vec<u32>,
    pub method: String,
    pub rows: Vec<LrRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InsertStep {
    pub letter: Letter,
    pub tableau: String,
}

/// Self-describing record for one insertion trace.
#[derive(Debug, Clone, Serialize)]
pub struct InsertRecord {
    pub format: &'static str,
    pub kind: &'static str,
    pub rank: u8,
    pub start: String,
    pub steps: Vec<InsertStep>,
    pub result: String,
    pub shape: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct HwvEntry {
    pub word: String,
    pub weight: Vec<u32>,
    pub component_size: usize,
}

/// Self-describing record for a highest-weight-vector listing.
#[derive(Debug, Clone, Serialize)]
pub struct HwvRecord {
    pub format: &'static str,
    pub kind: &'static str,
    pub rank: u8,
    pub length: usize,
    pub entries: Vec<HwvEntry>,
}
