//! Report model shared by every subcommand, and its text, JSON and CSV
//! renderings.

use std::fmt::Write as _;

use cyclodiv::CoeffSet;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::OutputFormat;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Null,
    Bool(bool),
    UInt(u64),
    Int(BigInt),
    Str(String),
    Set(CoeffSet),
    Ints(Vec<BigInt>),
    UInts(Vec<u64>),
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::UInt(v)
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Str(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Str(v)
    }
}

impl From<CoeffSet> for Cell {
    fn from(v: CoeffSet) -> Self {
        Cell::Set(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Null, Into::into)
    }
}

fn int_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn brace_list<T: ToString>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Null => Value::Null,
            Cell::Bool(b) => json!(b),
            Cell::UInt(u) => json!(u),
            Cell::Int(i) => int_value(i),
            Cell::Str(s) => json!(s),
            Cell::Set(s) => Value::Array(s.values().iter().map(int_value).collect()),
            Cell::Ints(v) => Value::Array(v.iter().map(int_value).collect()),
            Cell::UInts(v) => json!(v),
        }
    }

    /// Flat rendering for text and CSV; intervals collapse to `min..max`.
    fn to_field(&self) -> String {
        match self {
            Cell::Null => String::new(),
            Cell::Bool(b) => b.to_string(),
            Cell::UInt(u) => u.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Str(s) => s.clone(),
            Cell::Set(s) => match s.as_interval() {
                Some((lo, hi)) => format!("{lo}..{hi}"),
                None => brace_list(s.values()),
            },
            Cell::Ints(v) => brace_list(v),
            Cell::UInts(v) => brace_list(v),
        }
    }
}

pub type Row = Vec<(&'static str, Cell)>;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Budget = 3,
    Mismatch = 1,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// One `key: value` line per field; used for single-object commands.
    Record,
    /// A header line followed by one tab-separated line per row.
    Table,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub params: Row,
    pub rows: Vec<Row>,
    /// Sweep items processed: prime pairs for `atlas`, values of `n` otherwise.
    pub items: usize,
    pub mismatches: usize,
    pub skipped: usize,
    pub elapsed_millis: Option<u128>,
    pub layout: Layout,
}

impl Report {
    pub fn new(command: &'static str, params: Row, layout: Layout) -> Self {
        Report {
            command,
            params,
            rows: Vec::new(),
            items: 0,
            mismatches: 0,
            skipped: 0,
            elapsed_millis: None,
            layout,
        }
    }

    pub fn status(&self) -> Status {
        if self.mismatches > 0 {
            Status::Mismatch
        } else if self.skipped > 0 && self.command == "atlas" {
            Status::Budget
        } else {
            Status::Ok
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: items={} mismatches={} skipped={}",
            self.command, self.items, self.mismatches, self.skipped
        )
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Json => self.render_json(),
            OutputFormat::Csv => self.render_csv(),
        }
    }

    fn render_json(&self) -> String {
        let object = |row: &Row| -> Value {
            Value::Object(
                row.iter()
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect::<Map<_, _>>(),
            )
        };
        let doc = json!({
            "version": SCHEMA_VERSION,
            "command": self.command,
            "params": object(&self.params),
            "rows": self.rows.iter().map(object).collect::<Vec<_>>(),
            "summary": {
                "pairs": self.items,
                "mismatches": self.mismatches,
                "skipped": self.skipped,
                "elapsedMillis": self.elapsed_millis.map(|m| m as u64),
            },
        });
        let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
        out.push('\n');
        out
    }

    fn render_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::NonNumeric)
            .from_writer(Vec::new());
        if let Some(first) = self.rows.first() {
            w.write_record(first.iter().map(|(k, _)| *k))
                .expect("in-memory write");
        }
        for row in &self.rows {
            w.write_record(row.iter().map(|(_, v)| v.to_field()))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match self.layout {
            Layout::Record => {
                for row in &self.rows {
                    for (k, v) in row {
                        let _ = writeln!(out, "{k}: {}", v.to_field());
                    }
                }
            }
            Layout::Table => {
                if let Some(first) = self.rows.first() {
                    let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                    let _ = writeln!(out, "{}", header.join("\t"));
                }
                for row in &self.rows {
                    let fields: Vec<String> = row.iter().map(|(_, v)| v.to_field()).collect();
                    let _ = writeln!(out, "{}", fields.join("\t"));
                }
                let _ = writeln!(out, "# {}", self.summary_line());
            }
        }
        out
    }
}
