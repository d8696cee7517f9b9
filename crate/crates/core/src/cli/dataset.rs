use serde::Serialize;
use serde_json::{json, Value};

use super::config::RunConfig;
use crate::error::{Error, Result};
use crate::numfmt::fixed_sig;

const SIG: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Num(x) => fixed_sig(*x, SIG),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(n) => json!(n),
            Cell::Num(x) => json!(x),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<Cell>,
}

/// Tabular output of one command plus everything needed to regenerate it.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureDataset {
    pub kind: String,
    pub config: RunConfig,
    pub summary: Vec<(String, Cell)>,
    pub columns: Vec<Column>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

impl FigureDataset {
    pub fn new(kind: &str, config: RunConfig, names: &[&str]) -> Self {
        Self {
            kind: kind.to_string(),
            config,
            summary: Vec::new(),
            columns: names
                .iter()
                .map(|n| Column { name: n.to_string(), values: Vec::new() })
                .collect(),
        }
    }

    /// Appends one row; panics if the arity is wrong.
    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row arity");
        for (col, cell) in self.columns.iter_mut().zip(row) {
            col.values.push(cell);
        }
    }

    pub fn note(&mut self, key: &str, value: impl Into<Cell>) {
        self.summary.push((key.to_string(), value.into()));
    }

    pub fn rows(&self) -> usize {
        self.columns.first().map_or(0, |c| c.values.len())
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# kind: {}\n", self.kind));
        out.push_str(&format!("# version: {}\n", env!("CARGO_PKG_VERSION")));
        out.push_str(&format!("# config: {}\n", self.config.to_json()));
        for (k, v) in &self.summary {
            out.push_str(&format!("# {k}: {}\n", v.render()));
        }
        let header: Vec<&str> = self.columns.iter().map(|c| c.name.as_str()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for r in 0..self.rows() {
            let cells: Vec<String> = self.columns.iter().map(|c| c.values[r].render()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let summary: serde_json::Map<String, Value> =
            self.summary.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
        let columns: Vec<Value> = self
            .columns
            .iter()
            .map(|c| json!({ "name": c.name, "values": c.values.iter().map(Cell::to_json).collect::<Vec<_>>() }))
            .collect();
        let doc = json!({
            "kind": self.kind,
            "version": env!("CARGO_PKG_VERSION"),
            "config": self.config,
            "summary": summary,
            "columns": columns,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("dataset serializes");
        s.push('\n');
        s
    }
}

/// Config embedded in a CSV or JSON dataset written by this tool.
pub fn embedded_config(text: &str) -> Result<RunConfig> {
    let bad = |message: String| Error::Parse { line: 0, message };
    if text.trim_start().starts_with('{') {
        let doc: Value = serde_json::from_str(text).map_err(|e| bad(format!("dataset is not valid JSON: {e}")))?;
        let config = doc.get("config").ok_or_else(|| bad("dataset has no config".into()))?;
        return serde_json::from_value(config.clone()).map_err(|e| bad(format!("bad embedded config: {e}")));
    }
    for (i, line) in text.lines().enumerate() {
        if let Some(rest) = line.strip_prefix("# config: ") {
            return serde_json::from_str(rest).map_err(|e| Error::Parse {
                line: i + 1,
                message: format!("bad embedded config: {e}"),
            });
        }
    }
    Err(bad("no `# config:` line found".into()))
}
