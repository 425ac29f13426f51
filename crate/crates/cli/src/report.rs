//! Rendering of command results in the four output formats.

use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::CliError;

/// Rows under a fixed header. Cells are JSON values so that the JSON
/// rendering keeps numbers numeric.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

/// The result of one analysis.
#[derive(Debug, Default)]
pub struct Report {
    /// Free-form lines shown only in text output.
    pub lines: Vec<String>,
    pub fields: Vec<(&'static str, Value)>,
    pub table: Option<Table>,
    pub dot: Option<String>,
}

impl Report {
    pub fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    pub fn line(mut self, line: impl Into<String>) -> Self {
        self.lines.push(line.into());
        self
    }

    pub fn table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn dot(mut self, dot: String) -> Self {
        self.dot = Some(dot);
        self
    }
}

pub enum Output {
    Report(Report),
    /// Already rendered in the requested format.
    Raw(String),
}

/// Plain rendering of one cell.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn text(r: &Report) -> String {
    let mut out = String::new();
    for l in &r.lines {
        out.push_str(l);
        out.push('\n');
    }
    for (k, v) in &r.fields {
        out.push_str(&format!("{k}: {}\n", cell(v)));
    }
    if let Some(t) = &r.table {
        if !out.is_empty() {
            out.push('\n');
        }
        let cells: Vec<Vec<String>> = t.rows.iter().map(|row| row.iter().map(cell).collect()).collect();
        let mut width: Vec<usize> = t.header.iter().map(|h| h.chars().count()).collect();
        for row in &cells {
            for (w, c) in width.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |row: Vec<&str>| {
            let last = row.len() - 1;
            let mut s = String::new();
            for (i, c) in row.into_iter().enumerate() {
                s.push_str(c);
                if i < last {
                    s.push_str(&" ".repeat(width[i] - c.chars().count() + 2));
                }
            }
            s.push('\n');
            s
        };
        out.push_str(&line(t.header.iter().map(String::as_str).collect()));
        for row in &cells {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
    }
    out
}

fn csv_text(r: &Report) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Data(e.to_string());
    match &r.table {
        Some(t) => {
            w.write_record(&t.header).map_err(io)?;
            for row in &t.rows {
                w.write_record(row.iter().map(cell)).map_err(io)?;
            }
        }
        None => {
            w.write_record(["field", "value"]).map_err(io)?;
            for (k, v) in &r.fields {
                w.write_record([k.to_string(), cell(v)]).map_err(io)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Data(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 cells"))
}

fn json(r: &Report) -> String {
    let mut obj = Map::new();
    for (k, v) in &r.fields {
        obj.insert(k.to_string(), v.clone());
    }
    if let Some(t) = &r.table {
        let rows = t
            .rows
            .iter()
            .map(|row| Value::Object(t.header.iter().cloned().zip(row.iter().cloned()).collect()))
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialise");
    s.push('\n');
    s
}

pub fn render(out: Output, format: Format) -> Result<String, CliError> {
    let r = match out {
        Output::Raw(s) => return Ok(s),
        Output::Report(r) => r,
    };
    match format {
        Format::Text => Ok(text(&r)),
        Format::Csv => csv_text(&r),
        Format::Json => Ok(json(&r)),
        Format::Dot => r.dot.ok_or_else(|| {
            CliError::Usage("this command has no graph output; use --format text, csv or json".into())
        }),
    }
}
