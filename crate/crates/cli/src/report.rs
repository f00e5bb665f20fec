//! Report rendering: every command produces one [`Report`] carrying both an
//! aligned text form and a machine-readable JSON record. Identical
//! invocations render byte-identical output in either format.

use std::fmt;

use serde_json::Value;

/// Output format selected by `--format`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Record,
}

/// The result of one command.
#[derive(Clone, Debug)]
pub struct Report {
    command: String,
    text: String,
    record: Value,
}

impl Report {
    pub fn new(command: impl Into<String>, text: String, record: Value) -> Self {
        Report {
            command: command.into(),
            text,
            record,
        }
    }

    pub fn command(&self) -> &str {
        &self.command
    }

    pub fn record(&self) -> &Value {
        &self.record
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Record => {
                let wrapped = serde_json::json!({
                    "command": self.command,
                    "result": self.record,
                });
                serde_json::to_string_pretty(&wrapped).expect("JSON serialization")
            }
        }
    }
}

/// Render rows under headers with space-aligned columns.
pub fn format_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(cols) {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = String::new();
    for (i, h) in headers.iter().enumerate() {
        if i > 0 {
            line.push_str("  ");
        }
        line.push_str(&pad(h, widths[i]));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate().take(cols) {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(&pad(cell, widths[i]));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn pad(s: &str, width: usize) -> String {
    format!("{s:<width$}")
}

/// Multi-line rendering of a matrix given its row-major entry strings.
pub fn format_matrix_block(n: usize, entries: &[String], indent: &str) -> String {
    let mut widths = vec![0usize; n];
    for (idx, e) in entries.iter().enumerate() {
        let col = idx % n;
        widths[col] = widths[col].max(e.len());
    }
    let mut out = String::new();
    for i in 0..n {
        out.push_str(indent);
        out.push('[');
        for j in 0..n {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&pad(&entries[i * n + j], widths[j]));
        }
        out.push_str("]\n");
    }
    out
}

/// Errors surfaced by the CLI, partitioned by exit status: usage errors
/// exit 2, domain errors exit 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<crate::parse::ParseError> for CliError {
    fn from(e: crate::parse::ParseError) -> Self {
        CliError::Domain(format!("parse error {e}"))
    }
}
