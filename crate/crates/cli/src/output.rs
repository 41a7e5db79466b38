use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value};

pub type Row = Map<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line, then a `{"summary": ..}` line
    Json,
    /// Header plus one record per row, then a `# summary ..` line
    Csv,
}

#[derive(Debug, Default)]
pub struct Report {
    pub rows: Vec<Row>,
    pub summary: Row,
    /// A verification claim failed (exit code 1).
    pub failed: bool,
}

pub fn emit(report: &Report, format: Format, path: Option<&Path>) -> io::Result<()> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            write_report(report, format, &mut w)?;
            w.flush()
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            write_report(report, format, &mut w)?;
            w.flush()
        }
    }
}

pub fn write_report<W: Write>(report: &Report, format: Format, w: &mut W) -> io::Result<()> {
    let summary = Value::Object(report.summary.clone());
    match format {
        Format::Json => {
            for row in &report.rows {
                serde_json::to_writer(&mut *w, row)?;
                writeln!(w)?;
            }
            let mut wrapped = Map::new();
            wrapped.insert("summary".into(), summary);
            serde_json::to_writer(&mut *w, &wrapped)?;
            writeln!(w)?;
        }
        Format::Csv => {
            if let Some(first) = report.rows.first() {
                let mut csv = csv::Writer::from_writer(&mut *w);
                csv.write_record(first.keys())?;
                for row in &report.rows {
                    csv.write_record(row.values().map(csv_cell))?;
                }
                csv.flush()?;
            }
            writeln!(w, "# summary {summary}")?;
        }
    }
    Ok(())
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
