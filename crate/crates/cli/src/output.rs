//! Line-oriented output in JSON-lines or CSV.
//!
//! Every command emits a leading meta line echoing the command and argv,
//! then its data lines, then a closing wall-time line. In JSON mode each
//! line is one object; in CSV mode a header row is emitted whenever the
//! column set changes, so each line stays valid CSV on its own.

use std::io::Write;

use serde_json::Value;

pub type Record = Vec<(&'static str, Value)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
    last_header: Option<Vec<&'static str>>,
}

impl<'a> Emitter<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Self {
            format,
            out,
            last_header: None,
        }
    }

    pub fn record(&mut self, record: &Record) -> std::io::Result<()> {
        match self.format {
            Format::Json => {
                let mut map = serde_json::Map::new();
                for (k, v) in record {
                    map.insert((*k).to_string(), v.clone());
                }
                writeln!(self.out, "{}", Value::Object(map))
            }
            Format::Csv => {
                let header: Vec<&'static str> = record.iter().map(|(k, _)| *k).collect();
                if self.last_header.as_deref() != Some(&header[..]) {
                    writeln!(self.out, "{}", header.join(","))?;
                    self.last_header = Some(header);
                }
                let row: Vec<String> = record.iter().map(|(_, v)| csv_cell(v)).collect();
                writeln!(self.out, "{}", row.join(","))
            }
        }
    }

    /// Serializes a whole value (e.g. a verification report) as one line.
    pub fn json_value(&mut self, value: &Value) -> std::io::Result<()> {
        debug_assert_eq!(self.format, Format::Json);
        writeln!(self.out, "{value}")
    }
}

fn csv_cell(value: &Value) -> String {
    let raw = match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|v| match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            })
            .collect::<Vec<_>>()
            .join(";"),
        other => other.to_string(),
    };
    csv_escape(&raw)
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}
