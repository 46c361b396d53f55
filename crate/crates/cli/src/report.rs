use std::io::Write;

use clap::ValueEnum;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One flat result row; keys keep insertion order.
#[derive(Clone, Debug, Default)]
pub struct Record(Vec<(&'static str, Value)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.0.push((key, value.into()));
        self
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Status {
    pub pass: bool,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Vec<Record>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            results: Vec::new(),
            status: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.as_ref().is_none_or(|s| s.pass)
    }

    pub fn write(&self, format: Format, out: impl Write) -> anyhow::Result<()> {
        match format {
            Format::Json => {
                let mut out = out;
                serde_json::to_writer_pretty(&mut out, self)?;
                writeln!(out)?;
            }
            Format::Csv => self.write_csv(out)?,
        }
        Ok(())
    }

    fn write_csv(&self, out: impl Write) -> anyhow::Result<()> {
        let mut header: Vec<&'static str> = Vec::new();
        for rec in &self.results {
            for (k, _) in &rec.0 {
                if !header.contains(k) {
                    header.push(k);
                }
            }
        }
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&header)?;
        for rec in &self.results {
            let row = header.iter().map(|h| {
                rec.0
                    .iter()
                    .find(|(k, _)| k == h)
                    .map(|(_, v)| cell(v))
                    .unwrap_or_default()
            });
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
