use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context as _, Result};
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

pub const TOOL: &str = "curvop";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A finished command: the JSON payload, the same data as a flat table, and
/// whether every gated check passed.
pub struct Output {
    pub command: &'static str,
    pub config: Value,
    pub passed: bool,
    pub results: Value,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra `# key value` lines for the CSV preamble.
    pub notes: Vec<String>,
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    config: &'a Value,
    passed: bool,
    results: &'a Value,
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn num(x: f64) -> String {
    format!("{x:?}")
}

impl Output {
    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Json => {
                let env = Envelope {
                    tool: TOOL,
                    version: VERSION,
                    command: self.command,
                    config: &self.config,
                    passed: self.passed,
                    results: &self.results,
                };
                let mut buf = serde_json::to_vec_pretty(&env)?;
                buf.push(b'\n');
                Ok(buf)
            }
            Format::Csv => {
                let mut buf = Vec::new();
                writeln!(buf, "# tool {TOOL} {VERSION}")?;
                writeln!(buf, "# command {}", self.command)?;
                writeln!(buf, "# config {}", serde_json::to_string(&self.config)?)?;
                writeln!(buf, "# passed {}", self.passed)?;
                for n in &self.notes {
                    writeln!(buf, "# {n}")?;
                }
                let mut w = csv::Writer::from_writer(buf);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                Ok(w.into_inner().context("flushing csv")?)
            }
        }
    }

    pub fn write(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let bytes = self.render(format)?;
        match out {
            Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
            None => io::stdout().lock().write_all(&bytes).context("writing stdout"),
        }
    }
}
