use std::io::Write;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// A command result in all three output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            header: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn table<H: Into<String>>(
        mut self,
        header: impl IntoIterator<Item = H>,
        rows: Vec<Vec<String>>,
    ) -> Self {
        self.header = header.into_iter().map(Into::into).collect();
        self.rows = rows;
        self
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> anyhow::Result<()> {
        match format {
            Format::Text => {
                out.write_all(self.text.as_bytes())?;
                if !self.text.ends_with('\n') {
                    out.write_all(b"\n")?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.json)?;
                out.write_all(b"\n")?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}

/// `[1, 2, 3]` as `1 2 3`, the list form used inside CSV cells.
pub fn spaced(items: &[u32]) -> String {
    items
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Member lists as `1 2|2 3`.
pub fn lists_cell(lists: &[Vec<u32>]) -> String {
    lists
        .iter()
        .map(|l| spaced(l))
        .collect::<Vec<_>>()
        .join("|")
}
