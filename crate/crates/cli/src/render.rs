use std::io::{self, Write};

use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

/// Everything a subcommand produces, ready for any output format.
#[derive(Debug)]
pub struct Output {
    pub query: Value,
    pub result: Value,
    pub verdict: Option<Verdict>,
    pub table: Table,
}

#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    query: &'a Value,
    result: &'a Value,
    verdict: Option<Verdict>,
}

pub fn write(out: &Output, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let envelope = Envelope {
                query: &out.query,
                result: &out.result,
                verdict: out.verdict,
            };
            serde_json::to_writer_pretty(&mut *sink, &envelope)?;
            writeln!(sink)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(&out.table.headers)?;
            for row in &out.table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
        Format::Table => {
            write_aligned(&out.table, sink)?;
            if let Some(v) = out.verdict {
                writeln!(sink, "verdict: {}", if v == Verdict::Pass { "pass" } else { "fail" })?;
            }
            Ok(())
        }
    }
}

fn write_aligned(table: &Table, sink: &mut dyn Write) -> io::Result<()> {
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let padded: Vec<String> = cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(sink, "{}", line(&mut table.headers.iter().copied()))?;
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    writeln!(sink, "{}", rule.join("  "))?;
    for row in &table.rows {
        writeln!(sink, "{}", line(&mut row.iter().map(String::as_str)))?;
    }
    Ok(())
}
