//! Text rendering of reports and verdicts.

use std::fmt::Display;

use fairrep_core::{FairnessReport, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Left-aligned columns separated by two spaces, one line per row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&width).enumerate() {
            if i + 1 == cells.len() {
                out.push_str(cell);
            } else {
                out.push_str(cell);
                out.push_str(&" ".repeat(w - cell.chars().count() + 2));
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for row in rows {
        out.push_str(&line(row.clone()));
    }
    out
}

/// Renders a report. JSON mode is the report's own serialization; table
/// mode aligns the class, count, quota and deficit columns and ends with
/// the total deficit.
pub fn render_report<T: Scalar + Display>(report: &FairnessReport<T>, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Table => {
            let rows: Vec<Vec<String>> = (0..report.counts.len())
                .map(|i| {
                    vec![
                        (i + 1).to_string(),
                        report.counts[i].to_string(),
                        report.quotas[i].to_string(),
                        report.deficits[i].to_string(),
                    ]
                })
                .collect();
            let mut out = table(&["class", "count", "quota", "deficit"], &rows);
            out.push_str(&format!("total deficit: {}\n", report.total_deficit));
            out
        }
    }
}

pub fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
