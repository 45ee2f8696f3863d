//! Table rendering in the four output formats.

use kappa_core::kappa::{weighted_label, StructureTable, DIM};
use serde::Serialize;

fn grid(table: &StructureTable) -> Vec<Vec<String>> {
    let mut rows = Vec::with_capacity(DIM + 1);
    rows.push(std::iter::once("*".to_string()).chain((0..DIM).map(weighted_label)).collect());
    for r in 0..DIM {
        rows.push(
            std::iter::once(weighted_label(r))
                .chain((0..DIM).map(|c| table.get(r, c).label()))
                .collect(),
        );
    }
    rows
}

pub fn markdown(table: &StructureTable) -> String {
    let rows = grid(table);
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        out.push_str("| ");
        out.push_str(&row.join(" | "));
        out.push_str(" |\n");
        if i == 0 {
            out.push('|');
            out.push_str(&"---|".repeat(row.len()));
            out.push('\n');
        }
    }
    out
}

pub fn csv(table: &StructureTable) -> String {
    let quote = |s: &String| if s.contains(',') { format!("\"{s}\"") } else { s.clone() };
    grid(table)
        .iter()
        .map(|row| row.iter().map(quote).collect::<Vec<_>>().join(",") + "\n")
        .collect()
}

pub fn text(table: &StructureTable) -> String {
    let rows = grid(table);
    let width = rows.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    let mut out = format!("lambda = {}\n", table.lambda);
    for (i, row) in rows.iter().enumerate() {
        let line: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
        if i == 0 {
            out.push_str(&"-".repeat((width + 2) * row.len() - 2));
            out.push('\n');
        }
    }
    out
}

#[derive(Serialize)]
struct JsonCell {
    index: u8,
    sign: i8,
    lambda_exp: u8,
    label: String,
}

#[derive(Serialize)]
struct JsonTable {
    lambda: kappa_core::Orientation,
    labels: Vec<String>,
    /// `cells[row][col]`, row = left factor.
    cells: Vec<Vec<JsonCell>>,
}

pub fn json(table: &StructureTable) -> String {
    let doc = JsonTable {
        lambda: table.lambda,
        labels: (0..DIM).map(weighted_label).collect(),
        cells: table
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| JsonCell { index: e.index, sign: e.sign, lambda_exp: e.lambda_exp, label: e.label() })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("table is serializable") + "\n"
}
