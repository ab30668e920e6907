//! Tabular output in csv, tsv or an aligned layout with scaled columns.

use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
    /// Aligned columns; selected columns scaled by a power of ten.
    Pretty,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(u64),
    Real(f64),
    /// Input data echoed back with its shortest round-trip representation.
    Exact(f64),
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: String,
    /// Pretty output prints `value * 10^-scale` and tags the header with `x1e{scale}`.
    pub scale: Option<i32>,
}

impl Column {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            scale: None,
        }
    }

    pub fn scaled(name: impl Into<String>, scale: i32) -> Self {
        Self {
            name: name.into(),
            scale: Some(scale),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OutputTable {
    columns: Vec<Column>,
    rows: Vec<Vec<Cell>>,
}

impl OutputTable {
    pub fn new(columns: Vec<Column>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    /// Panics if the row width differs from the header width.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.delimited(','),
            Format::Tsv => self.delimited('\t'),
            Format::Pretty => self.pretty(),
        }
    }

    fn delimited(&self, sep: char) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.columns.iter().map(|c| quote(&c.name, sep)).collect();
        out.push_str(&header.join(&sep.to_string()));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|cell| match cell {
                    Cell::Text(s) => quote(s, sep),
                    Cell::Int(v) => v.to_string(),
                    Cell::Real(v) => scientific(*v),
                    Cell::Exact(v) => v.to_string(),
                })
                .collect();
            out.push_str(&cells.join(&sep.to_string()));
            out.push('\n');
        }
        out
    }

    fn pretty(&self) -> String {
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|c| match c.scale {
                Some(k) => format!("{} (x1e{k})", c.name),
                None => c.name.clone(),
            })
            .collect();
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&self.columns)
                    .map(|(cell, col)| match (cell, col.scale) {
                        (Cell::Text(s), _) => s.clone(),
                        (Cell::Int(v), _) => v.to_string(),
                        (Cell::Exact(v), _) => v.to_string(),
                        (Cell::Real(v), Some(k)) => format!("{:.3}", v * 10f64.powi(-k)),
                        (Cell::Real(v), None) => plain(*v),
                    })
                    .collect()
            })
            .collect();

        let widths: Vec<usize> = (0..header.len())
            .map(|j| {
                body.iter()
                    .map(|r| r[j].len())
                    .chain([header[j].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let text_column: Vec<bool> = (0..header.len())
            .map(|j| {
                self.rows.iter().all(|r| matches!(r[j], Cell::Text(_))) && !self.rows.is_empty()
            })
            .collect();

        let mut out = String::new();
        for line in std::iter::once(&header).chain(&body) {
            let cells: Vec<String> = line
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    if text_column[j] {
                        format!("{s:<w$}", w = widths[j])
                    } else {
                        format!("{s:>w$}", w = widths[j])
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

/// Six significant digits, C-style exponent: `1.26020e-05`.
pub fn scientific(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    let s = format!("{v:.5e}");
    let (mantissa, exp) = s.split_once('e').expect("LowerExp always has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

fn plain(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-3..1e6).contains(&a) {
        format!("{v:.6}")
    } else {
        scientific(v)
    }
}

fn quote(s: &str, sep: char) -> String {
    if s.contains(sep) || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
