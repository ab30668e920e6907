use clap::Args;
use glinfo_core::measures::{tsallis, Q_WINDOW};
use glinfo_core::{coherence_length, CoherenceInput, Error, Material};
use rayon::prelude::*;

use super::q_label;
use crate::output::{Cell, Column, OutputTable};
use crate::{usage, MaterialSource, Report, TemperatureArgs};

/// Default q grid: 0.95 to 1.03 in steps of 0.01.
const DEFAULT_Q_GRID: (f64, f64, usize) = (0.95, 1.03, 9);

#[derive(Debug, Args)]
pub struct TsallisArgs {
    #[command(flatten)]
    pub source: MaterialSource,
    /// Lower end of an evenly spaced q grid.
    #[arg(long, requires_all = ["q_max", "steps"], conflicts_with = "q")]
    pub q_min: Option<f64>,
    #[arg(long, requires = "q_min")]
    pub q_max: Option<f64>,
    /// Number of grid points, ends included.
    #[arg(long, requires = "q_min")]
    pub steps: Option<usize>,
    /// Explicit ascending q values, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<f64>,
    #[command(flatten)]
    pub temperatures: TemperatureArgs,
}

impl TsallisArgs {
    /// Ascending q values, all inside the validity window.
    pub fn q_values(&self) -> anyhow::Result<Vec<f64>> {
        let qs = if !self.q.is_empty() {
            if !self.q.windows(2).all(|w| w[1] > w[0]) {
                return Err(usage("--q values must be strictly ascending"));
            }
            self.q.clone()
        } else {
            let (lo, hi, steps) = match (self.q_min, self.q_max, self.steps) {
                (Some(lo), Some(hi), Some(steps)) => (lo, hi, steps),
                _ => DEFAULT_Q_GRID,
            };
            if !(lo < hi) {
                return Err(usage(format!("--q-min {lo} must be below --q-max {hi}")));
            }
            if steps < 2 {
                return Err(usage("--steps must be at least 2"));
            }
            let h = (hi - lo) / (steps - 1) as f64;
            let mut qs: Vec<f64> = (0..steps).map(|k| lo + k as f64 * h).collect();
            qs[steps - 1] = hi;
            qs
        };
        if let Some(&q) = qs.iter().find(|&&q| !(q > Q_WINDOW.0 && q <= Q_WINDOW.1)) {
            return Err(usage(format!(
                "q = {q} is outside the validity window ({}, {}]",
                Q_WINDOW.0, Q_WINDOW.1
            )));
        }
        Ok(qs)
    }
}

/// Grid columns plus a Shannon column at q = 1 when the grid brackets 1
/// without containing it. The flag marks the inserted column.
fn with_shannon_column(qs: &[f64]) -> Vec<(f64, bool)> {
    let mut cols: Vec<(f64, bool)> = qs.iter().map(|&q| (q, false)).collect();
    let brackets = qs.first().is_some_and(|&q| q < 1.0) && qs.last().is_some_and(|&q| q > 1.0);
    if brackets && !qs.contains(&1.0) {
        let at = qs.partition_point(|&q| q < 1.0);
        cols.insert(at, (1.0, true));
    }
    cols
}

pub fn run(args: &TsallisArgs, catalog: &[Material]) -> anyhow::Result<Report> {
    let material = args.source.resolve(catalog)?;
    let temperatures = args.temperatures.resolve(material.tc)?;
    let cols = with_shannon_column(&args.q_values()?);

    let mut columns = vec![Column::new("T"), Column::new("T/Tc"), Column::new("xi")];
    columns.extend(cols.iter().map(|&(q, shannon)| {
        if shannon {
            Column::new("S[q=1]")
        } else {
            Column::new(format!("T_q[q={}]", q_label(q)))
        }
    }));
    let mut table = OutputTable::new(columns);
    let mut failures = Vec::new();

    let rows: Vec<_> = temperatures
        .par_iter()
        .map(|&t| -> Result<Vec<Cell>, Error> {
            let xi = coherence_length(&CoherenceInput::new(material.xi0, t, material.tc))?;
            let mut row = vec![Cell::Real(t), Cell::Real(t / material.tc), Cell::Real(xi)];
            for &(q, _) in &cols {
                row.push(Cell::Real(tsallis(xi, q)?));
            }
            Ok(row)
        })
        .collect();
    for row in rows {
        match row {
            Ok(row) => table.push(row),
            Err(e @ Error::AboveCritical { .. }) => {
                failures.push(format!("{}: {e}", material.name))
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Report { table, failures })
}
