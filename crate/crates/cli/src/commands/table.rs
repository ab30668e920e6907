use glinfo_core::liu::{liu_identity, DEFAULT_CUTOFF_TOL};
use glinfo_core::model::DEFAULT_CUTOFF_MULTIPLE;
use glinfo_core::{measure_set, measure_set_truncated, Material};
use rayon::prelude::*;

use super::{measure_cells, measure_columns};
use crate::output::{Cell, Column, OutputTable};
use crate::{Report, TableId};

/// Tolerance on |S - (-1 + I1F + I2F)| below which a row counts as confirmed.
pub const LIU_TOLERANCE: f64 = 1e-6;

pub fn run(which: TableId, catalog: &[Material]) -> anyhow::Result<Report> {
    match which {
        TableId::Liu => liu_table(catalog),
        TableId::SemiInfinite | TableId::Truncated => measure_table(which, catalog),
    }
}

fn liu_table(catalog: &[Material]) -> anyhow::Result<Report> {
    let mut table = OutputTable::new(vec![
        Column::new("name"),
        Column::new("Z"),
        Column::new("xi0_nm"),
        Column::new("X_nm"),
        Column::new("S"),
        Column::new("I1F"),
        Column::new("I2F"),
        Column::new("sum"),
        Column::new("residual"),
    ]);
    let reports = catalog
        .par_iter()
        .map(|m| liu_identity(m.xi0, DEFAULT_CUTOFF_TOL))
        .collect::<Result<Vec<_>, _>>()?;
    let mut failures = Vec::new();
    for (m, r) in catalog.iter().zip(&reports) {
        if !r.holds(LIU_TOLERANCE) {
            failures.push(format!(
                "{}: |S - (-1 + I1F + I2F)| = {:e} exceeds {LIU_TOLERANCE:e}",
                m.name, r.residual
            ));
        }
        table.push(vec![
            Cell::Text(m.name.clone()),
            Cell::Int(m.atomic_number.into()),
            Cell::Exact(m.xi0),
            Cell::Real(r.cutoff),
            Cell::Real(r.shannon),
            Cell::Real(r.i1f_total),
            Cell::Real(r.i2f_total),
            Cell::Real(r.identity_sum),
            Cell::Real(r.residual),
        ]);
    }
    Ok(Report { table, failures })
}

fn measure_table(which: TableId, catalog: &[Material]) -> anyhow::Result<Report> {
    let mut columns = vec![
        Column::new("name"),
        Column::new("Z"),
        Column::new("xi0_nm"),
        Column::new("Tc_K"),
    ];
    // the reference tables stop at C
    columns.extend(measure_columns().into_iter().take(4));
    let mut table = OutputTable::new(columns);
    let sets = catalog
        .par_iter()
        .map(|m| match which {
            TableId::Truncated => measure_set_truncated(m.xi0, DEFAULT_CUTOFF_MULTIPLE),
            _ => measure_set(m.xi0),
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (m, set) in catalog.iter().zip(&sets) {
        let mut row = vec![
            Cell::Text(m.name.clone()),
            Cell::Int(m.atomic_number.into()),
            Cell::Exact(m.xi0),
            Cell::Exact(m.tc),
        ];
        row.extend(measure_cells(set).into_iter().take(4));
        table.push(row);
    }
    Ok(Report::ok(table))
}
