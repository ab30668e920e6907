pub mod bvp;
pub mod liu;
pub mod measures;
pub mod table;
pub mod tsallis;
pub mod verify;

use glinfo_core::{Material, MeasureSet};

use crate::output::{Cell, Column, OutputTable};

/// The catalog in the material file format; csv output loads back unchanged.
pub fn materials_table(catalog: &[Material]) -> OutputTable {
    let mut table = OutputTable::new(vec![
        Column::new("name"),
        Column::new("Z"),
        Column::new("xi0_nm"),
        Column::new("Tc_K"),
    ]);
    for m in catalog {
        table.push(vec![
            Cell::Text(m.name.clone()),
            Cell::Int(m.atomic_number.into()),
            Cell::Exact(m.xi0),
            Cell::Exact(m.tc),
        ]);
    }
    table
}

fn measure_columns() -> Vec<Column> {
    vec![
        Column::new("S"),
        Column::scaled("I_F", -5),
        Column::scaled("D", -4),
        Column::scaled("C", -3),
        Column::scaled("C_tilde", -5),
    ]
}

fn measure_cells(m: &MeasureSet) -> Vec<Cell> {
    vec![
        Cell::Real(m.shannon),
        Cell::Real(m.fisher),
        Cell::Real(m.disequilibrium),
        Cell::Real(m.complexity),
        Cell::Real(m.fisher_complexity),
    ]
}

/// Display label for a q value: at most six decimals, trailing zeros removed.
fn q_label(q: f64) -> String {
    let s = format!("{q:.6}");
    let s = s.trim_end_matches('0');
    s.strip_suffix('.').unwrap_or(s).to_string()
}
