use clap::{Args, ValueEnum};
use glinfo_core::model::DEFAULT_CUTOFF_MULTIPLE;
use glinfo_core::{
    coherence_length, measures_at_temperature, CoherenceInput, DistributionKind, Error, Material,
};
use rayon::prelude::*;

use super::{measure_cells, measure_columns};
use crate::output::{Cell, Column, OutputTable};
use crate::{usage, MaterialSource, Report, TemperatureArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// sech^2 density on [0, inf).
    SemiInfinite,
    /// Normalized tanh^2 density on [0, n xi].
    Truncated,
}

#[derive(Debug, Args)]
pub struct MeasuresArgs {
    #[command(flatten)]
    pub source: MaterialSource,
    #[command(flatten)]
    pub temperatures: TemperatureArgs,
    #[arg(long, value_enum, default_value_t = Kind::SemiInfinite)]
    pub kind: Kind,
    /// Support length of the truncated density in units of xi.
    #[arg(long, default_value_t = DEFAULT_CUTOFF_MULTIPLE)]
    pub n: f64,
}

impl MeasuresArgs {
    pub fn distribution(&self) -> anyhow::Result<DistributionKind> {
        match self.kind {
            Kind::SemiInfinite => Ok(DistributionKind::SemiInfinite),
            Kind::Truncated if self.n > 0.0 && self.n.is_finite() => {
                Ok(DistributionKind::Truncated { n: self.n })
            }
            Kind::Truncated => Err(usage(format!("--n must be positive, got {}", self.n))),
        }
    }
}

pub fn run(args: &MeasuresArgs, catalog: &[Material]) -> anyhow::Result<Report> {
    let material = args.source.resolve(catalog)?;
    let temperatures = args.temperatures.resolve(material.tc)?;
    let kind = args.distribution()?;

    let mut columns = vec![Column::new("T"), Column::new("T/Tc"), Column::new("xi")];
    columns.extend(measure_columns());
    let mut table = OutputTable::new(columns);
    let mut failures = Vec::new();

    let results: Vec<_> = temperatures
        .par_iter()
        .map(|&t| {
            let input = CoherenceInput::new(material.xi0, t, material.tc);
            let xi = coherence_length(&input)?;
            measures_at_temperature(material.xi0, material.tc, t, kind).map(|m| (xi, m))
        })
        .collect();
    for (&t, result) in temperatures.iter().zip(results) {
        match result {
            Ok((xi, m)) => {
                let mut row = vec![Cell::Real(t), Cell::Real(t / material.tc), Cell::Real(xi)];
                row.extend(measure_cells(&m));
                table.push(row);
            }
            Err(e @ Error::AboveCritical { .. }) => {
                failures.push(format!("{}: {e}", material.name))
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Report { table, failures })
}
