use clap::Args;
use glinfo_core::bvp::{
    solve_profile_with, BvpOptions, GridSpacing, InitialGuess, DEFAULT_LENGTH_MULTIPLE,
};

use crate::output::{Cell, Column, OutputTable};
use crate::{usage, Report};

#[derive(Debug, Args)]
pub struct BvpArgs {
    /// Coherence length in nm.
    #[arg(long, default_value_t = 1.0)]
    pub xi: f64,
    /// Domain length in units of xi.
    #[arg(long, default_value_t = DEFAULT_LENGTH_MULTIPLE)]
    pub length: f64,
    /// Grid sizes, ascending; each row reports the error ratio to the previous one.
    #[arg(long, value_delimiter = ',', default_value = "2001")]
    pub points: Vec<usize>,
    /// Newton residual tolerance.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Uniform grid instead of the default sinh-stretched grid.
    #[arg(long)]
    pub uniform: bool,
    /// Start from tanh instead of a linear ramp.
    #[arg(long)]
    pub analytic_guess: bool,
    /// Largest accepted deviation from tanh on the finest grid.
    #[arg(long, default_value_t = 1e-6)]
    pub max_deviation: f64,
}

pub fn run(args: &BvpArgs) -> anyhow::Result<Report> {
    if !args.points.windows(2).all(|w| w[1] > w[0]) {
        return Err(usage("--points must be strictly ascending"));
    }
    let opts = BvpOptions {
        spacing: if args.uniform {
            GridSpacing::Uniform
        } else {
            BvpOptions::default().spacing
        },
        initial_guess: if args.analytic_guess {
            InitialGuess::Analytic
        } else {
            InitialGuess::LinearRamp
        },
        ..BvpOptions::default()
    };
    let mut table = OutputTable::new(vec![
        Column::new("points"),
        Column::new("iterations"),
        Column::new("residual"),
        Column::new("max_deviation"),
        Column::new("ratio_to_previous"),
    ]);
    let mut previous: Option<f64> = None;
    let mut finest = 0.0;
    for &n in &args.points {
        let sol = solve_profile_with(args.xi, args.length * args.xi, n, args.tol, &opts)?;
        let ratio = match previous {
            Some(p) => Cell::Real(p / sol.max_deviation),
            None => Cell::Text(String::new()),
        };
        table.push(vec![
            Cell::Int(n as u64),
            Cell::Int(sol.iterations as u64),
            Cell::Real(sol.residual),
            Cell::Real(sol.max_deviation),
            ratio,
        ]);
        previous = Some(sol.max_deviation);
        finest = sol.max_deviation;
    }
    let mut failures = Vec::new();
    if finest > args.max_deviation {
        failures.push(format!(
            "deviation {finest:e} at {} points exceeds {:e}",
            args.points.last().unwrap(),
            args.max_deviation
        ));
    }
    Ok(Report { table, failures })
}
