use std::str::FromStr;

use clap::Args;
use glinfo_core::bvp::solve_profile;
use glinfo_core::liu::{liu_identity, DEFAULT_CUTOFF_TOL};
use glinfo_core::measures::{
    disequilibrium, fisher, fisher_q, shannon, truncated_fisher, truncated_shannon, tsallis,
};
use glinfo_core::model::{fisher_from_energy_ratio, surface_to_bulk_ratio};
use glinfo_core::{builtin_materials, measure_numeric, DistributionSpec, MeasureKind};

use super::q_label;
use super::table::LIU_TOLERANCE;
use crate::output::{Cell, Column, OutputTable};
use crate::{usage, Report};

const XI_GRID: [f64; 7] = [1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0];
const Q_GRID: [f64; 8] = [0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9];
const QUADRATURE_TOL: f64 = 1e-12;
const EXACT_TOL: f64 = 1e-12;
const BVP_TOL: f64 = 1e-6;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Scale one closed form by (1 + REL) before comparing, to exercise the detector.
    /// MEASURE is shannon, fisher, disequilibrium, tsallis or fisher-q.
    #[arg(long, num_args = 2, value_names = ["MEASURE", "REL"])]
    pub perturb: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    Shannon,
    Fisher,
    Disequilibrium,
    Tsallis,
    FisherQ,
}

impl FromStr for Target {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "shannon" => Target::Shannon,
            "fisher" => Target::Fisher,
            "disequilibrium" => Target::Disequilibrium,
            "tsallis" => Target::Tsallis,
            "fisher-q" | "fisher_q" => Target::FisherQ,
            _ => return Err(usage(format!("unknown measure {s:?} for --perturb"))),
        })
    }
}

struct Checks {
    table: OutputTable,
    failures: Vec<String>,
    perturb: Option<(Target, f64)>,
}

impl Checks {
    fn closed(&self, target: Target, value: f64) -> f64 {
        match self.perturb {
            Some((t, rel)) if t == target => value * (1.0 + rel),
            _ => value,
        }
    }

    /// Relative deviation when the reference is nonzero, absolute otherwise.
    fn record(&mut self, check: String, value: f64, reference: f64, tol: f64) {
        let deviation = if reference == 0.0 {
            value.abs()
        } else {
            ((value - reference) / reference).abs()
        };
        let pass = deviation <= tol;
        if !pass {
            self.failures
                .push(format!("{check}: deviation {deviation:e} exceeds {tol:e}"));
        }
        self.table.push(vec![
            Cell::Text(check),
            Cell::Real(value),
            Cell::Real(reference),
            Cell::Real(deviation),
            Cell::Real(tol),
            Cell::Text(if pass { "pass" } else { "FAIL" }.into()),
        ]);
    }
}

pub fn run(args: &VerifyArgs, rel_tol: f64) -> anyhow::Result<Report> {
    let perturb = match args.perturb.as_slice() {
        [] => None,
        [measure, rel] => {
            let rel: f64 = rel
                .parse()
                .map_err(|_| usage(format!("cannot read perturbation {rel:?}")))?;
            Some((measure.parse()?, rel))
        }
        _ => return Err(usage("--perturb takes MEASURE REL")),
    };
    let mut c = Checks {
        table: OutputTable::new(vec![
            Column::new("check"),
            Column::new("value"),
            Column::new("reference"),
            Column::new("deviation"),
            Column::new("tolerance"),
            Column::new("status"),
        ]),
        failures: Vec::new(),
        perturb,
    };

    for xi in XI_GRID {
        let semi = DistributionSpec::semi_infinite(xi)?;
        let trunc = DistributionSpec::truncated(xi, 5.0)?;
        let numeric = |spec: &DistributionSpec, kind| measure_numeric(spec, kind, QUADRATURE_TOL);

        let v = c.closed(Target::Shannon, shannon(xi)?);
        c.record(
            format!("S xi={xi}"),
            v,
            numeric(&semi, MeasureKind::Shannon)?,
            rel_tol,
        );
        let v = c.closed(Target::Fisher, fisher(xi)?);
        c.record(
            format!("I_F xi={xi}"),
            v,
            numeric(&semi, MeasureKind::Fisher)?,
            rel_tol,
        );
        let v = c.closed(Target::Disequilibrium, disequilibrium(xi)?);
        c.record(
            format!("D xi={xi}"),
            v,
            numeric(&semi, MeasureKind::Disequilibrium)?,
            rel_tol,
        );
        let v = c.closed(Target::Shannon, truncated_shannon(xi, 5.0)?);
        c.record(
            format!("S n=5 xi={xi}"),
            v,
            numeric(&trunc, MeasureKind::Shannon)?,
            rel_tol,
        );
        let v = c.closed(Target::Fisher, truncated_fisher(xi, 5.0)?);
        c.record(
            format!("I_F n=5 xi={xi}"),
            v,
            numeric(&trunc, MeasureKind::Fisher)?,
            rel_tol,
        );

        for q in Q_GRID {
            let label = q_label(q);
            let v = c.closed(Target::Tsallis, tsallis(xi, q)?);
            let reference = numeric(&semi, MeasureKind::Tsallis(q))?;
            c.record(format!("T_q xi={xi} q={label}"), v, reference, rel_tol);
            // no finite I_q for q >= 1.5
            if let Some(i_q) = fisher_q(xi, q)? {
                let v = c.closed(Target::FisherQ, i_q);
                let reference = numeric(&semi, MeasureKind::FisherQ(q))?;
                c.record(format!("I_q xi={xi} q={label}"), v, reference, rel_tol);
            }
        }

        c.record(
            format!("T_2 = 1 - D xi={xi}"),
            tsallis(xi, 2.0)?,
            1.0 - disequilibrium(xi)?,
            1e-10,
        );
        c.record(
            format!("I_F xi^2 = 2/3 xi={xi}"),
            fisher(xi)? * xi * xi,
            2.0 / 3.0,
            EXACT_TOL,
        );
        c.record(
            format!("energy ratio xi={xi}"),
            fisher_from_energy_ratio(surface_to_bulk_ratio(xi)?)?,
            fisher(xi)?,
            EXACT_TOL,
        );
    }

    for m in builtin_materials() {
        let r = liu_identity(m.xi0, DEFAULT_CUTOFF_TOL)?;
        // absolute: S is O(1)
        let check = format!("Liu identity {}", m.name);
        let deviation = r.residual;
        c.record(check, deviation, 0.0, LIU_TOLERANCE);
    }

    let sol = solve_profile(1.0, 12.0, 2001, 1e-12)?;
    c.record(
        "BVP tanh profile, 2001 points".into(),
        sol.max_deviation,
        0.0,
        BVP_TOL,
    );

    Ok(Report {
        table: c.table,
        failures: c.failures,
    })
}
