//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits 0 regardless of outcome so the report always prints under
//! `cargo test`; set `ACCEPTANCE_STRICT=1` to exit 1 on any failure.

use std::time::{Duration, Instant};

use glinfo_core::bvp::{self, GridSpacing};
use glinfo_core::liu::{self, DEFAULT_CUTOFF_TOL};
use glinfo_core::measures::{self, fisher_q, tsallis};
use glinfo_core::model::{fisher_from_energy_ratio, surface_to_bulk_ratio};
use glinfo_core::{
    builtin_materials, measure_numeric, measure_set, measure_set_truncated,
    measures_at_temperature, DistributionKind, DistributionSpec, MeasureKind, Result,
};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Outcome {
                pass: true,
                detail: summary,
            }
        } else {
            Outcome {
                pass: false,
                detail: format!("{summary}; {}", failures.join("; ")),
            }
        }
    }
}

fn run(id: u32, title: &str, budget: Duration, check: fn() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match outcome {
        Ok(o) => (o.pass, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > budget {
        pass = false;
        detail.push_str(&format!("; over time budget {budget:?}"));
    }
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("{tag} {id}. {title} [{elapsed:.2?}] {detail}");
    pass
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// Within half a unit of the printed value's last digit, counting at most
/// four significant digits.
fn matches_printed(value: f64, printed: &str) -> bool {
    let digits: String = printed.chars().filter(|c| c.is_ascii_digit()).collect();
    let sig = digits.trim_start_matches('0').len().clamp(1, 4) as i32;
    let target: f64 = printed.parse().unwrap();
    let mag = target.abs().log10().floor() as i32;
    (value - target).abs() <= 0.5 * 10f64.powi(mag - sig + 1)
}

// name, S, I_F x1e5, D x1e4, C x1e3
const TABLE_2: [(&str, &str, &str, &str, &str); 7] = [
    ("Al", "8.338", "0.0260", "2.946", "2.471"),
    ("Nb", "4.598", "46.168", "124.054", "5.704"),
    ("In", "6.846", "0.514", "13.095", "8.965"),
    ("Sn", "6.398", "1.260", "20.496", "13.113"),
    ("Ga", "7.594", "0.115", "6.200", "4.708"),
    ("Ta", "5.493", "7.700", "50.680", "27.840"),
    ("Pb", "5.379", "9.670", "56.790", "30.547"),
];

const TABLE_3: [(&str, f64, f64, f64, f64); 7] = [
    ("Al", 8.839, 0.0205, 1.514, 1.338),
    ("Nb", 5.099, 36.400, 63.750, 32.506),
    ("In", 7.347, 0.405, 6.730, 4.945),
    ("Sn", 6.899, 0.993, 10.533, 7.267),
    ("Ga", 8.095, 0.091, 3.188, 2.581),
    ("Ta", 5.994, 6.076, 26.050, 15.614),
    ("Pb", 5.880, 7.628, 29.188, 17.163),
];

fn xi0(name: &str) -> f64 {
    builtin_materials()
        .into_iter()
        .find(|m| m.name == name)
        .map(|m| m.xi0)
        .unwrap()
}

fn table_2() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (name, s, i_f, d, c) in TABLE_2 {
        let m = measure_set(xi0(name))?;
        for (label, value, printed) in [
            ("S", m.shannon, s),
            ("I_F", m.fisher * 1e5, i_f),
            ("D", m.disequilibrium * 1e4, d),
        ] {
            if !matches_printed(value, printed) {
                failures.push(format!("{name} {label} {value:.5} vs printed {printed}"));
            }
        }
        if rel(m.complexity, m.shannon * m.disequilibrium) > 1e-12 {
            failures.push(format!("{name} C is not S*D"));
        }
        let printed_c: f64 = c.parse().unwrap();
        let c3 = m.complexity * 1e3;
        match name {
            // printed with the exponent off by one decade
            "Nb" => {
                if !matches_printed(c3 / 10.0, c) {
                    failures.push(format!("Nb C anomaly not reproduced: {c3:.4}"));
                }
            }
            // printed value is about 0.6% above S*D
            "Al" => {
                let off = (printed_c - c3) / c3;
                if !(0.004..0.008).contains(&off) {
                    failures.push(format!("Al C anomaly not reproduced: offset {off:.4}"));
                }
            }
            _ => {
                if !matches_printed(c3, c) {
                    failures.push(format!("{name} C {c3:.5} vs printed {c}"));
                }
            }
        }
    }
    Ok(Outcome::new(
        failures,
        "7 rows, S/I_F/D at printed precision (max 4 digits), C = S*D".into(),
    ))
}

fn table_3() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for (name, s, i_f, d, c) in TABLE_3 {
        let m = measure_set_truncated(xi0(name), 5.0)?;
        for (label, value, printed) in [
            ("S", m.shannon, s),
            ("I_F", m.fisher * 1e5, i_f),
            ("D", m.disequilibrium * 1e4, d),
            ("C", m.complexity * 1e3, c),
        ] {
            let r = rel(value, printed);
            worst = worst.max(r);
            if r > 2e-3 {
                failures.push(format!("{name} {label} {value:.5} vs {printed} ({r:.1e})"));
            }
        }
        if m.complexity != m.shannon * m.disequilibrium {
            failures.push(format!("{name} C is not S*D"));
        }
    }
    Ok(Outcome::new(
        failures,
        format!("worst relative deviation {worst:.2e}"),
    ))
}

fn liu_identity() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut worst_sum: f64 = 0.0;
    let mut worst_point: f64 = 0.0;
    for m in builtin_materials() {
        let report = liu::liu_identity(m.xi0, DEFAULT_CUTOFF_TOL)?;
        worst_sum = worst_sum.max(report.residual);
        if report.residual > 1e-6 {
            failures.push(format!("{} residual {:.2e}", m.name, report.residual));
        }
        let xs: Vec<f64> = (1..=60).map(|k| 0.25 * k as f64 * m.xi0).collect();
        for p in liu::liu_profile(m.xi0, &xs, 1e-13)? {
            worst_point = worst_point.max(p.defect.abs());
            if p.defect.abs() > 1e-9 {
                failures.push(format!(
                    "{} pointwise defect {:.2e} at x = {}",
                    m.name, p.defect, p.x
                ));
                break;
            }
        }
    }
    Ok(Outcome::new(
        failures,
        format!("max |S - sum| {worst_sum:.1e}, max pointwise defect {worst_point:.1e}"),
    ))
}

const XI_GRID: [f64; 7] = [1.0, 38.0, 93.0, 230.0, 360.0, 760.0, 1600.0];
const Q_GRID: [f64; 8] = [0.6, 0.8, 0.95, 1.05, 1.2, 1.49, 1.51, 1.9];

fn oracle() -> Result<Outcome> {
    let tol = 1e-12;
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    let mut checks = 0;
    let mut record = |label: String, closed: f64, numeric: f64| {
        let r = rel(closed, numeric);
        worst = worst.max(r);
        checks += 1;
        if r > 1e-8 {
            failures.push(format!("{label}: {closed:.12e} vs {numeric:.12e}"));
        }
    };
    for xi in XI_GRID {
        let semi = DistributionSpec::semi_infinite(xi)?;
        let trunc = DistributionSpec::truncated(xi, 5.0)?;
        let closed = measure_set(xi)?;
        record(
            format!("S xi={xi}"),
            closed.shannon,
            measure_numeric(&semi, MeasureKind::Shannon, tol)?,
        );
        record(
            format!("I_F xi={xi}"),
            closed.fisher,
            measure_numeric(&semi, MeasureKind::Fisher, tol)?,
        );
        record(
            format!("D xi={xi}"),
            closed.disequilibrium,
            measure_numeric(&semi, MeasureKind::Disequilibrium, tol)?,
        );
        record(
            format!("truncated S xi={xi}"),
            measures::truncated_shannon(xi, 5.0)?,
            measure_numeric(&trunc, MeasureKind::Shannon, tol)?,
        );
        record(
            format!("truncated I_F xi={xi}"),
            measures::truncated_fisher(xi, 5.0)?,
            measure_numeric(&trunc, MeasureKind::Fisher, tol)?,
        );
        for q in Q_GRID {
            record(
                format!("T_q xi={xi} q={q}"),
                tsallis(xi, q)?,
                measure_numeric(&semi, MeasureKind::Tsallis(q), tol)?,
            );
            // the defining integral of I_q diverges for q >= 1.5
            if let Some(i_q) = fisher_q(xi, q)? {
                record(
                    format!("I_q xi={xi} q={q}"),
                    i_q,
                    measure_numeric(&semi, MeasureKind::FisherQ(q), tol)?,
                );
            }
        }
    }
    Ok(Outcome::new(
        failures,
        format!("{checks} comparisons, worst relative deviation {worst:.1e}"),
    ))
}

fn q_limits() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut worst_t: f64 = 0.0;
    let mut worst_i: f64 = 0.0;
    for xi in [38.0, 230.0, 1600.0] {
        let m = measure_set(xi)?;
        for q in [1.0 - 1e-4, 1.0 + 1e-4] {
            let g = measures::generalized_set(xi, q)?;
            let rt = rel(g.tsallis, m.shannon);
            worst_t = worst_t.max(rt);
            if rt > 1e-3 {
                failures.push(format!("T_q xi={xi} q={q}: {rt:.2e}"));
            }
            let ri = g.fisher_q.map_or(f64::INFINITY, |v| rel(v, m.fisher));
            worst_i = worst_i.max(ri);
            if ri > 1e-3 {
                failures.push(format!("I_q xi={xi} q={q}: {ri:.2e}"));
            }
        }
    }
    let mut worst_t2: f64 = 0.0;
    for xi in XI_GRID {
        let d = measures::disequilibrium(xi)?;
        let t2 = tsallis(xi, 2.0)?;
        let err = (t2 - (1.0 - d)).abs();
        worst_t2 = worst_t2.max(err);
        if err > 1e-10 {
            failures.push(format!("T_2 xi={xi}: |T_2 - (1 - D)| = {err:.1e}"));
        }
    }
    Ok(Outcome::new(
        failures,
        format!(
            "max rel |T_q - S| {worst_t:.1e}, max rel |I_q - I_F| {worst_i:.1e}, max |T_2 - (1 - D)| {worst_t2:.1e}"
        ),
    ))
}

fn bvp_check() -> Result<Outcome> {
    let mut failures = Vec::new();
    let sol = bvp::solve_profile(1.0, 12.0, 2001, 1e-12)?;
    if sol.max_deviation > 1e-6 {
        failures.push(format!(
            "deviation {:.2e} at 2001 points",
            sol.max_deviation
        ));
    }
    let devs = [201, 401, 801]
        .iter()
        .map(|&n| bvp::solve_profile(1.0, 12.0, n, 1e-12).map(|s| s.max_deviation))
        .collect::<Result<Vec<_>>>()?;
    let ratios = [devs[0] / devs[1], devs[1] / devs[2]];
    for r in ratios {
        if !(3.5..=4.5).contains(&r) {
            failures.push(format!("refinement ratio {r:.3}"));
        }
    }
    // a physical length scale must not change the dimensionless answer
    let nb = bvp::solve_profile(38.0, 12.0 * 38.0, 2001, 1e-12)?;
    if (nb.max_deviation - sol.max_deviation).abs() > 1e-9 {
        failures.push(format!("xi = 38 deviation {:.2e}", nb.max_deviation));
    }
    let uniform = bvp::dimensionless_grid(12.0, 2001, GridSpacing::Uniform)?;
    Ok(Outcome::new(
        failures,
        format!(
            "deviation {:.2e} at 2001 points ({} iterations, stretched grid, uniform h = {:.1e}), ratios {:.3}/{:.3}",
            sol.max_deviation,
            sol.iterations,
            uniform[1],
            ratios[0],
            ratios[1]
        ),
    ))
}

fn temperature_laws() -> Result<Outcome> {
    let mut failures = Vec::new();
    for m in builtin_materials() {
        let kind = DistributionKind::SemiInfinite;
        let zero = measures_at_temperature(m.xi0, m.tc, 0.0, kind)?;
        for frac in [0.25, 0.5, 0.75] {
            let at = measures_at_temperature(m.xi0, m.tc, frac * m.tc, kind)?;
            let ratio = at.fisher / zero.fisher;
            if (ratio - (1.0 - frac)).abs() > 1e-12 {
                failures.push(format!("{} I_F ratio {ratio} at T/Tc = {frac}", m.name));
            }
        }
        let sweep = (0..200)
            .map(|k| measures_at_temperature(m.xi0, m.tc, m.tc * k as f64 / 200.0, kind))
            .collect::<Result<Vec<_>>>()?;
        let monotone = sweep.windows(2).all(|w| {
            w[1].shannon > w[0].shannon
                && w[1].disequilibrium < w[0].disequilibrium
                && w[1].complexity < w[0].complexity
        });
        if !monotone {
            failures.push(format!("{} sweep not monotone", m.name));
        }
        let near = measures_at_temperature(m.xi0, m.tc, m.tc * (1.0 - 1e-12), kind)?;
        if near.complexity > 1e-3 * zero.complexity {
            failures.push(format!("{} C does not vanish near Tc", m.name));
        }
    }
    Ok(Outcome::new(
        failures,
        "7 materials, I_F linear in T, S up, D and C down to 0".into(),
    ))
}

fn energy_identity() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for m in builtin_materials() {
        let value = fisher_from_energy_ratio(surface_to_bulk_ratio(m.xi0)?)?;
        let expect = 2.0 / (3.0 * m.xi0 * m.xi0);
        let r = rel(value, expect);
        worst = worst.max(r);
        if r > 1e-12 {
            failures.push(format!("{} {r:.1e}", m.name));
        }
    }
    Ok(Outcome::new(
        failures,
        format!("worst relative deviation {worst:.1e}"),
    ))
}

fn main() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "Table 2 reproduction", secs(1), table_2),
        run(2, "Table 3 reproduction (n = 5)", secs(5), table_3),
        run(3, "Liu identity", secs(30), liu_identity),
        run(4, "closed forms vs quadrature", secs(60), oracle),
        run(5, "q -> 1 limits and T_2 = 1 - D", secs(10), q_limits),
        run(
            6,
            "order-parameter boundary value problem",
            secs(10),
            bvp_check,
        ),
        run(7, "temperature laws", secs(5), temperature_laws),
        run(8, "energy-profile identity", secs(1), energy_identity),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if strict && passed != results.len() {
        std::process::exit(1);
    }
}
