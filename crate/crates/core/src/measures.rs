//! Closed-form information and complexity measures of the interface
//! densities, and their direct quadrature counterparts.
//!
//! Units follow the nm convention throughout: `S` in nats with `xi` in nm
//! inside the logarithm, `I_F` in nm^-2, `D` and `C` in nm^-1.

use std::f64::consts::{LN_2, PI, SQRT_2};

use crate::error::{require_positive, Error, Result};
use crate::model::{coherence_length, CoherenceInput, DistributionKind, DistributionSpec};
use crate::numerics::{dilog, gamma, hyp2f1_neg1, Quadrature};

/// Window `(0.5, 2]` of nonextensivity parameters accepted by
/// [`generalized_set`]. The right end is included so that `T_2 = 1 - D` can
/// be evaluated.
pub const Q_WINDOW: (f64, f64) = (0.5, 2.0);
/// The generalized Fisher integral over the semi-infinite density diverges
/// from here on.
pub const FISHER_Q_DIVERGENCE: f64 = 1.5;
/// Below this distance from `q = 1` the Shannon and Fisher limits are used.
pub const Q_ONE_THRESHOLD: f64 = 1e-6;
/// Quadrature tolerance used for quantities without a closed form.
pub const QUADRATURE_REL_TOL: f64 = 1e-10;

// ulps of cancellation tolerated in the I_q closed form before falling back
const CANCELLATION_LIMIT: f64 = 1e6 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureSet {
    /// Shannon entropy `S`.
    pub shannon: f64,
    /// Fisher information `I_F` (nm^-2).
    pub fisher: f64,
    /// Disequilibrium `D` (nm^-1).
    pub disequilibrium: f64,
    /// LMC complexity `C = S D`.
    pub complexity: f64,
    /// `C~ = S I_F`.
    pub fisher_complexity: f64,
}

impl MeasureSet {
    /// Builds the set from its three independent measures; the complexities
    /// are always the products.
    pub fn from_parts(shannon: f64, fisher: f64, disequilibrium: f64) -> Self {
        Self {
            shannon,
            fisher,
            disequilibrium,
            complexity: shannon * disequilibrium,
            fisher_complexity: shannon * fisher,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedSet {
    pub q: f64,
    /// Tsallis entropy `T_q`.
    pub tsallis: f64,
    /// Generalized Fisher information `I_q`; `None` for `q >= 1.5`, where the
    /// defining integral diverges.
    pub fisher_q: Option<f64>,
    /// `C_q = D T_q`.
    pub complexity_q: f64,
}

/// `S = 2 + ln(xi / 2^{3/2})`.
pub fn shannon(xi: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    Ok(2.0 + xi.ln() - 1.5 * LN_2)
}

/// `I_F = 2 / (3 xi^2)`.
pub fn fisher(xi: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    Ok(2.0 / (3.0 * xi * xi))
}

/// `D = sqrt2 / (3 xi)`.
pub fn disequilibrium(xi: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    Ok(SQRT_2 / (3.0 * xi))
}

/// All closed-form measures of the semi-infinite density.
pub fn measure_set(xi: f64) -> Result<MeasureSet> {
    Ok(MeasureSet::from_parts(
        shannon(xi)?,
        fisher(xi)?,
        disequilibrium(xi)?,
    ))
}

/// Shannon entropy of the truncated density on `[0, n xi]`.
pub fn truncated_shannon(xi: f64, n: f64) -> Result<f64> {
    let norm = crate::model::truncation_norm(xi, n)?;
    let a = n / SQRT_2;
    let th = a.tanh();
    let ln_th2 = 2.0 * th.ln();
    let r = SQRT_2 * n;
    let e = (-r).exp();
    // arccoth(e^r) = ln((e^r + 1) / (e^r - 1)) / 2
    let arccoth = 0.5 * (2.0 / r.exp_m1()).ln_1p();
    let bracket = 4.0 * n * arccoth + n * ln_th2 - SQRT_2 * dilog(-e)? + SQRT_2 * dilog(e)?
        - SQRT_2 * (-2.0 + ln_th2) * th
        - PI * PI / (2.0 * SQRT_2);
    Ok(-norm.ln() - norm * xi * bracket)
}

/// Fisher information of the truncated density on `[0, n xi]`.
pub fn truncated_fisher(xi: f64, n: f64) -> Result<f64> {
    let norm = crate::model::truncation_norm(xi, n)?;
    let a = n / SQRT_2;
    let sech = 1.0 / a.cosh();
    Ok(norm * SQRT_2 / (3.0 * xi) * sech.powi(3) * (3.0 * a.sinh() + (3.0 * a).sinh()))
}

/// Measures of the truncated density. `S` and `I_F` are closed forms, `D`
/// comes from quadrature.
pub fn measure_set_truncated(xi: f64, n: f64) -> Result<MeasureSet> {
    let spec = DistributionSpec::truncated(xi, n)?;
    let d = measure_numeric(&spec, MeasureKind::Disequilibrium, QUADRATURE_REL_TOL)?;
    Ok(MeasureSet::from_parts(
        truncated_shannon(xi, n)?,
        truncated_fisher(xi, n)?,
        d,
    ))
}

/// Dispatches on the distribution kind.
pub fn measure_set_for(spec: &DistributionSpec) -> Result<MeasureSet> {
    match spec.kind() {
        DistributionKind::SemiInfinite => measure_set(spec.xi()),
        DistributionKind::Truncated { n } => measure_set_truncated(spec.xi(), n),
    }
}

/// Measures at temperature `t` through `xi(T)`.
pub fn measures_at_temperature(
    xi0: f64,
    tc: f64,
    t: f64,
    kind: DistributionKind,
) -> Result<MeasureSet> {
    let xi = coherence_length(&CoherenceInput::new(xi0, t, tc))?;
    measure_set_for(&DistributionSpec::new(kind, xi)?)
}

fn check_q_window(q: f64) -> Result<()> {
    if q > Q_WINDOW.0 && q <= Q_WINDOW.1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "q = {q} is outside the validity window ({}, {}]",
            Q_WINDOW.0, Q_WINDOW.1
        )))
    }
}

/// Tsallis entropy of the semi-infinite density,
/// `T_q = (1 - Gamma(q)/Gamma(1+q) 2^{(3q-1)/2} xi^{1-q} 2F1(q, 2q; 1+q; -1)) / (q - 1)`.
pub fn tsallis(xi: f64, q: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    check_q_window(q)?;
    if (q - 1.0).abs() < Q_ONE_THRESHOLD {
        return shannon(xi);
    }
    let moment = gamma(q)? / gamma(1.0 + q)?
        * 2f64.powf(0.5 * (3.0 * q - 1.0))
        * xi.powf(1.0 - q)
        * hyp2f1_neg1(q, 2.0 * q, 1.0 + q)?;
    Ok((1.0 - moment) / (q - 1.0))
}

/// Generalized Fisher information of the semi-infinite density. Returns
/// `None` for `q >= 1.5`.
pub fn fisher_q(xi: f64, q: f64) -> Result<Option<f64>> {
    require_positive("xi", xi)?;
    check_q_window(q)?;
    if q >= FISHER_Q_DIVERGENCE {
        return Ok(None);
    }
    if (q - 1.0).abs() < Q_ONE_THRESHOLD {
        return fisher(xi).map(Some);
    }
    match fisher_q_closed_form(xi, q)? {
        Some(v) => Ok(Some(v)),
        None => {
            let spec = DistributionSpec::semi_infinite(xi)?;
            measure_numeric(&spec, MeasureKind::FisherQ(q), 1e-12).map(Some)
        }
    }
}

// None when the bracket cancels too badly to trust.
fn fisher_q_closed_form(xi: f64, q: f64) -> Result<Option<f64>> {
    let g92 = gamma(4.5 - 2.0 * q)?;
    let prefactor =
        2f64.powf(q - 3.0) * xi.powf(2.0 * q - 4.0) / ((2.0 * q - 5.0) * (2.0 * q - 3.0) * g92);
    let f = hyp2f1_neg1(1.0, 2.0 * q - 2.0, 6.0 - 2.0 * q)?;
    let inner_a = 5.0 - 2.0 * q;
    let inner_b = (3.0 - 2.0 * q) * f;
    let inner = inner_a + inner_b;
    let t1 = -PI.sqrt() * (q - 1.0) * gamma(6.0 - 2.0 * q)? / (q - 2.0);
    let t2 = 2.0 * g92 * inner;
    let bracket = t1 + t2;
    if inner.abs() < CANCELLATION_LIMIT * (inner_a.abs() + inner_b.abs())
        || bracket.abs() < CANCELLATION_LIMIT * (t1.abs() + t2.abs())
    {
        return Ok(None);
    }
    Ok(Some(prefactor * bracket))
}

/// Generalized measures of the semi-infinite density at `q`.
pub fn generalized_set(xi: f64, q: f64) -> Result<GeneralizedSet> {
    let tsallis = tsallis(xi, q)?;
    Ok(GeneralizedSet {
        q,
        tsallis,
        fisher_q: fisher_q(xi, q)?,
        complexity_q: disequilibrium(xi)? * tsallis,
    })
}

/// Measures available through [`measure_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureKind {
    Shannon,
    Fisher,
    Disequilibrium,
    Tsallis(f64),
    FisherQ(f64),
}

/// Direct quadrature of the defining integral of a measure.
///
/// This path never touches the closed forms and serves as their oracle.
pub fn measure_numeric(spec: &DistributionSpec, kind: MeasureKind, rel_tol: f64) -> Result<f64> {
    let d = *spec;
    // decay rate of the integrand in units of sqrt2 xi, semi-infinite case
    let rate = match kind {
        MeasureKind::Shannon | MeasureKind::Fisher => 2.0,
        MeasureKind::Disequilibrium => 4.0,
        MeasureKind::Tsallis(q) => {
            require_positive("q", q)?;
            if (q - 1.0).abs() < Q_ONE_THRESHOLD {
                return measure_numeric(spec, MeasureKind::Shannon, rel_tol);
            }
            2.0 * q
        }
        MeasureKind::FisherQ(q) => {
            require_positive("q", q)?;
            let limit = match d.kind() {
                DistributionKind::SemiInfinite => FISHER_Q_DIVERGENCE,
                // P ~ x^2 at the origin: integrand ~ x^(4 - 4q)
                DistributionKind::Truncated { .. } => 1.25,
            };
            if q >= limit {
                return Err(Error::Domain(format!(
                    "the generalized Fisher integral diverges for q = {q} (needs q < {limit})"
                )));
            }
            6.0 - 4.0 * q
        }
    };

    let integrand = move |x: f64| -> f64 {
        match kind {
            MeasureKind::Shannon => {
                let p = d.density(x);
                if p == 0.0 {
                    0.0
                } else {
                    -p * d.ln_density(x)
                }
            }
            MeasureKind::Fisher => {
                let p = d.density(x);
                if p == 0.0 {
                    0.0
                } else {
                    let dp = d.derivative(x);
                    dp * dp / p
                }
            }
            MeasureKind::Disequilibrium => {
                let p = d.density(x);
                p * p
            }
            MeasureKind::Tsallis(q) => (q * d.ln_density(x)).exp(),
            MeasureKind::FisherQ(q) => {
                ((1.0 - 2.0 * q) * d.ln_density(x) + 2.0 * d.ln_abs_derivative(x)).exp()
            }
        }
    };

    let quad = Quadrature::new(rel_tol).with_tail_scale(2.0 * d.length_scale() / rate);
    let raw = match d.support_end() {
        None => quad.semi_infinite(integrand, 0.0)?.value,
        Some(end) => quad.finite(integrand, 0.0, end)?.value,
    };
    Ok(match kind {
        MeasureKind::Tsallis(q) => (1.0 - raw) / (q - 1.0),
        _ => raw,
    })
}
