//! The Ginzburg-Landau normal-metal/superconductor interface.
//!
//! All lengths are in nanometres. The order parameter is handled in the
//! normalized form `u = Psi / Psi_0`, so the microscopic coefficients of the
//! free-energy functional only enter through the coherence length.

use std::f64::consts::SQRT_2;

use crate::error::{require_positive, Error, Result};

/// Default cutoff multiple for the truncated distribution.
pub const DEFAULT_CUTOFF_MULTIPLE: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceInput {
    /// Zero-temperature coherence length (nm).
    pub xi0: f64,
    /// Temperature (K).
    pub temperature: f64,
    /// Critical temperature (K).
    pub critical_temperature: f64,
}

impl CoherenceInput {
    pub fn new(xi0: f64, temperature: f64, critical_temperature: f64) -> Self {
        Self {
            xi0,
            temperature,
            critical_temperature,
        }
    }
}

/// `xi(T) = xi0 / sqrt(1 - T/Tc)`.
pub fn coherence_length(inp: &CoherenceInput) -> Result<f64> {
    require_positive("xi0", inp.xi0)?;
    require_positive("Tc", inp.critical_temperature)?;
    let t = inp.temperature;
    if !(t >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "T",
            value: t,
            reason: "temperature must be non-negative",
        });
    }
    if t >= inp.critical_temperature {
        return Err(Error::AboveCritical {
            temperature: t,
            critical: inp.critical_temperature,
        });
    }
    Ok(inp.xi0 / (1.0 - t / inp.critical_temperature).sqrt())
}

/// Normalized order parameter `tanh(x / (sqrt(2) xi))`.
pub fn order_parameter(x: f64, xi: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "order parameter is defined for x >= 0 (superconducting side), got {x}"
        )));
    }
    Ok((x / (SQRT_2 * xi)).tanh())
}

/// Normalization of the truncated distribution on `[0, n xi]`.
pub fn truncation_norm(xi: f64, n: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    require_positive("n", n)?;
    let a = n / SQRT_2;
    Ok(1.0 / (SQRT_2 * xi * (a - a.tanh())))
}

/// `F_surf / F_bulk = (4 sqrt 2 / 3) xi`, in nm.
pub fn surface_to_bulk_ratio(xi: f64) -> Result<f64> {
    require_positive("xi", xi)?;
    Ok(4.0 * SQRT_2 / 3.0 * xi)
}

/// Fisher information from the surface-to-bulk free energy ratio,
/// `(4/3)^3 r^-2`.
pub fn fisher_from_energy_ratio(r: f64) -> Result<f64> {
    require_positive("r", r)?;
    let k = 4.0 / 3.0;
    Ok(k * k * k / (r * r))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistributionKind {
    /// `P(x) = (1 - tanh^2(x / sqrt2 xi)) / (sqrt2 xi)` on `[0, inf)`.
    SemiInfinite,
    /// `P(x) = N tanh^2(x / sqrt2 xi)` on `[0, n xi]`.
    Truncated { n: f64 },
}

impl DistributionKind {
    pub fn truncated_default() -> Self {
        DistributionKind::Truncated {
            n: DEFAULT_CUTOFF_MULTIPLE,
        }
    }
}

/// One of the two interface densities at a given coherence length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSpec {
    kind: DistributionKind,
    xi: f64,
    // sqrt(2) xi
    scale: f64,
    // N for the truncated kind, 1 / (sqrt2 xi) for the semi-infinite one
    norm: f64,
}

impl DistributionSpec {
    pub fn new(kind: DistributionKind, xi: f64) -> Result<Self> {
        require_positive("xi", xi)?;
        let norm = match kind {
            DistributionKind::SemiInfinite => 1.0 / (SQRT_2 * xi),
            DistributionKind::Truncated { n } => truncation_norm(xi, n)?,
        };
        Ok(Self {
            kind,
            xi,
            scale: SQRT_2 * xi,
            norm,
        })
    }

    pub fn semi_infinite(xi: f64) -> Result<Self> {
        Self::new(DistributionKind::SemiInfinite, xi)
    }

    pub fn truncated(xi: f64, n: f64) -> Result<Self> {
        Self::new(DistributionKind::Truncated { n }, xi)
    }

    pub fn kind(&self) -> DistributionKind {
        self.kind
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    /// `sqrt(2) xi`, the natural length of the tanh profile.
    pub fn length_scale(&self) -> f64 {
        self.scale
    }

    /// Prefactor: `1/(sqrt2 xi)` or the truncation normalization.
    pub fn normalization(&self) -> f64 {
        self.norm
    }

    /// Right end of the support, `None` when unbounded.
    pub fn support_end(&self) -> Option<f64> {
        match self.kind {
            DistributionKind::SemiInfinite => None,
            DistributionKind::Truncated { n } => Some(n * self.xi),
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= 0.0 && self.support_end().map_or(x.is_finite(), |end| x <= end)
    }

    /// Probability density at `x` (nm^-1), with a support check.
    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !self.contains(x) {
            return Err(Error::Domain(format!(
                "x = {x} is outside the support of the {:?} distribution",
                self.kind
            )));
        }
        Ok(self.density(x))
    }

    /// Density without the support check.
    pub fn density(&self, x: f64) -> f64 {
        let t = x / self.scale;
        match self.kind {
            DistributionKind::SemiInfinite => {
                let s = sech(t);
                self.norm * s * s
            }
            DistributionKind::Truncated { .. } => {
                let th = t.tanh();
                self.norm * th * th
            }
        }
    }

    /// `ln P(x)`, evaluated without underflow far in the tail.
    pub fn ln_density(&self, x: f64) -> f64 {
        let t = x / self.scale;
        match self.kind {
            DistributionKind::SemiInfinite => self.norm.ln() + 2.0 * ln_sech(t),
            DistributionKind::Truncated { .. } => self.norm.ln() + 2.0 * t.tanh().ln(),
        }
    }

    /// `dP/dx`.
    pub fn derivative(&self, x: f64) -> f64 {
        let t = x / self.scale;
        let s = sech(t);
        let th = t.tanh();
        match self.kind {
            DistributionKind::SemiInfinite => -2.0 * self.norm * s * s * th / self.scale,
            DistributionKind::Truncated { .. } => 2.0 * self.norm * th * s * s / self.scale,
        }
    }

    /// `ln |dP/dx|`, evaluated without underflow far in the tail.
    pub fn ln_abs_derivative(&self, x: f64) -> f64 {
        let t = x / self.scale;
        (2.0 * self.norm / self.scale).ln() + t.tanh().ln() + 2.0 * ln_sech(t)
    }

    /// `d^2P/dx^2`.
    pub fn second_derivative(&self, x: f64) -> f64 {
        let t = x / self.scale;
        let s2 = sech(t).powi(2);
        let th2 = t.tanh().powi(2);
        let k = 2.0 * self.norm * s2 / (self.scale * self.scale);
        match self.kind {
            DistributionKind::SemiInfinite => k * (2.0 * th2 - s2),
            DistributionKind::Truncated { .. } => k * (s2 - 2.0 * th2),
        }
    }
}

pub(crate) fn sech(t: f64) -> f64 {
    1.0 / t.cosh()
}

/// `ln sech t = ln 2 - |t| - ln(1 + e^{-2|t|})`.
pub(crate) fn ln_sech(t: f64) -> f64 {
    let t = t.abs();
    std::f64::consts::LN_2 - t - (-2.0 * t).exp().ln_1p()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Quadrature;
    use proptest::prelude::*;

    #[test]
    fn coherence_length_examples() {
        let xi = coherence_length(&CoherenceInput::new(100.0, 0.0, 5.0)).unwrap();
        assert_eq!(xi, 100.0);
        let xi = coherence_length(&CoherenceInput::new(100.0, 3.75, 5.0)).unwrap();
        assert!((xi - 200.0).abs() < 1e-12);
        let err = coherence_length(&CoherenceInput::new(38.0, 9.25, 9.25)).unwrap_err();
        assert!(matches!(err, Error::AboveCritical { .. }));
        assert!(coherence_length(&CoherenceInput::new(38.0, -1.0, 9.25)).is_err());
        assert!(coherence_length(&CoherenceInput::new(0.0, 1.0, 9.25)).is_err());
    }

    #[test]
    fn order_parameter_examples() {
        assert_eq!(order_parameter(0.0, 7.0).unwrap(), 0.0);
        assert!((order_parameter(1e6, 1.0).unwrap() - 1.0).abs() < 1e-15);
        let five = order_parameter(5.0 * 38.0, 38.0).unwrap();
        assert!((five - 0.9983).abs() < 5e-5, "{five}");
        assert!(order_parameter(-1.0, 1.0).is_err());
    }

    #[test]
    fn pdf_examples() {
        let xi = 3.0;
        let semi = DistributionSpec::semi_infinite(xi).unwrap();
        assert!((semi.pdf(0.0).unwrap() - 1.0 / (SQRT_2 * xi)).abs() < 1e-15);
        let tr = DistributionSpec::truncated(xi, 5.0).unwrap();
        assert_eq!(tr.pdf(0.0).unwrap(), 0.0);
        assert!(tr.pdf(5.0 * xi + 1e-9).is_err());
        assert!(semi.pdf(-0.1).is_err());
    }

    #[test]
    fn truncation_norm_examples() {
        // direct evaluation: 1 / (sqrt2 (5/sqrt2 - tanh(5/sqrt2)))
        let n = truncation_norm(1.0, 5.0).unwrap();
        assert!((n - 0.278_692_302_316_095_8).abs() < 1e-14, "{n}");
        let half = truncation_norm(2.0, 5.0).unwrap();
        assert!((half - n / 2.0).abs() < 1e-15);
    }

    #[test]
    fn normalization_by_quadrature() {
        for &xi in &[1.0, 38.0, 230.0, 1600.0] {
            let semi = DistributionSpec::semi_infinite(xi).unwrap();
            let q = Quadrature::new(1e-12).with_tail_scale(SQRT_2 * xi);
            let total = q.semi_infinite(|x| semi.density(x), 0.0).unwrap().value;
            assert!((total - 1.0).abs() < 1e-9, "semi xi={xi}: {total}");

            let tr = DistributionSpec::truncated(xi, 5.0).unwrap();
            let total = Quadrature::new(1e-12)
                .finite(|x| tr.density(x), 0.0, 5.0 * xi)
                .unwrap()
                .value;
            assert!((total - 1.0).abs() < 1e-9, "truncated xi={xi}: {total}");
        }
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for kind in [
            DistributionKind::SemiInfinite,
            DistributionKind::truncated_default(),
        ] {
            let d = DistributionSpec::new(kind, 2.0).unwrap();
            for &x in &[0.3, 1.0, 2.5, 6.0] {
                let h = 1e-4;
                let fd1 = (d.density(x + h) - d.density(x - h)) / (2.0 * h);
                let fd2 = (d.density(x + h) - 2.0 * d.density(x) + d.density(x - h)) / (h * h);
                assert!((fd1 - d.derivative(x)).abs() < 1e-8);
                assert!((fd2 - d.second_derivative(x)).abs() < 1e-6);
                assert!((d.ln_density(x) - d.density(x).ln()).abs() < 1e-13);
                assert!((d.ln_abs_derivative(x) - d.derivative(x).abs().ln()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ln_density_in_far_tail() {
        let d = DistributionSpec::semi_infinite(1.0).unwrap();
        // density underflows, its logarithm does not
        assert_eq!(d.density(2000.0), 0.0);
        assert!(d.ln_density(2000.0).is_finite());
    }

    #[test]
    fn energy_ratio_examples() {
        let c = 4.0 * SQRT_2 / 3.0;
        assert!((surface_to_bulk_ratio(1.0 / c).unwrap() - 1.0).abs() < 1e-15);
        assert!((surface_to_bulk_ratio(1.0).unwrap() - 1.885_618_083_164_126_7).abs() < 1e-14);
        assert!((surface_to_bulk_ratio(10.0).unwrap() - 18.856_180_831_641_27).abs() < 1e-12);
        assert!((fisher_from_energy_ratio(c).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert!((fisher_from_energy_ratio(4.0 / 3.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        for &xi in &[38.0, 230.0, 1600.0] {
            let via_energy = fisher_from_energy_ratio(surface_to_bulk_ratio(xi).unwrap()).unwrap();
            let direct = 2.0 / (3.0 * xi * xi);
            assert!(((via_energy - direct) / direct).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn order_parameter_monotone_and_bounded(xi in 0.5f64..2000.0, a in 0.0f64..1.0, b in 0.0f64..1.0) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assume!(hi - lo > 1e-6);
            // stay where tanh has not saturated to 1.0 in floating point
            let span = 20.0 * xi;
            let u_lo = order_parameter(lo * span, xi).unwrap();
            let u_hi = order_parameter(hi * span, xi).unwrap();
            prop_assert!(u_lo < u_hi);
            prop_assert!((0.0..1.0).contains(&u_lo) && u_hi < 1.0);
        }

        #[test]
        fn pdf_monotone(xi in 0.5f64..2000.0, a in 0.001f64..1.0, b in 0.001f64..1.0) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            prop_assume!(hi - lo > 1e-6);
            let semi = DistributionSpec::semi_infinite(xi).unwrap();
            prop_assert!(semi.density(lo * 20.0 * xi) > semi.density(hi * 20.0 * xi));
            let tr = DistributionSpec::truncated(xi, 5.0).unwrap();
            prop_assert!(tr.density(lo * 5.0 * xi) < tr.density(hi * 5.0 * xi));
        }

        #[test]
        fn coherence_length_at_least_xi0(xi0 in 1.0f64..2000.0, tc in 0.5f64..20.0, frac in 0.0f64..0.999) {
            let xi = coherence_length(&CoherenceInput::new(xi0, frac * tc, tc)).unwrap();
            prop_assert!(xi >= xi0);
            if frac == 0.0 { prop_assert_eq!(xi, xi0); } else { prop_assert!(xi > xi0); }
            let law = xi0 * (1.0 - frac).powf(-0.5);
            prop_assert!(((xi - law) / law).abs() < 1e-12);
        }
    }
}
