//! Adaptive Gauss-Kronrod (10/21 point) quadrature on finite intervals, and a
//! semi-infinite wrapper based on the substitution `x = a - scale * ln(1 - u)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const EVALS_PER_RULE: usize = 21;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// Absolute error estimate.
    pub error_estimate: f64,
    pub evaluations: usize,
    /// Set by the semi-infinite integrator when the mapped integrand grows
    /// toward the far end, i.e. the tail is not visibly shrinking.
    pub tail_warning: bool,
}

/// Tolerances and limits for the adaptive integrator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evaluations: usize,
    /// Length scale of the exponential map used on `[a, inf)`. Should be of
    /// the order of the integrand's decay length.
    pub tail_scale: f64,
}

impl Default for Quadrature {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 0.0,
            max_evaluations: 1_000_000,
            tail_scale: 1.0,
        }
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

impl Quadrature {
    pub fn new(rel_tol: f64) -> Self {
        Self {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_max_evaluations(mut self, max_evaluations: usize) -> Self {
        self.max_evaluations = max_evaluations;
        self
    }

    pub fn with_tail_scale(mut self, tail_scale: f64) -> Self {
        self.tail_scale = tail_scale;
        self
    }

    fn check(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "rel_tol",
                value: self.rel_tol,
                reason: "must be positive",
            });
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: self.abs_tol,
                reason: "must be non-negative",
            });
        }
        Ok(())
    }

    /// Integrate `f` over `[a, b]`.
    pub fn finite<F>(&self, f: F, a: f64, b: f64) -> Result<QuadratureResult>
    where
        F: Fn(f64) -> f64,
    {
        self.check()?;
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Domain(format!(
                "integration interval must satisfy a < b, got [{a}, {b}]"
            )));
        }

        let first = gauss_kronrod(&f, a, b);
        let mut evaluations = EVALS_PER_RULE;
        let mut total = first.value;
        let mut total_err = first.error;
        let mut heap = BinaryHeap::new();
        heap.push(first);
        // segments too narrow to split keep their error here
        let mut frozen_err = 0.0;

        loop {
            if !total.is_finite() {
                return Err(Error::Domain(format!(
                    "integrand is not finite on [{a}, {b}]"
                )));
            }
            let target = self.abs_tol.max(self.rel_tol * total.abs());
            if total_err <= target {
                break;
            }
            if frozen_err > target || evaluations + 2 * EVALS_PER_RULE > self.max_evaluations {
                return Err(Error::NonConvergence {
                    what: "adaptive quadrature",
                    iterations: evaluations,
                    estimate: total,
                    error: total_err,
                });
            }
            let Some(worst) = heap.pop() else { break };
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a
                || mid >= worst.b
                || (worst.b - worst.a) < 1e3 * f64::EPSILON * mid.abs()
            {
                frozen_err += worst.error;
                if heap.is_empty() {
                    heap.push(worst);
                    return Err(Error::NonConvergence {
                        what: "adaptive quadrature",
                        iterations: evaluations,
                        estimate: total,
                        error: total_err,
                    });
                }
                continue;
            }
            let left = gauss_kronrod(&f, worst.a, mid);
            let right = gauss_kronrod(&f, mid, worst.b);
            evaluations += 2 * EVALS_PER_RULE;
            total += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
        }

        // resum to shed the drift of the running totals
        let mut value = 0.0;
        let mut error = frozen_err;
        for s in heap.iter() {
            value += s.value;
            error += s.error;
        }
        Ok(QuadratureResult {
            value,
            error_estimate: error.max(0.0),
            evaluations,
            tail_warning: false,
        })
    }

    /// Integrate `f` over `[a, inf)` through `x = a - tail_scale * ln(1 - u)`.
    pub fn semi_infinite<F>(&self, f: F, a: f64) -> Result<QuadratureResult>
    where
        F: Fn(f64) -> f64,
    {
        if !(self.tail_scale > 0.0) || !self.tail_scale.is_finite() {
            return Err(Error::InvalidParameter {
                name: "tail_scale",
                value: self.tail_scale,
                reason: "must be positive and finite",
            });
        }
        if !a.is_finite() {
            return Err(Error::Domain(format!(
                "lower limit must be finite, got {a}"
            )));
        }
        let scale = self.tail_scale;
        let mapped = |u: f64| {
            let w = 1.0 - u;
            if w <= 0.0 {
                return 0.0;
            }
            let x = a - scale * w.ln();
            let fx = f(x);
            if fx == 0.0 {
                0.0
            } else {
                fx * scale / w
            }
        };
        let mut result = self.finite(mapped, 0.0, 1.0)?;
        let near = mapped(1.0 - 1e-3).abs();
        let far = mapped(1.0 - 1e-9).abs();
        result.tail_warning = far > 2.0 * near && far > 0.0;
        result.evaluations += 2;
        Ok(result)
    }
}

/// Adaptive quadrature of `f` on `[a, b]` with default limits.
pub fn integrate_finite<F>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    Quadrature::new(rel_tol).finite(f, a, b)
}

/// Adaptive quadrature of `f` on `[a, inf)` with the unit-scale map
/// `x = a - ln(1 - u)`.
pub fn integrate_semi_infinite<F>(f: F, a: f64, rel_tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    Quadrature::new(rel_tol).semi_infinite(f, a)
}

fn gauss_kronrod<F>(f: &F, a: f64, b: f64) -> Segment
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut res_gauss = 0.0;
    let mut res_kronrod = f_center * WGK[10];
    let mut res_abs = res_kronrod.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];

    for (j, &wg) in WG.iter().enumerate() {
        let jtw = 2 * j + 1;
        let dx = half * XGK[jtw];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        res_gauss += wg * (f1 + f2);
        res_kronrod += WGK[jtw] * (f1 + f2);
        res_abs += WGK[jtw] * (f1.abs() + f2.abs());
    }
    for j in 0..5 {
        let jtwm1 = 2 * j;
        let dx = half * XGK[jtwm1];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_kronrod += WGK[jtwm1] * (f1 + f2);
        res_abs += WGK[jtwm1] * (f1.abs() + f2.abs());
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[10] * (f_center - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }

    let value = res_kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let error = rescale_error((res_kronrod - res_gauss) * half, res_abs, res_asc);
    Segment { a, b, value, error }
}

// QUADPACK error scaling.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 {
            res_asc * scale
        } else {
            res_asc
        };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}
