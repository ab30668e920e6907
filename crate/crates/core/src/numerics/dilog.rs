use std::f64::consts::PI;

use crate::error::{Error, Result};

const PI2_6: f64 = PI * PI / 6.0;

/// Dilogarithm `Li2(x) = sum_k x^k / k^2` on `[-1, 1]`.
///
/// The power series is only summed for |x| <= 1/2; the rest of the interval
/// is folded back with the reflection `x -> 1 - x` and the Landen map
/// `x -> x / (x - 1)`.
pub fn dilog(x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "dilogarithm is defined here only for |x| <= 1, got {x}"
        )));
    }
    Ok(if x == 1.0 {
        PI2_6
    } else if x == -1.0 {
        -PI2_6 / 2.0
    } else if x > 0.5 {
        PI2_6 - x.ln() * (-x).ln_1p() - power_series(1.0 - x)
    } else if x < -0.5 {
        let l = (-x).ln_1p();
        -power_series(x / (x - 1.0)) - 0.5 * l * l
    } else {
        power_series(x)
    })
}

fn power_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut pow = 1.0;
    for k in 1..200 {
        pow *= x;
        let term = pow / (k * k) as f64;
        sum += term;
        if term.abs() <= 0.25 * f64::EPSILON * sum.abs() {
            break;
        }
    }
    sum
}
