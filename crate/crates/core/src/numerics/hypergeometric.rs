//! Gauss hypergeometric function at z = -1.
//!
//! The defining series at z = -1 only converges for c - a - b > -1, which
//! excludes most of the parameter range the generalized measures need. The
//! Pfaff transformation
//!
//! ```text
//! 2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))
//! ```
//!
//! sends z = -1 to z = 1/2, where the series converges geometrically for
//! every admissible parameter set.

use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;

/// `2F1(a, b; c; -1)`.
pub fn hyp2f1_neg1(a: f64, b: f64, c: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::Domain(format!(
            "2F1 parameters must be finite, got ({a}, {b}, {c})"
        )));
    }
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::Pole {
            function: "2F1",
            at: c,
        });
    }
    if a == 0.0 || b == 0.0 {
        return Ok(1.0);
    }
    // Canonical ordering makes the result exactly symmetric in (a, b).
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let tail = series(a, c - b, c, 0.5)?;
    Ok(2f64.powf(-a) * tail)
}

/// Plain hypergeometric series, |z| < 1.
fn series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let k = k as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if term.abs() <= 0.5 * f64::EPSILON * sum.abs() {
            small += 1;
            if small == 2 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        what: "hypergeometric series",
        iterations: MAX_TERMS,
        estimate: sum,
        error: term.abs(),
    })
}
