use std::fmt;

/// Errors produced by the numerical kernels, the interface model and the
/// material catalog.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{what} did not converge after {iterations} iterations (estimate {estimate:e}, error {error:e})")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
        estimate: f64,
        error: f64,
    },

    #[error(
        "T = {temperature} K is not below Tc = {critical} K: the superconducting phase is absent"
    )]
    AboveCritical { temperature: f64, critical: f64 },

    #[error("no cutoff up to {limit} nm satisfies the tail tolerance {tol:e}")]
    CutoffSelection { limit: f64, tol: f64 },

    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error("line {line}: duplicate material name {name:?}")]
    DuplicateName { line: u64, name: String },

    #[error("line {line}: invalid {field} = {value}")]
    InvalidField {
        line: u64,
        field: &'static str,
        value: String,
    },

    #[error("unknown material {name:?}; available: {}", Available(.available))]
    NotFound {
        name: String,
        available: Vec<String>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

struct Available<'a>(&'a [String]);

impl fmt::Display for Available<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(none)");
        }
        f.write_str(&self.0.join(", "))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}
