//! Special functions and adaptive quadrature.

mod dilog;
mod gamma;
mod hypergeometric;
mod quadrature;

pub use dilog::dilog;
pub use gamma::gamma;
pub use hypergeometric::hyp2f1_neg1;
pub use quadrature::{integrate_finite, integrate_semi_infinite, Quadrature, QuadratureResult};
