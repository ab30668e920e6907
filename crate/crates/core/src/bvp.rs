//! Numerical solution of the dimensionless Ginzburg-Landau equation
//! `xi^2 u'' = u^3 - u` on `[0, L]` with `u(0) = 0`, `u(L) = 1`.
//!
//! Three-point central differences on a smoothly stretched grid (second
//! order), solved by Newton's method with pseudo-transient continuation: each
//! step solves `(J - I/dtau) du = -F` and `dtau` grows as the residual falls,
//! so the early iterations follow the gradient flow of the free energy and
//! the late ones are plain Newton steps. Computations are done in `y = x/xi`.

use std::f64::consts::SQRT_2;

use crate::error::{require_positive, Error, Result};

pub const DEFAULT_LENGTH_MULTIPLE: f64 = 12.0;
pub const MIN_LENGTH_MULTIPLE: f64 = 8.0;
pub const MIN_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpacing {
    Uniform,
    /// `y(s) = L sinh(beta s) / sinh(beta)`, clustering nodes at the interface.
    Stretched {
        beta: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialGuess {
    LinearRamp,
    Analytic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BvpOptions {
    pub spacing: GridSpacing,
    pub initial_guess: InitialGuess,
    pub max_iterations: usize,
    pub initial_pseudo_step: f64,
}

impl Default for BvpOptions {
    fn default() -> Self {
        Self {
            spacing: GridSpacing::Stretched { beta: 2.0 },
            initial_guess: InitialGuess::LinearRamp,
            max_iterations: 500,
            initial_pseudo_step: 0.1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BvpSolution {
    /// Node positions in nm.
    pub grid: Vec<f64>,
    pub u: Vec<f64>,
    /// `max |u - tanh(x / sqrt2 xi)|` over the grid.
    pub max_deviation: f64,
    pub iterations: usize,
    /// Final discrete residual, scaled by the local spacings.
    pub residual: f64,
}

/// Solve with [`BvpOptions::default`].
pub fn solve_profile(xi: f64, length: f64, n_points: usize, tol: f64) -> Result<BvpSolution> {
    solve_profile_with(xi, length, n_points, tol, &BvpOptions::default())
}

pub fn solve_profile_with(
    xi: f64,
    length: f64,
    n_points: usize,
    tol: f64,
    opts: &BvpOptions,
) -> Result<BvpSolution> {
    require_positive("xi", xi)?;
    require_positive("tol", tol)?;
    if !(length >= MIN_LENGTH_MULTIPLE * xi) {
        return Err(Error::Domain(format!(
            "domain length {length} nm is shorter than {MIN_LENGTH_MULTIPLE} xi = {} nm",
            MIN_LENGTH_MULTIPLE * xi
        )));
    }
    if n_points < MIN_POINTS {
        return Err(Error::Domain(format!(
            "need at least {MIN_POINTS} grid points, got {n_points}"
        )));
    }

    let y = dimensionless_grid(length / xi, n_points, opts.spacing)?;
    let span = y[n_points - 1];
    let mut u: Vec<f64> = match opts.initial_guess {
        InitialGuess::LinearRamp => y.iter().map(|&v| v / span).collect(),
        InitialGuess::Analytic => y.iter().map(|&v| (v / SQRT_2).tanh()).collect(),
    };
    u[0] = 0.0;
    u[n_points - 1] = 1.0;

    let stencil = Stencil::new(&y);
    let m = n_points - 2;
    let mut f = vec![0.0; m];
    let mut sub = vec![0.0; m];
    let mut diag = vec![0.0; m];
    let mut sup = vec![0.0; m];

    let mut dtau = opts.initial_pseudo_step;
    let mut f_norm = stencil.residual(&u, &mut f);
    let mut iterations = 0;

    loop {
        let scaled = stencil.scaled_norm(&f);
        if scaled <= tol {
            let grid: Vec<f64> = y.iter().map(|v| v * xi).collect();
            check_shape(&u)?;
            let max_deviation = max_deviation(&grid, &u, xi);
            return Ok(BvpSolution {
                grid,
                u,
                max_deviation,
                iterations,
                residual: scaled,
            });
        }
        if iterations >= opts.max_iterations {
            return Err(Error::NonConvergence {
                what: "Ginzburg-Landau boundary-value solve",
                iterations,
                estimate: f64::NAN,
                error: scaled,
            });
        }

        for i in 0..m {
            let ui = u[i + 1];
            sub[i] = stencil.lo[i];
            sup[i] = stencil.up[i];
            diag[i] = -(stencil.lo[i] + stencil.up[i]) - 3.0 * ui * ui + 1.0 - 1.0 / dtau;
            f[i] = -f[i];
        }
        let step = solve_tridiagonal(&sub, &diag, &sup, &f).ok_or_else(|| {
            Error::Domain("singular Jacobian in the boundary-value solve".to_string())
        })?;
        for (ui, di) in u[1..=m].iter_mut().zip(&step) {
            *ui += di;
        }
        iterations += 1;

        let new_norm = stencil.residual(&u, &mut f);
        if !new_norm.is_finite() {
            return Err(Error::NonConvergence {
                what: "Ginzburg-Landau boundary-value solve",
                iterations,
                estimate: f64::NAN,
                error: new_norm,
            });
        }
        dtau = if new_norm > 0.0 {
            (dtau * f_norm / new_norm).min(1e12)
        } else {
            1e12
        };
        f_norm = new_norm;
    }
}

/// `max |u - tanh(x / sqrt2 xi)|` over the solution grid.
pub fn verify_profile(sol: &BvpSolution, xi: f64) -> f64 {
    max_deviation(&sol.grid, &sol.u, xi)
}

fn max_deviation(grid: &[f64], u: &[f64], xi: f64) -> f64 {
    grid.iter()
        .zip(u)
        .map(|(&x, &v)| (v - (x / (SQRT_2 * xi)).tanh()).abs())
        .fold(0.0, f64::max)
}

/// `xi^2 u'' - (u^3 - u)` of the discrete operator at the interior nodes.
pub fn discrete_residual(grid: &[f64], u: &[f64], xi: f64) -> Vec<f64> {
    let y: Vec<f64> = grid.iter().map(|x| x / xi).collect();
    let stencil = Stencil::new(&y);
    let mut f = vec![0.0; y.len().saturating_sub(2)];
    stencil.residual(u, &mut f);
    f
}

/// Grid on `[0, span]` in units of xi.
pub fn dimensionless_grid(span: f64, n_points: usize, spacing: GridSpacing) -> Result<Vec<f64>> {
    require_positive("span", span)?;
    let last = (n_points - 1) as f64;
    let grid = match spacing {
        GridSpacing::Uniform => (0..n_points).map(|i| span * i as f64 / last).collect(),
        GridSpacing::Stretched { beta } => {
            require_positive("beta", beta)?;
            let denom = beta.sinh();
            (0..n_points)
                .map(|i| span * (beta * i as f64 / last).sinh() / denom)
                .collect::<Vec<_>>()
        }
    };
    let mut grid = grid;
    // pin the far boundary exactly
    grid[n_points - 1] = span;
    Ok(grid)
}

fn check_shape(u: &[f64]) -> Result<()> {
    let bounded = u.iter().all(|&v| (0.0..=1.0 + 1e-9).contains(&v));
    let monotone = u.windows(2).all(|w| w[1] >= w[0]);
    if bounded && monotone {
        Ok(())
    } else {
        Err(Error::Domain(
            "boundary-value solve converged to a non-monotone branch".to_string(),
        ))
    }
}

struct Stencil {
    lo: Vec<f64>,
    up: Vec<f64>,
    // h- h+ per interior node, for the scaled residual
    weight: Vec<f64>,
}

impl Stencil {
    fn new(y: &[f64]) -> Self {
        let m = y.len().saturating_sub(2);
        let mut lo = Vec::with_capacity(m);
        let mut up = Vec::with_capacity(m);
        let mut weight = Vec::with_capacity(m);
        for w in y.windows(3) {
            let hm = w[1] - w[0];
            let hp = w[2] - w[1];
            lo.push(2.0 / (hm * (hm + hp)));
            up.push(2.0 / (hp * (hm + hp)));
            weight.push(hm * hp);
        }
        Self { lo, up, weight }
    }

    /// Fills `f` and returns its max norm.
    fn residual(&self, u: &[f64], f: &mut [f64]) -> f64 {
        let mut norm = 0.0f64;
        for (i, fi) in f.iter_mut().enumerate() {
            let (a, b, c) = (u[i], u[i + 1], u[i + 2]);
            *fi = self.lo[i] * a - (self.lo[i] + self.up[i]) * b + self.up[i] * c - b * b * b + b;
            norm = norm.max(fi.abs());
        }
        norm
    }

    fn scaled_norm(&self, f: &[f64]) -> f64 {
        f.iter()
            .zip(&self.weight)
            .map(|(fi, w)| (fi * w).abs())
            .fold(0.0, f64::max)
    }
}

/// Thomas algorithm; `None` on a zero pivot.
fn solve_tridiagonal(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Option<Vec<f64>> {
    let n = diag.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    if diag[0] == 0.0 {
        return None;
    }
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - sub[i] * c[i - 1];
        if denom == 0.0 {
            return None;
        }
        c[i] = sup[i] / denom;
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / denom;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    Some(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn converges_to_tanh() {
        let sol = solve_profile(1.0, 12.0, 2001, 1e-12).unwrap();
        assert_eq!(sol.u[0], 0.0);
        assert_eq!(*sol.u.last().unwrap(), 1.0);
        assert!(sol.max_deviation <= 1e-6, "{}", sol.max_deviation);
        assert!(sol.residual <= 1e-12);
        assert!(sol.u.windows(2).all(|w| w[1] >= w[0]));
    }

    #[test]
    fn scale_invariance() {
        let one = solve_profile(1.0, 12.0, 801, 1e-12).unwrap();
        let nb = solve_profile(38.0, 12.0 * 38.0, 801, 1e-12).unwrap();
        for ((x1, u1), (x38, u38)) in one.grid.iter().zip(&one.u).zip(nb.grid.iter().zip(&nb.u)) {
            assert!((x38 / 38.0 - x1).abs() < 1e-12);
            assert!((u1 - u38).abs() <= 1e-8);
        }
    }

    #[test]
    fn verify_detects_perturbations() {
        let mut sol = solve_profile(1.0, 12.0, 401, 1e-12).unwrap();
        sol.u = sol.grid.iter().map(|&x| (x / SQRT_2).tanh()).collect();
        assert_eq!(verify_profile(&sol, 1.0), 0.0);
        let mid = sol.u.len() / 2;
        sol.u[mid] += 1e-3;
        assert!(verify_profile(&sol, 1.0) >= 9e-4);
    }

    #[test]
    fn analytic_profile_residual_is_second_order() {
        let norm = |n: usize| {
            let y = dimensionless_grid(12.0, n, GridSpacing::Stretched { beta: 2.0 }).unwrap();
            let u: Vec<f64> = y.iter().map(|&v| (v / SQRT_2).tanh()).collect();
            discrete_residual(&y, &u, 1.0)
                .iter()
                .fold(0.0f64, |m, r| m.max(r.abs()))
        };
        let ratio = norm(401) / norm(801);
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn refinement_reduces_deviation() {
        let devs: Vec<f64> = [201, 801, 3201]
            .iter()
            .map(|&n| solve_profile(1.0, 12.0, n, 1e-12).unwrap().max_deviation)
            .collect();
        assert!(devs[0] > devs[1] && devs[1] > devs[2], "{devs:?}");
    }

    #[test]
    fn uniform_grid_and_analytic_guess() {
        let opts = BvpOptions {
            spacing: GridSpacing::Uniform,
            initial_guess: InitialGuess::Analytic,
            ..BvpOptions::default()
        };
        let sol = solve_profile_with(1.0, 12.0, 801, 1e-12, &opts).unwrap();
        assert!(sol.max_deviation < 1e-5);
        assert!(sol.iterations <= 10);
    }

    #[test]
    fn rejects_short_domain_and_coarse_grid() {
        assert!(solve_profile(1.0, 7.9, 1000, 1e-10).is_err());
        assert!(solve_profile(1.0, 12.0, 99, 1e-10).is_err());
    }

    #[test]
    fn iteration_cap() {
        let opts = BvpOptions {
            max_iterations: 2,
            ..BvpOptions::default()
        };
        assert!(matches!(
            solve_profile_with(1.0, 12.0, 401, 1e-12, &opts),
            Err(Error::NonConvergence { .. })
        ));
    }
}
