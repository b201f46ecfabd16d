//! The periodic Hilbert transform `C_d` on a strip of depth `d`, two ways.
//!
//! The multiplier route maps `cos(nx) ↦ coth(nd)·sin(nx)` and
//! `sin(nx) ↦ −coth(nd)·cos(nx)`. The convolution route evaluates
//! `(1/2π)·PV∫_{−π}^{π} β_d(x − s)F(s) ds` by quadrature, treating `F` only
//! through point evaluations.
//!
//! The kernel's 2π-translates are already part of `β_d`, so the convolution
//! integrates over a single period with no image terms added.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::beta::{beta_kernel_line1, StripGeometry};
use crate::error::{Error, Result};
use crate::fourier::{grid_point, FourierSeries, SampledFunction};
use crate::report::VerificationReport;
use crate::scalar::{coth_pos, Real};

/// Sup-norm agreement required between the two routes.
pub const ROUTE_TOLERANCE: f64 = 1e-6;

const INITIAL_PANELS: usize = 16;
/// Smallest admissible panel width is `π / MAX_PANELS`.
const MAX_PANELS: usize = 1 << 20;

/// Settings for the principal-value quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PvQuadratureConfig<T> {
    grid_size: usize,
    kernel_tol: T,
    refine_tol: T,
}

impl<T: Real> PvQuadratureConfig<T> {
    /// Output grid of `grid_size` points (even, at least 8), kernel series
    /// tolerance `kernel_tol`, refinement stopping at `1e-8` sup-norm change.
    pub fn new(grid_size: usize, kernel_tol: T) -> Result<Self> {
        if grid_size < 8 || !grid_size.is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "grid size {grid_size} must be even and at least 8"
            )));
        }
        if !(kernel_tol > T::zero()) {
            return Err(Error::InvalidConfig(format!(
                "kernel tolerance {kernel_tol} must be positive"
            )));
        }
        Ok(Self {
            grid_size,
            kernel_tol,
            refine_tol: T::lit(1e-8),
        })
    }

    pub fn with_refine_tol(mut self, refine_tol: T) -> Self {
        self.refine_tol = refine_tol;
        self
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn kernel_tol(&self) -> T {
        self.kernel_tol
    }

    pub fn refine_tol(&self) -> T {
        self.refine_tol
    }
}

fn check_depth<T: Real>(d: T) -> Result<()> {
    if d > T::zero() && d.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveDepth(d.to_f64_lossy()))
    }
}

/// `C_d` on coefficients: `a'_n = −b_n·coth(nd)`, `b'_n = a_n·coth(nd)`.
pub fn hilbert_multiplier<T: Real>(f: &FourierSeries<T>, d: T) -> Result<FourierSeries<T>> {
    check_depth(d)?;
    let (cos, sin) = (1..=f.len())
        .map(|n| {
            let c = coth_pos(T::from_usize_lossy(n) * d);
            (-f.b(n) * c, f.a(n) * c)
        })
        .unzip();
    FourierSeries::new(cos, sin)
}

/// Work done by one convolution evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadratureStats {
    /// Midpoint panels on `(0, π)` at the accepted level.
    pub panels: usize,
    /// Kernel evaluations, one per distinct node.
    pub kernel_evaluations: usize,
}

/// `C_d F` on the `M`-point grid by principal-value convolution.
pub fn hilbert_convolution<T: Real>(
    f: &FourierSeries<T>,
    d: T,
    cfg: &PvQuadratureConfig<T>,
) -> Result<SampledFunction<T>> {
    hilbert_convolution_with_stats(f, d, cfg).map(|(s, _)| s)
}

/// As [`hilbert_convolution`], also reporting quadrature effort.
///
/// Oddness of `β_d` folds the principal value into the regular integral
///
/// ```text
/// (1/2π)·∫₀^π β_d(u)·[F(x − u) − F(x + u)] du,
/// ```
///
/// whose integrand is even, 2π-periodic and analytic: the `2/u` pole of the
/// kernel meets the linear zero of the bracket. Composite midpoint sums
/// therefore converge geometrically. Panels are tripled each level so every
/// old node is reused and each kernel value is computed exactly once.
/// Refinement stops when two levels differ by less than the configured
/// tolerance in sup-norm.
pub fn hilbert_convolution_with_stats<T: Real>(
    f: &FourierSeries<T>,
    d: T,
    cfg: &PvQuadratureConfig<T>,
) -> Result<(SampledFunction<T>, QuadratureStats)> {
    check_depth(d)?;
    let g = StripGeometry::new(d)?;
    let m = cfg.grid_size();
    let xs: Vec<T> = (0..m).map(|j| grid_point(j, m)).collect();
    let mut sums = vec![T::zero(); m];
    let mut previous: Option<Vec<T>> = None;
    let mut panels = INITIAL_PANELS;
    let mut evaluations = 0usize;

    loop {
        let h = T::PI() / T::from_usize_lossy(panels);
        let fresh: Vec<T> = (0..panels)
            .filter(|i| previous.is_none() || i % 3 != 1)
            .map(|i| (T::from_usize_lossy(i) + T::lit(0.5)) * h)
            .collect();
        let kernel = fresh
            .par_iter()
            .map(|&u| {
                // β(u) ~ 2/u near the pole; keep the request above the attainable floor.
                let floor = T::lit(8.0) * T::epsilon() * (T::lit(2.0) / u + T::one());
                beta_kernel_line1(u, &g, cfg.kernel_tol().max(floor))
            })
            .collect::<Result<Vec<T>>>()?;
        evaluations += fresh.len();

        sums.par_iter_mut().zip(&xs).for_each(|(sum, &x)| {
            let level: T = fresh
                .iter()
                .zip(&kernel)
                .map(|(&u, &k)| k * (f.synthesize(x - u) - f.synthesize(x + u)))
                .fold(T::zero(), |a, b| a + b);
            *sum = *sum + level;
        });

        let scale = h / T::TAU();
        let current: Vec<T> = sums.iter().map(|&s| s * scale).collect();
        if let Some(prev) = &previous {
            let change = current
                .iter()
                .zip(prev)
                .fold(T::zero(), |acc, (&a, &b)| acc.max((a - b).abs()));
            if change < cfg.refine_tol() {
                let stats = QuadratureStats {
                    panels,
                    kernel_evaluations: evaluations,
                };
                return Ok((SampledFunction::new(current)?, stats));
            }
        }
        if panels * 3 > MAX_PANELS {
            return Err(Error::NoConvergence {
                what: "principal-value quadrature",
                detail: format!("{panels} panels on (0, π) at depth {d}"),
            });
        }
        previous = Some(current);
        panels *= 3;
    }
}

/// Compares the multiplier and convolution routes in sup-norm on the
/// configured grid.
pub fn cross_validate<T: Real>(
    f: &FourierSeries<T>,
    d: T,
    cfg: &PvQuadratureConfig<T>,
) -> Result<VerificationReport> {
    let spectral = hilbert_multiplier(f, d)?.sample(cfg.grid_size())?;
    let (quadrature, stats) = hilbert_convolution_with_stats(f, d, cfg)?;
    let gap = spectral.sup_distance(&quadrature).to_f64_lossy();
    Ok(VerificationReport::new(
        format!("hilbert_routes[d={d}]"),
        gap,
        0.0,
        gap,
        ROUTE_TOLERANCE,
    )
    .with_detail(format!(
        "grid {}, {} panels, {} kernel evaluations",
        cfg.grid_size(),
        stats.panels,
        stats.kernel_evaluations
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const COTH_1: f64 = 1.313_035_285_499_331_3;

    #[test]
    fn multiplier_on_sine() {
        let out = hilbert_multiplier(&FourierSeries::sine(1), 1.0).unwrap();
        assert!((out.a(1) + COTH_1).abs() < 1e-15);
        assert_eq!(out.b(1), 0.0);
        let e2 = 1f64.exp().powi(2);
        assert!((COTH_1 - (e2 + 1.0) / (e2 - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn multiplier_deep_water() {
        let out = hilbert_multiplier(&FourierSeries::cosine(1), 50.0_f64).unwrap();
        assert!((out.b(1) - 1.0).abs() < 1e-15);
        assert_eq!(out.a(1), 0.0);
    }

    #[test]
    fn multiplier_twice() {
        let once = hilbert_multiplier(&FourierSeries::cosine(1), 1.0).unwrap();
        let twice = hilbert_multiplier(&once, 1.0).unwrap();
        assert!((twice.a(1) + COTH_1 * COTH_1).abs() < 1e-15);
        assert!(twice.b(1).abs() < 1e-15);
    }

    #[test]
    fn multiplier_rejects_bad_depth() {
        let f = FourierSeries::<f64>::sine(1);
        assert!(matches!(hilbert_multiplier(&f, 0.0), Err(Error::NonPositiveDepth(_))));
        let cfg = PvQuadratureConfig::new(16, 1e-12).unwrap();
        assert!(matches!(hilbert_convolution(&f, -1.0, &cfg), Err(Error::NonPositiveDepth(_))));
    }

    #[test]
    fn config_validation() {
        assert!(PvQuadratureConfig::new(6, 1e-12).is_err());
        assert!(PvQuadratureConfig::new(9, 1e-12).is_err());
        assert!(PvQuadratureConfig::new(8, 0.0).is_err());
        assert!(PvQuadratureConfig::new(8, 1e-12).is_ok());
    }

    #[test]
    fn convolution_of_sine() {
        let cfg = PvQuadratureConfig::new(64, 1e-13).unwrap();
        let out = hilbert_convolution(&FourierSeries::sine(1), 1.0, &cfg).unwrap();
        for (j, &v) in out.samples().iter().enumerate() {
            let x: f64 = grid_point(j, 64);
            assert!((v + COTH_1 * x.cos()).abs() < 1e-6, "j = {j}");
        }
    }

    #[test]
    fn convolution_of_zero() {
        let cfg = PvQuadratureConfig::new(32, 1e-12).unwrap();
        let out = hilbert_convolution(&FourierSeries::<f64>::zero(), 1.0, &cfg).unwrap();
        assert!(out.samples().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn convolution_output_has_zero_mean() {
        let f = FourierSeries::padded(vec![0.0_f64, 1.0], vec![0.0, 0.0, 0.0, 0.0, 0.3]);
        let cfg = PvQuadratureConfig::new(128, 1e-13).unwrap();
        let out = hilbert_convolution(&f, 0.5, &cfg).unwrap();
        assert!(out.mean().abs() <= 1e-8 * out.sup_norm());
    }

    #[test]
    fn cross_validate_examples() {
        let cases = [
            (FourierSeries::sine(1), 1.0, 256),
            (FourierSeries::sine(5), 0.5, 4096),
            (FourierSeries::cosine(2), 2.0, 256),
        ];
        for (f, d, m) in cases {
            let cfg = PvQuadratureConfig::new(m, 1e-13).unwrap();
            let r = cross_validate(&f, d, &cfg).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
