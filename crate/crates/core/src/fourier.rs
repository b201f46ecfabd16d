//! Trigonometric representation of 2π-periodic zero-mean functions.
//!
//! A [`FourierSeries`] holds `w(x) = Σ a_n cos(nx) + Σ b_n sin(nx)` for
//! `n = 1..N`. There is no constant term, so every series has zero mean by
//! construction. [`SampledFunction`] is the same kind of function on the
//! equispaced grid `x_j = 2πj/M`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::sum::CompensatedSum;

/// Cosine and sine coefficients `a_n`, `b_n` for `n = 1..N`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FourierSeries<T> {
    cos: Vec<T>,
    sin: Vec<T>,
}

impl<T: Real> FourierSeries<T> {
    /// Builds a series from equal-length coefficient sequences; index 0 is `n = 1`.
    pub fn new(cos: Vec<T>, sin: Vec<T>) -> Result<Self> {
        if cos.len() != sin.len() {
            return Err(Error::LengthMismatch {
                cos: cos.len(),
                sin: sin.len(),
            });
        }
        Ok(Self { cos, sin })
    }

    /// Like [`new`](Self::new) but zero-pads the shorter sequence.
    pub fn padded(mut cos: Vec<T>, mut sin: Vec<T>) -> Self {
        let n = cos.len().max(sin.len());
        cos.resize(n, T::zero());
        sin.resize(n, T::zero());
        Self { cos, sin }
    }

    pub fn zero() -> Self {
        Self {
            cos: Vec::new(),
            sin: Vec::new(),
        }
    }

    /// `cos(nx)`. Panics if `n == 0` (no constant term exists).
    pub fn cosine(n: usize) -> Self {
        Self::zero().with_cos(n, T::one())
    }

    /// `sin(nx)`. Panics if `n == 0`.
    pub fn sine(n: usize) -> Self {
        Self::zero().with_sin(n, T::one())
    }

    /// Adds `value` to `a_n`, growing the series if needed.
    pub fn with_cos(mut self, n: usize, value: T) -> Self {
        let i = self.slot(n);
        self.cos[i] = self.cos[i] + value;
        self
    }

    /// Adds `value` to `b_n`, growing the series if needed.
    pub fn with_sin(mut self, n: usize, value: T) -> Self {
        let i = self.slot(n);
        self.sin[i] = self.sin[i] + value;
        self
    }

    fn slot(&mut self, n: usize) -> usize {
        assert!(n >= 1, "zero-mean series have no n = 0 term");
        if n > self.cos.len() {
            self.cos.resize(n, T::zero());
            self.sin.resize(n, T::zero());
        }
        n - 1
    }

    /// Highest harmonic `N`.
    pub fn len(&self) -> usize {
        self.cos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cos.is_empty()
    }

    /// `a_1..a_N`.
    pub fn cos_coeffs(&self) -> &[T] {
        &self.cos
    }

    /// `b_1..b_N`.
    pub fn sin_coeffs(&self) -> &[T] {
        &self.sin
    }

    /// `a_n`, zero beyond the stored range.
    pub fn a(&self, n: usize) -> T {
        n.checked_sub(1)
            .and_then(|i| self.cos.get(i).copied())
            .unwrap_or_else(T::zero)
    }

    /// `b_n`, zero beyond the stored range.
    pub fn b(&self, n: usize) -> T {
        n.checked_sub(1)
            .and_then(|i| self.sin.get(i).copied())
            .unwrap_or_else(T::zero)
    }

    /// `α·self + β·other`.
    pub fn combine(&self, alpha: T, other: &Self, beta: T) -> Self {
        let n = self.len().max(other.len());
        let cos = (1..=n)
            .map(|k| alpha * self.a(k) + beta * other.a(k))
            .collect();
        let sin = (1..=n)
            .map(|k| alpha * self.b(k) + beta * other.b(k))
            .collect();
        Self { cos, sin }
    }

    /// Evaluates the series at `x`, from the highest harmonic down, with
    /// compensated accumulation.
    pub fn synthesize(&self, x: T) -> T {
        let mut acc = CompensatedSum::new();
        for n in (1..=self.len()).rev() {
            let nx = T::from_usize_lossy(n) * x;
            let (s, c) = nx.sin_cos();
            acc.add(self.cos[n - 1] * c);
            acc.add(self.sin[n - 1] * s);
        }
        acc.value()
    }

    /// Samples the series on the `M`-point grid `x_j = 2πj/M`.
    pub fn sample(&self, m: usize) -> Result<SampledFunction<T>> {
        SampledFunction::<T>::check_grid(m)?;
        let samples = (0..m)
            .map(|j| self.synthesize(grid_point(j, m)))
            .collect();
        Ok(SampledFunction { samples })
    }
}

/// `x_j = 2πj/M`.
pub fn grid_point<T: Real>(j: usize, m: usize) -> T {
    T::TAU() * T::from_usize_lossy(j) / T::from_usize_lossy(m)
}

/// Synthesizes a series at `x`.
pub fn synthesize<T: Real>(f: &FourierSeries<T>, x: T) -> T {
    f.synthesize(x)
}

/// Values `w(x_j)` at `x_j = 2πj/M`, `M` even and at least 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction<T> {
    samples: Vec<T>,
}

impl<T: Real> SampledFunction<T> {
    pub fn new(samples: Vec<T>) -> Result<Self> {
        Self::check_grid(samples.len())?;
        Ok(Self { samples })
    }

    /// Samples an arbitrary closure on the `M`-point grid.
    pub fn from_fn(m: usize, f: impl Fn(T) -> T) -> Result<Self> {
        Self::check_grid(m)?;
        Ok(Self {
            samples: (0..m).map(|j| f(grid_point(j, m))).collect(),
        })
    }

    fn check_grid(m: usize) -> Result<()> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(Error::InvalidGrid(m));
        }
        Ok(())
    }

    pub fn samples(&self) -> &[T] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<T> {
        self.samples
    }

    /// Grid size `M`.
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn mean(&self) -> T {
        let total: CompensatedSum<T> = self.samples.iter().copied().collect();
        total.value() / T::from_usize_lossy(self.len())
    }

    pub fn sup_norm(&self) -> T {
        self.samples
            .iter()
            .fold(T::zero(), |m, &v| if v.abs() > m { v.abs() } else { m })
    }

    /// `max_j |self_j − other_j|`. Panics on grid mismatch.
    pub fn sup_distance(&self, other: &Self) -> T {
        assert_eq!(self.len(), other.len(), "grid size mismatch");
        self.samples
            .iter()
            .zip(&other.samples)
            .fold(T::zero(), |m, (&a, &b)| {
                let d = (a - b).abs();
                if d > m {
                    d
                } else {
                    m
                }
            })
    }

    /// `α·self + β·other`. Panics on grid mismatch.
    pub fn combine(&self, alpha: T, other: &Self, beta: T) -> Self {
        assert_eq!(self.len(), other.len(), "grid size mismatch");
        Self {
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(&a, &b)| alpha * a + beta * b)
                .collect(),
        }
    }

    /// Discrete Fourier coefficients for `n = 1..N`.
    ///
    /// Requires `2N < M` and a sample mean within `1e-12 · max|sample|` of zero.
    pub fn analyze(&self, n: usize) -> Result<FourierSeries<T>> {
        let m = self.len();
        if 2 * n >= m {
            return Err(Error::AliasError {
                coefficients: n,
                samples: m,
            });
        }
        let rel = T::lit(1e-12).max(T::epsilon() * T::lit(64.0));
        let limit = rel * self.sup_norm();
        let mean = self.mean();
        if mean.abs() > limit {
            return Err(Error::NonZeroMean {
                mean: mean.to_f64_lossy(),
                limit: limit.to_f64_lossy(),
            });
        }

        // Angles n·x_j reduced exactly modulo 2π through (n·j) mod M.
        let (sin_table, cos_table): (Vec<T>, Vec<T>) =
            (0..m).map(|k| grid_point::<T>(k, m).sin_cos()).unzip();
        let scale = T::lit(2.0) / T::from_usize_lossy(m);
        let mut cos = Vec::with_capacity(n);
        let mut sin = Vec::with_capacity(n);
        for k in 1..=n {
            let mut ca = CompensatedSum::new();
            let mut sa = CompensatedSum::new();
            for (j, &s) in self.samples.iter().enumerate() {
                let idx = (k * j) % m;
                ca.add(s * cos_table[idx]);
                sa.add(s * sin_table[idx]);
            }
            cos.push(scale * ca.value());
            sin.push(scale * sa.value());
        }
        Ok(FourierSeries { cos, sin })
    }
}

/// Recovers `N` coefficients from samples.
pub fn analyze<T: Real>(s: &SampledFunction<T>, n: usize) -> Result<FourierSeries<T>> {
    s.analyze(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn synthesize_trivial_values() {
        let f = FourierSeries::padded(vec![1.0], vec![]);
        assert_eq!(f.synthesize(0.0), 1.0);
        let g = FourierSeries::padded(vec![], vec![1.0]);
        assert_eq!(g.synthesize(PI / 2.0), 1.0);
        let h = FourierSeries::padded(vec![0.0, 1.0], vec![]);
        assert!(h.synthesize(PI / 4.0).abs() < 1e-16);
    }

    #[test]
    fn new_rejects_length_mismatch() {
        assert_eq!(
            FourierSeries::new(vec![1.0], vec![]),
            Err(Error::LengthMismatch { cos: 1, sin: 0 })
        );
    }

    #[test]
    fn analyze_cosine_on_sixteen_points() {
        let s = SampledFunction::from_fn(16, f64::cos).unwrap();
        let f = s.analyze(4).unwrap();
        let expected_a = [1.0, 0.0, 0.0, 0.0];
        for (got, want) in f.cos_coeffs().iter().zip(expected_a) {
            assert!((got - want).abs() < 1e-13);
        }
        assert!(f.sin_coeffs().iter().all(|b| b.abs() < 1e-13));
    }

    #[test]
    fn analyze_sin_three_x() {
        let s = SampledFunction::from_fn(16, |x: f64| (3.0 * x).sin()).unwrap();
        let f = s.analyze(4).unwrap();
        for n in 1..=4 {
            assert!(f.a(n).abs() < 1e-13);
            let want = if n == 3 { 1.0 } else { 0.0 };
            assert!((f.b(n) - want).abs() < 1e-13, "b{n} = {}", f.b(n));
        }
    }

    #[test]
    fn analyze_mixed_against_direct_dft() {
        let m = 64;
        let s = SampledFunction::from_fn(m, |x: f64| x.cos() + 0.5 * (3.0 * x).sin()).unwrap();
        let f = s.analyze(8).unwrap();
        // Naive DFT with unreduced angles as an independent oracle.
        for n in 1..=8 {
            let (mut a, mut b) = (0.0, 0.0);
            for j in 0..m {
                let x = 2.0 * PI * j as f64 / m as f64;
                a += s.samples()[j] * (n as f64 * x).cos();
                b += s.samples()[j] * (n as f64 * x).sin();
            }
            a *= 2.0 / m as f64;
            b *= 2.0 / m as f64;
            assert!((f.a(n) - a).abs() < 1e-13);
            assert!((f.b(n) - b).abs() < 1e-13);
        }
        assert!((f.a(1) - 1.0).abs() < 1e-13);
        assert!((f.b(3) - 0.5).abs() < 1e-13);
    }

    #[test]
    fn analyze_errors() {
        let s = SampledFunction::from_fn(16, f64::cos).unwrap();
        assert!(matches!(s.analyze(8), Err(Error::AliasError { .. })));
        let shifted = SampledFunction::from_fn(16, |x: f64| x.cos() + 0.1).unwrap();
        assert!(matches!(shifted.analyze(4), Err(Error::NonZeroMean { .. })));
    }

    #[test]
    fn grid_validation() {
        assert_eq!(SampledFunction::<f64>::new(vec![0.0; 3]), Err(Error::InvalidGrid(3)));
        assert_eq!(SampledFunction::<f64>::new(vec![]), Err(Error::InvalidGrid(0)));
        assert!(SampledFunction::<f64>::new(vec![0.0; 2]).is_ok());
    }

    #[test]
    fn sampled_series_has_zero_mean() {
        let f = FourierSeries::padded(vec![1.0_f64, -2.0, 0.25], vec![0.5, 3.0, -1.0]);
        let s = f.sample(24).unwrap();
        assert!(s.mean().abs() <= 1e-13 * s.sup_norm());
    }

    #[test]
    fn single_precision_round_trip() {
        let f = FourierSeries::<f32>::padded(vec![0.5, 0.0, 1.0], vec![0.0, -0.25]);
        let back = f.sample(32).unwrap().analyze(3).unwrap();
        for n in 1..=3 {
            assert!((back.a(n) - f.a(n)).abs() < 1e-5);
            assert!((back.b(n) - f.b(n)).abs() < 1e-5);
        }
    }
}
