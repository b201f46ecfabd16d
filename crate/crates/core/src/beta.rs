//! The strip kernel `β_d(s)` and its value at `s = π/2`.
//!
//! With `x = π²/(2d)` the value `β_d(π/2)` is computed three independent ways:
//!
//! * [`beta_half_raw`]: the hyperbolic series
//!   `πβ = 2x·coth(x/2) − x − 4x·sinh(x)·Σ 1/(cosh(4nx) − cosh(x))`;
//! * [`beta_half_lambert`]: the Lambert series
//!   `πβ = x·[1 + 4Σ(q^{4n−3}/(1−q^{4n−3}) − q^{4n−1}/(1−q^{4n−1}))]`, `q = e^{−x}`;
//! * [`beta_half_theta`]: the closed form `β = θ₃(0, e^{−π²/x})²`.
//!
//! Hyperbolic quotients are never formed from `cosh`/`sinh` of large
//! arguments. Every quotient is rewritten through
//! `cosh(A) − cosh(B) = 2·sinh((A+B)/2)·sinh((A−B)/2)` and
//! `sinh(u) = e^{u}(1 − e^{−2u})/2`, which leaves only decaying exponentials
//! and `expm1` factors.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::scalar::{coth, coth_minus_one, coth_pos, one_minus_exp_neg, Real};
use crate::sum::{compensated_sum, CompensatedSum};
use crate::theta::{ln_theta3_excess, theta3_excess, theta3_fast, Nome};

const MAX_TERMS: usize = 50_000_000;

/// Strip depth `d` with the derived half-period parameter `x = π²/(2d)` and
/// nome `q = e^{−π²/x} = e^{−2d}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripGeometry<T> {
    d: T,
    x: T,
    q: T,
}

impl<T: Real> StripGeometry<T> {
    pub fn new(d: T) -> Result<Self> {
        if !(d > T::zero()) || !d.is_finite() {
            return Err(Error::NonPositiveDepth(d.to_f64_lossy()));
        }
        let x = T::PI() * T::PI() / (T::lit(2.0) * d);
        Ok(Self {
            d,
            x,
            q: (-T::lit(2.0) * d).exp(),
        })
    }

    /// Geometry whose half-period parameter is `x`.
    pub fn from_half_period(x: T) -> Result<Self> {
        if !(x > T::zero()) || !x.is_finite() {
            return Err(Error::NonPositiveX(x.to_f64_lossy()));
        }
        Self::new(T::PI() * T::PI() / (T::lit(2.0) * x))
    }

    pub fn depth(&self) -> T {
        self.d
    }

    pub fn half_period(&self) -> T {
        self.x
    }

    /// `e^{−2d}`; underflows to zero for very deep strips.
    pub fn nome(&self) -> T {
        self.q
    }
}

fn check_x<T: Real>(x: T) -> Result<()> {
    if x > T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveX(x.to_f64_lossy()))
    }
}

fn check_tol<T: Real>(tol: T, value: T) -> Result<()> {
    let floor = T::lit(4.0) * T::epsilon() * value.abs();
    if !(tol > T::zero()) || tol < floor {
        return Err(Error::TolTooSmall {
            tol: tol.to_f64_lossy(),
            floor: floor.to_f64_lossy(),
        });
    }
    Ok(())
}

/// Representative of `s` modulo 2π in `[−π, π]`; `None` on `2πℤ`.
fn reduce_angle<T: Real>(s: T) -> Option<T> {
    let r = if s.abs() > T::PI() {
        s - T::TAU() * (s / T::TAU()).round()
    } else {
        s
    };
    (r != T::zero()).then_some(r)
}

fn no_convergence(what: &'static str, detail: String) -> Error {
    Error::NoConvergence { what, detail }
}

/// `β_d(s)` from the single-sum representation
///
/// ```text
/// β_d(s) = −s/d + (π/d)·coth(πs/2d) + (π/d)·Σ_{n≥1} 2 sinh(πs/d)/(cosh(πs/d) − cosh(2π²n/d)).
/// ```
///
/// `s` is first reduced into `[−π, π]` (the kernel is 2π-periodic). With
/// `a = πs/d` and `b = 2π²n/d > |a|` each summand equals
/// `−2·sgn(a)·e^{|a|−b}(1 − e^{−2|a|}) / ((1 − e^{−(b+|a|)})(1 − e^{−(b−|a|)}))`,
/// bounded by `C·e^{−b}` with `C = 2e^{|a|}(1 − e^{−2|a|})/(1 − e^{−(b₁−|a|)})²`;
/// summation stops once `(π/d)·C·e^{−b_N}/(1 − e^{−b₁}) ≤ tol`.
pub fn beta_kernel_line1<T: Real>(s: T, g: &StripGeometry<T>, tol: T) -> Result<T> {
    let s = reduce_angle(s).ok_or(Error::SingularPoint(s.to_f64_lossy()))?;
    check_tol(tol, T::one())?;
    let d = g.depth();
    let two = T::lit(2.0);
    let pi_over_d = T::PI() / d;
    let a = (pi_over_d * s).abs();
    let b1 = two * T::PI() * pi_over_d;

    // ln of (π/d)·C/(1 − e^{−b₁})
    let ln_prefactor = pi_over_d.ln()
        + T::LN_2()
        + a
        + one_minus_exp_neg(two * a).ln()
        - two * one_minus_exp_neg(b1 - a).ln()
        - one_minus_exp_neg(b1).ln();
    let ln_tol = tol.ln();

    let mut terms = Vec::new();
    let mut n = 1usize;
    while ln_prefactor - T::from_usize_lossy(n) * b1 > ln_tol {
        if n > MAX_TERMS {
            return Err(no_convergence("kernel series", format!("d = {d}, s = {s}")));
        }
        let b = T::from_usize_lossy(n) * b1;
        let mag = two * (a - b).exp() * one_minus_exp_neg(two * a)
            / (one_minus_exp_neg(b + a) * one_minus_exp_neg(b - a));
        terms.push(mag);
        n += 1;
    }
    let series = -s.signum() * compensated_sum(terms.into_iter().rev());

    let mut acc = CompensatedSum::new();
    acc.add(-s / d);
    acc.add(pi_over_d * coth(pi_over_d * s / two));
    acc.add(pi_over_d * series);
    let value = acc.value();
    check_tol(tol, value)?;
    Ok(value)
}

/// `coth(u) + σ` for `σ = ±1`, without cancellation on the side where they cancel.
fn coth_plus_sign<T: Real>(u: T, sigma: T) -> T {
    let two = T::lit(2.0);
    if sigma > T::zero() {
        if u < T::zero() {
            -coth_minus_one(-u)
        } else {
            two + coth_minus_one(u)
        }
    } else if u > T::zero() {
        coth_minus_one(u)
    } else {
        -two - coth_minus_one(-u)
    }
}

/// Symmetric partial sum of the image-series representation
///
/// ```text
/// −s/d + (π/d)·Σ_{|n|≤N} { coth(π(s − 2πn)/2d) + sgn(n) }.
/// ```
///
/// Terms `±n` are paired and summed from `n = N` down.
pub fn beta_kernel_line2<T: Real>(s: T, g: &StripGeometry<T>, n_max: usize) -> Result<T> {
    if reduce_angle(s).is_none() {
        return Err(Error::SingularPoint(s.to_f64_lossy()));
    }
    let d = g.depth();
    let scale = T::PI() / (T::lit(2.0) * d);
    let mut images = CompensatedSum::new();
    for n in (1..=n_max).rev() {
        let shift = T::TAU() * T::from_usize_lossy(n);
        images.add(coth_plus_sign(scale * (s - shift), T::one()));
        images.add(coth_plus_sign(scale * (s + shift), -T::one()));
    }
    images.add(coth(scale * s));
    let mut acc = CompensatedSum::new();
    acc.add(-s / d);
    acc.add(T::PI() / d * images.value());
    Ok(acc.value())
}

/// `sinh(x)/(cosh(4nx) − cosh(x)) = e^{−(4n−1)x}(1 − e^{−2x}) / ((1 − e^{−(4n+1)x})(1 − e^{−(4n−1)x}))`.
fn raw_summand<T: Real>(x: T, n: usize) -> T {
    let four_n = T::lit(4.0) * T::from_usize_lossy(n);
    let lo = (four_n - T::one()) * x;
    let hi = (four_n + T::one()) * x;
    (-lo).exp() * one_minus_exp_neg(T::lit(2.0) * x)
        / (one_minus_exp_neg(hi) * one_minus_exp_neg(lo))
}

/// `β_d(π/2)` from `πβ = 2x·coth(x/2) − x − 4x·sinh(x)·Σ_{n≥1} 1/(cosh(4nx) − cosh(x))`.
///
/// The summand is bounded by `K·e^{−(4n−1)x}` with
/// `K = (1 − e^{−2x})/((1 − e^{−5x})(1 − e^{−3x}))`, so the tail from `n` is at
/// most `(4x/π)·K·e^{−(4n−1)x}/(1 − e^{−4x})`. Costs `O(1/x)` terms.
pub fn beta_half_raw<T: Real>(x: T, tol: T) -> Result<T> {
    check_x(x)?;
    check_tol(tol, T::one())?;
    let two = T::lit(2.0);
    let four = T::lit(4.0);
    let k = one_minus_exp_neg(two * x)
        / (one_minus_exp_neg(T::lit(5.0) * x) * one_minus_exp_neg(T::lit(3.0) * x));
    let ln_prefactor = (four * x / T::PI()).ln() + k.ln() - one_minus_exp_neg(four * x).ln();
    let ln_tol = tol.ln();

    let mut terms = Vec::new();
    let mut n = 1usize;
    while ln_prefactor - (four * T::from_usize_lossy(n) - T::one()) * x > ln_tol {
        if n > MAX_TERMS {
            return Err(no_convergence("hyperbolic series", format!("x = {x}")));
        }
        terms.push(raw_summand(x, n));
        n += 1;
    }
    let series = compensated_sum(terms.into_iter().rev());

    let mut acc = CompensatedSum::new();
    acc.add(two * x * coth_pos(x / two));
    acc.add(-x);
    acc.add(-four * x * series);
    let value = acc.value() / T::PI();
    check_tol(tol, value)?;
    Ok(value)
}

/// `β_d(π/2)` from the Lambert series in `q = e^{−x}`.
///
/// Each pair is merged before accumulation:
/// `q^a/(1−q^a) − q^{a+2}/(1−q^{a+2}) = q^a(1 − q²)/((1 − q^a)(1 − q^{a+2}))`
/// with `a = 4n − 3`. The tail from pair `n` is at most
/// `(x/π)·8q^{4n−3}/((1−q)(1−q⁴))`.
pub fn beta_half_lambert<T: Real>(x: T, tol: T) -> Result<T> {
    check_x(x)?;
    check_tol(tol, T::one())?;
    let four = T::lit(4.0);
    let ln_prefactor = (x / T::PI()).ln() + T::lit(8.0).ln()
        - one_minus_exp_neg(x).ln()
        - one_minus_exp_neg(four * x).ln();
    let ln_tol = tol.ln();
    let gap = one_minus_exp_neg(T::lit(2.0) * x);

    let mut pairs = Vec::new();
    let mut n = 1usize;
    loop {
        let a = four * T::from_usize_lossy(n) - T::lit(3.0);
        if ln_prefactor - a * x <= ln_tol {
            break;
        }
        if n > MAX_TERMS {
            return Err(no_convergence("Lambert series", format!("x = {x}")));
        }
        let ax = a * x;
        pairs.push(
            (-ax).exp() * gap / (one_minus_exp_neg(ax) * one_minus_exp_neg(ax + T::lit(2.0) * x)),
        );
        n += 1;
    }
    let series = compensated_sum(pairs.into_iter().rev());
    let value = x / T::PI() * (T::one() + four * series);
    check_tol(tol, value)?;
    Ok(value)
}

/// `β_d(π/2) = θ₃(0, e^{−π²/x})²`, evaluated through the fast theta route.
pub fn beta_half_theta<T: Real>(x: T) -> Result<T> {
    check_x(x)?;
    let scale = T::one().max((x / T::PI()).sqrt());
    let theta = theta3_fast(T::PI() * T::PI() / x, T::lit(8.0) * T::epsilon() * scale)?;
    Ok(theta * theta)
}

/// `β_d(π/2) − 1`, positive for every `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaExcess<T> {
    /// `log₁₀(β − 1)`, finite even when the excess underflows.
    pub log10_excess: T,
    /// The excess itself when it is at least the smallest positive normal number.
    pub excess: Option<T>,
}

/// `β − 1 = (θ₃ − 1)(θ₃ + 1)` without subtracting nearly equal numbers.
///
/// With `E = θ₃ − 1`: `ln(β − 1) = ln E + ln(2 + E)` and
/// `ln E = ln 2 − π²/x + ln(1 + Σ_{n≥2} e^{−(n²−1)π²/x})`.
pub fn beta_half_excess<T: Real>(x: T) -> Result<BetaExcess<T>> {
    check_x(x)?;
    let ln_q = -T::PI() * T::PI() / x;
    let ln_e = ln_theta3_excess(ln_q, T::epsilon())?;
    let e = ln_e.exp();
    let ln_excess = ln_e + (T::lit(2.0) + e).ln();
    let log10_excess = ln_excess / T::LN_10();

    let excess = if ln_excess > T::min_positive_value().ln() {
        let q = Nome::new(ln_q.exp())?;
        let tol = T::lit(8.0) * T::epsilon() * (T::one() + e);
        let direct = theta3_excess(q, tol)?;
        Some(direct * (T::lit(2.0) + direct))
    } else {
        None
    };
    Ok(BetaExcess {
        log10_excess,
        excess,
    })
}

/// Residual of `4 − 8Σ_{n≤N} 1/(16n² − 1) = π`, judged against the
/// telescoping bound `1/(2N)` on the omitted tail.
pub fn limit_identity_check(n: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::NonPositiveInteger("N"));
    }
    let partial = compensated_sum((1..=n).rev().map(|k| {
        let k = k as f64;
        1.0 / ((4.0 * k - 1.0) * (4.0 * k + 1.0))
    }));
    let value = 4.0 - 8.0 * partial;
    let bound = 1.0 / (2.0 * n as f64);
    Ok(VerificationReport::absolute(
        format!("limit_identity[N={n}]"),
        value,
        std::f64::consts::PI,
        bound,
    ))
}

/// Relative difference of the two summand forms
/// `2 sinh(x)/(cosh(4nx) − cosh(x))` and
/// `sinh(x)/(sinh((4n+1)x/2)·sinh((4n−1)x/2))`, both evaluated naively.
pub fn lemma_termwise_residual<T: Real>(x: T, n: usize) -> T {
    let two = T::lit(2.0);
    let four_n = T::lit(4.0) * T::from_usize_lossy(n);
    let difference_form = two * x.sinh() / ((four_n * x).cosh() - x.cosh());
    let product_form =
        x.sinh() / (((four_n + T::one()) * x / two).sinh() * ((four_n - T::one()) * x / two).sinh());
    (difference_form - product_form).abs() / product_form.abs()
}

/// Discrepancies of `π·β_d(π/2)` (single-sum kernel) against the hyperbolic
/// series at `x = π²/(2d)` and at the alternative reading `x = π²/d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConventionResiduals<T> {
    pub half_depth: T,
    pub full_depth: T,
}

pub fn kernel_convention_residuals<T: Real>(d: T, tol: T) -> Result<ConventionResiduals<T>> {
    let g = StripGeometry::new(d)?;
    let kernel = T::PI() * beta_kernel_line1(T::FRAC_PI_2(), &g, tol)?;
    let pi2 = T::PI() * T::PI();
    let adopted = T::PI() * beta_half_raw(pi2 / (T::lit(2.0) * d), tol)?;
    let alternative = T::PI() * beta_half_raw(pi2 / d, tol)?;
    Ok(ConventionResiduals {
        half_depth: (kernel - adopted).abs(),
        full_depth: (kernel - alternative).abs(),
    })
}
