//! The theta constant `θ₃(0,q) = Σ_{n∈ℤ} q^{n²}` on real nomes, its modular
//! transformation, and exact integer checks of the two-squares identity
//!
//! ```text
//! (Σ q^{n²})² = 1 + 4 Σ_{n≥1} ( q^{4n−3}/(1−q^{4n−3}) − q^{4n−1}/(1−q^{4n−1}) ).
//! ```
//!
//! Series routines work from `ln q` internally, so nomes far below the
//! smallest representable float (e.g. `e^{−987}`) still yield exact log-space
//! excesses.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::scalar::{one_minus_exp_neg, Real};
use crate::sum::compensated_sum;

/// Upper limit on integer arguments of the lattice and divisor counts.
pub const INTEGER_LIMIT: u64 = 1_000_000;
/// Upper limit on the degree of the formal power series comparison.
pub const COEFFICIENT_LIMIT: u64 = 10_000;

const MAX_SERIES_TERMS: usize = 100_000_000;

/// A real nome `q ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Nome<T>(T);

impl<T: Real> Nome<T> {
    pub fn new(q: T) -> Result<Self> {
        if q >= T::zero() && q < T::one() {
            Ok(Self(q))
        } else {
            Err(Error::NomeOutOfRange(q.to_f64_lossy()))
        }
    }

    /// `q = e^{−x}`, `x > 0`.
    pub fn from_exponent(x: T) -> Result<Self> {
        if !(x > T::zero()) {
            return Err(Error::NonPositiveX(x.to_f64_lossy()));
        }
        Self::new((-x).exp())
    }

    pub fn value(self) -> T {
        self.0
    }

    fn ln(self) -> T {
        self.0.ln()
    }
}

/// How a series was truncated: requested tolerance, terms summed, and a
/// rigorous bound on everything left out.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationBudget<T> {
    pub tol: T,
    pub terms_used: usize,
    pub tail_bound: T,
}

/// `Σ_{n≥1} q^{n²}` with `q = e^{ln_q}`, truncated at the first `N` where
/// the majorant `2q^{N²}/(1−q^{2N+1})` of the doubled tail is `≤ threshold`.
fn half_excess_from_log<T: Real>(
    ln_q: T,
    tol: T,
    threshold: T,
) -> Result<(T, TruncationBudget<T>)> {
    let mut terms = Vec::new();
    let mut n = 1usize;
    loop {
        let nt = T::from_usize_lossy(n);
        let lead = (nt * nt * ln_q).exp();
        let ratio_gap = one_minus_exp_neg(-(T::lit(2.0) * nt + T::one()) * ln_q);
        let tail = T::lit(2.0) * lead / ratio_gap;
        if tail <= threshold || lead == T::zero() {
            let budget = TruncationBudget {
                tol,
                terms_used: terms.len(),
                tail_bound: tail,
            };
            return Ok((compensated_sum(terms.into_iter().rev()), budget));
        }
        if n >= MAX_SERIES_TERMS {
            return Err(Error::NoConvergence {
                what: "theta series",
                detail: format!("ln q = {} needs more than {MAX_SERIES_TERMS} terms", ln_q),
            });
        }
        terms.push(lead);
        n += 1;
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

/// `θ₃(0,q)` by direct summation with a proven tail bound.
pub fn theta3<T: Real>(q: Nome<T>, tol: T) -> Result<(T, TruncationBudget<T>)> {
    check_tol(tol, T::one())?;
    let (half, budget) = half_excess_from_log(q.ln(), tol, tol)?;
    let value = T::one() + T::lit(2.0) * half;
    check_tol(tol, value)?;
    Ok((value, budget))
}

/// `θ₃(0,q) − 1 = 2Σ_{n≥1} q^{n²}`, summed directly so no cancellation occurs.
///
/// The omitted tail is below `tol·min(1, 2q)`, so tiny excesses keep full
/// relative accuracy instead of truncating to zero.
pub fn theta3_excess<T: Real>(q: Nome<T>, tol: T) -> Result<T> {
    check_tol(tol, T::one())?;
    let threshold = tol * T::one().min(T::lit(2.0) * q.value());
    let (half, _) = half_excess_from_log(q.ln(), tol, threshold)?;
    let excess = T::lit(2.0) * half;
    check_tol(tol, T::one() + excess)?;
    Ok(excess)
}

/// `ln(θ₃(0,q) − 1)` for `q = e^{ln_q}`, valid far below float underflow.
///
/// Uses `2Σ q^{n²} = 2q·(1 + Σ_{n≥2} q^{n²−1})`; the bracket is summed to
/// relative accuracy `rel_tol`.
pub fn ln_theta3_excess<T: Real>(ln_q: T, rel_tol: T) -> Result<T> {
    if !(ln_q < T::zero()) {
        return Err(Error::NomeOutOfRange(ln_q.exp().to_f64_lossy()));
    }
    let mut terms = Vec::new();
    let mut n = 2usize;
    loop {
        let nt = T::from_usize_lossy(n);
        let lead = ((nt * nt - T::one()) * ln_q).exp();
        let tail = lead / one_minus_exp_neg(-(T::lit(2.0) * nt + T::one()) * ln_q);
        if tail <= rel_tol || lead == T::zero() {
            break;
        }
        if n >= MAX_SERIES_TERMS {
            return Err(Error::NoConvergence {
                what: "log theta excess",
                detail: format!("ln q = {ln_q}"),
            });
        }
        terms.push(lead);
        n += 1;
    }
    let correction = compensated_sum(terms.into_iter().rev());
    Ok(T::LN_2() + ln_q + correction.ln_1p())
}

/// `θ₃(0, e^{−x})`, switching to `√(π/x)·θ₃(0, e^{−π²/x})` below the
/// self-dual point `x = π`, so the working nome never exceeds `e^{−π}`.
pub fn theta3_fast<T: Real>(x: T, tol: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::NonPositiveX(x.to_f64_lossy()));
    }
    check_tol(tol, T::one())?;
    let value = if x >= T::PI() {
        let (half, _) = half_excess_from_log(-x, tol, tol)?;
        T::one() + T::lit(2.0) * half
    } else {
        let prefactor = (T::PI() / x).sqrt();
        let inner = tol / prefactor;
        let (half, _) = half_excess_from_log(-T::PI() * T::PI() / x, inner, inner)?;
        prefactor * (T::one() + T::lit(2.0) * half)
    };
    check_tol(tol, value)?;
    Ok(value)
}

/// Relative residual of `x·θ₃(0,e^{−x})² = π·θ₃(0,e^{−π²/x})²`, both sides
/// summed directly.
pub fn transformation_residual<T: Real>(x: T, tol: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::NonPositiveX(x.to_f64_lossy()));
    }
    let (direct, _) = theta3(Nome::from_exponent(x)?, tol)?;
    let (dual, _) = theta3(Nome::from_exponent(T::PI() * T::PI() / x)?, tol)?;
    let lhs = x * direct * direct;
    let rhs = T::PI() * dual * dual;
    Ok((lhs - rhs).abs() / rhs)
}

fn guard(n: u64, limit: u64) -> Result<()> {
    if n > limit {
        Err(Error::TooLarge { value: n, limit })
    } else {
        Ok(())
    }
}

fn is_square(m: u64) -> Option<u64> {
    let r = m.isqrt();
    (r * r == m).then_some(r)
}

/// Number of ordered integer pairs `(a, b)` with `a² + b² = n`, counted by
/// enumerating `a`.
pub fn r2_bruteforce(n: u64) -> Result<u64> {
    guard(n, INTEGER_LIMIT)?;
    let root = n.isqrt() as i64;
    let count = (-root..=root)
        .filter_map(|a| is_square(n - (a * a) as u64))
        .map(|b| if b == 0 { 1 } else { 2 })
        .sum();
    Ok(count)
}

/// `d₁(n) − d₃(n)`: divisors `≡ 1 (mod 4)` minus divisors `≡ 3 (mod 4)`.
pub fn divisor_excess(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::NonPositiveInteger("n"));
    }
    guard(n, INTEGER_LIMIT)?;
    let chi = |d: u64| match d % 4 {
        1 => 1,
        3 => -1,
        _ => 0,
    };
    let mut total = 0i64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += chi(d);
            let other = n / d;
            if other != d {
                total += chi(other);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Coefficients of `(Σ q^{n²})²` up to degree `N`, by convolving the theta
/// coefficient sequence with itself.
pub fn theta_squared_coefficients(n: usize) -> Vec<i64> {
    let mut theta = vec![0i64; n + 1];
    theta[0] = 1;
    let mut k = 1usize;
    while k * k <= n {
        theta[k * k] = 2;
        k += 1;
    }
    let squares: Vec<usize> = (0..=n).filter(|&i| theta[i] != 0).collect();
    let mut out = vec![0i64; n + 1];
    for &i in &squares {
        for &j in squares.iter().take_while(|&&j| i + j <= n) {
            out[i + j] += theta[i] * theta[j];
        }
    }
    out
}

/// Coefficients of `1 + 4Σ(q^{4n−3}/(1−q^{4n−3}) − q^{4n−1}/(1−q^{4n−1}))`
/// up to degree `N`, expanding each Lambert term as `Σ_k q^{ak}`.
pub fn lambert_coefficients(n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n + 1];
    out[0] = 1;
    for a in 1..=n {
        let sign = match a % 4 {
            1 => 4,
            3 => -4,
            _ => continue,
        };
        for m in (a..=n).step_by(a) {
            out[m] += sign;
        }
    }
    out
}

/// Exact comparison of both sides of the two-squares identity through
/// degree `N`.
///
/// Four integer sequences must agree at every degree: the convolution of
/// theta coefficients, the Lambert expansion, the lattice count
/// [`r2_bruteforce`], and `4·`[`divisor_excess`]. The report's computed and
/// reference values are the lattice-point total `Σ_{m≤N} r₂(m)` from the two
/// sides; the residual counts mismatched degrees.
pub fn two_squares_coefficient_check(n: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::NonPositiveInteger("N"));
    }
    guard(n, COEFFICIENT_LIMIT)?;
    let len = n as usize;
    let lhs = theta_squared_coefficients(len);
    let rhs = lambert_coefficients(len);

    let mut mismatches = 0u64;
    let mut first = None;
    if lhs[0] != 1 || rhs[0] != 1 || r2_bruteforce(0)? != 1 {
        mismatches += 1;
        first = Some(format!("degree 0: r2(0) = {}", lhs[0]));
    }
    for m in 1..=len {
        let lattice = r2_bruteforce(m as u64)? as i64;
        let divisors = 4 * divisor_excess(m as u64)?;
        if !(lhs[m] == rhs[m] && lhs[m] == lattice && lattice == divisors) {
            mismatches += 1;
            first.get_or_insert_with(|| {
                format!(
                    "degree {m}: convolution {} lambert {} lattice {lattice} divisors {divisors}",
                    lhs[m], rhs[m]
                )
            });
        }
    }
    let report = VerificationReport::new(
        format!("two_squares_identity[N={n}]"),
        lhs.iter().sum::<i64>(),
        rhs.iter().sum::<i64>(),
        mismatches as f64,
        0.0,
    );
    Ok(match first {
        Some(detail) => report.with_detail(format!("first mismatch at {detail}")),
        None => report.with_detail(format!("exact agreement at all degrees 0..={n}")),
    })
}
