//! The specific Gauss hypergeometric kernel `2F1(n+1, 1-lambda; n+lambda+1; x)`
//! appearing in the contour representation of Gegenbauer coefficients.
//!
//! Three routes are exposed: direct series summation (the reference path,
//! also available for complex argument), Euler's integral representation
//! evaluated by a fixed tanh-sinh rule (requires `lambda > 0`), and the
//! large-n asymptotic form `(1-x)^{lambda-1} (1 + O(1/n))`.

use super::GegenbauerParam;
use crate::error::{Error, Result};
use crate::math;
use alloc::format;
use num_complex::Complex64;

/// Evaluation route for [`hyp2f1_kernel`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyp2f1Method {
    /// Term-by-term summation with the term-ratio recurrence.
    Series,
    /// Euler integral `int_0^1 t^n (1-t)^{lambda-1} (1-xt)^{lambda-1} dt`,
    /// valid for `lambda > 0` only.
    Euler,
    /// `(1-x)^{lambda-1} [1 + lambda(1-lambda)/(n+lambda+1) x/(1-x)]`.
    Asymptotic,
}

const SERIES_RTOL: f64 = 1e-17;
const SERIES_CAP: usize = 10_000;

fn check_x(x: f64) -> Result<()> {
    if !(math::abs(x) < 1.0) {
        return Err(Error::Domain(format!(
            "hypergeometric kernel requires |x| < 1, got {x}"
        )));
    }
    Ok(())
}

fn series_sum(a: f64, b: f64, c: f64, x: f64) -> Result<f64> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for k in 0..SERIES_CAP {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
        if math::abs(term) < SERIES_RTOL * math::abs(sum) {
            return Ok(sum);
        }
    }
    // geometric convergence everywhere in |x| < 1; hitting the cap is a bug
    Err(Error::Precondition(format!(
        "hypergeometric series did not converge within {SERIES_CAP} terms (x = {x})"
    )))
}

fn series_real(n: u32, lambda: f64, x: f64) -> Result<f64> {
    let nf = n as f64;
    // For lambda > 1 the direct terms alternate through (1-lambda)_k while the
    // sum shrinks to (1-x)^{lambda-1}; near x = 1 that cancels catastrophically.
    // The Euler transformation 2F1(a,b;c;x) = (1-x)^{c-a-b} 2F1(c-a,c-b;c;x)
    // turns it into a positive-term series.
    if lambda > 1.0 && x > 0.0 {
        let s = series_sum(lambda, nf + 2.0 * lambda, nf + lambda + 1.0, x)?;
        Ok(math::powf(1.0 - x, 2.0 * lambda - 1.0) * s)
    } else {
        series_sum(nf + 1.0, 1.0 - lambda, nf + lambda + 1.0, x)
    }
}

fn euler_tanh_sinh(n: u32, lambda: f64, x: f64) -> Result<f64> {
    // I = int_0^1 t^n (1-t)^(lambda-1) (1-xt)^(lambda-1) dt by tanh-sinh;
    // 2F1 = Gamma(n+lambda+1) / (Gamma(n+1) Gamma(lambda)) * I.
    //
    // The truncation point grows as lambda -> 0 so that the untransformed
    // endpoint mass (1-t)^lambda is below 1e-18 at the cutoff.
    let asinh = |v: f64| math::ln(v + math::sqrt(v * v + 1.0));
    let u_max = f64::max(6.0, asinh(26.0 / lambda));
    let h = 0.02;
    let steps = (2.0 * u_max / h) as usize + 1;
    let mut integral = 0.0f64;
    for i in 0..=steps {
        let u = -u_max + i as f64 * h;
        let w = 0.5 * core::f64::consts::PI * math::sinh(u);
        let cosh_w = math::cosh(w);
        let dt = 0.5 * core::f64::consts::PI * math::cosh(u) / (2.0 * cosh_w * cosh_w);
        if dt == 0.0 || !dt.is_finite() {
            continue;
        }
        let t = 1.0 / (1.0 + math::exp(-2.0 * w));
        let one_minus_t = 1.0 / (1.0 + math::exp(2.0 * w));
        if t == 0.0 || one_minus_t == 0.0 {
            continue;
        }
        let val = math::powi(t, n as i32)
            * math::powf(one_minus_t, lambda - 1.0)
            * math::powf(1.0 - x * t, lambda - 1.0);
        integral += val * dt;
    }
    integral *= h;
    let nf = n as f64;
    let prefactor = math::exp(
        super::log_gamma(nf + lambda + 1.0)? - super::log_gamma(nf + 1.0)?
            - super::log_gamma(lambda)?,
    );
    Ok(prefactor * integral)
}

/// `2F1(n+1, 1-lambda; n+lambda+1; x)` for real `|x| < 1`.
pub fn hyp2f1_kernel(n: u32, param: &GegenbauerParam, x: f64, method: Hyp2f1Method) -> Result<f64> {
    check_x(x)?;
    let lambda = param.lambda();
    match method {
        Hyp2f1Method::Series => series_real(n, lambda, x),
        Hyp2f1Method::Euler => {
            if !(lambda > 0.0) {
                return Err(Error::Unsupported(format!(
                    "Euler integral representation requires lambda > 0, got {lambda}"
                )));
            }
            euler_tanh_sinh(n, lambda, x)
        }
        Hyp2f1Method::Asymptotic => {
            let nf = n as f64;
            Ok(math::powf(1.0 - x, lambda - 1.0)
                * (1.0 + lambda * (1.0 - lambda) / (nf + lambda + 1.0) * x / (1.0 - x)))
        }
    }
}

/// Series evaluation of the kernel at complex argument, `|x| < 1`.
pub fn hyp2f1_kernel_complex(n: u32, param: &GegenbauerParam, x: Complex64) -> Result<Complex64> {
    if !(x.norm() < 1.0) {
        return Err(Error::Domain(format!(
            "hypergeometric kernel requires |x| < 1, got |x| = {}",
            x.norm()
        )));
    }
    let lambda = param.lambda();
    let nf = n as f64;
    // same cancellation guard as the real path
    if lambda > 1.0 && (Complex64::new(1.0, 0.0) - x).norm() < 1.0 {
        let s = series_sum_complex(lambda, nf + 2.0 * lambda, nf + lambda + 1.0, x)?;
        return Ok((Complex64::new(1.0, 0.0) - x).powf(2.0 * lambda - 1.0) * s);
    }
    series_sum_complex(nf + 1.0, 1.0 - lambda, nf + lambda + 1.0, x)
}

fn series_sum_complex(a: f64, b: f64, c: f64, x: Complex64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..SERIES_CAP {
        let kf = k as f64;
        let ratio = (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
        term = term * ratio * x;
        sum += term;
        if term.norm() < SERIES_RTOL * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::Precondition(format!(
        "hypergeometric series did not converge within {SERIES_CAP} terms (|x| = {})",
        x.norm()
    )))
}
