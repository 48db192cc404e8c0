//! Pointwise evaluation of Gegenbauer, Legendre and Chebyshev polynomials by
//! forward three-term recurrence, plus endpoint values.

use crate::error::Result;
use crate::math;
use crate::specfun::{log_gamma, GegenbauerParam};
use alloc::vec::Vec;

/// One of the four polynomial families handled by the crate.
///
/// `legendre` is `gegenbauer(1/2)` and `chebyshev_u` is `gegenbauer(1)`;
/// `chebyshev_t` uses the T-recurrence directly rather than the
/// `lambda -> 0` limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolynomialFamily {
    Gegenbauer(GegenbauerParam),
    Legendre,
    ChebyshevT,
    ChebyshevU,
}

/// `C_n^{(lambda)}(x)` by forward recurrence from `C_0 = 1`, `C_1 = 2 lambda x`.
pub fn gegenbauer_eval(n: u32, param: &GegenbauerParam, x: f64) -> f64 {
    let lambda = param.lambda();
    recurrence(n, x, 1.0, 2.0 * lambda * x, |k, x, c1, c0| {
        let kf = k as f64;
        (2.0 * x * (kf + lambda) * c1 - (kf + 2.0 * lambda - 1.0) * c0) / (kf + 1.0)
    })
}

/// `C_n^{(lambda)}(1) = Gamma(n+2 lambda) / (n! Gamma(2 lambda))`, via log-gamma.
pub fn gegenbauer_at_one(n: u32, param: &GegenbauerParam) -> Result<f64> {
    let lambda = param.require_proper("gegenbauer_at_one")?;
    let nf = n as f64;
    if n == 0 {
        return Ok(1.0);
    }
    // 2 lambda > -1, so n + 2 lambda > 0 for n >= 1; Gamma(2 lambda) < 0
    // exactly when Gamma(n + 2 lambda) picks up the same sign flip at n = 0,
    // and for lambda in (-1/2, 0) both 2-lambda gammas are handled signed.
    let (lg_n2l, s1) = crate::specfun::log_gamma_signed(nf + 2.0 * lambda)?;
    let (lg_2l, s2) = crate::specfun::log_gamma_signed(2.0 * lambda)?;
    Ok(s1 * s2 * math::exp(lg_n2l - log_gamma(nf + 1.0)? - lg_2l))
}

/// Dispatch to the family recurrence.
pub fn family_eval(family: &PolynomialFamily, n: u32, x: f64) -> f64 {
    match family {
        PolynomialFamily::Gegenbauer(p) => gegenbauer_eval(n, p, x),
        PolynomialFamily::Legendre => recurrence(n, x, 1.0, x, |k, x, c1, c0| {
            let kf = k as f64;
            ((2.0 * kf + 1.0) * x * c1 - kf * c0) / (kf + 1.0)
        }),
        PolynomialFamily::ChebyshevT => recurrence(n, x, 1.0, x, |_, x, c1, c0| 2.0 * x * c1 - c0),
        PolynomialFamily::ChebyshevU => {
            recurrence(n, x, 1.0, 2.0 * x, |_, x, c1, c0| 2.0 * x * c1 - c0)
        }
    }
}

/// `sum_n coeffs[n] C_n^{(lambda)}(x)` with a single recurrence pass.
pub fn gegenbauer_sum(coeffs: &[f64], param: &GegenbauerParam, x: f64) -> f64 {
    let lambda = param.lambda();
    let mut total = 0.0;
    let mut c0 = 1.0;
    let mut c1 = 2.0 * lambda * x;
    for (k, &a) in coeffs.iter().enumerate() {
        let val = if k == 0 { c0 } else { c1 };
        total += a * val;
        if k >= 1 {
            let kf = k as f64;
            let next = (2.0 * x * (kf + lambda) * c1 - (kf + 2.0 * lambda - 1.0) * c0) / (kf + 1.0);
            c0 = c1;
            c1 = next;
        }
    }
    total
}

/// Evaluate one polynomial on a grid, reusing the recurrence per point.
pub fn family_eval_grid(family: &PolynomialFamily, n: u32, xs: &[f64]) -> Vec<f64> {
    xs.iter().map(|&x| family_eval(family, n, x)).collect()
}

fn recurrence(n: u32, x: f64, c0: f64, c1: f64, step: impl Fn(u32, f64, f64, f64) -> f64) -> f64 {
    match n {
        0 => c0,
        1 => c1,
        _ => {
            let (mut a, mut b) = (c0, c1);
            for k in 1..n {
                let next = step(k, x, b, a);
                a = b;
                b = next;
            }
            b
        }
    }
}
