//! Normalization constants of the Gegenbauer family:
//! `c_{n,lambda} = Gamma(lambda) Gamma(n+1) / Gamma(n+lambda)` and the
//! orthogonality weight `h_n^{(lambda)}`.

use super::gamma::{log_gamma, log_gamma_signed};
use super::GegenbauerParam;
use crate::error::{Error, Result};
use crate::math;
use alloc::format;
use core::f64::consts::PI;

/// Evaluation mode for [`c_norm`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CNormMode {
    /// Log-gamma differences.
    Exact,
    /// `Gamma(lambda) n^{1-lambda} (1 + lambda(1-lambda)/(2n))`.
    Asymptotic,
    /// Regime `lambda = alpha n`:
    /// `(alpha^alpha/(alpha+1)^{alpha+1})^n sqrt(2 pi n (alpha+1)/alpha)`.
    Diagonal { alpha: f64 },
}

/// `(ln |c_{n,lambda}|, sign)`.
pub fn c_norm_log(n: u32, param: &GegenbauerParam, mode: CNormMode) -> Result<(f64, f64)> {
    let lambda = param.require_proper("c_norm")?;
    let nf = n as f64;
    match mode {
        CNormMode::Exact => {
            if n == 0 {
                // Gamma(lambda) Gamma(1) / Gamma(lambda)
                return Ok((0.0, 1.0));
            }
            let (lg_lam, sign) = log_gamma_signed(lambda)?;
            // n + lambda > 0 for n >= 1, lambda > -1/2
            Ok((lg_lam + log_gamma(nf + 1.0)? - log_gamma(nf + lambda)?, sign))
        }
        CNormMode::Asymptotic => {
            if n == 0 {
                return Err(Error::Domain("asymptotic c_norm requires n >= 1".into()));
            }
            let (lg_lam, sign) = log_gamma_signed(lambda)?;
            let corr = 1.0 + lambda * (1.0 - lambda) / (2.0 * nf);
            Ok((
                lg_lam + (1.0 - lambda) * math::ln(nf) + math::ln(math::abs(corr)),
                sign * if corr < 0.0 { -1.0 } else { 1.0 },
            ))
        }
        CNormMode::Diagonal { alpha } => {
            if !(alpha > 0.0) {
                return Err(Error::Domain(format!(
                    "diagonal c_norm requires alpha > 0, got {alpha}"
                )));
            }
            if n == 0 {
                return Err(Error::Domain("diagonal c_norm requires n >= 1".into()));
            }
            let rate = alpha * math::ln(alpha) - (alpha + 1.0) * math::ln(alpha + 1.0);
            Ok((
                nf * rate + 0.5 * math::ln(2.0 * PI * nf * (alpha + 1.0) / alpha),
                1.0,
            ))
        }
    }
}

/// The constant `c_{n,lambda}` in the chosen mode.
pub fn c_norm(n: u32, param: &GegenbauerParam, mode: CNormMode) -> Result<f64> {
    let (ln_abs, sign) = c_norm_log(n, param, mode)?;
    Ok(sign * math::exp(ln_abs))
}

/// `ln h_n^{(lambda)}` where
/// `h_n = 2^{1-2 lambda} pi Gamma(n+2 lambda) / (Gamma(lambda)^2 Gamma(n+1) (n+lambda))`.
pub fn h_norm_log(n: u32, param: &GegenbauerParam) -> Result<f64> {
    let lambda = param.require_proper("h_norm")?;
    let nf = n as f64;
    // Gamma(n+2 lambda) and (n+lambda) may individually be negative for
    // -1/2 < lambda < 0 at n = 0, but their product keeps h_n positive.
    let (lg_n2l, s1) = log_gamma_signed(nf + 2.0 * lambda)?;
    let (lg_lam, _) = log_gamma_signed(lambda)?;
    let shift = nf + lambda;
    let s2 = if shift < 0.0 { -1.0 } else { 1.0 };
    debug_assert!(s1 * s2 > 0.0);
    Ok((1.0 - 2.0 * lambda) * math::ln(2.0) + math::ln(PI) + lg_n2l
        - 2.0 * lg_lam
        - log_gamma(nf + 1.0)?
        - math::ln(math::abs(shift)))
}

/// The orthogonality constant `h_n^{(lambda)}`.
pub fn h_norm(n: u32, param: &GegenbauerParam) -> Result<f64> {
    Ok(math::exp(h_norm_log(n, param)?))
}
