//! Closed-form expansion coefficients for the model functions that admit
//! them: the simple pole, and algebraic or logarithmic endpoint
//! singularities. Gamma factors with large or negative arguments go through
//! signed log-gamma (reflection formula), never raw gamma.

use super::{joukowski_u, EndpointSign, ModelFunction};
use crate::error::{Error, Result};
use crate::math;
use crate::specfun::{
    c_norm, hyp2f1_kernel_complex, log_gamma, log_gamma_signed, CNormMode, GegenbauerParam,
};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;

fn endpoint_sign_factor(sign: EndpointSign, n: u32, log_case: bool) -> f64 {
    let odd = n % 2 == 1;
    match (sign, log_case) {
        // (1 - x)^alpha: mu_n = (-1)^n ; (1 + x)^alpha: mu_n = 1
        (EndpointSign::Minus, false) => {
            if odd {
                -1.0
            } else {
                1.0
            }
        }
        (EndpointSign::Plus, false) => 1.0,
        // log(1 - x): mu_n = -1 ; log(1 + x): mu_n = (-1)^{n+1}
        (EndpointSign::Minus, true) => -1.0,
        (EndpointSign::Plus, true) => {
            if odd {
                1.0
            } else {
                -1.0
            }
        }
    }
}

fn pole_coeff(z0: Complex64, n: u32, param: &GegenbauerParam) -> Result<Complex64> {
    let u0 = joukowski_u(z0)?;
    let iu = u0.finv();
    if param.is_chebyshev_t_limit() {
        // a_n^C = -2 / (sqrt(z0^2 - 1) u0^n), sqrt branch consistent with u0
        let w = u0 - z0;
        return Ok(-2.0 * iu.powu(n) / w);
    }
    let c = c_norm(n, param, CNormMode::Exact)?;
    let kernel = hyp2f1_kernel_complex(n, param, iu * iu)?;
    Ok(-2.0 * c * iu.powu(n + 1) * kernel)
}

fn algebraic_endpoint_coeff(
    alpha: f64,
    sign: EndpointSign,
    n: u32,
    param: &GegenbauerParam,
) -> Result<Complex64> {
    let nf = n as f64;
    // Gamma(alpha - n + 1) alternates sign and shrinks; signed log-gamma
    // keeps it finite for any n
    let (lg_refl, s_refl) = log_gamma_signed(alpha - nf + 1.0)?;
    let mu = endpoint_sign_factor(sign, n, false);
    if param.is_chebyshev_t_limit() {
        let ln_abs = (alpha + 1.0) * math::ln(2.0) + log_gamma(alpha + 0.5)?
            + log_gamma(alpha + 1.0)?
            - 0.5 * math::ln(PI)
            - lg_refl
            - log_gamma(alpha + nf + 1.0)?;
        return Ok(Complex64::new(mu * s_refl * math::exp(ln_abs), 0.0));
    }
    let lambda = param.lambda();
    if !(lambda + alpha > -0.5) {
        return Err(Error::Domain(format!(
            "algebraic endpoint coefficients require lambda + alpha > -1/2, got {}",
            lambda + alpha
        )));
    }
    let (lg_lam, _) = log_gamma_signed(lambda)?; // squared below, sign drops
    let (lg_2lam, s_2lam) = log_gamma_signed(2.0 * lambda)?;
    let shift = nf + lambda;
    let s_shift = if shift < 0.0 { -1.0 } else { 1.0 };
    let ln_abs = (4.0 * lambda + alpha - 1.0) * math::ln(2.0)
        + 2.0 * lg_lam
        + log_gamma(alpha + lambda + 0.5)?
        + log_gamma(lambda + 0.5)?
        + log_gamma(alpha + 1.0)?
        + math::ln(math::abs(shift))
        - math::ln(PI)
        - lg_2lam
        - lg_refl
        - log_gamma(alpha + 2.0 * lambda + nf + 1.0)?;
    Ok(Complex64::new(
        mu * s_refl * s_2lam * s_shift * math::exp(ln_abs),
        0.0,
    ))
}

fn log_endpoint_coeff(sign: EndpointSign, n: u32, param: &GegenbauerParam) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::Unsupported(
            "log-endpoint coefficients are defined for n >= 1 only".into(),
        ));
    }
    let nf = n as f64;
    let mu = endpoint_sign_factor(sign, n, true);
    if param.is_chebyshev_t_limit() {
        return Ok(Complex64::new(mu * 2.0 / nf, 0.0));
    }
    let lambda = param.lambda();
    let (lg_lam, s_lam) = log_gamma_signed(lambda)?;
    let ln_abs = lambda * math::ln(4.0) + lg_lam + log_gamma(lambda + 0.5)?
        - 0.5 * math::ln(PI)
        + log_gamma(nf + 1.0)?
        + log_gamma(nf + lambda + 1.0)?
        - math::ln(nf)
        - log_gamma(nf + lambda)?
        - log_gamma(nf + 1.0 + 2.0 * lambda)?;
    Ok(Complex64::new(mu * s_lam * math::exp(ln_abs), 0.0))
}

/// Closed-form coefficient `a_n` for the pole and endpoint model functions,
/// in the Gegenbauer family `param` (or first-kind Chebyshev when `param`
/// is the T-limit marker).
pub fn model_coeff(f: &ModelFunction, n: u32, param: &GegenbauerParam) -> Result<Complex64> {
    f.validate()?;
    match f {
        ModelFunction::Pole { z0 } => pole_coeff(*z0, n, param),
        ModelFunction::AlgebraicEndpoint { alpha, sign } => {
            algebraic_endpoint_coeff(*alpha, *sign, n, param)
        }
        ModelFunction::LogEndpoint { sign } => log_endpoint_coeff(*sign, n, param),
        _ => Err(Error::Unsupported(
            "closed-form coefficients exist for pole and endpoint models only".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(lambda: f64) -> GegenbauerParam {
        GegenbauerParam::new(lambda).unwrap()
    }

    fn tl() -> GegenbauerParam {
        GegenbauerParam::chebyshev_t_limit()
    }

    #[test]
    fn pole_legendre_log_value() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let v = model_coeff(&f, 0, &p(0.5)).unwrap();
        assert_relative_eq!(v.re, -0.5 * 3f64.ln(), max_relative = 1e-13);
    }

    #[test]
    fn pole_chebyshev_u_values() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let u0 = 2.0 + 3f64.sqrt();
        let v = model_coeff(&f, 3, &p(1.0)).unwrap();
        assert_relative_eq!(v.re, -2.0 / math::powi(u0, 4), max_relative = 1e-13);
    }

    #[test]
    fn pole_chebyshev_t_values() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let u0 = 2.0 + 3f64.sqrt();
        let v0 = model_coeff(&f, 0, &tl()).unwrap();
        assert_relative_eq!(v0.re, -2.0 / 3f64.sqrt(), max_relative = 1e-13);
        let v1 = model_coeff(&f, 1, &tl()).unwrap();
        assert_relative_eq!(v1.re, -2.0 / (3f64.sqrt() * u0), max_relative = 1e-13);
    }

    #[test]
    fn algebraic_endpoint_values() {
        // (1-x)^{1/2}, lambda = 1/2, n = 0: 2 sqrt(2)/3
        let f = ModelFunction::AlgebraicEndpoint {
            alpha: 0.5,
            sign: EndpointSign::Minus,
        };
        let v = model_coeff(&f, 0, &p(0.5)).unwrap();
        assert_relative_eq!(v.re, 2.0 * 2f64.sqrt() / 3.0, max_relative = 1e-13);
        // direct projection oracle for n = 1:
        // a_1 = (3/2) int (1-x)^{1/2} x dx = -2 sqrt(2)/5
        let v1 = model_coeff(&f, 1, &p(0.5)).unwrap();
        assert_relative_eq!(v1.re, -2.0 * 2f64.sqrt() / 5.0, max_relative = 1e-13);
        assert!(model_coeff(&f, 5, &p(0.5)).unwrap().re.is_finite());
    }

    #[test]
    fn log_endpoint_values() {
        // log(1-x): a_n^L = -(2n+1)/(n(n+1)), a_n^C = -2/n
        let f = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        assert_relative_eq!(
            model_coeff(&f, 1, &p(0.5)).unwrap().re,
            -1.5,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            model_coeff(&f, 2, &p(0.5)).unwrap().re,
            -5.0 / 6.0,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            model_coeff(&f, 2, &tl()).unwrap().re,
            -1.0,
            max_relative = 1e-14
        );
        assert!(model_coeff(&f, 0, &p(0.5)).is_err());
    }

    #[test]
    fn log_endpoint_plus_sign_pattern() {
        // log(1+x) = parity image of log(1-x): a_n flips by (-1)^{n+1}
        let fp = ModelFunction::LogEndpoint {
            sign: EndpointSign::Plus,
        };
        let fm = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        for n in 1..=6u32 {
            let vp = model_coeff(&fp, n, &p(0.5)).unwrap().re;
            let vm = model_coeff(&fm, n, &p(0.5)).unwrap().re;
            let flip = if n % 2 == 1 { -1.0 } else { 1.0 };
            assert_relative_eq!(vp, flip * vm, max_relative = 1e-13);
        }
    }

    #[test]
    fn integer_alpha_rejected() {
        let f = ModelFunction::AlgebraicEndpoint {
            alpha: 2.0,
            sign: EndpointSign::Minus,
        };
        assert!(model_coeff(&f, 1, &p(0.5)).is_err());
    }

    #[test]
    fn unsupported_kinds_rejected() {
        let f = ModelFunction::LogOutside { b: 2.0 };
        assert!(matches!(
            model_coeff(&f, 1, &p(0.5)),
            Err(Error::Unsupported(_))
        ));
    }
}
