//! The connection-formula coefficient engine: Gegenbauer coefficients
//! assembled from second-kind Chebyshev coefficients through
//! `a_n = sum_m b_{n+2m} sigma_{n+2m,n}`.

use super::{cheb_t_coeffs, cheb_t_coeffs_contour, cheb_u_coeffs, cheb_u_coeffs_contour};
use super::{CoefficientTable, ModelFunction, Provenance};
use crate::error::{Error, Result};
use crate::math;
use crate::polyval::PolynomialFamily;
use crate::specfun::{c_norm_log, pochhammer_log, CNormMode, GegenbauerParam};
use alloc::vec::Vec;
use num_complex::Complex64;

/// The connection coefficient `sigma_{n+2m, n}` expressing `U_{n+2m}` in the
/// Gegenbauer basis:
/// `sigma = c_{n,lambda} (n+1)_m (1-lambda)_m / ((n+lambda+1)_m m!)`.
///
/// Evaluated through log-space products with separate sign tracking, since
/// `(1-lambda)_m` alternates for `lambda > 1`.
pub fn connection_sigma(n: u32, m: u32, param: &GegenbauerParam) -> Result<f64> {
    let lambda = param.require_proper("connection_sigma")?;
    let (ln_c, sign_c) = c_norm_log(n, param, CNormMode::Exact)?;
    let nf = n as f64;
    let (p1, s1) = pochhammer_log(nf + 1.0, m);
    let (p2, s2) = pochhammer_log(1.0 - lambda, m);
    if s2 == 0.0 {
        return Ok(0.0);
    }
    let (p3, s3) = pochhammer_log(nf + lambda + 1.0, m);
    let (pm, _) = pochhammer_log(1.0, m); // ln m!
    Ok(sign_c * s1 * s2 * s3 * math::exp(ln_c + p1 + p2 - p3 - pm))
}

/// Contour radius for the b_j table of an exterior-analytic model: close
/// enough to `rho_max` that the trapezoid sum cancels at most ~4 decimal
/// digits at the highest degree, but never below `sqrt(rho_max)`.
pub(crate) fn engine_contour_rho(rho_max: f64, degree_max: usize) -> f64 {
    let kappa = f64::min(
        4.0 * core::f64::consts::LN_10 / (degree_max as f64 + 1.0),
        0.5 * math::ln(rho_max),
    );
    rho_max * math::exp(-kappa)
}

/// Contour node count that keeps trapezoid aliasing negligible for the
/// chosen radius.
pub(crate) fn engine_contour_nodes(rho_max: f64, rho: f64, floor: usize) -> usize {
    let margin = math::ln(rho_max / rho);
    let needed = (45.0 / margin) as usize + 1;
    floor.max(needed).max(256).next_power_of_two()
}

/// Gegenbauer coefficients `a_0 .. a_{count-1}` by the numerical engine.
///
/// For a proper Gegenbauer index the engine assembles
/// `a_n = sum_{m=0}^{tail} b_{n+2m} sigma_{n+2m,n}` from second-kind
/// Chebyshev coefficients. For the Chebyshev-T limit marker it computes
/// `a_n^C` by the cosine rule directly.
///
/// The b_j table comes from the real-axis trapezoidal rule when the model
/// has no analyticity ellipse, and from the contour representation when it
/// does: real-axis quadrature carries an absolute round-off floor near
/// 1e-16, which destroys all relative accuracy once the coefficients decay
/// geometrically below it, while contour samples scale with the result.
/// `nodes` is a floor; the contour path may raise it to meet its aliasing
/// target.
pub fn gegen_coeffs_numeric(
    f: &ModelFunction,
    count: usize,
    param: &GegenbauerParam,
    nodes: usize,
    tail: usize,
) -> Result<CoefficientTable> {
    f.validate()?;
    if count == 0 {
        return Err(Error::Domain("coefficient count must be positive".into()));
    }
    if tail == 0 {
        return Err(Error::Domain("tail must be at least 1".into()));
    }

    if param.is_chebyshev_t_limit() {
        return if f.has_analytic_continuation() {
            let rho = engine_contour_rho(f.rho_max(), count - 1);
            let k = engine_contour_nodes(f.rho_max(), rho, nodes);
            cheb_t_coeffs_contour(f, count, rho, k)
        } else {
            cheb_t_coeffs(f, count, nodes)
        };
    }

    let lambda = param.lambda();
    let degree_max = count - 1 + 2 * tail;
    let b = if f.has_analytic_continuation() {
        let rho = engine_contour_rho(f.rho_max(), degree_max);
        let k = engine_contour_nodes(f.rho_max(), rho, nodes);
        cheb_u_coeffs_contour(f, degree_max + 1, rho, k)?
    } else {
        let min_nodes = 4 * (degree_max + 1);
        cheb_u_coeffs(f, degree_max + 1, nodes.max(min_nodes))?
    };

    let mut values = Vec::with_capacity(count);
    let mut residual = 0.0f64;
    for n in 0..count {
        let nf = n as f64;
        let (ln_c, sign_c) = c_norm_log(n as u32, param, CNormMode::Exact)?;
        let c = sign_c * math::exp(ln_c);
        // sigma ratio recurrence; consecutive terms summed in pairs, since
        // (1-lambda)_m alternates for lambda > 1
        let mut ratio = 1.0f64;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut last = Complex64::new(0.0, 0.0);
        let mut pair = Complex64::new(0.0, 0.0);
        for m in 0..=tail {
            let term = b.values[n + 2 * m] * ratio;
            pair += term;
            if m % 2 == 1 || m == tail {
                sum += pair;
                pair = Complex64::new(0.0, 0.0);
            }
            last = term;
            let mf = m as f64;
            ratio *= (nf + 1.0 + mf) * (1.0 - lambda + mf)
                / ((nf + lambda + 1.0 + mf) * (mf + 1.0));
        }
        residual = residual.max((last * c).norm());
        values.push(sum * c);
    }

    Ok(CoefficientTable {
        family: PolynomialFamily::Gegenbauer(*param),
        values,
        provenance: b.provenance,
        tail_residual: Some(residual),
    })
}

/// Default tail length for the engine: `max(20, count)`.
pub fn default_tail(count: usize) -> usize {
    count.max(20)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::EndpointSign;
    use approx::assert_relative_eq;

    fn p(lambda: f64) -> GegenbauerParam {
        GegenbauerParam::new(lambda).unwrap()
    }

    #[test]
    fn sigma_collapses_at_m_zero() {
        for &lambda in &[0.25, 0.5, 1.0, 3.5] {
            for n in [0u32, 3, 10] {
                let s = connection_sigma(n, 0, &p(lambda)).unwrap();
                let c = crate::specfun::c_norm(n, &p(lambda), CNormMode::Exact).unwrap();
                assert_relative_eq!(s, c, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn sigma_vanishes_for_integer_lambda() {
        // (1-lambda)_m = (0)_2 = 0
        assert_eq!(connection_sigma(3, 2, &p(1.0)).unwrap(), 0.0);
        assert_eq!(connection_sigma(5, 4, &p(3.0)).unwrap(), 0.0);
        assert!(connection_sigma(5, 2, &p(3.0)).unwrap() != 0.0);
    }

    #[test]
    fn sigma_reference_value() {
        // n=0, m=1, lambda=1/2: 1 * (1/2) / (3/2) * c_norm(0) = 1/3
        let s = connection_sigma(0, 1, &p(0.5)).unwrap();
        assert_relative_eq!(s, 1.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn engine_pole_legendre_value() {
        // a_0^L for 1/(x-2) is -(1/2) ln 3
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let table = gegen_coeffs_numeric(&f, 3, &p(0.5), 512, 40).unwrap();
        assert_relative_eq!(
            table.values[0].re,
            -0.549_306_144_334_054_8,
            max_relative = 1e-11
        );
    }

    #[test]
    fn engine_log_endpoint_legendre() {
        // a_n^L = -(2n+1)/(n(n+1)) for log(1-x): a_1 = -3/2
        let f = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        let table = gegen_coeffs_numeric(&f, 2, &p(0.5), 0, 1000).unwrap();
        assert!((table.values[1].re - (-1.5)).abs() < 5e-6);
        assert!(table.tail_residual.unwrap() > 0.0);
    }

    #[test]
    fn engine_chebyshev_t_path() {
        // a_2^C = -1 for log(1-x)
        let f = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        let t = GegenbauerParam::chebyshev_t_limit();
        let table = gegen_coeffs_numeric(&f, 3, &t, 100_000, 1).unwrap();
        assert!((table.values[2].re - (-1.0)).abs() < 1e-7);
    }

    #[test]
    fn tail_residual_reported_not_an_error() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let table = gegen_coeffs_numeric(&f, 2, &p(0.5), 256, 1).unwrap();
        assert!(table.tail_residual.unwrap() > 1e-6);
    }
}
