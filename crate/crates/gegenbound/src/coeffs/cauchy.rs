//! The Cauchy transform `Q_n^{(lambda)}(z)` of the weighted Gegenbauer
//! polynomial, in closed form and by quadrature.

use super::{gauss_legendre, joukowski_u};
use crate::error::{Error, Result};
use crate::math;
use crate::polyval::gegenbauer_eval;
use crate::specfun::{c_norm, h_norm, hyp2f1_kernel_complex, CNormMode, GegenbauerParam};
use alloc::format;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Evaluation route for [`cauchy_q`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CauchyMethod {
    /// `c_{n,lambda} h_n^{(lambda)} u^{-(n+1)} 2F1(n+1, 1-lambda; n+lambda+1; u^{-2})`.
    Closed,
    /// Gauss-Legendre quadrature of the defining integral after `x = cos t`.
    Oracle { nodes: usize },
}

/// `Q_n^{(lambda)}(z) = (1/2) int_{-1}^{1} (1-x^2)^{lambda-1/2}
/// C_n^{(lambda)}(x) / (z - x) dx` for `z` off `[-1, 1]`.
pub fn cauchy_q(
    n: u32,
    param: &GegenbauerParam,
    z: Complex64,
    method: CauchyMethod,
) -> Result<Complex64> {
    param.require_proper("cauchy_q")?;
    match method {
        CauchyMethod::Closed => {
            let u = joukowski_u(z)?;
            let iu = u.finv();
            let c = c_norm(n, param, CNormMode::Exact)?;
            let h = h_norm(n, param)?;
            let kernel = hyp2f1_kernel_complex(n, param, iu * iu)?;
            Ok(c * h * iu.powu(n + 1) * kernel)
        }
        CauchyMethod::Oracle { nodes } => {
            if z.im == 0.0 && z.re.abs() <= 1.0 {
                return Err(Error::Domain(format!(
                    "Cauchy transform requires z off [-1, 1], got {z}"
                )));
            }
            if nodes < 8 {
                return Err(Error::Precondition("need at least 8 quadrature nodes".into()));
            }
            let lambda = param.lambda();
            // x = cos t turns the weight into sin(t)^{2 lambda}
            let (xs, ws) = gauss_legendre(nodes);
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, w) in xs.iter().zip(&ws) {
                let t = 0.5 * PI * (x + 1.0);
                let s = math::sin(t);
                let val = math::powf(s, 2.0 * lambda) * gegenbauer_eval(n, param, math::cos(t));
                acc += (z - math::cos(t)).finv() * (w * val);
            }
            Ok(acc * (0.25 * PI))
        }
    }
}
