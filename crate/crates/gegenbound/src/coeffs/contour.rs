//! Contour-integral engines on the Bernstein ellipse, by the trapezoidal
//! rule on the parametrization `z(t) = (rho e^{it} + rho^{-1} e^{-it})/2`.
//! The Joukowski root `u = z + sqrt(z^2-1)` with `|u| > 1` satisfies
//! `u(t) = rho e^{it}` exactly on the contour, and the trapezoidal rule
//! converges geometrically in the node count for periodic analytic
//! integrands.
//!
//! Unlike real-axis quadrature, the contour samples carry the factor
//! `rho^{-(n+1)}`, so exponentially small coefficients retain full relative
//! accuracy provided `rho` is not far below the analyticity radius.

use super::{CoefficientTable, ModelFunction, Provenance};
use crate::error::{Error, Result};
use crate::polyval::PolynomialFamily;
use crate::specfun::{c_norm, hyp2f1_kernel_complex, CNormMode, GegenbauerParam};
use alloc::format;
use alloc::vec::Vec;
use num_complex::Complex64;

/// The root `u = z +- sqrt(z^2 - 1)` of `u^2 - 2zu + 1 = 0` with `|u| > 1`,
/// branch cut on `[-1, 1]`.
pub(crate) fn joukowski_u(z: Complex64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    // sqrt(z-1) sqrt(z+1) is the branch of sqrt(z^2-1) that behaves like z
    // at infinity and is cut exactly on [-1, 1]
    let w = (z - one).sqrt() * (z + one).sqrt();
    let u = z + w;
    if u.norm() <= 1.0 + 1e-14 {
        return Err(Error::Domain(format!(
            "|u| = 1: z = {z} lies on (or numerically on) the cut [-1, 1]"
        )));
    }
    Ok(u)
}

fn contour_samples(
    f: &ModelFunction,
    rho: f64,
    nodes: usize,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    f.validate()?;
    if !(rho > 1.0) {
        return Err(Error::Domain(format!("contour requires rho > 1, got {rho}")));
    }
    if rho >= f.rho_max() {
        return Err(Error::Precondition(format!(
            "analyticity violation: rho = {rho} >= rho_max = {}",
            f.rho_max()
        )));
    }
    if nodes < 16 {
        return Err(Error::Precondition("need at least 16 contour nodes".into()));
    }
    let mut us = Vec::with_capacity(nodes);
    let mut fs = Vec::with_capacity(nodes);
    for k in 0..nodes {
        let t = 2.0 * core::f64::consts::PI * k as f64 / nodes as f64;
        let u = Complex64::from_polar(rho, t);
        let z = 0.5 * (u + u.finv());
        us.push(u);
        fs.push(f.eval_complex(z)?);
    }
    Ok((us, fs))
}

/// Second-kind Chebyshev coefficients by their contour representation
/// `b_j = (1/(pi i)) oint f(z) u^{-(j+1)} dz`.
pub fn cheb_u_coeffs_contour(
    f: &ModelFunction,
    count: usize,
    rho: f64,
    nodes: usize,
) -> Result<CoefficientTable> {
    if count == 0 {
        return Err(Error::Domain("coefficient count must be positive".into()));
    }
    let (us, fs) = contour_samples(f, rho, nodes)?;
    // dz = i (u - 1/u)/2 dt, so the trapezoid sum is
    // b_j = (1/nodes) sum_k f_k u_k^{-(j+1)} (u_k - 1/u_k)
    let base: Vec<Complex64> = us
        .iter()
        .zip(&fs)
        .map(|(u, fv)| fv * (u - u.finv()))
        .collect();
    let inv_u: Vec<Complex64> = us.iter().map(|u| u.finv()).collect();
    let mut pw: Vec<Complex64> = inv_u.clone();
    let mut values = Vec::with_capacity(count);
    for _ in 0..count {
        let mut acc = Complex64::new(0.0, 0.0);
        for (b, p) in base.iter().zip(&pw) {
            acc += b * p;
        }
        values.push(acc / nodes as f64);
        for (p, iu) in pw.iter_mut().zip(&inv_u) {
            *p *= iu;
        }
    }
    Ok(CoefficientTable {
        family: PolynomialFamily::ChebyshevU,
        values,
        provenance: Provenance::Contour { rho, nodes },
        tail_residual: None,
    })
}

/// First-kind Chebyshev coefficients by their contour representation
/// `a_n^C = (1/(pi i)) oint f(z) u^{-n} / sqrt(z^2-1) dz`, which reduces to
/// `(2/nodes) sum_k f_k u_k^{-n}` on the parametrized contour.
pub fn cheb_t_coeffs_contour(
    f: &ModelFunction,
    count: usize,
    rho: f64,
    nodes: usize,
) -> Result<CoefficientTable> {
    if count == 0 {
        return Err(Error::Domain("coefficient count must be positive".into()));
    }
    let (us, fs) = contour_samples(f, rho, nodes)?;
    let inv_u: Vec<Complex64> = us.iter().map(|u| u.finv()).collect();
    let mut pw: Vec<Complex64> = (0..nodes).map(|_| Complex64::new(1.0, 0.0)).collect();
    let mut values = Vec::with_capacity(count);
    for _ in 0..count {
        let mut acc = Complex64::new(0.0, 0.0);
        for (fv, p) in fs.iter().zip(&pw) {
            acc += fv * p;
        }
        values.push(acc * (2.0 / nodes as f64));
        for (p, iu) in pw.iter_mut().zip(&inv_u) {
            *p *= iu;
        }
    }
    Ok(CoefficientTable {
        family: PolynomialFamily::ChebyshevT,
        values,
        provenance: Provenance::Contour { rho, nodes },
        tail_residual: None,
    })
}

/// One Gegenbauer coefficient by the contour representation
/// `a_n = (c_{n,lambda}/(i pi)) oint f(z) u^{-(n+1)} 2F1(n+1, 1-lambda;
/// n+lambda+1; u^{-2}) dz`.
pub fn coeff_contour_oracle(
    f: &ModelFunction,
    n: u32,
    param: &GegenbauerParam,
    rho: f64,
    nodes: usize,
) -> Result<Complex64> {
    param.require_proper("coeff_contour_oracle")?;
    let (us, fs) = contour_samples(f, rho, nodes)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for (u, fv) in us.iter().zip(&fs) {
        let iu = u.finv();
        let kernel = hyp2f1_kernel_complex(n, param, iu * iu)?;
        acc += fv * iu.powu(n + 1) * kernel * (u - iu);
    }
    let c = c_norm(n, param, CNormMode::Exact)?;
    Ok(acc * (c / nodes as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;
    use approx::assert_relative_eq;

    #[test]
    fn joukowski_branch_selection() {
        let u = joukowski_u(Complex64::new(2.0, 0.0)).unwrap();
        assert_relative_eq!(u.re, 2.0 + 3f64.sqrt(), max_relative = 1e-14);
        let u = joukowski_u(Complex64::new(-2.0, 0.0)).unwrap();
        assert_relative_eq!(u.re, -(2.0 + 3f64.sqrt()), max_relative = 1e-14);
        let u = joukowski_u(Complex64::new(0.0, 1.5)).unwrap();
        assert_relative_eq!(u.im, 1.5 + 3.25f64.sqrt(), max_relative = 1e-14);
        assert!(u.norm() > 1.0);
        assert!(joukowski_u(Complex64::new(0.5, 0.0)).is_err());
        assert!(joukowski_u(Complex64::new(-1.0, 0.0)).is_err());
    }

    #[test]
    fn contour_u_matches_pole_closed_form() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let u0 = 2.0 + 3f64.sqrt();
        let table = cheb_u_coeffs_contour(&f, 30, 3.0, 512).unwrap();
        for (j, v) in table.values.iter().enumerate() {
            let expect = -2.0 / math::powi(u0, j as i32 + 1);
            assert_relative_eq!(v.re, expect, max_relative = 1e-11);
            assert!(v.im.abs() < 1e-16 * expect.abs().max(1e-300) + 1e-30);
        }
    }

    #[test]
    fn contour_t_matches_pole_closed_form() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let u0 = 2.0 + 3f64.sqrt();
        let table = cheb_t_coeffs_contour(&f, 30, 3.0, 512).unwrap();
        for (n, v) in table.values.iter().enumerate() {
            let expect = -2.0 / (3f64.sqrt() * math::powi(u0, n as i32));
            assert_relative_eq!(v.re, expect, max_relative = 1e-11);
        }
    }

    #[test]
    fn oracle_radius_invariance() {
        // Cauchy's theorem: result independent of rho across admissible radii
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let param = GegenbauerParam::new(0.5).unwrap();
        let reference = coeff_contour_oracle(&f, 7, &param, 2.0, 1024).unwrap();
        for &rho in &[2.5, 3.0] {
            let v = coeff_contour_oracle(&f, 7, &param, rho, 1024).unwrap();
            assert!(
                (v - reference).norm() <= 1e-10 * reference.norm().max(1.0),
                "rho={rho}: {v} vs {reference}"
            );
        }
    }

    #[test]
    fn oracle_rejects_analyticity_violation() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let param = GegenbauerParam::new(0.5).unwrap();
        assert!(matches!(
            coeff_contour_oracle(&f, 3, &param, 3.8, 256),
            Err(Error::Precondition(_))
        ));
        assert!(coeff_contour_oracle(&f, 3, &param, 0.9, 256).is_err());
    }

    #[test]
    fn oracle_log_integral_value() {
        // a_0 at lambda = 1/2 for the pole at 2 is -(1/2) ln 3
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let param = GegenbauerParam::new(0.5).unwrap();
        let v = coeff_contour_oracle(&f, 0, &param, 3.0, 512).unwrap();
        assert_relative_eq!(v.re, -0.5 * 3f64.ln(), max_relative = 1e-10);
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn oracle_integer_lambda_closed_form() {
        // lambda = 1 makes the kernel 1: a_3 = -2/u0^4
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let param = GegenbauerParam::new(1.0).unwrap();
        let v = coeff_contour_oracle(&f, 3, &param, 3.0, 512).unwrap();
        let u0 = 2.0 + 3f64.sqrt();
        assert_relative_eq!(v.re, -2.0 / math::powi(u0, 4), max_relative = 1e-11);
        // frozen value: -1.0309552285743125e-2
        assert_relative_eq!(v.re, -1.030_955_228_574_312_5e-2, max_relative = 1e-10);
    }
}
