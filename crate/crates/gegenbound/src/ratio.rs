//! The Legendre-to-Chebyshev coefficient ratio `gamma_n = a_n^L / a_n^C`,
//! the singularity-location factor `g(z)`, and the asymptotic predictions
//! for exterior and endpoint singularities (interior singularities are
//! explored numerically; no prediction is attached).

use crate::coeffs::{
    cheb_t_coeffs, cheb_t_coeffs_contour, coeff_contour_oracle, gegen_coeffs_numeric, joukowski_u,
    model_coeff, ModelFunction,
};
use crate::error::{Error, Result};
use crate::math;
use crate::specfun::{log_gamma, GegenbauerParam};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Which asymptotic prediction a [`RatioReport`] carries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PredictionKind {
    /// Exterior singularity at `z0`: `gamma_n ~ g(z0) sqrt(n pi)`.
    PoleG,
    /// `gamma_n -> sqrt(pi) Gamma(alpha+1)/Gamma(alpha+1/2)`.
    EndpointAlgebraic { alpha: f64 },
    /// `gamma_n -> 1`.
    EndpointLog,
    /// Interior singularity: the limit behaviour is an open problem,
    /// so no prediction is attached.
    NoneInterior,
}

/// Result of [`ratio_prediction`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatioPrediction {
    Value(f64),
    NoneInterior,
}

/// The measured ratio sequence with its prediction and residuals.
///
/// `gamma_values[i]` corresponds to degree `n = n_start + i` and is `None`
/// where `a_n^C` vanishes to the masking threshold (1e-13 relative to the
/// neighbouring coefficient scale, so parity zeros are masked without
/// destroying geometrically decaying tails).
#[derive(Debug, Clone)]
pub struct RatioReport {
    pub n_start: u32,
    pub legendre: Vec<Complex64>,
    pub chebyshev: Vec<Complex64>,
    pub gamma_values: Vec<Option<Complex64>>,
    pub predictions: Vec<Option<f64>>,
    pub residuals: Vec<Option<f64>>,
    pub prediction_kind: PredictionKind,
}

/// The factor `g(z) = sqrt((z^2-1)/(u^2-1))` with `u` the larger-modulus
/// Joukowski root; the branch is fixed by continuity from the positive real
/// axis, where `g(z) > 0` for `z > 1`.
pub fn g_factor(z: Complex64) -> Result<Complex64> {
    let u = joukowski_u(z)?;
    // (z^2-1)/(u^2-1) = (1 - u^{-2})/4, and 1 - u^{-2} stays in the right
    // half-plane for |u| > 1, so the principal square root is the
    // continuous branch
    let iu2 = u.finv() * u.finv();
    Ok((Complex64::new(1.0, 0.0) - iu2).sqrt() * 0.5)
}

/// The asymptotic prediction for `gamma_n` under the model `f`.
///
/// Exterior types give `g(z0) sqrt(n pi)` (for a complex pole the modulus
/// `|g(z0)| sqrt(n pi)` is returned); endpoint types give their constants;
/// interior types return the [`RatioPrediction::NoneInterior`] marker.
pub fn ratio_prediction(f: &ModelFunction, n: u32) -> Result<RatioPrediction> {
    f.validate()?;
    let nf = n as f64;
    match f {
        ModelFunction::Pole { z0 } => Ok(RatioPrediction::Value(
            g_factor(*z0)?.norm() * math::sqrt(nf * PI),
        )),
        ModelFunction::AlgebraicOutside { b, .. } | ModelFunction::LogOutside { b } => {
            let g = g_factor(Complex64::new(*b, 0.0))?.re;
            Ok(RatioPrediction::Value(g * math::sqrt(nf * PI)))
        }
        ModelFunction::AlgebraicEndpoint { alpha, .. } => Ok(RatioPrediction::Value(
            math::sqrt(PI) * math::exp(log_gamma(alpha + 1.0)? - log_gamma(alpha + 0.5)?),
        )),
        ModelFunction::LogEndpoint { .. } => Ok(RatioPrediction::Value(1.0)),
        ModelFunction::InteriorAlgebraic { .. } | ModelFunction::InteriorLog { .. } => {
            Ok(RatioPrediction::NoneInterior)
        }
        ModelFunction::Custom { .. } => Err(Error::Unsupported(
            "no ratio prediction for custom model functions".into(),
        )),
    }
}

/// Leading-order first-kind Chebyshev coefficient of `(b-x)^alpha`:
/// `a_n^C ~ xi(alpha,b) / (sqrt(b^2-1) (b+sqrt(b^2-1))^n)` with
/// `xi = -2 sin(alpha pi) (b^2-1)^{(alpha+1)/2} Gamma(alpha+1)/(pi n^{alpha+1})`.
pub fn cheb_t_asymptotic_algebraic(n: u32, alpha: f64, b: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("asymptotic form requires n >= 1".into()));
    }
    if !(b > 1.0) {
        return Err(Error::Domain(alloc::format!("requires b > 1, got {b}")));
    }
    if alpha >= 0.0 && alpha == math::floor(alpha) {
        return Err(Error::Domain(alloc::format!(
            "alpha must not be a nonnegative integer (sin(alpha pi) vanishes), got {alpha}"
        )));
    }
    let nf = n as f64;
    let b2m1 = b * b - 1.0;
    let u = b + math::sqrt(b2m1);
    let xi = -2.0 * crate::specfun::sin_pi(alpha) * math::powf(b2m1, 0.5 * (alpha + 1.0))
        * math::exp(log_gamma(alpha + 1.0)?)
        / (PI * math::powf(nf, alpha + 1.0));
    Ok(xi / math::sqrt(b2m1) * math::exp(-nf * math::ln(u)))
}

fn mask_threshold(cheb: &[Complex64], i: usize) -> f64 {
    // local scale: the largest |a^C| among the immediate neighbours, so
    // parity zeros are masked while decaying tails survive
    let lo = i.saturating_sub(2);
    let hi = (i + 2).min(cheb.len() - 1);
    let mut scale = 0.0f64;
    for v in &cheb[lo..=hi] {
        scale = scale.max(v.norm());
    }
    1e-13 * scale
}

/// Interior-engine knobs: split-quadrature nodes and connection tail chosen
/// for the exploratory tolerance of the interior study.
const INTERIOR_NODES: usize = 8192;
const INTERIOR_TAIL: usize = 800;

/// Compute `gamma_n = a_n^L / a_n^C` for `n` up to `n_max`, with the
/// prediction matching the model kind.
///
/// Coefficient routes: closed forms where the model admits them (pole and
/// endpoint singularities); contour integration at `lambda = 1/2` and for
/// the first-kind coefficients when the model is analytic on some ellipse
/// (real-axis quadrature loses all relative accuracy once geometrically
/// small coefficients fall under its absolute round-off floor); split-rule
/// quadrature for interior singularities.
pub fn gamma_series(f: &ModelFunction, n_max: u32) -> Result<RatioReport> {
    f.validate()?;
    if n_max < 1 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let legendre_param = GegenbauerParam::legendre();
    let t_param = GegenbauerParam::chebyshev_t_limit();
    let n_start: u32 = match f {
        // the closed log-endpoint formulas start at n = 1
        ModelFunction::LogEndpoint { .. } => 1,
        _ => 0,
    };
    let count = (n_max + 1 - n_start) as usize;

    let (legendre, chebyshev): (Vec<Complex64>, Vec<Complex64>) = match f {
        ModelFunction::Pole { .. }
        | ModelFunction::AlgebraicEndpoint { .. }
        | ModelFunction::LogEndpoint { .. } => {
            let l = (n_start..=n_max)
                .map(|n| model_coeff(f, n, &legendre_param))
                .collect::<Result<_>>()?;
            let c = (n_start..=n_max)
                .map(|n| model_coeff(f, n, &t_param))
                .collect::<Result<_>>()?;
            (l, c)
        }
        ModelFunction::AlgebraicOutside { .. }
        | ModelFunction::LogOutside { .. }
        | ModelFunction::Custom {
            eval_complex: Some(_),
            ..
        } => {
            // contour measurements, radius tuned to the degree range
            let rho = crate::coeffs::engine_contour_rho(f.rho_max(), n_max as usize);
            let nodes = crate::coeffs::engine_contour_nodes(f.rho_max(), rho, 1024);
            let l = (n_start..=n_max)
                .map(|n| coeff_contour_oracle(f, n, &legendre_param, rho, nodes))
                .collect::<Result<_>>()?;
            let c = cheb_t_coeffs_contour(f, (n_max + 1) as usize, rho, nodes)?;
            (l, c.values[n_start as usize..].to_vec())
        }
        _ => {
            // interior (and custom real-only) models: split-rule quadrature
            let l = gegen_coeffs_numeric(f, count, &legendre_param, INTERIOR_NODES, INTERIOR_TAIL)?;
            let c = cheb_t_coeffs(f, count, INTERIOR_NODES)?;
            (l.values, c.values)
        }
    };

    let prediction_kind = match f {
        ModelFunction::Pole { .. }
        | ModelFunction::AlgebraicOutside { .. }
        | ModelFunction::LogOutside { .. } => PredictionKind::PoleG,
        ModelFunction::AlgebraicEndpoint { alpha, .. } => {
            PredictionKind::EndpointAlgebraic { alpha: *alpha }
        }
        ModelFunction::LogEndpoint { .. } => PredictionKind::EndpointLog,
        _ => PredictionKind::NoneInterior,
    };

    let mut gamma_values = Vec::with_capacity(count);
    let mut predictions = Vec::with_capacity(count);
    let mut residuals = Vec::with_capacity(count);
    for i in 0..count {
        let n = n_start + i as u32;
        let masked = chebyshev[i].norm() <= mask_threshold(&chebyshev, i);
        let gamma = if masked {
            None
        } else {
            Some(legendre[i] / chebyshev[i])
        };
        let pred = match prediction_kind {
            PredictionKind::NoneInterior => None,
            _ => match ratio_prediction(f, n)? {
                RatioPrediction::Value(v) => Some(v),
                RatioPrediction::NoneInterior => None,
            },
        };
        let residual = match (gamma, pred) {
            (Some(g), Some(p)) => Some((g - p).norm()),
            _ => None,
        };
        gamma_values.push(gamma);
        predictions.push(pred);
        residuals.push(residual);
    }

    Ok(RatioReport {
        n_start,
        legendre,
        chebyshev,
        gamma_values,
        predictions,
        residuals,
        prediction_kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::EndpointSign;
    use approx::assert_relative_eq;

    #[test]
    fn g_factor_reference_values() {
        // g(2) = sqrt(3/((2+sqrt3)^2 - 1)), 40-digit reference
        let g = g_factor(Complex64::new(2.0, 0.0)).unwrap();
        assert_relative_eq!(g.re, 0.481_716_522_001_142_6, max_relative = 1e-13);
        assert!(g.im.abs() < 1e-16);
        // far-field limit 1/2
        let g = g_factor(Complex64::new(1e6, 0.0)).unwrap();
        assert!((g.re - 0.5).abs() < 1e-6);
        // maximum 1/sqrt(2) approached at the origin along the imaginary axis
        let g = g_factor(Complex64::new(0.0, 1e-6)).unwrap();
        assert!((g.norm() - core::f64::consts::FRAC_1_SQRT_2).abs() < 1e-5);
        assert!(g_factor(Complex64::new(0.2, 0.0)).is_err());
    }

    #[test]
    fn g_factor_monotonicity() {
        // increasing on (1, inf), decreasing on (-inf, -1) along the real
        // axis; decreasing in b for z = ib, b > 0
        let mut prev = 0.0;
        for i in 0..60 {
            let z = 1.0 + 0.02 * (1.2f64).powi(i);
            let g = g_factor(Complex64::new(z, 0.0)).unwrap().re;
            assert!(g > prev, "z={z}");
            prev = g;
        }
        let mut prev = 1.0;
        for i in 0..60 {
            let z = -(1.0 + 0.02 * (1.2f64).powi(i));
            let g = g_factor(Complex64::new(z, 0.0)).unwrap().re;
            assert!(g < prev, "z={z}");
            prev = g;
        }
        let mut prev = f64::INFINITY;
        for i in 0..60 {
            let b = 0.01 * (1.2f64).powi(i);
            let g = g_factor(Complex64::new(0.0, b)).unwrap().norm();
            assert!(g < prev, "b={b}");
            prev = g;
        }
    }

    #[test]
    fn prediction_values() {
        // log_outside(2) at n = 100: g(2) sqrt(100 pi)
        let f = ModelFunction::LogOutside { b: 2.0 };
        match ratio_prediction(&f, 100).unwrap() {
            RatioPrediction::Value(v) => {
                assert_relative_eq!(v, 8.538_203_044_657_369, max_relative = 1e-12)
            }
            _ => panic!(),
        }
        // log endpoint: always 1
        let f = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        match ratio_prediction(&f, 17).unwrap() {
            RatioPrediction::Value(v) => assert_eq!(v, 1.0),
            _ => panic!(),
        }
        // algebraic endpoint alpha = 1/2: pi/2
        let f = ModelFunction::AlgebraicEndpoint {
            alpha: 0.5,
            sign: EndpointSign::Minus,
        };
        match ratio_prediction(&f, 3).unwrap() {
            RatioPrediction::Value(v) => {
                assert_relative_eq!(v, core::f64::consts::FRAC_PI_2, max_relative = 1e-13)
            }
            _ => panic!(),
        }
        // interior: marker
        let f = ModelFunction::InteriorAlgebraic {
            x0: 0.25,
            alpha: 0.5,
        };
        assert_eq!(
            ratio_prediction(&f, 3).unwrap(),
            RatioPrediction::NoneInterior
        );
    }

    #[test]
    fn log_endpoint_gamma_values() {
        // gamma_n = (2n+1)/(2(n+1)): gamma_2 = 5/6
        let f = ModelFunction::LogEndpoint {
            sign: EndpointSign::Minus,
        };
        let report = gamma_series(&f, 10).unwrap();
        assert_eq!(report.n_start, 1);
        let g2 = report.gamma_values[1].unwrap();
        assert_relative_eq!(g2.re, 5.0 / 6.0, max_relative = 1e-13);
        for (i, g) in report.gamma_values.iter().enumerate() {
            let n = (i + 1) as f64;
            assert_relative_eq!(
                g.unwrap().re,
                (2.0 * n + 1.0) / (2.0 * (n + 1.0)),
                max_relative = 1e-12
            );
            // |gamma_n - 1| <= 1/n
            assert!((g.unwrap().re - 1.0).abs() <= 1.0 / n);
        }
    }

    #[test]
    fn algebraic_endpoint_exact_ratio_identity() {
        // gamma_n = (n+1/2) Gamma(n+alpha+1)/Gamma(n+alpha+2)
        //           * sqrt(pi) Gamma(alpha+1)/Gamma(alpha+1/2)
        for &alpha in &[0.5, 2.0 / 3.0] {
            let f = ModelFunction::AlgebraicEndpoint {
                alpha,
                sign: EndpointSign::Minus,
            };
            let report = gamma_series(&f, 50).unwrap();
            for (i, g) in report.gamma_values.iter().enumerate() {
                let n = i as f64;
                let expect = (n + 0.5) / (n + alpha + 1.0)
                    * math::sqrt(PI)
                    * math::exp(
                        log_gamma(alpha + 1.0).unwrap() - log_gamma(alpha + 0.5).unwrap(),
                    );
                assert_relative_eq!(g.unwrap().re, expect, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn pole_ratio_approaches_g_sqrt_n_pi() {
        let f = ModelFunction::Pole {
            z0: Complex64::new(2.0, 0.0),
        };
        let report = gamma_series(&f, 200).unwrap();
        let g200 = report.gamma_values[200].unwrap().re;
        let pred = report.predictions[200].unwrap();
        assert!((g200 / pred - 1.0).abs() < 2e-3, "{g200} vs {pred}");
    }

    #[test]
    fn parity_masking_keeps_even_function_sane() {
        // f(x) = 1/(x^2 - 4) is even: odd coefficients vanish and must be
        // masked instead of producing 0/0 ratios
        use alloc::sync::Arc;
        let f = ModelFunction::Custom {
            eval_real: Arc::new(|x| 1.0 / (x * x - 4.0)),
            eval_complex: Some(Arc::new(|z: Complex64| (z * z - 4.0).finv())),
            rho_max: 2.0 + 3f64.sqrt(),
        };
        let report = gamma_series(&f, 20).unwrap();
        for (i, g) in report.gamma_values.iter().enumerate() {
            if i % 2 == 1 {
                assert!(g.is_none(), "odd index {i} should be masked");
            } else {
                assert!(g.is_some(), "even index {i} should survive");
            }
        }
    }

    #[test]
    fn cheb_t_asymptotic_sign_and_domain() {
        // alpha = 2/3, b = 2: sin(2 pi/3) > 0, leading minus: negative
        let v = cheb_t_asymptotic_algebraic(10, 2.0 / 3.0, 2.0).unwrap();
        assert!(v < 0.0);
        assert!(cheb_t_asymptotic_algebraic(10, 1.0, 2.0).is_err());
        assert!(cheb_t_asymptotic_algebraic(10, 3.0, 2.0).is_err());
        // negative non-integer alpha admissible
        assert!(cheb_t_asymptotic_algebraic(10, -0.5, 2.0).is_ok());
    }

    #[test]
    fn cheb_t_asymptotic_matches_contour_quadrature() {
        // relative gap O(1/n): within 5% at n = 100
        let alpha = 2.0 / 3.0;
        let b = 2.0;
        let f = ModelFunction::AlgebraicOutside { b, alpha };
        let rho = crate::coeffs::engine_contour_rho(f.rho_max(), 100);
        let nodes = crate::coeffs::engine_contour_nodes(f.rho_max(), rho, 1024);
        let table = cheb_t_coeffs_contour(&f, 101, rho, nodes).unwrap();
        let measured = table.values[100].re;
        let predicted = cheb_t_asymptotic_algebraic(100, alpha, b).unwrap();
        assert!(
            (predicted / measured - 1.0).abs() <= 0.05,
            "{predicted} vs {measured}"
        );
    }

    #[test]
    fn interior_ratio_bounded_and_oscillating() {
        // gamma_n / sqrt(n pi) stays within [0.1, 2] for n <= 50 and its
        // first differences keep changing sign
        let f = ModelFunction::InteriorAlgebraic {
            x0: 0.25,
            alpha: 0.5,
        };
        let report = gamma_series(&f, 50).unwrap();
        let mut normalized = Vec::new();
        for (i, g) in report.gamma_values.iter().enumerate() {
            let n = i as f64;
            if n < 1.0 {
                continue;
            }
            if let Some(g) = g {
                let v = g.re / math::sqrt(n * PI);
                assert!((0.1..=2.0).contains(&v), "n={n}: {v}");
                normalized.push(v);
            }
        }
        // sign pattern of first differences is not eventually constant:
        // count sign changes over the second half
        let diffs: Vec<f64> = normalized.windows(2).map(|w| w[1] - w[0]).collect();
        let changes = diffs
            .windows(2)
            .filter(|w| w[0].signum() != w[1].signum())
            .count();
        assert!(changes >= 5, "only {changes} sign changes");
    }

    #[test]
    fn custom_prediction_unsupported() {
        use alloc::sync::Arc;
        let f = ModelFunction::Custom {
            eval_real: Arc::new(|x| x),
            eval_complex: None,
            rho_max: 1.0,
        };
        assert!(matches!(
            ratio_prediction(&f, 3),
            Err(Error::Unsupported(_))
        ));
    }
}
