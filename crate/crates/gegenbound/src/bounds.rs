//! Decay and truncation bounds on the Bernstein ellipse: the optimal and
//! explicit coefficient bounds, two comparator bounds from the literature,
//! bounds for the Cauchy transform, and the truncation-error bound families
//! including the diagonal regime `lambda = gamma N`.
//!
//! Every bound is evaluated in log space internally so the diagonal case
//! (gamma arguments of order several hundred) neither overflows nor
//! underflows; `*_log10` entry points expose that directly.

use crate::coeffs::{model_coeff, ModelFunction};
use crate::error::{Error, Result};
use crate::math;
use crate::polyval::gegenbauer_sum;
use crate::specfun::{
    c_norm_log, ellipse_perimeter, h_norm_log, hyp2f1_kernel, log_gamma, upsilon, CNormMode,
    EllipseGeometry, GegenbauerParam, Hyp2f1Method, PerimeterMode,
};
use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

const LN10: f64 = core::f64::consts::LN_10;

/// An ellipse radius together with a uniform bound `M >= max |f|` on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticityWitness {
    rho: f64,
    m: f64,
}

impl AnalyticityWitness {
    pub fn new(rho: f64, m: f64) -> Result<Self> {
        if !(rho > 1.0) {
            return Err(Error::Domain(format!("witness requires rho > 1, got {rho}")));
        }
        if !(m > 0.0) {
            return Err(Error::Domain(format!("witness requires M > 0, got {m}")));
        }
        Ok(Self { rho, m })
    }

    /// Witness for a model function: the analytic maximum where one is known
    /// (real simple pole), otherwise 1.01 times the 2048-point ellipse-grid
    /// maximum. The grid maximum is checked against the final `M` either way.
    pub fn for_model(f: &ModelFunction, rho: f64) -> Result<Self> {
        f.validate()?;
        if !(rho > 1.0) {
            return Err(Error::Domain(format!("witness requires rho > 1, got {rho}")));
        }
        if rho >= f.rho_max() {
            return Err(Error::Precondition(format!(
                "witness radius {rho} must stay below rho_max = {}",
                f.rho_max()
            )));
        }
        let grid_max = ellipse_grid_max(f, rho, 2048)?;
        let m = match f {
            ModelFunction::Pole { z0 } if z0.im == 0.0 => {
                // distance from the ellipse to a real pole b:
                // min |z - b| = (u0 - rho)(rho - 1/u0) / (2 rho)
                let b = math::abs(z0.re);
                let u0 = b + math::sqrt(b * b - 1.0);
                2.0 * rho / ((u0 - rho) * (rho - 1.0 / u0))
            }
            _ => 1.01 * grid_max,
        };
        if grid_max > m * (1.0 + 1e-12) {
            return Err(Error::Precondition(format!(
                "witness M = {m} is below the observed ellipse-grid maximum {grid_max}"
            )));
        }
        Ok(Self { rho, m })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn m(&self) -> f64 {
        self.m
    }
}

/// Max of `|f|` over an equispaced parameter grid of the ellipse `E_rho`.
pub fn ellipse_grid_max(f: &ModelFunction, rho: f64, points: usize) -> Result<f64> {
    let mut best = 0.0f64;
    for k in 0..points {
        let t = 2.0 * PI * k as f64 / points as f64;
        let u = num_complex::Complex64::from_polar(rho, t);
        let z = 0.5 * (u + u.finv());
        best = best.max(f.eval_complex(z)?.norm());
    }
    Ok(best)
}

/// Which coefficient bound to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffBoundKind {
    /// `|c_{n,lambda}| M L(E_rho) / (pi rho^{n+1}) * 2F1(.; +-1/rho^2)`;
    /// optimal in the sense that no negative power of `n` can be gained.
    Optimal,
    /// `Lambda(n,rho,lambda) (1 -+ 1/rho^2)^{lambda-1} n^{1-lambda} / rho^{n+1}`
    /// with every factor replaced by an explicit majorant.
    Explicit,
}

/// Kernel argument convention: `+1/rho^2` for `lambda <= 1`, `-1/rho^2`
/// for `lambda > 1`.
fn kernel_argument(lambda: f64, rho: f64) -> f64 {
    if lambda <= 1.0 {
        1.0 / (rho * rho)
    } else {
        -1.0 / (rho * rho)
    }
}

/// log10 of the coefficient bound.
pub fn coeff_bound_log10(
    n: u32,
    param: &GegenbauerParam,
    w: &AnalyticityWitness,
    kind: CoeffBoundKind,
) -> Result<f64> {
    let lambda = param.require_proper("coeff_bound")?;
    let rho = w.rho();
    let nf = n as f64;
    match kind {
        CoeffBoundKind::Optimal => {
            let geom = EllipseGeometry::new(rho)?;
            let perim = ellipse_perimeter(&geom, PerimeterMode::Elliptic);
            let kernel =
                hyp2f1_kernel(n, param, kernel_argument(lambda, rho), Hyp2f1Method::Series)?;
            let (ln_c, _) = c_norm_log(n, param, CNormMode::Exact)?;
            Ok((ln_c + math::ln(w.m()) + math::ln(perim) - math::ln(PI)
                - (nf + 1.0) * math::ln(rho)
                + math::ln(kernel))
                / LN10)
        }
        CoeffBoundKind::Explicit => {
            if !(lambda > 0.0) {
                return Err(Error::Domain(format!(
                    "explicit bound requires lambda > 0, got {lambda}"
                )));
            }
            if n < 1 {
                return Err(Error::Domain("explicit bound requires n >= 1".into()));
            }
            let geom = EllipseGeometry::new(rho)?;
            let bracket = ellipse_perimeter(&geom, PerimeterMode::JamesonBound);
            let ln_lam_factor = log_gamma(lambda)?
                + math::ln(w.m())
                + math::ln(upsilon(n, 1.0, lambda)?)
                + math::ln(bracket)
                - math::ln(PI);
            let edge = if lambda <= 1.0 {
                1.0 - 1.0 / (rho * rho)
            } else {
                1.0 + 1.0 / (rho * rho)
            };
            Ok((ln_lam_factor + (lambda - 1.0) * math::ln(edge) + (1.0 - lambda) * math::ln(nf)
                - (nf + 1.0) * math::ln(rho))
                / LN10)
        }
    }
}

/// Linear-scale convenience wrapper around [`coeff_bound_log10`].
pub fn coeff_bound(
    n: u32,
    param: &GegenbauerParam,
    w: &AnalyticityWitness,
    kind: CoeffBoundKind,
) -> Result<f64> {
    Ok(math::exp10(coeff_bound_log10(n, param, w, kind)?))
}

/// Comparator bounds from the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparatorBound {
    /// Legendre-coefficient bound
    /// `M sqrt(pi n)/rho^n (1 + (n+2)/((2n+3)(rho^2-1))) exp((8n-1)/(12n(2n-1)))`.
    ZhaoLegendre,
    /// Gegenbauer-coefficient bound built on `A_n^lambda` with its internal
    /// max of two Upsilon products.
    ZhaoGegenbauer,
}

/// log10 of the chosen comparator bound.
pub fn comparator_bound_log10(
    n: u32,
    param: &GegenbauerParam,
    w: &AnalyticityWitness,
    which: ComparatorBound,
) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("comparator bounds require n >= 1".into()));
    }
    let nf = n as f64;
    let rho = w.rho();
    match which {
        ComparatorBound::ZhaoLegendre => {
            let ln = math::ln(w.m()) + 0.5 * math::ln(PI * nf) - nf * math::ln(rho)
                + math::ln(1.0 + (nf + 2.0) / ((2.0 * nf + 3.0) * (rho * rho - 1.0)))
                + (8.0 * nf - 1.0) / (12.0 * nf * (2.0 * nf - 1.0));
            Ok(ln / LN10)
        }
        ComparatorBound::ZhaoGegenbauer => {
            let lambda = param.require_proper("zhao_gegenbauer")?;
            if !(lambda > 0.0) {
                return Err(Error::Domain(format!(
                    "the comparator Gegenbauer bound requires lambda > 0, got {lambda}"
                )));
            }
            // A_n^lambda in log space; the max of the two Upsilon products
            let u_a = math::ln(upsilon(n, 2.0 * lambda, 1.5)?)
                + math::ln(upsilon(2 * n, 2.0, 2.0 * lambda)?);
            let u_b = 0.5 * math::ln((nf + lambda) / nf)
                + 0.5
                    * (math::ln(upsilon(n, 1.0, lambda + 0.5)?)
                        + math::ln(upsilon(n, 2.0 * lambda, lambda + 0.5)?));
            let ln_a = (4.0 * lambda - 2.0) * math::ln(2.0)
                + log_gamma(lambda + 0.5)?
                + 2.0 * log_gamma(lambda)?
                - math::ln(PI)
                - log_gamma(2.0 * lambda)?
                + log_gamma(nf + lambda + 0.5)?
                - log_gamma(nf + 2.0 * lambda)?
                + f64::max(u_a, u_b);
            let bracket = math::exp(0.5 * math::ln(PI) - (2.0 * lambda - 1.0) * math::ln(2.0))
                + math::exp(
                    log_gamma(lambda + 0.5)? - 0.5 * log_gamma(2.0 * lambda + 1.0)?
                        + math::ln(2.0 * math::sqrt(2.0) / (rho * rho - 1.0)),
                );
            let ln = ln_a
                + math::ln(w.m())
                + math::ln(bracket)
                + 0.5 * math::ln(nf)
                - nf * math::ln(rho);
            Ok(ln / LN10)
        }
    }
}

/// Linear-scale comparator bound.
pub fn comparator_bound(
    n: u32,
    param: &GegenbauerParam,
    w: &AnalyticityWitness,
    which: ComparatorBound,
) -> Result<f64> {
    Ok(math::exp10(comparator_bound_log10(n, param, w, which)?))
}

/// Which bound on the Legendre function of the second kind to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QBoundKind {
    /// `sqrt(pi) Upsilon_n^{1,3/2} / (dhat^n sqrt(n (dhat^2-1)))` with
    /// `dhat = 1 + delta + sqrt((1+delta)^2 - 1)`.
    Ours,
    /// `(ln(2(1+dtilde)/dtilde) + 1) (1+dtilde)^{-(n+1)}` with
    /// `dtilde = sqrt((1+delta)^2 - 1)`.
    Rokhlin,
}

/// Upper bound on `|Q_n^{(1/2)}(1 + delta)|` for `n >= 1`, `delta > 0`.
pub fn q_bound(n: u32, delta: f64, which: QBoundKind) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("q_bound requires n >= 1".into()));
    }
    if !(delta > 0.0) {
        return Err(Error::Domain(format!(
            "q_bound requires delta > 0, got {delta}"
        )));
    }
    let nf = n as f64;
    match which {
        QBoundKind::Ours => {
            let dhat = 1.0 + delta + math::sqrt((1.0 + delta) * (1.0 + delta) - 1.0);
            Ok(math::sqrt(PI) * upsilon(n, 1.0, 1.5)? * math::exp(-nf * math::ln(dhat))
                / math::sqrt(nf * (dhat * dhat - 1.0)))
        }
        QBoundKind::Rokhlin => {
            let dtil = math::sqrt((1.0 + delta) * (1.0 + delta) - 1.0);
            Ok((math::ln(2.0 * (1.0 + dtil) / dtil) + 1.0)
                * math::exp(-(nf + 1.0) * math::ln(1.0 + dtil)))
        }
    }
}

/// `max_{z in E_rho} |Q_n^{(lambda)}(z)| = |c_{n,lambda}| h_n rho^{-(n+1)}
/// 2F1(.; +-1/rho^2)`, attained on the real axis for `lambda <= 1` and on
/// the imaginary axis for `lambda > 1`.
pub fn q_max_on_ellipse(n: u32, param: &GegenbauerParam, rho: f64) -> Result<f64> {
    let lambda = param.require_proper("q_max_on_ellipse")?;
    if !(rho > 1.0) {
        return Err(Error::Domain(format!("requires rho > 1, got {rho}")));
    }
    let nf = n as f64;
    let (ln_c, _) = c_norm_log(n, param, CNormMode::Exact)?;
    let ln_h = h_norm_log(n, param)?;
    let kernel = hyp2f1_kernel(n, param, kernel_argument(lambda, rho), Hyp2f1Method::Series)?;
    Ok(math::exp(
        ln_c + ln_h - (nf + 1.0) * math::ln(rho) + math::ln(kernel),
    ))
}

/// Truncation-error bound family; carries its own index specification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TruncationKind {
    /// Term-by-term summation of the coefficient bounds from `n = N`,
    /// closed with a rigorous geometric-tail majorant. Requires `lambda > 0`.
    Series(GegenbauerParam),
    /// The closed form at `lambda = 1`:
    /// `M L /(pi rho^N) (N(rho-1) + rho)/(rho-1)^2`.
    LambdaOne,
    /// The simpler closed form for `lambda >= 1` under the stated lower
    /// bound on `rho`.
    Simple(GegenbauerParam),
    /// The diagonal regime `lambda = gamma N` of the simple bound.
    Diagonal { gamma: f64 },
}

/// log10 of the truncation-error bound on `sup |f - f_N|` for the expansion
/// truncated after `N = n_trunc` terms.
pub fn truncation_bound_log10(
    n_trunc: u32,
    kind: TruncationKind,
    w: &AnalyticityWitness,
) -> Result<f64> {
    let rho = w.rho();
    let geom = EllipseGeometry::new(rho)?;
    let perim = ellipse_perimeter(&geom, PerimeterMode::Elliptic);
    let nf = n_trunc as f64;
    match kind {
        TruncationKind::Series(param) => {
            let lambda = param.require_proper("truncation series bound")?;
            if !(lambda > 0.0) {
                return Err(Error::Domain(format!(
                    "the truncation series bound requires lambda > 0, got {lambda}"
                )));
            }
            let x = kernel_argument(lambda, rho);
            // terms H(n) = Gamma(n+2l)/(Gamma(n+l) rho^{n+1}) 2F1, scaled by
            // the gamma-and-rho part of H(N); the term-ratio majorant
            // r_n = (n+2l)(n+l+1)/(rho (n+l)(n+1)) closes the tail so the
            // returned value stays a rigorous upper bound
            let ln_h_base = log_gamma(nf + 2.0 * lambda)? - log_gamma(nf + lambda)?
                - (nf + 1.0) * math::ln(rho);
            let mut g = 1.0f64;
            let mut sum = 0.0f64;
            let mut n = n_trunc;
            loop {
                let m = n as f64;
                let term = g * hyp2f1_kernel(n, &param, x, Hyp2f1Method::Series)?;
                sum += term;
                let r = (m + 2.0 * lambda) * (m + lambda + 1.0)
                    / (rho * (m + lambda) * (m + 1.0));
                if r < 1.0 && term * r / (1.0 - r) < 1e-16 * sum {
                    sum += term * r / (1.0 - r);
                    break;
                }
                if n - n_trunc > 500_000 {
                    return Err(Error::Precondition(
                        "truncation series bound failed to converge".into(),
                    ));
                }
                g *= (m + 2.0 * lambda) / ((m + lambda) * rho);
                n += 1;
            }
            let ln_pref = math::ln(w.m()) + math::ln(perim) + log_gamma(lambda)?
                - math::ln(PI)
                - log_gamma(2.0 * lambda)?;
            Ok((ln_pref + ln_h_base + math::ln(sum)) / LN10)
        }
        TruncationKind::LambdaOne => Ok((math::ln(w.m()) + math::ln(perim) - math::ln(PI)
            - nf * math::ln(rho)
            + math::ln((nf * (rho - 1.0) + rho) / ((rho - 1.0) * (rho - 1.0))))
            / LN10),
        TruncationKind::Simple(param) => {
            let lambda = param.require_proper("simple truncation bound")?;
            simple_bound_log10(nf, lambda, w, perim)
        }
        TruncationKind::Diagonal { gamma } => {
            if !(gamma > 0.0) {
                return Err(Error::Domain(format!(
                    "diagonal bound requires gamma > 0, got {gamma}"
                )));
            }
            simple_bound_log10(nf, gamma * nf, w, perim)
        }
    }
}

fn simple_bound_log10(nf: f64, lambda: f64, w: &AnalyticityWitness, perim: f64) -> Result<f64> {
    // the derivation holds for lambda >= 1 (with equality in the kernel
    // majorant at lambda = 1); the cited statement reads lambda > 1
    if !(lambda >= 1.0) {
        return Err(Error::Domain(format!(
            "simple/diagonal truncation bound requires lambda >= 1, got {lambda}"
        )));
    }
    let rho = w.rho();
    let threshold = (nf + 2.0 * lambda) * (nf + lambda + 1.0) / ((nf + lambda) * (nf + 1.0));
    if !(rho > threshold) {
        return Err(Error::Precondition(format!(
            "simple/diagonal truncation bound requires rho > {threshold}, got {rho}"
        )));
    }
    let c_factor = w.m() * perim / PI * ((nf + lambda) * (nf + 1.0))
        / (rho * (nf + lambda) * (nf + 1.0) - (nf + 2.0 * lambda) * (nf + lambda + 1.0));
    let ln = log_gamma(lambda)? + log_gamma(nf + 2.0 * lambda)?
        - log_gamma(2.0 * lambda)?
        - log_gamma(nf + lambda)?
        + (lambda - 1.0) * math::ln_1p(1.0 / (rho * rho))
        + math::ln(c_factor)
        - nf * math::ln(rho);
    Ok(ln / LN10)
}

/// Linear-scale truncation bound (may overflow for extreme regimes; prefer
/// the log10 form).
pub fn truncation_bound(
    n_trunc: u32,
    kind: TruncationKind,
    w: &AnalyticityWitness,
) -> Result<f64> {
    Ok(math::exp10(truncation_bound_log10(n_trunc, kind, w)?))
}

/// Max truncation error of the N-term expansion of a closed-form model,
/// measured on `points` equispaced abscissae in `[-1, 1]`.
pub fn measured_max_error(
    f: &ModelFunction,
    n_trunc: u32,
    param: &GegenbauerParam,
    points: usize,
) -> Result<f64> {
    if points < 2 {
        return Err(Error::Domain("need at least two sample points".into()));
    }
    let coeffs: Vec<f64> = (0..n_trunc)
        .map(|n| model_coeff(f, n, param).map(|c| c.re))
        .collect::<Result<_>>()?;
    let mut worst = 0.0f64;
    for i in 0..points {
        let x = -1.0 + 2.0 * i as f64 / (points - 1) as f64;
        let err = math::abs(f.eval_real(x) - gegenbauer_sum(&coeffs, param, x));
        worst = worst.max(err);
    }
    Ok(worst)
}

/// A bound evaluated over a contiguous index range, stored in log10.
#[derive(Debug, Clone)]
pub struct BoundCurve {
    pub n_start: u32,
    pub log10_values: Vec<f64>,
}

impl BoundCurve {
    pub fn from_fn(
        n_start: u32,
        n_end: u32,
        mut eval: impl FnMut(u32) -> Result<f64>,
    ) -> Result<Self> {
        let mut log10_values = Vec::with_capacity((n_end - n_start + 1) as usize);
        for n in n_start..=n_end {
            log10_values.push(eval(n)?);
        }
        Ok(Self {
            n_start,
            log10_values,
        })
    }
}
