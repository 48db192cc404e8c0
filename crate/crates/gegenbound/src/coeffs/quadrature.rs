//! Real-axis quadrature engines: the composite trapezoidal rule in theta for
//! second-kind Chebyshev coefficients, the midpoint cosine rule for
//! first-kind coefficients, and graded split rules for interior
//! singularities.

use super::{CoefficientTable, ModelFunction, Provenance};
use crate::error::{Error, Result};
use crate::math;
use crate::polyval::PolynomialFamily;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on `[-1, 1]` by Newton iteration.
pub(crate) fn gauss_legendre(k: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; k];
    let mut weights = vec![0.0; k];
    let m = k.div_ceil(2);
    for i in 0..m {
        let mut x = math::cos(PI * (i as f64 + 0.75) / (k as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 1..k {
                let jf = j as f64;
                let p2 = ((2.0 * jf + 1.0) * x * p1 - jf * p0) / (jf + 1.0);
                p0 = p1;
                p1 = p2;
            }
            dp = k as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if math::abs(dx) < 1e-16 {
                break;
            }
        }
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[k - 1 - i] = weights[i];
        nodes[i] = -x;
        nodes[k - 1 - i] = x;
    }
    if k % 2 == 1 {
        nodes[k / 2] = 0.0;
    }
    (nodes, weights)
}

/// Quadrature samples `(theta_i, w_i)` on `[a, b]` for an integrand with a
/// kink at `split`: Gauss-Legendre per side after the grading
/// `t = split +- len s^2`, which pulls nodes into the singular point and
/// softens `|t - split|^alpha` and `log|t - split|`. The samples are built
/// once and reused across all coefficient indices.
fn graded_split_samples(a: f64, b: f64, split: f64, k: usize) -> Vec<(f64, f64)> {
    let (xs, ws) = gauss_legendre(k);
    let mut samples = Vec::with_capacity(2 * k);
    let len_l = split - a;
    let len_r = b - split;
    for (x, w) in xs.iter().zip(&ws) {
        let s = 0.5 * (x + 1.0);
        if len_l > 0.0 {
            samples.push((split - len_l * s * s, w * len_l * s));
        }
        if len_r > 0.0 {
            samples.push((split + len_r * s * s, w * len_r * s));
        }
    }
    samples
}

fn check_count_nodes(count: usize, nodes: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::Domain("coefficient count must be positive".into()));
    }
    if nodes < 4 * count {
        return Err(Error::Precondition(format!(
            "need nodes >= 4*count, got nodes = {nodes} < {}",
            4 * count
        )));
    }
    Ok(())
}

/// Second-kind Chebyshev coefficients
/// `b_j = (2/pi) int_0^pi f(cos t) sin((j+1)t) sin t dt` for `j < count`,
/// by the composite trapezoidal rule in theta. Endpoint-singular integrands
/// are allowed: the `sin t` weight vanishes at the endpoints, whose terms are
/// dropped. Interior singularities switch to the graded split rule.
pub fn cheb_u_coeffs(f: &ModelFunction, count: usize, nodes: usize) -> Result<CoefficientTable> {
    f.validate()?;
    check_count_nodes(count, nodes)?;
    let values: Vec<Complex64> = if let Some(x0) = f.interior_singularity() {
        let t0 = math::acos(x0);
        let samples: Vec<(f64, f64, f64)> = graded_split_samples(0.0, PI, t0, nodes / 2)
            .into_iter()
            .map(|(t, w)| (t, w, f.eval_real(math::cos(t))))
            .collect();
        (0..count)
            .map(|j| {
                let mut acc = 0.0;
                for &(t, w, fv) in &samples {
                    acc += w * fv * math::sin((j as f64 + 1.0) * t) * math::sin(t);
                }
                Complex64::new(2.0 / PI * acc, 0.0)
            })
            .collect()
    } else {
        let h = PI / nodes as f64;
        let samples: Vec<(f64, Complex64)> = (1..nodes)
            .map(|k| {
                let t = k as f64 * h;
                (t, f.eval_on_interval(math::cos(t)))
            })
            .collect();
        (0..count)
            .map(|j| {
                let mut acc = Complex64::new(0.0, 0.0);
                for &(t, fv) in &samples {
                    acc += fv * (math::sin((j as f64 + 1.0) * t) * math::sin(t));
                }
                acc * (2.0 / PI * h)
            })
            .collect()
    };
    Ok(CoefficientTable {
        family: PolynomialFamily::ChebyshevU,
        values,
        provenance: Provenance::Quadrature { nodes },
        tail_residual: None,
    })
}

/// First-kind Chebyshev coefficients
/// `a_n^C = (2/pi) int_0^pi f(cos t) cos(n t) dt` for `n < count`, by the
/// midpoint cosine rule (the Chebyshev-Gauss rule, which never evaluates the
/// endpoints, so endpoint-singular integrands are admissible). Interior
/// singularities switch to the graded split rule.
///
/// The values are the unhalved projections; the expansion is
/// `f = a_0/2 + sum_{n >= 1} a_n T_n`.
pub fn cheb_t_coeffs(f: &ModelFunction, count: usize, nodes: usize) -> Result<CoefficientTable> {
    f.validate()?;
    check_count_nodes(count, nodes)?;
    let values: Vec<Complex64> = if let Some(x0) = f.interior_singularity() {
        let t0 = math::acos(x0);
        let samples: Vec<(f64, f64, f64)> = graded_split_samples(0.0, PI, t0, nodes / 2)
            .into_iter()
            .map(|(t, w)| (t, w, f.eval_real(math::cos(t))))
            .collect();
        (0..count)
            .map(|n| {
                let mut acc = 0.0;
                for &(t, w, fv) in &samples {
                    acc += w * fv * math::cos(n as f64 * t);
                }
                Complex64::new(2.0 / PI * acc, 0.0)
            })
            .collect()
    } else {
        let samples: Vec<(f64, Complex64)> = (0..nodes)
            .map(|k| {
                let t = (k as f64 + 0.5) * PI / nodes as f64;
                (t, f.eval_on_interval(math::cos(t)))
            })
            .collect();
        (0..count)
            .map(|n| {
                let mut acc = Complex64::new(0.0, 0.0);
                for &(t, fv) in &samples {
                    acc += fv * math::cos(n as f64 * t);
                }
                acc * (2.0 / nodes as f64)
            })
            .collect()
    };
    Ok(CoefficientTable {
        family: PolynomialFamily::ChebyshevT,
        values,
        provenance: Provenance::Quadrature { nodes },
        tail_residual: None,
    })
}
