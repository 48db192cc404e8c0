//! The coefficient engines: closed forms for model functions, the
//! Chebyshev-U-plus-connection-formula numerical engine, and the
//! Bernstein-ellipse contour-integral oracle, plus the Cauchy transform.

mod cauchy;
mod closed;
mod connection;
mod contour;
mod quadrature;

pub use cauchy::{cauchy_q, CauchyMethod};
pub use closed::model_coeff;
pub use connection::{connection_sigma, default_tail, gegen_coeffs_numeric};
pub use contour::{cheb_t_coeffs_contour, cheb_u_coeffs_contour, coeff_contour_oracle};
pub use quadrature::{cheb_t_coeffs, cheb_u_coeffs};

pub(crate) use connection::{engine_contour_nodes, engine_contour_rho};
pub(crate) use contour::joukowski_u;
pub(crate) use quadrature::gauss_legendre;

use crate::error::{Error, Result};
use crate::math;
use crate::polyval::PolynomialFamily;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use num_complex::Complex64;

/// Which endpoint carries the singularity: `Plus` means `1 + x` (singular at
/// `x = -1`), `Minus` means `1 - x` (singular at `x = +1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndpointSign {
    Plus,
    Minus,
}

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
type ComplexFn = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// The model functions of the coefficient study, plus a custom escape hatch.
#[derive(Clone)]
pub enum ModelFunction {
    /// `f(x) = 1/(x - z0)` with a simple pole at `z0` off `[-1, 1]`.
    Pole { z0: Complex64 },
    /// `f(x) = (b - x)^alpha`, `b > 1`, `alpha` not a nonnegative integer.
    AlgebraicOutside { b: f64, alpha: f64 },
    /// `f(x) = log(b - x)`, `b > 1`.
    LogOutside { b: f64 },
    /// `f(x) = (1 -+ x)^alpha`, `Re(alpha) > -1/2` and not an integer.
    AlgebraicEndpoint { alpha: f64, sign: EndpointSign },
    /// `f(x) = log(1 -+ x)`.
    LogEndpoint { sign: EndpointSign },
    /// `f(x) = |x - x0|^alpha` with `x0` interior to `(-1, 1)`.
    InteriorAlgebraic { x0: f64, alpha: f64 },
    /// `f(x) = log|x - x0|` with `x0` interior to `(-1, 1)`.
    InteriorLog { x0: f64 },
    /// Caller-supplied function. `eval_complex` may be `None` when the
    /// function has no usable analytic continuation; `rho_max` is the
    /// supremum of Bernstein-ellipse radii on which `f` is analytic
    /// (use `1.0` when there is none).
    Custom {
        eval_real: RealFn,
        eval_complex: Option<ComplexFn>,
        rho_max: f64,
    },
}

impl fmt::Debug for ModelFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pole { z0 } => write!(f, "Pole {{ z0: {z0} }}"),
            Self::AlgebraicOutside { b, alpha } => {
                write!(f, "AlgebraicOutside {{ b: {b}, alpha: {alpha} }}")
            }
            Self::LogOutside { b } => write!(f, "LogOutside {{ b: {b} }}"),
            Self::AlgebraicEndpoint { alpha, sign } => {
                write!(f, "AlgebraicEndpoint {{ alpha: {alpha}, sign: {sign:?} }}")
            }
            Self::LogEndpoint { sign } => write!(f, "LogEndpoint {{ sign: {sign:?} }}"),
            Self::InteriorAlgebraic { x0, alpha } => {
                write!(f, "InteriorAlgebraic {{ x0: {x0}, alpha: {alpha} }}")
            }
            Self::InteriorLog { x0 } => write!(f, "InteriorLog {{ x0: {x0} }}"),
            Self::Custom { rho_max, .. } => write!(f, "Custom {{ rho_max: {rho_max} }}"),
        }
    }
}

fn is_integer(x: f64) -> bool {
    x == math::floor(x)
}

impl ModelFunction {
    /// Check the parameter invariants of the chosen kind.
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Pole { z0 } => {
                if z0.im == 0.0 && z0.re.abs() <= 1.0 {
                    return Err(Error::Domain(format!(
                        "pole location must lie off [-1, 1], got {z0}"
                    )));
                }
            }
            Self::AlgebraicOutside { b, alpha } => {
                if !(*b > 1.0) {
                    return Err(Error::Domain(format!("requires b > 1, got {b}")));
                }
                if *alpha >= 0.0 && is_integer(*alpha) {
                    return Err(Error::Domain(format!(
                        "alpha must not be a nonnegative integer, got {alpha}"
                    )));
                }
            }
            Self::LogOutside { b } => {
                if !(*b > 1.0) {
                    return Err(Error::Domain(format!("requires b > 1, got {b}")));
                }
            }
            Self::AlgebraicEndpoint { alpha, .. } => {
                if !(*alpha > -0.5) || is_integer(*alpha) {
                    return Err(Error::Domain(format!(
                        "endpoint exponent must satisfy alpha > -1/2 and not be an integer, got {alpha}"
                    )));
                }
            }
            Self::LogEndpoint { .. } => {}
            Self::InteriorAlgebraic { x0, alpha } => {
                if !(x0.abs() < 1.0) {
                    return Err(Error::Domain(format!(
                        "interior singularity requires |x0| < 1, got {x0}"
                    )));
                }
                if !(*alpha > 0.0) {
                    return Err(Error::Domain(format!(
                        "interior exponent must be positive, got {alpha}"
                    )));
                }
            }
            Self::InteriorLog { x0 } => {
                if !(x0.abs() < 1.0) {
                    return Err(Error::Domain(format!(
                        "interior singularity requires |x0| < 1, got {x0}"
                    )));
                }
            }
            Self::Custom { rho_max, .. } => {
                if !(*rho_max >= 1.0) {
                    return Err(Error::Domain(format!(
                        "custom rho_max must be >= 1, got {rho_max}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Supremum of Bernstein-ellipse radii on which `f` is analytic
    /// (`1.0` for endpoint and interior singularities).
    pub fn rho_max(&self) -> f64 {
        match self {
            Self::Pole { z0 } => joukowski_u(*z0).map(|u| u.norm()).unwrap_or(1.0),
            Self::AlgebraicOutside { b, .. } | Self::LogOutside { b } => {
                b + math::sqrt(b * b - 1.0)
            }
            Self::AlgebraicEndpoint { .. }
            | Self::LogEndpoint { .. }
            | Self::InteriorAlgebraic { .. }
            | Self::InteriorLog { .. } => 1.0,
            Self::Custom { rho_max, .. } => *rho_max,
        }
    }

    /// Evaluate on the expansion interval.
    pub fn eval_real(&self, x: f64) -> f64 {
        match self {
            Self::Pole { z0 } => {
                if z0.im == 0.0 {
                    1.0 / (x - z0.re)
                } else {
                    (Complex64::new(x, 0.0) - z0).finv().re
                }
            }
            Self::AlgebraicOutside { b, alpha } => math::powf(b - x, *alpha),
            Self::LogOutside { b } => math::ln(b - x),
            Self::AlgebraicEndpoint { alpha, sign } => match sign {
                EndpointSign::Plus => math::powf(1.0 + x, *alpha),
                EndpointSign::Minus => math::powf(1.0 - x, *alpha),
            },
            Self::LogEndpoint { sign } => match sign {
                EndpointSign::Plus => math::ln(1.0 + x),
                EndpointSign::Minus => math::ln(1.0 - x),
            },
            Self::InteriorAlgebraic { x0, alpha } => math::powf(math::abs(x - x0), *alpha),
            Self::InteriorLog { x0 } => math::ln(math::abs(x - x0)),
            Self::Custom { eval_real, .. } => eval_real(x),
        }
    }

    /// Real-part evaluation for complex-pole models is not meaningful; the
    /// full complex value on `[-1, 1]`.
    pub fn eval_on_interval(&self, x: f64) -> Complex64 {
        match self {
            Self::Pole { z0 } if z0.im != 0.0 => (Complex64::new(x, 0.0) - z0).finv(),
            _ => Complex64::new(self.eval_real(x), 0.0),
        }
    }

    /// Analytic continuation, when one exists for this kind.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        match self {
            Self::Pole { z0 } => Ok((z - z0).finv()),
            Self::AlgebraicOutside { b, alpha } => {
                Ok((Complex64::new(*b, 0.0) - z).powf(*alpha))
            }
            Self::LogOutside { b } => Ok((Complex64::new(*b, 0.0) - z).ln()),
            Self::Custom {
                eval_complex: Some(g),
                ..
            } => Ok(g(z)),
            _ => Err(Error::Unsupported(
                "this model function has no analytic continuation off [-1, 1]".into(),
            )),
        }
    }

    /// Whether contour-based engines can be applied.
    pub fn has_analytic_continuation(&self) -> bool {
        matches!(
            self,
            Self::Pole { .. }
                | Self::AlgebraicOutside { .. }
                | Self::LogOutside { .. }
                | Self::Custom {
                    eval_complex: Some(_),
                    ..
                }
        ) && self.rho_max() > 1.0
    }

    /// Interior singular abscissa, for split quadrature.
    pub fn interior_singularity(&self) -> Option<f64> {
        match self {
            Self::InteriorAlgebraic { x0, .. } | Self::InteriorLog { x0 } => Some(*x0),
            _ => None,
        }
    }

    /// True when values on `[-1, 1]` are genuinely complex.
    pub fn is_complex_valued(&self) -> bool {
        matches!(self, Self::Pole { z0 } if z0.im != 0.0)
    }
}

/// How a [`CoefficientTable`] was produced.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Provenance {
    ClosedForm,
    Quadrature { nodes: usize },
    Contour { rho: f64, nodes: usize },
}

/// A sequence of expansion coefficients indexed by degree `n = 0..len-1`.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    pub family: PolynomialFamily,
    pub values: Vec<Complex64>,
    pub provenance: Provenance,
    /// Magnitude of the last connection-formula term, when the table came
    /// from the tail-summed numerical engine.
    pub tail_residual: Option<f64>,
}

impl CoefficientTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Real parts; exact for real-valued models.
    pub fn real_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.re).collect()
    }
}
