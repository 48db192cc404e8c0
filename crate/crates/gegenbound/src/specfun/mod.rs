//! Scalar special-function kernels: gamma ratios, the Gauss hypergeometric
//! kernel `2F1(n+1, 1-lambda; n+lambda+1; x)`, normalization constants and
//! Bernstein-ellipse geometry.

mod ellipse;
mod gamma;
mod hyp2f1;
mod norms;

pub use ellipse::{ellipse_perimeter, EllipseGeometry, PerimeterMode};
pub use gamma::{gamma_ratio, log_gamma, log_gamma_ratio, log_gamma_signed, upsilon};
pub use hyp2f1::{hyp2f1_kernel, hyp2f1_kernel_complex, Hyp2f1Method};
pub use norms::{c_norm, c_norm_log, h_norm, h_norm_log, CNormMode};

pub(crate) use gamma::{pochhammer_log, sin_pi};

use crate::error::{Error, Result};
use alloc::format;

/// The Gegenbauer index `lambda > -1/2`, `lambda != 0`, with an explicit
/// marker for the Chebyshev-T limit `lambda -> 0+`.
///
/// The limit marker exists because the `lambda = 0` member of the family is
/// not a Gegenbauer weight; first-kind Chebyshev expansions are handled by
/// dedicated cosine-transform code paths keyed off this marker.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GegenbauerParam {
    lambda: f64,
    chebyshev_t_limit: bool,
}

impl GegenbauerParam {
    /// A proper Gegenbauer index. Rejects `lambda <= -1/2` and `lambda = 0`.
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= -0.5 {
            return Err(Error::Domain(format!(
                "gegenbauer index must satisfy lambda > -1/2, got {lambda}"
            )));
        }
        if lambda == 0.0 {
            return Err(Error::Domain(
                "lambda = 0 is the Chebyshev-T limit; use GegenbauerParam::chebyshev_t_limit()"
                    .into(),
            ));
        }
        Ok(Self {
            lambda,
            chebyshev_t_limit: false,
        })
    }

    /// The `lambda -> 0+` limit marker (first-kind Chebyshev expansions).
    pub fn chebyshev_t_limit() -> Self {
        Self {
            lambda: 0.0,
            chebyshev_t_limit: true,
        }
    }

    /// Legendre: `lambda = 1/2`.
    pub fn legendre() -> Self {
        Self {
            lambda: 0.5,
            chebyshev_t_limit: false,
        }
    }

    /// Second-kind Chebyshev: `lambda = 1`.
    pub fn chebyshev_u() -> Self {
        Self {
            lambda: 1.0,
            chebyshev_t_limit: false,
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn is_chebyshev_t_limit(&self) -> bool {
        self.chebyshev_t_limit
    }

    /// Error unless this is a proper (non-limit) Gegenbauer index.
    pub(crate) fn require_proper(&self, what: &str) -> Result<f64> {
        if self.chebyshev_t_limit {
            return Err(Error::Domain(format!(
                "{what} is undefined at the Chebyshev-T limit (lambda = 0)"
            )));
        }
        Ok(self.lambda)
    }
}
