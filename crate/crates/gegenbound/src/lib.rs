//! Gegenbauer, Legendre and Chebyshev expansion machinery: coefficients by
//! closed form, connection-formula assembly and contour integration; decay
//! and truncation bounds on the Bernstein ellipse; and the asymptotics of the
//! Legendre-to-Chebyshev coefficient ratio.
//!
//! The crate is `no_std`-compatible (`default-features = false,
//! features = ["libm"]`); everything allocates through `alloc` only.
//!
//! # Layout
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`specfun`] | log-gamma, the `2F1` kernel, normalization constants, ellipse perimeter |
//! | [`polyval`] | three-term recurrences for the four polynomial families |
//! | [`coeffs`] | coefficient engines (closed form, connection formula, contour) and the Cauchy transform |
//! | [`bounds`] | optimal/explicit coefficient bounds, comparator bounds, truncation bounds |
//! | [`ratio`] | the ratio `gamma_n = a_n^L / a_n^C` and its predictions |

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("enable at least one of the `std` or `libm` features");

extern crate alloc;

mod error;
pub(crate) mod math;

pub mod bounds;
pub mod coeffs;
pub mod polyval;
pub mod ratio;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
