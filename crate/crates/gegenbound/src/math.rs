//! Scalar math shim: `std` float intrinsics when available, `libm` otherwise.
//!
//! Everything in the crate routes transcendental calls through these wrappers
//! so the core stays `no_std`-compatible (with the `libm` feature).

#![allow(dead_code)]

macro_rules! shim {
    ($name:ident, $std:ident, $libm:ident) => {
        #[inline]
        pub(crate) fn $name(x: f64) -> f64 {
            #[cfg(feature = "std")]
            {
                x.$std()
            }
            #[cfg(not(feature = "std"))]
            {
                libm::$libm(x)
            }
        }
    };
}

shim!(ln, ln, log);
shim!(ln_1p, ln_1p, log1p);
shim!(log10, log10, log10);
shim!(exp, exp, exp);
shim!(sqrt, sqrt, sqrt);
shim!(sin, sin, sin);
shim!(cos, cos, cos);
shim!(tan, tan, tan);
shim!(sinh, sinh, sinh);
shim!(cosh, cosh, cosh);
shim!(tanh, tanh, tanh);
shim!(floor, floor, floor);
shim!(round, round, round);
shim!(acos, acos, acos);

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.powf(y)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::pow(x, y)
    }
}

#[inline]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    #[cfg(feature = "std")]
    {
        x.powi(n)
    }
    #[cfg(not(feature = "std"))]
    {
        libm::pow(x, n as f64)
    }
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & !(1u64 << 63))
}

#[inline]
pub(crate) fn atanh(x: f64) -> f64 {
    0.5 * ln_1p(2.0 * x / (1.0 - x))
}

/// 10^x, via exp.
#[inline]
pub(crate) fn exp10(x: f64) -> f64 {
    exp(x * core::f64::consts::LN_10)
}
