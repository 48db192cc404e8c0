//! Bernstein-ellipse geometry and perimeter.

use crate::error::{Error, Result};
use crate::math;
use alloc::format;
use core::f64::consts::PI;

/// The Bernstein ellipse `E_rho`: foci at +-1, semi-axis sum `rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    rho: f64,
    semi_major: f64,
    semi_minor: f64,
    eccentric_param: f64,
}

impl EllipseGeometry {
    /// Construct from `rho >= 1` (`rho = 1` is the degenerate interval).
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho >= 1.0) {
            return Err(Error::Domain(format!(
                "Bernstein ellipse requires rho >= 1, got {rho}"
            )));
        }
        let semi_major = 0.5 * (rho + 1.0 / rho);
        Ok(Self {
            rho,
            semi_major,
            semi_minor: 0.5 * (rho - 1.0 / rho),
            eccentric_param: 1.0 / semi_major,
        })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn semi_major(&self) -> f64 {
        self.semi_major
    }

    pub fn semi_minor(&self) -> f64 {
        self.semi_minor
    }

    /// `epsilon = 2/(rho + 1/rho)`, the modulus of the perimeter integral.
    pub fn eccentric_param(&self) -> f64 {
        self.eccentric_param
    }
}

/// Perimeter formula selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerimeterMode {
    /// `(4/eps) E(eps)` with the complete elliptic integral of the second kind.
    Elliptic,
    /// `2(rho + 1/rho) + 2(pi/2 - 1)(rho - 1/rho)`, an upper bound with
    /// equality at `rho = 1` and in the limit `rho -> infinity`.
    JamesonBound,
}

/// Complete elliptic integral of the second kind E(k), modulus convention,
/// by AGM iteration. Terminates when successive scaled means agree to 1e-17.
pub(crate) fn elliptic_e_agm(k: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&k));
    if k == 1.0 {
        return 1.0;
    }
    if k == 0.0 {
        return PI / 2.0;
    }
    let mut a = 1.0f64;
    let mut b = math::sqrt((1.0 - k) * (1.0 + k));
    let mut c = k;
    let mut sum = 0.5 * c * c;
    let mut pow2 = 1.0f64;
    while math::abs(c) > 1e-17 * a {
        c = 0.5 * (a - b);
        let an = 0.5 * (a + b);
        b = math::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += 0.5 * pow2 * c * c;
    }
    PI / (2.0 * a) * (1.0 - sum)
}

/// Perimeter of the Bernstein ellipse.
pub fn ellipse_perimeter(geom: &EllipseGeometry, mode: PerimeterMode) -> f64 {
    match mode {
        PerimeterMode::Elliptic => {
            let eps = geom.eccentric_param();
            4.0 / eps * elliptic_e_agm(eps)
        }
        PerimeterMode::JamesonBound => {
            let rho = geom.rho();
            2.0 * (rho + 1.0 / rho) + 2.0 * (PI / 2.0 - 1.0) * (rho - 1.0 / rho)
        }
    }
}
