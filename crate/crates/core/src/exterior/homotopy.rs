//! Radial homotopy operator on polynomial forms over `R^n`.
//!
//! For a k-form `a`, `h(a)(x) = ∫₀¹ t^(k-1) (x ⌟ a)(t x) dt`. On a monomial
//! coefficient of total degree `m` the integral is `1/(m+k)`, so `h` maps
//! polynomial forms to polynomial forms exactly, and `d h + h d = id` in
//! positive degree.

use num_bigint::BigInt;

use super::field::VectorField;
use super::form::DifferentialForm;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

impl DifferentialForm {
    /// The homotopy operator itself, with no closedness check.
    pub fn homotopy(&self) -> Result<DifferentialForm> {
        if self.degree() == 0 {
            return Err(Error::ContractionOfFunction);
        }
        let k = self.degree() as i64;
        let weighted =
            self.map_coeffs(|p| p.map_coeffs(|m, c| c / Rational::from_integer(BigInt::from(m.degree() as i64 + k))));
        weighted.interior(&VectorField::position(self.n()))
    }

    /// Returns `h(a)` with `d(h(a)) = a`; fails with `NotClosed` when
    /// `da != 0`.
    pub fn poincare_antiderivative(&self) -> Result<DifferentialForm> {
        let da = self.d();
        if !da.is_zero() {
            return Err(Error::NotClosed { residual: Box::new(da) });
        }
        self.homotopy()
    }

    /// Antiderivative from the homotopy centred at `center` instead of the
    /// origin. Differs from [`Self::poincare_antiderivative`] by a closed form.
    pub fn poincare_antiderivative_at(&self, center: &[Rational]) -> Result<DifferentialForm> {
        if center.len() != self.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: center.len(),
            });
        }
        let back: Vec<Rational> = center.iter().map(|c| -c).collect();
        let h = self.translate(center).poincare_antiderivative()?;
        Ok(h.translate(&back))
    }
}

/// Exact 1-form `d f` for a polynomial `f`.
pub fn gradient(f: &Polynomial) -> DifferentialForm {
    DifferentialForm::function(f.clone()).d()
}
