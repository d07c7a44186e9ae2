//! G2-specific structure on `R^7`: the model forms, metric and volume
//! induction from a 3-form, Hodge star, the 1+7+27 splitting of 3-forms and
//! the stabilizer algebra.

pub(crate) mod component;
pub(crate) mod hodge;
mod metric;
mod stabilizer;

pub use component::{decompose3, omega37_solve, Decomposition, Omega7Solver};
pub use hodge::{codifferential, hodge_star, hodge_star_f64, ConstantForm};
pub use metric::{cross_product, metric_from_phi, MetricAtPoint};
pub use stabilizer::{induced_action_matrix, stabilizer_basis, stabilizer_dimensions, stabilizer_fields};

use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex};
use crate::linalg::RationalMatrix;
use crate::poly::{rat, Polynomial};

pub const DIM: usize = 7;

const PHI0_TERMS: [(&[usize], i64); 7] = [
    (&[1, 2, 3], 1),
    (&[1, 4, 5], 1),
    (&[1, 6, 7], 1),
    (&[2, 4, 6], 1),
    (&[2, 5, 7], -1),
    (&[3, 4, 7], -1),
    (&[3, 5, 6], -1),
];

const STAR_PHI0_TERMS: [(&[usize], i64); 7] = [
    (&[4, 5, 6, 7], 1),
    (&[2, 3, 6, 7], 1),
    (&[2, 3, 4, 5], 1),
    (&[1, 3, 5, 7], 1),
    (&[1, 3, 4, 6], -1),
    (&[1, 2, 5, 6], -1),
    (&[1, 2, 4, 7], -1),
];

/// `φ₀ = dx¹²³ + dx¹⁴⁵ + dx¹⁶⁷ + dx²⁴⁶ − dx²⁵⁷ − dx³⁴⁷ − dx³⁵⁶`.
pub fn phi0() -> DifferentialForm {
    DifferentialForm::from_constants(DIM, 3, &PHI0_TERMS).expect("static table")
}

/// `⋆φ₀ = dx⁴⁵⁶⁷ + dx²³⁶⁷ + dx²³⁴⁵ + dx¹³⁵⁷ − dx¹³⁴⁶ − dx¹²⁵⁶ − dx¹²⁴⁷`.
pub fn star_phi0() -> DifferentialForm {
    DifferentialForm::from_constants(DIM, 4, &STAR_PHI0_TERMS).expect("static table")
}

/// `dx¹ ∧ ... ∧ dx⁷`.
pub fn volume_form() -> DifferentialForm {
    DifferentialForm::monomial(DIM, MultiIndex::full(DIM), Polynomial::one(DIM))
}

/// A G2-structure on `R^7` with its derived data.
///
/// The metric is stored as a matrix of polynomials so that structures
/// obtained by pulling back the flat one are representable exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Structure {
    pub phi: DifferentialForm,
    pub star_phi: DifferentialForm,
    pub metric: Vec<Vec<Polynomial>>,
    pub volume_form: DifferentialForm,
    pub is_closed: bool,
    pub is_coclosed: bool,
}

impl G2Structure {
    /// The model structure `φ₀` with the Euclidean metric.
    pub fn flat() -> Self {
        let metric = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(DIM)
                        } else {
                            Polynomial::zero(DIM)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::assemble(phi0(), star_phi0(), metric, volume_form())
    }

    /// Structure induced by a constant 3-form whose metric and volume are
    /// rational. Fails with `IrrationalVolume` when the normalization
    /// needs an irrational root (use [`metric_from_phi`] instead).
    pub fn from_constant_phi(phi: DifferentialForm) -> Result<Self> {
        if phi.degree() != 3 || phi.n() != DIM {
            return Err(Error::UnexpectedDegree {
                expected: 3,
                found: phi.degree(),
            });
        }
        if !phi.is_constant() {
            return Err(Error::NonConstantStructure);
        }
        let origin = vec![rat(0); DIM];
        let g = metric_from_phi(&phi, &origin)?;
        let exact = g.exact.ok_or(Error::IrrationalVolume)?;
        let star_phi = hodge_star(&phi, &exact)?;
        let vol = hodge_star(&DifferentialForm::function(Polynomial::one(DIM)), &exact)?;
        let metric = (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| Polynomial::constant(DIM, exact[(i, j)].clone()))
                    .collect()
            })
            .collect();
        Ok(Self::assemble(phi, star_phi, metric, vol))
    }

    /// Assembles a structure from already-known forms; the closed and
    /// coclosed flags are recomputed exactly.
    pub fn assemble(
        phi: DifferentialForm,
        star_phi: DifferentialForm,
        metric: Vec<Vec<Polynomial>>,
        volume_form: DifferentialForm,
    ) -> Self {
        let is_closed = phi.d().is_zero();
        let is_coclosed = star_phi.d().is_zero();
        G2Structure {
            phi,
            star_phi,
            metric,
            volume_form,
            is_closed,
            is_coclosed,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.phi.is_constant()
            && self.star_phi.is_constant()
            && self.metric.iter().flatten().all(Polynomial::is_constant)
    }

    /// The metric as a rational matrix; only for constant structures.
    pub fn constant_metric(&self) -> Result<RationalMatrix> {
        if !self.is_constant() {
            return Err(Error::NonConstantStructure);
        }
        Ok(RationalMatrix::from_rows(
            self.metric
                .iter()
                .map(|row| row.iter().map(Polynomial::constant_term).collect())
                .collect(),
        ))
    }
}
