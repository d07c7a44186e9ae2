//! The `Ω³₇ = {X ⌟ ⋆φ}` component and the 1 + 7 + 27 splitting of 3-forms.
//!
//! Contraction with a constant 4-form is a constant linear map
//! `ℚ⁷ → ℚ³⁵`, applied monomial by monomial. Membership is decided by the
//! exact residual after projecting onto its image.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::{phi0, star_phi0, G2Structure, DIM};
use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::{Monomial, Polynomial, Rational};

/// Precomputed solver for `X ⌟ ⋆φ = η` against a fixed constant structure.
#[derive(Clone, Debug)]
pub struct Omega7Solver {
    basis3: Vec<MultiIndex>,
    /// 35 × 7: column i holds `e_i ⌟ ⋆φ`.
    contraction: RationalMatrix,
    /// 7 × 35 left inverse realizing the metric-orthogonal projection.
    left_inverse: RationalMatrix,
    /// Gram matrix of the induced inner product on Λ³.
    gram3: RationalMatrix,
    phi: DifferentialForm,
    phi_norm2: Rational,
}

/// The three metric-orthogonal parts of a 3-form.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub part1: DifferentialForm,
    pub part7: DifferentialForm,
    pub part27: DifferentialForm,
}

impl Omega7Solver {
    pub fn flat() -> Self {
        Self::build(&star_phi0(), &phi0(), &RationalMatrix::identity(DIM)).expect("flat structure")
    }

    pub fn for_structure(g: &G2Structure) -> Result<Self> {
        Self::build(&g.star_phi, &g.phi, &g.constant_metric()?)
    }

    fn build(star_phi: &DifferentialForm, phi: &DifferentialForm, metric: &RationalMatrix) -> Result<Self> {
        if !star_phi.is_constant() || !phi.is_constant() {
            return Err(Error::NonConstantStructure);
        }
        let basis3 = MultiIndex::all(DIM, 3);
        let mut contraction = RationalMatrix::zeros(basis3.len(), DIM);
        for i in 0..DIM {
            let col = star_phi.interior(&VectorField::basis(DIM, i + 1))?;
            for (r, idx) in basis3.iter().enumerate() {
                contraction[(r, i)] = col.coeff(*idx).constant_term();
            }
        }
        let inv = metric.inverse().ok_or(Error::SingularMetric)?;
        let mut gram3 = RationalMatrix::zeros(basis3.len(), basis3.len());
        for (a, ia) in basis3.iter().enumerate() {
            for (b, ib) in basis3.iter().enumerate() {
                let rows: Vec<Vec<Rational>> = ia
                    .iter()
                    .map(|r| ib.iter().map(|c| inv[(r - 1, c - 1)].clone()).collect())
                    .collect();
                gram3[(a, b)] = RationalMatrix::from_rows(rows).determinant();
            }
        }
        let lt_g = contraction.transpose().mul(&gram3);
        let normal = lt_g.mul(&contraction);
        let normal_inv = normal
            .inverse()
            .ok_or_else(|| Error::NotInvertible("contraction with *phi is not injective".into()))?;
        let left_inverse = normal_inv.mul(&lt_g);
        let phi_vec: Vec<Rational> = basis3.iter().map(|i| phi.coeff(*i).constant_term()).collect();
        let phi_norm2 = dot(&gram3.mul_vec(&phi_vec), &phi_vec);
        Ok(Omega7Solver {
            basis3,
            contraction,
            left_inverse,
            gram3,
            phi: phi.clone(),
            phi_norm2,
        })
    }

    pub fn contraction_matrix(&self) -> &RationalMatrix {
        &self.contraction
    }

    pub fn gram3(&self) -> &RationalMatrix {
        &self.gram3
    }

    pub fn basis3(&self) -> &[MultiIndex] {
        &self.basis3
    }

    /// Splits a polynomial 3-form into coefficient vectors, one per
    /// monomial.
    fn columns(&self, eta: &DifferentialForm) -> BTreeMap<Monomial, Vec<Rational>> {
        let mut out: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
        for (r, idx) in self.basis3.iter().enumerate() {
            for (m, c) in eta.coeff(*idx).terms() {
                out.entry(m.clone())
                    .or_insert_with(|| vec![Rational::zero(); self.basis3.len()])[r] = c.clone();
            }
        }
        out
    }

    fn assemble_form(&self, parts: &BTreeMap<Monomial, Vec<Rational>>) -> DifferentialForm {
        let mut coeffs: Vec<Polynomial> = vec![Polynomial::zero(DIM); self.basis3.len()];
        for (m, v) in parts {
            for (r, c) in v.iter().enumerate() {
                coeffs[r].add_term(m.clone(), c.clone());
            }
        }
        DifferentialForm::from_terms(DIM, 3, self.basis3.iter().copied().zip(coeffs)).expect("degree-3 basis")
    }

    fn check(&self, eta: &DifferentialForm) -> Result<()> {
        if eta.n() != DIM || eta.degree() != 3 {
            return Err(Error::UnexpectedDegree {
                expected: 3,
                found: eta.degree(),
            });
        }
        Ok(())
    }

    /// Projects onto the image, returning the candidate field and the
    /// orthogonal residual.
    pub fn project(&self, eta: &DifferentialForm) -> Result<(VectorField, DifferentialForm)> {
        self.check(eta)?;
        let mut comps = vec![Polynomial::zero(DIM); DIM];
        let mut residual = BTreeMap::new();
        for (m, v) in self.columns(eta) {
            let x = self.left_inverse.mul_vec(&v);
            let image = self.contraction.mul_vec(&x);
            let r: Vec<Rational> = v.iter().zip(&image).map(|(a, b)| a - b).collect();
            for (i, xi) in x.into_iter().enumerate() {
                comps[i].add_term(m.clone(), xi);
            }
            if r.iter().any(|c| !c.is_zero()) {
                residual.insert(m, r);
            }
        }
        Ok((VectorField::new(comps)?, self.assemble_form(&residual)))
    }

    /// The unique `X` with `X ⌟ ⋆φ = η`, or `NotInComponent` carrying the
    /// residual.
    pub fn solve(&self, eta: &DifferentialForm) -> Result<VectorField> {
        let (x, residual) = self.project(eta)?;
        if residual.is_zero() {
            Ok(x)
        } else {
            Err(Error::NotInComponent {
                residual: Box::new(residual),
            })
        }
    }

    pub fn decompose(&self, eta: &DifferentialForm) -> Result<Decomposition> {
        self.check(eta)?;
        let mut p1 = BTreeMap::new();
        let mut p7 = BTreeMap::new();
        let mut p27 = BTreeMap::new();
        let phi_vec: Vec<Rational> = self.basis3.iter().map(|i| self.phi.coeff(*i).constant_term()).collect();
        let g_phi = self.gram3.mul_vec(&phi_vec);
        for (m, v) in self.columns(eta) {
            let t = dot(&g_phi, &v) / &self.phi_norm2;
            let a: Vec<Rational> = phi_vec.iter().map(|c| c * &t).collect();
            let b = self.contraction.mul_vec(&self.left_inverse.mul_vec(&v));
            let c: Vec<Rational> = v.iter().zip(&a).zip(&b).map(|((v, a), b)| v - a - b).collect();
            p1.insert(m.clone(), a);
            p7.insert(m.clone(), b);
            p27.insert(m, c);
        }
        Ok(Decomposition {
            part1: self.assemble_form(&p1),
            part7: self.assemble_form(&p7),
            part27: self.assemble_form(&p27),
        })
    }

    /// Pointwise metric inner product of two 3-forms (a polynomial).
    pub fn inner(&self, a: &DifferentialForm, b: &DifferentialForm) -> Polynomial {
        let mut out = Polynomial::zero(DIM);
        for (r, ir) in self.basis3.iter().enumerate() {
            let ca = a.coeff(*ir);
            if ca.is_zero() {
                continue;
            }
            for (s, is) in self.basis3.iter().enumerate() {
                let g = &self.gram3[(r, s)];
                if g.is_zero() {
                    continue;
                }
                out += &(&ca * &b.coeff(*is)).scale(g);
            }
        }
        out
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `X ⌟ ⋆φ₀ = η` on the flat structure.
pub fn omega37_solve(eta: &DifferentialForm) -> Result<VectorField> {
    flat_solver().solve(eta)
}

/// Flat-structure splitting into `(Ω³₁, Ω³₇, Ω³₂₇)` parts.
pub fn decompose3(eta: &DifferentialForm) -> Result<Decomposition> {
    flat_solver().decompose(eta)
}

pub(crate) fn flat_solver() -> &'static Omega7Solver {
    static SOLVER: std::sync::OnceLock<Omega7Solver> = std::sync::OnceLock::new();
    SOLVER.get_or_init(Omega7Solver::flat)
}
