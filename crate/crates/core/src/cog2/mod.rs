//! coG2 vector fields, coRochesterian 2-forms and their bracket on a
//! coclosed G2-structure with constant coefficients.
//!
//! A field `X` is coG2 when `L_X(⋆φ) = d(X⌟⋆φ) = 0`. A 2-form `σ` is
//! coRochesterian when `dσ = X_σ ⌟ ⋆φ` for some (necessarily unique) field
//! `X_σ`. On `R^7` every coG2 field has such a potential, produced here by
//! the radial homotopy operator.

mod flow;
mod sampling;

pub use flow::{flow_constancy, flow_pullback, FlowCheck};
pub use sampling::{cog2_field_basis, CoG2Sampler};

use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, VectorField};
use crate::g2::{G2Structure, Omega7Solver};

/// Outcome of [`Coclosed::classify`].
#[derive(Clone, Debug, PartialEq)]
pub struct FieldClassification {
    pub is_cog2: bool,
    /// `L_X(⋆φ)`; zero exactly when the field is coG2.
    pub witness: DifferentialForm,
    pub is_corochesterian: bool,
    /// `σ` with `X⌟⋆φ = dσ`, present iff coRochesterian.
    pub potential: Option<DifferentialForm>,
}

/// A coRochesterian 2-form paired with its field.
#[derive(Clone, Debug, PartialEq)]
pub struct CoRochesterianForm {
    pub sigma: DifferentialForm,
    pub field: VectorField,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiAnomaly {
    /// `{σ,{τ,υ}} + {τ,{υ,σ}} + {υ,{σ,τ}}`.
    pub lhs: DifferentialForm,
    /// `d(dυ(X_σ, X_τ, ·))`, slots filled left to right.
    pub rhs: DifferentialForm,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelCriterion {
    /// `Φ({σ₁,σ₂}) = 0`.
    pub in_kernel: bool,
    /// `L_{X_σ₂}(dσ₁)`.
    pub lie1: DifferentialForm,
    /// `L_{X_σ₁}(dσ₂)`.
    pub lie2: DifferentialForm,
}

impl KernelCriterion {
    /// All three conditions agree.
    pub fn consistent(&self) -> bool {
        self.in_kernel == self.lie1.is_zero() && self.in_kernel == self.lie2.is_zero()
    }
}

/// A coclosed G2-structure with constant coefficients, together with the
/// precomputed `Ω³₇` solver.
#[derive(Clone, Debug)]
pub struct Coclosed {
    structure: G2Structure,
    solver: Omega7Solver,
}

impl Coclosed {
    pub fn flat() -> Self {
        Coclosed {
            structure: G2Structure::flat(),
            solver: crate::g2::component::flat_solver().clone(),
        }
    }

    pub fn new(structure: G2Structure) -> Result<Self> {
        if !structure.is_coclosed {
            return Err(Error::NotClosed {
                residual: Box::new(structure.star_phi.d()),
            });
        }
        let solver = Omega7Solver::for_structure(&structure)?;
        Ok(Coclosed { structure, solver })
    }

    pub fn structure(&self) -> &G2Structure {
        &self.structure
    }

    pub fn star_phi(&self) -> &DifferentialForm {
        &self.structure.star_phi
    }

    pub fn solver(&self) -> &Omega7Solver {
        &self.solver
    }

    /// `X ⌟ ⋆φ`.
    pub fn contract(&self, x: &VectorField) -> Result<DifferentialForm> {
        self.star_phi().interior(x)
    }

    /// coG2 test via `L_X(⋆φ)`; a coG2 field gets the homotopy potential.
    pub fn classify(&self, x: &VectorField) -> Result<FieldClassification> {
        let witness = self.star_phi().lie_derivative(x)?;
        let is_cog2 = witness.is_zero();
        let potential = if is_cog2 {
            Some(self.contract(x)?.poincare_antiderivative()?)
        } else {
            None
        };
        Ok(FieldClassification {
            is_cog2,
            witness,
            is_corochesterian: potential.is_some(),
            potential,
        })
    }

    /// Pairs `σ` with the unique `X_σ` solving `X_σ ⌟ ⋆φ = dσ`.
    pub fn coroch_from_sigma(&self, sigma: &DifferentialForm) -> Result<CoRochesterianForm> {
        if sigma.degree() != 2 {
            return Err(Error::UnexpectedDegree {
                expected: 2,
                found: sigma.degree(),
            });
        }
        match self.solver.solve(&sigma.d()) {
            Ok(field) => Ok(CoRochesterianForm {
                sigma: sigma.clone(),
                field,
            }),
            Err(Error::NotInComponent { residual }) => Err(Error::NotCoRochesterian { residual }),
            Err(e) => Err(e),
        }
    }

    /// `Φ(σ) = X_σ`.
    pub fn phi_map(&self, sigma: &DifferentialForm) -> Result<VectorField> {
        Ok(self.coroch_from_sigma(sigma)?.field)
    }

    /// The 2-form `⋆φ(X_σ, X_τ, ·, ·) = X_τ ⌟ X_σ ⌟ ⋆φ`.
    pub fn bracket_form(&self, s: &CoRochesterianForm, t: &CoRochesterianForm) -> Result<DifferentialForm> {
        self.contract(&s.field)?.interior(&t.field)
    }

    /// `{σ, τ}` with its field re-solved from the defining 2-form.
    pub fn bracket(&self, s: &CoRochesterianForm, t: &CoRochesterianForm) -> Result<CoRochesterianForm> {
        self.coroch_from_sigma(&self.bracket_form(s, t)?)
    }

    /// For coG2 `X₁, X₂`, the potential `σ = ⋆φ(X₂, X₁, ·, ·)` of the Lie
    /// bracket: `dσ = [X₁, X₂] ⌟ ⋆φ`.
    pub fn lie_bracket_is_coroch(&self, x1: &VectorField, x2: &VectorField) -> Result<CoRochesterianForm> {
        for x in [x1, x2] {
            let c = self.classify(x)?;
            if !c.is_cog2 {
                return Err(Error::NotCoG2 {
                    witness: Box::new(c.witness),
                });
            }
        }
        let sigma = self.contract(x2)?.interior(x1)?;
        let bracket = x1.lie_bracket(x2)?;
        let residual = sigma.d().sub(&self.contract(&bracket)?)?;
        if !residual.is_zero() {
            return Err(Error::NotCoRochesterian {
                residual: Box::new(residual),
            });
        }
        Ok(CoRochesterianForm { sigma, field: bracket })
    }

    /// Compares the cyclic bracket sum with `d(X_σ ⌟ X_τ ⌟ dυ)`, the chain
    /// read as `dυ(X_σ, X_τ, ·)` just as `{σ, ρ} = X_σ ⌟ X_ρ ⌟ ⋆φ` means
    /// `⋆φ(X_σ, X_ρ, ·, ·)`. Inner brackets are re-solved from their 2-forms.
    pub fn jacobi_anomaly(
        &self,
        s: &CoRochesterianForm,
        t: &CoRochesterianForm,
        u: &CoRochesterianForm,
    ) -> Result<JacobiAnomaly> {
        let tu = self.bracket(t, u)?;
        let us = self.bracket(u, s)?;
        let st = self.bracket(s, t)?;
        let lhs = self
            .bracket_form(s, &tu)?
            .add(&self.bracket_form(t, &us)?)?
            .add(&self.bracket_form(u, &st)?)?;
        let rhs = u.sigma.d().interior(&s.field)?.interior(&t.field)?.d();
        let equal = lhs == rhs;
        Ok(JacobiAnomaly { lhs, rhs, equal })
    }

    pub fn kernel_criterion(&self, s1: &CoRochesterianForm, s2: &CoRochesterianForm) -> Result<KernelCriterion> {
        let b = self.bracket(s1, s2)?;
        Ok(KernelCriterion {
            in_kernel: b.field.is_zero(),
            lie1: s1.sigma.d().lie_derivative(&s2.field)?,
            lie2: s2.sigma.d().lie_derivative(&s1.field)?,
        })
    }
}

#[cfg(test)]
mod tests;
