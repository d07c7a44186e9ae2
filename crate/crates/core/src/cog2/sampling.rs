//! The finite-dimensional spaces of coG2 fields with polynomial
//! coefficients of bounded degree, and random elements of them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use super::{CoRochesterianForm, Coclosed};
use crate::error::Result;
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::{rat, Monomial, Polynomial, Rational};
use crate::random::Sampler;

/// All monomials in `n` variables of total degree at most `max_degree`.
pub(crate) fn monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    fn go(n: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n {
            out.push(Monomial::new(prefix.clone()));
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            go(n, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_degree, &mut Vec::new(), &mut out);
    out
}

impl Coclosed {
    /// Basis of `{X : deg X ≤ max_degree, L_X ⋆φ = 0}`, from the exact
    /// nullspace of the linear map `X ↦ d(X ⌟ ⋆φ)`.
    pub fn field_basis(&self, max_degree: u32) -> Result<Vec<VectorField>> {
        let n = self.star_phi().n();
        let monos = monomials_up_to(n, max_degree);
        let mut unknowns = Vec::new();
        let mut rows: BTreeMap<(MultiIndex, Monomial), usize> = BTreeMap::new();
        let mut columns = Vec::new();
        for i in 1..=n {
            for m in &monos {
                let mut comps = vec![Polynomial::zero(n); n];
                comps[i - 1] = Polynomial::monomial(m.clone(), rat(1));
                let x = VectorField::new(comps)?;
                let image = self.contract(&x)?.d();
                let mut col = Vec::new();
                for (idx, p) in image.terms() {
                    for (mono, c) in p.terms() {
                        let next = rows.len();
                        let r = *rows.entry((*idx, mono.clone())).or_insert(next);
                        col.push((r, c.clone()));
                    }
                }
                columns.push(col);
                unknowns.push((i, m.clone()));
            }
        }
        let mut matrix = RationalMatrix::zeros(rows.len().max(1), unknowns.len());
        for (j, col) in columns.into_iter().enumerate() {
            for (r, c) in col {
                matrix[(r, j)] = c;
            }
        }
        Ok(matrix
            .nullspace()
            .into_iter()
            .map(|v| {
                let mut comps = vec![Polynomial::zero(n); n];
                for ((i, m), c) in unknowns.iter().zip(v) {
                    if !c.is_zero() {
                        comps[i - 1].add_term(m.clone(), c);
                    }
                }
                VectorField::new(comps).expect("consistent ring")
            })
            .collect())
    }
}

/// Flat coG2 fields of degree at most 2 (translations and the stabilizer).
pub fn cog2_field_basis() -> &'static [VectorField] {
    static BASIS: OnceLock<Vec<VectorField>> = OnceLock::new();
    BASIS.get_or_init(|| Coclosed::flat().field_basis(2).expect("flat structure"))
}

/// Draws random coG2 fields and coRochesterian forms.
#[derive(Clone, Debug)]
pub struct CoG2Sampler {
    pub structure: Coclosed,
    pub basis: Vec<VectorField>,
}

impl CoG2Sampler {
    pub fn flat() -> Self {
        CoG2Sampler {
            structure: Coclosed::flat(),
            basis: cog2_field_basis().to_vec(),
        }
    }

    pub fn new(structure: Coclosed, max_degree: u32) -> Result<Self> {
        let basis = structure.field_basis(max_degree)?;
        Ok(CoG2Sampler { structure, basis })
    }

    /// An integer combination of up to three basis fields.
    pub fn field(&self, s: &mut Sampler) -> VectorField {
        let n = self.structure.star_phi().n();
        let mut x = VectorField::zero(n);
        while x.is_zero() {
            for _ in 0..s.int(1, 3) {
                let b = &self.basis[s.index(self.basis.len())];
                let c = Rational::from_integer(s.int(-3, 3).into());
                x = x.add(&b.scale(&c)).expect("same ring");
            }
        }
        x
    }

    /// `σ = h(X ⌟ ⋆φ) + dβ` for a random coG2 field `X` and 1-form `β`.
    pub fn corochesterian(&self, s: &mut Sampler) -> Result<CoRochesterianForm> {
        let x = self.field(s);
        self.corochesterian_for(&x, s)
    }

    pub fn corochesterian_for(&self, x: &VectorField, s: &mut Sampler) -> Result<CoRochesterianForm> {
        let n = x.n();
        let potential = self.structure.contract(x)?.poincare_antiderivative()?;
        let beta: DifferentialForm = s.form_with(n, 1, 2, 2);
        let sigma = potential.add(&beta.d())?;
        self.structure.coroch_from_sigma(&sigma)
    }
}
