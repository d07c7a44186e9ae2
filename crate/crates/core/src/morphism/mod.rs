//! coG2-morphisms between coclosed structures on `R^7`: the direct pullback
//! test, the graph criterion on `R^7 × R^7`, and naturality of the bracket.

mod diffeo;

pub use diffeo::{pullback_by, PolyDiffeo};

use crate::cog2::Coclosed;
use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, VectorField};
use crate::poly::Polynomial;

/// `π₁^*(⋆φ₁) − π₂^*(⋆φ₂)` on `R^14`, first factor in coordinates 1..7.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductStructure {
    pub form: DifferentialForm,
}

impl ProductStructure {
    pub fn new(first: &DifferentialForm, second: &DifferentialForm) -> Result<Self> {
        let n = first.n();
        let form = first.embed(2 * n, 0).sub(&second.embed(2 * n, n))?;
        Ok(ProductStructure { form })
    }

    /// `π₁^*(⋆φ₁) + π₂^*(⋆φ₂)`.
    pub fn sum(first: &DifferentialForm, second: &DifferentialForm) -> Result<DifferentialForm> {
        let n = first.n();
        first.embed(2 * n, 0).add(&second.embed(2 * n, n))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MorphismCheck {
    pub holds: bool,
    /// `ψ^*(⋆φ₂) − ⋆φ₁` for the direct test, the restricted product form
    /// for the graph criterion.
    pub residual: DifferentialForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Naturality {
    /// `ψ^*{σ, τ}`.
    pub lhs: DifferentialForm,
    /// `{ψ^*σ, ψ^*τ}`.
    pub rhs: DifferentialForm,
    pub equal: bool,
}

/// Source `(R^7, φ₁)` and target `(R^7, φ₂)` of the maps under test.
#[derive(Clone, Debug)]
pub struct MorphismContext {
    pub domain: Coclosed,
    pub codomain: Coclosed,
}

impl Default for MorphismContext {
    fn default() -> Self {
        Self::flat()
    }
}

impl MorphismContext {
    pub fn flat() -> Self {
        MorphismContext {
            domain: Coclosed::flat(),
            codomain: Coclosed::flat(),
        }
    }

    pub fn new(domain: Coclosed, codomain: Coclosed) -> Self {
        MorphismContext { domain, codomain }
    }

    pub fn is_cog2_morphism(&self, psi: &PolyDiffeo) -> Result<MorphismCheck> {
        let residual = psi.pullback(self.codomain.star_phi())?.sub(self.domain.star_phi())?;
        Ok(MorphismCheck {
            holds: residual.is_zero(),
            residual,
        })
    }

    pub fn product_structure(&self) -> Result<ProductStructure> {
        ProductStructure::new(self.domain.star_phi(), self.codomain.star_phi())
    }

    /// Restricts the product form to the graph `p ↦ (p, ψ(p))`.
    pub fn graph_criterion(&self, psi: &PolyDiffeo) -> Result<MorphismCheck> {
        let n = psi.n();
        let product = self.product_structure()?;
        let embedding: Vec<Polynomial> = (1..=n)
            .map(|i| Polynomial::var(n, i))
            .chain(psi.forward().iter().cloned())
            .collect();
        let residual = pullback_by(&embedding, &product.form)?;
        Ok(MorphismCheck {
            holds: residual.is_zero(),
            residual,
        })
    }

    /// Compares `ψ^*{σ, τ}` with `{ψ^*σ, ψ^*τ}`; the fields of the pulled
    /// back forms are re-solved on the domain.
    pub fn bracket_naturality(
        &self,
        psi: &PolyDiffeo,
        s: &DifferentialForm,
        t: &DifferentialForm,
    ) -> Result<Naturality> {
        let sc = self.codomain.coroch_from_sigma(s)?;
        let tc = self.codomain.coroch_from_sigma(t)?;
        let lhs = psi.pullback(&self.codomain.bracket_form(&sc, &tc)?)?;
        let pulled = |f: &DifferentialForm| -> Result<_> {
            self.domain.coroch_from_sigma(&psi.pullback(f)?).map_err(|e| match e {
                Error::NotCoRochesterian { residual } => Error::PullbackNotCoRochesterian { residual },
                e => e,
            })
        };
        let rhs = self.domain.bracket_form(&pulled(s)?, &pulled(t)?)?;
        let equal = lhs == rhs;
        Ok(Naturality { lhs, rhs, equal })
    }

    /// For a coG2-morphism, the field of `ψ^*σ` is the transport of `X_σ`.
    pub fn field_transport_check(&self, psi: &PolyDiffeo, s: &DifferentialForm) -> Result<bool> {
        let check = self.is_cog2_morphism(psi)?;
        if !check.holds {
            return Err(Error::NotCoG2Morphism {
                residual: Box::new(check.residual),
            });
        }
        let field = self.codomain.phi_map(s)?;
        let solved = self.domain.phi_map(&psi.pullback(s)?)?;
        Ok(solved == psi.pushforward_field(&field)?)
    }

    /// Transports a field on the codomain back to the domain.
    pub fn transport(&self, psi: &PolyDiffeo, x: &VectorField) -> Result<VectorField> {
        psi.pushforward_field(x)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All signed permutations `x ↦ (s_i x_{π(i)})` with `ψ^*α = α` for a
/// constant form `α`, in lexicographic order of `(π, signs)`.
pub fn preserving_signed_permutations(alpha: &DifferentialForm) -> Vec<(Vec<usize>, Vec<i32>)> {
    let n = alpha.n();
    let terms: Vec<_> = alpha.terms().map(|(i, p)| (*i, p.constant_term())).collect();
    let lookup = terms.iter().cloned().collect();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut found = Vec::new();
    loop {
        for mask in 0u32..(1 << n) {
            let signs: Vec<i32> = (0..n)
                .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect();
            if diffeo::permutation_preserves(&terms, &lookup, &perm, &signs) {
                found.push((perm.clone(), signs));
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    found
}

/// The signed permutations preserving `⋆φ₀`, computed once.
pub fn star_phi0_symmetries() -> &'static [(Vec<usize>, Vec<i32>)] {
    static SYMS: std::sync::OnceLock<Vec<(Vec<usize>, Vec<i32>)>> = std::sync::OnceLock::new();
    SYMS.get_or_init(|| preserving_signed_permutations(&crate::g2::star_phi0()))
}
