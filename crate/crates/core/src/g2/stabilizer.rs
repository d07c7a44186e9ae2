//! The stabilizer of `⋆φ₀` (and of `φ₀`) inside `gl(7, ℚ)`.
//!
//! `A` acts on forms as the derivation extending `dx^i ↦ Σ_j A_ij dx^j`,
//! which is `L_{X_A}` on constant forms for the linear field `X_A = A x`.
//! For a basis matrix `E_ij` the action is `α ↦ dx^j ∧ (e_i ⌟ α)`.

use crate::error::Result;
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::Rational;

/// Matrix of `A ↦ A·α` for a constant k-form `α`; rows index `Λ^k`
/// basis, columns index `A_ij` in row-major order.
pub fn induced_action_matrix(alpha: &DifferentialForm) -> Result<RationalMatrix> {
    let n = alpha.n();
    let basis = MultiIndex::all(n, alpha.degree());
    let mut m = RationalMatrix::zeros(basis.len(), n * n);
    for i in 1..=n {
        let contracted = alpha.interior(&VectorField::basis(n, i))?;
        for j in 1..=n {
            let image = DifferentialForm::basis(n, &[j])?.wedge(&contracted)?;
            let col = (i - 1) * n + (j - 1);
            for (r, idx) in basis.iter().enumerate() {
                m[(r, col)] = image.coeff(*idx).constant_term();
            }
        }
    }
    Ok(m)
}

/// Basis of `{A : A·α = 0}` as 7×7 matrices.
pub fn stabilizer_basis(alpha: &DifferentialForm) -> Result<Vec<RationalMatrix>> {
    let n = alpha.n();
    let m = induced_action_matrix(alpha)?;
    Ok(m.nullspace()
        .into_iter()
        .map(|v| RationalMatrix::from_rows(v.chunks(n).map(<[Rational]>::to_vec).collect()))
        .collect())
}

/// The stabilizer of `⋆φ₀` realized as linear vector fields.
pub fn stabilizer_fields() -> &'static [VectorField] {
    static FIELDS: std::sync::OnceLock<Vec<VectorField>> = std::sync::OnceLock::new();
    FIELDS.get_or_init(|| {
        stabilizer_basis(&super::star_phi0())
            .expect("constant 4-form")
            .iter()
            .map(VectorField::linear)
            .collect()
    })
}

/// Flattens matrices into row vectors for rank comparisons.
pub(crate) fn flatten(mats: &[RationalMatrix]) -> RationalMatrix {
    RationalMatrix::from_rows(
        mats.iter()
            .map(|m| (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect())
            .collect(),
    )
}

/// Dimension of the stabilizers of `⋆φ₀` and `φ₀`, and of their sum.
pub fn stabilizer_dimensions() -> Result<(usize, usize, usize)> {
    let a = stabilizer_basis(&super::star_phi0())?;
    let b = stabilizer_basis(&super::phi0())?;
    let mut both = a.clone();
    both.extend(b.iter().cloned());
    Ok((a.len(), b.len(), flatten(&both).rank()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::{phi0, star_phi0};

    #[test]
    fn dimension_is_fourteen_for_both_forms() {
        let (a, b, sum) = stabilizer_dimensions().unwrap();
        assert_eq!((a, b, sum), (14, 14, 14));
    }

    #[test]
    fn action_agrees_with_lie_derivative() {
        for a in stabilizer_basis(&star_phi0()).unwrap() {
            let x = VectorField::linear(&a);
            assert!(star_phi0().lie_derivative(&x).unwrap().is_zero());
            assert!(phi0().lie_derivative(&x).unwrap().is_zero());
            // stabilizer elements are skew (g2 ⊂ so(7))
            assert_eq!(a.transpose(), {
                let mut neg = a.clone();
                for i in 0..7 {
                    for j in 0..7 {
                        neg[(i, j)] = -a[(i, j)].clone();
                    }
                }
                neg
            });
        }
    }

    #[test]
    fn matrix_columns_match_lie_derivative_of_linear_fields() {
        let m = induced_action_matrix(&star_phi0()).unwrap();
        let basis = MultiIndex::all(7, 4);
        for col in [0usize, 8, 13, 30, 48] {
            let mut e = RationalMatrix::zeros(7, 7);
            e[(col / 7, col % 7)] = crate::poly::rat(1);
            let lie = star_phi0().lie_derivative(&VectorField::linear(&e)).unwrap();
            for (r, idx) in basis.iter().enumerate() {
                assert_eq!(m[(r, col)], lie.coeff(*idx).constant_term());
            }
        }
    }
}
