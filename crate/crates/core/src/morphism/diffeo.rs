//! Polynomial diffeomorphisms with polynomial inverses, and pullbacks along
//! arbitrary polynomial maps.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::{Polynomial, Rational};

/// `ψ: R^n → R^n` with an exact polynomial inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyDiffeo {
    forward: Vec<Polynomial>,
    inverse: Vec<Polynomial>,
    jacobian: Vec<Vec<Polynomial>>,
}

fn jacobian_of(map: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    map.iter()
        .map(|c| (1..=c.nvars()).map(|j| c.partial(j)).collect())
        .collect()
}

fn coordinates(n: usize) -> Vec<Polynomial> {
    (1..=n).map(|i| Polynomial::var(n, i)).collect()
}

fn compose(outer: &[Polynomial], inner: &[Polynomial]) -> Vec<Polynomial> {
    outer.iter().map(|p| p.substitute(inner)).collect()
}

impl PolyDiffeo {
    /// Checks both compositions are the identity exactly.
    pub fn new(forward: Vec<Polynomial>, inverse: Vec<Polynomial>) -> Result<Self> {
        let n = forward.len();
        if inverse.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: inverse.len(),
            });
        }
        if let Some(p) = forward.iter().chain(&inverse).find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: p.nvars(),
            });
        }
        let id = coordinates(n);
        if compose(&forward, &inverse) != id || compose(&inverse, &forward) != id {
            return Err(Error::NotInvertible(
                "supplied inverse does not compose to the identity".into(),
            ));
        }
        let jacobian = jacobian_of(&forward);
        Ok(PolyDiffeo {
            forward,
            inverse,
            jacobian,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(coordinates(n), coordinates(n)).expect("identity")
    }

    /// `x ↦ x + c`.
    pub fn translation(c: &[Rational]) -> Self {
        let n = c.len();
        let shift = |sign: i64| -> Vec<Polynomial> {
            (1..=n)
                .map(|i| {
                    &Polynomial::var(n, i) + &Polynomial::constant(n, &c[i - 1] * Rational::from_integer(sign.into()))
                })
                .collect()
        };
        Self::new(shift(1), shift(-1)).expect("translation")
    }

    /// `x ↦ A x + b`.
    pub fn affine(a: &RationalMatrix, b: &[Rational]) -> Result<Self> {
        let n = a.rows();
        let inv = a
            .inverse()
            .ok_or_else(|| Error::NotInvertible("singular linear part".into()))?;
        let apply = |m: &RationalMatrix, shift: &[Rational]| -> Vec<Polynomial> {
            (0..n)
                .map(|i| {
                    let mut p = Polynomial::constant(n, shift[i].clone());
                    for j in 0..n {
                        if !m[(i, j)].is_zero() {
                            p += &Polynomial::var(n, j + 1).scale(&m[(i, j)]);
                        }
                    }
                    p
                })
                .collect()
        };
        let back: Vec<Rational> = inv.mul_vec(b).into_iter().map(|v| -v).collect();
        Self::new(apply(a, b), apply(&inv, &back))
    }

    pub fn linear(a: &RationalMatrix) -> Result<Self> {
        Self::affine(a, &vec![Rational::zero(); a.rows()])
    }

    /// `x ↦ c x`.
    pub fn scaling(n: usize, c: &Rational) -> Result<Self> {
        let mut m = RationalMatrix::identity(n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        Self::linear(&m)
    }

    /// `ψ^i = signs[i] · x_{perm[i]}`, with `perm` a 1-based permutation.
    pub fn signed_permutation(perm: &[usize], signs: &[i32]) -> Result<Self> {
        let n = perm.len();
        let mut m = RationalMatrix::zeros(n, n);
        for (i, (&p, &s)) in perm.iter().zip(signs).enumerate() {
            if p == 0 || p > n || s.abs() != 1 {
                return Err(Error::NotInvertible(format!(
                    "not a signed permutation at slot {}",
                    i + 1
                )));
            }
            m[(i, p - 1)] = Rational::from_integer(s.into());
        }
        Self::linear(&m)
    }

    /// `ψ^i = x_i + p_i` where `p_i` only involves `x_{i+1}, …, x_n`; the
    /// inverse follows by back substitution.
    pub fn unipotent(perturbation: Vec<Polynomial>) -> Result<Self> {
        let n = perturbation.len();
        for (i, p) in perturbation.iter().enumerate() {
            let bad = p.terms().any(|(m, _)| m.exponents()[..=i].iter().any(|&e| e > 0));
            if bad {
                return Err(Error::NotInvertible(format!(
                    "component {} depends on x1..x{}",
                    i + 1,
                    i + 1
                )));
            }
        }
        let forward: Vec<Polynomial> = perturbation
            .iter()
            .enumerate()
            .map(|(i, p)| &Polynomial::var(n, i + 1) + p)
            .collect();
        // x_i = y_i − p_i(x_{i+1}, …), solved from the last coordinate up
        let mut inverse = coordinates(n);
        for i in (0..n).rev() {
            let subs: Vec<Polynomial> = (0..n)
                .map(|j| {
                    if j > i {
                        inverse[j].clone()
                    } else {
                        Polynomial::var(n, j + 1)
                    }
                })
                .collect();
            inverse[i] = &Polynomial::var(n, i + 1) - &perturbation[i].substitute(&subs);
        }
        Self::new(forward, inverse)
    }

    /// Recognizes affine and unipotent upper-triangular maps.
    pub fn from_forward(forward: Vec<Polynomial>) -> Result<Self> {
        let n = forward.len();
        if forward.iter().all(|p| p.degree() <= 1) {
            let mut a = RationalMatrix::zeros(n, n);
            let mut b = vec![Rational::zero(); n];
            for (i, p) in forward.iter().enumerate() {
                b[i] = p.constant_term();
                for j in 0..n {
                    a[(i, j)] = p.partial(j + 1).constant_term();
                }
            }
            return Self::affine(&a, &b);
        }
        let perturbation: Vec<Polynomial> = forward
            .iter()
            .enumerate()
            .map(|(i, p)| p - &Polynomial::var(n, i + 1))
            .collect();
        Self::unipotent(perturbation).map_err(|_| {
            Error::NotInvertible("no inverse supplied and the map is neither affine nor unipotent triangular".into())
        })
    }

    pub fn n(&self) -> usize {
        self.forward.len()
    }

    pub fn forward(&self) -> &[Polynomial] {
        &self.forward
    }

    pub fn inverse(&self) -> &[Polynomial] {
        &self.inverse
    }

    pub fn jacobian(&self) -> &[Vec<Polynomial>] {
        &self.jacobian
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyDiffeo) -> Result<PolyDiffeo> {
        Self::new(
            compose(&self.forward, &inner.forward),
            compose(&inner.inverse, &self.inverse),
        )
    }

    pub fn invert(&self) -> PolyDiffeo {
        PolyDiffeo {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
            jacobian: jacobian_of(&self.inverse),
        }
    }

    pub fn pullback(&self, a: &DifferentialForm) -> Result<DifferentialForm> {
        pullback_by(&self.forward, a)
    }

    /// `dψ⁻¹_{ψ(p)} X_{ψ(p)}`: the field on the domain related to `X`.
    pub fn pushforward_field(&self, x: &VectorField) -> Result<VectorField> {
        let n = self.n();
        if x.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: x.n() });
        }
        let at_psi: Vec<Polynomial> = x.components().iter().map(|c| c.substitute(&self.forward)).collect();
        let comps = self
            .inverse
            .iter()
            .map(|inv| {
                let mut acc = Polynomial::zero(n);
                for (j, xj) in at_psi.iter().enumerate() {
                    if xj.is_zero() {
                        continue;
                    }
                    let d = inv.partial(j + 1);
                    if !d.is_zero() {
                        acc += &(&d.substitute(&self.forward) * xj);
                    }
                }
                acc
            })
            .collect();
        VectorField::new(comps)
    }

    pub fn is_identity(&self) -> bool {
        self.forward == coordinates(self.n())
    }

    pub fn is_affine(&self) -> bool {
        self.forward.iter().all(|p| p.degree() <= 1)
    }

    /// Determinant of the Jacobian when it is constant.
    pub fn constant_jacobian_determinant(&self) -> Option<Rational> {
        if !self.jacobian.iter().flatten().all(Polynomial::is_constant) {
            return None;
        }
        Some(
            RationalMatrix::from_rows(
                self.jacobian
                    .iter()
                    .map(|r| r.iter().map(Polynomial::constant_term).collect())
                    .collect(),
            )
            .determinant(),
        )
    }
}

/// `F^*(a)` for a polynomial map `F: R^m → R^n` given by its `n` components
/// in `m` variables: `F^*(f dx^I) = (f∘F) dF^{i₁} ∧ … ∧ dF^{i_k}`.
pub fn pullback_by(map: &[Polynomial], a: &DifferentialForm) -> Result<DifferentialForm> {
    if map.len() != a.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: map.len(),
        });
    }
    let m = map.first().map(Polynomial::nvars).unwrap_or(0);
    let differentials: Vec<DifferentialForm> = map.iter().map(|c| DifferentialForm::function(c.clone()).d()).collect();
    let mut out = DifferentialForm::zero(m, a.degree());
    for (idx, f) in a.terms() {
        let mut term = DifferentialForm::function(f.substitute(map));
        for i in idx.iter() {
            term = term.wedge(&differentials[i - 1])?;
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Whether a signed permutation preserves a constant form. Distinct
/// multi-indices have distinct images, so the pullback only permutes terms
/// and the comparison can stop at the first mismatch.
pub(crate) fn permutation_preserves(
    terms: &[(MultiIndex, Rational)],
    lookup: &BTreeMap<MultiIndex, Rational>,
    perm: &[usize],
    signs: &[i32],
) -> bool {
    terms.iter().all(|(idx, c)| {
        let mut sign = 1;
        let mut image = MultiIndex::EMPTY;
        for i in idx.iter() {
            let single = MultiIndex::single(perm[i - 1]);
            sign *= signs[i - 1] * image.wedge_sign(single).expect("distinct images");
            image = MultiIndex::from_bits(image.bits() | single.bits());
        }
        lookup
            .get(&image)
            .is_some_and(|t| if sign > 0 { t == c } else { *t == -c })
    })
}
