//! Exact multilinear calculus on `R^n`: sparse polynomial-coefficient
//! forms, wedge, contraction, `d`, Lie derivative, Lie bracket and the
//! radial homotopy operator.

mod field;
mod form;
mod homotopy;
mod multi_index;

pub use field::VectorField;
pub use form::DifferentialForm;
pub use homotopy::gradient;
pub use multi_index::{MultiIndex, MAX_DIM};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::{phi0, star_phi0};
    use crate::poly::{rat, ratio, Polynomial};
    use crate::random::Sampler;

    const TRIALS: usize = 50;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(7, i)
    }

    fn basis(idx: &[usize]) -> DifferentialForm {
        DifferentialForm::basis(7, idx).unwrap()
    }

    /// Sign of sorting `seq` by adjacent swaps, or `None` on a repeat.
    fn naive_sort_sign(seq: &[usize]) -> Option<(Vec<usize>, i32)> {
        let mut v = seq.to_vec();
        let mut sign = 1;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] == v[j + 1] {
                    return None;
                }
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((v, sign))
    }

    #[test]
    fn wedge_of_basis_covectors() {
        assert_eq!(basis(&[1]).wedge(&basis(&[2])).unwrap(), basis(&[1, 2]));
        assert!(basis(&[1, 2]).wedge(&basis(&[1, 2])).unwrap().is_zero());
        assert_eq!(basis(&[2]).wedge(&basis(&[1])).unwrap(), basis(&[1, 2]).neg());
    }

    #[test]
    fn wedge_dimension_mismatch() {
        let a = DifferentialForm::basis(7, &[1]).unwrap();
        let b = DifferentialForm::basis(14, &[1]).unwrap();
        assert!(matches!(a.wedge(&b), Err(crate::Error::DimensionMismatch { .. })));
    }

    #[test]
    fn phi0_wedge_star_phi0_matches_naive_expansion() {
        // oracle: expand term products with bubble-sort signs
        let phi: [(&[usize], i64); 7] = [
            (&[1, 2, 3], 1),
            (&[1, 4, 5], 1),
            (&[1, 6, 7], 1),
            (&[2, 4, 6], 1),
            (&[2, 5, 7], -1),
            (&[3, 4, 7], -1),
            (&[3, 5, 6], -1),
        ];
        let psi: [(&[usize], i64); 7] = [
            (&[4, 5, 6, 7], 1),
            (&[2, 3, 6, 7], 1),
            (&[2, 3, 4, 5], 1),
            (&[1, 3, 5, 7], 1),
            (&[1, 3, 4, 6], -1),
            (&[1, 2, 5, 6], -1),
            (&[1, 2, 4, 7], -1),
        ];
        let mut top = 0i64;
        for (a, ca) in &phi {
            for (b, cb) in &psi {
                let seq: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                if let Some((sorted, s)) = naive_sort_sign(&seq) {
                    assert_eq!(sorted, (1..=7).collect::<Vec<_>>());
                    top += s as i64 * ca * cb;
                }
            }
        }
        assert_eq!(top, 7);
        let w = phi0().wedge(&star_phi0()).unwrap();
        assert_eq!(w, basis(&[1, 2, 3, 4, 5, 6, 7]).scale(&rat(top)));
    }

    #[test]
    fn add_and_scale() {
        let a = basis(&[1]);
        assert_eq!(a.add(&a).unwrap(), a.scale(&rat(2)));
        assert!(phi0().scale(&rat(0)).is_zero());
        assert_eq!(phi0().scale(&rat(0)).degree(), 3);
        assert!(phi0().add(&phi0().scale(&rat(-1))).unwrap().is_zero());
        assert!(matches!(
            basis(&[1]).add(&basis(&[1, 2])),
            Err(crate::Error::DegreeMismatch { .. })
        ));
        let wide = DifferentialForm::basis(14, &[1]).unwrap();
        assert!(matches!(
            basis(&[1]).add(&wide),
            Err(crate::Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn interior_examples() {
        let e1 = VectorField::basis(7, 1);
        assert_eq!(basis(&[1, 2, 3]).interior(&e1).unwrap(), basis(&[2, 3]));

        // oracle: naive contraction of each term containing index 4
        let e4 = VectorField::basis(7, 4);
        let expected = DifferentialForm::from_constants(7, 2, &[(&[1, 5], -1), (&[2, 6], -1), (&[3, 7], 1)]).unwrap();
        assert_eq!(phi0().interior(&e4).unwrap(), expected);

        let mut s = Sampler::new(7);
        for _ in 0..10 {
            let v = s.field(7);
            let twice = star_phi0().interior(&v).unwrap().interior(&v).unwrap();
            assert!(twice.is_zero());
        }
    }

    #[test]
    fn interior_of_function_is_an_error() {
        let f = DifferentialForm::function(x(1));
        assert!(matches!(
            f.interior(&VectorField::basis(7, 1)),
            Err(crate::Error::ContractionOfFunction)
        ));
    }

    #[test]
    fn exterior_derivative_examples() {
        let a = DifferentialForm::monomial(7, MultiIndex::single(2), x(1));
        assert_eq!(a.d(), basis(&[1, 2]));
        assert!(phi0().d().is_zero());
        let mut s = Sampler::new(11);
        for _ in 0..10 {
            assert!(s.form(7, 2).d().d().is_zero());
        }
        let top = DifferentialForm::monomial(7, MultiIndex::full(7), x(3));
        assert!(top.d().is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        assert!(star_phi0().lie_derivative(&VectorField::basis(7, 1)).unwrap().is_zero());

        let mut s = Sampler::new(13);
        for _ in 0..10 {
            let v = s.field(7);
            let a = s.form(7, 2);
            assert_eq!(a.d().lie_derivative(&v).unwrap(), a.lie_derivative(&v).unwrap().d());
        }
    }

    #[test]
    fn rotation_does_not_preserve_star_phi0() {
        // X = x2 ∂1 − x1 ∂2, i.e. A = E_12 − E_21 acting linearly.
        let rot = VectorField::new(
            [x(2), -x(1)]
                .into_iter()
                .chain((3..=7).map(|_| Polynomial::zero(7)))
                .collect(),
        )
        .unwrap();
        let lie = star_phi0().lie_derivative(&rot).unwrap();
        assert!(!lie.is_zero());

        // independent route: derivation action of A on each dx^I, where
        // dx^i ↦ Σ_j A_ij dx^j; here dx^1 ↦ dx^2, dx^2 ↦ −dx^1.
        let mut expected = DifferentialForm::zero(7, 4);
        for (idx, c) in star_phi0().terms() {
            for i in idx.iter() {
                let (target, sign) = match i {
                    1 => (2, 1),
                    2 => (1, -1),
                    _ => continue,
                };
                if idx.contains(target) {
                    continue;
                }
                // replace slot i by target and re-sort
                let seq: Vec<usize> = idx.iter().map(|k| if k == i { target } else { k }).collect();
                let (sorted, s) = naive_sort_sign(&seq).unwrap();
                let term = DifferentialForm::monomial(
                    7,
                    MultiIndex::new(&sorted, 7).unwrap(),
                    c.scale(&rat((sign * s) as i64)),
                );
                expected = expected.add(&term).unwrap();
            }
        }
        assert_eq!(lie, expected);
    }

    #[test]
    fn lie_bracket_examples() {
        let e1 = VectorField::basis(7, 1);
        let e2 = VectorField::basis(7, 2);
        assert!(e1.lie_bracket(&e2).unwrap().is_zero());
        let mut s = Sampler::new(17);
        for _ in 0..10 {
            let a = s.field_with(7, 2);
            let b = s.field_with(7, 2);
            let c = s.field_with(7, 2);
            assert!(a.lie_bracket(&a).unwrap().is_zero());
            let j = a
                .lie_bracket(&b)
                .unwrap()
                .lie_bracket(&c)
                .unwrap()
                .add(&b.lie_bracket(&c).unwrap().lie_bracket(&a).unwrap())
                .unwrap()
                .add(&c.lie_bracket(&a).unwrap().lie_bracket(&b).unwrap())
                .unwrap();
            assert!(j.is_zero());
        }
    }

    #[test]
    fn homotopy_examples() {
        let h = basis(&[1, 2]).poincare_antiderivative().unwrap();
        let expected = DifferentialForm::monomial(7, MultiIndex::single(2), x(1).scale(&ratio(1, 2)))
            .sub(&DifferentialForm::monomial(
                7,
                MultiIndex::single(1),
                x(2).scale(&ratio(1, 2)),
            ))
            .unwrap();
        assert_eq!(h, expected);

        let eta = star_phi0().interior(&VectorField::basis(7, 1)).unwrap();
        assert_eq!(eta.poincare_antiderivative().unwrap().d(), eta);

        let not_closed = DifferentialForm::monomial(7, MultiIndex::single(2), x(1));
        match not_closed.poincare_antiderivative() {
            Err(crate::Error::NotClosed { residual }) => assert_eq!(*residual, basis(&[1, 2])),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn homotopy_inverts_d_on_random_closed_forms() {
        let mut s = Sampler::new(19);
        for k in 1..=6 {
            for _ in 0..5 {
                let closed = s.form(7, k - 1).d();
                let h = closed.poincare_antiderivative().unwrap();
                assert_eq!(h.d(), closed, "degree {k}");
            }
        }
        let top = s.form(7, 7);
        assert_eq!(top.poincare_antiderivative().unwrap().d(), top);
    }

    #[test]
    fn centred_homotopy_differs_by_closed_form() {
        let mut s = Sampler::new(23);
        for _ in 0..5 {
            let closed = s.form(7, 2).d();
            let c = s.point(7);
            let h0 = closed.poincare_antiderivative().unwrap();
            let hc = closed.poincare_antiderivative_at(&c).unwrap();
            assert_eq!(hc.d(), closed);
            assert!(hc.sub(&h0).unwrap().d().is_zero());
        }
    }

    #[test]
    fn evaluate_examples() {
        let a = DifferentialForm::monomial(7, MultiIndex::single(2), x(1));
        let mut p = vec![rat(0); 7];
        p[0] = rat(3);
        assert_eq!(a.evaluate(&p).unwrap(), basis(&[2]).scale(&rat(3)));
        let mut s = Sampler::new(29);
        let q = s.point(7);
        assert_eq!(phi0().evaluate(&q).unwrap(), phi0());
        for _ in 0..10 {
            let sigma = s.form(7, 2);
            let q = s.point(7);
            let lhs = sigma.d().evaluate(&q).unwrap();
            // same coefficients, evaluated after differentiating
            for (idx, c) in sigma.d().terms() {
                assert_eq!(lhs.coeff(*idx), Polynomial::constant(7, c.eval(&q)));
            }
        }
        assert!(a.evaluate(&[rat(1)]).is_err());
    }

    #[test]
    fn randomized_identities() {
        let mut s = Sampler::new(31);
        for _ in 0..TRIALS {
            let ka = s.index(4);
            let kb = s.index(4);
            let a = s.form(7, ka);
            let b = s.form(7, kb);
            let c = s.form(7, 1);
            let v = s.field(7);

            // graded commutativity
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            let sign = if (ka * kb).is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(ab, ba.scale(&rat(sign)));

            // associativity
            assert_eq!(ab.wedge(&c).unwrap(), a.wedge(&b.wedge(&c).unwrap()).unwrap());

            // Leibniz for d
            let sa = if ka.is_multiple_of(2) { rat(1) } else { rat(-1) };
            let leibniz = a
                .d()
                .wedge(&b)
                .unwrap()
                .add(&a.wedge(&b.d()).unwrap().scale(&sa))
                .unwrap();
            assert_eq!(ab.d(), leibniz);

            // d^2 = 0
            assert!(a.d().d().is_zero());

            // interior product is a graded derivation
            if ka >= 1 && kb >= 1 {
                let lhs = ab.interior(&v).unwrap();
                let rhs = a
                    .interior(&v)
                    .unwrap()
                    .wedge(&b)
                    .unwrap()
                    .add(&a.wedge(&b.interior(&v).unwrap()).unwrap().scale(&sa))
                    .unwrap();
                assert_eq!(lhs, rhs);
            }

            // Cartan's formula agrees with the derivation rule L(a∧b)
            let lie_ab = ab.lie_derivative(&v).unwrap();
            let rule = a
                .lie_derivative(&v)
                .unwrap()
                .wedge(&b)
                .unwrap()
                .add(&a.wedge(&b.lie_derivative(&v).unwrap()).unwrap())
                .unwrap();
            assert_eq!(lie_ab, rule);

            // [L_X, d] = 0
            assert_eq!(a.d().lie_derivative(&v).unwrap(), a.lie_derivative(&v).unwrap().d());

            // evaluation is a homomorphism for wedge and add
            let q = s.point(7);
            assert_eq!(
                ab.evaluate(&q).unwrap(),
                a.evaluate(&q).unwrap().wedge(&b.evaluate(&q).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn lie_derivative_on_functions_is_directional_derivative() {
        let mut s = Sampler::new(37);
        for _ in 0..10 {
            let f = s.polynomial(7);
            let v = s.field(7);
            let lie = DifferentialForm::function(f.clone()).lie_derivative(&v).unwrap();
            assert_eq!(lie, DifferentialForm::function(v.apply(&f)));
        }
    }

    #[test]
    fn lie_derivative_commutator_is_bracket() {
        // L_[X,Y] = [L_X, L_Y] on forms
        let mut s = Sampler::new(41);
        for _ in 0..10 {
            let a = s.form_with(7, 2, 2, 2);
            let v = s.field_with(7, 2);
            let w = s.field_with(7, 2);
            let lhs = a.lie_derivative(&v.lie_bracket(&w).unwrap()).unwrap();
            let rhs = a
                .lie_derivative(&w)
                .unwrap()
                .lie_derivative(&v)
                .unwrap()
                .sub(&a.lie_derivative(&v).unwrap().lie_derivative(&w).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}
