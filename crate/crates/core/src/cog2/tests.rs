use super::*;
use crate::g2::{stabilizer_fields, star_phi0};
use crate::poly::{rat, Polynomial};
use crate::random::Sampler;

fn e(i: usize) -> VectorField {
    VectorField::basis(7, i)
}

#[test]
fn solution_space_dimensions() {
    let c = Coclosed::flat();
    assert_eq!(c.field_basis(0).unwrap().len(), 7);
    assert_eq!(c.field_basis(1).unwrap().len(), 21);
    // no quadratic coG2 fields on the flat structure
    assert_eq!(cog2_field_basis().len(), 21);
    for x in cog2_field_basis() {
        assert!(x.degree() <= 1);
        assert!(c.classify(x).unwrap().is_cog2);
    }
}

#[test]
fn classification_examples() {
    let c = Coclosed::flat();
    let t = c.classify(&e(3)).unwrap();
    assert!(t.is_cog2 && t.is_corochesterian);
    let sigma = t.potential.unwrap();
    assert_eq!(sigma.d(), star_phi0().interior(&e(3)).unwrap());

    let rot = VectorField::new(vec![
        Polynomial::var(7, 2),
        -Polynomial::var(7, 1),
        Polynomial::zero(7),
        Polynomial::zero(7),
        Polynomial::zero(7),
        Polynomial::zero(7),
        Polynomial::zero(7),
    ])
    .unwrap();
    let r = c.classify(&rot).unwrap();
    assert!(!r.is_cog2 && !r.is_corochesterian && r.potential.is_none());
    assert!(!r.witness.is_zero());

    let radial = c.classify(&VectorField::position(7)).unwrap();
    assert_eq!(radial.witness, star_phi0().scale(&rat(4)));
}

#[test]
fn potentials_recover_their_fields() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(11);
    for _ in 0..50 {
        let x = fs.field(&mut s);
        let sigma = fs.structure.classify(&x).unwrap().potential.unwrap();
        assert_eq!(fs.structure.coroch_from_sigma(&sigma).unwrap().field, x);
        let f = fs.corochesterian_for(&x, &mut s).unwrap();
        assert_eq!(f.field, x);
    }
}

#[test]
fn closed_two_forms_have_zero_field_and_generic_forms_fail() {
    let c = Coclosed::flat();
    let mut s = Sampler::new(2);
    let beta = s.form(7, 1);
    assert!(c.phi_map(&beta.d()).unwrap().is_zero());
    let bad = DifferentialForm::monomial(7, crate::MultiIndex::new(&[1, 2], 7).unwrap(), Polynomial::var(7, 3));
    assert!(matches!(
        c.coroch_from_sigma(&bad),
        Err(Error::NotCoRochesterian { .. })
    ));
    let three = DifferentialForm::basis(7, &[1, 2, 3]).unwrap();
    assert!(matches!(
        c.coroch_from_sigma(&three),
        Err(Error::UnexpectedDegree { .. })
    ));
}

#[test]
fn lie_bracket_of_cog2_fields_has_explicit_potential() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(5);
    for _ in 0..25 {
        let x1 = fs.field(&mut s);
        let x2 = fs.field(&mut s);
        let f = fs.structure.lie_bracket_is_coroch(&x1, &x2).unwrap();
        assert_eq!(f.field, x1.lie_bracket(&x2).unwrap());
        assert_eq!(fs.structure.phi_map(&f.sigma).unwrap(), f.field);
    }
    let rot = VectorField::linear(&{
        let mut m = crate::linalg::RationalMatrix::zeros(7, 7);
        m[(0, 1)] = rat(1);
        m[(1, 0)] = rat(-1);
        m
    });
    assert!(matches!(
        fs.structure.lie_bracket_is_coroch(&rot, &e(1)),
        Err(Error::NotCoG2 { .. })
    ));
}

#[test]
fn bracket_field_is_reversed_lie_bracket() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(8);
    for _ in 0..25 {
        let a = fs.corochesterian(&mut s).unwrap();
        let b = fs.corochesterian(&mut s).unwrap();
        let ab = fs.structure.bracket(&a, &b).unwrap();
        assert_eq!(ab.field, b.field.lie_bracket(&a.field).unwrap());
        let ba = fs.structure.bracket(&b, &a).unwrap();
        assert_eq!(ab.sigma, ba.sigma.neg());
    }
}

#[test]
fn jacobi_anomaly_matches_exact_term() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(13);
    let mut nonzero = 0;
    for _ in 0..25 {
        let a = fs.corochesterian(&mut s).unwrap();
        let b = fs.corochesterian(&mut s).unwrap();
        let c = fs.corochesterian(&mut s).unwrap();
        let j = fs.structure.jacobi_anomaly(&a, &b, &c).unwrap();
        assert!(j.equal, "lhs {} rhs {}", j.lhs, j.rhs);
        // right-nested reading of the same chain has the opposite sign
        let nested = c.sigma.d().interior(&b.field).unwrap().interior(&a.field).unwrap().d();
        assert_eq!(nested, j.lhs.neg());
        let swapped = fs.structure.jacobi_anomaly(&b, &a, &c).unwrap();
        assert_eq!(swapped.rhs, j.rhs.neg());
        // the anomaly is exact: its homotopy image is a primitive
        if !j.rhs.is_zero() {
            assert_eq!(j.rhs.poincare_antiderivative().unwrap().d(), j.rhs);
        }
        if !j.lhs.is_zero() {
            nonzero += 1;
        }
    }
    assert!(nonzero > 0);
}

#[test]
fn constant_potentials_have_no_anomaly() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(3);
    let f: Vec<_> = [1, 4, 6]
        .iter()
        .map(|&i| fs.corochesterian_for(&e(i), &mut s).unwrap())
        .collect();
    let j = fs.structure.jacobi_anomaly(&f[0], &f[1], &f[2]).unwrap();
    assert!(j.lhs.is_zero() && j.rhs.is_zero() && j.equal);
}

#[test]
fn potentials_of_one_field_differ_by_closed_forms() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(17);
    for _ in 0..10 {
        let x = fs.field(&mut s);
        let a = fs.corochesterian_for(&x, &mut s).unwrap();
        let b = fs.corochesterian_for(&x, &mut s).unwrap();
        assert!(a.sigma.sub(&b.sigma).unwrap().d().is_zero());
    }
}

#[test]
fn kernel_criterion_is_consistent() {
    let fs = CoG2Sampler::flat();
    let mut s = Sampler::new(21);
    let (mut inside, mut outside) = (0, 0);
    for k in 0..30 {
        let a = fs.corochesterian(&mut s).unwrap();
        let b = if k % 3 == 0 {
            fs.corochesterian_for(&a.field.scale(&rat(2)), &mut s).unwrap()
        } else {
            fs.corochesterian(&mut s).unwrap()
        };
        let kc = fs.structure.kernel_criterion(&a, &b).unwrap();
        assert!(kc.consistent());
        if kc.in_kernel {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    assert!(inside > 0 && outside > 0);
}

#[test]
fn translations_commute_and_rotations_do_not() {
    let c = Coclosed::flat();
    let mut s = Sampler::new(1);
    let fs = CoG2Sampler::flat();
    let t1 = fs.corochesterian_for(&e(1), &mut s).unwrap();
    let t2 = fs.corochesterian_for(&e(5), &mut s).unwrap();
    assert!(c.kernel_criterion(&t1, &t2).unwrap().in_kernel);
    let g = stabilizer_fields();
    let r1 = fs.corochesterian_for(&g[0], &mut s).unwrap();
    let noncommuting = g[1..].iter().find(|x| !g[0].lie_bracket(x).unwrap().is_zero()).unwrap();
    let r2 = fs.corochesterian_for(noncommuting, &mut s).unwrap();
    let kc = c.kernel_criterion(&r1, &r2).unwrap();
    assert!(!kc.in_kernel && kc.consistent());
}

#[test]
fn flows_of_cog2_fields_preserve_the_four_form() {
    let mut s = Sampler::new(4);
    let fs = CoG2Sampler::flat();
    for _ in 0..3 {
        let x = fs.field(&mut s);
        let p = s.point_f64(7, 1.0);
        let check = flow_constancy(&x, &star_phi0(), &p, 1e-3);
        assert!(check.max_deviation() < 1e-6, "{check:?}");
    }
    let radial = VectorField::position(7);
    let p = s.point_f64(7, 1.0);
    // Fl_t = e^t · id, so the pullback of ⋆φ₀ is e^{4t} ⋆φ₀
    let check = flow_constancy(&radial, &star_phi0(), &p, 1e-3);
    assert!((check.deviations[2] - (4f64.exp() - 1.0)).abs() < 1e-6);
}

#[test]
fn scaled_structure() {
    let g = crate::G2Structure::from_constant_phi(crate::g2::phi0().scale(&rat(8))).unwrap();
    let c = Coclosed::new(g).unwrap();
    assert_eq!(c.field_basis(1).unwrap().len(), 21);
    let mut s = Sampler::new(9);
    let fs = CoG2Sampler::new(c, 1).unwrap();
    for _ in 0..10 {
        let a = fs.corochesterian(&mut s).unwrap();
        let b = fs.corochesterian(&mut s).unwrap();
        assert_eq!(
            fs.structure.bracket(&a, &b).unwrap().field,
            b.field.lie_bracket(&a.field).unwrap()
        );
    }
}
