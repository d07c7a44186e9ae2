//! Metric induced by a 3-form through
//! `(e_i⌟φ) ∧ (e_j⌟φ) ∧ φ = B_ij dx¹…⁷` and `g = B / (6λ)`, where the
//! volume normalization `λ = (det B / 6⁷)^(1/9)` makes `det g = λ²`, i.e.
//! `g` reproduces its own volume form `λ dx¹…⁷`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::DIM;
use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::linalg::RationalMatrix;
use crate::poly::{rat, Polynomial, Rational};

#[derive(Clone, Debug)]
pub struct MetricAtPoint {
    pub point: Vec<Rational>,
    /// The wedge matrix `B` (exact).
    pub wedge_matrix: RationalMatrix,
    /// `g` when `λ` is rational.
    pub exact: Option<RationalMatrix>,
    /// `g` in floating point; always present.
    pub numeric: Vec<Vec<f64>>,
    /// `λ = sqrt(det g)`, floating point.
    pub volume_factor: f64,
}

fn exact_root(v: &BigInt, k: u32) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let r = v.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *v).then_some(r)
}

/// `k`-th root of a positive rational, when it is rational.
pub(crate) fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = exact_root(q.numer(), k)?;
    let d = exact_root(q.denom(), k)?;
    Some(Rational::new(n, d))
}

/// The matrix `B` at `point`.
pub fn wedge_matrix(phi: &DifferentialForm, point: &[Rational]) -> Result<RationalMatrix> {
    if phi.n() != DIM || phi.degree() != 3 {
        return Err(Error::UnexpectedDegree {
            expected: 3,
            found: phi.degree(),
        });
    }
    let at = phi.evaluate(point)?;
    let contractions: Vec<DifferentialForm> = (1..=DIM)
        .map(|i| at.interior(&VectorField::basis(DIM, i)))
        .collect::<Result<_>>()?;
    let mut b = RationalMatrix::zeros(DIM, DIM);
    for i in 0..DIM {
        let left = contractions[i].wedge(&at)?;
        for j in i..DIM {
            let top = contractions[j].wedge(&left)?;
            let v = top.coeff(MultiIndex::full(DIM)).constant_term();
            b[(i, j)] = v.clone();
            b[(j, i)] = v;
        }
    }
    Ok(b)
}

/// Metric induced by `phi` at `point`. `Degenerate` when `B` is not
/// positive definite there.
pub fn metric_from_phi(phi: &DifferentialForm, point: &[Rational]) -> Result<MetricAtPoint> {
    let b = wedge_matrix(phi, point)?;
    let det = b.determinant();
    if !det.is_positive() || !b.is_positive_definite() {
        return Err(Error::Degenerate);
    }
    let six7 = rat(6_i64.pow(7));
    let ratio = &det / &six7;
    let exact = rational_root(&ratio, 9).map(|lambda| {
        let scale = (rat(6) * lambda).recip();
        let mut g = b.clone();
        for i in 0..DIM {
            for j in 0..DIM {
                g[(i, j)] = &b[(i, j)] * &scale;
            }
        }
        g
    });
    let lambda = (ratio.to_f64().unwrap_or(f64::NAN).ln() / 9.0).exp();
    let numeric = b
        .to_f64()
        .into_iter()
        .map(|row| row.into_iter().map(|v| v / (6.0 * lambda)).collect())
        .collect();
    Ok(MetricAtPoint {
        point: point.to_vec(),
        wedge_matrix: b,
        exact,
        numeric,
        volume_factor: lambda,
    })
}

/// `(X × Y)^k = Σ_l g^{kl} φ(X, Y, e_l)` for a constant metric.
pub fn cross_product(
    x: &VectorField,
    y: &VectorField,
    phi: &DifferentialForm,
    metric: &RationalMatrix,
) -> Result<VectorField> {
    let inv = metric.inverse().ok_or(Error::SingularMetric)?;
    // φ(X, Y, ·) = Y ⌟ (X ⌟ φ)
    let one_form = phi.interior(x)?.interior(y)?;
    let n = phi.n();
    let lowered: Vec<Polynomial> = (1..=n).map(|l| one_form.coeff(MultiIndex::single(l))).collect();
    let components = (0..n)
        .map(|k| {
            let mut p = Polynomial::zero(n);
            for (l, w) in lowered.iter().enumerate() {
                if !inv[(k, l)].is_zero() && !w.is_zero() {
                    p += &w.scale(&inv[(k, l)]);
                }
            }
            p
        })
        .collect();
    VectorField::new(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2::phi0;
    use crate::random::Sampler;

    #[test]
    fn flat_wedge_matrix_is_six_identity() {
        let mut s = Sampler::new(5);
        let p = s.point(7);
        let b = wedge_matrix(&phi0(), &p).unwrap();
        let mut six = RationalMatrix::identity(7);
        for i in 0..7 {
            six[(i, i)] = rat(6);
        }
        assert_eq!(b, six);
        let g = metric_from_phi(&phi0(), &p).unwrap();
        assert_eq!(g.exact.unwrap(), RationalMatrix::identity(7));
        assert!((g.volume_factor - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scaling_law() {
        let origin = vec![rat(0); 7];
        let g = metric_from_phi(&phi0().scale(&rat(8)), &origin).unwrap();
        let mut four = RationalMatrix::identity(7);
        for i in 0..7 {
            four[(i, i)] = rat(4);
        }
        assert_eq!(g.exact.unwrap(), four);
        // c = 2^(1/3): irrational normalization, numeric tier only
        let g2 = metric_from_phi(&phi0().scale(&rat(2)), &origin).unwrap();
        assert!(g2.exact.is_none());
        let expected = 2f64.powf(2.0 / 3.0);
        for i in 0..7 {
            for j in 0..7 {
                let want = if i == j { expected } else { 0.0 };
                assert!((g2.numeric[i][j] - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn single_term_is_degenerate() {
        let origin = vec![rat(0); 7];
        let a = DifferentialForm::basis(7, &[1, 2, 3]).unwrap();
        // direct expansion: only rows 1..3 can be nonzero, so B is singular
        let b = wedge_matrix(&a, &origin).unwrap();
        assert!(b.determinant().is_zero());
        assert!(matches!(metric_from_phi(&a, &origin), Err(Error::Degenerate)));
    }

    #[test]
    fn reversed_orientation_is_degenerate() {
        let origin = vec![rat(0); 7];
        assert!(matches!(
            metric_from_phi(&phi0().neg(), &origin),
            Err(Error::Degenerate)
        ));
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&rat(512), 9), Some(rat(2)));
        assert_eq!(
            rational_root(&crate::poly::ratio(1, 512), 9),
            Some(crate::poly::ratio(1, 2))
        );
        assert_eq!(rational_root(&rat(2), 9), None);
    }
}
