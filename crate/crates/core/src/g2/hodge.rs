use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex};
use crate::linalg::RationalMatrix;
use crate::poly::{rat, Rational};

fn minor(m: &RationalMatrix, rows: MultiIndex, cols: MultiIndex) -> Rational {
    if rows.degree() == 0 {
        return Rational::one();
    }
    RationalMatrix::from_rows(
        rows.iter()
            .map(|i| cols.iter().map(|j| m[(i - 1, j - 1)].clone()).collect())
            .collect(),
    )
    .determinant()
}

/// Hodge star for a constant metric:
/// `⋆dx^I = √det g · Σ_J det(g⁻¹[I,J]) · sgn(J, Jᶜ) · dx^{Jᶜ}`.
/// For the identity this is the complement sign rule.
pub fn hodge_star(a: &DifferentialForm, metric: &RationalMatrix) -> Result<DifferentialForm> {
    let n = a.n();
    if metric.rows() != n || metric.cols() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: metric.rows(),
        });
    }
    if a.degree() > n {
        return Ok(DifferentialForm::zero(n, 0));
    }
    let k = a.degree();
    let mut out = DifferentialForm::zero(n, n - k);
    if metric == &RationalMatrix::identity(n) {
        for (idx, p) in a.terms() {
            let comp = idx.complement(n);
            let sign = idx.wedge_sign(comp).expect("disjoint");
            out = out.add(&DifferentialForm::monomial(n, comp, p.scale(&rat(sign as i64))))?;
        }
        return Ok(out);
    }
    let inv = metric.inverse().ok_or(Error::SingularMetric)?;
    let det = metric.determinant();
    let root = super::metric::rational_root(&det, 2).ok_or(Error::IrrationalVolume)?;
    let all = MultiIndex::all(n, k);
    for (idx, p) in a.terms() {
        for &j in &all {
            let m = minor(&inv, *idx, j);
            if m.is_zero() {
                continue;
            }
            let comp = j.complement(n);
            let sign = j.wedge_sign(comp).expect("disjoint");
            let c = &root * m * rat(sign as i64);
            out = out.add(&DifferentialForm::monomial(n, comp, p.scale(&c)))?;
        }
    }
    Ok(out)
}

/// `d* = (−1)^k ⋆ d ⋆` on k-forms (dimension 7, Riemannian).
pub fn codifferential(a: &DifferentialForm, metric: &RationalMatrix) -> Result<DifferentialForm> {
    if a.degree() == 0 {
        return Err(Error::UnexpectedDegree { expected: 1, found: 0 });
    }
    let inner = hodge_star(a, metric)?.d();
    let out = hodge_star(&inner, metric)?;
    Ok(if a.degree().is_multiple_of(2) { out } else { out.neg() })
}

/// A constant-coefficient form in floating point, for the numeric tier.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantForm {
    pub n: usize,
    pub degree: usize,
    pub coeffs: BTreeMap<MultiIndex, f64>,
}

impl ConstantForm {
    /// Evaluates an exact form at a point.
    pub fn at_point(a: &DifferentialForm, point: &[f64]) -> Self {
        ConstantForm {
            n: a.n(),
            degree: a.degree(),
            coeffs: a.terms().map(|(i, p)| (*i, p.eval_f64(point))).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &ConstantForm) -> f64 {
        let mut keys: Vec<&MultiIndex> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.dedup();
        keys.iter()
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0.0);
                let b = other.coeffs.get(k).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }
}

pub(crate) fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n)
            .max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))
            .expect("non-empty");
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for i in c + 1..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    det
}

fn inverse_f64(m: &[Vec<f64>]) -> Option<Vec<Vec<f64>>> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))?;
        if a[p][c].abs() < 1e-300 {
            return None;
        }
        a.swap(p, c);
        let piv = a[c][c];
        for v in a[c].iter_mut() {
            *v /= piv;
        }
        for i in 0..n {
            if i != c {
                let f = a[i][c];
                for j in 0..2 * n {
                    a[i][j] -= f * a[c][j];
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Numeric-tier Hodge star of a constant form under a floating-point
/// metric.
pub fn hodge_star_f64(a: &ConstantForm, metric: &[Vec<f64>]) -> Result<ConstantForm> {
    let n = a.n;
    let inv = inverse_f64(metric).ok_or(Error::SingularMetric)?;
    let root = det_f64(metric.to_vec()).sqrt();
    let all = MultiIndex::all(n, a.degree);
    let mut coeffs: BTreeMap<MultiIndex, f64> = BTreeMap::new();
    for (idx, c) in &a.coeffs {
        for &j in &all {
            let sub: Vec<Vec<f64>> = idx
                .iter()
                .map(|r| j.iter().map(|s| inv[r - 1][s - 1]).collect())
                .collect();
            let m = if sub.is_empty() { 1.0 } else { det_f64(sub) };
            if m == 0.0 {
                continue;
            }
            let comp = j.complement(n);
            let sign = j.wedge_sign(comp).expect("disjoint") as f64;
            *coeffs.entry(comp).or_insert(0.0) += root * m * sign * c;
        }
    }
    Ok(ConstantForm {
        n,
        degree: n - a.degree,
        coeffs,
    })
}
