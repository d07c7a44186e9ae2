use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::field::VectorField;
use super::multi_index::{MultiIndex, MAX_DIM};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// A differential form of fixed degree on `R^n` with polynomial
/// coefficients, stored sparsely by basis multi-index.
///
/// Degrees above `n` are representable but such a form is always zero; this
/// keeps `wedge` and `d` total.
#[derive(Clone, PartialEq, Eq)]
pub struct DifferentialForm {
    n: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, Polynomial>,
}

impl DifferentialForm {
    pub fn zero(n: usize, degree: usize) -> Self {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        DifferentialForm {
            n,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The 0-form `f`.
    pub fn function(f: Polynomial) -> Self {
        let mut out = Self::zero(f.nvars(), 0);
        out.add_term(MultiIndex::EMPTY, f);
        out
    }

    /// `dx^{i1} ∧ ... ∧ dx^{ik}` with unit coefficient.
    pub fn basis(n: usize, indices: &[usize]) -> Result<Self> {
        let idx = MultiIndex::new(indices, n)?;
        Ok(Self::monomial(n, idx, Polynomial::one(n)))
    }

    pub fn monomial(n: usize, idx: MultiIndex, coeff: Polynomial) -> Self {
        let mut out = Self::zero(n, idx.degree());
        out.add_term(idx, coeff);
        out
    }

    /// Constant-coefficient form from `(indices, integer)` pairs.
    pub fn from_constants(n: usize, degree: usize, terms: &[(&[usize], i64)]) -> Result<Self> {
        let mut out = Self::zero(n, degree);
        for (idx, c) in terms {
            let mi = MultiIndex::new(idx, n)?;
            if mi.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: mi.degree(),
                });
            }
            out.add_term(mi, Polynomial::constant(n, crate::poly::rat(*c)));
        }
        Ok(out)
    }

    pub fn from_terms(
        n: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, Polynomial)>,
    ) -> Result<Self> {
        let mut out = Self::zero(n, degree);
        for (idx, p) in terms {
            if idx.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: idx.degree(),
                });
            }
            if idx.max_index() > n {
                return Err(Error::InvalidMultiIndex {
                    indices: idx.to_vec(),
                    n,
                });
            }
            if p.nvars() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: p.nvars(),
                });
            }
            out.add_term(idx, p);
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: MultiIndex) -> Polynomial {
        self.terms
            .get(&idx)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.n))
    }

    /// Coefficient of `dx^{indices}`; panics on an invalid index list.
    pub fn coeff_of(&self, indices: &[usize]) -> Polynomial {
        self.coeff(MultiIndex::new(indices, self.n).expect("valid multi-index"))
    }

    /// Largest total degree among the coefficients.
    pub fn coeff_degree(&self) -> u32 {
        self.terms.values().map(Polynomial::degree).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.values().all(Polynomial::is_constant)
    }

    pub(crate) fn add_term(&mut self, idx: MultiIndex, p: Polynomial) {
        debug_assert_eq!(idx.degree(), self.degree);
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(p);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &p;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same_space(&self, other: &DifferentialForm) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (idx, p) in &other.terms {
            out.add_term(*idx, p.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (idx, p) in &other.terms {
            out.add_term(*idx, -p);
        }
        Ok(out)
    }

    pub fn neg(&self) -> DifferentialForm {
        self.map_coeffs(|p| -p)
    }

    pub fn scale(&self, c: &Rational) -> DifferentialForm {
        if c.is_zero() {
            return Self::zero(self.n, self.degree);
        }
        self.map_coeffs(|p| p.scale(c))
    }

    /// Multiplication by a function.
    pub fn scale_poly(&self, f: &Polynomial) -> Result<DifferentialForm> {
        if f.nvars() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: f.nvars(),
            });
        }
        Ok(self.map_coeffs(|p| p * f))
    }

    /// Applies `f` to every coefficient, dropping any that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> DifferentialForm {
        let mut out = Self::zero(self.n, self.degree);
        for (idx, p) in &self.terms {
            out.add_term(*idx, f(p));
        }
        out
    }

    pub fn wedge(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Self::zero(self.n, self.degree + other.degree);
        if out.degree > self.n {
            return Ok(out);
        }
        for (ia, pa) in &self.terms {
            for (ib, pb) in &other.terms {
                if let Some(sign) = ia.wedge_sign(*ib) {
                    let prod = pa * pb;
                    let idx = MultiIndex::from_bits(ia.bits() | ib.bits());
                    out.add_term(idx, if sign > 0 { prod } else { -prod });
                }
            }
        }
        Ok(out)
    }

    /// `X ⌟ a`, contraction in the first slot:
    /// `X ⌟ dx^I = Σ_j (-1)^(j-1) X^{i_j} dx^{I \ i_j}`.
    pub fn interior(&self, x: &VectorField) -> Result<DifferentialForm> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n,
            });
        }
        if self.degree == 0 {
            return Err(Error::ContractionOfFunction);
        }
        let mut out = Self::zero(self.n, self.degree - 1);
        for (idx, p) in &self.terms {
            for (pos, i) in idx.iter().enumerate() {
                let xi = x.component(i);
                if xi.is_zero() {
                    continue;
                }
                let prod = xi * p;
                out.add_term(idx.remove(i), if pos % 2 == 0 { prod } else { -prod });
            }
        }
        Ok(out)
    }

    /// Exterior derivative. For a top-degree form the result is the zero
    /// form of degree `n + 1`.
    pub fn d(&self) -> DifferentialForm {
        let mut out = Self::zero(self.n, self.degree + 1);
        if self.degree >= self.n {
            return out;
        }
        for (idx, p) in &self.terms {
            for m in 1..=self.n {
                if idx.contains(m) {
                    continue;
                }
                let dp = p.partial(m);
                if dp.is_zero() {
                    continue;
                }
                let sign = MultiIndex::single(m).wedge_sign(*idx).expect("disjoint");
                let new_idx = MultiIndex::from_bits(idx.bits() | (1 << (m - 1)));
                out.add_term(new_idx, if sign > 0 { dp } else { -dp });
            }
        }
        out
    }

    /// `L_X a = d(X⌟a) + X⌟da`.
    pub fn lie_derivative(&self, x: &VectorField) -> Result<DifferentialForm> {
        if x.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n,
            });
        }
        let second = self.d().interior(x)?;
        if self.degree == 0 {
            return Ok(second);
        }
        self.interior(x)?.d().add(&second)
    }

    /// Substitutes a rational point into every coefficient.
    pub fn evaluate(&self, point: &[Rational]) -> Result<DifferentialForm> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: point.len(),
            });
        }
        Ok(self.map_coeffs(|p| Polynomial::constant(self.n, p.eval(point))))
    }

    /// Coefficients `a(x + shift)`; the pullback along a translation.
    pub fn translate(&self, shift: &[Rational]) -> DifferentialForm {
        self.map_coeffs(|p| p.translate(shift))
    }

    /// Re-expresses on `R^target` with every index and variable shifted by
    /// `offset` (the pullback along a coordinate projection).
    pub fn embed(&self, target: usize, offset: usize) -> DifferentialForm {
        let mut out = Self::zero(target, self.degree);
        for (idx, p) in &self.terms {
            out.add_term(idx.shift(offset), p.embed(target, offset));
        }
        out
    }

    /// Evaluates `a(v_1, ..., v_k)` for constant vectors; coefficients are
    /// evaluated at `point`.
    pub fn apply_at(&self, point: &[Rational], vectors: &[Vec<Rational>]) -> Rational {
        assert_eq!(vectors.len(), self.degree);
        let mut acc = Rational::zero();
        for (idx, p) in &self.terms {
            let c = p.eval(point);
            if c.is_zero() {
                continue;
            }
            let rows: Vec<Vec<Rational>> = vectors
                .iter()
                .map(|v| idx.iter().map(|i| v[i - 1].clone()).collect())
                .collect();
            let det = if rows.is_empty() {
                Rational::from_integer(1.into())
            } else {
                crate::linalg::RationalMatrix::from_rows(rows).determinant()
            };
            acc += c * det;
        }
        acc
    }
}

impl fmt::Debug for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}, k={}]({})", self.n, self.degree, self)
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (idx, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if self.degree == 0 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p}) {idx}")?;
            }
        }
        Ok(())
    }
}
