use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// A vector field `Σ X^i ∂_i` on `R^n` with polynomial components.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch {
                left: n,
                right: bad.nvars(),
            });
        }
        Ok(VectorField { components })
    }

    pub fn zero(n: usize) -> Self {
        VectorField {
            components: vec![Polynomial::zero(n); n],
        }
    }

    /// The constant field `e_i` (1-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut out = Self::zero(n);
        out.components[i - 1] = Polynomial::one(n);
        out
    }

    /// The position (Euler) field `Σ x^i ∂_i`.
    pub fn position(n: usize) -> Self {
        VectorField {
            components: (1..=n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    /// Constant field with the given rational components.
    pub fn constant(values: &[Rational]) -> Self {
        let n = values.len();
        VectorField {
            components: values.iter().map(|v| Polynomial::constant(n, v.clone())).collect(),
        }
    }

    /// The linear field `x ↦ A x`, i.e. `X^i = Σ_j A_ij x_j`.
    pub fn linear(a: &crate::linalg::RationalMatrix) -> Self {
        let n = a.rows();
        assert_eq!(a.cols(), n);
        let components = (0..n)
            .map(|i| {
                let mut p = Polynomial::zero(n);
                for j in 0..n {
                    p += &Polynomial::var(n, j + 1).scale(&a[(i, j)]);
                }
                p
            })
            .collect();
        VectorField { components }
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    /// Component `X^i` (1-based).
    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i - 1]
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().map(Polynomial::degree).max().unwrap_or(0)
    }

    fn check_dim(&self, other: &VectorField) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        self.check_dim(other)?;
        Ok(VectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.check_dim(other)?;
        Ok(VectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        VectorField {
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_poly(&self, f: &Polynomial) -> VectorField {
        VectorField {
            components: self.components.iter().map(|p| p * f).collect(),
        }
    }

    /// Directional derivative `X(f) = Σ X^j ∂_j f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(f.nvars());
        for (j, xj) in self.components.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            let df = f.partial(j + 1);
            if !df.is_zero() {
                out += &(xj * &df);
            }
        }
        out
    }

    /// `[X, Y]^i = Σ_j (X^j ∂_j Y^i − Y^j ∂_j X^i)`.
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField> {
        self.check_dim(other)?;
        Ok(VectorField {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(xi, yi)| self.apply(yi) - other.apply(xi))
                .collect(),
        })
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        if point.len() != self.n() {
            return Err(Error::DimensionMismatch {
                left: self.n(),
                right: point.len(),
            });
        }
        Ok(self.components.iter().map(|p| p.eval(point)).collect())
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Vec<f64> {
        self.components.iter().map(|p| p.eval_f64(point)).collect()
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({self})")
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("({p}) d/dx{}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
