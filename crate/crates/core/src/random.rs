//! Seeded generators for randomized identity checks.
//!
//! Coefficients are integers in `[-9, 9]`, monomials have total degree at
//! most 3. Everything is driven by a ChaCha stream so a seed fully
//! determines the inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::poly::{rat, Monomial, Polynomial, Rational};

pub const DEFAULT_SEED: u64 = 0x6732_c0c1;
pub const COEFF_BOUND: i64 = 9;
pub const MAX_MONOMIAL_DEGREE: u32 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Default for Sampler {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for `(seed, stream)`.
    pub fn derived(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn coeff(&mut self) -> Rational {
        rat(self.int(-COEFF_BOUND, COEFF_BOUND))
    }

    pub fn nonzero_coeff(&mut self) -> Rational {
        loop {
            let c = self.int(-COEFF_BOUND, COEFF_BOUND);
            if c != 0 {
                return rat(c);
            }
        }
    }

    pub fn monomial(&mut self, n: usize, max_degree: u32) -> Monomial {
        let degree = self.rng.gen_range(0..=max_degree);
        let mut exps = vec![0u32; n];
        for _ in 0..degree {
            exps[self.rng.gen_range(0..n)] += 1;
        }
        Monomial::new(exps)
    }

    /// Up to `max_terms` random terms of total degree at most `max_degree`.
    pub fn polynomial_with(&mut self, n: usize, max_terms: usize, max_degree: u32) -> Polynomial {
        let terms = self.rng.gen_range(1..=max_terms);
        let mut p = Polynomial::zero(n);
        for _ in 0..terms {
            let m = self.monomial(n, max_degree);
            let c = self.nonzero_coeff();
            p.add_term(m, c);
        }
        p
    }

    pub fn polynomial(&mut self, n: usize) -> Polynomial {
        self.polynomial_with(n, 3, MAX_MONOMIAL_DEGREE)
    }

    pub fn multi_index(&mut self, n: usize, degree: usize) -> MultiIndex {
        let mut idx: Vec<usize> = (1..=n).collect();
        idx.shuffle(&mut self.rng);
        idx.truncate(degree);
        idx.sort_unstable();
        MultiIndex::new(&idx, n).expect("sorted distinct indices")
    }

    pub fn form_with(&mut self, n: usize, degree: usize, max_terms: usize, max_degree: u32) -> DifferentialForm {
        let mut out = DifferentialForm::zero(n, degree);
        if degree > n {
            return out;
        }
        let terms = self.rng.gen_range(1..=max_terms);
        for _ in 0..terms {
            let idx = self.multi_index(n, degree);
            let p = self.polynomial_with(n, 2, max_degree);
            out = out.add(&DifferentialForm::monomial(n, idx, p)).expect("same space");
        }
        out
    }

    pub fn form(&mut self, n: usize, degree: usize) -> DifferentialForm {
        self.form_with(n, degree, 3, MAX_MONOMIAL_DEGREE)
    }

    pub fn field_with(&mut self, n: usize, max_degree: u32) -> VectorField {
        let comps = (0..n)
            .map(|_| {
                if self.rng.gen_bool(0.5) {
                    self.polynomial_with(n, 2, max_degree)
                } else {
                    Polynomial::zero(n)
                }
            })
            .collect();
        VectorField::new(comps).expect("consistent ring")
    }

    pub fn field(&mut self, n: usize) -> VectorField {
        self.field_with(n, MAX_MONOMIAL_DEGREE)
    }

    /// A rational point with small numerators and denominators.
    pub fn point(&mut self, n: usize) -> Vec<Rational> {
        (0..n)
            .map(|_| {
                let num = self.int(-COEFF_BOUND, COEFF_BOUND);
                let den = self.int(1, 4);
                crate::poly::ratio(num, den)
            })
            .collect()
    }

    pub fn point_f64(&mut self, n: usize, radius: f64) -> Vec<f64> {
        (0..n).map(|_| self.rng.gen_range(-radius..=radius)).collect()
    }
}
