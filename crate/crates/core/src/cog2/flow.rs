//! Numerical flows of polynomial vector fields and pullbacks of forms along
//! them, used as an independent check of the exact Lie-derivative tests.

use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::g2::hodge::{det_f64, ConstantForm};
use crate::poly::Polynomial;

/// Deviation of `(Fl_t^* α)_p` from `α_p` at the sampled times.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowCheck {
    pub times: Vec<f64>,
    pub deviations: Vec<f64>,
}

impl FlowCheck {
    pub fn max_deviation(&self) -> f64 {
        self.deviations.iter().copied().fold(0.0, f64::max)
    }
}

struct Variational {
    field: Vec<Polynomial>,
    jacobian: Vec<Vec<Polynomial>>,
}

impl Variational {
    fn new(x: &VectorField) -> Self {
        let n = x.n();
        Variational {
            field: x.components().to_vec(),
            jacobian: x
                .components()
                .iter()
                .map(|c| (1..=n).map(|j| c.partial(j)).collect())
                .collect(),
        }
    }

    /// State is the point followed by the row-major Jacobian of the flow.
    fn rhs(&self, state: &[f64]) -> Vec<f64> {
        let n = self.field.len();
        let (p, j) = state.split_at(n);
        let mut out: Vec<f64> = self.field.iter().map(|c| c.eval_f64(p)).collect();
        let dx: Vec<Vec<f64>> = self
            .jacobian
            .iter()
            .map(|row| row.iter().map(|c| c.eval_f64(p)).collect())
            .collect();
        for r in 0..n {
            for c in 0..n {
                out.push((0..n).map(|k| dx[r][k] * j[k * n + c]).sum());
            }
        }
        out
    }

    fn step(&self, state: &[f64], h: f64) -> Vec<f64> {
        let axpy = |a: &[f64], k: &[f64], s: f64| -> Vec<f64> { a.iter().zip(k).map(|(a, k)| a + s * k).collect() };
        let k1 = self.rhs(state);
        let k2 = self.rhs(&axpy(state, &k1, h / 2.0));
        let k3 = self.rhs(&axpy(state, &k2, h / 2.0));
        let k4 = self.rhs(&axpy(state, &k3, h));
        state
            .iter()
            .enumerate()
            .map(|(i, s)| s + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
            .collect()
    }
}

fn pullback_at(alpha: &DifferentialForm, state: &[f64]) -> ConstantForm {
    let n = alpha.n();
    let (p, j) = state.split_at(n);
    let mut coeffs = std::collections::BTreeMap::new();
    for target in MultiIndex::all(n, alpha.degree()) {
        let mut acc = 0.0;
        for (k, c) in alpha.terms() {
            let minor: Vec<Vec<f64>> = k
                .iter()
                .map(|r| target.iter().map(|s| j[(r - 1) * n + (s - 1)]).collect())
                .collect();
            let det = if minor.is_empty() { 1.0 } else { det_f64(minor) };
            acc += c.eval_f64(p) * det;
        }
        if acc != 0.0 {
            coeffs.insert(target, acc);
        }
    }
    ConstantForm {
        n,
        degree: alpha.degree(),
        coeffs,
    }
}

/// `(Fl_t^* α)_p` for each requested time, integrating with classical RK4.
pub fn flow_pullback(
    x: &VectorField,
    alpha: &DifferentialForm,
    point: &[f64],
    times: &[f64],
    step: f64,
) -> Vec<ConstantForm> {
    let n = x.n();
    let sys = Variational::new(x);
    let mut state = point.to_vec();
    for r in 0..n {
        for c in 0..n {
            state.push(if r == c { 1.0 } else { 0.0 });
        }
    }
    let mut t = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        while target - t > 1e-12 {
            let h = step.min(target - t);
            state = sys.step(&state, h);
            t += h;
        }
        out.push(pullback_at(alpha, &state));
    }
    out
}

/// Compares `Fl_t^* α` with `α` at `point` for `t` in `{0, ½, 1}`.
pub fn flow_constancy(x: &VectorField, alpha: &DifferentialForm, point: &[f64], step: f64) -> FlowCheck {
    let times = vec![0.0, 0.5, 1.0];
    let base = ConstantForm::at_point(alpha, point);
    let deviations = flow_pullback(x, alpha, point, &times, step)
        .iter()
        .map(|f| f.max_abs_diff(&base))
        .collect();
    FlowCheck { times, deviations }
}
