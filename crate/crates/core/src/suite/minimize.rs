//! Greedy shrinking of failing inputs by deleting single terms.

use crate::document::Document;
use crate::exterior::{DifferentialForm, VectorField};
use crate::poly::Polynomial;

/// Every input obtained from `d` by dropping one monomial term.
fn deletions(d: &Document) -> Vec<Document> {
    match d {
        Document::Form(a) => {
            let mut out = Vec::new();
            for (idx, p) in a.terms() {
                for (m, _) in p.terms() {
                    let mut q = p.clone();
                    q.add_term(m.clone(), -p.coeff(m));
                    let reduced = a
                        .terms()
                        .map(|(i, c)| (*i, if i == idx { q.clone() } else { c.clone() }))
                        .collect::<Vec<_>>();
                    let form = DifferentialForm::from_terms(a.n(), a.degree(), reduced).expect("same shape");
                    out.push(Document::Form(form));
                }
            }
            out
        }
        Document::Field(x) => {
            let mut out = Vec::new();
            for (k, p) in x.components().iter().enumerate() {
                for (m, _) in p.terms() {
                    let mut comps: Vec<Polynomial> = x.components().to_vec();
                    comps[k].add_term(m.clone(), -p.coeff(m));
                    out.push(Document::Field(VectorField::new(comps).expect("same ring")));
                }
            }
            out
        }
        Document::Diffeo(_) => Vec::new(),
    }
}

/// Repeatedly deletes single terms while `still_fails` keeps holding.
/// Maps are left untouched.
pub fn minimize<F>(mut inputs: Vec<Document>, still_fails: F) -> Vec<Document>
where
    F: Fn(&[Document]) -> bool,
{
    loop {
        let mut changed = false;
        'inputs: for i in 0..inputs.len() {
            for candidate in deletions(&inputs[i]) {
                let mut trial = inputs.clone();
                trial[i] = candidate;
                if still_fails(&trial) {
                    inputs = trial;
                    changed = true;
                    break 'inputs;
                }
            }
        }
        if !changed {
            return inputs;
        }
    }
}
