//! JSON documents for forms, vector fields and polynomial maps. Coefficients
//! are polynomial strings so that documents stay exact and hand-writable:
//!
//! ```json
//! {"kind": "form", "n": 7, "degree": 2,
//!  "terms": [{"idx": [1, 2], "coeff": "3/2*x1^2*x4 - x7"}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{DifferentialForm, MultiIndex, VectorField};
use crate::morphism::PolyDiffeo;
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub idx: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FormDocument {
    Form {
        n: usize,
        degree: usize,
        terms: Vec<TermDocument>,
    },
    Field {
        n: usize,
        components: Vec<String>,
    },
    Diffeo {
        n: usize,
        components: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        inverse: Option<Vec<String>>,
    },
}

/// A decoded document.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Form(DifferentialForm),
    Field(VectorField),
    Diffeo(PolyDiffeo),
}

fn parse_all(items: &[String], n: usize) -> Result<Vec<Polynomial>> {
    items.iter().map(|s| Polynomial::parse(s, n)).collect()
}

fn print_all(items: &[Polynomial]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

impl FormDocument {
    pub fn from_form(a: &DifferentialForm) -> Self {
        FormDocument::Form {
            n: a.n(),
            degree: a.degree(),
            terms: a
                .terms()
                .map(|(idx, p)| TermDocument {
                    idx: idx.to_vec(),
                    coeff: p.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_field(x: &VectorField) -> Self {
        FormDocument::Field {
            n: x.n(),
            components: print_all(x.components()),
        }
    }

    pub fn from_diffeo(psi: &PolyDiffeo) -> Self {
        FormDocument::Diffeo {
            n: psi.n(),
            components: print_all(psi.forward()),
            inverse: Some(print_all(psi.inverse())),
        }
    }

    pub fn from_document(d: &Document) -> Self {
        match d {
            Document::Form(a) => Self::from_form(a),
            Document::Field(x) => Self::from_field(x),
            Document::Diffeo(p) => Self::from_diffeo(p),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FormDocument::Form { .. } => "form",
            FormDocument::Field { .. } => "field",
            FormDocument::Diffeo { .. } => "diffeo",
        }
    }

    pub fn decode(&self) -> Result<Document> {
        match self {
            FormDocument::Form { n, degree, terms } => {
                let mut out = DifferentialForm::zero(*n, *degree);
                for t in terms {
                    if t.idx.len() != *degree {
                        return Err(Error::Document(format!(
                            "term {:?} has {} indices in a degree-{degree} form",
                            t.idx,
                            t.idx.len()
                        )));
                    }
                    let idx = MultiIndex::new(&t.idx, *n)?;
                    let coeff = Polynomial::parse(&t.coeff, *n)?;
                    out = out.add(&DifferentialForm::monomial(*n, idx, coeff))?;
                }
                Ok(Document::Form(out))
            }
            FormDocument::Field { n, components } => {
                if components.len() != *n {
                    return Err(Error::Document(format!(
                        "field needs {n} components, got {}",
                        components.len()
                    )));
                }
                Ok(Document::Field(VectorField::new(parse_all(components, *n)?)?))
            }
            FormDocument::Diffeo { n, components, inverse } => {
                if components.len() != *n {
                    return Err(Error::Document(format!(
                        "map needs {n} components, got {}",
                        components.len()
                    )));
                }
                let forward = parse_all(components, *n)?;
                let psi = match inverse {
                    Some(inv) => PolyDiffeo::new(forward, parse_all(inv, *n)?)?,
                    None => PolyDiffeo::from_forward(forward)?,
                };
                Ok(Document::Diffeo(psi))
            }
        }
    }

    pub fn to_form(&self) -> Result<DifferentialForm> {
        match self.decode()? {
            Document::Form(a) => Ok(a),
            _ => Err(Error::Document(format!(
                "expected a form document, found {}",
                self.kind()
            ))),
        }
    }

    pub fn to_field(&self) -> Result<VectorField> {
        match self.decode()? {
            Document::Field(x) => Ok(x),
            _ => Err(Error::Document(format!(
                "expected a field document, found {}",
                self.kind()
            ))),
        }
    }

    pub fn to_diffeo(&self) -> Result<PolyDiffeo> {
        match self.decode()? {
            Document::Diffeo(p) => Ok(p),
            _ => Err(Error::Document(format!(
                "expected a diffeo document, found {}",
                self.kind()
            ))),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents are plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::random::Sampler;
    use proptest::prelude::*;

    #[test]
    fn parses_handwritten_form() {
        let doc = FormDocument::from_json(
            r#"{"kind": "form", "n": 7, "degree": 2,
                "terms": [{"idx": [1, 2], "coeff": "3/2*x1^2*x4 - x7"}, {"idx": [3, 5], "coeff": "0"}]}"#,
        )
        .unwrap();
        let a = doc.to_form().unwrap();
        assert_eq!(a.num_terms(), 1);
        assert_eq!(a.coeff_of(&[1, 2]).num_terms(), 2);
    }

    #[test]
    fn rejects_bad_documents() {
        let bad_idx = r#"{"kind": "form", "n": 7, "degree": 2, "terms": [{"idx": [2, 1], "coeff": "1"}]}"#;
        assert!(matches!(
            FormDocument::from_json(bad_idx).unwrap().to_form(),
            Err(Error::InvalidMultiIndex { .. })
        ));
        let bad_var = r#"{"kind": "field", "n": 7, "components": ["x8","0","0","0","0","0","0"]}"#;
        assert!(matches!(
            FormDocument::from_json(bad_var).unwrap().to_field(),
            Err(Error::VariableOutOfRange { .. })
        ));
        assert!(matches!(
            FormDocument::from_json("{\"kind\": \"tensor\"}"),
            Err(Error::Document(_))
        ));
        let field = r#"{"kind": "field", "n": 7, "components": ["1","0","0","0","0","0","0"]}"#;
        assert!(matches!(
            FormDocument::from_json(field).unwrap().to_form(),
            Err(Error::Document(_))
        ));
    }

    #[test]
    fn diffeo_inverse_is_optional() {
        let doubling =
            r#"{"kind": "diffeo", "n": 7, "components": ["2*x1","2*x2","2*x3","2*x4","2*x5","2*x6","2*x7"]}"#;
        let psi = FormDocument::from_json(doubling).unwrap().to_diffeo().unwrap();
        assert_eq!(psi.inverse()[0], Polynomial::var(7, 1).scale(&crate::poly::ratio(1, 2)));
        let wrong = r#"{"kind": "diffeo", "n": 7, "components": ["2*x1","x2","x3","x4","x5","x6","x7"],
                        "inverse": ["x1","x2","x3","x4","x5","x6","x7"]}"#;
        assert!(matches!(
            FormDocument::from_json(wrong).unwrap().to_diffeo(),
            Err(Error::NotInvertible(_))
        ));
        let shear = PolyDiffeo::unipotent(
            (1..=7)
                .map(|i| {
                    if i == 1 {
                        Polynomial::parse("x2^2 - 3*x5", 7).unwrap()
                    } else {
                        Polynomial::zero(7)
                    }
                })
                .collect(),
        )
        .unwrap();
        let doc = FormDocument::from_diffeo(&shear);
        assert_eq!(
            FormDocument::from_json(&doc.to_json()).unwrap().to_diffeo().unwrap(),
            shear
        );
    }

    #[test]
    fn sampled_round_trips() {
        let mut s = Sampler::new(12);
        for k in 0..=4 {
            let a = s.form(7, k).scale(&crate::poly::ratio(3, 7));
            let doc = FormDocument::from_form(&a);
            let back = FormDocument::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_form().unwrap(), a);
        }
        let x = s.field(7);
        assert_eq!(FormDocument::from_field(&x).to_field().unwrap(), x);
        assert_eq!(
            FormDocument::from_form(&DifferentialForm::function(Polynomial::constant(7, rat(0))))
                .to_form()
                .unwrap()
                .degree(),
            0
        );
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(seed in any::<u64>(), degree in 0usize..=7) {
            let a = Sampler::new(seed).form(7, degree);
            let doc = FormDocument::from_form(&a);
            let text = doc.to_json();
            let back = FormDocument::from_json(&text).unwrap();
            prop_assert_eq!(back.to_json(), text);
            prop_assert_eq!(back.to_form().unwrap(), a);
        }
    }
}
