//! The versioned JSON element format.

use serde::{Deserialize, Serialize};

use crate::affine::{is_regular, DahaElement, DotDiagram, PdElement};
use crate::brauer::{ADElement, BrauerDiagram, Vertex};
use crate::error::{Error, Result};
use crate::exactla::Rational;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Affine,
    Brauer,
    Daha,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDocument {
    pub coeff: Rational,
    /// Vertex pairs: `1..=d` on top, `-1..=-d` on the bottom.
    pub matching: Vec<(i64, i64)>,
    pub top_dots: Vec<u32>,
    pub bottom_dots: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDocument {
    pub schema_version: String,
    pub kind: ElementKind,
    pub d: usize,
    pub terms: Vec<TermDocument>,
}

fn matching_of(g: &BrauerDiagram) -> Vec<(i64, i64)> {
    g.pairs().into_iter().map(|(a, b)| (a.signed(), b.signed())).collect()
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidDocument(msg.into())
}

impl ElementDocument {
    fn new(kind: ElementKind, d: usize, terms: Vec<TermDocument>) -> Self {
        ElementDocument { schema_version: SCHEMA_VERSION.to_string(), kind, d, terms }
    }

    pub fn from_affine(x: &PdElement) -> Self {
        let terms = x
            .terms()
            .iter()
            .map(|(u, c)| TermDocument {
                coeff: c.clone(),
                matching: matching_of(&u.diagram),
                top_dots: u.top.clone(),
                bottom_dots: u.bottom.clone(),
            })
            .collect();
        ElementDocument::new(ElementKind::Affine, x.d(), terms)
    }

    pub fn from_brauer(x: &ADElement) -> Self {
        let d = x.d();
        let terms = x
            .terms()
            .iter()
            .map(|(g, c)| TermDocument { coeff: c.clone(), matching: matching_of(g), top_dots: vec![0; d], bottom_dots: vec![0; d] })
            .collect();
        ElementDocument::new(ElementKind::Brauer, d, terms)
    }

    /// A term `w * v^alpha` is stored as the permutation `w` with `alpha` on its bottom vertices.
    pub fn from_daha(x: &DahaElement) -> Self {
        let d = x.d();
        let terms = x
            .terms()
            .iter()
            .map(|((w, alpha), c)| TermDocument { coeff: c.clone(), matching: matching_of(w), top_dots: vec![0; d], bottom_dots: alpha.clone() })
            .collect();
        ElementDocument::new(ElementKind::Daha, d, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    /// Parses and validates a document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ElementDocument = serde_json::from_str(text).map_err(|e| invalid(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::UnsupportedSchema(self.schema_version.clone()));
        }
        for t in &self.terms {
            self.term_parts(t)?;
        }
        Ok(())
    }

    fn term_parts(&self, t: &TermDocument) -> Result<(BrauerDiagram, Vec<u32>, Vec<u32>)> {
        let d = self.d;
        if t.coeff.is_zero() {
            return Err(invalid("terms must have nonzero coefficients"));
        }
        if t.top_dots.len() != d || t.bottom_dots.len() != d {
            return Err(invalid(format!("dot vectors must have length {d}")));
        }
        for &(a, b) in &t.matching {
            for v in [a, b] {
                if Vertex::from_signed(v).is_none() || v.unsigned_abs() as usize > d {
                    return Err(invalid(format!("vertex {v} is out of range for d = {d}")));
                }
            }
        }
        let g = BrauerDiagram::from_pairs(d, &t.matching).map_err(|e| invalid(e.to_string()))?;
        let (top, bottom) = (t.top_dots.clone(), t.bottom_dots.clone());
        match self.kind {
            ElementKind::Affine => {
                let u = DotDiagram::new(g.clone(), top.clone(), bottom.clone())?;
                if !is_regular(&u) {
                    return Err(invalid(format!("term {u} is not regular")));
                }
            }
            ElementKind::Brauer => {
                if top.iter().chain(&bottom).any(|&k| k != 0) {
                    return Err(invalid("brauer terms carry no dots"));
                }
            }
            ElementKind::Daha => {
                if !g.is_permutation() {
                    return Err(invalid(format!("daha term {g} is not a permutation")));
                }
                if top.iter().any(|&k| k != 0) {
                    return Err(invalid("daha terms carry their polynomial part on the bottom"));
                }
            }
        }
        Ok((g, top, bottom))
    }

    fn expect_kind(&self, kind: ElementKind) -> Result<()> {
        if self.kind != kind {
            return Err(invalid(format!("expected a {kind:?} document, got {:?}", self.kind).to_lowercase()));
        }
        Ok(())
    }

    pub fn to_affine(&self) -> Result<PdElement> {
        self.expect_kind(ElementKind::Affine)?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let (g, top, bottom) = self.term_parts(t)?;
            terms.push((DotDiagram::new(g, top, bottom)?, t.coeff.clone()));
        }
        PdElement::from_terms(self.d, terms)
    }

    pub fn to_brauer(&self) -> Result<ADElement> {
        self.expect_kind(ElementKind::Brauer)?;
        let mut terms = Vec::new();
        for t in &self.terms {
            terms.push((self.term_parts(t)?.0, t.coeff.clone()));
        }
        ADElement::from_terms(self.d, terms)
    }

    pub fn to_daha(&self) -> Result<DahaElement> {
        self.expect_kind(ElementKind::Daha)?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let (g, _, bottom) = self.term_parts(t)?;
            terms.push(((g, bottom), t.coeff.clone()));
        }
        DahaElement::from_terms(self.d, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::normalize;
    use crate::tensoraction::GeneratorToken::{E, S, Y};

    #[test]
    fn documents_round_trip() {
        let x = normalize(&[S(1), Y(2), E(1), Y(1), Y(2)], 2).unwrap();
        let doc = ElementDocument::from_affine(&x);
        let back = ElementDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_affine().unwrap(), x);

        let b = ADElement::from_word(&[S(1), E(2)], 3).unwrap().scale(&Rational::new(-3, 2));
        let doc = ElementDocument::from_brauer(&b);
        assert!(doc.to_json().contains("\"-3/2\""));
        assert_eq!(ElementDocument::from_json(&doc.to_json()).unwrap().to_brauer().unwrap(), b);

        let h = crate::affine::to_daha_word(&[Y(1), S(1), Y(1)], 2).unwrap();
        let doc = ElementDocument::from_daha(&h);
        assert_eq!(ElementDocument::from_json(&doc.to_json()).unwrap().to_daha().unwrap(), h);
    }

    #[test]
    fn malformed_documents_are_rejected() {
        let ok = r#"{"schema_version":"1","kind":"affine","d":2,"terms":[{"coeff":"1","matching":[[1,-1],[2,-2]],"top_dots":[1,0],"bottom_dots":[0,0]}]}"#;
        assert!(ElementDocument::from_json(ok).is_ok());
        for bad in [
            ok.replace("\"1\",\"kind\"", "\"2\",\"kind\""),
            ok.replace("[1,0]", "[1,0,0]"),
            ok.replace("[[1,-1],[2,-2]]", "[[1,-1],[1,-2]]"),
            ok.replace("[[1,-1],[2,-2]]", "[[1,-1],[3,-2]]"),
            ok.replace("\"coeff\":\"1\"", "\"coeff\":\"0\""),
            ok.replace("\"coeff\":\"1\"", "\"coeff\":0.5"),
            ok.replace("[[1,-1],[2,-2]],\"top_dots\":[1,0],\"bottom_dots\":[0,0]", "[[1,2],[-1,-2]],\"top_dots\":[0,1],\"bottom_dots\":[0,0]"),
        ] {
            assert!(ElementDocument::from_json(&bad).is_err(), "{bad}");
        }
    }
}
