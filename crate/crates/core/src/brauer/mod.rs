//! The periplectic Brauer algebra `A_d` on Brauer diagrams.

mod algebra;
mod diagram;

use std::collections::BTreeMap;
use std::fmt;

pub use algebra::{brauer_algebra, BrauerAlgebra, MAX_ORACLE_D};
pub use diagram::{
    canonical_word, enumerate_diagrams, marked_pair, permutation_word, transposition, BrauerDiagram, Composite, Vertex,
};

use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::tensoraction::{EndoOperator, GeneratorToken, PsiEvaluator, TensorSpaceSpec};

pub type CanonicalWord = Vec<GeneratorToken>;

/// An element of `A_d`: a finite combination of diagrams with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ADElement {
    d: usize,
    terms: BTreeMap<BrauerDiagram, Rational>,
}

impl ADElement {
    pub fn zero(d: usize) -> Self {
        ADElement { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        ADElement::from_diagram(BrauerDiagram::identity(d))
    }

    pub fn from_diagram(g: BrauerDiagram) -> Self {
        ADElement { d: g.d(), terms: BTreeMap::from([(g, Rational::ONE)]) }
    }

    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (BrauerDiagram, Rational)>) -> Result<Self> {
        let mut out = ADElement::zero(d);
        for (g, c) in terms {
            if g.d() != d {
                return Err(Error::DimensionMismatch { left: d, right: g.d() });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    /// The value of a word in `s_a`, `eps_a`.
    pub fn from_word(word: &[GeneratorToken], d: usize) -> Result<Self> {
        let alg = brauer_algebra(d)?;
        let terms = alg.word_terms(word)?;
        Ok(ADElement { d, terms: terms.into_iter().map(|(i, c)| (alg.diagrams()[i].clone(), c)).collect() })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, g: &BrauerDiagram) -> Rational {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, g: BrauerDiagram, c: Rational) {
        let e = self.terms.entry(g).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &ADElement) -> Result<ADElement> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ADElement {
        if c.is_zero() {
            return ADElement::zero(self.d);
        }
        ADElement { d: self.d, terms: self.terms.iter().map(|(g, v)| (g.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &ADElement) -> Result<ADElement> {
        self.add(&other.scale(&-Rational::ONE))
    }
}

impl fmt::Debug for ADElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ADElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (g, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){g}")?;
        }
        Ok(())
    }
}

/// Bilinear product: `x * y` places `x` on top of `y`.
pub fn multiply(x: &ADElement, y: &ADElement) -> Result<ADElement> {
    if x.d != y.d {
        return Err(Error::DimensionMismatch { left: x.d, right: y.d });
    }
    let alg = brauer_algebra(x.d)?;
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (g, a) in &x.terms {
        let i = alg.index_of(g)?;
        for (h, b) in &y.terms {
            let j = alg.index_of(h)?;
            let ab = a * b;
            for (k, c) in alg.basis_product(i, j)? {
                *acc.entry(k).or_default() += &ab * &c;
            }
        }
    }
    ADElement::from_terms(x.d, acc.into_iter().map(|(k, c)| (alg.diagrams()[k].clone(), c)))
}

/// The operator of `x` on `V^{(x)d}` for `V = C^{n|n}`.
pub fn psi_image(x: &ADElement, n: usize) -> Result<EndoOperator> {
    let spec = TensorSpaceSpec::new(n, 0, x.d)?;
    let ev = PsiEvaluator::new(spec)?;
    let mut out = EndoOperator::zero(spec);
    for (g, c) in &x.terms {
        out = out.add_scaled(c, &ev.evaluate_word(&canonical_word(g))?)?;
    }
    Ok(out)
}

/// The Jucys-Murphy element `z_j = sum_{k<j} ((k,j) + marked(k,j))`.
pub fn jm_element(j: usize, d: usize) -> Result<ADElement> {
    if j == 0 || j > d {
        return Err(Error::IndexOutOfRange { what: "strand", index: j, bound: d });
    }
    let mut out = ADElement::zero(d);
    for k in 1..j {
        out = out.add(&ADElement::from_word(&transposition(k, j, d)?, d)?)?;
        out = out.add(&ADElement::from_word(&marked_pair(k, j, d)?, d)?)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
