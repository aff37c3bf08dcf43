use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::dot::{is_regular, DotDiagram, FiltrationDegree};
use super::normalize::{Normalizer, Terms};
use crate::brauer::BrauerDiagram;
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::tensoraction::{EndoOperator, GeneratorToken, PsiEvaluator, TensorSpaceSpec, WordCombination};

/// An element of the affine algebra in its regular monomial basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PdElement {
    d: usize,
    terms: BTreeMap<DotDiagram, Rational>,
}

impl PdElement {
    pub fn zero(d: usize) -> Self {
        PdElement { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        PdElement::from_dot(DotDiagram::undotted(BrauerDiagram::identity(d))).expect("identity is regular")
    }

    pub fn from_dot(x: DotDiagram) -> Result<Self> {
        if !is_regular(&x) {
            return Err(Error::InvalidParameter(format!("{x} is not regular")));
        }
        Ok(PdElement { d: x.d(), terms: BTreeMap::from([(x, Rational::ONE)]) })
    }

    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = (DotDiagram, Rational)>) -> Result<Self> {
        let mut out = PdElement::zero(d);
        for (x, c) in terms {
            if x.d() != d {
                return Err(Error::DimensionMismatch { left: d, right: x.d() });
            }
            if !is_regular(&x) {
                return Err(Error::InvalidParameter(format!("{x} is not regular")));
            }
            out.add_term(x, c);
        }
        Ok(out)
    }

    pub(crate) fn from_raw(d: usize, terms: Terms) -> Self {
        PdElement { d, terms }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<DotDiagram, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, x: &DotDiagram) -> Rational {
        self.terms.get(x).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest dot count among the terms, `None` for zero.
    pub fn degree(&self) -> Option<FiltrationDegree> {
        self.terms.keys().map(DotDiagram::degree).max()
    }

    /// The terms of exactly the given dot count.
    pub fn homogeneous_part(&self, degree: FiltrationDegree) -> PdElement {
        PdElement {
            d: self.d,
            terms: self.terms.iter().filter(|(x, _)| x.degree() == degree).map(|(x, c)| (x.clone(), c.clone())).collect(),
        }
    }

    fn add_term(&mut self, x: DotDiagram, c: Rational) {
        let e = self.terms.entry(x).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &PdElement) -> Result<PdElement> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        let mut out = self.clone();
        for (x, c) in &other.terms {
            out.add_term(x.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> PdElement {
        if c.is_zero() {
            return PdElement::zero(self.d);
        }
        PdElement { d: self.d, terms: self.terms.iter().map(|(x, v)| (x.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &PdElement) -> Result<PdElement> {
        self.add(&other.scale(&-Rational::ONE))
    }

    /// Each monomial written back as `y^top * gamma * y^bottom`.
    pub fn to_word_combination(&self) -> WordCombination {
        self.terms.iter().map(|(x, c)| (c.clone(), x.word())).collect()
    }
}

impl fmt::Debug for PdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (x, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){x}")?;
        }
        Ok(())
    }
}

fn with_normalizer<T>(d: usize, f: impl FnOnce(&mut Normalizer) -> Result<T>) -> Result<T> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Normalizer>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    if let std::collections::hash_map::Entry::Vacant(e) = guard.entry(d) {
        e.insert(Normalizer::new(d)?);
    }
    let nz = guard.get_mut(&d).expect("just inserted");
    debug_assert_eq!(nz.d(), d);
    f(nz)
}

/// The regular normal form of a generator word.
pub fn normalize(word: &[GeneratorToken], d: usize) -> Result<PdElement> {
    for t in word {
        t.validate(d)?;
    }
    with_normalizer(d, |nz| Ok(PdElement::from_raw(d, nz.reduce(word)?)))
}

/// The regular normal form of a linear combination of words.
pub fn normalize_combination(combo: &WordCombination, d: usize) -> Result<PdElement> {
    for (_, w) in combo {
        for t in w {
            t.validate(d)?;
        }
    }
    with_normalizer(d, |nz| {
        let mut out = PdElement::zero(d);
        for (c, w) in combo {
            for (x, v) in nz.reduce(w)? {
                out.add_term(x, c * &v);
            }
        }
        Ok(out)
    })
}

/// Product by concatenation: `x` on top of `y`.
pub fn multiply(x: &PdElement, y: &PdElement) -> Result<PdElement> {
    if x.d != y.d {
        return Err(Error::DimensionMismatch { left: x.d, right: y.d });
    }
    let d = x.d;
    with_normalizer(d, |nz| {
        let mut out = PdElement::zero(d);
        for (u, a) in &x.terms {
            for (v, b) in &y.terms {
                let mut w = u.word();
                w.extend(v.word());
                let ab = a * b;
                for (z, c) in nz.reduce(&w)? {
                    out.add_term(z, &ab * &c);
                }
            }
        }
        Ok(out)
    })
}

/// The operator of `x` on `V^{(x)m} (x) V^{(x)d}`.
pub fn psi_image(x: &PdElement, n: usize, m: usize) -> Result<EndoOperator> {
    let ev = PsiEvaluator::new(TensorSpaceSpec::new(n, m, x.d)?)?;
    ev.evaluate_combination(&x.to_word_combination())
}
