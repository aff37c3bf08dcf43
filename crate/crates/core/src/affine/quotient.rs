use std::collections::BTreeMap;
use std::fmt;

use super::element::PdElement;
use crate::brauer::{self, ADElement, BrauerDiagram};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::tensoraction::{GeneratorToken, WordCombination};

use GeneratorToken::{E, S, Y};

/// Image of a single generator under `pi_m` in `A_{m+d}`.
fn pi_token(t: GeneratorToken, d: usize, m: usize) -> Result<ADElement> {
    t.validate(d)?;
    match t {
        S(_) | E(_) => ADElement::from_word(&[t.shifted(m)], m + d),
        Y(j) => brauer::jm_element(m + j, m + d),
    }
}

/// `pi_m` applied to a word: `s_a -> s_{m+a}`, `eps_a -> eps_{m+a}`, `y_j -> z_{m+j}`.
pub fn pi_m_word(word: &[GeneratorToken], d: usize, m: usize) -> Result<ADElement> {
    let mut out = ADElement::one(m + d);
    for &t in word {
        if out.is_zero() {
            break;
        }
        out = brauer::multiply(&out, &pi_token(t, d, m)?)?;
    }
    Ok(out)
}

pub fn pi_m_combination(combo: &WordCombination, d: usize, m: usize) -> Result<ADElement> {
    let mut out = ADElement::zero(m + d);
    for (c, w) in combo {
        out = out.add(&pi_m_word(w, d, m)?.scale(c))?;
    }
    Ok(out)
}

/// The homomorphism `pi_m` into the periplectic Brauer algebra on `m + d` strands.
pub fn pi_m(x: &PdElement, m: usize) -> Result<ADElement> {
    pi_m_combination(&x.to_word_combination(), x.d(), m)
}

/// An element of the degenerate affine Hecke algebra, written as
/// `sum c * w * v_1^{a_1}..v_d^{a_d}` with `w` a permutation diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DahaElement {
    d: usize,
    terms: BTreeMap<(BrauerDiagram, Vec<u32>), Rational>,
}

impl DahaElement {
    pub fn zero(d: usize) -> Self {
        DahaElement { d, terms: BTreeMap::new() }
    }

    pub fn one(d: usize) -> Self {
        DahaElement { d, terms: BTreeMap::from([((BrauerDiagram::identity(d), vec![0; d]), Rational::ONE)]) }
    }

    pub fn from_terms(d: usize, terms: impl IntoIterator<Item = ((BrauerDiagram, Vec<u32>), Rational)>) -> Result<Self> {
        let mut out = DahaElement::zero(d);
        for ((w, alpha), c) in terms {
            if w.d() != d || alpha.len() != d {
                return Err(Error::DimensionMismatch { left: d, right: w.d() });
            }
            if !w.is_permutation() {
                return Err(Error::InvalidParameter(format!("{w} is not a permutation")));
            }
            out.add_term(w, alpha, c);
        }
        Ok(out)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<(BrauerDiagram, Vec<u32>), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: BrauerDiagram, alpha: Vec<u32>, c: Rational) {
        let e = self.terms.entry((w, alpha)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &DahaElement) -> Result<DahaElement> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        let mut out = self.clone();
        for ((w, a), c) in &other.terms {
            out.add_term(w.clone(), a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> DahaElement {
        if c.is_zero() {
            return DahaElement::zero(self.d);
        }
        DahaElement { d: self.d, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &DahaElement) -> Result<DahaElement> {
        self.add(&other.scale(&-Rational::ONE))
    }

    /// Right multiplication by `s_a` or `v_j`; `eps_a` maps to zero.
    pub fn times_token(&self, t: GeneratorToken) -> Result<DahaElement> {
        t.validate(self.d)?;
        let mut out = DahaElement::zero(self.d);
        match t {
            E(_) => {}
            Y(j) => {
                for ((w, alpha), c) in &self.terms {
                    let mut a = alpha.clone();
                    a[j - 1] += 1;
                    out.add_term(w.clone(), a, c.clone());
                }
            }
            S(a) => {
                let s = BrauerDiagram::of_token(t, self.d)?.expect("swap is a diagram");
                for ((w, alpha), c) in &self.terms {
                    let ws = w.compose(&s)?.diagram;
                    let mut swapped = alpha.clone();
                    swapped.swap(a - 1, a);
                    out.add_term(ws, swapped, c.clone());
                    for (beta, k) in divided_difference(alpha, a) {
                        out.add_term(w.clone(), beta, c * &Rational::from_integer(k));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn times_word(&self, word: &[GeneratorToken]) -> Result<DahaElement> {
        let mut out = self.clone();
        for &t in word {
            if out.is_zero() {
                break;
            }
            out = out.times_token(t)?;
        }
        Ok(out)
    }

    pub fn from_word(word: &[GeneratorToken], d: usize) -> Result<DahaElement> {
        DahaElement::one(d).times_word(word)
    }

    pub fn multiply(&self, other: &DahaElement) -> Result<DahaElement> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch { left: self.d, right: other.d });
        }
        let mut out = DahaElement::zero(self.d);
        for ((w, alpha), c) in &other.terms {
            let mut word = brauer::canonical_word(w);
            for (j, &k) in alpha.iter().enumerate() {
                word.extend(std::iter::repeat_n(Y(j + 1), k as usize));
            }
            out = out.add(&self.times_word(&word)?.scale(c))?;
        }
        Ok(out)
    }
}

/// `(f^{s_a} - f) / (v_a - v_{a+1})` for the monomial `v^alpha`, as exponent vectors with integer coefficients.
fn divided_difference(alpha: &[u32], a: usize) -> Vec<(Vec<u32>, i64)> {
    let (p, q) = (alpha[a - 1], alpha[a]);
    let (low, sign) = if p > q { (q, -1) } else { (p, 1) };
    let span = p.abs_diff(q);
    (0..span)
        .map(|i| {
            let mut beta = alpha.to_vec();
            beta[a - 1] = low + i;
            beta[a] = low + span - 1 - i;
            (beta, sign)
        })
        .collect()
}

impl fmt::Debug for DahaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DahaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((w, alpha), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w} v^{alpha:?}")?;
        }
        Ok(())
    }
}

/// Image of a word under `eps_a -> 0`, `y_j -> v_j`.
pub fn to_daha_word(word: &[GeneratorToken], d: usize) -> Result<DahaElement> {
    DahaElement::from_word(word, d)
}

pub fn to_daha_combination(combo: &WordCombination, d: usize) -> Result<DahaElement> {
    let mut out = DahaElement::zero(d);
    for (c, w) in combo {
        out = out.add(&to_daha_word(w, d)?.scale(c))?;
    }
    Ok(out)
}

pub fn to_daha(x: &PdElement) -> Result<DahaElement> {
    to_daha_combination(&x.to_word_combination(), x.d())
}
