use std::fmt;

use crate::brauer::{canonical_word, enumerate_diagrams, BrauerDiagram};
use crate::error::{Error, Result};
use crate::tensoraction::{GeneratorToken, Word};

pub type FiltrationDegree = usize;

/// A Brauer diagram with dots at its top and bottom vertices, standing for
/// the monomial `y_1^{i_1}..y_d^{i_d} * gamma * y_1^{j_1}..y_d^{j_d}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DotDiagram {
    pub diagram: BrauerDiagram,
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl DotDiagram {
    pub fn new(diagram: BrauerDiagram, top: Vec<u32>, bottom: Vec<u32>) -> Result<Self> {
        let d = diagram.d();
        if top.len() != d || bottom.len() != d {
            return Err(Error::InvalidParameter(format!(
                "dot vectors need length {d}, got {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        Ok(DotDiagram { diagram, top, bottom })
    }

    pub fn undotted(diagram: BrauerDiagram) -> Self {
        let d = diagram.d();
        DotDiagram { diagram, top: vec![0; d], bottom: vec![0; d] }
    }

    pub fn d(&self) -> usize {
        self.diagram.d()
    }

    pub fn degree(&self) -> FiltrationDegree {
        self.top.iter().chain(&self.bottom).map(|&k| k as usize).sum()
    }

    /// The monomial as a generator word, using the canonical word of the diagram.
    pub fn word(&self) -> Word {
        let mut w = dots_word(&self.top);
        w.extend(canonical_word(&self.diagram));
        w.extend(dots_word(&self.bottom));
        w
    }
}

pub(crate) fn dots_word(dots: &[u32]) -> Word {
    dots.iter()
        .enumerate()
        .flat_map(|(j, &k)| std::iter::repeat_n(GeneratorToken::Y(j + 1), k as usize))
        .collect()
}

/// No dot on the right end of a top arc, and bottom dots only on right ends of bottom arcs.
pub fn is_regular(x: &DotDiagram) -> bool {
    let cup_right: Vec<usize> = x.diagram.cups().into_iter().map(|(_, j)| j).collect();
    let cap_right: Vec<usize> = x.diagram.caps().into_iter().map(|(_, j)| j).collect();
    cup_right.iter().all(|&j| x.top[j - 1] == 0)
        && x.bottom.iter().enumerate().all(|(t, &k)| k == 0 || cap_right.contains(&(t + 1)))
}

/// Vectors supported on `allowed` with entry sum at most `budget`, in lexicographic order.
fn bounded_vectors(d: usize, allowed: &[bool], budget: u32) -> Vec<Vec<u32>> {
    fn go(pos: usize, allowed: &[bool], budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == allowed.len() {
            out.push(cur.clone());
            return;
        }
        let max = if allowed[pos] { budget } else { 0 };
        for k in 0..=max {
            cur.push(k);
            go(pos + 1, allowed, budget - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, &allowed[..d], budget, &mut Vec::with_capacity(d), &mut out);
    out
}

/// All regular dot diagrams on `d` strands with at most `max_degree` dots:
/// diagrams in enumeration order, then top dots and bottom dots lexicographically.
pub fn enumerate_regular(d: usize, max_degree: FiltrationDegree) -> Vec<DotDiagram> {
    let budget = max_degree as u32;
    let mut out = Vec::new();
    for g in enumerate_diagrams(d) {
        let mut top_ok = vec![true; d];
        for (_, j) in g.cups() {
            top_ok[j - 1] = false;
        }
        let mut bottom_ok = vec![false; d];
        for (_, j) in g.caps() {
            bottom_ok[j - 1] = true;
        }
        for top in bounded_vectors(d, &top_ok, budget) {
            let used: u32 = top.iter().sum();
            for bottom in bounded_vectors(d, &bottom_ok, budget - used) {
                out.push(DotDiagram { diagram: g.clone(), top: top.clone(), bottom });
            }
        }
    }
    out
}

impl fmt::Debug for DotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DotDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} top={:?} bottom={:?}", self.diagram, self.top, self.bottom)
    }
}
