//! Rewriting generator words into regular monomials.
//!
//! A dot that sits between two diagram generators is carried along its
//! strand to the top or bottom edge of the word. Each local move
//! (`y` past `s_a`, or a turn at `eps_a`) leaves behind correction terms of
//! lower degree, which are normalized recursively. Once all dots sit at the
//! edges, the undotted middle is evaluated in the finite Brauer algebra, and
//! dots on forbidden endpoints are carried across their arc or strand.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::dot::{dots_word, DotDiagram};
use crate::brauer::{brauer_algebra, BrauerAlgebra, BrauerDiagram};
use crate::error::Result;
use crate::exactla::Rational;
use crate::tensoraction::{GeneratorToken, Word};

use GeneratorToken::{E, S, Y};

pub(crate) type Terms = BTreeMap<DotDiagram, Rational>;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Up,
    Down,
}

pub(crate) struct Normalizer {
    d: usize,
    alg: Arc<BrauerAlgebra>,
    memo: HashMap<Word, Terms>,
}

fn add_scaled(acc: &mut Terms, c: &Rational, terms: &Terms) {
    for (k, v) in terms {
        let e = acc.entry(k.clone()).or_default();
        *e += c * v;
    }
    acc.retain(|_, v| !v.is_zero());
}

fn is_diagram_token(t: &GeneratorToken) -> bool {
    !t.is_dot()
}

/// Carries the dot at `pos` in direction `dir` until no diagram generator
/// lies beyond it. Returns the rewritten word and the correction words with
/// their coefficients.
fn transport(mut word: Word, mut pos: usize, mut dir: Dir) -> (Word, Vec<(Rational, Word)>) {
    let mut corrections = Vec::new();
    let one = Rational::ONE;
    let minus = -Rational::ONE;
    loop {
        let beyond = match dir {
            Dir::Up => word[..pos].iter().any(is_diagram_token),
            Dir::Down => word[pos + 1..].iter().any(is_diagram_token),
        };
        if !beyond {
            return (word, corrections);
        }
        let next = match dir {
            Dir::Up => pos - 1,
            Dir::Down => pos + 1,
        };
        let Y(j) = word[pos] else { unreachable!("transported token is a dot") };
        let t = word[next];
        let (lo, hi) = (pos.min(next), pos.max(next));
        let replaced = |with: &[GeneratorToken]| -> Word {
            let mut w = word[..lo].to_vec();
            w.extend_from_slice(with);
            w.extend_from_slice(&word[hi + 1..]);
            w
        };
        match (t, dir) {
            (Y(_), _) => {
                word.swap(pos, next);
                pos = next;
            }
            (S(a), _) if j != a && j != a + 1 => {
                word.swap(pos, next);
                pos = next;
            }
            (E(a), _) if j != a && j != a + 1 => {
                word.swap(pos, next);
                pos = next;
            }
            (S(a), Dir::Up) => {
                // s_a y_a = y_{a+1} s_a + eps_a - 1;  s_a y_{a+1} = y_a s_a + eps_a + 1
                let c = if j == a { &minus } else { &one };
                corrections.push((one.clone(), replaced(&[E(a)])));
                corrections.push((c.clone(), replaced(&[])));
                word[next] = Y(if j == a { a + 1 } else { a });
                word[pos] = S(a);
                pos = next;
            }
            (S(a), Dir::Down) => {
                // y_a s_a = s_a y_{a+1} - eps_a - 1;  y_{a+1} s_a = s_a y_a - eps_a + 1
                let c = if j == a { &minus } else { &one };
                corrections.push((minus.clone(), replaced(&[E(a)])));
                corrections.push((c.clone(), replaced(&[])));
                word[next] = Y(if j == a { a + 1 } else { a });
                word[pos] = S(a);
                pos = next;
            }
            (E(a), Dir::Up) => {
                // eps_a y_a = eps_a y_{a+1} + eps_a;  eps_a y_{a+1} = eps_a y_a - eps_a
                let c = if j == a { &one } else { &minus };
                corrections.push((c.clone(), replaced(&[E(a)])));
                word[pos] = Y(if j == a { a + 1 } else { a });
                dir = Dir::Down;
            }
            (E(a), Dir::Down) => {
                // y_a eps_a = y_{a+1} eps_a - eps_a;  y_{a+1} eps_a = y_a eps_a + eps_a
                let c = if j == a { &minus } else { &one };
                corrections.push((c.clone(), replaced(&[E(a)])));
                word[pos] = Y(if j == a { a + 1 } else { a });
                dir = Dir::Up;
            }
        }
    }
}

/// Splits a word with no dot between diagram generators into
/// `(top dots, diagram word, bottom dots)`.
fn split_edges(word: &[GeneratorToken], d: usize) -> (Vec<u32>, Word, Vec<u32>) {
    let first = word.iter().position(is_diagram_token).unwrap_or(word.len());
    let mut top = vec![0u32; d];
    let mut bottom = vec![0u32; d];
    let mut middle = Vec::new();
    for (k, t) in word.iter().enumerate() {
        match t {
            Y(j) if k < first => top[j - 1] += 1,
            Y(j) => bottom[j - 1] += 1,
            t => middle.push(*t),
        }
    }
    (top, middle, bottom)
}

impl Normalizer {
    pub(crate) fn new(d: usize) -> Result<Self> {
        Ok(Normalizer { d, alg: brauer_algebra(d)?, memo: HashMap::new() })
    }

    pub(crate) fn d(&self) -> usize {
        self.d
    }

    /// Normal form of a word as a combination of regular dot diagrams.
    pub(crate) fn reduce(&mut self, word: &[GeneratorToken]) -> Result<Terms> {
        if let Some(hit) = self.memo.get(word) {
            return Ok(hit.clone());
        }
        let out = self.reduce_uncached(word)?;
        self.memo.insert(word.to_vec(), out.clone());
        Ok(out)
    }

    fn reduce_uncached(&mut self, word: &[GeneratorToken]) -> Result<Terms> {
        let d = self.d;
        // A closed loop makes the word vanish, whatever dots it carries.
        if BrauerDiagram::of_word(word, d)?.loops > 0 {
            return Ok(Terms::new());
        }
        let diag: Vec<usize> = word.iter().enumerate().filter(|(_, t)| is_diagram_token(t)).map(|(k, _)| k).collect();
        if let (Some(&first), Some(&last)) = (diag.first(), diag.last()) {
            if let Some(pos) = (first + 1..last).find(|&k| word[k].is_dot()) {
                let above = diag.iter().filter(|&&k| k < pos).count();
                let below = diag.len() - above;
                let dir = if above <= below { Dir::Up } else { Dir::Down };
                let (main, corrections) = transport(word.to_vec(), pos, dir);
                let mut out = self.reduce(&main)?;
                for (c, w) in corrections {
                    let t = self.reduce(&w)?;
                    add_scaled(&mut out, &c, &t);
                }
                return Ok(out);
            }
        }
        let (top, middle, bottom) = split_edges(word, d);
        let mut out = Terms::new();
        for (i, c) in self.alg.word_terms(&middle)? {
            let t = self.regularize(&top, i, &bottom)?;
            add_scaled(&mut out, &c, &t);
        }
        Ok(out)
    }

    /// Normal form of `y^top * basis[i] * y^bottom`.
    fn regularize(&mut self, top: &[u32], i: usize, bottom: &[u32]) -> Result<Terms> {
        let g = self.alg.diagrams()[i].clone();
        let cup_right = g.cups().into_iter().map(|(_, j)| j).find(|&j| top[j - 1] > 0);
        let cap_right: Vec<usize> = g.caps().into_iter().map(|(_, j)| j).collect();
        let stray_bottom = (1..=self.d).find(|&t| bottom[t - 1] > 0 && !cap_right.contains(&t));
        let (word, pos, dir) = match (cup_right, stray_bottom) {
            (None, None) => {
                let x = DotDiagram::new(g, top.to_vec(), bottom.to_vec())?;
                return Ok(Terms::from([(x, Rational::ONE)]));
            }
            (Some(j), _) => {
                let mut rest = top.to_vec();
                rest[j - 1] -= 1;
                let mut w = dots_word(&rest);
                let pos = w.len();
                w.push(Y(j));
                w.extend(self.alg.canonical_word(i).iter().copied());
                w.extend(dots_word(bottom));
                (w, pos, Dir::Down)
            }
            (None, Some(t)) => {
                let mut rest = bottom.to_vec();
                rest[t - 1] -= 1;
                let mut w = dots_word(top);
                w.extend(self.alg.canonical_word(i).iter().copied());
                let pos = w.len();
                w.push(Y(t));
                w.extend(dots_word(&rest));
                (w, pos, Dir::Up)
            }
        };
        let (main, corrections) = transport(word, pos, dir);
        let (top2, _, bottom2) = split_edges(&main, self.d);
        let mut out = self.regularize(&top2, i, &bottom2)?;
        for (c, w) in corrections {
            let t = self.reduce(&w)?;
            add_scaled(&mut out, &c, &t);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transport_through_swap_moves_to_other_strand() {
        let (main, corr) = transport(vec![S(1), Y(1)], 1, Dir::Up);
        assert_eq!(main, vec![Y(2), S(1)]);
        assert_eq!(corr, vec![(Rational::ONE, vec![E(1)]), (-Rational::ONE, vec![])]);
    }

    #[test]
    fn transport_turns_at_eps() {
        let (main, corr) = transport(vec![E(1), Y(1)], 1, Dir::Up);
        assert_eq!(main, vec![E(1), Y(2)]);
        assert_eq!(corr, vec![(Rational::ONE, vec![E(1)])]);
    }
}
