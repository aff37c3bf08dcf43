//! Linear combinations of generator words written as text.
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor (['*'] factor)*
//! factor  := primary ['^' k]
//! primary := integer ['/' integer] | 's'a | 'e'a | 'y'j | '(' expr ')'
//! ```
//!
//! Columns in errors are 1-based character positions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::tensoraction::{GeneratorToken, Word, WordCombination};

struct Parser {
    chars: Vec<char>,
    pos: usize,
    d: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position: position + 1, message: message.into() }
}

fn collect(terms: impl IntoIterator<Item = (Rational, Word)>) -> WordCombination {
    let mut map: BTreeMap<Word, Rational> = BTreeMap::new();
    for (c, w) in terms {
        *map.entry(w).or_default() += c;
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| (c, w)).collect()
}

fn product(a: &WordCombination, b: &WordCombination) -> WordCombination {
    collect(a.iter().flat_map(|(c, u)| {
        b.iter().map(move |(e, v)| {
            let mut w = u.clone();
            w.extend(v.iter().copied());
            (c * e, w)
        })
    }))
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(err(start, "expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| err(start, "number too large"))
    }

    fn expr(&mut self) -> Result<WordCombination> {
        let mut out = Vec::new();
        let mut sign = Rational::ONE;
        match self.peek() {
            Some('-') => {
                sign = -Rational::ONE;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            out.extend(t.into_iter().map(|(c, w)| (&c * &sign, w)));
            match self.peek() {
                Some('+') => sign = Rational::ONE,
                Some('-') => sign = -Rational::ONE,
                _ => return Ok(collect(out)),
            }
            self.pos += 1;
        }
    }

    fn starts_factor(c: char) -> bool {
        c.is_ascii_digit() || matches!(c, 's' | 'e' | 'y' | '(')
    }

    fn term(&mut self) -> Result<WordCombination> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = product(&acc, &f);
                }
                Some(c) if Self::starts_factor(c) => {
                    let f = self.factor()?;
                    acc = product(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<WordCombination> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.pos;
        let k = self.integer()?;
        if k == 0 {
            return Err(err(at, "exponent must be positive"));
        }
        let mut out = base.clone();
        for _ in 1..k {
            out = product(&out, &base);
        }
        Ok(out)
    }

    fn primary(&mut self) -> Result<WordCombination> {
        let at = self.pos;
        match self.peek() {
            None => Err(err(self.pos, "unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(err(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.integer()?;
                let mut q = 1;
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let qpos = self.pos;
                    q = self.integer()?;
                    if q == 0 {
                        return Err(err(qpos, "zero denominator"));
                    }
                }
                let (p, q) = (i64::try_from(p).map_err(|_| err(at, "number too large"))?, q as i64);
                Ok(collect([(Rational::new(p, q), Word::new())]))
            }
            Some(c @ ('s' | 'e' | 'y')) => {
                let start = self.pos;
                self.pos += 1;
                if !self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(err(self.pos, format!("expected an index after '{c}'")));
                }
                let k = self.integer()? as usize;
                let t = match c {
                    's' => GeneratorToken::S(k),
                    'e' => GeneratorToken::E(k),
                    _ => GeneratorToken::Y(k),
                };
                t.validate(self.d).map_err(|e| err(start, e.to_string()))?;
                Ok(vec![(Rational::ONE, vec![t])])
            }
            Some(c) => Err(err(self.pos, format!("unexpected character '{c}'"))),
        }
    }
}

/// Parses an expression over the generators for `d` strands.
pub fn parse_expression(src: &str, d: usize) -> Result<WordCombination> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, d };
    let out = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(err(p.pos, format!("unexpected character '{c}'")));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorToken::{E, S, Y};

    #[test]
    fn parses_words_and_combinations() {
        assert_eq!(parse_expression("s1*s1", 2).unwrap(), vec![(Rational::ONE, vec![S(1), S(1)])]);
        assert!(parse_expression("y1*y2 - y2*y1", 2).unwrap().len() == 2);
        assert!(parse_expression("y1 y2 - y2*y1 + 0", 2).unwrap().len() == 2);
        assert!(parse_expression("s1 - s1", 2).unwrap().is_empty());
        assert_eq!(parse_expression("1/2 e1 y1^2", 2).unwrap(), vec![(Rational::new(1, 2), vec![E(1), Y(1), Y(1)])]);
        assert_eq!(parse_expression("-(s1 + 1)^2", 2).unwrap().len(), 3);
        assert_eq!(parse_expression("3", 2).unwrap(), vec![(Rational::from_integer(3), vec![])]);
    }

    #[test]
    fn reports_positions() {
        let at = |s: &str| match parse_expression(s, 2) {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{other:?}"),
        };
        assert_eq!(at("s1*x2"), 4);
        assert_eq!(at("s1 +"), 5);
        assert_eq!(at("s3"), 1);
        assert_eq!(at("(s1"), 4);
        assert_eq!(at("y1^0"), 4);
        assert_eq!(at("1/0"), 3);
        assert_eq!(at("s"), 2);
    }
}
