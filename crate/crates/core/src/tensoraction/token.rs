use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A generator of the affine algebra: `s_a`, `eps_a` or `y_j` (one-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorToken {
    S(usize),
    E(usize),
    Y(usize),
}

pub type Word = Vec<GeneratorToken>;

impl GeneratorToken {
    /// All generators for `d` strands: `s_1..s_{d-1}`, `eps_1..eps_{d-1}`, `y_1..y_d`.
    pub fn all(d: usize) -> Vec<GeneratorToken> {
        let mut out: Vec<_> = (1..d).map(GeneratorToken::S).collect();
        out.extend((1..d).map(GeneratorToken::E));
        out.extend((1..=d).map(GeneratorToken::Y));
        out
    }

    pub fn index(self) -> usize {
        match self {
            GeneratorToken::S(a) | GeneratorToken::E(a) | GeneratorToken::Y(a) => a,
        }
    }

    pub fn is_dot(self) -> bool {
        matches!(self, GeneratorToken::Y(_))
    }

    /// Checks the index against `d` strands.
    pub fn validate(self, d: usize) -> Result<()> {
        match self {
            GeneratorToken::S(a) | GeneratorToken::E(a) if a == 0 || a >= d => {
                Err(Error::IndexOutOfRange { what: "generator", index: a, bound: d.saturating_sub(1) })
            }
            GeneratorToken::Y(j) if j == 0 || j > d => Err(Error::IndexOutOfRange { what: "strand", index: j, bound: d }),
            _ => Ok(()),
        }
    }

    /// The same generator shifted right by `k` strands.
    pub fn shifted(self, k: usize) -> GeneratorToken {
        match self {
            GeneratorToken::S(a) => GeneratorToken::S(a + k),
            GeneratorToken::E(a) => GeneratorToken::E(a + k),
            GeneratorToken::Y(j) => GeneratorToken::Y(j + k),
        }
    }
}

impl fmt::Display for GeneratorToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorToken::S(a) => write!(f, "s{a}"),
            GeneratorToken::E(a) => write!(f, "e{a}"),
            GeneratorToken::Y(j) => write!(f, "y{j}"),
        }
    }
}

impl FromStr for GeneratorToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { position: 0, message: format!("bad generator {s:?}") };
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let idx: usize = chars.as_str().parse().map_err(|_| bad())?;
        match head {
            's' => Ok(GeneratorToken::S(idx)),
            'e' => Ok(GeneratorToken::E(idx)),
            'y' => Ok(GeneratorToken::Y(idx)),
            _ => Err(bad()),
        }
    }
}

/// Parses a product of generators separated by whitespace or `*`.
pub fn parse_word(s: &str) -> Result<Word> {
    s.split(|c: char| c.is_whitespace() || c == '*')
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

pub fn format_word(w: &[GeneratorToken]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(ToString::to_string).collect::<Vec<_>>().join("*")
}
