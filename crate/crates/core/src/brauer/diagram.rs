use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensoraction::GeneratorToken;

/// A vertex of a Brauer diagram: `Top(i)` is `i` and `Bottom(i)` is `-i`, one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Top(usize),
    Bottom(usize),
}

impl Vertex {
    pub fn signed(self) -> i64 {
        match self {
            Vertex::Top(i) => i as i64,
            Vertex::Bottom(i) => -(i as i64),
        }
    }

    pub fn from_signed(v: i64) -> Option<Vertex> {
        match v {
            0 => None,
            v if v > 0 => Some(Vertex::Top(v as usize)),
            v => Some(Vertex::Bottom(v.unsigned_abs() as usize)),
        }
    }
}

/// A perfect matching of `{1..d} u {-1..-d}`. Top vertices sit above bottom ones,
/// and a product `x * y` places `x` on top of `y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    d: usize,
    /// `partner[v]` for internal vertex ids: top `i` is `i - 1`, bottom `i` is `d + i - 1`.
    partner: Vec<usize>,
}

/// Result of stacking two diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composite {
    pub diagram: BrauerDiagram,
    pub loops: usize,
}

impl BrauerDiagram {
    pub fn identity(d: usize) -> Self {
        let mut partner = vec![0; 2 * d];
        for i in 0..d {
            partner[i] = d + i;
            partner[d + i] = i;
        }
        BrauerDiagram { d, partner }
    }

    /// Builds a diagram from `d` pairs of signed vertices.
    pub fn from_pairs(d: usize, pairs: &[(i64, i64)]) -> Result<Self> {
        let id = |v: i64| -> Result<usize> {
            let bad = || Error::InvalidParameter(format!("vertex {v} outside +-1..={d}"));
            match Vertex::from_signed(v).ok_or_else(bad)? {
                Vertex::Top(i) if i <= d => Ok(i - 1),
                Vertex::Bottom(i) if i <= d => Ok(d + i - 1),
                _ => Err(bad()),
            }
        };
        let mut partner = vec![usize::MAX; 2 * d];
        for &(a, b) in pairs {
            let (x, y) = (id(a)?, id(b)?);
            if x == y || partner[x] != usize::MAX || partner[y] != usize::MAX {
                return Err(Error::InvalidParameter(format!("pairs do not form a perfect matching at ({a}, {b})")));
            }
            partner[x] = y;
            partner[y] = x;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidParameter("pairs do not cover every vertex".into()));
        }
        Ok(BrauerDiagram { d, partner })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    fn vertex(&self, id: usize) -> Vertex {
        if id < self.d {
            Vertex::Top(id + 1)
        } else {
            Vertex::Bottom(id - self.d + 1)
        }
    }

    pub fn partner(&self, v: Vertex) -> Vertex {
        let id = match v {
            Vertex::Top(i) => i - 1,
            Vertex::Bottom(i) => self.d + i - 1,
        };
        self.vertex(self.partner[id])
    }

    /// Each pair once, ordered by its first vertex (tops before bottoms).
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        (0..2 * self.d)
            .filter(|&v| v < self.partner[v])
            .map(|v| (self.vertex(v), self.vertex(self.partner[v])))
            .collect()
    }

    /// Top arcs `(i, j)` with `i < j`, sorted by `i`.
    pub fn cups(&self) -> Vec<(usize, usize)> {
        (0..self.d).filter(|&v| self.partner[v] < self.d && v < self.partner[v]).map(|v| (v + 1, self.partner[v] + 1)).collect()
    }

    /// Bottom arcs `(i, j)` with `i < j`, sorted by `i`.
    pub fn caps(&self) -> Vec<(usize, usize)> {
        let d = self.d;
        (d..2 * d)
            .filter(|&v| self.partner[v] >= d && v < self.partner[v])
            .map(|v| (v - d + 1, self.partner[v] - d + 1))
            .collect()
    }

    /// Propagating strands `(top, bottom)`, sorted by top vertex.
    pub fn propagating(&self) -> Vec<(usize, usize)> {
        (0..self.d).filter(|&v| self.partner[v] >= self.d).map(|v| (v + 1, self.partner[v] - self.d + 1)).collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.propagating().len() == self.d
    }

    /// Stacks `self` on top of `below`.
    pub fn compose(&self, below: &BrauerDiagram) -> Result<Composite> {
        if self.d != below.d {
            return Err(Error::DimensionMismatch { left: self.d, right: below.d });
        }
        let d = self.d;
        // Walk from an outer vertex through middle vertices (self bottom k = below top k).
        let mut visited = vec![false; d];
        let mut walk = |mut layer: u8, mut id: usize| -> usize {
            loop {
                match (layer, id < d) {
                    (0, true) => return id,
                    (1, false) => return id,
                    (0, false) => {
                        visited[id - d] = true;
                        layer = 1;
                        id = below.partner[id - d];
                    }
                    _ => {
                        visited[id] = true;
                        layer = 0;
                        id = self.partner[d + id];
                    }
                }
            }
        };
        let mut partner = vec![usize::MAX; 2 * d];
        for start in 0..2 * d {
            if partner[start] != usize::MAX {
                continue;
            }
            let end = if start < d { walk(0, self.partner[start]) } else { walk(1, below.partner[start]) };
            partner[start] = end;
            partner[end] = start;
        }
        let mut loops = 0;
        for k in 0..d {
            if visited[k] {
                continue;
            }
            loops += 1;
            let mut cur = k;
            loop {
                let next = self.partner[d + cur] - d;
                visited[next] = true;
                cur = below.partner[next];
                visited[cur] = true;
                if cur == k {
                    break;
                }
            }
        }
        Ok(Composite { diagram: BrauerDiagram { d, partner }, loops })
    }

    /// Diagram of a single generator; `None` for `y` tokens.
    pub fn of_token(t: GeneratorToken, d: usize) -> Result<Option<BrauerDiagram>> {
        t.validate(d)?;
        let a = t.index() as i64;
        let mut pairs: Vec<(i64, i64)> = (1..=d as i64).filter(|&i| i != a && i != a + 1).map(|i| (i, -i)).collect();
        match t {
            GeneratorToken::S(_) => pairs.extend([(a, -(a + 1)), (a + 1, -a)]),
            GeneratorToken::E(_) => pairs.extend([(a, a + 1), (-a, -(a + 1))]),
            GeneratorToken::Y(_) => return Ok(None),
        }
        BrauerDiagram::from_pairs(d, &pairs).map(Some)
    }

    /// Underlying diagram of a word with its `y` tokens ignored, and the
    /// number of closed loops formed.
    pub fn of_word(word: &[GeneratorToken], d: usize) -> Result<Composite> {
        let mut out = Composite { diagram: BrauerDiagram::identity(d), loops: 0 };
        for &t in word {
            if let Some(g) = BrauerDiagram::of_token(t, d)? {
                let c = out.diagram.compose(&g)?;
                out = Composite { diagram: c.diagram, loops: out.loops + c.loops };
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, (a, b)) in self.pairs().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}:{}", a.signed(), b.signed())?;
        }
        write!(f, "]")
    }
}

impl Serialize for BrauerDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.pairs().iter().map(|(a, b)| [a.signed(), b.signed()]).collect();
        pairs.serialize(s)
    }
}

/// All `(2d-1)!!` diagrams on `d` strands in a fixed order: the smallest
/// unmatched vertex (tops `1..d`, then bottoms `-1..-d`) is paired with each
/// remaining vertex in turn.
pub fn enumerate_diagrams(d: usize) -> Vec<BrauerDiagram> {
    fn go(d: usize, partner: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(BrauerDiagram { d, partner: partner.clone() });
            return;
        };
        for other in first + 1..2 * d {
            if partner[other] != usize::MAX {
                continue;
            }
            partner[first] = other;
            partner[other] = first;
            go(d, partner, out);
            partner[first] = usize::MAX;
            partner[other] = usize::MAX;
        }
    }
    let mut out = Vec::new();
    go(d, &mut vec![usize::MAX; 2 * d], &mut out);
    out
}

/// The word `s_i ... s_{j-2} eps_{j-1} s_{j-2} ... s_i` of the marked pair `(i, j)`.
pub fn marked_pair(i: usize, j: usize, d: usize) -> Result<Vec<GeneratorToken>> {
    if !(1 <= i && i < j && j <= d) {
        return Err(Error::InvalidParameter(format!("marked pair needs 1 <= i < j <= d, got ({i}, {j}) with d = {d}")));
    }
    Ok(conjugated(i, j, GeneratorToken::E(j - 1)))
}

/// The word `s_i ... s_{j-2} s_{j-1} s_{j-2} ... s_i` of the transposition `(i, j)`.
pub fn transposition(i: usize, j: usize, d: usize) -> Result<Vec<GeneratorToken>> {
    if !(1 <= i && i < j && j <= d) {
        return Err(Error::InvalidParameter(format!("transposition needs 1 <= i < j <= d, got ({i}, {j}) with d = {d}")));
    }
    Ok(conjugated(i, j, GeneratorToken::S(j - 1)))
}

fn conjugated(i: usize, j: usize, middle: GeneratorToken) -> Vec<GeneratorToken> {
    let mut w: Vec<_> = (i..j - 1).map(GeneratorToken::S).collect();
    w.push(middle);
    w.extend((i..j - 1).rev().map(GeneratorToken::S));
    w
}

/// A reduced word in the `s_a` whose diagram sends top `p` to bottom `sigma[p-1]`.
pub fn permutation_word(sigma: &[usize]) -> Vec<GeneratorToken> {
    let mut cur = sigma.to_vec();
    let mut out = Vec::new();
    while let Some(a) = (0..cur.len().saturating_sub(1)).find(|&a| cur[a] > cur[a + 1]) {
        cur.swap(a, a + 1);
        out.push(GeneratorToken::S(a + 1));
    }
    out
}

/// The canonical word of a diagram: the marked pairs of its top arcs in
/// increasing order of left endpoint, followed by a reduced permutation word
/// carrying each top arc onto its bottom arc (ordered by left endpoint,
/// left end to left end) and each propagating top vertex onto its partner.
pub fn canonical_word(g: &BrauerDiagram) -> Vec<GeneratorToken> {
    let d = g.d();
    let mut word = Vec::new();
    for (i, j) in g.cups() {
        word.extend(marked_pair(i, j, d).expect("arc endpoints are valid"));
    }
    let mut sigma = vec![0; d];
    for ((i, j), (k, l)) in g.cups().into_iter().zip(g.caps()) {
        sigma[i - 1] = k;
        sigma[j - 1] = l;
    }
    for (t, b) in g.propagating() {
        sigma[t - 1] = b;
    }
    word.extend(permutation_word(&sigma));
    word
}

#[cfg(test)]
mod tests {
    use super::*;
    use GeneratorToken::{E, S};

    #[test]
    fn double_factorial_counts() {
        let counts: Vec<usize> = (1..=5).map(|d| enumerate_diagrams(d).len()).collect();
        assert_eq!(counts, vec![1, 3, 15, 105, 945]);
        assert_eq!(enumerate_diagrams(0).len(), 1);
    }

    #[test]
    fn marked_pair_example() {
        assert_eq!(marked_pair(1, 3, 3).unwrap(), vec![S(1), E(2), S(1)]);
        assert_eq!(marked_pair(2, 3, 3).unwrap(), vec![E(2)]);
        assert!(marked_pair(2, 2, 3).is_err());
    }

    #[test]
    fn three_cycle_has_two_letter_word() {
        let g = BrauerDiagram::from_pairs(3, &[(1, -2), (2, -3), (3, -1)]).unwrap();
        let w = canonical_word(&g);
        assert_eq!(w.len(), 2);
        assert!(w.iter().all(|t| matches!(t, S(_))));
    }

    #[test]
    fn canonical_words_realize_their_diagrams() {
        for d in 1..=5 {
            for g in enumerate_diagrams(d) {
                let c = BrauerDiagram::of_word(&canonical_word(&g), d).unwrap();
                assert_eq!(c.loops, 0);
                assert_eq!(c.diagram, g);
            }
        }
    }

    #[test]
    fn eps_squared_closes_a_loop() {
        let c = BrauerDiagram::of_word(&[E(1), E(1)], 2).unwrap();
        assert_eq!(c.loops, 1);
        assert_eq!(c.diagram, BrauerDiagram::of_token(E(1), 2).unwrap().unwrap());
        let c = BrauerDiagram::of_word(&[E(1), E(2), E(1)], 3).unwrap();
        assert_eq!(c.loops, 0);
    }

    #[test]
    fn from_pairs_rejects_bad_input() {
        assert!(BrauerDiagram::from_pairs(2, &[(1, 2)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, &[(1, 1), (-1, -2)]).is_err());
        assert!(BrauerDiagram::from_pairs(2, &[(1, 3), (-1, -2)]).is_err());
    }
}
