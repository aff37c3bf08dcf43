//! The superspace `V = C^{n|n}`, its odd form, and the periplectic Lie superalgebra `p(n)`.
//!
//! Basis vectors of `V` are indexed `0..2n`: indices `0..n` are the even
//! vectors `e_1..e_n` and `n..2n` are the odd vectors `e_1bar..e_nbar`.
//! A matrix `X` acts by `X e_j = sum_i X[i][j] e_i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactla::{mat_mul, Rational, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Parity {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;
    // addition mod 2
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

/// Index of a basis vector of `C^{n|n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityIndex {
    pub n: usize,
    pub index: usize,
}

impl ParityIndex {
    pub fn new(n: usize, index: usize) -> Result<Self> {
        if index >= 2 * n {
            return Err(Error::IndexOutOfRange { what: "basis", index: index + 1, bound: 2 * n });
        }
        Ok(ParityIndex { n, index })
    }

    pub fn parity(self) -> Parity {
        if self.index < self.n {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The partner index `i <-> ibar`.
    pub fn bar(self) -> ParityIndex {
        ParityIndex { n: self.n, index: bar(self.n, self.index) }
    }

    /// One-based label without the bar.
    pub fn label(self) -> usize {
        self.index % self.n + 1
    }
}

impl fmt::Display for ParityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parity() {
            Parity::Even => write!(f, "e{}", self.label()),
            Parity::Odd => write!(f, "e{}'", self.label()),
        }
    }
}

#[inline]
pub fn parity_bit(n: usize, index: usize) -> u8 {
    (index >= n) as u8
}

#[inline]
pub fn bar(n: usize, index: usize) -> usize {
    if index < n {
        index + n
    } else {
        index - n
    }
}

/// The odd form `(e_a, e_b) = delta_{a, bbar}`.
pub fn odd_form(n: usize, a: usize, b: usize) -> Result<Rational> {
    ParityIndex::new(n, a)?;
    ParityIndex::new(n, b)?;
    Ok(if a == bar(n, b) { Rational::ONE } else { Rational::ZERO })
}

/// A `2n x 2n` matrix on `C^{n|n}` with its parity, or `None` when it is
/// not homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    n: usize,
    matrix: SparseMatrix,
    parity: Option<Parity>,
}

impl SuperMatrix {
    pub fn new(n: usize, matrix: SparseMatrix) -> Result<Self> {
        if matrix.rows() != 2 * n || matrix.cols() != 2 * n {
            return Err(Error::ShapeMismatch {
                left: (2 * n, 2 * n),
                right: (matrix.rows(), matrix.cols()),
            });
        }
        let mut even = false;
        let mut odd = false;
        for (i, j, _) in matrix.triplets() {
            if parity_bit(n, i) == parity_bit(n, j) {
                even = true;
            } else {
                odd = true;
            }
        }
        let parity = match (even, odd) {
            (_, false) => Some(Parity::Even),
            (false, true) => Some(Parity::Odd),
            (true, true) => None,
        };
        Ok(SuperMatrix { n, matrix, parity })
    }

    /// Builds from the four `n x n` blocks `[[a, b], [c, d]]` given as triplets.
    pub fn from_blocks(
        n: usize,
        a: &[(usize, usize, Rational)],
        b: &[(usize, usize, Rational)],
        c: &[(usize, usize, Rational)],
        d: &[(usize, usize, Rational)],
    ) -> Result<Self> {
        let shift = |t: &[(usize, usize, Rational)], ro: usize, co: usize| {
            t.iter().map(move |(i, j, v)| (i + ro, j + co, v.clone())).collect::<Vec<_>>()
        };
        let mut all = shift(a, 0, 0);
        all.extend(shift(b, 0, n));
        all.extend(shift(c, n, 0));
        all.extend(shift(d, n, n));
        SuperMatrix::new(n, SparseMatrix::from_triplets(2 * n, 2 * n, all))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn parity(&self) -> Option<Parity> {
        self.parity
    }

    pub fn is_homogeneous(&self) -> bool {
        self.parity.is_some()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.matrix.get(i, j)
    }

    pub fn add(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        SuperMatrix::new(self.n, self.matrix.add(&other.matrix)?)
    }

    pub fn scale(&self, c: &Rational) -> SuperMatrix {
        SuperMatrix::new(self.n, self.matrix.scale(c)).expect("shape preserved")
    }

    pub fn compose(&self, other: &SuperMatrix) -> Result<SuperMatrix> {
        SuperMatrix::new(self.n, mat_mul(&self.matrix, &other.matrix)?)
    }
}

/// `tr A - tr D` for `X = [[A, B], [C, D]]`.
pub fn supertrace(x: &SuperMatrix) -> Rational {
    let n = x.n;
    let mut out = Rational::ZERO;
    for i in 0..n {
        out += x.get(i, i);
        out -= x.get(i + n, i + n);
    }
    out
}

/// `[x, y] = xy - (-1)^{|x||y|} yx` for homogeneous `x`, `y`.
pub fn superbracket(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    let (Some(px), Some(py)) = (x.parity, y.parity) else {
        return Err(Error::NonHomogeneous);
    };
    if x.n != y.n {
        return Err(Error::DimensionMismatch { left: x.n, right: y.n });
    }
    let xy = mat_mul(&x.matrix, &y.matrix)?;
    let yx = mat_mul(&y.matrix, &x.matrix)?;
    let sign = if px == Parity::Odd && py == Parity::Odd { Rational::ONE } else { -Rational::ONE };
    SuperMatrix::new(x.n, xy.add_scaled(&sign, &yx)?)
}

/// Membership in `p(n)`: `D = -A^t`, `B = B^t`, `C = -C^t`.
pub fn is_pn_member(x: &SuperMatrix) -> bool {
    let n = x.n;
    for i in 0..n {
        for j in 0..n {
            let a = x.get(i, j);
            let d = x.get(j + n, i + n);
            if d != -&a {
                return false;
            }
            if x.get(i, j + n) != x.get(j, i + n) {
                return false;
            }
            if x.get(i + n, j) != -x.get(j + n, i) {
                return false;
            }
        }
    }
    true
}

/// Basis element of `p(n)` together with its dual under the supertrace form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PnDualPair {
    pub label: String,
    pub x: SuperMatrix,
    pub dual: SuperMatrix,
}

impl PnDualPair {
    pub fn parity(&self) -> Parity {
        self.x.parity.expect("basis elements are homogeneous")
    }
}

/// The `2n^2` basis elements of `p(n)` with duals satisfying
/// `str(x_i^* x_j) = delta_ij`.
///
/// Order: `E_st` for all `(s, t)`, then `X_st` for `s < t`, then `X_ss`,
/// then `Y_st` for `s < t`.
pub fn pn_basis_with_duals(n: usize) -> Result<Vec<PnDualPair>> {
    if n == 0 {
        return Err(Error::InvalidParameter("p(n) needs n >= 1".into()));
    }
    let one = Rational::ONE;
    let half = Rational::new(1, 2);
    let mhalf = Rational::new(-1, 2);
    let mone = -Rational::ONE;
    let t = |i: usize, j: usize, v: &Rational| (i, j, v.clone());
    let mut out = Vec::with_capacity(2 * n * n);
    for s in 0..n {
        for u in 0..n {
            let x = SuperMatrix::from_blocks(n, &[t(s, u, &one)], &[], &[], &[t(u, s, &mone)])?;
            let dual =
                SuperMatrix::from_blocks(n, &[t(u, s, &half)], &[], &[], &[t(s, u, &half)])?;
            out.push(PnDualPair { label: format!("E_{}{}", s + 1, u + 1), x, dual });
        }
    }
    for s in 0..n {
        for u in s + 1..n {
            let x = SuperMatrix::from_blocks(n, &[], &[t(s, u, &one), t(u, s, &one)], &[], &[])?;
            let dual =
                SuperMatrix::from_blocks(n, &[], &[], &[t(u, s, &mhalf), t(s, u, &mhalf)], &[])?;
            out.push(PnDualPair { label: format!("X_{}{}", s + 1, u + 1), x, dual });
        }
    }
    for s in 0..n {
        let x = SuperMatrix::from_blocks(n, &[], &[t(s, s, &one)], &[], &[])?;
        let dual = SuperMatrix::from_blocks(n, &[], &[], &[t(s, s, &mone)], &[])?;
        out.push(PnDualPair { label: format!("X_{}{}", s + 1, s + 1), x, dual });
    }
    for s in 0..n {
        for u in s + 1..n {
            let x = SuperMatrix::from_blocks(n, &[], &[], &[t(s, u, &one), t(u, s, &mone)], &[])?;
            let dual = SuperMatrix::from_blocks(
                n,
                &[],
                &[t(s, u, &mhalf), t(u, s, &half)],
                &[],
                &[],
            )?;
            out.push(PnDualPair { label: format!("Y_{}{}", s + 1, u + 1), x, dual });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_size_and_membership() {
        for n in 1..=4 {
            let b = pn_basis_with_duals(n).unwrap();
            assert_eq!(b.len(), 2 * n * n);
            assert!(b.iter().all(|p| is_pn_member(&p.x)));
        }
        assert!(pn_basis_with_duals(0).is_err());
    }

    #[test]
    fn duality_under_supertrace() {
        for n in 1..=3 {
            let b = pn_basis_with_duals(n).unwrap();
            for (i, bi) in b.iter().enumerate() {
                for (j, bj) in b.iter().enumerate() {
                    let v = supertrace(&bi.dual.compose(&bj.x).unwrap());
                    let want = if i == j { Rational::ONE } else { Rational::ZERO };
                    assert_eq!(v, want, "{} vs {}", bi.label, bj.label);
                }
            }
        }
    }

    #[test]
    fn odd_form_pairs_bars() {
        assert_eq!(odd_form(2, 0, 2).unwrap(), Rational::ONE);
        assert_eq!(odd_form(2, 0, 1).unwrap(), Rational::ZERO);
        assert!(odd_form(2, 0, 4).is_err());
    }

    #[test]
    fn bracket_rejects_mixed_parity() {
        let b = pn_basis_with_duals(2).unwrap();
        let mixed = b[0].x.add(&b[5].x).unwrap();
        assert!(mixed.parity().is_none());
        assert_eq!(superbracket(&mixed, &b[0].x), Err(Error::NonHomogeneous));
    }
}
