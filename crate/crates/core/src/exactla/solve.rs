use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Rational, SparseMatrix, SparseVector};
use crate::error::{Error, Result};

/// Row-echelon basis built one vector at a time over the rationals.
///
/// Each stored row has a unit pivot at its smallest index, and rows are
/// kept sorted by pivot so reduction is a single left-to-right sweep.
/// When `track` is set, every row also records its expansion in terms of
/// the inserted vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    rows: BTreeMap<usize, (SparseVector, SparseVector)>,
    inserted: usize,
    track: bool,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis { dim, rows: BTreeMap::new(), inserted: 0, track: false }
    }

    pub fn tracking(dim: usize) -> Self {
        EchelonBasis { dim, rows: BTreeMap::new(), inserted: 0, track: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis and returns `(residual, multipliers)`
    /// where `v = residual + sum(multipliers[k] * inserted[k])`.
    pub fn reduce(&self, v: &SparseVector) -> Result<(SparseVector, BTreeMap<usize, Rational>)> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        let mut residual = v.clone();
        let mut coeffs: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cursor = 0usize;
        loop {
            let next = residual
                .entries()
                .iter()
                .find(|(i, _)| *i >= cursor && self.rows.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((pivot, c)) = next else { break };
            let (row, combo) = &self.rows[&pivot];
            residual = residual.add_scaled(&-&c, row)?;
            if self.track {
                for (k, a) in combo.iter() {
                    let e = coeffs.entry(k).or_default();
                    *e += &c * a;
                }
            }
            cursor = pivot + 1;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok((residual, coeffs))
    }

    /// Inserts `v`; returns `true` if it increased the rank.
    pub fn insert(&mut self, v: &SparseVector) -> Result<bool> {
        let (residual, coeffs) = self.reduce(v)?;
        let index = self.inserted;
        self.inserted += 1;
        let Some((pivot, lead)) = residual.entries().first().cloned() else {
            return Ok(false);
        };
        let inv = lead.recip();
        let row = residual.scale(&inv);
        let combo = if self.track {
            let mut pairs: Vec<(usize, Rational)> =
                coeffs.into_iter().map(|(k, c)| (k, -(c * &inv))).collect();
            pairs.push((index, inv));
            SparseVector::from_pairs(index + 1, pairs)
        } else {
            SparseVector::zero(0)
        };
        self.rows.insert(pivot, (row, combo));
        Ok(true)
    }

    pub fn contains(&self, v: &SparseVector) -> Result<bool> {
        Ok(self.reduce(v)?.0.is_zero())
    }
}

/// Precomputed solver for repeated `solve_in_span` queries against one basis.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    echelon: EchelonBasis,
    size: usize,
}

impl SpanSolver {
    pub fn new(basis: &[SparseVector]) -> Result<Self> {
        let dim = basis.first().map_or(0, SparseVector::dim);
        let mut echelon = EchelonBasis::tracking(dim);
        for b in basis {
            echelon.insert(b)?;
        }
        Ok(SpanSolver { echelon, size: basis.len() })
    }

    pub fn is_independent(&self) -> bool {
        self.echelon.rank() == self.size
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn solve(&self, target: &SparseVector) -> Result<Vec<Rational>> {
        if self.size == 0 {
            return if target.is_zero() { Ok(Vec::new()) } else { Err(Error::NotInSpan) };
        }
        let (residual, coeffs) = self.echelon.reduce(target)?;
        if !residual.is_zero() {
            return Err(Error::NotInSpan);
        }
        let mut out = vec![Rational::ZERO; self.size];
        for (k, c) in coeffs {
            out[k] = c;
        }
        Ok(out)
    }
}

/// Coefficients expressing `target` in the span of `basis`; unique when the
/// basis is linearly independent.
pub fn solve_in_span(basis: &[SparseVector], target: &SparseVector) -> Result<Vec<Rational>> {
    if let Some(b) = basis.iter().find(|b| b.dim() != target.dim()) {
        return Err(Error::DimensionMismatch { left: b.dim(), right: target.dim() });
    }
    SpanSolver::new(basis)?.solve(target)
}

fn content(row: &[(usize, BigInt)]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v))
}

fn integer_row(v: &SparseVector) -> Vec<(usize, BigInt)> {
    let den = super::rational::common_denominator(v.iter().map(|(_, x)| x));
    let mut row: Vec<(usize, BigInt)> = v
        .iter()
        .map(|(i, x)| {
            let scaled = x.to_big() * num_rational::BigRational::from_integer(den.clone());
            (i, scaled.to_integer())
        })
        .collect();
    primitive(&mut row);
    row
}

fn primitive(row: &mut [(usize, BigInt)]) {
    let g = content(row);
    let g = if row.first().is_some_and(|(_, v)| v.is_negative()) { -g } else { g };
    if !g.is_zero() && g != BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `a * x - b * y` on sparse integer rows.
fn combine(a: &BigInt, x: &[(usize, BigInt)], b: &BigInt, y: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut p, mut q) = (0, 0);
    while p < x.len() || q < y.len() {
        if q == y.len() || (p < x.len() && x[p].0 < y[q].0) {
            out.push((x[p].0, a * &x[p].1));
            p += 1;
        } else if p == x.len() || y[q].0 < x[p].0 {
            out.push((y[q].0, -(b * &y[q].1)));
            q += 1;
        } else {
            let v = a * &x[p].1 - b * &y[q].1;
            if !v.is_zero() {
                out.push((x[p].0, v));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

/// Exact rank by fraction-free elimination.
///
/// Rows are cleared of denominators, and every elimination step
/// `row <- a*row - b*pivot` is followed by division by the row content, so
/// entries stay integral and their size stays bounded by the data.
pub fn rank(m: &SparseMatrix) -> usize {
    let t = m.transpose();
    let mut pivots: BTreeMap<usize, Vec<(usize, BigInt)>> = BTreeMap::new();
    for r in 0..t.cols() {
        let mut row = integer_row(&t.column(r));
        while let Some((lead, b)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let a = p[0].1.clone();
                    let g = a.gcd(&b);
                    row = combine(&(&a / &g), &row, &(&b / &g), p);
                    primitive(&mut row);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(vals: &[i64]) -> SparseVector {
        SparseVector::from_dense(&vals.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = SparseMatrix::from_dense(&[
            vec![1.into(), 2.into(), 3.into()],
            vec![2.into(), 4.into(), 6.into()],
            vec![0.into(), 1.into(), 1.into()],
        ]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&SparseMatrix::identity(4)), 4);
        assert_eq!(rank(&SparseMatrix::zero(3, 5)), 0);
    }

    #[test]
    fn solve_in_span_example() {
        let basis = [v(&[1, 0, 1]), v(&[0, 1, 1])];
        let coeffs = solve_in_span(&basis, &v(&[2, 3, 5])).unwrap();
        assert_eq!(coeffs, vec![Rational::from(2), Rational::from(3)]);
        assert!(matches!(solve_in_span(&basis, &v(&[1, 0, 0])), Err(Error::NotInSpan)));
    }

    #[test]
    fn solve_with_rational_coefficients() {
        let basis = [v(&[2, 0]), v(&[1, 3])];
        let coeffs = solve_in_span(&basis, &v(&[1, 1])).unwrap();
        assert_eq!(coeffs, vec![Rational::new(1, 3), Rational::new(1, 3)]);
    }
}
