use std::collections::BTreeMap;

use super::Rational;
use crate::error::{Error, Result};

/// Sparse vector: sorted `(index, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "unit index {index} out of range {dim}");
        SparseVector { dim, entries: vec![(index, Rational::ONE)] }
    }

    /// Builds a vector from arbitrary pairs; duplicates are summed and zeros dropped.
    pub fn from_pairs(dim: usize, pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            assert!(i < dim, "index {i} out of range {dim}");
            *map.entry(i).or_default() += v;
        }
        SparseVector {
            dim,
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, v)| *i < dim && !v.is_zero()));
        SparseVector { dim, entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::ZERO; self.dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseVector {
        if c.is_zero() {
            return SparseVector::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseVector) -> Result<SparseVector> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if c.is_zero() {
            return Ok(self.clone());
        }
        let (a, b) = (&self.entries, &other.entries);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut p, mut q) = (0, 0);
        while p < a.len() || q < b.len() {
            if q == b.len() || (p < a.len() && a[p].0 < b[q].0) {
                out.push(a[p].clone());
                p += 1;
            } else if p == a.len() || b[q].0 < a[p].0 {
                out.push((b[q].0, c * &b[q].1));
                q += 1;
            } else {
                let v = &a[p].1 + &(c * &b[q].1);
                if !v.is_zero() {
                    out.push((a[p].0, v));
                }
                p += 1;
                q += 1;
            }
        }
        Ok(SparseVector { dim: self.dim, entries: out })
    }

    pub fn add(&self, other: &SparseVector) -> Result<SparseVector> {
        self.add_scaled(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &SparseVector) -> Result<SparseVector> {
        self.add_scaled(&-Rational::ONE, other)
    }
}

/// Sparse matrix stored column by column; each column is a sorted list of
/// `(row, value)` pairs with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            rows: dim,
            cols: dim,
            columns: (0..dim).map(|j| vec![(j, Rational::ONE)]).collect(),
        }
    }

    /// Builds from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Self {
        let mut cmaps: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            *cmaps[c].entry(r).or_default() += v;
        }
        SparseMatrix {
            rows,
            cols,
            columns: cmaps
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVector>) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for c in columns {
            if c.dim() != rows {
                return Err(Error::DimensionMismatch { left: rows, right: c.dim() });
            }
            out.push(c.entries);
        }
        Ok(SparseMatrix { rows, cols, columns: out })
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn column_entries(&self, col: usize) -> &[(usize, Rational)] {
        &self.columns[col]
    }

    pub fn column(&self, col: usize) -> SparseVector {
        SparseVector::from_sorted_unchecked(self.rows, self.columns[col].clone())
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        match self.columns[col].binary_search_by_key(&row, |(i, _)| *i) {
            Ok(k) => self.columns[col][k].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    /// All nonzero entries as `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::ZERO; self.cols]; self.rows];
        for (i, j, v) in self.triplets() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix::from_triplets(
            self.cols,
            self.rows,
            self.triplets().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zero(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .map(|col| col.iter().map(|(i, v)| (*i, v * c)).collect())
                .collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Rational, other: &SparseMatrix) -> Result<SparseMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let columns = (0..self.cols)
            .map(|j| {
                let a = SparseVector::from_sorted_unchecked(self.rows, self.columns[j].clone());
                let b = SparseVector::from_sorted_unchecked(self.rows, other.columns[j].clone());
                a.add_scaled(c, &b).map(|v| v.entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix { rows: self.rows, cols: self.cols, columns })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&Rational::ONE, other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&-Rational::ONE, other)
    }

    pub fn apply(&self, v: &SparseVector) -> Result<SparseVector> {
        if v.dim() != self.cols {
            return Err(Error::DimensionMismatch { left: self.cols, right: v.dim() });
        }
        let mut acc = Accumulator::new(self.rows);
        for (j, x) in v.iter() {
            acc.add_column(&self.columns[j], x);
        }
        Ok(acc.drain())
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }
}

/// Dense scratch buffer used to sum sparse columns without re-sorting.
pub struct Accumulator {
    values: Vec<Rational>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Accumulator {
    pub fn new(dim: usize) -> Self {
        Accumulator {
            values: vec![Rational::ZERO; dim],
            touched: Vec::new(),
            seen: vec![false; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn add(&mut self, index: usize, value: &Rational) {
        if !self.seen[index] {
            self.seen[index] = true;
            self.touched.push(index);
        }
        self.values[index] += value;
    }

    /// Adds `scale * column`.
    pub fn add_column(&mut self, column: &[(usize, Rational)], scale: &Rational) {
        if scale.is_one() {
            for (i, a) in column {
                self.add(*i, a);
            }
        } else {
            for (i, a) in column {
                let t = a * scale;
                self.add(*i, &t);
            }
        }
    }

    pub fn add_vector(&mut self, v: &SparseVector, scale: &Rational) {
        self.add_column(&v.entries, scale);
    }

    /// Extracts the accumulated vector and resets the buffer.
    pub fn drain(&mut self) -> SparseVector {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = std::mem::take(&mut self.values[i]);
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SparseVector { dim: self.values.len(), entries }
    }
}

pub fn mat_mul(a: &SparseMatrix, b: &SparseMatrix) -> Result<SparseMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch { left: a.cols, right: b.rows });
    }
    let mut acc = Accumulator::new(a.rows);
    let mut columns = Vec::with_capacity(b.cols);
    for col in &b.columns {
        for (k, x) in col {
            acc.add_column(&a.columns[*k], x);
        }
        columns.push(acc.drain().entries);
    }
    Ok(SparseMatrix { rows: a.rows, cols: b.cols, columns })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn mat_mul_small_example() {
        let a = SparseMatrix::from_dense(&[vec![r(1), r(2)], vec![r(3), r(4)]]);
        let b = SparseMatrix::from_dense(&[vec![r(0), r(1)], vec![r(1), r(0)]]);
        let c = mat_mul(&a, &b).unwrap();
        assert_eq!(c.to_dense(), vec![vec![r(2), r(1)], vec![r(4), r(3)]]);
    }

    #[test]
    fn mat_mul_shape_mismatch() {
        let a = SparseMatrix::zero(2, 3);
        let b = SparseMatrix::zero(2, 2);
        assert!(matches!(mat_mul(&a, &b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = SparseMatrix::identity(3);
        let d = a.sub(&a).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.nnz(), 0);
    }
}
