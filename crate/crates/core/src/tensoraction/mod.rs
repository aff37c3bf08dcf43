//! Operators on `M (x) V^{(x)d}` with `M = V^{(x)m}` and `V = C^{n|n}`.
//!
//! Tensor basis vectors are indexed lexicographically with the first slot
//! most significant. Slot positions in this module are zero-based; the
//! generator indices `a` and `j` follow the usual one-based convention and
//! refer to the `d` strands after the `m` slots of `M`.

mod check;
mod token;

use std::collections::HashMap;

pub use check::{check_identities, relabel_representatives, IdentityFailure, WordCombination};
pub use token::{format_word, parse_word, GeneratorToken, Word};

use crate::error::{Error, Result};
use crate::exactla::{mat_mul, rank, Accumulator, Rational, SparseMatrix, SparseVector};
use crate::superalgebra::{bar, parity_bit, pn_basis_with_duals, PnDualPair, SuperMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpaceSpec {
    pub n: usize,
    pub m: usize,
    pub d: usize,
}

impl TensorSpaceSpec {
    pub fn new(n: usize, m: usize, d: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let spec = TensorSpaceSpec { n, m, d };
        if spec.checked_dim().is_none() {
            return Err(Error::InvalidParameter(format!("(2n)^(m+d) overflows for {spec:?}")));
        }
        Ok(spec)
    }

    pub fn slots(&self) -> usize {
        self.m + self.d
    }

    fn checked_dim(&self) -> Option<usize> {
        (2 * self.n).checked_pow(self.slots() as u32)
    }

    pub fn dim(&self) -> usize {
        self.checked_dim().expect("validated in new")
    }

    /// Basis labels of every slot, first slot first.
    pub fn digits(&self, index: usize) -> Vec<usize> {
        let b = 2 * self.n;
        let mut out = vec![0; self.slots()];
        let mut x = index;
        for s in (0..self.slots()).rev() {
            out[s] = x % b;
            x /= b;
        }
        out
    }

    pub fn index_of(&self, digits: &[usize]) -> usize {
        let b = 2 * self.n;
        digits.iter().fold(0, |acc, &t| acc * b + t)
    }

    fn check_s(&self, a: usize) -> Result<()> {
        if a == 0 || a >= self.d {
            return Err(Error::IndexOutOfRange { what: "generator", index: a, bound: self.d.saturating_sub(1) });
        }
        Ok(())
    }

    fn check_strand(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.d {
            return Err(Error::IndexOutOfRange { what: "strand", index: j, bound: self.d });
        }
        Ok(())
    }
}

/// A linear operator on the tensor space of a fixed spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoOperator {
    pub spec: TensorSpaceSpec,
    pub matrix: SparseMatrix,
}

impl EndoOperator {
    fn from_columns(spec: TensorSpaceSpec, mut column: impl FnMut(&[usize], &mut Vec<(Vec<usize>, Rational)>)) -> Self {
        let dim = spec.dim();
        let mut triplets = Vec::new();
        let mut buf = Vec::new();
        for j in 0..dim {
            let digits = spec.digits(j);
            buf.clear();
            column(&digits, &mut buf);
            for (out, v) in buf.drain(..) {
                triplets.push((spec.index_of(&out), j, v));
            }
        }
        EndoOperator { spec, matrix: SparseMatrix::from_triplets(dim, dim, triplets) }
    }

    pub fn identity(spec: TensorSpaceSpec) -> Self {
        EndoOperator { spec, matrix: SparseMatrix::identity(spec.dim()) }
    }

    pub fn zero(spec: TensorSpaceSpec) -> Self {
        EndoOperator { spec, matrix: SparseMatrix::zero(spec.dim(), spec.dim()) }
    }

    /// `self` applied after `other`.
    pub fn compose(&self, other: &EndoOperator) -> Result<EndoOperator> {
        Ok(EndoOperator { spec: self.spec, matrix: mat_mul(&self.matrix, &other.matrix)? })
    }

    pub fn add(&self, other: &EndoOperator) -> Result<EndoOperator> {
        Ok(EndoOperator { spec: self.spec, matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn add_scaled(&self, c: &Rational, other: &EndoOperator) -> Result<EndoOperator> {
        Ok(EndoOperator { spec: self.spec, matrix: self.matrix.add_scaled(c, &other.matrix)? })
    }

    pub fn scale(&self, c: &Rational) -> EndoOperator {
        EndoOperator { spec: self.spec, matrix: self.matrix.scale(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, v: &SparseVector) -> Result<SparseVector> {
        self.matrix.apply(v)
    }
}

/// Two-slot pieces of `2 C_{V,V}` split by the parity of the `p(n)` basis element.
struct CasimirKernel {
    even: Vec<Vec<(usize, usize, Rational)>>,
    odd: Vec<Vec<(usize, usize, Rational)>>,
    b: usize,
}

impl CasimirKernel {
    fn new(n: usize) -> Self {
        let basis = pn_basis_with_duals(n).expect("n >= 1");
        let b = 2 * n;
        let mut even = vec![Vec::new(); b * b];
        let mut odd = vec![Vec::new(); b * b];
        let two = Rational::from(2);
        for pair in &basis {
            let px = pair.parity().bit();
            for a in 0..b {
                for c in 0..b {
                    let sign = if px == 1 && parity_bit(n, a) == 1 { -&two } else { two.clone() };
                    let target = if px == 0 { &mut even[a * b + c] } else { &mut odd[a * b + c] };
                    for (r1, v1) in pair.x.matrix().column_entries(a) {
                        for (r2, v2) in pair.dual.matrix().column_entries(c) {
                            target.push((*r1, *r2, &sign * &(v1 * v2)));
                        }
                    }
                }
            }
        }
        let merge = |lists: Vec<Vec<(usize, usize, Rational)>>| {
            lists
                .into_iter()
                .map(|l| {
                    let mut map: HashMap<(usize, usize), Rational> = HashMap::new();
                    for (r1, r2, v) in l {
                        *map.entry((r1, r2)).or_default() += v;
                    }
                    let mut out: Vec<_> =
                        map.into_iter().filter(|(_, v)| !v.is_zero()).map(|((a, c), v)| (a, c, v)).collect();
                    out.sort();
                    out
                })
                .collect()
        };
        CasimirKernel { even: merge(even), odd: merge(odd), b }
    }

    /// Adds `T_{p,q} e_digits` to `out`, where `T_{p,q}` is `2 C` acting on
    /// slots `p < q` with the Koszul signs of the slots it passes.
    fn push_pair(&self, n: usize, digits: &[usize], p: usize, q: usize, scale: &Rational, out: &mut Vec<(Vec<usize>, Rational)>) {
        let (a, c) = (digits[p], digits[q]);
        let between: u8 = digits[p + 1..q].iter().map(|&t| parity_bit(n, t)).sum::<u8>() & 1;
        let key = a * self.b + c;
        for (r1, r2, v) in &self.even[key] {
            let mut e = digits.to_vec();
            e[p] = *r1;
            e[q] = *r2;
            out.push((e, v * scale));
        }
        for (r1, r2, v) in &self.odd[key] {
            let mut e = digits.to_vec();
            e[p] = *r1;
            e[q] = *r2;
            let v = v * scale;
            out.push((e, if between == 1 { -v } else { v }));
        }
    }
}

fn sum_of_pairs(spec: TensorSpaceSpec, pairs: &[(usize, usize)], scale: Rational) -> EndoOperator {
    let kernel = CasimirKernel::new(spec.n);
    EndoOperator::from_columns(spec, |digits, out| {
        for &(p, q) in pairs {
            kernel.push_pair(spec.n, digits, p, q, &scale, out);
        }
    })
}

/// The super swap `s_a` on strands `a, a+1`.
pub fn op_s(a: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    spec.check_s(a)?;
    let p = spec.m + a - 1;
    let n = spec.n;
    Ok(EndoOperator::from_columns(spec, |digits, out| {
        let (u, v) = (digits[p], digits[p + 1]);
        let mut e = digits.to_vec();
        e.swap(p, p + 1);
        let sign = if parity_bit(n, u) & parity_bit(n, v) == 1 { -Rational::ONE } else { Rational::ONE };
        out.push((e, sign));
    }))
}

/// `e_a (x) e_b -> delta_{a, bbar} sum_i (-1)^{|e_i|} e_i (x) e_ibar` on strands `a, a+1`.
pub fn op_epsilon(a: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    spec.check_s(a)?;
    let p = spec.m + a - 1;
    let n = spec.n;
    Ok(EndoOperator::from_columns(spec, |digits, out| {
        if digits[p + 1] != bar(n, digits[p]) {
            return;
        }
        for i in 0..2 * n {
            let mut e = digits.to_vec();
            e[p] = i;
            e[p + 1] = bar(n, i);
            let sign = if parity_bit(n, i) == 1 { -Rational::ONE } else { Rational::ONE };
            out.push((e, sign));
        }
    }))
}

/// The Casimir `C` acting on the first `left_size` slots tensored with slot
/// `left_size + 1`, identity elsewhere.
pub fn op_casimir(left_size: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    if left_size >= spec.slots() {
        return Err(Error::IndexOutOfRange { what: "casimir split", index: left_size, bound: spec.slots() - 1 });
    }
    let pairs: Vec<_> = (0..left_size).map(|p| (p, left_size)).collect();
    Ok(sum_of_pairs(spec, &pairs, Rational::new(1, 2)))
}

/// The Jucys-Murphy type operator `y_j = 2 C_{M (x) V^{(x)(j-1)}, V}`.
pub fn op_y(j: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    spec.check_strand(j)?;
    let q = spec.m + j - 1;
    let pairs: Vec<_> = (0..q).map(|p| (p, q)).collect();
    Ok(sum_of_pairs(spec, &pairs, Rational::ONE))
}

/// `Omega_{i,j}` for `0 <= i < j <= d`; `i = 0` means the whole of `M`.
pub fn op_omega(i: usize, j: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    spec.check_strand(j)?;
    if i >= j {
        return Err(Error::InvalidParameter(format!("omega needs i < j, got ({i}, {j})")));
    }
    let q = spec.m + j - 1;
    let pairs: Vec<_> = if i == 0 { (0..spec.m).map(|p| (p, q)).collect() } else { vec![(spec.m + i - 1, q)] };
    Ok(sum_of_pairs(spec, &pairs, Rational::ONE))
}

/// Operator of a single generator token.
pub fn op_token(token: GeneratorToken, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    match token {
        GeneratorToken::S(a) => op_s(a, spec),
        GeneratorToken::E(a) => op_epsilon(a, spec),
        GeneratorToken::Y(j) => op_y(j, spec),
    }
}

/// `x` acting on the single slot `slot` (0-based, `M` slots first) with the
/// Koszul sign of the slots before it.
pub fn slot_action(x: &SuperMatrix, slot: usize, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    let Some(px) = x.parity() else {
        return Err(Error::NonHomogeneous);
    };
    if x.n() != spec.n {
        return Err(Error::DimensionMismatch { left: x.n(), right: spec.n });
    }
    if slot >= spec.slots() {
        return Err(Error::IndexOutOfRange { what: "slot", index: slot, bound: spec.slots() });
    }
    let n = spec.n;
    let odd = px.bit() == 1;
    Ok(EndoOperator::from_columns(spec, |digits, out| {
        let prefix: u8 = digits[..slot].iter().map(|&t| parity_bit(n, t)).sum::<u8>() & 1;
        let sign = if odd && prefix == 1 { -Rational::ONE } else { Rational::ONE };
        for (r, v) in x.matrix().column_entries(digits[slot]) {
            let mut e = digits.to_vec();
            e[slot] = *r;
            out.push((e, &sign * v));
        }
    }))
}

/// `x` acting on every slot with the Koszul sign of the slots before it.
pub fn g_action(x: &SuperMatrix, spec: TensorSpaceSpec) -> Result<EndoOperator> {
    let Some(px) = x.parity() else {
        return Err(Error::NonHomogeneous);
    };
    if x.n() != spec.n {
        return Err(Error::DimensionMismatch { left: x.n(), right: spec.n });
    }
    let n = spec.n;
    let odd = px.bit() == 1;
    Ok(EndoOperator::from_columns(spec, |digits, out| {
        let mut prefix = 0u8;
        for p in 0..digits.len() {
            let sign = if odd && prefix == 1 { -Rational::ONE } else { Rational::ONE };
            for (r, v) in x.matrix().column_entries(digits[p]) {
                let mut e = digits.to_vec();
                e[p] = *r;
                out.push((e, &sign * v));
            }
            prefix ^= parity_bit(n, digits[p]);
        }
    }))
}

/// Caches generator operators for one tensor space and evaluates words with them.
///
/// A word `t_1 ... t_k` acts on the right, so it evaluates to the composite
/// that applies `t_1` first.
#[derive(Clone, Debug)]
pub struct PsiEvaluator {
    spec: TensorSpaceSpec,
    ops: HashMap<GeneratorToken, EndoOperator>,
}

impl PsiEvaluator {
    pub fn new(spec: TensorSpaceSpec) -> Result<Self> {
        let mut ops = HashMap::new();
        for t in GeneratorToken::all(spec.d) {
            ops.insert(t, op_token(t, spec)?);
        }
        Ok(PsiEvaluator { spec, ops })
    }

    pub fn spec(&self) -> TensorSpaceSpec {
        self.spec
    }

    pub fn op(&self, t: GeneratorToken) -> Result<&EndoOperator> {
        self.ops.get(&t).ok_or_else(|| Error::InvalidParameter(format!("generator {t} not available for d = {}", self.spec.d)))
    }

    pub fn evaluate_word(&self, word: &[GeneratorToken]) -> Result<EndoOperator> {
        let mut out = EndoOperator::identity(self.spec);
        for &t in word {
            out = self.op(t)?.compose(&out)?;
        }
        Ok(out)
    }

    pub fn evaluate_combination(&self, combo: &WordCombination) -> Result<EndoOperator> {
        let mut out = EndoOperator::zero(self.spec);
        for (c, w) in combo {
            out = out.add_scaled(c, &self.evaluate_word(w)?)?;
        }
        Ok(out)
    }

    pub fn apply_word(&self, word: &[GeneratorToken], v: &SparseVector) -> Result<SparseVector> {
        let mut acc = Accumulator::new(self.spec.dim());
        let mut cur = v.clone();
        for &t in word {
            let op = self.op(t)?;
            for (j, x) in cur.iter() {
                acc.add_column(op.matrix.column_entries(j), x);
            }
            cur = acc.drain();
        }
        Ok(cur)
    }

    /// Checks that every combination evaluates to the zero operator.
    ///
    /// Generators commute with relabelling `1..n`, so only one column per
    /// relabelling orbit is examined.
    pub fn check_vanishing(&self, combos: &[WordCombination]) -> Result<Vec<Option<IdentityFailure>>> {
        let tokens = GeneratorToken::all(self.spec.d);
        let index: HashMap<GeneratorToken, usize> = tokens.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let ops: Vec<&SparseMatrix> = tokens.iter().map(|t| &self.ops[t].matrix).collect();
        let mut indexed = Vec::with_capacity(combos.len());
        for combo in combos {
            let mut c = Vec::with_capacity(combo.len());
            for (coef, w) in combo {
                let w = w
                    .iter()
                    .map(|t| index.get(t).copied().ok_or_else(|| Error::InvalidParameter(format!("generator {t} not available"))))
                    .collect::<Result<Vec<_>>>()?;
                c.push((coef.clone(), w));
            }
            indexed.push(c);
        }
        let columns = relabel_representatives(self.spec);
        Ok(check_identities(&ops, &indexed, &columns, self.spec.dim()))
    }
}

pub fn evaluate_word(word: &[GeneratorToken], spec: TensorSpaceSpec) -> Result<EndoOperator> {
    PsiEvaluator::new(spec)?.evaluate_word(word)
}

/// True iff `op` commutes with the action of every basis element of `p(n)`.
pub fn check_equivariance(op: &EndoOperator) -> Result<bool> {
    for pair in pn_basis_with_duals(op.spec.n)? {
        let x = g_action(&pair.x, op.spec)?;
        if x.compose(op)? != op.compose(&x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of the commutant of `p(n)` on `V^{(x)d}`.
pub fn commutant_dimension(n: usize, d: usize) -> Result<usize> {
    let spec = TensorSpaceSpec::new(n, 0, d)?;
    let dim = spec.dim();
    let unknowns = dim * dim;
    let basis = pn_basis_with_duals(n)?;
    let mut triplets = Vec::new();
    let mut row = 0usize;
    for PnDualPair { x, .. } in &basis {
        let g = g_action(x, spec)?.matrix;
        let gt = g.transpose();
        // (T X - X T)_{rc} = sum_l T_{rl} X_{lc} - sum_l X_{rl} T_{lc}
        for r in 0..dim {
            for c in 0..dim {
                let mut any = false;
                for (l, v) in g.column_entries(c) {
                    triplets.push((row, r * dim + l, v.clone()));
                    any = true;
                }
                for (l, v) in gt.column_entries(r) {
                    triplets.push((row, l * dim + c, -v));
                    any = true;
                }
                if any {
                    row += 1;
                }
            }
        }
    }
    let system = SparseMatrix::from_triplets(row, unknowns, triplets);
    Ok(unknowns - rank(&system))
}

#[cfg(test)]
mod tests;
