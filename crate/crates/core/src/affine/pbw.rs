use std::collections::BTreeMap;

use serde::Serialize;

use super::dot::{enumerate_regular, FiltrationDegree};
use crate::error::{Error, Result};
use crate::exactla::{EchelonBasis, Rational, SparseVector};
use crate::tensoraction::{relabel_representatives, PsiEvaluator, TensorSpaceSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwReport {
    pub d: usize,
    pub max_degree: FiltrationDegree,
    pub n: usize,
    pub count: usize,
    pub rank: usize,
    /// Cumulative rank after each tensor power `m`, in order; stops once the rank is full.
    pub rank_by_level: Vec<(usize, usize)>,
}

/// Rank of the regular monomials of degree at most `max_degree`, computed from their operators on
/// `V^{(x)m} (x) V^{(x)d}` for `m = 0..=max_degree + 1`.
///
/// Coordinates are drawn from one column per relabelling orbit, which loses nothing because every
/// operator commutes with relabelling.
pub fn pbw_rank_check(d: usize, max_degree: FiltrationDegree, n: usize) -> Result<PbwReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    if n < d + max_degree + 1 {
        return Err(Error::InvalidParameter(format!("need n >= d + max_degree + 1 = {}, got {n}", d + max_degree + 1)));
    }
    let basis = enumerate_regular(d, max_degree);
    let count = basis.len();
    let words: Vec<_> = basis.iter().map(|x| x.word()).collect();
    let mut echelon = EchelonBasis::new(count);
    let mut rank_by_level = Vec::new();
    'levels: for m in 0..=max_degree + 1 {
        let spec = TensorSpaceSpec::new(n, m, d)?;
        let ev = PsiEvaluator::new(spec)?;
        let dim = spec.dim();
        for c in relabel_representatives(spec) {
            let unit = SparseVector::unit(dim, c);
            let mut by_row: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for (u, w) in words.iter().enumerate() {
                for (r, v) in ev.apply_word(w, &unit)?.iter() {
                    by_row.entry(r).or_default().push((u, v.clone()));
                }
            }
            for (_, entries) in by_row {
                echelon.insert(&SparseVector::from_pairs(count, entries))?;
                if echelon.rank() == count {
                    rank_by_level.push((m, count));
                    break 'levels;
                }
            }
        }
        rank_by_level.push((m, echelon.rank()));
    }
    Ok(PbwReport { d, max_degree, n, count, rank: echelon.rank(), rank_by_level })
}
