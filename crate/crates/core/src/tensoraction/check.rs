use std::collections::HashMap;

use super::{GeneratorToken, TensorSpaceSpec};
use crate::exactla::{Accumulator, Rational, SparseMatrix, SparseVector};

/// A formal linear combination of generator words.
pub type WordCombination = Vec<(Rational, Vec<GeneratorToken>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityFailure {
    /// Tensor basis index of the first column where the identity fails.
    pub column: usize,
    /// Number of nonzero entries left in that column.
    pub residual_nnz: usize,
}

/// One tensor index per orbit of the relabelling action of `S_n` on labels
/// `1..n` (each label moves together with its barred partner).
///
/// Representatives are the indices whose labels appear in first-occurrence
/// order `1, 2, 3, ...`.
pub fn relabel_representatives(spec: TensorSpaceSpec) -> Vec<usize> {
    fn go(spec: &TensorSpaceSpec, slot: usize, next: usize, prefix: &mut Vec<usize>, out: &mut Vec<usize>) {
        if slot == spec.slots() {
            out.push(spec.index_of(prefix));
            return;
        }
        for t in 0..2 * spec.n {
            let label = t % spec.n;
            if label > next {
                continue;
            }
            prefix.push(t);
            go(spec, slot + 1, next.max(label + 1).min(spec.n), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&spec, 0, 0, &mut Vec::new(), &mut out);
    out.sort_unstable();
    out
}

struct Trie {
    children: Vec<Vec<(usize, usize)>>,
    terminals: Vec<Vec<(usize, usize)>>,
}

impl Trie {
    fn build(combos: &[Vec<(Rational, Vec<usize>)>]) -> Trie {
        let mut trie = Trie { children: vec![Vec::new()], terminals: vec![Vec::new()] };
        for (ci, combo) in combos.iter().enumerate() {
            for (ti, (_, word)) in combo.iter().enumerate() {
                let mut node = 0;
                for &op in word {
                    node = match trie.children[node].iter().find(|(o, _)| *o == op) {
                        Some(&(_, child)) => child,
                        None => {
                            let child = trie.children.len();
                            trie.children.push(Vec::new());
                            trie.terminals.push(Vec::new());
                            trie.children[node].push((op, child));
                            child
                        }
                    };
                }
                trie.terminals[node].push((ci, ti));
            }
        }
        trie
    }
}

/// Checks `sum_i c_i W_i = 0` for each combination, where a word of operator
/// indices applies its first operator first. Only the given columns are
/// examined; words sharing a prefix share its evaluation.
pub fn check_identities(
    ops: &[&SparseMatrix],
    combos: &[Vec<(Rational, Vec<usize>)>],
    columns: &[usize],
    dim: usize,
) -> Vec<Option<IdentityFailure>> {
    let trie = Trie::build(combos);
    let mut failures: Vec<Option<IdentityFailure>> = vec![None; combos.len()];
    let mut acc = Accumulator::new(dim);
    let mut hits: HashMap<usize, Vec<(usize, SparseVector)>> = HashMap::new();

    fn visit(
        trie: &Trie,
        ops: &[&SparseMatrix],
        node: usize,
        v: &SparseVector,
        acc: &mut Accumulator,
        hits: &mut HashMap<usize, Vec<(usize, SparseVector)>>,
    ) {
        for &(ci, ti) in &trie.terminals[node] {
            hits.entry(ci).or_default().push((ti, v.clone()));
        }
        for &(op, child) in &trie.children[node] {
            for (j, x) in v.iter() {
                acc.add_column(ops[op].column_entries(j), x);
            }
            let w = acc.drain();
            if !w.is_zero() {
                visit(trie, ops, child, &w, acc, hits);
            }
        }
    }

    for &col in columns {
        if failures.iter().all(Option::is_some) {
            break;
        }
        hits.clear();
        visit(&trie, ops, 0, &SparseVector::unit(dim, col), &mut acc, &mut hits);
        for (ci, combo) in combos.iter().enumerate() {
            if failures[ci].is_some() {
                continue;
            }
            if let Some(list) = hits.get(&ci) {
                for (ti, v) in list {
                    acc.add_vector(v, &combo[*ti].0);
                }
            }
            let residual = acc.drain();
            if !residual.is_zero() {
                failures[ci] = Some(IdentityFailure { column: col, residual_nnz: residual.nnz() });
            }
        }
    }
    failures
}
