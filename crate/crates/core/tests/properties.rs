use num_rational::BigRational;
use proptest::prelude::*;

use periplectic_core::affine::{multiply, normalize};
use periplectic_core::document::ElementDocument;
use periplectic_core::exactla::{rank, EchelonBasis};
use periplectic_core::tensoraction::GeneratorToken;
use periplectic_core::{Rational, SparseMatrix, SparseVector};

/// Plain row reduction on a dense copy.
fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &prow[c];
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &(&f * p);
                }
            }
        }
        r += 1;
    }
    r
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r))
}

fn word() -> impl Strategy<Value = Vec<GeneratorToken>> {
    let tokens = GeneratorToken::all(2);
    proptest::collection::vec(proptest::sample::select(tokens), 0..6)
}

proptest! {
    #[test]
    fn sparse_rank_matches_dense(m in small_matrix()) {
        let rows: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        let sparse = SparseMatrix::from_dense(&rows);
        let want = dense_rank(&rows);
        prop_assert_eq!(rank(&sparse), want);
        let mut basis = EchelonBasis::new(rows[0].len());
        for r in &rows {
            basis.insert(&SparseVector::from_dense(r)).unwrap();
        }
        prop_assert_eq!(basis.rank(), want);
    }

    #[test]
    fn rational_arithmetic_matches_bigrational(a in any::<i64>(), b in 1i64..=i64::MAX, c in any::<i64>(), e in 1i64..=i64::MAX) {
        let (x, y) = (Rational::new(a, b), Rational::new(c, e));
        let (bx, by) = (BigRational::new(a.into(), b.into()), BigRational::new(c.into(), e.into()));
        prop_assert_eq!((&x + &y).to_big(), &bx + &by);
        prop_assert_eq!((&x - &y).to_big(), &bx - &by);
        prop_assert_eq!((&x * &y).to_big(), &bx * &by);
        if c != 0 {
            prop_assert_eq!((&x / &y).to_big(), &bx / &by);
        }
    }

    #[test]
    fn documents_round_trip(w in word()) {
        let x = normalize(&w, 2).unwrap();
        let doc = ElementDocument::from_affine(&x);
        let back = ElementDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(back.to_affine().unwrap(), x);
    }

    #[test]
    fn product_of_normal_forms_is_normal_form_of_concatenation(u in word(), v in word()) {
        let uv: Vec<GeneratorToken> = u.iter().chain(&v).copied().collect();
        let lhs = multiply(&normalize(&u, 2).unwrap(), &normalize(&v, 2).unwrap()).unwrap();
        prop_assert_eq!(lhs, normalize(&uv, 2).unwrap());
    }
}
