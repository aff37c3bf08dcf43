use super::*;
use crate::superalgebra::pn_basis_with_duals;

fn spec(n: usize, m: usize, d: usize) -> TensorSpaceSpec {
    TensorSpaceSpec::new(n, m, d).unwrap()
}

#[test]
fn swap_is_an_involution_with_super_sign() {
    let sp = spec(1, 0, 2);
    let s = op_s(1, sp).unwrap();
    assert_eq!(s.compose(&s).unwrap(), EndoOperator::identity(sp));
    // e1 (x) e1bar -> e1bar (x) e1 with sign +1; e1bar (x) e1bar -> -itself
    let col = sp.index_of(&[0, 1]);
    assert_eq!(s.matrix.column(col).entries(), &[(sp.index_of(&[1, 0]), Rational::ONE)]);
    let col = sp.index_of(&[1, 1]);
    assert_eq!(s.matrix.column(col).entries(), &[(col, -Rational::ONE)]);
}

#[test]
fn twice_casimir_is_swap_plus_epsilon() {
    for n in 1..=3 {
        let sp = spec(n, 0, 2);
        let c = op_casimir(1, sp).unwrap().scale(&Rational::from(2));
        let rhs = op_s(1, sp).unwrap().add(&op_epsilon(1, sp).unwrap()).unwrap();
        assert_eq!(c, rhs, "n = {n}");
    }
}

#[test]
fn casimir_with_empty_left_factor_vanishes() {
    assert!(op_casimir(0, spec(2, 0, 1)).unwrap().is_zero());
    assert!(op_y(1, spec(2, 0, 2)).unwrap().is_zero());
    assert!(op_casimir(2, spec(2, 0, 2)).is_err());
}

#[test]
fn epsilon_absorbs_swap() {
    for n in 1..=2 {
        let sp = spec(n, 1, 2);
        let s = op_s(1, sp).unwrap();
        let e = op_epsilon(1, sp).unwrap();
        assert_eq!(e.compose(&s).unwrap(), e);
        assert_eq!(s.compose(&e).unwrap(), e.scale(&-Rational::ONE));
    }
}

#[test]
fn y_is_sum_of_omegas() {
    for (n, m, d) in [(2, 0, 3), (2, 1, 2), (1, 2, 2)] {
        let sp = spec(n, m, d);
        for j in 1..=d {
            let mut sum = EndoOperator::zero(sp);
            for i in 0..j {
                sum = sum.add(&op_omega(i, j, sp).unwrap()).unwrap();
            }
            assert_eq!(sum, op_y(j, sp).unwrap());
        }
    }
}

#[test]
fn generators_are_equivariant() {
    for (n, m, d) in [(1, 1, 2), (2, 0, 2), (2, 1, 2)] {
        let sp = spec(n, m, d);
        for t in GeneratorToken::all(d) {
            assert!(check_equivariance(&op_token(t, sp).unwrap()).unwrap(), "{t} at {sp:?}");
        }
    }
}

#[test]
fn a_single_basis_action_is_not_equivariant() {
    let sp = spec(2, 0, 2);
    let x = &pn_basis_with_duals(2).unwrap()[1].x;
    assert!(!check_equivariance(&g_action(x, sp).unwrap()).unwrap());
}

#[test]
fn commutant_dimensions() {
    assert_eq!(commutant_dimension(1, 1).unwrap(), 1);
    assert_eq!(commutant_dimension(3, 1).unwrap(), 1);
    assert_eq!(commutant_dimension(3, 2).unwrap(), 3);
}

fn relabel(sp: TensorSpaceSpec, perm: &[usize]) -> EndoOperator {
    let n = sp.n;
    EndoOperator::from_columns(sp, |digits, out| {
        let e = digits.iter().map(|&t| perm[t % n] + if t < n { 0 } else { n }).collect();
        out.push((e, Rational::ONE));
    })
}

#[test]
fn generators_commute_with_relabelling() {
    for (n, m, d) in [(3, 0, 3), (3, 1, 2), (2, 2, 2)] {
        let sp = spec(n, m, d);
        let perms: Vec<Vec<usize>> = if n == 3 {
            vec![vec![1, 0, 2], vec![1, 2, 0]]
        } else {
            vec![vec![1, 0]]
        };
        for perm in perms {
            let p = relabel(sp, &perm);
            for t in GeneratorToken::all(d) {
                let op = op_token(t, sp).unwrap();
                assert_eq!(p.compose(&op).unwrap(), op.compose(&p).unwrap(), "{t} {perm:?}");
            }
        }
    }
}

#[test]
fn representative_counts() {
    // set partitions of 5 slots into at most 3 blocks, times 2^5 parity patterns
    assert_eq!(relabel_representatives(spec(3, 3, 2)).len(), 41 * 32);
    assert_eq!(relabel_representatives(spec(1, 0, 2)).len(), 4);
}

#[test]
fn word_evaluation_applies_first_token_first() {
    let sp = spec(2, 0, 2);
    let ev = PsiEvaluator::new(sp).unwrap();
    let w = vec![GeneratorToken::S(1), GeneratorToken::E(1)];
    let direct = ev.op(GeneratorToken::E(1)).unwrap().compose(ev.op(GeneratorToken::S(1)).unwrap()).unwrap();
    assert_eq!(ev.evaluate_word(&w).unwrap(), direct);
    let v = SparseVector::unit(sp.dim(), 3);
    assert_eq!(ev.apply_word(&w, &v).unwrap(), direct.apply(&v).unwrap());
}

#[test]
fn vanishing_check_agrees_with_full_matrices() {
    let sp = spec(2, 1, 2);
    let ev = PsiEvaluator::new(sp).unwrap();
    use GeneratorToken::*;
    let one = Rational::ONE;
    let a: WordCombination = vec![(one.clone(), vec![E(1), S(1)]), (-one.clone(), vec![S(1)])];
    let b: WordCombination = vec![(one.clone(), vec![S(1), E(1)]), (-one.clone(), vec![E(1)])];
    let res = ev.check_vanishing(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(res[0].is_none(), ev.evaluate_combination(&a).unwrap().is_zero());
    assert_eq!(res[1].is_none(), ev.evaluate_combination(&b).unwrap().is_zero());
}
