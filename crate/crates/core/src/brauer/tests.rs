use super::*;
use crate::exactla::{rank, SparseMatrix};
use crate::relations::defining_relations;
use crate::tensoraction::op_y;
use GeneratorToken::{E, S};

#[test]
fn structure_constants_match_diagram_concatenation() {
    for d in 0..=MAX_ORACLE_D {
        let alg = brauer_algebra(d).unwrap();
        for (i, g) in alg.diagrams().iter().enumerate() {
            for t in (1..d).map(S).chain((1..d).map(E)) {
                let terms = alg.times_generator(i, t).unwrap();
                let c = g.compose(&BrauerDiagram::of_token(t, d).unwrap().unwrap()).unwrap();
                if c.loops > 0 {
                    assert!(terms.is_empty(), "{g} * {t} should vanish");
                } else {
                    assert_eq!(terms.len(), 1, "{g} * {t}");
                    assert_eq!(alg.diagrams()[terms[0].0], c.diagram);
                    assert_eq!(terms[0].1.abs(), Rational::ONE);
                }
            }
        }
    }
}

#[test]
fn products_agree_with_full_operators() {
    for d in 2..=3 {
        let alg = brauer_algebra(d).unwrap();
        let spec = TensorSpaceSpec::new(d, 0, d).unwrap();
        let ev = PsiEvaluator::new(spec).unwrap();
        for (i, g) in alg.diagrams().iter().enumerate() {
            let x = ev.evaluate_word(&canonical_word(g)).unwrap();
            for t in (1..d).map(S).chain((1..d).map(E)) {
                let lhs = ev.op(t).unwrap().compose(&x).unwrap();
                let mut rhs = EndoOperator::zero(spec);
                for (k, c) in alg.times_generator(i, t).unwrap() {
                    rhs = rhs.add_scaled(c, &ev.evaluate_word(alg.canonical_word(*k)).unwrap()).unwrap();
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn diagram_images_are_independent() {
    for d in 1..=3 {
        let spec = TensorSpaceSpec::new(d, 0, d).unwrap();
        let ev = PsiEvaluator::new(spec).unwrap();
        let dim = spec.dim();
        let diagrams = enumerate_diagrams(d);
        let rows: Vec<_> = diagrams
            .iter()
            .enumerate()
            .flat_map(|(r, g)| {
                let op = ev.evaluate_word(&canonical_word(g)).unwrap();
                op.matrix.triplets().map(|(i, j, v)| (r, i * dim + j, v.clone())).collect::<Vec<_>>()
            })
            .collect();
        let m = SparseMatrix::from_triplets(diagrams.len(), dim * dim, rows);
        assert_eq!(rank(&m), diagrams.len());
    }
}

#[test]
fn finite_relations_hold() {
    for d in 2..=4 {
        for r in defining_relations(d, 0).into_iter().filter(|r| r.is_finite()) {
            let eval = |combo: &crate::tensoraction::WordCombination| {
                let mut out = ADElement::zero(d);
                for (c, w) in combo {
                    out = out.add(&ADElement::from_word(w, d).unwrap().scale(c)).unwrap();
                }
                out
            };
            assert_eq!(eval(&r.lhs), eval(&r.rhs), "{} at d = {d}", r.name);
        }
    }
}

#[test]
fn small_products() {
    let e = ADElement::from_word(&[E(1)], 2).unwrap();
    let s = ADElement::from_word(&[S(1)], 2).unwrap();
    assert!(multiply(&e, &e).unwrap().is_zero());
    assert_eq!(multiply(&s, &s).unwrap(), ADElement::one(2));
    assert_eq!(multiply(&e, &s).unwrap(), e.scale(&-Rational::ONE));
    assert_eq!(multiply(&s, &e).unwrap(), e);
}

#[test]
fn multiplication_is_associative_on_basis_triples() {
    let d = 3;
    let alg = brauer_algebra(d).unwrap();
    let basis: Vec<ADElement> = alg.diagrams().iter().cloned().map(ADElement::from_diagram).collect();
    for (i, x) in basis.iter().enumerate().step_by(2) {
        for y in basis.iter().skip(i % 3).step_by(3) {
            for z in basis.iter().step_by(4) {
                let l = multiply(&multiply(x, y).unwrap(), z).unwrap();
                let r = multiply(x, &multiply(y, z).unwrap()).unwrap();
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn jm_element_matches_dot_operator_at_d2() {
    let z = jm_element(2, 2).unwrap();
    assert_eq!(z.terms().len(), 2);
    let spec = TensorSpaceSpec::new(2, 0, 2).unwrap();
    assert_eq!(psi_image(&z, 2).unwrap(), op_y(2, spec).unwrap());
    assert!(jm_element(1, 2).unwrap().is_zero());
    assert!(jm_element(3, 2).is_err());
}

#[test]
fn oracle_size_is_capped() {
    assert!(BrauerAlgebra::build(MAX_ORACLE_D + 1).is_err());
}
