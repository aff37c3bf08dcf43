use super::*;
use crate::brauer::{self, BrauerDiagram};
use crate::exactla::Rational;
use crate::relations::defining_relations;
use crate::tensoraction::{GeneratorToken, PsiEvaluator, TensorSpaceSpec, WordCombination};
use GeneratorToken::{E, S, Y};

fn cup_cap() -> BrauerDiagram {
    BrauerDiagram::from_pairs(2, &[(1, 2), (-1, -2)]).unwrap()
}

#[test]
fn regularity_examples() {
    let id = BrauerDiagram::identity(2);
    assert!(is_regular(&DotDiagram::new(id, vec![1, 0], vec![0, 0]).unwrap()));
    assert!(!is_regular(&DotDiagram::new(cup_cap(), vec![0, 1], vec![0, 0]).unwrap()));
    assert!(is_regular(&DotDiagram::new(cup_cap(), vec![0, 0], vec![0, 1]).unwrap()));
    assert!(!is_regular(&DotDiagram::new(cup_cap(), vec![0, 0], vec![1, 0]).unwrap()));
}

#[test]
fn regular_counts() {
    assert_eq!(enumerate_regular(2, 0).len(), 3);
    assert_eq!(enumerate_regular(2, 1).len(), 9);
    assert_eq!(enumerate_regular(2, 2).len(), 18);
    for k in 0..5 {
        assert_eq!(enumerate_regular(1, k).len(), k + 1);
    }
    assert!(enumerate_regular(3, 2).iter().all(is_regular));
}

#[test]
fn normalize_examples() {
    assert_eq!(normalize(&[S(1), S(1)], 2).unwrap(), PdElement::one(2));
    assert!(normalize(&[E(1), Y(1), E(1)], 2).unwrap().is_zero());
    // y_1 s_1 is already regular, and equals s_1 y_2 - eps_1 - 1
    let x = normalize(&[Y(1), S(1)], 2).unwrap();
    let s = BrauerDiagram::of_token(S(1), 2).unwrap().unwrap();
    assert_eq!(x, PdElement::from_dot(DotDiagram::new(s, vec![1, 0], vec![0, 0]).unwrap()).unwrap());
    let minus = -Rational::ONE;
    let rhs = normalize_combination(&vec![(Rational::ONE, vec![S(1), Y(2)]), (minus.clone(), vec![E(1)]), (minus, vec![])], 2);
    assert_eq!(x, rhs.unwrap());
    assert_eq!(normalize(&[S(1), Y(2)], 2).unwrap().terms().len(), 3);
    assert!(normalize(&[Y(3)], 2).is_err());
}

#[test]
fn eps_dots_eps_vanish() {
    for k in 0..=4 {
        let mut w = vec![E(1)];
        w.extend(std::iter::repeat_n(Y(1), k));
        w.push(E(1));
        assert!(normalize(&w, 2).unwrap().is_zero(), "k = {k}");
        assert!(normalize(&w, 3).unwrap().is_zero(), "k = {k}");
    }
}

#[test]
fn defining_relations_normalize_to_zero() {
    for d in 1..=3 {
        for r in defining_relations(d, 3) {
            assert!(normalize_combination(&r.difference(), d).unwrap().is_zero(), "{} at d = {d}", r.name);
        }
    }
}

#[test]
fn normal_forms_are_idempotent() {
    for x in enumerate_regular(3, 2) {
        let back = normalize(&x.word(), 3).unwrap();
        assert_eq!(back, PdElement::from_dot(x).unwrap());
    }
}

fn all_words(d: usize, len: usize) -> Vec<Vec<GeneratorToken>> {
    let gens = GeneratorToken::all(d);
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<GeneratorToken>| {
                gens.iter().map(move |&t| {
                    let mut v = w.clone();
                    v.push(t);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn normal_form_is_sound_on_short_words() {
    let d = 2;
    let words = all_words(d, 3);
    let combos: Vec<WordCombination> = words
        .iter()
        .map(|w| {
            let mut c = normalize(w, d).unwrap().to_word_combination();
            c.push((-Rational::ONE, w.clone()));
            c
        })
        .collect();
    for (n, m) in [(2, 0), (2, 1), (3, 1)] {
        let ev = PsiEvaluator::new(TensorSpaceSpec::new(n, m, d).unwrap()).unwrap();
        for (w, fail) in words.iter().zip(ev.check_vanishing(&combos).unwrap()) {
            assert!(fail.is_none(), "{w:?} at n = {n}, m = {m}");
        }
    }
}

#[test]
fn degree_is_filtered_and_graded_identities_hold() {
    let d = 3;
    // tau y_1 tau^{-1} with tau = s_2 s_1 has top part y_{tau(1)} = y_3
    let x = normalize(&[S(2), S(1), Y(1), S(1), S(2)], d).unwrap();
    assert_eq!(x.degree(), Some(1));
    let top = x.homogeneous_part(1);
    let y3 = normalize(&[Y(3)], d).unwrap();
    assert_eq!(top, y3);
    // marked(1,2) y_1^k marked(1,2) has no top-degree part
    for k in 1..=3 {
        let mut w = vec![E(1)];
        w.extend(std::iter::repeat_n(Y(1), k));
        w.push(E(1));
        let z = normalize(&w, d).unwrap();
        assert!(z.degree().is_none_or(|g| g < k));
    }
    let a = normalize(&[E(1), Y(1)], d).unwrap().sub(&normalize(&[E(1), Y(2)], d).unwrap()).unwrap();
    assert!(a.homogeneous_part(1).is_zero());
}

#[test]
fn multiplication_examples() {
    let y1 = normalize(&[Y(1)], 2).unwrap();
    let y2 = normalize(&[Y(2)], 2).unwrap();
    assert_eq!(multiply(&y1, &y2).unwrap(), multiply(&y2, &y1).unwrap());
    let y11 = multiply(&y1, &y1).unwrap();
    let want = DotDiagram::new(BrauerDiagram::identity(2), vec![2, 0], vec![0, 0]).unwrap();
    assert_eq!(y11, PdElement::from_dot(want).unwrap());
    let e = normalize(&[E(1)], 2).unwrap();
    assert!(multiply(&e, &e).unwrap().is_zero());
    for x in enumerate_regular(2, 2) {
        let x = PdElement::from_dot(x).unwrap();
        assert_eq!(multiply(&x, &PdElement::one(2)).unwrap(), x);
    }
}

#[test]
fn pi_examples() {
    assert!(pi_m_word(&[Y(1)], 2, 0).unwrap().is_zero());
    let z = pi_m_word(&[Y(1)], 2, 1).unwrap();
    assert_eq!(z, brauer::jm_element(2, 3).unwrap());
    assert_eq!(z.terms().len(), 2);
}

#[test]
fn pi_respects_relations_and_normal_form() {
    let d = 2;
    for m in 0..=2 {
        for r in defining_relations(d, 2) {
            assert!(pi_m_combination(&r.difference(), d, m).unwrap().is_zero(), "{} at m = {m}", r.name);
        }
        for w in all_words(d, 3).iter().step_by(3) {
            let x = normalize(w, d).unwrap();
            assert_eq!(pi_m(&x, m).unwrap(), pi_m_word(w, d, m).unwrap(), "{w:?} at m = {m}");
        }
    }
}

#[test]
fn daha_examples() {
    assert!(to_daha_word(&[E(1)], 2).unwrap().is_zero());
    let a = to_daha_word(&[S(1), Y(1)], 2).unwrap().sub(&to_daha_word(&[Y(2), S(1)], 2).unwrap()).unwrap();
    assert_eq!(a, DahaElement::one(2).scale(&-Rational::ONE));
    let b = to_daha_word(&[Y(1), Y(2)], 2).unwrap().sub(&to_daha_word(&[Y(2), Y(1)], 2).unwrap()).unwrap();
    assert!(b.is_zero());
    for r in defining_relations(3, 3) {
        assert!(to_daha_combination(&r.difference(), 3).unwrap().is_zero(), "{}", r.name);
    }
}

#[test]
fn daha_product_is_associative() {
    let d = 3;
    let xs: Vec<DahaElement> = [vec![S(1), Y(2), Y(2)], vec![Y(1), S(2), Y(3)], vec![S(2), S(1), Y(1)]]
        .iter()
        .map(|w| to_daha_word(w, d).unwrap())
        .collect();
    let l = xs[0].multiply(&xs[1]).unwrap().multiply(&xs[2]).unwrap();
    let r = xs[0].multiply(&xs[1].multiply(&xs[2]).unwrap()).unwrap();
    assert_eq!(l, r);
}

#[test]
fn pbw_small_cases() {
    let r = pbw_rank_check(1, 2, 4).unwrap();
    assert_eq!((r.count, r.rank), (3, 3));
    let r = pbw_rank_check(2, 0, 3).unwrap();
    assert_eq!((r.count, r.rank), (3, 3));
    assert!(pbw_rank_check(2, 1, 3).is_err());
}
