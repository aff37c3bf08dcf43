//! Defining relations of the affine periplectic Brauer algebra as formal
//! identities between generator words.

use crate::exactla::Rational;
use crate::tensoraction::{GeneratorToken, WordCombination};

use GeneratorToken::{E, S, Y};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub lhs: WordCombination,
    pub rhs: WordCombination,
}

impl Relation {
    fn new(name: impl Into<String>, lhs: WordCombination, rhs: WordCombination) -> Self {
        Relation { name: name.into(), lhs, rhs }
    }

    /// `lhs - rhs`.
    pub fn difference(&self) -> WordCombination {
        let mut out = self.lhs.clone();
        out.extend(self.rhs.iter().map(|(c, w)| (-c, w.clone())));
        out
    }

    /// True when no `y` appears, so the relation lives in the finite Brauer algebra.
    pub fn is_finite(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).all(|(_, w)| w.iter().all(|t| !t.is_dot()))
    }
}

fn term(c: i64, w: &[GeneratorToken]) -> (Rational, Vec<GeneratorToken>) {
    (Rational::from(c), w.to_vec())
}

fn one(w: &[GeneratorToken]) -> WordCombination {
    vec![term(1, w)]
}

fn neg(w: &[GeneratorToken]) -> WordCombination {
    vec![term(-1, w)]
}

fn zero() -> WordCombination {
    Vec::new()
}

/// All defining relations for `d` strands, with the nilpotency relation
/// `eps_1 y_1^k eps_1 = 0` instantiated for `1 <= k <= max_k`.
pub fn defining_relations(d: usize, max_k: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    let gens = 1..d;
    for a in gens.clone() {
        out.push(Relation::new(format!("swap_involution[a={a}]"), one(&[S(a), S(a)]), one(&[])));
    }
    for a in gens.clone() {
        for b in a + 2..d {
            out.push(Relation::new(format!("swap_far_commute[a={a},b={b}]"), one(&[S(a), S(b)]), one(&[S(b), S(a)])));
        }
    }
    for c in 1..d.saturating_sub(1) {
        out.push(Relation::new(
            format!("braid[c={c}]"),
            one(&[S(c), S(c + 1), S(c)]),
            one(&[S(c + 1), S(c), S(c + 1)]),
        ));
    }
    for a in gens.clone() {
        for i in (1..=d).filter(|&i| i != a && i != a + 1) {
            out.push(Relation::new(format!("swap_dot_commute[a={a},i={i}]"), one(&[S(a), Y(i)]), one(&[Y(i), S(a)])));
        }
    }
    for a in gens.clone() {
        out.push(Relation::new(format!("eps_square[a={a}]"), one(&[E(a), E(a)]), zero()));
    }
    if d >= 2 {
        for k in 1..=max_k {
            let mut w = vec![E(1)];
            w.extend(std::iter::repeat_n(Y(1), k));
            w.push(E(1));
            out.push(Relation::new(format!("eps_dots_eps[k={k}]"), one(&w), zero()));
        }
    }
    for a in gens.clone() {
        for b in gens.clone().filter(|&b| a.abs_diff(b) > 1) {
            out.push(Relation::new(format!("swap_eps_far_commute[a={a},b={b}]"), one(&[S(a), E(b)]), one(&[E(b), S(a)])));
            if a < b {
                out.push(Relation::new(format!("eps_far_commute[a={a},b={b}]"), one(&[E(a), E(b)]), one(&[E(b), E(a)])));
            }
        }
    }
    for a in gens.clone() {
        for i in (1..=d).filter(|&i| i != a && i != a + 1) {
            out.push(Relation::new(format!("eps_dot_commute[a={a},i={i}]"), one(&[E(a), Y(i)]), one(&[Y(i), E(a)])));
        }
    }
    for i in 1..=d {
        for j in i + 1..=d {
            out.push(Relation::new(format!("dot_commute[i={i},j={j}]"), one(&[Y(i), Y(j)]), one(&[Y(j), Y(i)])));
        }
    }
    for a in gens.clone() {
        out.push(Relation::new(format!("eps_swap[a={a}]"), one(&[E(a), S(a)]), neg(&[E(a)])));
        out.push(Relation::new(format!("swap_eps[a={a}]"), one(&[S(a), E(a)]), one(&[E(a)])));
    }
    for c in 1..d.saturating_sub(1) {
        let (c1, c2) = (c, c + 1);
        out.push(Relation::new(format!("swap_eps_eps_left[c={c}]"), one(&[S(c1), E(c2), E(c1)]), neg(&[S(c2), E(c1)])));
        out.push(Relation::new(format!("eps_eps_swap_left[c={c}]"), one(&[E(c1), E(c2), S(c1)]), one(&[E(c1), S(c2)])));
        out.push(Relation::new(format!("eps_eps_swap_right[c={c}]"), one(&[E(c2), E(c1), S(c2)]), neg(&[E(c2), S(c1)])));
        out.push(Relation::new(format!("swap_eps_eps_right[c={c}]"), one(&[S(c2), E(c1), E(c2)]), one(&[S(c1), E(c2)])));
        out.push(Relation::new(format!("eps_snake_right[c={c}]"), one(&[E(c2), E(c1), E(c2)]), neg(&[E(c2)])));
        out.push(Relation::new(format!("eps_snake_left[c={c}]"), one(&[E(c1), E(c2), E(c1)]), neg(&[E(c1)])));
    }
    for a in gens.clone() {
        out.push(Relation::new(
            format!("swap_dot_left[a={a}]"),
            vec![term(1, &[S(a), Y(a)]), term(-1, &[Y(a + 1), S(a)])],
            vec![term(1, &[E(a)]), term(-1, &[])],
        ));
        out.push(Relation::new(
            format!("swap_dot_right[a={a}]"),
            vec![term(1, &[Y(a), S(a)]), term(-1, &[S(a), Y(a + 1)])],
            vec![term(-1, &[E(a)]), term(-1, &[])],
        ));
    }
    for a in gens {
        out.push(Relation::new(
            format!("eps_dot_difference[a={a}]"),
            vec![term(1, &[E(a), Y(a)]), term(-1, &[E(a), Y(a + 1)])],
            one(&[E(a)]),
        ));
        out.push(Relation::new(
            format!("dot_difference_eps[a={a}]"),
            vec![term(1, &[Y(a), E(a)]), term(-1, &[Y(a + 1), E(a)])],
            neg(&[E(a)]),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let r2 = defining_relations(2, 3);
        assert!(r2.iter().all(|r| !r.name.starts_with("braid")));
        let r3 = defining_relations(3, 3);
        assert_eq!(r3.iter().filter(|r| r.name.starts_with("braid")).count(), 1);
        assert_eq!(r3.iter().filter(|r| r.name.starts_with("eps_dots_eps")).count(), 3);
        assert!(defining_relations(1, 3).iter().all(|r| r.name.starts_with("dot_commute")));
    }

    #[test]
    fn relations_hold_on_small_tensor_spaces() {
        use crate::tensoraction::{PsiEvaluator, TensorSpaceSpec};
        for (n, m, d) in [(1, 1, 2), (2, 1, 2), (2, 0, 3)] {
            let ev = PsiEvaluator::new(TensorSpaceSpec::new(n, m, d).unwrap()).unwrap();
            let rels = defining_relations(d, 2);
            let combos: Vec<_> = rels.iter().map(Relation::difference).collect();
            for (r, f) in rels.iter().zip(ev.check_vanishing(&combos).unwrap()) {
                assert!(f.is_none(), "{} fails at n={n} m={m}: {f:?}", r.name);
            }
        }
    }
}
