//! Verification suites run by the command line front end.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::affine::{enumerate_regular, pbw_rank_check, to_daha_combination, DahaElement};
use crate::brauer::{self, ADElement};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::relations::defining_relations;
use crate::superalgebra::{bar, odd_form, parity_bit, pn_basis_with_duals};
use crate::tensoraction::{
    op_casimir, op_epsilon, op_omega, op_s, op_y, slot_action, EndoOperator, GeneratorToken, PsiEvaluator, TensorSpaceSpec,
    WordCombination,
};
use crate::SparseMatrix;

use GeneratorToken::{E, S, Y};

pub const MAX_N: usize = 4;
pub const MAX_PBW_N: usize = 6;
pub const MAX_M: usize = 3;
pub const MAX_D: usize = 3;
pub const MAX_DEGREE: usize = 2;
/// Largest `k` used for the `eps_1 y_1^k eps_1 = 0` relations.
pub const RELATION_DOT_POWER: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Relations,
    Appendix,
    Jm,
    Pbw,
    Daha,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "relations" => Ok(Suite::Relations),
            "appendix" => Ok(Suite::Appendix),
            "jm" => Ok(Suite::Jm),
            "pbw" => Ok(Suite::Pbw),
            "daha" => Ok(Suite::Daha),
            _ => Err(Error::InvalidParameter(format!("unknown suite {s:?}; expected relations, appendix, jm, pbw or daha"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Relations => "relations",
            Suite::Appendix => "appendix",
            Suite::Jm => "jm",
            Suite::Pbw => "pbw",
            Suite::Daha => "daha",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub max_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub params: VerifyParams,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

fn outcome(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed, detail: detail.into() }
}

fn zero_check(name: impl Into<String>, op: &EndoOperator) -> CheckOutcome {
    let nnz = op.matrix.nnz();
    outcome(name, nnz == 0, if nnz == 0 { "exact zero".to_string() } else { format!("{nnz} nonzero entries") })
}

fn bound(what: &str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::InvalidParameter(format!("{what} = {value} is outside {lo}..={hi}; the suites are capped to keep runs at desk scale")));
    }
    Ok(())
}

pub fn check_params(suite: Suite, p: &VerifyParams) -> Result<()> {
    match suite {
        Suite::Pbw => {
            bound("d", p.d, 1, MAX_D)?;
            bound("max-degree", p.max_degree, 0, MAX_DEGREE)?;
            bound("n", p.n, p.d + p.max_degree + 1, MAX_PBW_N)
        }
        Suite::Relations | Suite::Appendix => {
            bound("n", p.n, 1, MAX_N)?;
            bound("m", p.m, 0, MAX_M)?;
            bound("d", p.d, 2, MAX_D)
        }
        Suite::Jm => {
            bound("n", p.n, 1, MAX_N)?;
            bound("d", p.d, 1, MAX_D)
        }
        Suite::Daha => bound("d", p.d, 1, MAX_D),
    }
}

/// Runs one suite. Checks come back sorted by name.
pub fn run_suite(suite: Suite, params: VerifyParams) -> Result<VerifyReport> {
    check_params(suite, &params)?;
    let mut checks = match suite {
        Suite::Relations => relations_suite(&params)?,
        Suite::Appendix => appendix_suite(&params)?,
        Suite::Jm => jm_suite(&params)?,
        Suite::Pbw => pbw_suite(&params)?,
        Suite::Daha => daha_suite(&params)?,
    };
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { suite, params, passed, checks })
}

fn relations_suite(p: &VerifyParams) -> Result<Vec<CheckOutcome>> {
    let spec = TensorSpaceSpec::new(p.n, p.m, p.d)?;
    let ev = PsiEvaluator::new(spec)?;
    let rels = defining_relations(p.d, RELATION_DOT_POWER);
    let combos: Vec<WordCombination> = rels.iter().map(|r| r.difference()).collect();
    let results = ev.check_vanishing(&combos)?;
    let mut out: Vec<CheckOutcome> = rels
        .iter()
        .zip(results)
        .map(|(r, fail)| match fail {
            None => outcome(format!("relation {}", r.name), true, "exact on every column"),
            Some(f) => outcome(format!("relation {}", r.name), false, format!("column {} leaves {} nonzero entries", f.column, f.residual_nnz)),
        })
        .collect();
    out.extend(epsilon_checks(p.n)?);
    Ok(out)
}

/// The entrywise formula for `eps` on `V (x) V`, and `2 C_{V,V} = s + eps`.
pub fn epsilon_checks(n: usize) -> Result<Vec<CheckOutcome>> {
    let spec = TensorSpaceSpec::new(n, 0, 2)?;
    let b = 2 * n;
    let eps = op_epsilon(1, spec)?;
    let mut triplets = Vec::new();
    for a in 0..b {
        for c in 0..b {
            let form = odd_form(n, a, c)?;
            if form.is_zero() {
                continue;
            }
            for i in 0..n {
                triplets.push((spec.index_of(&[i, bar(n, i)]), spec.index_of(&[a, c]), form.clone()));
                triplets.push((spec.index_of(&[bar(n, i), i]), spec.index_of(&[a, c]), -&form));
            }
        }
    }
    let formula = SparseMatrix::from_triplets(spec.dim(), spec.dim(), triplets);
    let mut case_split = Vec::new();
    for a in 0..b {
        let col = spec.index_of(&[a, bar(n, a)]);
        for i in 0..b {
            let sign = if parity_bit(n, i) == 1 { -Rational::ONE } else { Rational::ONE };
            case_split.push((spec.index_of(&[i, bar(n, i)]), col, sign));
        }
    }
    let cases = SparseMatrix::from_triplets(spec.dim(), spec.dim(), case_split);
    let two_c = op_casimir(1, spec)?.scale(&Rational::from(2));
    let split = two_c.add_scaled(&-Rational::ONE, &op_s(1, spec)?)?.add_scaled(&-Rational::ONE, &eps)?;
    Ok(vec![
        outcome(format!("eps formula (form) n={n}"), formula == eps.matrix, "entrywise"),
        outcome(format!("eps formula (cases) n={n}"), cases == eps.matrix, "entrywise"),
        zero_check(format!("casimir split 2C = s + eps n={n}"), &split),
    ])
}

fn appendix_suite(p: &VerifyParams) -> Result<Vec<CheckOutcome>> {
    let (n, m, d) = (p.n, p.m, p.d);
    let basis = pn_basis_with_duals(n)?;
    let mut out = Vec::new();

    let spec = TensorSpaceSpec::new(n, m, d)?;
    for i in 1..d {
        let eps = op_epsilon(i, spec)?;
        let (mut left_fail, mut right_fail) = (Vec::new(), Vec::new());
        for pair in &basis {
            let x = slot_action(&pair.x, m + i - 1, spec)?.add(&slot_action(&pair.x, m + i, spec)?)?;
            if !x.compose(&eps)?.is_zero() {
                left_fail.push(pair.label.clone());
            }
            if !eps.compose(&x)?.is_zero() {
                right_fail.push(pair.label.clone());
            }
        }
        out.push(outcome(format!("x-action kills the image of eps_{i}"), left_fail.is_empty(), list_detail(&left_fail, basis.len())));
        out.push(outcome(format!("eps_{i} kills the x-action"), right_fail.is_empty(), list_detail(&right_fail, basis.len())));
    }

    let pair_spec = TensorSpaceSpec::new(n, 0, 2)?;
    let eps = op_epsilon(1, pair_spec)?;
    let (mut dual_left, mut dual_right) = (Vec::new(), Vec::new());
    for pair in &basis {
        let diff = slot_action(&pair.dual, 0, pair_spec)?.add_scaled(&-Rational::ONE, &slot_action(&pair.dual, 1, pair_spec)?)?;
        if !diff.compose(&eps)?.is_zero() {
            dual_left.push(pair.label.clone());
        }
        if !eps.compose(&diff)?.is_zero() {
            dual_right.push(pair.label.clone());
        }
    }
    out.push(outcome("dual-basis difference kills the eps image", dual_left.is_empty(), list_detail(&dual_left, basis.len())));
    out.push(outcome("eps kills the dual-basis difference", dual_right.is_empty(), list_detail(&dual_right, basis.len())));

    for i in 1..d {
        for k in i + 2..=d {
            let sum = op_omega(i, k, spec)?.add(&op_omega(i + 1, k, spec)?)?;
            let eps = op_epsilon(i, spec)?;
            out.push(zero_check(format!("Omega sum (Omega_{i},{k} + Omega_{},{k}) eps_{i}", i + 1), &sum.compose(&eps)?));
            out.push(zero_check(format!("Omega sum eps_{i} (Omega_{i},{k} + Omega_{},{k})", i + 1), &eps.compose(&sum)?));
        }
    }

    for a in 1..d {
        let eps = op_epsilon(a, spec)?;
        let diff = op_y(a, spec)?.add_scaled(&-Rational::ONE, &op_y(a + 1, spec)?)?;
        // algebra products act on the right: eps_a (y_a - y_{a+1}) applies eps_a first
        let lhs_a = diff.compose(&eps)?.add_scaled(&-Rational::ONE, &eps)?;
        let lhs_b = eps.compose(&diff)?.add(&eps)?;
        out.push(zero_check(format!("dot difference eps_{a} (y_{a} - y_{}) = eps_{a}", a + 1), &lhs_a));
        out.push(zero_check(format!("dot difference (y_{a} - y_{}) eps_{a} = -eps_{a}", a + 1), &lhs_b));
    }
    Ok(out)
}

fn list_detail(failed: &[String], total: usize) -> String {
    if failed.is_empty() {
        format!("all {total} basis elements")
    } else {
        format!("fails for {}", failed.join(", "))
    }
}

fn jm_suite(p: &VerifyParams) -> Result<Vec<CheckOutcome>> {
    let (n, d) = (p.n, p.d);
    let spec = TensorSpaceSpec::new(n, 0, d)?;
    let mut out = Vec::new();
    for j in 1..=d {
        let z = brauer::jm_element(j, d)?;
        let same = brauer::psi_image(&z, n)? == op_y(j, spec)?;
        out.push(outcome(format!("Psi_C(y_{j}) = psi(z_{j})"), same, format!("n={n}, d={d}")));
    }
    for i in 1..d {
        let e = ADElement::from_word(&[E(i)], d)?;
        for j in [i, i + 1] {
            let z = brauer::jm_element(j, d)?;
            let mut power = ADElement::one(d);
            let mut bad = Vec::new();
            for k in 0..=3 {
                if k > 0 {
                    power = brauer::multiply(&power, &z)?;
                }
                if !brauer::multiply(&brauer::multiply(&e, &power)?, &e)?.is_zero() {
                    bad.push(k.to_string());
                }
            }
            out.push(outcome(
                format!("eps_{i} z_{j}^k eps_{i} = 0"),
                bad.is_empty(),
                if bad.is_empty() { "k = 0..3".to_string() } else { format!("nonzero for k = {}", bad.join(", ")) },
            ));
        }
    }
    Ok(out)
}

fn pbw_suite(p: &VerifyParams) -> Result<Vec<CheckOutcome>> {
    let r = pbw_rank_check(p.d, p.max_degree, p.n)?;
    let oracle = enumerate_regular(p.d, p.max_degree).len();
    let levels: Vec<String> = r.rank_by_level.iter().map(|(m, k)| format!("m={m}:{k}")).collect();
    Ok(vec![
        outcome("count matches enumeration", r.count == oracle, format!("count {}, enumeration {oracle}", r.count)),
        outcome("rank equals count", r.rank == r.count, format!("count {}, rank {} ({})", r.count, r.rank, levels.join(" "))),
    ])
}

fn daha_suite(p: &VerifyParams) -> Result<Vec<CheckOutcome>> {
    let d = p.d;
    let w = |word: &[GeneratorToken]| -> WordCombination { vec![(Rational::ONE, word.to_vec())] };
    let minus = |word: &[GeneratorToken]| -> (Rational, Vec<GeneratorToken>) { (-Rational::ONE, word.to_vec()) };
    let mut out = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            let mut c = w(&[Y(i), Y(j)]);
            c.push(minus(&[Y(j), Y(i)]));
            let x = to_daha_combination(&c, d)?;
            out.push(outcome(format!("(1) v_{i} v_{j} = v_{j} v_{i}"), x.is_zero(), x.to_string()));
        }
    }
    let neg_one = DahaElement::one(d).scale(&-Rational::ONE);
    for i in 1..d {
        let mut c = w(&[S(i), Y(i)]);
        c.push(minus(&[Y(i + 1), S(i)]));
        let x = to_daha_combination(&c, d)?;
        out.push(outcome(format!("(2) s_{i} v_{i} - v_{} s_{i} = -1", i + 1), x == neg_one, x.to_string()));
        let mut c = w(&[S(i), Y(i + 1)]);
        c.push(minus(&[Y(i), S(i)]));
        let x = to_daha_combination(&c, d)?;
        out.push(outcome(format!("(2') s_{i} v_{} - v_{i} s_{i} = 1", i + 1), x == DahaElement::one(d), x.to_string()));
        let mut bad = Vec::new();
        for word in [vec![E(i)], vec![S(i), E(i)], vec![Y(i), E(i), Y(i + 1)], vec![E(i), Y(i), Y(i), S(i)]] {
            if !to_daha_combination(&w(&word), d)?.is_zero() {
                bad.push(crate::tensoraction::format_word(&word));
            }
        }
        out.push(outcome(format!("eps_{i} words map to 0"), bad.is_empty(), if bad.is_empty() { "all".to_string() } else { bad.join(", ") }));
    }
    let mut bad = Vec::new();
    for r in defining_relations(d, RELATION_DOT_POWER) {
        if !to_daha_combination(&r.difference(), d)?.is_zero() {
            bad.push(r.name.to_string());
        }
    }
    out.push(outcome("defining relations map to 0", bad.is_empty(), if bad.is_empty() { "all".to_string() } else { bad.join(", ") }));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, m: usize, d: usize, max_degree: usize) -> VerifyParams {
        VerifyParams { n, m, d, max_degree }
    }

    #[test]
    fn suites_pass_at_small_parameters() {
        for (suite, p) in [
            (Suite::Relations, params(2, 1, 2, 0)),
            (Suite::Appendix, params(2, 1, 3, 0)),
            (Suite::Jm, params(3, 0, 3, 0)),
            (Suite::Pbw, params(4, 0, 2, 1)),
            (Suite::Daha, params(1, 0, 3, 0)),
        ] {
            let r = run_suite(suite, p).unwrap();
            for c in &r.checks {
                assert!(c.passed, "{suite}: {} ({})", c.name, c.detail);
            }
            assert!(r.passed);
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(run_suite(Suite::Relations, params(5, 0, 2, 0)).is_err());
        assert!(run_suite(Suite::Relations, params(2, 4, 2, 0)).is_err());
        assert!(run_suite(Suite::Pbw, params(3, 0, 2, 1)).is_err());
        assert!(run_suite(Suite::Jm, params(2, 0, 4, 0)).is_err());
    }
}
