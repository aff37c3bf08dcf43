use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::diagram::{canonical_word, enumerate_diagrams, BrauerDiagram};
use crate::error::{Error, Result};
use crate::exactla::{Accumulator, EchelonBasis, Rational, SpanSolver, SparseVector};
use crate::tensoraction::{relabel_representatives, GeneratorToken, PsiEvaluator, TensorSpaceSpec, Word};

/// Largest strand count for which the structure constants are computed.
pub const MAX_ORACLE_D: usize = 4;

type Terms = Vec<(usize, Rational)>;

/// The periplectic Brauer algebra `A_d` with its diagram basis.
///
/// The basis element of a diagram is the image of its canonical word, and
/// the signs of the structure constants are fixed by the faithful action on
/// `V^{(x)d}` with `n = d`. Every product of a basis element with a generator
/// is read off by solving in the span of the basis images, then checked on one
/// tensor column per relabelling orbit, which determines the operators
/// completely because all of them commute with relabelling.
pub struct BrauerAlgebra {
    d: usize,
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    words: Vec<Word>,
    table: Vec<Vec<Terms>>,
    products: Mutex<HashMap<(usize, usize), Terms>>,
}

impl std::fmt::Debug for BrauerAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BrauerAlgebra").field("d", &self.d).field("dim", &self.diagrams.len()).finish()
    }
}

impl BrauerAlgebra {
    pub fn build(d: usize) -> Result<Self> {
        if d > MAX_ORACLE_D {
            return Err(Error::InvalidParameter(format!("Brauer algebra structure constants are available for d <= {MAX_ORACLE_D}, got {d}")));
        }
        let diagrams = enumerate_diagrams(d);
        let index: HashMap<_, _> = diagrams.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        let words: Vec<Word> = diagrams.iter().map(canonical_word).collect();
        let spec = TensorSpaceSpec::new(d.max(1), 0, d)?;
        let ev = PsiEvaluator::new(spec)?;
        let dim = spec.dim();
        let columns = relabel_representatives(spec);
        let images: Vec<Vec<SparseVector>> = words
            .iter()
            .map(|w| columns.iter().map(|&c| ev.apply_word(w, &SparseVector::unit(dim, c))).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;

        let count = diagrams.len();
        let mut echelon = EchelonBasis::new(count);
        let mut coords: Vec<(usize, usize)> = Vec::new();
        'outer: for ci in 0..columns.len() {
            let mut by_row: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
            for (g, img) in images.iter().enumerate() {
                for (r, v) in img[ci].iter() {
                    by_row.entry(r).or_default().push((g, v.clone()));
                }
            }
            for (r, entries) in by_row {
                if echelon.insert(&SparseVector::from_pairs(count, entries))? {
                    coords.push((ci, r));
                    if echelon.rank() == count {
                        break 'outer;
                    }
                }
            }
        }
        if echelon.rank() < count {
            return Err(Error::Inconsistent(format!("diagram images are dependent at d = {d}: rank {} of {count}", echelon.rank())));
        }
        let restrict = |cols: &[SparseVector]| {
            SparseVector::from_pairs(count, coords.iter().enumerate().map(|(k, &(ci, r))| (k, cols[ci].get(r))))
        };
        let restricted: Vec<SparseVector> = images.iter().map(|img| restrict(img)).collect();
        let solver = SpanSolver::new(&restricted)?;

        let gens: Vec<GeneratorToken> = (1..d).map(GeneratorToken::S).chain((1..d).map(GeneratorToken::E)).collect();
        let mut acc = Accumulator::new(dim);
        let mut table = Vec::with_capacity(count);
        for img in &images {
            let mut row = Vec::with_capacity(gens.len());
            for &t in &gens {
                let op = ev.op(t)?;
                let target: Vec<SparseVector> = img.iter().map(|v| op.apply(v)).collect::<Result<_>>()?;
                let coeffs = solver.solve(&restrict(&target))?;
                let terms: Terms = coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
                for (ci, want) in target.iter().enumerate() {
                    for (h, c) in &terms {
                        acc.add_vector(&images[*h][ci], c);
                    }
                    if &acc.drain() != want {
                        return Err(Error::Inconsistent(format!("product with {t} is not in the diagram span at d = {d}")));
                    }
                }
                row.push(terms);
            }
            table.push(row);
        }
        Ok(BrauerAlgebra { d, diagrams, index, words, table, products: Mutex::new(HashMap::new()) })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.diagrams.len()
    }

    pub fn diagrams(&self) -> &[BrauerDiagram] {
        &self.diagrams
    }

    pub fn index_of(&self, g: &BrauerDiagram) -> Result<usize> {
        self.index.get(g).copied().ok_or_else(|| Error::DimensionMismatch { left: self.d, right: g.d() })
    }

    pub fn canonical_word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    fn generator_slot(&self, t: GeneratorToken) -> Result<usize> {
        t.validate(self.d)?;
        match t {
            GeneratorToken::S(a) => Ok(a - 1),
            GeneratorToken::E(a) => Ok(self.d - 1 + a - 1),
            GeneratorToken::Y(_) => Err(Error::InvalidParameter(format!("{t} is not in the finite Brauer algebra"))),
        }
    }

    /// `basis[i] * t` for a generator `t`.
    pub fn times_generator(&self, i: usize, t: GeneratorToken) -> Result<&[(usize, Rational)]> {
        Ok(&self.table[i][self.generator_slot(t)?])
    }

    fn right_multiply(&self, x: &BTreeMap<usize, Rational>, t: GeneratorToken) -> Result<BTreeMap<usize, Rational>> {
        let slot = self.generator_slot(t)?;
        let mut out: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in x {
            for (j, a) in &self.table[*i][slot] {
                *out.entry(*j).or_default() += c * a;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Value of a word in the generators `s_a`, `eps_a` as basis coefficients.
    pub fn word_terms(&self, word: &[GeneratorToken]) -> Result<BTreeMap<usize, Rational>> {
        let id = self.index_of(&BrauerDiagram::identity(self.d))?;
        let mut cur = BTreeMap::from([(id, Rational::ONE)]);
        for &t in word {
            if cur.is_empty() {
                break;
            }
            cur = self.right_multiply(&cur, t)?;
        }
        Ok(cur)
    }

    /// `basis[i] * basis[j]`.
    pub fn basis_product(&self, i: usize, j: usize) -> Result<Terms> {
        if let Some(hit) = self.products.lock().expect("cache lock").get(&(i, j)) {
            return Ok(hit.clone());
        }
        let mut cur = BTreeMap::from([(i, Rational::ONE)]);
        for &t in &self.words[j] {
            if cur.is_empty() {
                break;
            }
            cur = self.right_multiply(&cur, t)?;
        }
        let terms: Terms = cur.into_iter().collect();
        self.products.lock().expect("cache lock").insert((i, j), terms.clone());
        Ok(terms)
    }
}

/// Shared, lazily built algebra for `d` strands.
pub fn brauer_algebra(d: usize) -> Result<Arc<BrauerAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BrauerAlgebra>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(a) = cache.lock().expect("cache lock").get(&d) {
        return Ok(a.clone());
    }
    let built = Arc::new(BrauerAlgebra::build(d)?);
    Ok(cache.lock().expect("cache lock").entry(d).or_insert(built).clone())
}
