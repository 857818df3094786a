//! Composition series of small modules over a finite-dimensional algebra,
//! given by the matrices of a spanning set of the algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kostant::PbwMonomial;
use crate::linalg::{is_invariant, quotient_by, restrict_to, spin, Matrix, Subspace};
use crate::scalar::PrimeField;

/// Random words tried before [`norton_irreducible`] gives up.
pub const WORD_BUDGET: usize = 200;
/// Longest random word.
pub const MAX_WORD_LEN: usize = 12;
/// Kernels with at most this many lines are tested line by line.
pub const LINE_BOUND: usize = 4096;
/// Line bound once the random budget is spent.
pub const ESCALATION_LINE_BOUND: usize = 1 << 20;

/// A module over `F_p` given by one matrix per labelled algebra element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModule {
    field: PrimeField,
    level: u32,
    dimension: usize,
    labels: Vec<PbwMonomial>,
    generators: Vec<Matrix>,
    tr_character_hint: Option<Vec<u32>>,
}

impl MatrixModule {
    /// `level` is the `r` of the labels' Cartan binomials `C(H_i, p^j)`, `j < r`.
    /// The label list must contain the identity monomial acting as the identity.
    pub fn new(field: PrimeField, level: u32, labels: Vec<PbwMonomial>, generators: Vec<Matrix>) -> Result<Self> {
        if labels.len() != generators.len() || generators.is_empty() {
            return Err(Error::InvalidArgument("one nonempty matrix list per label required".into()));
        }
        let dimension = generators[0].rows();
        if generators.iter().any(|g| g.rows() != dimension || g.cols() != dimension) {
            return Err(Error::InvalidArgument(format!("all generator matrices must be {dimension}x{dimension}")));
        }
        let has_identity = labels
            .iter()
            .zip(&generators)
            .any(|(l, g)| l.is_identity() && *g == Matrix::identity(dimension));
        if !has_identity {
            return Err(Error::InvalidArgument("generator list must include the identity's action".into()));
        }
        Ok(MatrixModule { field, level, dimension, labels, generators, tr_character_hint: None })
    }

    pub fn with_character_hint(mut self, hint: Vec<u32>) -> Self {
        self.tr_character_hint = Some(hint);
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn labels(&self) -> &[PbwMonomial] {
        &self.labels
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn tr_character_hint(&self) -> Option<&[u32]> {
        self.tr_character_hint.as_deref()
    }

    fn with_generators(&self, generators: Vec<Matrix>) -> Self {
        let dimension = generators.first().map(|g| g.rows()).unwrap_or(0);
        MatrixModule {
            field: self.field,
            level: self.level,
            dimension,
            labels: self.labels.clone(),
            generators,
            tr_character_hint: None,
        }
    }

    /// The action on an invariant subspace.
    pub fn submodule(&self, sub: &Subspace) -> Self {
        self.with_generators(self.generators.iter().map(|g| restrict_to(g, sub, &self.field)).collect())
    }

    /// The action on the quotient by an invariant subspace.
    pub fn quotient(&self, sub: &Subspace) -> Self {
        self.with_generators(self.generators.iter().map(|g| quotient_by(g, sub, &self.field)).collect())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dimension, other.dimension);
        let gens = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(a + b, a + b);
                for i in 0..a {
                    for j in 0..a {
                        m.set(i, j, x.get(i, j));
                    }
                }
                for i in 0..b {
                    for j in 0..b {
                        m.set(a + i, a + j, y.get(i, j));
                    }
                }
                m
            })
            .collect();
        self.with_generators(gens)
    }

    /// Dist(T_r)-character read off the Cartan generators `C(H_i, p^j)`,
    /// which act on a simple module by the Lucas digits of the weight mod `p^r`.
    /// `None` if one of them is not scalar.
    pub fn torus_character(&self) -> Option<Vec<u32>> {
        if let Some(h) = &self.tr_character_hint {
            return Some(h.clone());
        }
        let p = self.field.p();
        let rank = self.labels.first()?.rank();
        let mut out = vec![0u32; rank];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut place = 1u32;
            for _ in 0..self.level {
                let g = self.labels.iter().position(|l| is_single_cartan(l, i, place))?;
                *slot += scalar_value(&self.generators[g])? * place;
                place *= p;
            }
        }
        Some(out)
    }

    /// Rank of every generator, in generator order.
    pub fn rank_profile(&self) -> Vec<usize> {
        self.generators.iter().map(|g| g.rank(&self.field)).collect()
    }

    fn transposed(&self) -> Vec<Matrix> {
        self.generators.iter().map(|g| g.transpose()).collect()
    }
}

fn is_single_cartan(l: &PbwMonomial, i: usize, k: u32) -> bool {
    l.is_cartan() && (0..l.rank()).all(|t| l.cartan[t] as u32 == if t == i { k } else { 0 })
}

fn scalar_value(m: &Matrix) -> Option<u32> {
    let n = m.rows();
    if n == 0 {
        return None;
    }
    let c = m.get(0, 0);
    for i in 0..n {
        for j in 0..n {
            if m.get(i, j) != if i == j { c } else { 0 } {
                return None;
            }
        }
    }
    Some(c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
}

fn random_element(module: &MatrixModule, rng: &mut ChaCha8Rng) -> Matrix {
    let f = module.field;
    let gens = &module.generators;
    let n = module.dimension;
    let len = rng.gen_range(1..=MAX_WORD_LEN);
    let mut word = gens[rng.gen_range(0..gens.len())].clone();
    let mut acc = Matrix::zeros(n, n);
    acc.add_scaled(&word, rng.gen_range(0..f.p()), &f);
    for _ in 1..len {
        word = word.mul(&gens[rng.gen_range(0..gens.len())], &f);
        acc.add_scaled(&word, rng.gen_range(0..f.p()), &f);
    }
    acc
}

/// All lines of the span of `basis`, one representative each, if there are
/// at most `bound` of them.
fn lines(basis: &[Vec<u32>], f: &PrimeField, bound: usize) -> Option<Vec<Vec<u32>>> {
    let d = basis.len();
    let p = f.p() as usize;
    let count = (0..d).try_fold(0usize, |acc, _| acc.checked_mul(p)?.checked_add(1))?;
    // (p^d - 1) / (p - 1) = 1 + p + ... + p^(d-1)
    if count > bound {
        return None;
    }
    let n = basis.first().map(|v| v.len()).unwrap_or(0);
    let mut out = Vec::with_capacity(count);
    // normalized coefficient vectors: leading nonzero coordinate equals 1
    for lead in 0..d {
        let free = d - lead - 1;
        let total = p.pow(free as u32);
        for code in 0..total {
            let mut v = basis[lead].clone();
            let mut c = code;
            for b in basis.iter().skip(lead + 1) {
                let coef = (c % p) as u32;
                c /= p;
                if coef != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.mul_add(*x, coef, y);
                    }
                }
            }
            debug_assert_eq!(v.len(), n);
            out.push(v);
        }
    }
    Some(out)
}

/// Norton's test for one singular element `theta`: every line of
/// `ker theta` must spin to the whole module and every line of
/// `ker theta^T` to the whole dual. `None` if a kernel has too many lines.
fn norton_test(module: &MatrixModule, theta: &Matrix, bound: usize) -> Option<Irreducibility> {
    let f = module.field;
    let n = module.dimension;
    let ker = theta.nullspace(&f);
    let ker_t = theta.transpose().nullspace(&f);
    let vs = lines(&ker, &f, bound)?;
    let ws = lines(&ker_t, &f, bound)?;
    for v in vs {
        let s = spin(&[v], &module.generators, &f);
        if s.dim() < n {
            return Some(Irreducibility::Reducible(s));
        }
    }
    let dual = module.transposed();
    for w in ws {
        let s = spin(&[w], &dual, &f);
        if s.dim() < n {
            return Some(Irreducibility::Reducible(s.annihilator(&f)));
        }
    }
    Some(Irreducibility::Irreducible)
}

/// Holt-Rees style irreducibility test over random algebra words.
pub fn norton_irreducible(module: &MatrixModule, seed: u64) -> Result<Irreducibility> {
    let n = module.dimension;
    if n == 0 {
        return Err(Error::InvalidArgument("the zero module has no irreducibility verdict".into()));
    }
    if n == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let f = module.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..WORD_BUDGET {
        let a = random_element(module, &mut rng);
        let c = rng.gen_range(0..f.p());
        let theta = a.sub(&Matrix::identity(n).scale(c, &f), &f);
        let nullity = n - theta.rank(&f);
        if nullity == 0 || nullity == n {
            continue;
        }
        if let Some(verdict) = norton_test(module, &theta, if nullity == 1 { 1 } else { 64 }) {
            return Ok(checked(module, verdict));
        }
    }
    Err(Error::InconclusiveAfterBudget { trials: WORD_BUDGET, dimension: n })
}

/// Exhaustive fallback: runs Norton's test on the singular element of
/// smallest nullity among many candidates with no line bound, and, if every
/// random element is invertible or zero, spins every line of the module.
pub fn escalated_irreducible(module: &MatrixModule, seed: u64) -> Result<Irreducibility> {
    let n = module.dimension;
    let f = module.field;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut best: Option<(usize, Matrix)> = None;
    for _ in 0..WORD_BUDGET {
        let a = random_element(module, &mut rng);
        for c in 0..f.p() {
            let theta = a.sub(&Matrix::identity(n).scale(c, &f), &f);
            let nullity = n - theta.rank(&f);
            if nullity > 0 && nullity < n && best.as_ref().is_none_or(|(b, _)| nullity < *b) {
                best = Some((nullity, theta));
            }
        }
    }
    if let Some((_, theta)) = best {
        if let Some(v) = norton_test(module, &theta, ESCALATION_LINE_BOUND) {
            return Ok(checked(module, v));
        }
    }
    // every sampled element acts as a scalar: test all lines directly
    let all = lines(Subspace::full(n).basis(), &f, ESCALATION_LINE_BOUND)
        .ok_or(Error::InconclusiveAfterBudget { trials: WORD_BUDGET, dimension: n })?;
    for v in all {
        let s = spin(&[v], &module.generators, &f);
        if s.dim() < n {
            return Ok(checked(module, Irreducibility::Reducible(s)));
        }
    }
    Ok(Irreducibility::Irreducible)
}

fn checked(module: &MatrixModule, verdict: Irreducibility) -> Irreducibility {
    if let Irreducibility::Reducible(s) = &verdict {
        assert!(
            s.dim() > 0 && s.dim() < module.dimension && is_invariant(s, &module.generators, &module.field),
            "meataxe produced a non-invariant subspace"
        );
    }
    verdict
}

/// One isomorphism class of composition factors.
#[derive(Clone, Debug, Serialize)]
pub struct CompFactor {
    pub iso_class_id: usize,
    pub dimension: usize,
    /// Weight mod `p^r` in fundamental coordinates, when the torus acts by a character.
    pub character: Option<Vec<u32>>,
    pub multiplicity: usize,
    #[serde(skip)]
    pub module: MatrixModule,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CompSeries {
    pub factors: Vec<CompFactor>,
}

impl CompSeries {
    pub fn total_dimension(&self) -> usize {
        self.factors.iter().map(|f| f.dimension * f.multiplicity).sum()
    }

    /// Factor multiset as sorted `(dimension, character, multiplicity)` triples.
    pub fn signature(&self) -> Vec<(usize, Option<Vec<u32>>, usize)> {
        let mut v: Vec<_> = self.factors.iter().map(|f| (f.dimension, f.character.clone(), f.multiplicity)).collect();
        v.sort();
        v
    }
}

fn collect_factors(module: &MatrixModule, seed: u64, out: &mut Vec<MatrixModule>) -> Result<()> {
    if module.dimension == 0 {
        return Ok(());
    }
    let verdict = match norton_irreducible(module, seed) {
        Ok(v) => v,
        Err(Error::InconclusiveAfterBudget { .. }) => escalated_irreducible(module, seed)?,
        Err(e) => return Err(e),
    };
    match verdict {
        Irreducibility::Irreducible => out.push(module.clone()),
        Irreducibility::Reducible(sub) => {
            collect_factors(&module.submodule(&sub), seed.wrapping_add(1), out)?;
            collect_factors(&module.quotient(&sub), seed.wrapping_add(2), out)?;
        }
    }
    Ok(())
}

/// Composition factors grouped into isomorphism classes, ordered by
/// `(dimension, character, rank profile)`.
pub fn chop(module: &MatrixModule, seed: u64) -> Result<CompSeries> {
    let mut raw = Vec::new();
    collect_factors(module, seed, &mut raw)?;
    type Key = (usize, Option<Vec<u32>>, Vec<usize>);
    let mut classes: Vec<(Key, MatrixModule, usize)> = Vec::new();
    for m in raw {
        let key: Key = (m.dimension, m.torus_character(), m.rank_profile());
        let mut found = false;
        for (k, rep, count) in classes.iter_mut() {
            if *k == key && simple_isomorphic(rep, &m) {
                *count += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((key, m, 1));
        }
    }
    classes.sort_by(|a, b| a.0.cmp(&b.0));
    let factors = classes
        .into_iter()
        .enumerate()
        .map(|(id, ((dimension, character, _), module, multiplicity))| CompFactor {
            iso_class_id: id,
            dimension,
            character,
            multiplicity,
            module,
        })
        .collect();
    Ok(CompSeries { factors })
}

/// Basis of `{X : X a_g = b_g X for all g}`, as row-major `dim_b x dim_a`
/// vectors, cut down one generator at a time.
pub fn intertwiners(a: &MatrixModule, b: &MatrixModule) -> Vec<Matrix> {
    let f = a.field;
    let (na, nb) = (a.dimension, b.dimension);
    let unknowns = na * nb;
    let mut basis: Vec<Matrix> = (0..unknowns)
        .map(|k| {
            let mut m = Matrix::zeros(nb, na);
            m.set(k / na, k % na, 1);
            m
        })
        .collect();
    for (ga, gb) in a.generators.iter().zip(&b.generators) {
        if basis.is_empty() {
            break;
        }
        let residuals: Vec<Matrix> = basis.iter().map(|x| x.mul(ga, &f).sub(&gb.mul(x, &f), &f)).collect();
        if residuals.iter().all(|r| r.is_zero()) {
            continue;
        }
        // columns are the flattened residuals
        let mut sys = Matrix::zeros(unknowns, basis.len());
        for (c, r) in residuals.iter().enumerate() {
            for i in 0..nb {
                for j in 0..na {
                    sys.set(i * na + j, c, r.get(i, j));
                }
            }
        }
        basis = sys
            .nullspace(&f)
            .into_iter()
            .map(|coef| {
                let mut x = Matrix::zeros(nb, na);
                for (c, &k) in coef.iter().enumerate() {
                    if k != 0 {
                        x.add_scaled(&basis[c], k, &f);
                    }
                }
                x
            })
            .collect();
    }
    basis
}

/// For simple modules any nonzero intertwiner is invertible.
fn simple_isomorphic(a: &MatrixModule, b: &MatrixModule) -> bool {
    a.dimension == b.dimension && intertwiners(a, b).iter().any(|x| x.is_invertible(&a.field))
}

/// True iff some intertwiner is invertible. Random elements of the
/// intertwiner space are tried over several seeds; small spaces are
/// searched line by line.
pub fn module_isomorphic(a: &MatrixModule, b: &MatrixModule, seed: u64) -> bool {
    if a.dimension != b.dimension || a.labels != b.labels {
        return false;
    }
    if a.dimension == 0 {
        return true;
    }
    let f = a.field;
    let basis = intertwiners(a, b);
    if basis.is_empty() {
        return false;
    }
    if basis.iter().any(|x| x.is_invertible(&f)) {
        return true;
    }
    let flat: Vec<Vec<u32>> = basis
        .iter()
        .map(|x| (0..x.rows()).flat_map(|i| x.row(i).to_vec()).collect())
        .collect();
    let unflatten = |v: &[u32]| Matrix::from_rows(&v.chunks(a.dimension).map(|c| c.to_vec()).collect::<Vec<_>>(), a.dimension);
    if let Some(all) = lines(&flat, &f, LINE_BOUND) {
        return all.iter().any(|v| unflatten(v).is_invertible(&f));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..WORD_BUDGET {
        let mut x = Matrix::zeros(a.dimension, a.dimension);
        for m in &basis {
            x.add_scaled(m, rng.gen_range(0..f.p()), &f);
        }
        if x.is_invertible(&f) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{root_datum, TypeTag};

    fn labels(n: usize) -> Vec<PbwMonomial> {
        let d = root_datum(TypeTag::A1);
        (0..n as u16).map(|k| PbwMonomial::new(&d, &[k], &[0], &[k])).collect()
    }

    fn module(p: u32, gens: Vec<Matrix>) -> MatrixModule {
        let n = gens.len();
        MatrixModule::new(PrimeField::new(p).unwrap(), 1, labels(n), gens).unwrap()
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let m = module(3, vec![Matrix::identity(1), Matrix::from_rows(&[vec![2]], 1)]);
        assert_eq!(norton_irreducible(&m, 1).unwrap(), Irreducibility::Irreducible);
    }

    #[test]
    fn upper_triangular_has_a_line() {
        let f = PrimeField::new(3).unwrap();
        let nil = Matrix::from_rows(&[vec![0, 1], vec![0, 0]], 2);
        let m = module(3, vec![Matrix::identity(2), nil]);
        match norton_irreducible(&m, 5).unwrap() {
            Irreducibility::Reducible(s) => {
                assert_eq!(s.dim(), 1);
                assert!(s.contains(&[1, 0], &f));
            }
            v => panic!("{v:?}"),
        }
        let series = chop(&m, 0).unwrap();
        assert_eq!(series.total_dimension(), 2);
        assert_eq!(series.factors.len(), 1);
        assert_eq!(series.factors[0].multiplicity, 2);
    }

    #[test]
    fn rotation_is_irreducible_over_f3() {
        // x^2 + 1 is irreducible mod 3
        let r = Matrix::from_rows(&[vec![0, 2], vec![1, 0]], 2);
        let m = module(3, vec![Matrix::identity(2), r]);
        assert!(matches!(norton_irreducible(&m, 2), Ok(Irreducibility::Irreducible) | Err(_)));
        assert_eq!(escalated_irreducible(&m, 2).unwrap(), Irreducibility::Irreducible);
        assert_eq!(chop(&m, 9).unwrap().factors.len(), 1);
    }

    #[test]
    fn isomorphism_by_conjugation() {
        let f = PrimeField::new(5).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2, 0], vec![0, 3, 1], vec![4, 0, 0]], 3);
        let p = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 2], vec![3, 0, 1]], 3);
        let pinv = p.inverse(&f).unwrap();
        let conj = p.mul(&a, &f).mul(&pinv, &f);
        let m1 = module(5, vec![Matrix::identity(3), a.clone()]);
        let m2 = module(5, vec![Matrix::identity(3), conj]);
        assert!(module_isomorphic(&m1, &m1, 0));
        assert!(module_isomorphic(&m1, &m2, 0));
        let m3 = module(5, vec![Matrix::identity(3), a.scale(2, &f)]);
        assert!(!module_isomorphic(&m1, &m3, 0));
    }

    #[test]
    fn direct_sum_of_distinct_lines() {
        let one = module(3, vec![Matrix::identity(1), Matrix::from_rows(&[vec![1]], 1)]);
        let two = module(3, vec![Matrix::identity(1), Matrix::from_rows(&[vec![2]], 1)]);
        let sum = one.direct_sum(&two).direct_sum(&one);
        match norton_irreducible(&sum, 3).unwrap() {
            Irreducibility::Reducible(s) => assert!(s.dim() >= 1 && s.dim() < 3),
            v => panic!("{v:?}"),
        }
        let series = chop(&sum, 3).unwrap();
        let mut mults: Vec<usize> = series.factors.iter().map(|f| f.multiplicity).collect();
        mults.sort();
        assert_eq!(mults, vec![1, 2]);
        for seed in [1, 2, 3] {
            assert_eq!(chop(&sum, seed).unwrap().signature(), series.signature());
        }
    }
}
