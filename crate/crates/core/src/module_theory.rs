//! Baby Verma modules, their simple heads, weight-space restrictions to the
//! torus-fixed algebra, and the two sides of the multiplicity comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kostant::{CartanExponents, HyperElement, PbwMonomial, RootExponents, ZForm};
use crate::linalg::{is_invariant, Matrix, Subspace};
use crate::meataxe::{chop, escalated_irreducible, module_isomorphic, norton_irreducible, Irreducibility, MatrixModule};
use crate::restricted::{level_bound, reduce_mod_p, TorusFixedAlgebra};
use crate::root_system::{restricted_weights, Root, RootDatum, Weight};
use crate::scalar::PrimeField;

type ETerms = Arc<Vec<(usize, CartanExponents, u32)>>;
type FTerms = Arc<Vec<(usize, u32)>>;

/// Shared straightening data for all baby Vermas of one `(type, p, r)`.
///
/// The basis of every `Z_r(lambda)` is `F^(c) v` for the restricted
/// negative exponent vectors `c`. Acting by `F^(m) C(H,k) E^(n)` goes through
/// three memoized steps: `E^(n) F^(c)` in the Z-form with its Cartan part
/// evaluated at `lambda`, the Cartan scalar at the intermediate weight, and
/// the product `F^(m) F^(a)`.
pub struct VermaEngine {
    datum: RootDatum,
    field: PrimeField,
    r: u32,
    q: u32,
    zform: Arc<ZForm<BigInt>>,
    exponents: Vec<RootExponents>,
    index: FxHashMap<RootExponents, usize>,
    /// `sum_b c_b beta_b` for each basis exponent vector.
    shifts: Vec<Weight>,
    e_table: RwLock<FxHashMap<(usize, usize), ETerms>>,
    f_table: RwLock<FxHashMap<(usize, usize), FTerms>>,
}

impl VermaEngine {
    pub fn new(zform: Arc<ZForm<BigInt>>, p: u32, r: u32) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        let datum = zform.datum().clone();
        let q = level_bound(p, r);
        let s = datum.num_positive_roots();
        let mut exponents = Vec::new();
        for_each_tuple(s, q, |t| {
            let mut e = [0u16; crate::root_system::MAX_POS_ROOTS];
            e[..s].copy_from_slice(t);
            exponents.push(e);
        });
        let index = exponents.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let betas: Vec<Weight> = (0..s).map(|b| datum.root_as_weight(Root::pos(b))).collect();
        let shifts = exponents
            .iter()
            .map(|e| (0..s).fold(Weight::zero(datum.rank()), |acc, b| acc + (e[b] as i64) * betas[b]))
            .collect();
        Ok(Arc::new(VermaEngine {
            datum,
            field,
            r,
            q,
            zform,
            exponents,
            index,
            shifts,
            e_table: RwLock::new(FxHashMap::default()),
            f_table: RwLock::new(FxHashMap::default()),
        }))
    }

    pub fn for_algebra(alg: &TorusFixedAlgebra) -> Result<Arc<Self>> {
        Self::new(alg.zform().clone(), alg.p(), alg.r())
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `p^(r |Phi+|)`
    pub fn verma_dim(&self) -> usize {
        self.exponents.len()
    }

    fn monomial(&self, neg: &RootExponents, cartan: &CartanExponents, pos: &RootExponents) -> PbwMonomial {
        let s = self.datum.num_positive_roots();
        let l = self.datum.rank();
        PbwMonomial::new(&self.datum, &neg[..s], &cartan[..l], &pos[..s])
    }

    /// `E^(n) F^(c)` with positive parts dropped, reduced mod p, as
    /// `(a, w, coefficient)` for the terms `F^(a) C(H, w)`.
    fn e_terms(&self, n: usize, c: usize) -> Result<ETerms> {
        if let Some(v) = self.e_table.read().expect("lock").get(&(n, c)) {
            return Ok(v.clone());
        }
        let zero_c = [0u16; crate::root_system::MAX_RANK];
        let zero_r = [0u16; crate::root_system::MAX_POS_ROOTS];
        let en = self.monomial(&zero_r, &zero_c, &self.exponents[n]);
        let fc = self.monomial(&self.exponents[c], &zero_c, &zero_r);
        let prod = HyperElement::from_terms(self.zform.monomial_product(&en, &fc).iter().cloned());
        let reduced = reduce_mod_p(&prod, self.p(), self.r)?;
        let mut out = Vec::new();
        for (m, &v) in reduced.terms() {
            if m.pos.iter().any(|&x| x != 0) {
                continue;
            }
            out.push((self.index[&m.neg], m.cartan, v));
        }
        let out = Arc::new(out);
        self.e_table.write().expect("lock").insert((n, c), out.clone());
        Ok(out)
    }

    /// `F^(m) F^(a)` reduced mod p.
    fn f_terms(&self, m: usize, a: usize) -> Result<FTerms> {
        if let Some(v) = self.f_table.read().expect("lock").get(&(m, a)) {
            return Ok(v.clone());
        }
        let zero_c = [0u16; crate::root_system::MAX_RANK];
        let zero_r = [0u16; crate::root_system::MAX_POS_ROOTS];
        let fm = self.monomial(&self.exponents[m], &zero_c, &zero_r);
        let fa = self.monomial(&self.exponents[a], &zero_c, &zero_r);
        let prod = HyperElement::from_terms(self.zform.monomial_product(&fm, &fa).iter().cloned());
        let reduced = reduce_mod_p(&prod, self.p(), self.r)?;
        let out: Vec<(usize, u32)> = reduced.terms().iter().map(|(x, &v)| (self.index[&x.neg], v)).collect();
        let out = Arc::new(out);
        self.f_table.write().expect("lock").insert((m, a), out.clone());
        Ok(out)
    }

    /// `u F^(c) v` in `Z_r(lambda)`, as a dense coordinate vector.
    pub fn apply(&self, lambda: &Weight, u: &PbwMonomial, c: usize) -> Result<Vec<u32>> {
        let f = self.field;
        let mut out = vec![0u32; self.verma_dim()];
        let n = *self
            .index
            .get(&u.pos)
            .ok_or_else(|| Error::InvalidArgument(format!("{u} is not a restricted monomial")))?;
        let m = *self
            .index
            .get(&u.neg)
            .ok_or_else(|| Error::InvalidArgument(format!("{u} is not a restricted monomial")))?;
        let rank = self.datum.rank();
        for &(a, w, coef) in self.e_terms(n, c)?.iter() {
            let mut val = coef;
            for i in 0..rank {
                val = f.mul(val, f.binomial(lambda.pairing(i), w[i] as u64));
            }
            if val == 0 {
                continue;
            }
            let here = *lambda - self.shifts[a];
            for i in 0..rank {
                val = f.mul(val, f.binomial(here.pairing(i), u.cartan[i] as u64));
            }
            if val == 0 {
                continue;
            }
            for &(b, d) in self.f_terms(m, a)?.iter() {
                out[b] = f.mul_add(out[b], val, d);
            }
        }
        Ok(out)
    }

    pub fn weight_of_basis(&self, lambda: &Weight, c: usize) -> Weight {
        *lambda - self.shifts[c]
    }

    pub fn exponent_vector(&self, c: usize) -> &[u16] {
        &self.exponents[c][..self.datum.num_positive_roots()]
    }

    /// `F^(c)` as a monomial.
    pub fn negative_monomial(&self, c: usize) -> PbwMonomial {
        self.monomial(&self.exponents[c], &[0; crate::root_system::MAX_RANK], &[0; crate::root_system::MAX_POS_ROOTS])
    }
}

fn for_each_tuple(len: usize, q: u32, mut f: impl FnMut(&[u16])) {
    let mut t = vec![0u16; len];
    loop {
        f(&t);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            t[i] += 1;
            if (t[i] as u32) < q {
                break;
            }
            t[i] = 0;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "lambda", rename_all = "snake_case")]
pub enum ModuleLabel {
    Verma(Weight),
    Simple(Weight),
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Verma(l) => write!(f, "Z({l})"),
            ModuleLabel::Simple(l) => write!(f, "L({l})"),
        }
    }
}

/// A `G_r T`-module presented inside a baby Verma: either the Verma itself
/// or its quotient by a graded submodule.
#[derive(Clone)]
pub struct WeightedModule {
    engine: Arc<VermaEngine>,
    lambda: Weight,
    label: ModuleLabel,
    /// Submodule of the Verma that is factored out, in Verma coordinates.
    radical: Option<Subspace>,
    /// Verma basis indices of this module's basis vectors.
    basis: Vec<usize>,
    basis_weights: Vec<Weight>,
}

impl fmt::Debug for WeightedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {})", self.label, self.dim())
    }
}

impl WeightedModule {
    pub fn engine(&self) -> &Arc<VermaEngine> {
        &self.engine
    }

    pub fn lambda(&self) -> Weight {
        self.lambda
    }

    pub fn label(&self) -> &ModuleLabel {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_weights(&self) -> &[Weight] {
        &self.basis_weights
    }

    /// Weight multiplicities.
    pub fn character(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for w in &self.basis_weights {
            *out.entry(*w).or_insert(0) += 1;
        }
        out
    }

    /// Positions of the basis vectors of weight `mu`.
    pub fn weight_space(&self, mu: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&j| self.basis_weights[j] == *mu).collect()
    }

    /// Coordinates of `u` applied to basis vector `j`.
    pub fn image(&self, u: &PbwMonomial, j: usize) -> Result<Vec<u32>> {
        let mut v = self.engine.apply(&self.lambda, u, self.basis[j])?;
        if let Some(rad) = &self.radical {
            rad.reduce(&mut v, &self.engine.field);
        }
        Ok(self.basis.iter().map(|&c| v[c]).collect())
    }

    /// The full action matrix of a restricted monomial.
    pub fn action(&self, u: &PbwMonomial) -> Result<Matrix> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for (i, c) in self.image(u, j)?.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Action of a weight-zero monomial on the span of `positions`.
    fn block(&self, u: &PbwMonomial, positions: &[usize]) -> Result<Matrix> {
        let k = positions.len();
        let mut m = Matrix::zeros(k, k);
        for (j, &pj) in positions.iter().enumerate() {
            let img = self.image(u, pj)?;
            for (i, &pi) in positions.iter().enumerate() {
                m.set(i, j, img[pi]);
            }
        }
        Ok(m)
    }
}

pub fn baby_verma(engine: &Arc<VermaEngine>, lambda: &Weight) -> WeightedModule {
    let n = engine.verma_dim();
    WeightedModule {
        engine: engine.clone(),
        lambda: *lambda,
        label: ModuleLabel::Verma(*lambda),
        radical: None,
        basis: (0..n).collect(),
        basis_weights: (0..n).map(|c| engine.weight_of_basis(lambda, c)).collect(),
    }
}

/// `<F^(m) v, F^(c) v>`: the `v`-coefficient of `tau(F^(m)) F^(c) v`.
pub fn contravariant_gram(module: &WeightedModule) -> Result<Matrix> {
    if !matches!(module.label, ModuleLabel::Verma(_)) {
        return Err(Error::InvalidArgument("the contravariant form is defined on a baby Verma".into()));
    }
    let engine = &module.engine;
    let n = engine.verma_dim();
    let mut g = Matrix::zeros(n, n);
    for m in 0..n {
        let fm = HyperElement::monomial(engine.negative_monomial(m));
        let tau = reduce_mod_p(&engine.zform.transpose_tau(&fm), engine.p(), engine.r)?;
        for c in 0..n {
            if module.basis_weights[m] != module.basis_weights[c] {
                continue;
            }
            let mut acc = 0u32;
            for (u, &coef) in tau.terms() {
                let img = engine.apply(&module.lambda, u, c)?;
                acc = engine.field.mul_add(acc, coef, img[0]);
            }
            g.set(m, c, acc);
        }
    }
    Ok(g)
}

/// The radical of the contravariant form, weight space by weight space.
pub fn gram_radical(verma: &WeightedModule) -> Result<Subspace> {
    let f = verma.engine.field;
    let g = contravariant_gram(verma)?;
    let n = verma.dim();
    let mut rad = Subspace::new(n);
    for mu in verma.character().keys() {
        let pos = verma.weight_space(mu);
        let block = Matrix::from_rows(
            &pos.iter().map(|&i| pos.iter().map(|&j| g.get(i, j)).collect()).collect::<Vec<_>>(),
            pos.len(),
        );
        for x in block.nullspace(&f) {
            let mut v = vec![0u32; n];
            for (k, &i) in pos.iter().enumerate() {
                v[i] = x[k];
            }
            rad.insert(v, &f);
        }
    }
    Ok(rad)
}

/// `L_r(lambda)`: the baby Verma modulo the radical of its contravariant form.
/// Defined for every integral `lambda`.
pub fn simple_module(engine: &Arc<VermaEngine>, lambda: &Weight) -> Result<WeightedModule> {
    let verma = baby_verma(engine, lambda);
    let rad = gram_radical(&verma)?;
    let basis = rad.complement_columns();
    let basis_weights = basis.iter().map(|&c| engine.weight_of_basis(lambda, c)).collect();
    Ok(WeightedModule {
        engine: engine.clone(),
        lambda: *lambda,
        label: ModuleLabel::Simple(*lambda),
        radical: Some(rad),
        basis,
        basis_weights,
    })
}

/// True iff the radical is stable under the given monomials.
pub fn radical_is_submodule(verma: &WeightedModule, monomials: &[PbwMonomial]) -> Result<bool> {
    let rad = gram_radical(verma)?;
    let mats = monomials.iter().map(|u| verma.action(u)).collect::<Result<Vec<_>>>()?;
    Ok(is_invariant(&rad, &mats, &verma.engine.field))
}

/// `M_mu` as a module over the torus-fixed algebra, one matrix per basis element.
pub fn weight_space_module(module: &WeightedModule, mu: &Weight, alg: &TorusFixedAlgebra) -> Result<MatrixModule> {
    let pos = module.weight_space(mu);
    if pos.is_empty() {
        return Err(Error::EmptyWeightSpace(format!("{} has no weight {mu}", module.label)));
    }
    let gens = alg.basis().iter().map(|u| module.block(u, &pos)).collect::<Result<Vec<_>>>()?;
    MatrixModule::new(module.engine.field, module.engine.r, alg.basis().to_vec(), gens)
}

/// Weight multiplicities.
pub type Character = BTreeMap<Weight, usize>;

/// Characters of `L_r(nu)` for every `nu` in `weights`, from the restricted
/// simples and `L_r(lambda + q gamma) = L_r(lambda) (x) k_{q gamma}`.
pub struct SimpleCharacters {
    engine: Arc<VermaEngine>,
    restricted: BTreeMap<Weight, Character>,
}

impl SimpleCharacters {
    pub fn new(engine: &Arc<VermaEngine>) -> Result<Self> {
        let mut restricted = BTreeMap::new();
        for lambda in restricted_weights(engine.datum(), engine.p(), engine.r()) {
            restricted.insert(lambda, simple_module(engine, &lambda)?.character());
        }
        Ok(SimpleCharacters { engine: engine.clone(), restricted })
    }

    pub fn restricted(&self) -> &BTreeMap<Weight, Character> {
        &self.restricted
    }

    pub fn of(&self, nu: &Weight) -> Character {
        let (base, gamma) = nu.split_mod(self.engine.q() as i64);
        let shift = (self.engine.q() as i64) * gamma;
        self.restricted[&base].iter().map(|(w, &m)| (*w + shift, m)).collect()
    }
}

pub fn simple_characters(engine: &Arc<VermaEngine>, weights: &[Weight]) -> Result<BTreeMap<Weight, Character>> {
    let table = SimpleCharacters::new(engine)?;
    Ok(weights.iter().map(|w| (*w, table.of(w))).collect())
}

/// Simple-root coordinates of a root-lattice element given in fundamental
/// coordinates; `None` off the root lattice.
pub fn root_coordinates(datum: &RootDatum, w: &Weight) -> Option<Vec<i64>> {
    let c = datum.cartan();
    match datum.rank() {
        1 => (w.pairing(0) % 2 == 0).then(|| vec![w.pairing(0) / 2]),
        2 => {
            // w_j = sum_i n_i <alpha_i, alpha_j^vee>, solved by Cramer's rule
            let (a, b, cc, d) = (c[0][0], c[1][0], c[0][1], c[1][1]);
            let det = a * d - b * cc;
            let (x, y) = (w.pairing(0), w.pairing(1));
            let n0 = x * d - b * y;
            let n1 = a * y - cc * x;
            (n0 % det == 0 && n1 % det == 0).then(|| vec![n0 / det, n1 / det])
        }
        _ => None,
    }
}

fn height_below(datum: &RootDatum, top: &Weight, w: &Weight) -> i64 {
    root_coordinates(datum, &(*top - *w)).map(|v| v.iter().sum()).unwrap_or(i64::MAX)
}

/// Composition multiplicities `[Z_r(lambda) : L_r(nu)]` from characters alone,
/// peeling off highest weights in order of height below `lambda`.
pub fn verma_multiplicities_by_character(engine: &Arc<VermaEngine>, lambda: &Weight) -> Result<BTreeMap<Weight, usize>> {
    let table = SimpleCharacters::new(engine)?;
    verma_multiplicities_with(&table, lambda)
}

pub fn verma_multiplicities_with(table: &SimpleCharacters, lambda: &Weight) -> Result<BTreeMap<Weight, usize>> {
    let engine = &table.engine;
    let datum = engine.datum();
    let verma = baby_verma(engine, lambda);
    let mut remaining: BTreeMap<Weight, i64> = verma.character().into_iter().map(|(w, m)| (w, m as i64)).collect();
    let mut order: Vec<Weight> = remaining.keys().copied().collect();
    order.sort_by_key(|w| (height_below(datum, lambda, w), *w));
    let mut out = BTreeMap::new();
    for nu in order {
        let m = remaining.get(&nu).copied().unwrap_or(0);
        if m < 0 {
            return Err(Error::NonIntegralSolve(format!("negative remainder {m} at weight {nu} for Z({lambda})")));
        }
        if m == 0 {
            continue;
        }
        for (w, k) in table.of(&nu) {
            *remaining.entry(w).or_insert(0) -= m * k as i64;
        }
        out.insert(nu, m as usize);
    }
    if let Some((w, v)) = remaining.iter().find(|(_, v)| **v != 0) {
        return Err(Error::NonIntegralSolve(format!("remainder {v} at weight {w} for Z({lambda})")));
    }
    Ok(out)
}

/// Number of composition factors of `M_mu` that are one-dimensional, carry
/// the torus character `mu`, and are killed by `J`.
pub fn multiplicity_via_torus_algebra(
    module: &WeightedModule,
    mu: &Weight,
    alg: &TorusFixedAlgebra,
    seed: u64,
) -> Result<usize> {
    let m = weight_space_module(module, mu, alg)?;
    let series = chop(&m, seed)?;
    let target: Vec<u32> = mu.reduce_mod(alg.q() as i64).coords().iter().map(|&c| c as u32).collect();
    let mut count = 0;
    for f in &series.factors {
        if f.dimension != 1 || f.character.as_deref() != Some(target.as_slice()) {
            continue;
        }
        if alg.ideal_j_positions().iter().all(|&j| f.module.generators()[j].is_zero()) {
            count += f.multiplicity;
        }
    }
    Ok(count)
}

/// Norton verdict with the exhaustive fallback.
pub fn is_irreducible(module: &MatrixModule, seed: u64) -> Result<bool> {
    let v = match norton_irreducible(module, seed) {
        Ok(v) => v,
        Err(Error::InconclusiveAfterBudget { .. }) => escalated_irreducible(module, seed)?,
        Err(e) => return Err(e),
    };
    Ok(v == Irreducibility::Irreducible)
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightSpaceEntry {
    pub lambda: Weight,
    pub mu: Weight,
    pub dim: usize,
    pub irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftedPair {
    pub lambda: Weight,
    pub mu: Weight,
    pub gamma: Weight,
    pub isomorphic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub simple_dims: BTreeMap<String, usize>,
    pub weight_spaces: Vec<WeightSpaceEntry>,
    /// Pairs of distinct classes compared, and how many needed an explicit
    /// intertwiner search after the invariants agreed.
    pub pairs_compared: usize,
    pub pairs_searched: usize,
    pub unexpected_isomorphisms: Vec<String>,
    pub shifted_pairs: Vec<ShiftedPair>,
    pub passed: bool,
}

/// Every nonzero `L_r(lambda)_mu` with `lambda` restricted is simple over the
/// torus-fixed algebra, distinct `(lambda, mu)` give non-isomorphic modules,
/// and the listed shifts `(lambda + q gamma, mu + q gamma)` give isomorphic ones.
pub fn check_simple_classification(
    alg: &TorusFixedAlgebra,
    shifts: &[(Weight, Weight, Weight)],
    seed: u64,
) -> Result<ClassificationReport> {
    let engine = VermaEngine::for_algebra(alg)?;
    let mut simple_dims = BTreeMap::new();
    let mut weight_spaces = Vec::new();
    let mut modules: Vec<(Weight, Weight, MatrixModule)> = Vec::new();
    for lambda in restricted_weights(alg.datum(), alg.p(), alg.r()) {
        let simple = simple_module(&engine, &lambda)?;
        simple_dims.insert(lambda.to_string(), simple.dim());
        for mu in simple.character().keys() {
            let m = weight_space_module(&simple, mu, alg)?;
            let irreducible = is_irreducible(&m, seed)?;
            weight_spaces.push(WeightSpaceEntry { lambda, mu: *mu, dim: m.dimension(), irreducible });
            modules.push((lambda, *mu, m));
        }
    }
    let invariants: Vec<_> = modules.iter().map(|(_, _, m)| (m.dimension(), m.torus_character(), m.rank_profile())).collect();
    let mut pairs_compared = 0;
    let mut pairs_searched = 0;
    let mut unexpected = Vec::new();
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            pairs_compared += 1;
            if invariants[i] != invariants[j] {
                continue;
            }
            pairs_searched += 1;
            if module_isomorphic(&modules[i].2, &modules[j].2, seed) {
                unexpected.push(format!(
                    "L({})_{} ~ L({})_{}",
                    modules[i].0, modules[i].1, modules[j].0, modules[j].1
                ));
            }
        }
    }
    let q = alg.q() as i64;
    let mut shifted_pairs = Vec::new();
    for &(lambda, mu, gamma) in shifts {
        let a = weight_space_module(&simple_module(&engine, &lambda)?, &mu, alg)?;
        let b = weight_space_module(&simple_module(&engine, &(lambda + q * gamma))?, &(mu + q * gamma), alg)?;
        shifted_pairs.push(ShiftedPair { lambda, mu, gamma, isomorphic: module_isomorphic(&a, &b, seed) });
    }
    let passed = weight_spaces.iter().all(|w| w.irreducible)
        && unexpected.is_empty()
        && shifted_pairs.iter().all(|s| s.isomorphic);
    Ok(ClassificationReport {
        simple_dims,
        weight_spaces,
        pairs_compared,
        pairs_searched,
        unexpected_isomorphisms: unexpected,
        shifted_pairs,
        passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferRow {
    pub lambda: Weight,
    pub mu: Weight,
    pub by_character: usize,
    pub by_torus_algebra: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityReport {
    pub lambda: Weight,
    pub verma_dim: usize,
    pub factors: BTreeMap<String, usize>,
    pub rows: Vec<TransferRow>,
    pub agree: bool,
}

/// Both sides of the multiplicity comparison for every weight of `Z_r(lambda)`.
pub fn compare_multiplicities(
    alg: &TorusFixedAlgebra,
    table: &SimpleCharacters,
    lambda: &Weight,
    seed: u64,
) -> Result<MultiplicityReport> {
    let engine = &table.engine;
    let by_char = verma_multiplicities_with(table, lambda)?;
    let verma = baby_verma(engine, lambda);
    let mut rows = Vec::new();
    for mu in verma.character().keys() {
        let torus = multiplicity_via_torus_algebra(&verma, mu, alg, seed)?;
        let want = by_char.get(mu).copied().unwrap_or(0);
        rows.push(TransferRow { lambda: *lambda, mu: *mu, by_character: want, by_torus_algebra: torus, agree: want == torus });
    }
    Ok(MultiplicityReport {
        lambda: *lambda,
        verma_dim: verma.dim(),
        factors: by_char.iter().map(|(w, m)| (w.to_string(), *m)).collect(),
        agree: rows.iter().all(|r| r.agree),
        rows,
    })
}
