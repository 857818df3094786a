//! The torus-fixed subalgebra `Dist(G_r)^T` over `F_p`.
//!
//! Every weight-zero basis element factors as
//! `F^(m) C(H,k) E^(n) = C(H + s_m, k) * F^(m) E^(n)`, where `s_m` is the
//! Cartan shift picked up by moving the binomial past `F^(m)`. The products
//! `F^(m) E^(n)` (the *cores*) are weight zero, so they commute with
//! `Dist(T)`, and a product of two basis elements only needs the Z-form
//! product of their cores.
//!
//! `Dist(T_r)` over `F_p` is split semisimple: a binomial polynomial is
//! determined by its values at `(Z / p^r)^rank`. Structure constants are
//! therefore computed by evaluating the Cartan coefficients at every such
//! point, multiplying pointwise, and transforming back with the inverse of
//! the binomial evaluation matrix. The pointwise picture also gives a block
//! decomposition of the algebra, one block per evaluation point, which the
//! generator search uses.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use rustc_hash::FxHashMap;

use super::basis::{exponent_tuples, level_bound};
use crate::error::{Error, Result};
use crate::kostant::{weight_of, PbwMonomial, RootExponents, ZForm};
use crate::linalg::Matrix;
use crate::root_system::{RootDatum, Weight, MAX_RANK};
use crate::scalar::PrimeField;

/// Sparse row of structure constants: `(position, coefficient)`.
pub type SparseVec = Arc<[(u32, u32)]>;

/// For one pair of cores: the product as `(core, values over evaluation points)`.
type CoreProduct = Arc<Vec<(u32, Vec<u32>)>>;

pub struct TorusFixedAlgebra {
    datum: RootDatum,
    field: PrimeField,
    r: u32,
    q: u32,
    zform: Arc<ZForm<BigInt>>,
    basis: Vec<PbwMonomial>,
    /// `(m, n)` exponent pairs of weight zero, in basis order of first appearance.
    cores: Vec<(RootExponents, RootExponents)>,
    core_shift: Vec<[i64; MAX_RANK]>,
    core_of: Vec<u32>,
    cartan_of: Vec<u32>,
    position_of: FxHashMap<PbwMonomial, u32>,
    core_index: FxHashMap<(RootExponents, RootExponents), u32>,
    /// `pos_table[core * points + k] = position`
    pos_table: Vec<u32>,
    cartan_positions: Vec<usize>,
    ideal_j_positions: Vec<usize>,
    points: usize,
    /// `binom[x][k] = C(x, k) mod p`, `0 <= x, k < q`.
    binom: Vec<Vec<u32>>,
    binom_inv: Matrix,
    core_products: RwLock<FxHashMap<(u32, u32), CoreProduct>>,
    table: RwLock<FxHashMap<(u32, u32), SparseVec>>,
    /// Row-major copy of a complete table, for fast lookups in small algebras.
    dense: OnceLock<Vec<SparseVec>>,
}

/// Largest dimension whose complete table is also kept as a flat array.
const DENSE_TABLE_DIM: usize = 1024;

impl TorusFixedAlgebra {
    pub fn new(datum: &RootDatum, p: u32, r: u32) -> Result<Self> {
        Self::with_zform(Arc::new(ZForm::new(datum)), p, r)
    }

    /// Builds the algebra on top of a shared Z-form (and its memo tables).
    pub fn with_zform(zform: Arc<ZForm<BigInt>>, p: u32, r: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if r == 0 {
            return Err(Error::InvalidArgument("level r must be at least 1".into()));
        }
        let datum = zform.datum().clone();
        let q = level_bound(p, r);
        let s = datum.num_positive_roots();
        let l = datum.rank();
        let roots = exponent_tuples(s, q);
        let carts = exponent_tuples(l, q);
        let points = carts.len();

        let mut basis = Vec::new();
        for m in &roots {
            for h in &carts {
                for n in &roots {
                    let mono = PbwMonomial::new(&datum, m, h, n);
                    if weight_of(&datum, &mono).is_zero() {
                        basis.push(mono);
                    }
                }
            }
        }
        let mut cores = Vec::new();
        let mut core_index = FxHashMap::default();
        let mut core_of = Vec::with_capacity(basis.len());
        let mut cartan_of = Vec::with_capacity(basis.len());
        let mut position_of = FxHashMap::default();
        for (i, mono) in basis.iter().enumerate() {
            let key = (mono.neg, mono.pos);
            let next = cores.len() as u32;
            let c = *core_index.entry(key).or_insert_with(|| {
                cores.push(key);
                next
            });
            core_of.push(c);
            cartan_of.push(flat_index(&mono.cartan, l, q) as u32);
            position_of.insert(*mono, i as u32);
        }
        let mut pos_table = vec![u32::MAX; cores.len() * points];
        for i in 0..basis.len() {
            pos_table[core_of[i] as usize * points + cartan_of[i] as usize] = i as u32;
        }
        let core_shift = cores
            .iter()
            .map(|(m, _)| {
                let mut sh = [0i64; MAX_RANK];
                for (i, x) in sh.iter_mut().enumerate().take(l) {
                    *x = (0..s).map(|j| m[j] as i64 * datum.pairing(j, i)).sum();
                }
                sh
            })
            .collect();
        let cartan_positions = (0..basis.len()).filter(|&i| basis[i].is_cartan()).collect();
        let ideal_j_positions = (0..basis.len())
            .filter(|&i| basis[i].pos.iter().any(|&x| x > 0))
            .collect();

        let binom: Vec<Vec<u32>> = (0..q)
            .map(|x| (0..q).map(|k| field.binomial(x as i64, k as u64)).collect())
            .collect();
        let binom_inv = Matrix::from_rows(&binom, q as usize)
            .inverse(&field)
            .expect("binomial evaluation matrix is unitriangular");

        Ok(TorusFixedAlgebra {
            datum,
            field,
            r,
            q,
            zform,
            basis,
            cores,
            core_shift,
            core_of,
            cartan_of,
            position_of,
            core_index,
            pos_table,
            cartan_positions,
            ideal_j_positions,
            points,
            binom,
            binom_inv,
            core_products: RwLock::new(FxHashMap::default()),
            table: RwLock::new(FxHashMap::default()),
            dense: OnceLock::new(),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// `p^r`
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn zform(&self) -> &Arc<ZForm<BigInt>> {
        &self.zform
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PbwMonomial] {
        &self.basis
    }

    pub fn position(&self, m: &PbwMonomial) -> Option<usize> {
        self.position_of.get(m).map(|&i| i as usize)
    }

    pub fn cartan_positions(&self) -> &[usize] {
        &self.cartan_positions
    }

    pub fn ideal_j_positions(&self) -> &[usize] {
        &self.ideal_j_positions
    }

    /// Rank as a free `Dist(T_r)`-module, i.e. the number of cores.
    pub fn torus_rank(&self) -> usize {
        self.cores.len()
    }

    /// `dim Dist(T_r)`, also the number of blocks.
    pub fn num_points(&self) -> usize {
        self.points
    }

    pub fn cores(&self) -> &[(RootExponents, RootExponents)] {
        &self.cores
    }

    pub fn identity_position(&self) -> usize {
        self.position(&PbwMonomial::identity(&self.datum)).expect("identity is a basis element")
    }

    pub fn unit(&self) -> Vec<u32> {
        self.basis_vector(self.identity_position())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Evaluation point with flat index `nu`, as residues mod `q`.
    pub fn point(&self, nu: usize) -> Weight {
        let l = self.datum.rank();
        let mut coords = vec![0i64; l];
        let mut x = nu;
        for c in coords.iter_mut().rev() {
            *c = (x % self.q as usize) as i64;
            x /= self.q as usize;
        }
        Weight::new(&coords)
    }

    /// Flat index of the evaluation point of a weight (its class mod `q`).
    pub fn point_index(&self, w: &Weight) -> usize {
        let l = self.datum.rank();
        let q = self.q as i64;
        let mut idx = 0usize;
        for i in 0..l {
            idx = idx * self.q as usize + w.coords()[i].rem_euclid(q) as usize;
        }
        idx
    }

    /// `prod_i C(nu_i + shift_i, k_i) mod p` for every point `nu`.
    fn cartan_values(&self, shift: &[i64; MAX_RANK], k: u32) -> Vec<u32> {
        let l = self.datum.rank();
        let q = self.q as usize;
        let mut kk = [0usize; MAX_RANK];
        let mut x = k as usize;
        for i in (0..l).rev() {
            kk[i] = x % q;
            x /= q;
        }
        (0..self.points)
            .map(|nu| {
                let mut y = nu;
                let mut acc = 1u32;
                for i in (0..l).rev() {
                    let v = ((y % q) as i64 + shift[i]).rem_euclid(q as i64) as usize;
                    acc = self.field.mul(acc, self.binom[v][kk[i]]);
                    y /= q;
                }
                acc
            })
            .collect()
    }

    /// Inverse of [`Self::cartan_values`]: binomial coefficients `d_k` with
    /// `sum_k d_k prod_i C(nu_i + shift_i, k_i) = values[nu]`.
    fn cartan_coefficients(&self, shift: &[i64; MAX_RANK], values: &[u32]) -> Vec<u32> {
        let l = self.datum.rank();
        let q = self.q as usize;
        // unshift: g(nu') = values(nu' - shift)
        let mut g = vec![0u32; self.points];
        for (nu2, slot) in g.iter_mut().enumerate() {
            let mut y = nu2;
            let mut src = 0usize;
            let mut stride = 1usize;
            for i in (0..l).rev() {
                let v = ((y % q) as i64 - shift[i]).rem_euclid(q as i64) as usize;
                src += v * stride;
                stride *= q;
                y /= q;
            }
            *slot = values[src];
        }
        // apply binom_inv along every axis
        let p = self.field.p() as u64;
        let mut stride = 1usize;
        for _ in 0..l {
            let mut out = vec![0u32; self.points];
            for base in 0..self.points {
                if !(base / stride).is_multiple_of(q) {
                    continue;
                }
                for k in 0..q {
                    let mut acc = 0u64;
                    for x in 0..q {
                        acc += self.binom_inv.get(k, x) as u64 * g[base + x * stride] as u64;
                    }
                    out[base + k * stride] = (acc % p) as u32;
                }
            }
            g = out;
            stride *= q;
        }
        g
    }

    fn core_monomial(&self, c: u32) -> PbwMonomial {
        let (m, n) = self.cores[c as usize];
        let mut mono = PbwMonomial::identity(&self.datum);
        mono.neg = m;
        mono.pos = n;
        mono
    }

    /// Product of two cores, as pointwise Cartan values per output core.
    fn core_product(&self, a: u32, b: u32) -> Result<CoreProduct> {
        if let Some(v) = self.core_products.read().expect("lock").get(&(a, b)) {
            return Ok(v.clone());
        }
        let x = self.core_monomial(a);
        let y = self.core_monomial(b);
        let prod = self.zform.monomial_product(&x, &y);
        let mut acc: FxHashMap<u32, Vec<u32>> = FxHashMap::default();
        for (mono, coef) in prod.iter() {
            let v = self.field.from_integral(coef).ok_or_else(|| Error::NotIntegral {
                monomial: *mono,
                coefficient: coef.to_string(),
            })?;
            if v == 0 {
                continue;
            }
            if !mono.is_restricted(self.q) {
                return Err(Error::ClosureViolation { monomial: *mono, p: self.p(), coefficient: v });
            }
            let c = *self
                .core_index
                .get(&(mono.neg, mono.pos))
                .expect("product of weight-zero elements has weight zero");
            let k = flat_index(&mono.cartan, self.datum.rank(), self.q) as u32;
            let vals = self.cartan_values(&self.core_shift[c as usize], k);
            let slot = acc.entry(c).or_insert_with(|| vec![0; self.points]);
            for (s, w) in slot.iter_mut().zip(vals) {
                *s = self.field.mul_add(*s, v, w);
            }
        }
        let mut out: Vec<(u32, Vec<u32>)> = acc.into_iter().filter(|(_, v)| v.iter().any(|&x| x != 0)).collect();
        out.sort_by_key(|(c, _)| *c);
        let out = Arc::new(out);
        self.core_products.write().expect("lock").insert((a, b), out.clone());
        Ok(out)
    }

    /// Structure constants `b_i * b_j = sum_k c_k b_k`.
    pub fn product(&self, i: usize, j: usize) -> Result<SparseVec> {
        if let Some(d) = self.dense.get() {
            return Ok(d[i * self.dim() + j].clone());
        }
        let key = (i as u32, j as u32);
        if let Some(v) = self.table.read().expect("lock").get(&key) {
            return Ok(v.clone());
        }
        let (ci, cj) = (self.core_of[i], self.core_of[j]);
        let vi = self.cartan_values(&self.core_shift[ci as usize], self.cartan_of[i]);
        let vj = self.cartan_values(&self.core_shift[cj as usize], self.cartan_of[j]);
        let cp = self.core_product(ci, cj)?;
        let mut out: Vec<(u32, u32)> = Vec::new();
        for (c, vals) in cp.iter() {
            let pointwise: Vec<u32> = (0..self.points)
                .map(|nu| self.field.mul(self.field.mul(vi[nu], vj[nu]), vals[nu]))
                .collect();
            let coeffs = self.cartan_coefficients(&self.core_shift[*c as usize], &pointwise);
            for (k, &d) in coeffs.iter().enumerate() {
                if d != 0 {
                    out.push((self.pos_table[*c as usize * self.points + k], d));
                }
            }
        }
        out.sort_unstable();
        let out: SparseVec = out.into();
        self.table.write().expect("lock").insert(key, out.clone());
        Ok(out)
    }

    /// Pre-populates structure constants, e.g. from a cache file.
    pub(crate) fn insert_product(&self, i: usize, j: usize, entry: Vec<(u32, u32)>) {
        self.table.write().expect("lock").insert((i as u32, j as u32), entry.into());
    }

    /// All structure constants computed so far, sorted by pair.
    pub fn computed_products(&self) -> Vec<((u32, u32), SparseVec)> {
        let guard = self.table.read().expect("lock");
        let mut out: Vec<_> = guard.iter().map(|(k, v)| (*k, v.clone())).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    /// Computes every structure constant.
    pub fn fill_table(&self) -> Result<usize> {
        let n = self.dim();
        let mut flat = Vec::with_capacity(if n <= DENSE_TABLE_DIM { n * n } else { 0 });
        for i in 0..n {
            for j in 0..n {
                let v = self.product(i, j)?;
                if n <= DENSE_TABLE_DIM {
                    flat.push(v);
                }
            }
        }
        if n <= DENSE_TABLE_DIM {
            let _ = self.dense.set(flat);
        }
        Ok(n * n)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        let ys: Vec<(usize, u32)> = y.iter().copied().enumerate().filter(|(_, b)| *b != 0).collect();
        let xn = x.iter().filter(|&&a| a != 0).count();
        if xn * ys.len() > 4 * self.dim() {
            return self.mul_pointwise(x, y);
        }
        let mut out = vec![0u32; self.dim()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(j, b) in &ys {
                let ab = self.field.mul(a, b);
                for &(k, c) in self.product(i, j)?.iter() {
                    out[k as usize] = self.field.mul_add(out[k as usize], ab, c);
                }
            }
        }
        Ok(out)
    }

    /// Values of `x` at every block, per core: `out[c][nu]`.
    fn core_values(&self, x: &[u32]) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.points]; self.cores.len()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let c = self.core_of[i] as usize;
            let vals = self.cartan_values(&self.core_shift[c], self.cartan_of[i]);
            for (o, v) in out[c].iter_mut().zip(vals) {
                *o = self.field.mul_add(*o, a, v);
            }
        }
        out
    }

    /// Product of dense elements, multiplying in every block at once and
    /// interpolating back. Agrees with the structure-constant route.
    fn mul_pointwise(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        let (xv, yv) = (self.core_values(x), self.core_values(y));
        let nonzero = |v: &Vec<Vec<u32>>| -> Vec<usize> { (0..v.len()).filter(|&c| v[c].iter().any(|&t| t != 0)).collect() };
        let (xs, ys) = (nonzero(&xv), nonzero(&yv));
        let mut acc = vec![vec![0u32; self.points]; self.cores.len()];
        let mut xy = vec![0u32; self.points];
        for &a in &xs {
            for &b in &ys {
                for (nu, t) in xy.iter_mut().enumerate() {
                    *t = self.field.mul(xv[a][nu], yv[b][nu]);
                }
                for (c, vals) in self.core_product(a as u32, b as u32)?.iter() {
                    let row = &mut acc[*c as usize];
                    for nu in 0..self.points {
                        row[nu] = self.field.mul_add(row[nu], xy[nu], vals[nu]);
                    }
                }
            }
        }
        let mut out = vec![0u32; self.dim()];
        for (c, vals) in acc.iter().enumerate() {
            if vals.iter().all(|&t| t == 0) {
                continue;
            }
            for (k, &d) in self.cartan_coefficients(&self.core_shift[c], vals).iter().enumerate() {
                if d != 0 {
                    out[self.pos_table[c * self.points + k] as usize] = d;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| self.field.sub(a, b)).collect()
    }

    /// `a*b - b*a`
    pub fn commutator(&self, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        Ok(self.sub(&self.mul(x, y)?, &self.mul(y, x)?))
    }

    /// Keeps the `Dist(T_r)` coordinates and kills `J`.
    pub fn augmentation(&self, x: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim()];
        for &i in &self.cartan_positions {
            out[i] = x[i];
        }
        out
    }

    /// Support of a dense element, as monomials.
    pub fn support(&self, x: &[u32]) -> Vec<PbwMonomial> {
        x.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| self.basis[i])
            .collect()
    }

    /// Value at every point of a `Dist(T_r)` element given in basis coordinates.
    pub fn torus_values(&self, x: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.points];
        for &i in &self.cartan_positions {
            if x[i] == 0 {
                continue;
            }
            let vals = self.cartan_values(&[0; MAX_RANK], self.cartan_of[i]);
            for (o, v) in out.iter_mut().zip(vals) {
                *o = self.field.mul_add(*o, x[i], v);
            }
        }
        out
    }

    /// Component of `x` in block `nu`, in core coordinates.
    pub fn block_component(&self, x: &[u32], nu: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.cores.len()];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let c = self.core_of[i] as usize;
            let v = self.cartan_values(&self.core_shift[c], self.cartan_of[i])[nu];
            out[c] = self.field.mul_add(out[c], a, v);
        }
        out
    }

    /// The element of the algebra whose component in block `nu` is `y`
    /// and which vanishes in every other block.
    pub fn from_block(&self, y: &[u32], nu: usize) -> Vec<u32> {
        let mut out = vec![0u32; self.dim()];
        for (c, &a) in y.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let mut vals = vec![0u32; self.points];
            vals[nu] = a;
            let coeffs = self.cartan_coefficients(&self.core_shift[c], &vals);
            for (k, &d) in coeffs.iter().enumerate() {
                if d != 0 {
                    let pos = self.pos_table[c * self.points + k] as usize;
                    out[pos] = self.field.add(out[pos], d);
                }
            }
        }
        out
    }

    /// Multiplication inside block `nu`, in core coordinates.
    pub fn block_mul(&self, nu: usize, x: &[u32], y: &[u32]) -> Result<Vec<u32>> {
        let mut out = vec![0u32; self.cores.len()];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let ab = self.field.mul(xa, yb);
                for (c, vals) in self.core_product(a as u32, b as u32)?.iter() {
                    let c = *c as usize;
                    out[c] = self.field.mul_add(out[c], ab, vals[nu]);
                }
            }
        }
        Ok(out)
    }

    /// Position of the basis element with the given core and flat Cartan index.
    pub fn position_of_core(&self, core: usize, k: usize) -> usize {
        self.pos_table[core * self.points + k] as usize
    }

    /// Maps a restricted weight-zero element given as monomial terms to
    /// basis coordinates; `None` if some monomial is not a basis element.
    pub fn coordinates<'a, I: IntoIterator<Item = (&'a PbwMonomial, &'a u32)>>(&self, terms: I) -> Option<Vec<u32>> {
        let mut out = vec![0u32; self.dim()];
        for (m, c) in terms {
            let i = self.position(m)?;
            out[i] = self.field.add(out[i], *c);
        }
        Some(out)
    }
}

fn flat_index(k: &[u16; MAX_RANK], l: usize, q: u32) -> usize {
    let mut idx = 0usize;
    for &x in k.iter().take(l) {
        idx = idx * q as usize + x as usize;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kostant::HyperElement;
    use crate::restricted::basis::reduce_mod_p;
    use crate::root_system::{root_datum, TypeTag};

    fn direct_product(alg: &TorusFixedAlgebra, i: usize, j: usize) -> Vec<u32> {
        let z = alg.zform();
        let prod = z.multiply(&HyperElement::monomial(alg.basis()[i]), &HyperElement::monomial(alg.basis()[j]));
        let red = reduce_mod_p(&prod, alg.p(), alg.r()).unwrap();
        alg.coordinates(red.terms()).expect("product stays in the torus-fixed span")
    }

    fn table_product(alg: &TorusFixedAlgebra, i: usize, j: usize) -> Vec<u32> {
        let mut v = vec![0; alg.dim()];
        for &(k, c) in alg.product(i, j).unwrap().iter() {
            v[k as usize] = c;
        }
        v
    }

    #[test]
    fn dimensions() {
        let a1 = root_datum(TypeTag::A1);
        let a2 = root_datum(TypeTag::A2);
        assert_eq!(TorusFixedAlgebra::new(&a1, 3, 1).unwrap().dim(), 9);
        let alg = TorusFixedAlgebra::new(&a2, 2, 1).unwrap();
        assert_eq!((alg.dim(), alg.torus_rank()), (40, 10));
        assert_eq!(TorusFixedAlgebra::new(&a1, 2, 2).unwrap().dim(), 16);
        assert_eq!(alg.cartan_positions().len() + alg.ideal_j_positions().len(), alg.dim());
    }

    #[test]
    fn table_matches_direct_reduction_exhaustively() {
        for (tag, p, r) in [(TypeTag::A1, 2, 1), (TypeTag::A1, 3, 1), (TypeTag::A1, 2, 2), (TypeTag::A2, 2, 1)] {
            let alg = TorusFixedAlgebra::new(&root_datum(tag), p, r).unwrap();
            for i in 0..alg.dim() {
                for j in 0..alg.dim() {
                    assert_eq!(table_product(&alg, i, j), direct_product(&alg, i, j), "{tag} p={p} r={r} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn table_matches_direct_reduction_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (tag, p, r) in [(TypeTag::A2, 3, 1), (TypeTag::A1, 3, 2), (TypeTag::A1, 5, 1)] {
            let alg = TorusFixedAlgebra::new(&root_datum(tag), p, r).unwrap();
            for _ in 0..150 {
                let i = rng.gen_range(0..alg.dim());
                let j = rng.gen_range(0..alg.dim());
                assert_eq!(table_product(&alg, i, j), direct_product(&alg, i, j), "{tag} p={p} r={r} ({i},{j})");
            }
        }
    }

    #[test]
    fn block_round_trip() {
        let alg = TorusFixedAlgebra::new(&root_datum(TypeTag::A2), 2, 1).unwrap();
        let x: Vec<u32> = (0..alg.dim()).map(|i| (i % 2) as u32).collect();
        let mut back = vec![0u32; alg.dim()];
        for nu in 0..alg.num_points() {
            back = alg.add(&back, &alg.from_block(&alg.block_component(&x, nu), nu));
        }
        assert_eq!(back, x);
        // block multiplication agrees with the table
        let y: Vec<u32> = (0..alg.dim()).map(|i| ((i / 3) % 2) as u32).collect();
        let xy = alg.mul(&x, &y).unwrap();
        for nu in 0..alg.num_points() {
            let got = alg.block_mul(nu, &alg.block_component(&x, nu), &alg.block_component(&y, nu)).unwrap();
            assert_eq!(got, alg.block_component(&xy, nu));
        }
    }

    #[test]
    fn pointwise_product_matches_structure_constants() {
        use rand::{Rng, SeedableRng};
        for (tag, p, r) in [(TypeTag::A1, 3, 2), (TypeTag::A2, 2, 1), (TypeTag::A2, 3, 1)] {
            let alg = TorusFixedAlgebra::new(&root_datum(tag), p, r).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
            for _ in 0..3 {
                let x: Vec<u32> = (0..alg.dim()).map(|_| rng.gen_range(0..p)).collect();
                let y: Vec<u32> = (0..alg.dim()).map(|_| if rng.gen_bool(0.3) { rng.gen_range(0..p) } else { 0 }).collect();
                let mut naive = vec![0u32; alg.dim()];
                for (i, &a) in x.iter().enumerate() {
                    for (j, &b) in y.iter().enumerate() {
                        if a * b == 0 {
                            continue;
                        }
                        for &(k, c) in alg.product(i, j).unwrap().iter() {
                            naive[k as usize] = (naive[k as usize] + a * b % p * c) % p;
                        }
                    }
                }
                assert_eq!(alg.mul_pointwise(&x, &y).unwrap(), naive, "{tag} p={p} r={r}");
                assert_eq!(alg.mul(&x, &y).unwrap(), naive);
            }
        }
    }
}
