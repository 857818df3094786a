use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::engine::{collect, Straightener, Terms, Word};
use super::monomial::{weight_of, PbwMonomial};
use super::rank_one;
use crate::root_system::{RootDatum, Weight, MAX_POS_ROOTS};
use crate::scalar::{factorial, stirling_first, stirling_second, IntegerScalar};

/// Finite linear combination of PBW monomials with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HyperElement<Z: IntegerScalar> {
    terms: BTreeMap<PbwMonomial, Ratio<Z>>,
}

impl<Z: IntegerScalar> Default for HyperElement<Z> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<Z: IntegerScalar> HyperElement<Z> {
    pub fn zero() -> Self {
        HyperElement { terms: BTreeMap::new() }
    }

    pub fn one(datum: &RootDatum) -> Self {
        Self::monomial(PbwMonomial::identity(datum))
    }

    pub fn monomial(m: PbwMonomial) -> Self {
        Self::term(m, Ratio::one())
    }

    pub fn term(m: PbwMonomial, c: Ratio<Z>) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (PbwMonomial, Ratio<Z>)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Ratio<Z>) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Ratio::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Ratio<Z>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Ratio<Z> {
        self.terms.get(m).cloned().unwrap_or_else(Ratio::zero)
    }

    pub fn support(&self) -> Vec<PbwMonomial> {
        self.terms.keys().copied().collect()
    }

    pub fn scale(&self, c: &Ratio<Z>) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HyperElement {
            terms: self.terms.iter().map(|(m, v)| (*m, v.clone() * c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    /// True iff every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The common weight of all terms, if there is one.
    pub fn homogeneous_weight(&self, datum: &RootDatum) -> Option<Weight> {
        let mut it = self.terms.keys().map(|m| weight_of(datum, m));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }
}

impl<Z: IntegerScalar> fmt::Display for HyperElement<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if m.is_identity() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl<Z: IntegerScalar> fmt::Debug for HyperElement<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the tensor square, as a map on pairs of monomials.
pub type TensorElement<Z> = BTreeMap<(PbwMonomial, PbwMonomial), Ratio<Z>>;

type MonomialTerms<Z> = Arc<Vec<(PbwMonomial, Ratio<Z>)>>;

struct Inner<Z: IntegerScalar> {
    engine: Straightener<Z>,
    factorials: Vec<Z>,
    stirling1: Vec<Vec<Z>>,
    stirling2: Vec<Vec<Z>>,
    products: FxHashMap<(PbwMonomial, PbwMonomial), MonomialTerms<Z>>,
    pascal: rank_one::Pascal<Z>,
}

impl<Z: IntegerScalar> Inner<Z> {
    fn ensure_tables(&mut self, n: usize) {
        if self.factorials.len() <= n {
            let target = (n + 1).max(2 * self.factorials.len());
            self.factorials = (0..target as u64).map(factorial).collect();
        }
        if self.stirling1.len() <= n {
            let target = n.max(2 * self.stirling1.len());
            self.stirling1 = stirling_first(target);
            self.stirling2 = stirling_second(target);
        }
    }

    /// `D * x` in ordinary PBW words, where `D` is the product of the
    /// factorials of all exponents of `x`.
    fn to_ordinary(&mut self, x: &PbwMonomial) -> (Terms<Z>, Z) {
        let max = x.neg.iter().chain(x.pos.iter()).chain(x.cartan.iter()).copied().max().unwrap_or(0);
        self.ensure_tables(max as usize);
        let mut denom = Z::one();
        for &e in x.neg.iter().chain(x.pos.iter()).chain(x.cartan.iter()) {
            denom = denom * self.factorials[e as usize].clone();
        }
        let mut terms: Terms<Z> = vec![(Word { f: x.neg, h: [0; 2], e: x.pos }, Z::one())];
        for i in 0..x.rank() {
            let k = x.cartan[i] as usize;
            if k == 0 {
                continue;
            }
            let row = &self.stirling1[k];
            let mut next = Vec::new();
            for (w, c) in &terms {
                for (j, s) in row.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let mut w2 = *w;
                    w2.h[i] = j as u16;
                    next.push((w2, c.clone() * s.clone()));
                }
            }
            terms = next;
        }
        (terms, denom)
    }

    /// Inverse of [`Inner::to_ordinary`] without the denominator: the exact
    /// integer coordinates of ordinary words in the divided-power basis.
    fn from_ordinary(&mut self, datum: &RootDatum, terms: &[(Word, Z)]) -> FxHashMap<PbwMonomial, Z> {
        let max = terms
            .iter()
            .flat_map(|(w, _)| w.f.iter().chain(w.e.iter()).chain(w.h.iter()).copied())
            .max()
            .unwrap_or(0);
        self.ensure_tables(max as usize);
        let mut acc: FxHashMap<PbwMonomial, Z> = FxHashMap::default();
        for (w, c) in terms {
            let mut scale = c.clone();
            for &e in w.f.iter().chain(w.e.iter()) {
                scale = scale * self.factorials[e as usize].clone();
            }
            // H^j = sum_k S(j,k) k! C(H,k)
            let mut parts: Vec<([u16; 2], Z)> = vec![([0; 2], scale)];
            for i in 0..datum.rank() {
                let j = w.h[i] as usize;
                if j == 0 {
                    continue;
                }
                let mut next = Vec::new();
                for (k_vec, v) in &parts {
                    for k in 1..=j {
                        let s = &self.stirling2[j][k];
                        if s.is_zero() {
                            continue;
                        }
                        let mut kv = *k_vec;
                        kv[i] = k as u16;
                        next.push((kv, v.clone() * s.clone() * self.factorials[k].clone()));
                    }
                }
                parts = next;
            }
            for (k_vec, v) in parts {
                let m = PbwMonomial::from_arrays(datum, w.f, k_vec, w.e);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.clone() + v,
                    None => {
                        acc.insert(m, v);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    fn finish(&mut self, datum: &RootDatum, terms: &[(Word, Z)], denom: &Z) -> Vec<(PbwMonomial, Ratio<Z>)> {
        let back = self.from_ordinary(datum, terms);
        let mut out: Vec<(PbwMonomial, Ratio<Z>)> = back
            .into_iter()
            .map(|(m, v)| (m, Ratio::new(v, denom.clone())))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }
}

/// The Kostant Z-form of U(g) for one root datum.
///
/// All products go through an integer straightening engine in the ordinary
/// PBW basis; divided powers and Cartan binomials only appear at the
/// boundary. Internal memo tables make repeated products cheap, so one
/// instance should be shared per root datum.
pub struct ZForm<Z: IntegerScalar> {
    datum: RootDatum,
    inner: Mutex<Inner<Z>>,
}

impl<Z: IntegerScalar> ZForm<Z> {
    pub fn new(datum: &RootDatum) -> Self {
        ZForm {
            datum: datum.clone(),
            inner: Mutex::new(Inner {
                engine: Straightener::new(datum),
                factorials: vec![Z::one()],
                stirling1: vec![vec![Z::one()]],
                stirling2: vec![vec![Z::one()]],
                products: FxHashMap::default(),
                pascal: rank_one::Pascal::new(),
            }),
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Inner<Z>> {
        self.inner.lock().expect("Z-form state poisoned")
    }

    /// Product of two PBW monomials in canonical form.
    pub fn monomial_product(&self, x: &PbwMonomial, y: &PbwMonomial) -> MonomialTerms<Z> {
        let mut inner = self.lock();
        if let Some(v) = inner.products.get(&(*x, *y)) {
            return v.clone();
        }
        let out = if self.datum.num_positive_roots() == 1 {
            Arc::new(rank_one::product(&mut inner.pascal, &self.datum, x, y))
        } else {
            Arc::new(Self::engine_product(&mut inner, &self.datum, x, y))
        };
        inner.products.insert((*x, *y), out.clone());
        out
    }

    fn engine_product(inner: &mut Inner<Z>, datum: &RootDatum, x: &PbwMonomial, y: &PbwMonomial) -> Vec<(PbwMonomial, Ratio<Z>)> {
        let (ox, dx) = inner.to_ordinary(x);
        let (oy, dy) = inner.to_ordinary(y);
        let prod = inner.engine.terms_product(&ox, &oy);
        inner.finish(datum, &prod, &(dx * dy))
    }

    /// The straightening-engine product, bypassing the rank-one formulas.
    #[cfg(test)]
    pub(crate) fn general_product(&self, x: &PbwMonomial, y: &PbwMonomial) -> Vec<(PbwMonomial, Ratio<Z>)> {
        let mut inner = self.lock();
        Self::engine_product(&mut inner, &self.datum, x, y)
    }

    pub fn multiply(&self, a: &HyperElement<Z>, b: &HyperElement<Z>) -> HyperElement<Z> {
        let mut out = HyperElement::zero();
        for (x, cx) in a.terms() {
            for (y, cy) in b.terms() {
                let c = cx.clone() * cy.clone();
                for (m, v) in self.monomial_product(x, y).iter() {
                    out.add_term(*m, v.clone() * c.clone());
                }
            }
        }
        out
    }

    /// Product of a list of monomials, left to right.
    pub fn multiply_all(&self, factors: &[PbwMonomial]) -> HyperElement<Z> {
        let mut acc = HyperElement::one(&self.datum);
        for f in factors {
            acc = self.multiply(&acc, &HyperElement::monomial(*f));
        }
        acc
    }

    /// Applies an anti-automorphism given on ordinary words, then
    /// restraightens.
    fn anti_map(&self, elt: &HyperElement<Z>, image: impl Fn(&Word) -> (Vec<Word>, bool)) -> HyperElement<Z> {
        let mut out = HyperElement::zero();
        let mut inner = self.lock();
        for (m, c) in elt.terms() {
            let (ord, denom) = inner.to_ordinary(m);
            let mut acc: FxHashMap<Word, Z> = FxHashMap::default();
            for (w, k) in &ord {
                let (factors, negate) = image(w);
                let prod = inner.engine.chain(&factors);
                for (u, v) in prod {
                    let v = if negate { -(v * k.clone()) } else { v * k.clone() };
                    match acc.get_mut(&u) {
                        Some(x) => *x = x.clone() + v,
                        None => {
                            acc.insert(u, v);
                        }
                    }
                }
            }
            let terms = collect(acc);
            for (mono, v) in inner.finish(&self.datum, &terms, &denom) {
                out.add_term(mono, v * c.clone());
            }
        }
        out
    }

    /// Single-generator-power words of `w`, in factor order.
    fn factors(&self, w: &Word) -> (Vec<Word>, Vec<Word>, Vec<Word>) {
        let s = self.datum.num_positive_roots();
        let mut fs = Vec::new();
        let mut es = Vec::new();
        for b in 0..s {
            if w.f[b] > 0 {
                let mut x = Word::ONE;
                x.f[b] = w.f[b];
                fs.push(x);
            }
            if w.e[b] > 0 {
                let mut x = Word::ONE;
                x.e[b] = w.e[b];
                es.push(x);
            }
        }
        let hs = if w.h.iter().any(|&j| j > 0) {
            vec![Word { h: w.h, ..Word::ONE }]
        } else {
            vec![]
        };
        (fs, hs, es)
    }

    /// The antipode: anti-automorphism with `x -> -x` on the Lie algebra.
    pub fn antipode(&self, elt: &HyperElement<Z>) -> HyperElement<Z> {
        if self.datum.num_positive_roots() == 1 {
            let mut out = HyperElement::zero();
            let mut inner = self.lock();
            for (m, c) in elt.terms() {
                for (x, v) in rank_one::antipode(&mut inner.pascal, &self.datum, m) {
                    out.add_term(x, v * c.clone());
                }
            }
            return out;
        }
        self.general_antipode(elt)
    }

    fn general_antipode(&self, elt: &HyperElement<Z>) -> HyperElement<Z> {
        self.anti_map(elt, |w| {
            let (fs, hs, es) = self.factors(w);
            let degree: u32 = w.f.iter().chain(w.e.iter()).chain(w.h.iter()).map(|&x| x as u32).sum();
            let mut out: Vec<Word> = es.into_iter().rev().collect();
            out.extend(hs);
            out.extend(fs.into_iter().rev());
            (out, degree % 2 == 1)
        })
    }

    /// The transpose anti-automorphism: `x_beta <-> x_{-beta}`, Cartan fixed.
    pub fn transpose_tau(&self, elt: &HyperElement<Z>) -> HyperElement<Z> {
        if self.datum.num_positive_roots() == 1 {
            // F^(m) C(H,k) E^(n) -> F^(n) C(H,k) E^(m), already in order
            return HyperElement::from_terms(elt.terms().map(|(m, c)| {
                (PbwMonomial::new(&self.datum, &[m.pos[0]], &[m.cartan[0]], &[m.neg[0]]), c.clone())
            }));
        }
        self.general_transpose(elt)
    }

    fn general_transpose(&self, elt: &HyperElement<Z>) -> HyperElement<Z> {
        self.anti_map(elt, |w| {
            let (fs, hs, es) = self.factors(w);
            let swap = |x: Word| Word { f: x.e, h: x.h, e: x.f };
            let mut out: Vec<Word> = es.into_iter().rev().map(swap).collect();
            out.extend(hs);
            out.extend(fs.into_iter().rev().map(swap));
            (out, false)
        })
    }

    /// Comultiplication. Each factor of a PBW monomial is group-like in the
    /// divided-power sense, so both legs of every split are again in PBW
    /// order and no restraightening is needed.
    pub fn comultiply(&self, elt: &HyperElement<Z>) -> TensorElement<Z> {
        let mut out: TensorElement<Z> = BTreeMap::new();
        for (m, c) in elt.terms() {
            for (left, right) in splits(m) {
                let slot = out.entry((left, right)).or_insert_with(Ratio::zero);
                *slot = slot.clone() + c.clone();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// True iff every coefficient in the divided-power basis is an integer.
    pub fn assert_integral(&self, elt: &HyperElement<Z>) -> bool {
        elt.is_integral()
    }

    /// Expands an element into ordinary PBW words `f^m H^j e^n`, returned as
    /// `(m, j, n)` exponent triples with rational coefficients.
    pub fn to_ordinary(&self, elt: &HyperElement<Z>) -> BTreeMap<PbwMonomial, Ratio<Z>> {
        let mut inner = self.lock();
        let mut out: BTreeMap<PbwMonomial, Ratio<Z>> = BTreeMap::new();
        for (m, c) in elt.terms() {
            let (ord, denom) = inner.to_ordinary(m);
            for (w, k) in ord {
                let key = PbwMonomial::from_arrays(&self.datum, w.f, w.h, w.e);
                let slot = out.entry(key).or_insert_with(Ratio::zero);
                *slot = slot.clone() + Ratio::new(k, denom.clone()) * c.clone();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Inverse of [`ZForm::to_ordinary`].
    pub fn from_ordinary(&self, words: &BTreeMap<PbwMonomial, Ratio<Z>>) -> HyperElement<Z> {
        let mut inner = self.lock();
        let mut out = HyperElement::zero();
        for (m, c) in words {
            let w = Word { f: m.neg, h: m.cartan, e: m.pos };
            for (mono, v) in inner.from_ordinary(&self.datum, &[(w, Z::one())]) {
                out.add_term(mono, Ratio::from_integer(v) * c.clone());
            }
        }
        out
    }
}

fn splits(m: &PbwMonomial) -> Vec<(PbwMonomial, PbwMonomial)> {
    let s = m.num_roots();
    let l = m.rank();
    let mut slots: Vec<(usize, u16)> = Vec::new();
    for b in 0..s {
        slots.push((b, m.neg[b]));
    }
    for i in 0..l {
        slots.push((MAX_POS_ROOTS + i, m.cartan[i]));
    }
    for b in 0..s {
        slots.push((MAX_POS_ROOTS + 2 + b, m.pos[b]));
    }
    let mut out = vec![(m.without_cartan(), *m)];
    // start from (zero, m) and distribute
    out[0].0.neg = [0; MAX_POS_ROOTS];
    out[0].0.pos = [0; MAX_POS_ROOTS];
    for &(slot, e) in &slots {
        if e == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (a, b) in &out {
            for i in 0..=e {
                let (mut a2, mut b2) = (*a, *b);
                let (pa, pb) = if slot < MAX_POS_ROOTS {
                    (&mut a2.neg[slot], &mut b2.neg[slot])
                } else if slot < MAX_POS_ROOTS + 2 {
                    (&mut a2.cartan[slot - MAX_POS_ROOTS], &mut b2.cartan[slot - MAX_POS_ROOTS])
                } else {
                    (&mut a2.pos[slot - MAX_POS_ROOTS - 2], &mut b2.pos[slot - MAX_POS_ROOTS - 2])
                };
                *pa = i;
                *pb = e - i;
                next.push((a2, b2));
            }
        }
        out = next;
    }
    out
}
