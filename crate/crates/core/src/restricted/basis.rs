use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kostant::{weight_of, HyperElement, PbwMonomial};
use crate::root_system::{RootDatum, Weight};
use crate::scalar::{IntegerScalar, PrimeField};

/// Upper bound on the number of monomials we are willing to enumerate.
pub const MAX_BASIS_SIZE: usize = 2_000_000;

/// PBW basis of `Dist(G_r)`: all monomials with every exponent below `p^r`.
#[derive(Clone, Debug)]
pub struct RestrictedBasis {
    datum: RootDatum,
    p: u32,
    r: u32,
    monomials: Vec<PbwMonomial>,
    weight_index: BTreeMap<Weight, Vec<usize>>,
}

/// `p^r`, the exponent bound.
pub fn level_bound(p: u32, r: u32) -> u32 {
    p.pow(r)
}

/// All exponent vectors of the given length with entries below `q`, lexicographic.
pub(crate) fn exponent_tuples(len: usize, q: u32) -> Vec<Vec<u16>> {
    let mut out: Vec<Vec<u16>> = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * q as usize);
        for t in &out {
            for d in 0..q as u16 {
                let mut t2 = t.clone();
                t2.push(d);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

pub fn restricted_basis(datum: &RootDatum, p: u32, r: u32) -> Result<RestrictedBasis> {
    PrimeField::new(p)?;
    if r == 0 {
        return Err(Error::InvalidArgument("level r must be at least 1".into()));
    }
    let q = level_bound(p, r);
    let s = datum.num_positive_roots();
    let l = datum.rank();
    let size = (q as u128).pow((2 * s + l) as u32);
    if size > MAX_BASIS_SIZE as u128 {
        return Err(Error::OutOfEnvelope(format!(
            "{} monomials for {} at p^r = {q} exceeds the bound {MAX_BASIS_SIZE}",
            size,
            datum.type_tag()
        )));
    }
    let roots = exponent_tuples(s, q);
    let carts = exponent_tuples(l, q);
    let mut monomials = Vec::with_capacity(size as usize);
    for m in &roots {
        for h in &carts {
            for n in &roots {
                monomials.push(PbwMonomial::new(datum, m, h, n));
            }
        }
    }
    debug_assert!(monomials.windows(2).all(|w| w[0] < w[1]));
    let mut weight_index: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, m) in monomials.iter().enumerate() {
        weight_index.entry(weight_of(datum, m)).or_default().push(i);
    }
    Ok(RestrictedBasis { datum: datum.clone(), p, r, monomials, weight_index })
}

impl RestrictedBasis {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[PbwMonomial] {
        &self.monomials
    }

    pub fn weight_index(&self) -> &BTreeMap<Weight, Vec<usize>> {
        &self.weight_index
    }

    pub fn weight_space(&self, w: &Weight) -> &[usize] {
        self.weight_index.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn position(&self, m: &PbwMonomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }
}

/// A combination of restricted monomials with coefficients in `F_p`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ModPElement {
    terms: BTreeMap<PbwMonomial, u32>,
}

impl ModPElement {
    pub fn terms(&self) -> &BTreeMap<PbwMonomial, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<PbwMonomial> {
        self.terms.keys().copied().collect()
    }
}

impl fmt::Display for ModPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if *c == 1 { m.to_string() } else { format!("{c} {m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for ModPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduces an integral element mod `p`, dropping monomials outside
/// `Dist(G_r)` after checking that their coefficients vanish.
pub fn reduce_mod_p<Z: IntegerScalar>(elt: &HyperElement<Z>, p: u32, r: u32) -> Result<ModPElement> {
    let field = PrimeField::new(p)?;
    let q = level_bound(p, r);
    let mut terms = BTreeMap::new();
    for (m, c) in elt.terms() {
        let v = field.from_integral(c).ok_or_else(|| Error::NotIntegral {
            monomial: *m,
            coefficient: c.to_string(),
        })?;
        if v == 0 {
            continue;
        }
        if !m.is_restricted(q) {
            return Err(Error::ClosureViolation { monomial: *m, p, coefficient: v });
        }
        terms.insert(*m, v);
    }
    Ok(ModPElement { terms })
}
