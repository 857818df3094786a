//! Closed-form products for a single positive root, directly in the
//! divided-power basis `F^(a) C(H,j) E^(b)`.
//!
//! The general engine is exact but pays for the passage through ordinary
//! words; with one root every rule below is a finite integer sum, which keeps
//! exponents up to `p^r - 1 = 48` cheap.

use std::collections::BTreeMap;

use num_rational::Ratio;

use super::monomial::PbwMonomial;
use crate::root_system::RootDatum;
use crate::scalar::IntegerScalar;

/// Polynomial in `H`, coefficient `k` on `C(H, k)`.
type BinomialPoly<Z> = Vec<Z>;

/// Pascal's triangle, grown on demand.
pub(crate) struct Pascal<Z> {
    rows: Vec<Vec<Z>>,
}

impl<Z: IntegerScalar> Pascal<Z> {
    pub(crate) fn new() -> Self {
        Pascal { rows: vec![vec![Z::one()]] }
    }

    fn grow(&mut self, n: usize) {
        while self.rows.len() <= n {
            let last = self.rows.last().expect("row 0 exists");
            let mut row = Vec::with_capacity(last.len() + 1);
            row.push(Z::one());
            for w in last.windows(2) {
                row.push(w[0].clone() + w[1].clone());
            }
            row.push(Z::one());
            self.rows.push(row);
        }
    }

    /// Generalized `C(x, k)`; negative tops use `C(-a, k) = (-1)^k C(a+k-1, k)`.
    fn get(&mut self, x: i64, k: u64) -> Z {
        if x >= 0 {
            if k as i64 > x {
                return Z::zero();
            }
            self.grow(x as usize);
            self.rows[x as usize][k as usize].clone()
        } else {
            let v = self.get(-x + k as i64 - 1, k);
            if k.is_multiple_of(2) {
                v
            } else {
                -v
            }
        }
    }
}

/// `C(H + s, j) = sum_t C(s, j - t) C(H, t)`
fn shifted<Z: IntegerScalar>(pascal: &mut Pascal<Z>, s: i64, j: u16) -> BinomialPoly<Z> {
    (0..=j as u64).map(|t| pascal.get(s, j as u64 - t)).collect()
}

/// `C(H,m) C(H,n) = sum_k (m+n-k)! / (k! (m-k)! (n-k)!) C(H, m+n-k)`
fn poly_mul<Z: IntegerScalar>(pascal: &mut Pascal<Z>, a: &BinomialPoly<Z>, b: &BinomialPoly<Z>) -> BinomialPoly<Z> {
    let mut out = vec![Z::zero(); a.len() + b.len() - 1];
    for (m, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (n, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x.clone() * y.clone();
            for k in 0..=m.min(n) {
                let top = (m + n - k) as i64;
                let c = pascal.get(top, k as u64) * pascal.get(top - k as i64, (m - k) as u64);
                out[m + n - k] = out[m + n - k].clone() + xy.clone() * c;
            }
        }
    }
    out
}

fn mono(datum: &RootDatum, f: u16, h: usize, e: u16) -> PbwMonomial {
    PbwMonomial::new(datum, &[f], &[h as u16], &[e])
}

/// `(F^(a) C(H,j) E^(b)) (F^(c) C(H,k) E^(d))`, using
/// `E^(b) F^(c) = sum_i F^(c-i) C(H - b - c + 2i, i) E^(b-i)` and
/// `C(H,j) F^(n) = F^(n) C(H - 2n, j)`, `E^(n) C(H,k) = C(H - 2n, k) E^(n)`.
pub(crate) fn product<Z: IntegerScalar>(
    pascal: &mut Pascal<Z>,
    datum: &RootDatum, x: &PbwMonomial, y: &PbwMonomial) -> Vec<(PbwMonomial, Ratio<Z>)> {
    let (a, j, b) = (x.neg[0], x.cartan[0], x.pos[0]);
    let (c, k, d) = (y.neg[0], y.cartan[0], y.pos[0]);
    let mut acc: BTreeMap<PbwMonomial, Z> = BTreeMap::new();
    for i in 0..=b.min(c) {
        let (fc, eb) = (c - i, b - i);
        let outer = pascal.get((a + fc) as i64, a as u64) * pascal.get((eb + d) as i64, d as u64);
        let left = shifted(pascal, -2 * fc as i64, j);
        let mid = shifted(pascal, -(b as i64) - c as i64 + 2 * i as i64, i);
        let right = shifted(pascal, -2 * eb as i64, k);
        let poly = {
            let lm = poly_mul(pascal, &left, &mid);
            poly_mul(pascal, &lm, &right)
        };
        for (t, v) in poly.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let slot = acc.entry(mono(datum, a + fc, t, eb + d)).or_insert_with(Z::zero);
            *slot = slot.clone() + v * outer.clone();
        }
    }
    acc.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m, Ratio::from_integer(v)))
        .collect()
}

/// `S(F^(m) C(H,k) E^(n)) = (-1)^(m+n) E^(n) C(-H,k) F^(m)` with
/// `C(-H,k) = (-1)^k C(H+k-1,k)`, straightened as in [`product`].
pub(crate) fn antipode<Z: IntegerScalar>(
    pascal: &mut Pascal<Z>,
    datum: &RootDatum, x: &PbwMonomial) -> Vec<(PbwMonomial, Ratio<Z>)> {
    let (m, k, n) = (x.neg[0], x.cartan[0], x.pos[0]);
    let sign = if (m + n + k) % 2 == 0 { Z::one() } else { -Z::one() };
    let mut acc: BTreeMap<PbwMonomial, Z> = BTreeMap::new();
    for i in 0..=m.min(n) {
        let (f, e) = (m - i, n - i);
        let cart = shifted(pascal, k as i64 - 1 - 2 * n as i64 - 2 * f as i64, k);
        let ef = shifted(pascal, -(n as i64) - m as i64 + 2 * i as i64, i);
        let poly = poly_mul(pascal, &cart, &ef);
        for (t, v) in poly.into_iter().enumerate() {
            if !v.is_zero() {
                let slot = acc.entry(mono(datum, f, t, e)).or_insert_with(Z::zero);
                *slot = slot.clone() + v * sign.clone();
            }
        }
    }
    acc.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(m, v)| (m, Ratio::from_integer(v)))
        .collect()
}
