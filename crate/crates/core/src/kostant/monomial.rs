use std::fmt;

use serde::{Deserialize, Serialize};

use crate::root_system::{RootDatum, Weight, MAX_POS_ROOTS, MAX_RANK};

pub type RootExponents = [u16; MAX_POS_ROOTS];
pub type CartanExponents = [u16; MAX_RANK];

/// A PBW-like basis element
/// `X_{-b1}^(m1) ... X_{-bs}^(ms) * C(H_1,k_1)...C(H_l,k_l) * X_{b1}^(n1) ... X_{bs}^(ns)`
/// (negatives, Cartan binomials, positives; roots in height order).
///
/// Derived ordering is lexicographic on `(neg, cartan, pos)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwMonomial {
    #[serde(rename = "m")]
    pub neg: RootExponents,
    #[serde(rename = "h")]
    pub cartan: CartanExponents,
    #[serde(rename = "n")]
    pub pos: RootExponents,
    roots: u8,
    rank: u8,
}

impl PbwMonomial {
    pub fn new(datum: &RootDatum, neg: &[u16], cartan: &[u16], pos: &[u16]) -> Self {
        let s = datum.num_positive_roots();
        let l = datum.rank();
        assert!(neg.len() == s && pos.len() == s && cartan.len() == l, "exponent vector length mismatch");
        let mut m = PbwMonomial::identity(datum);
        m.neg[..s].copy_from_slice(neg);
        m.pos[..s].copy_from_slice(pos);
        m.cartan[..l].copy_from_slice(cartan);
        m
    }

    pub(crate) fn from_arrays(datum: &RootDatum, neg: RootExponents, cartan: CartanExponents, pos: RootExponents) -> Self {
        PbwMonomial {
            neg,
            cartan,
            pos,
            roots: datum.num_positive_roots() as u8,
            rank: datum.rank() as u8,
        }
    }

    pub fn identity(datum: &RootDatum) -> Self {
        Self::from_arrays(datum, [0; MAX_POS_ROOTS], [0; MAX_RANK], [0; MAX_POS_ROOTS])
    }

    /// `X_{-beta}^(k)`
    pub fn negative(datum: &RootDatum, root: usize, k: u16) -> Self {
        let mut m = Self::identity(datum);
        m.neg[root] = k;
        m
    }

    /// `X_{beta}^(k)`
    pub fn positive(datum: &RootDatum, root: usize, k: u16) -> Self {
        let mut m = Self::identity(datum);
        m.pos[root] = k;
        m
    }

    /// `C(H_i, k)`
    pub fn cartan_binomial(datum: &RootDatum, i: usize, k: u16) -> Self {
        let mut m = Self::identity(datum);
        m.cartan[i] = k;
        m
    }

    pub fn num_roots(&self) -> usize {
        self.roots as usize
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn neg_exponents(&self) -> &[u16] {
        &self.neg[..self.roots as usize]
    }

    pub fn pos_exponents(&self) -> &[u16] {
        &self.pos[..self.roots as usize]
    }

    pub fn cartan_degrees(&self) -> &[u16] {
        &self.cartan[..self.rank as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.neg == [0; MAX_POS_ROOTS] && self.pos == [0; MAX_POS_ROOTS] && self.cartan == [0; MAX_RANK]
    }

    /// A pure `Dist(T)` element: no root factors.
    pub fn is_cartan(&self) -> bool {
        self.neg == [0; MAX_POS_ROOTS] && self.pos == [0; MAX_POS_ROOTS]
    }

    /// All exponents and Cartan degrees below `q`.
    pub fn is_restricted(&self, q: u32) -> bool {
        self.neg.iter().chain(self.pos.iter()).chain(self.cartan.iter()).all(|&e| (e as u32) < q)
    }

    pub fn without_cartan(&self) -> Self {
        let mut m = *self;
        m.cartan = [0; MAX_RANK];
        m
    }
}

/// `sum_i (n_i - m_i) beta_i` in fundamental-weight coordinates.
pub fn weight_of(datum: &RootDatum, m: &PbwMonomial) -> Weight {
    let rank = datum.rank();
    let mut coords = vec![0i64; rank];
    for b in 0..datum.num_positive_roots() {
        let d = m.pos[b] as i64 - m.neg[b] as i64;
        if d != 0 {
            for (i, c) in coords.iter_mut().enumerate() {
                *c += d * datum.pairing(b, i);
            }
        }
    }
    Weight::new(&coords)
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_root = self.roots == 1;
        let mut parts = Vec::new();
        let name = |letter: char, idx: usize| {
            if one_root {
                letter.to_string()
            } else {
                format!("{letter}{}", idx + 1)
            }
        };
        let power = |base: String, k: u16| {
            if k == 1 {
                base
            } else {
                format!("{base}^({k})")
            }
        };
        for (i, &k) in self.neg_exponents().iter().enumerate() {
            if k > 0 {
                parts.push(power(name('F', i), k));
            }
        }
        for (i, &k) in self.cartan_degrees().iter().enumerate() {
            if k > 0 {
                let h = if self.rank == 1 { "H".to_string() } else { format!("H{}", i + 1) };
                parts.push(format!("C({h},{k})"));
            }
        }
        for (i, &k) in self.pos_exponents().iter().enumerate() {
            if k > 0 {
                parts.push(power(name('E', i), k));
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

impl fmt::Debug for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
