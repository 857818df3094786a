//! Root data and weights for the types A1 and A2.
//!
//! Chevalley structure constants come from the matrix realization of
//! sl_{n+1}: `e_alpha` is the elementary matrix `E_ij` (i < j), `f_alpha` its
//! transpose and `H_i = E_ii - E_{i+1,i+1}`. For A2 this pins
//! `[e1, e2] = +e3` and `[f1, f2] = -f3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 2;
pub const MAX_POS_ROOTS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeTag {
    A1,
    A2,
}

impl FromStr for TypeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A1" | "a1" => Ok(TypeTag::A1),
            "A2" | "a2" => Ok(TypeTag::A2),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::A1 => write!(f, "A1"),
            TypeTag::A2 => write!(f, "A2"),
        }
    }
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    rank: u8,
    coords: [i64; MAX_RANK],
}

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        assert!(!coords.is_empty() && coords.len() <= MAX_RANK);
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight {
            rank: coords.len() as u8,
            coords: c,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(&vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.rank as usize]
    }

    /// `<lambda, alpha_i^vee>`, a coordinate read.
    #[inline]
    pub fn pairing(&self, i: usize) -> i64 {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    /// Representative with every coordinate in `[0, q)`.
    pub fn reduce_mod(&self, q: i64) -> Weight {
        let mut w = *self;
        for c in w.coords[..self.rank as usize].iter_mut() {
            *c = c.rem_euclid(q);
        }
        w
    }

    /// Splits `self = restricted + q * gamma` with `restricted` in `[0, q)^rank`.
    pub fn split_mod(&self, q: i64) -> (Weight, Weight) {
        let restricted = self.reduce_mod(q);
        let mut gamma = *self;
        for i in 0..self.rank() {
            gamma.coords[i] = (self.coords[i] - restricted.coords[i]) / q;
        }
        (restricted, gamma)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..MAX_RANK {
            self.coords[i] += rhs.coords[i];
        }
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..MAX_RANK {
            self.coords[i] -= rhs.coords[i];
        }
        self
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(mut self) -> Weight {
        for c in self.coords.iter_mut() {
            *c = -*c;
        }
        self
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, mut rhs: Weight) -> Weight {
        for c in rhs.coords.iter_mut() {
            *c *= self;
        }
        rhs
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank == 1 {
            write!(f, "{}", self.coords[0])
        } else {
            let parts: Vec<String> = self.coords().iter().map(|c| c.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<i64> = Vec::deserialize(d)?;
        if v.is_empty() || v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("weight must have 1 or 2 coordinates"));
        }
        Ok(Weight::new(&v))
    }
}

/// A root, as an index into the positive roots together with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub index: usize,
    pub positive: bool,
}

impl Root {
    pub fn pos(index: usize) -> Self {
        Root { index, positive: true }
    }
    pub fn neg(index: usize) -> Self {
        Root { index, positive: false }
    }
}

/// Chevalley basis element of the Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieBasis {
    /// `x_alpha` for the positive root with this index.
    E(usize),
    /// `x_{-alpha}`.
    F(usize),
    /// Simple coroot `H_i`.
    H(usize),
}

impl LieBasis {
    pub fn root(r: Root) -> Self {
        if r.positive {
            LieBasis::E(r.index)
        } else {
            LieBasis::F(r.index)
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    type_tag: TypeTag,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered by height.
    positive_roots: Vec<Vec<i64>>,
    /// `N(alpha, beta)` for every ordered pair of roots whose sum is a root.
    chevalley_n: BTreeMap<(Root, Root), i64>,
    /// `pairings[b][i] = <beta_b, alpha_i^vee>`.
    pairings: Vec<[i64; MAX_RANK]>,
}

pub fn root_datum(type_tag: TypeTag) -> RootDatum {
    RootDatum::new(type_tag)
}

impl RootDatum {
    pub fn new(type_tag: TypeTag) -> Self {
        let (rank, cartan, positive_roots): (usize, Vec<Vec<i64>>, Vec<Vec<i64>>) = match type_tag {
            TypeTag::A1 => (1, vec![vec![2]], vec![vec![1]]),
            TypeTag::A2 => (
                2,
                vec![vec![2, -1], vec![-1, 2]],
                vec![vec![1, 0], vec![0, 1], vec![1, 1]],
            ),
        };
        let pairings = positive_roots
            .iter()
            .map(|beta| {
                let mut out = [0i64; MAX_RANK];
                for (i, o) in out.iter_mut().enumerate().take(rank) {
                    *o = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                }
                out
            })
            .collect();
        let mut datum = RootDatum {
            type_tag,
            rank,
            cartan,
            positive_roots,
            chevalley_n: BTreeMap::new(),
            pairings,
        };
        datum.chevalley_n = matrix_model::structure_constants(&datum);
        datum
    }

    pub fn type_tag(&self) -> TypeTag {
        self.type_tag
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn chevalley_n(&self) -> &BTreeMap<(Root, Root), i64> {
        &self.chevalley_n
    }

    pub fn height(&self, index: usize) -> i64 {
        self.positive_roots[index].iter().sum()
    }

    /// `<beta_index, alpha_i^vee>` for a positive root.
    #[inline]
    pub fn pairing(&self, index: usize, i: usize) -> i64 {
        self.pairings[index][i]
    }

    /// The root in fundamental-weight coordinates.
    pub fn root_as_weight(&self, root: Root) -> Weight {
        let sign = if root.positive { 1 } else { -1 };
        let coords: Vec<i64> = (0..self.rank).map(|i| sign * self.pairing(root.index, i)).collect();
        Weight::new(&coords)
    }

    /// Looks up a signed root by its simple-root coordinates.
    pub fn find_root(&self, coords: &[i64]) -> Option<Root> {
        for (i, r) in self.positive_roots.iter().enumerate() {
            if r.as_slice() == coords {
                return Some(Root::pos(i));
            }
            if r.iter().zip(coords).all(|(a, b)| *a == -*b) {
                return Some(Root::neg(i));
            }
        }
        None
    }

    fn signed_coords(&self, root: Root) -> Vec<i64> {
        let sign = if root.positive { 1 } else { -1 };
        self.positive_roots[root.index].iter().map(|c| sign * c).collect()
    }

    /// `alpha + beta` if it is a root.
    pub fn root_sum(&self, a: Root, b: Root) -> Option<Root> {
        let sum: Vec<i64> = self
            .signed_coords(a)
            .iter()
            .zip(self.signed_coords(b))
            .map(|(x, y)| x + y)
            .collect();
        if sum.iter().all(|&c| c == 0) {
            return None;
        }
        self.find_root(&sum)
    }

    /// The coroot `h_alpha` of a positive root in simple coroots. All roots
    /// have equal length here, so the coefficients are the root coordinates.
    pub fn coroot(&self, index: usize) -> &[i64] {
        &self.positive_roots[index]
    }

    /// Lie bracket of two Chevalley basis elements.
    pub fn bracket(&self, a: LieBasis, b: LieBasis) -> Vec<(LieBasis, i64)> {
        use LieBasis::*;
        match (a, b) {
            (H(_), H(_)) => vec![],
            (H(i), E(j)) => nonzero(E(j), self.pairing(j, i)),
            (H(i), F(j)) => nonzero(F(j), -self.pairing(j, i)),
            (E(_), H(_)) | (F(_), H(_)) => self
                .bracket(b, a)
                .into_iter()
                .map(|(x, c)| (x, -c))
                .collect(),
            _ => {
                let ra = self.lie_root(a);
                let rb = self.lie_root(b);
                if ra.index == rb.index && ra.positive != rb.positive {
                    let sign = if ra.positive { 1 } else { -1 };
                    return self
                        .coroot(ra.index)
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (H(i), sign * c))
                        .collect();
                }
                match self.chevalley_n.get(&(ra, rb)) {
                    Some(&n) => {
                        let sum = self.root_sum(ra, rb).expect("structure constant without root sum");
                        vec![(LieBasis::root(sum), n)]
                    }
                    None => vec![],
                }
            }
        }
    }

    fn lie_root(&self, x: LieBasis) -> Root {
        match x {
            LieBasis::E(i) => Root::pos(i),
            LieBasis::F(i) => Root::neg(i),
            LieBasis::H(_) => unreachable!("Cartan element has no root"),
        }
    }

    pub fn lie_basis(&self) -> Vec<LieBasis> {
        let s = self.num_positive_roots();
        (0..s)
            .map(LieBasis::E)
            .chain((0..s).map(LieBasis::F))
            .chain((0..self.rank).map(LieBasis::H))
            .collect()
    }

    pub fn sign_convention_id(&self) -> &'static str {
        match self.type_tag {
            TypeTag::A1 => "sl2-matrix:[e,f]=h",
            TypeTag::A2 => "sl3-matrix:[e1,e2]=+e3;[f1,f2]=-f3",
        }
    }

    /// Digest of everything the structure constants depend on: type, root
    /// order, structure constants and basis ordering rule.
    pub fn root_order_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}|", self.type_tag).as_bytes());
        for r in &self.positive_roots {
            h.update(format!("{:?};", r).as_bytes());
        }
        for ((a, b), n) in &self.chevalley_n {
            h.update(format!("{:?}{:?}={};", a, b, n).as_bytes());
        }
        h.update(b"basis=lex(m,h,n);cartan=binomial");
        let digest = h.finalize();
        digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

fn nonzero(x: LieBasis, c: i64) -> Vec<(LieBasis, i64)> {
    if c == 0 {
        vec![]
    } else {
        vec![(x, c)]
    }
}

/// All weights with every coordinate in `[0, p^r)`, lexicographic.
pub fn restricted_weights(datum: &RootDatum, p: u32, r: u32) -> Vec<Weight> {
    let q = (p as i64).pow(r);
    let rank = datum.rank();
    let total = (q as usize).pow(rank as u32);
    (0..total)
        .map(|mut idx| {
            let mut coords = vec![0i64; rank];
            for c in coords.iter_mut().rev() {
                *c = (idx % q as usize) as i64;
                idx /= q as usize;
            }
            Weight::new(&coords)
        })
        .collect()
}

/// Integer matrix realization of sl_{n+1}, used to fix the structure constants.
pub(crate) mod matrix_model {
    use super::*;

    pub type Mat = Vec<Vec<i64>>;

    pub fn size(datum: &RootDatum) -> usize {
        datum.rank() + 1
    }

    fn positions(datum: &RootDatum) -> Vec<(usize, usize)> {
        match datum.type_tag() {
            TypeTag::A1 => vec![(0, 1)],
            TypeTag::A2 => vec![(0, 1), (1, 2), (0, 2)],
        }
    }

    pub fn matrix(datum: &RootDatum, x: LieBasis) -> Mat {
        let n = size(datum);
        let mut m = vec![vec![0; n]; n];
        let pos = positions(datum);
        match x {
            LieBasis::E(i) => m[pos[i].0][pos[i].1] = 1,
            LieBasis::F(i) => m[pos[i].1][pos[i].0] = 1,
            LieBasis::H(i) => {
                m[i][i] = 1;
                m[i + 1][i + 1] = -1;
            }
        }
        m
    }

    pub fn commutator(a: &Mat, b: &Mat) -> Mat {
        let n = a.len();
        let mut out = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
                }
            }
        }
        out
    }

    /// Coordinates of a traceless matrix in the Chevalley basis.
    pub fn decompose(datum: &RootDatum, m: &Mat) -> Vec<(LieBasis, i64)> {
        let pos = positions(datum);
        let mut out = Vec::new();
        for (i, &(a, b)) in pos.iter().enumerate() {
            if m[a][b] != 0 {
                out.push((LieBasis::E(i), m[a][b]));
            }
            if m[b][a] != 0 {
                out.push((LieBasis::F(i), m[b][a]));
            }
        }
        let mut running = 0;
        for i in 0..datum.rank() {
            running += m[i][i];
            if running != 0 {
                out.push((LieBasis::H(i), running));
            }
        }
        out.sort();
        out
    }

    pub fn structure_constants(datum: &RootDatum) -> BTreeMap<(Root, Root), i64> {
        let mut out = BTreeMap::new();
        let s = datum.num_positive_roots();
        let roots: Vec<Root> = (0..s).map(Root::pos).chain((0..s).map(Root::neg)).collect();
        for &a in &roots {
            for &b in &roots {
                let Some(sum) = datum.root_sum(a, b) else { continue };
                let c = commutator(
                    &matrix(datum, LieBasis::root(a)),
                    &matrix(datum, LieBasis::root(b)),
                );
                let coeff = decompose(datum, &c)
                    .into_iter()
                    .find(|(x, _)| *x == LieBasis::root(sum))
                    .map(|(_, v)| v)
                    .unwrap_or(0);
                out.insert((a, b), coeff);
            }
        }
        out
    }
}
