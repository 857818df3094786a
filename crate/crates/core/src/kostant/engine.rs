//! Straightening in the ordinary PBW basis `f^m H^j e^n` of U(g) over an
//! integer ring.
//!
//! Only the bracket table of the root datum is used. Every product of two
//! ordered words is reduced to three memoized pieces: `e^n f^m` (the swap),
//! products inside the nilpotent radicals, and Cartan shifts
//! `H^j f^c = f^c (H + wt(f^c))^j`, `e^d H^j = (H - wt(e^d))^j e^d`.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::monomial::{CartanExponents, RootExponents};
use crate::root_system::{LieBasis, RootDatum, MAX_POS_ROOTS, MAX_RANK};
use crate::scalar::{binomial, int, IntegerScalar};

/// Ordered word `f^f H^h e^e` with ordinary powers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Word {
    pub f: RootExponents,
    pub h: CartanExponents,
    pub e: RootExponents,
}

impl Word {
    pub const ONE: Word = Word {
        f: [0; MAX_POS_ROOTS],
        h: [0; MAX_RANK],
        e: [0; MAX_POS_ROOTS],
    };
}

pub(crate) type Terms<Z> = Vec<(Word, Z)>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Side {
    Neg,
    Pos,
}

fn first_nonzero(x: &RootExponents) -> Option<usize> {
    x.iter().position(|&v| v > 0)
}

fn last_nonzero(x: &RootExponents) -> Option<usize> {
    x.iter().rposition(|&v| v > 0)
}

fn bump(mut x: RootExponents, i: usize, by: i32) -> RootExponents {
    x[i] = (x[i] as i32 + by) as u16;
    x
}

pub(crate) fn collect<K: Ord + std::hash::Hash + Copy, Z: IntegerScalar>(acc: FxHashMap<K, Z>) -> Vec<(K, Z)> {
    let mut out: Vec<(K, Z)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    out.sort_by_key(|a| a.0);
    out
}

fn add_to<K: std::hash::Hash + Eq, Z: IntegerScalar>(acc: &mut FxHashMap<K, Z>, key: K, v: Z) {
    match acc.get_mut(&key) {
        Some(x) => *x = x.clone() + v,
        None => {
            acc.insert(key, v);
        }
    }
}

pub(crate) struct Straightener<Z: IntegerScalar> {
    datum: RootDatum,
    nil_gen_memo: FxHashMap<(Side, usize, RootExponents), Arc<Vec<(RootExponents, Z)>>>,
    nil_prod_memo: FxHashMap<(Side, RootExponents, RootExponents), Arc<Vec<(RootExponents, Z)>>>,
    gen_memo: FxHashMap<(LieBasis, Word), Arc<Terms<Z>>>,
    swap_memo: FxHashMap<(RootExponents, RootExponents), Arc<Terms<Z>>>,
}

impl<Z: IntegerScalar> Straightener<Z> {
    pub fn new(datum: &RootDatum) -> Self {
        Straightener {
            datum: datum.clone(),
            nil_gen_memo: FxHashMap::default(),
            nil_prod_memo: FxHashMap::default(),
            gen_memo: FxHashMap::default(),
            swap_memo: FxHashMap::default(),
        }
    }

    fn lie(side: Side, index: usize) -> LieBasis {
        match side {
            Side::Neg => LieBasis::F(index),
            Side::Pos => LieBasis::E(index),
        }
    }

    /// `<wt(f^c), alpha_i^vee>`
    fn neg_weight(&self, c: &RootExponents, i: usize) -> i64 {
        -(0..self.datum.num_positive_roots())
            .map(|j| c[j] as i64 * self.datum.pairing(j, i))
            .sum::<i64>()
    }

    fn pos_weight(&self, d: &RootExponents, i: usize) -> i64 {
        (0..self.datum.num_positive_roots())
            .map(|j| d[j] as i64 * self.datum.pairing(j, i))
            .sum()
    }

    /// `x_beta * x^c` inside one nilpotent radical.
    fn nil_gen(&mut self, side: Side, beta: usize, c: RootExponents) -> Arc<Vec<(RootExponents, Z)>> {
        if let Some(v) = self.nil_gen_memo.get(&(side, beta, c)) {
            return v.clone();
        }
        let result = match first_nonzero(&c) {
            Some(g) if g < beta => {
                // x_beta x_g rest = x_g (x_beta rest) + [x_beta, x_g] rest
                let rest = bump(c, g, -1);
                let mut acc = FxHashMap::default();
                let inner = self.nil_gen(side, beta, rest);
                for (t, k) in inner.iter() {
                    let outer = self.nil_gen(side, g, *t);
                    for (u, k2) in outer.iter() {
                        add_to(&mut acc, *u, k.clone() * k2.clone());
                    }
                }
                for (x, n) in self.datum.bracket(Self::lie(side, beta), Self::lie(side, g)) {
                    let idx = match x {
                        LieBasis::E(i) | LieBasis::F(i) => i,
                        LieBasis::H(_) => unreachable!("same-sign roots bracket into a root space"),
                    };
                    let sub = self.nil_gen(side, idx, rest);
                    for (u, k2) in sub.iter() {
                        add_to(&mut acc, *u, int::<Z>(n) * k2.clone());
                    }
                }
                collect(acc)
            }
            _ => vec![(bump(c, beta, 1), Z::one())],
        };
        let result = Arc::new(result);
        self.nil_gen_memo.insert((side, beta, c), result.clone());
        result
    }

    /// `x^a * x^c` inside one nilpotent radical.
    fn nil_product(&mut self, side: Side, a: RootExponents, c: RootExponents) -> Arc<Vec<(RootExponents, Z)>> {
        let Some(beta) = last_nonzero(&a) else {
            return Arc::new(vec![(c, Z::one())]);
        };
        if let Some(v) = self.nil_prod_memo.get(&(side, a, c)) {
            return v.clone();
        }
        let head = bump(a, beta, -1);
        let mut acc = FxHashMap::default();
        let step = self.nil_gen(side, beta, c);
        for (t, k) in step.iter() {
            let sub = self.nil_product(side, head, *t);
            for (u, k2) in sub.iter() {
                add_to(&mut acc, *u, k.clone() * k2.clone());
            }
        }
        let result = Arc::new(collect(acc));
        self.nil_prod_memo.insert((side, a, c), result.clone());
        result
    }

    /// `prod_i (H_i + shift_i)^{h_i}` expanded in powers of the `H_i`.
    fn shifted_power(&self, h: &CartanExponents, shift: &[i64; MAX_RANK]) -> Vec<(CartanExponents, Z)> {
        let mut out: Vec<(CartanExponents, Z)> = vec![([0; MAX_RANK], Z::one())];
        for i in 0..self.datum.rank() {
            let deg = h[i] as u64;
            if deg == 0 {
                continue;
            }
            let s = int::<Z>(shift[i]);
            let factor: Vec<(u16, Z)> = (0..=deg)
                .filter_map(|t| {
                    let mut c: Z = binomial(deg as i64, t);
                    for _ in 0..(deg - t) {
                        c = c * s.clone();
                    }
                    (!c.is_zero()).then_some((t as u16, c))
                })
                .collect();
            let mut next = Vec::with_capacity(out.len() * factor.len());
            for (e, c) in &out {
                for (t, c2) in &factor {
                    let mut e2 = *e;
                    e2[i] += *t;
                    next.push((e2, c.clone() * c2.clone()));
                }
            }
            out = next;
        }
        out
    }

    /// Left multiplication of an ordered word by a Chevalley generator.
    fn gen_left(&mut self, g: LieBasis, w: Word) -> Arc<Terms<Z>> {
        if let Some(v) = self.gen_memo.get(&(g, w)) {
            return v.clone();
        }
        let mut acc: FxHashMap<Word, Z> = FxHashMap::default();
        match g {
            LieBasis::F(beta) => {
                let prod = self.nil_gen(Side::Neg, beta, w.f);
                for (f, k) in prod.iter() {
                    add_to(&mut acc, Word { f: *f, ..w }, k.clone());
                }
            }
            LieBasis::H(i) => {
                let mut up = w;
                up.h[i] += 1;
                add_to(&mut acc, up, Z::one());
                let shift = self.neg_weight(&w.f, i);
                if shift != 0 {
                    add_to(&mut acc, w, int::<Z>(shift));
                }
            }
            LieBasis::E(beta) => match first_nonzero(&w.f) {
                Some(gamma) => {
                    // e_beta f_gamma w' = f_gamma (e_beta w') + [e_beta, f_gamma] w'
                    let rest = Word { f: bump(w.f, gamma, -1), ..w };
                    let inner = self.gen_left(LieBasis::E(beta), rest);
                    for (t, k) in inner.iter() {
                        let outer = self.gen_left(LieBasis::F(gamma), *t);
                        for (u, k2) in outer.iter() {
                            add_to(&mut acc, *u, k.clone() * k2.clone());
                        }
                    }
                    for (x, n) in self.datum.bracket(LieBasis::E(beta), LieBasis::F(gamma)) {
                        let sub = self.gen_left(x, rest);
                        for (u, k2) in sub.iter() {
                            add_to(&mut acc, *u, int::<Z>(n) * k2.clone());
                        }
                    }
                }
                None => {
                    // e_beta H^h e^d = (H - beta)^h e_beta e^d
                    let mut shift = [0i64; MAX_RANK];
                    for (i, s) in shift.iter_mut().enumerate().take(self.datum.rank()) {
                        *s = -self.datum.pairing(beta, i);
                    }
                    let cart = self.shifted_power(&w.h, &shift);
                    let pos = self.nil_gen(Side::Pos, beta, w.e);
                    for (h, k) in &cart {
                        for (e, k2) in pos.iter() {
                            let word = Word { f: w.f, h: *h, e: *e };
                            add_to(&mut acc, word, k.clone() * k2.clone());
                        }
                    }
                }
            },
        }
        let result = Arc::new(collect(acc));
        self.gen_memo.insert((g, w), result.clone());
        result
    }

    /// Normal form of `e^n f^m`.
    fn swap(&mut self, n: RootExponents, m: RootExponents) -> Arc<Terms<Z>> {
        if let Some(v) = self.swap_memo.get(&(n, m)) {
            return v.clone();
        }
        let result = match first_nonzero(&n) {
            None => vec![(Word { f: m, ..Word::ONE }, Z::one())],
            Some(_) if first_nonzero(&m).is_none() => vec![(Word { e: n, ..Word::ONE }, Z::one())],
            Some(beta) => {
                let prev = self.swap(bump(n, beta, -1), m);
                let mut acc = FxHashMap::default();
                for (w, k) in prev.iter() {
                    let step = self.gen_left(LieBasis::E(beta), *w);
                    for (u, k2) in step.iter() {
                        add_to(&mut acc, *u, k.clone() * k2.clone());
                    }
                }
                collect(acc)
            }
        };
        let result = Arc::new(result);
        self.swap_memo.insert((n, m), result.clone());
        result
    }

    /// Product of two ordered words, accumulated (scaled) into `acc`.
    pub fn word_product_into(&mut self, a: &Word, b: &Word, scale: &Z, acc: &mut FxHashMap<Word, Z>) {
        let rank = self.datum.rank();
        let middle = self.swap(a.e, b.f);
        for (w, k) in middle.iter() {
            let mut left_shift = [0i64; MAX_RANK];
            let mut right_shift = [0i64; MAX_RANK];
            for i in 0..rank {
                left_shift[i] = self.neg_weight(&w.f, i);
                right_shift[i] = -self.pos_weight(&w.e, i);
            }
            let left = self.shifted_power(&a.h, &left_shift);
            let right = self.shifted_power(&b.h, &right_shift);
            let negs = self.nil_product(Side::Neg, a.f, w.f);
            let poss = self.nil_product(Side::Pos, w.e, b.e);
            let base = scale.clone() * k.clone();
            for (hl, cl) in &left {
                for (hr, cr) in &right {
                    let mut h = w.h;
                    for i in 0..rank {
                        h[i] += hl[i] + hr[i];
                    }
                    let ch = base.clone() * cl.clone() * cr.clone();
                    for (f, cf) in negs.iter() {
                        let chf = ch.clone() * cf.clone();
                        for (e, ce) in poss.iter() {
                            add_to(acc, Word { f: *f, h, e: *e }, chf.clone() * ce.clone());
                        }
                    }
                }
            }
        }
    }

    #[cfg(test)]
    pub fn word_product(&mut self, a: &Word, b: &Word) -> Terms<Z> {
        let mut acc = FxHashMap::default();
        self.word_product_into(a, b, &Z::one(), &mut acc);
        collect(acc)
    }

    pub fn terms_product(&mut self, x: &[(Word, Z)], y: &[(Word, Z)]) -> Terms<Z> {
        let mut acc = FxHashMap::default();
        for (a, ka) in x {
            for (b, kb) in y {
                self.word_product_into(a, b, &(ka.clone() * kb.clone()), &mut acc);
            }
        }
        collect(acc)
    }

    /// Product of a list of words, left to right.
    pub fn chain(&mut self, words: &[Word]) -> Terms<Z> {
        let mut acc: Terms<Z> = vec![(Word::ONE, Z::one())];
        for w in words {
            acc = self.terms_product(&acc, &[(*w, Z::one())]);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{root_datum, TypeTag};

    fn w(f: &[u16], h: &[u16], e: &[u16]) -> Word {
        let mut out = Word::ONE;
        out.f[..f.len()].copy_from_slice(f);
        out.h[..h.len()].copy_from_slice(h);
        out.e[..e.len()].copy_from_slice(e);
        out
    }

    #[test]
    fn sl2_commutator() {
        let d = root_datum(TypeTag::A1);
        let mut s = Straightener::<i64>::new(&d);
        // e f = f e + h
        let got = s.word_product(&w(&[], &[], &[1]), &w(&[1], &[], &[]));
        assert_eq!(got, vec![(w(&[0], &[1], &[0]), 1), (w(&[1], &[0], &[1]), 1)]);
        // e f^2 = f^2 e + 2 f (h - 1)
        let got = s.word_product(&w(&[], &[], &[1]), &w(&[2], &[], &[]));
        assert_eq!(
            got,
            vec![
                (w(&[1], &[0], &[0]), -2),
                (w(&[1], &[1], &[0]), 2),
                (w(&[2], &[0], &[1]), 1)
            ]
        );
    }

    #[test]
    fn cartan_shift() {
        let d = root_datum(TypeTag::A1);
        let mut s = Straightener::<i64>::new(&d);
        // H f = f (H - 2)
        let got = s.word_product(&w(&[], &[1], &[]), &w(&[1], &[], &[]));
        assert_eq!(got, vec![(w(&[1], &[0], &[0]), -2), (w(&[1], &[1], &[0]), 1)]);
        // e H = (H - 2) e
        let got = s.word_product(&w(&[], &[], &[1]), &w(&[], &[1], &[]));
        assert_eq!(got, vec![(w(&[0], &[0], &[1]), -2), (w(&[0], &[1], &[1]), 1)]);
    }

    #[test]
    fn sl3_radicals() {
        let d = root_datum(TypeTag::A2);
        let mut s = Straightener::<i64>::new(&d);
        // e2 e1 = e1 e2 - e3
        let got = s.word_product(&w(&[0, 0, 0], &[0, 0], &[0, 1, 0]), &w(&[0, 0, 0], &[0, 0], &[1, 0, 0]));
        assert_eq!(
            got,
            vec![(w(&[0, 0, 0], &[0, 0], &[0, 0, 1]), -1), (w(&[0, 0, 0], &[0, 0], &[1, 1, 0]), 1)]
        );
        // f2 f1 = f1 f2 + f3
        let got = s.word_product(&w(&[0, 1, 0], &[0, 0], &[0, 0, 0]), &w(&[1, 0, 0], &[0, 0], &[0, 0, 0]));
        assert_eq!(
            got,
            vec![(w(&[0, 0, 1], &[0, 0], &[0, 0, 0]), 1), (w(&[1, 1, 0], &[0, 0], &[0, 0, 0]), 1)]
        );
    }
}
