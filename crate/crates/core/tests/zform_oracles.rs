//! The Z-form checked against divided powers acting on homogeneous
//! polynomials: `E_b^(m)` acts as `x_a^m d_c^m / m!` for the matrix unit
//! `e_ac` of the root, `F_b^(m)` as the transpose, and `C(H_i, k)` by the
//! binomial of its eigenvalue. None of this uses straightening.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use hyperalg::kostant::{weight_of, HyperElement, PbwMonomial, ZForm};
use hyperalg::root_system::{root_datum, RootDatum, TypeTag, Weight};
use hyperalg::{Element, KostantForm, KostantForm128};

type Mat = Vec<Vec<i128>>;

fn root_units(datum: &RootDatum) -> Vec<(usize, usize)> {
    match datum.type_tag() {
        TypeTag::A1 => vec![(0, 1)],
        TypeTag::A2 => vec![(0, 1), (1, 2), (0, 2)],
    }
}

fn binom(x: i64, k: u64) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (x as i128 - i) / (i + 1);
    }
    acc
}

fn sym_basis(n: usize, k: i64) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for a in (0..=k).rev() {
        for mut rest in sym_basis(n - 1, k - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

struct SymRep {
    basis: Vec<Vec<i64>>,
    index: BTreeMap<Vec<i64>, usize>,
    units: Vec<(usize, usize)>,
}

impl SymRep {
    fn new(datum: &RootDatum, k: i64) -> Self {
        let basis = sym_basis(datum.rank() + 1, k);
        let index = basis.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        SymRep { basis, index, units: root_units(datum) }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `x_a^m d_c^m / m!`
    fn raise(&self, a: usize, c: usize, m: u16) -> Mat {
        let n = self.dim();
        let mut out = vec![vec![0; n]; n];
        for (j, v) in self.basis.iter().enumerate() {
            if v[c] >= m as i64 {
                let mut w = v.clone();
                w[c] -= m as i64;
                w[a] += m as i64;
                out[self.index[&w]][j] = binom(v[c], m as u64);
            }
        }
        out
    }

    fn cartan(&self, i: usize, k: u16) -> Mat {
        let n = self.dim();
        let mut out = vec![vec![0; n]; n];
        for (j, v) in self.basis.iter().enumerate() {
            out[j][j] = binom(v[i] - v[i + 1], k as u64);
        }
        out
    }

    fn monomial(&self, m: &PbwMonomial) -> Mat {
        let mut acc = identity(self.dim());
        for (b, &k) in m.neg_exponents().iter().enumerate() {
            let (a, c) = self.units[b];
            acc = mul(&acc, &self.raise(c, a, k));
        }
        for (i, &k) in m.cartan_degrees().iter().enumerate() {
            acc = mul(&acc, &self.cartan(i, k));
        }
        for (b, &k) in m.pos_exponents().iter().enumerate() {
            let (a, c) = self.units[b];
            acc = mul(&acc, &self.raise(a, c, k));
        }
        acc
    }

    fn element(&self, x: &Element) -> Mat {
        let n = self.dim();
        let mut out = vec![vec![0; n]; n];
        for (m, c) in x.terms() {
            assert!(c.is_integer(), "non-integral coefficient {c} on {m}");
            let c = c.to_integer().to_i128().unwrap();
            let mm = self.monomial(m);
            for i in 0..n {
                for j in 0..n {
                    out[i][j] += c * mm[i][j];
                }
            }
        }
        out
    }
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect()
}

fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect()
}

fn a1() -> RootDatum {
    root_datum(TypeTag::A1)
}

fn a2() -> RootDatum {
    root_datum(TypeTag::A2)
}

fn mono1(f: u16, h: u16, e: u16) -> PbwMonomial {
    PbwMonomial::new(&a1(), &[f], &[h], &[e])
}

#[test]
fn kostant_identity_on_symmetric_powers() {
    // E^(a) F^(b) = sum_j F^(b-j) C(H - a - b + 2j, j) E^(a-j)
    let d = a1();
    let z = KostantForm::new(&d);
    let reps: Vec<SymRep> = (0..=14).map(|k| SymRep::new(&d, k)).collect();
    for a in 0..=6u16 {
        for b in 0..=6u16 {
            let prod = z.multiply(&HyperElement::monomial(mono1(0, 0, a)), &HyperElement::monomial(mono1(b, 0, 0)));
            assert!(prod.is_integral());
            for rep in &reps {
                let n = rep.dim();
                let mut want = vec![vec![0; n]; n];
                for j in 0..=a.min(b) {
                    let mut shifted = vec![vec![0; n]; n];
                    for (t, v) in rep.basis.iter().enumerate() {
                        shifted[t][t] = binom(v[0] - v[1] - a as i64 - b as i64 + 2 * j as i64, j as u64);
                    }
                    let term = mul(&mul(&rep.monomial(&mono1(b - j, 0, 0)), &shifted), &rep.monomial(&mono1(0, 0, a - j)));
                    want = add(&want, &term);
                }
                assert_eq!(rep.element(&prod), want, "E^({a}) F^({b}) on Sym^{}", n - 1);
                assert_eq!(
                    rep.element(&prod),
                    mul(&rep.monomial(&mono1(0, 0, a)), &rep.monomial(&mono1(b, 0, 0)))
                );
            }
        }
    }
}

#[test]
fn a1_products_match_sym_matrices() {
    let d = a1();
    let z = KostantForm::new(&d);
    let reps: Vec<SymRep> = (0..=10).map(|k| SymRep::new(&d, k)).collect();
    let monos: Vec<PbwMonomial> = (0..4).flat_map(|f| (0..3).flat_map(move |h| (0..4).map(move |e| mono1(f, h, e)))).collect();
    for x in &monos {
        for y in monos.iter().step_by(5) {
            let prod = z.multiply(&HyperElement::monomial(*x), &HyperElement::monomial(*y));
            for rep in &reps {
                assert_eq!(rep.element(&prod), mul(&rep.monomial(x), &rep.monomial(y)), "{x} * {y}");
            }
        }
    }
}

fn a2_monomials(max: u16) -> Vec<PbwMonomial> {
    let d = a2();
    let mut out = Vec::new();
    for f in 0..=max {
        for g in 0..=max {
            for e in 0..=max {
                out.push(PbwMonomial::new(&d, &[f, 0, g], &[(f + e) % 2, 0], &[0, e, g]));
                out.push(PbwMonomial::new(&d, &[0, f, e], &[0, g % 2], &[g, 0, f]));
            }
        }
    }
    out
}

#[test]
fn a2_products_match_sym_matrices() {
    let d = a2();
    let z = KostantForm::new(&d);
    let reps: Vec<SymRep> = (0..=4).map(|k| SymRep::new(&d, k)).collect();
    let monos = a2_monomials(2);
    for x in monos.iter().step_by(3) {
        for y in monos.iter().step_by(4) {
            let prod = z.multiply(&HyperElement::monomial(*x), &HyperElement::monomial(*y));
            assert!(prod.is_integral(), "{x} * {y}");
            for rep in &reps {
                assert_eq!(rep.element(&prod), mul(&rep.monomial(x), &rep.monomial(y)), "{x} * {y}");
            }
        }
    }
}

#[test]
fn a2_structure_constants_follow_matrix_units() {
    // [E1, E2] = E3 and [F1, F2] = -F3 in the fixed convention
    let d = a2();
    let z = KostantForm::new(&d);
    let e = |i: usize| HyperElement::monomial(PbwMonomial::positive(&d, i, 1));
    let f = |i: usize| HyperElement::monomial(PbwMonomial::negative(&d, i, 1));
    let comm = |x: &Element, y: &Element| z.multiply(x, y).sub(&z.multiply(y, x));
    assert_eq!(comm(&e(0), &e(1)), e(2));
    assert_eq!(comm(&f(0), &f(1)), f(2).scale(&Ratio::from_integer(BigInt::from(-1))));
}

fn arb_a1() -> impl Strategy<Value = PbwMonomial> {
    (0u16..5, 0u16..4, 0u16..5).prop_map(|(f, h, e)| mono1(f, h, e))
}

fn arb_a2() -> impl Strategy<Value = PbwMonomial> {
    (prop::array::uniform3(0u16..3), prop::array::uniform2(0u16..2), prop::array::uniform3(0u16..3))
        .prop_map(|(f, h, e)| PbwMonomial::new(&a2(), &f, &h, &e))
}

fn m(x: PbwMonomial) -> Element {
    HyperElement::monomial(x)
}

fn tensor_product(z: &KostantForm, a: &BTreeMap<(PbwMonomial, PbwMonomial), Ratio<BigInt>>, b: &BTreeMap<(PbwMonomial, PbwMonomial), Ratio<BigInt>>) -> BTreeMap<(PbwMonomial, PbwMonomial), Ratio<BigInt>> {
    let mut out: BTreeMap<(PbwMonomial, PbwMonomial), Ratio<BigInt>> = BTreeMap::new();
    for ((a1, a2), ca) in a {
        for ((b1, b2), cb) in b {
            let left = z.multiply(&m(*a1), &m(*b1));
            let right = z.multiply(&m(*a2), &m(*b2));
            for (l, cl) in left.terms() {
                for (r, cr) in right.terms() {
                    let slot = out.entry((*l, *r)).or_insert_with(Ratio::zero);
                    *slot = slot.clone() + ca.clone() * cb.clone() * cl.clone() * cr.clone();
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn weight_sum(d: &RootDatum, x: &PbwMonomial, y: &PbwMonomial) -> Weight {
    weight_of(d, x) + weight_of(d, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn a1_associative(x in arb_a1(), y in arb_a1(), w in arb_a1()) {
        let z = KostantForm::new(&a1());
        prop_assert_eq!(z.multiply(&z.multiply(&m(x), &m(y)), &m(w)), z.multiply(&m(x), &z.multiply(&m(y), &m(w))));
    }

    #[test]
    fn a2_associative(x in arb_a2(), y in arb_a2(), w in arb_a2()) {
        let z = KostantForm::new(&a2());
        prop_assert_eq!(z.multiply(&z.multiply(&m(x), &m(y)), &m(w)), z.multiply(&m(x), &z.multiply(&m(y), &m(w))));
    }

    #[test]
    fn products_are_graded_and_integral(x in arb_a2(), y in arb_a2()) {
        let d = a2();
        let z = KostantForm::new(&d);
        let p = z.multiply(&m(x), &m(y));
        prop_assert!(p.is_integral());
        let w = weight_sum(&d, &x, &y);
        for (t, _) in p.terms() {
            prop_assert_eq!(weight_of(&d, t), w);
        }
    }

    #[test]
    fn anti_maps_are_involutive_anti_homomorphisms(x in arb_a2(), y in arb_a2()) {
        let z = KostantForm::new(&a2());
        let xy = z.multiply(&m(x), &m(y));
        prop_assert_eq!(z.antipode(&z.antipode(&m(x))), m(x));
        prop_assert_eq!(z.transpose_tau(&z.transpose_tau(&m(x))), m(x));
        prop_assert_eq!(z.antipode(&xy), z.multiply(&z.antipode(&m(y)), &z.antipode(&m(x))));
        prop_assert_eq!(z.transpose_tau(&xy), z.multiply(&z.transpose_tau(&m(y)), &z.transpose_tau(&m(x))));
    }

    #[test]
    fn a1_anti_maps(x in arb_a1(), y in arb_a1()) {
        let z = KostantForm::new(&a1());
        let xy = z.multiply(&m(x), &m(y));
        prop_assert_eq!(z.antipode(&z.antipode(&m(x))), m(x));
        prop_assert_eq!(z.antipode(&xy), z.multiply(&z.antipode(&m(y)), &z.antipode(&m(x))));
        prop_assert_eq!(z.transpose_tau(&xy), z.multiply(&z.transpose_tau(&m(y)), &z.transpose_tau(&m(x))));
    }

    #[test]
    fn comultiplication_is_multiplicative(x in arb_a1(), y in arb_a1()) {
        let z = KostantForm::new(&a1());
        let lhs = z.comultiply(&z.multiply(&m(x), &m(y)));
        let rhs = tensor_product(&z, &z.comultiply(&m(x)), &z.comultiply(&m(y)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn machine_and_big_integers_agree(x in arb_a2(), y in arb_a2()) {
        let d = a2();
        let big = KostantForm::new(&d).multiply(&m(x), &m(y));
        let small = KostantForm128::new(&d).multiply(&HyperElement::monomial(x), &HyperElement::monomial(y));
        let big: Vec<(PbwMonomial, String)> = big.terms().map(|(t, c)| (*t, c.to_string())).collect();
        let small: Vec<(PbwMonomial, String)> = small.terms().map(|(t, c)| (*t, c.to_string())).collect();
        prop_assert_eq!(big, small);
    }
}

#[test]
fn a2_comultiplication_is_multiplicative_on_generators() {
    let d = a2();
    let z = KostantForm::new(&d);
    let gens = [
        PbwMonomial::positive(&d, 0, 1),
        PbwMonomial::positive(&d, 1, 2),
        PbwMonomial::negative(&d, 0, 1),
        PbwMonomial::negative(&d, 2, 1),
        PbwMonomial::cartan_binomial(&d, 1, 2),
    ];
    for x in &gens {
        for y in &gens {
            let lhs = z.comultiply(&z.multiply(&m(*x), &m(*y)));
            let rhs = tensor_product(&z, &z.comultiply(&m(*x)), &z.comultiply(&m(*y)));
            assert_eq!(lhs, rhs, "{x} * {y}");
        }
    }
}

#[test]
fn integral_for_small_exponents() {
    let d = a2();
    let z: ZForm<BigInt> = ZForm::new(&d);
    let monos: Vec<PbwMonomial> = (0..5u16)
        .flat_map(|a| (0..5u16).map(move |b| (a, b)))
        .flat_map(|(a, b)| {
            let d = a2();
            [
                PbwMonomial::new(&d, &[a, 0, 0], &[0, 0], &[0, b, 0]),
                PbwMonomial::new(&d, &[0, a, 0], &[0, 0], &[b, 0, 0]),
                PbwMonomial::new(&d, &[0, 0, a], &[0, 0], &[0, 0, b]),
            ]
        })
        .collect();
    for x in &monos {
        for y in monos.iter().step_by(7) {
            assert!(z.multiply(&m(*x), &m(*y)).is_integral(), "{x} * {y}");
        }
    }
}
