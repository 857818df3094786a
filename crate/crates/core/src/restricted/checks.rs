//! Structural verification of `Dist(G_r)^T`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::basis::{exponent_tuples, level_bound, reduce_mod_p, restricted_basis};
use super::torus::TorusFixedAlgebra;
use crate::error::{Error, Result};
use crate::kostant::{weight_of, HyperElement, PbwMonomial, ZForm};
use crate::root_system::{root_datum, RootDatum, TypeTag, Weight};

/// Which basis pairs a pairwise check visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coverage {
    All,
    Sampled { count: usize, seed: u64 },
}

impl Coverage {
    fn word(&self) -> &'static str {
        match self {
            Coverage::All => "all",
            Coverage::Sampled { .. } => "sampled",
        }
    }

    /// Pairs `(a, b)` with `a` from `left` and `b` from `right`.
    fn pairs(&self, left: &[usize], right: &[usize]) -> Vec<(usize, usize)> {
        match *self {
            Coverage::All => left.iter().flat_map(|&a| right.iter().map(move |&b| (a, b))).collect(),
            Coverage::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| (left[rng.gen_range(0..left.len())], right[rng.gen_range(0..right.len())]))
                    .collect()
            }
        }
    }
}

/// Outcome of one verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    /// Number of elementary cases examined (pairs, triples, ...).
    pub checked: usize,
    pub summary: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn pass(name: &str, checked: usize, summary: impl Into<String>) -> Self {
        CheckReport { name: name.into(), passed: true, checked, summary: summary.into(), counterexample: None }
    }

    fn fail(name: &str, checked: usize, summary: impl Into<String>, counterexample: String) -> Self {
        CheckReport {
            name: name.into(),
            passed: false,
            checked,
            summary: summary.into(),
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    /// `sum_mu (dim Dist(U_r^+)_mu)^2`
    pub rank: usize,
    /// `dim Dist(T_r) = p^(r * rank)`
    pub torus_dim: usize,
    pub formula_dim: usize,
    pub basis_dim: usize,
    /// `dim Dist(U_r)_{-mu} = dim Dist(U_r^+)_mu` for every mu.
    pub negative_side_matches: bool,
    pub passed: bool,
}

impl DimensionReport {
    pub fn to_check(&self) -> CheckReport {
        let summary = format!(
            "rank {} x dim Dist(T_r) {} = {}; torus-fixed basis has {}",
            self.rank, self.torus_dim, self.formula_dim, self.basis_dim
        );
        if self.passed {
            CheckReport::pass("dimension_formula", 1, summary)
        } else {
            CheckReport::fail("dimension_formula", 1, summary, "dimension mismatch".into())
        }
    }
}

fn root_part_weights(datum: &RootDatum, q: u32, sign: i64) -> BTreeMap<Weight, usize> {
    let mut out = BTreeMap::new();
    for n in exponent_tuples(datum.num_positive_roots(), q) {
        let mut coords = vec![0i64; datum.rank()];
        for (b, &e) in n.iter().enumerate() {
            for (i, c) in coords.iter_mut().enumerate() {
                *c += sign * e as i64 * datum.pairing(b, i);
            }
        }
        *out.entry(Weight::new(&coords)).or_insert(0) += 1;
    }
    out
}

/// Compares the torus-fixed basis size with the free-module rank formula,
/// counting root-part weights independently of the algebra construction.
pub fn check_dimension_formula(datum: &RootDatum, p: u32, r: u32) -> Result<DimensionReport> {
    let q = level_bound(p, r);
    let pos = root_part_weights(datum, q, 1);
    let neg = root_part_weights(datum, q, -1);
    let negative_side_matches = pos.iter().all(|(w, &c)| neg.get(&(-*w)).copied() == Some(c)) && pos.len() == neg.len();
    let rank: usize = pos.values().map(|c| c * c).sum();
    let torus_dim = (q as usize).pow(datum.rank() as u32);
    let formula_dim = rank * torus_dim;
    let full = restricted_basis(datum, p, r)?;
    let basis_dim = full.weight_space(&Weight::zero(datum.rank())).len();
    Ok(DimensionReport {
        rank,
        torus_dim,
        formula_dim,
        basis_dim,
        negative_side_matches,
        passed: basis_dim == formula_dim && negative_side_matches,
    })
}

fn show_pair(alg: &TorusFixedAlgebra, i: usize, j: usize) -> String {
    format!("({}) * ({})", alg.basis()[i], alg.basis()[j])
}

/// `J` is exactly the weight-zero monomials with a positive part, and it is
/// a two-sided ideal.
pub fn check_ideal_j(alg: &TorusFixedAlgebra, coverage: Coverage) -> Result<CheckReport> {
    const NAME: &str = "ideal_J";
    let mut in_j = vec![false; alg.dim()];
    for &j in alg.ideal_j_positions() {
        in_j[j] = true;
    }
    for (i, m) in alg.basis().iter().enumerate() {
        let expect = !m.is_cartan();
        if expect != in_j[i] {
            return Ok(CheckReport::fail(NAME, 0, "J positions disagree with the non-Cartan monomials", m.to_string()));
        }
    }
    let all: Vec<usize> = (0..alg.dim()).collect();
    let mut checked = 0;
    for (j, a) in coverage.pairs(alg.ideal_j_positions(), &all) {
        for (x, y) in [(a, j), (j, a)] {
            checked += 1;
            if let Some(&(k, _)) = alg.product(x, y)?.iter().find(|(k, _)| !in_j[*k as usize]) {
                return Ok(CheckReport::fail(
                    NAME,
                    checked,
                    "product leaves J",
                    format!("{} has component on {}", show_pair(alg, x, y), alg.basis()[k as usize]),
                ));
            }
        }
    }
    Ok(CheckReport::pass(
        NAME,
        checked,
        format!("J has dimension {}, two-sided over {} {checked} products", alg.ideal_j_positions().len(), coverage.word()),
    ))
}

/// `eps` is the identity on `Dist(T_r)` and multiplicative on all basis pairs.
pub fn check_augmentation(alg: &TorusFixedAlgebra, coverage: Coverage) -> Result<CheckReport> {
    const NAME: &str = "augmentation";
    for &h in alg.cartan_positions() {
        let v = alg.basis_vector(h);
        if alg.augmentation(&v) != v {
            return Ok(CheckReport::fail(NAME, 0, "not the identity on Dist(T_r)", alg.basis()[h].to_string()));
        }
    }
    let eps: Vec<Vec<u32>> = (0..alg.dim()).map(|i| alg.augmentation(&alg.basis_vector(i))).collect();
    let all: Vec<usize> = (0..alg.dim()).collect();
    let mut checked = 0;
    for (i, j) in coverage.pairs(&all, &all) {
        checked += 1;
        let mut prod = vec![0u32; alg.dim()];
        for &(k, c) in alg.product(i, j)?.iter() {
            prod[k as usize] = c;
        }
        let lhs = alg.augmentation(&prod);
        let rhs = alg.mul(&eps[i], &eps[j])?;
        if lhs != rhs {
            return Ok(CheckReport::fail(NAME, checked, "eps(ab) != eps(a)eps(b)", show_pair(alg, i, j)));
        }
    }
    Ok(CheckReport::pass(NAME, checked, format!("multiplicative on {} {checked} basis pairs", coverage.word())))
}

/// `Dist(T_r)` is central.
pub fn check_center(alg: &TorusFixedAlgebra, coverage: Coverage) -> Result<CheckReport> {
    const NAME: &str = "center";
    let all: Vec<usize> = (0..alg.dim()).collect();
    let mut checked = 0;
    for (h, a) in coverage.pairs(alg.cartan_positions(), &all) {
        checked += 1;
        if alg.product(h, a)? != alg.product(a, h)? {
            return Ok(CheckReport::fail(NAME, checked, "Cartan element does not commute", show_pair(alg, h, a)));
        }
    }
    Ok(CheckReport::pass(NAME, checked, format!("Dist(T_r) lies in the center ({} {checked} pairs)", coverage.word())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommutatorWitness {
    pub a: String,
    pub b: String,
    pub support: Vec<String>,
}

/// Commutative exactly when there is a single positive root. For rank 2 the
/// witness is `[F1 E1, F2 E2]`, whose support is fixed independently of the
/// structure-constant signs.
pub fn check_commutativity(alg: &TorusFixedAlgebra, coverage: Coverage) -> Result<(CheckReport, Option<CommutatorWitness>)> {
    const NAME: &str = "commutativity";
    let d = alg.datum();
    if d.num_positive_roots() == 1 {
        let all: Vec<usize> = (0..alg.dim()).collect();
        let mut checked = 0;
        for (i, j) in coverage.pairs(&all, &all).into_iter().filter(|(i, j)| i < j) {
            checked += 1;
            if alg.product(i, j)? != alg.product(j, i)? {
                return Ok((CheckReport::fail(NAME, checked, "unexpected noncommuting pair", show_pair(alg, i, j)), None));
            }
        }
        return Ok((CheckReport::pass(NAME, checked, format!("commutative (expected; {} {checked} pairs)", coverage.word())), None));
    }
    let a = PbwMonomial::new(d, &[1, 0, 0], &[0, 0], &[1, 0, 0]);
    let b = PbwMonomial::new(d, &[0, 1, 0], &[0, 0], &[0, 1, 0]);
    let comm = alg.commutator(
        &alg.basis_vector(alg.position(&a).expect("F1 E1 is restricted")),
        &alg.basis_vector(alg.position(&b).expect("F2 E2 is restricted")),
    )?;
    let support: BTreeSet<PbwMonomial> = alg.support(&comm).into_iter().collect();
    let expected: BTreeSet<PbwMonomial> = [
        PbwMonomial::new(d, &[1, 1, 0], &[0, 0], &[0, 0, 1]),
        PbwMonomial::new(d, &[0, 0, 1], &[0, 0], &[1, 1, 0]),
        PbwMonomial::new(d, &[0, 0, 1], &[0, 0], &[0, 0, 1]),
    ]
    .into_iter()
    .collect();
    let witness = CommutatorWitness {
        a: a.to_string(),
        b: b.to_string(),
        support: support.iter().map(|m| m.to_string()).collect(),
    };
    let report = if support == expected {
        CheckReport::pass(NAME, 1, format!("noncommutative (expected): [{a}, {b}] != 0"))
    } else {
        CheckReport::fail(NAME, 1, "commutator support differs from the expected set", witness.support.join(", "))
    };
    Ok((report, Some(witness)))
}

/// Single-root subalgebras of the rank-2 algebra reproduce the rank-1 tables.
pub fn check_levi_embedding(alg: &TorusFixedAlgebra) -> Result<CheckReport> {
    const NAME: &str = "levi_embedding";
    let d = alg.datum().clone();
    if d.num_positive_roots() == 1 {
        return Ok(CheckReport::pass(NAME, 0, "rank 1: nothing to embed"));
    }
    let small = TorusFixedAlgebra::new(&root_datum(TypeTag::A1), alg.p(), alg.r())?;
    let mut checked = 0;
    for simple in 0..d.rank() {
        let embed = |m: &PbwMonomial| -> usize {
            let mut neg = vec![0u16; d.num_positive_roots()];
            let mut pos = neg.clone();
            let mut cart = vec![0u16; d.rank()];
            neg[simple] = m.neg[0];
            pos[simple] = m.pos[0];
            cart[simple] = m.cartan[0];
            alg.position(&PbwMonomial::new(&d, &neg, &cart, &pos)).expect("embedded monomial is restricted")
        };
        let image: Vec<usize> = small.basis().iter().map(embed).collect();
        if image[small.identity_position()] != alg.identity_position() {
            return Ok(CheckReport::fail(NAME, checked, "identity not preserved", format!("root {}", simple + 1)));
        }
        for i in 0..small.dim() {
            for j in 0..small.dim() {
                checked += 1;
                let want: Vec<(u32, u32)> = {
                    let mut v: Vec<(u32, u32)> =
                        small.product(i, j)?.iter().map(|&(k, c)| (image[k as usize] as u32, c)).collect();
                    v.sort_unstable();
                    v
                };
                let got = alg.product(image[i], image[j])?;
                if got.as_ref() != want.as_slice() {
                    return Ok(CheckReport::fail(
                        NAME,
                        checked,
                        "structure constants differ",
                        format!("root {}: {}", simple + 1, show_pair(alg, image[i], image[j])),
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(NAME, checked, "each simple-root subalgebra matches the rank-1 table"))
}

/// Largest dimension for which pairwise checks that need dense products run
/// over all basis pairs.
pub const EXHAUSTIVE_PAIR_DIM: usize = 128;

fn pair_list(n: usize, samples: usize, seed: u64) -> Vec<(usize, usize)> {
    if n <= EXHAUSTIVE_PAIR_DIM {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
    }
}

type SparseImage = Vec<Vec<(usize, u32)>>;

fn image_of_basis(alg: &TorusFixedAlgebra, f: impl Fn(&HyperElement<BigInt>) -> HyperElement<BigInt>) -> Result<std::result::Result<SparseImage, String>> {
    let mut out = Vec::with_capacity(alg.dim());
    for m in alg.basis() {
        let img = reduce_mod_p(&f(&HyperElement::monomial(*m)), alg.p(), alg.r())?;
        match alg.coordinates(img.terms()) {
            Some(v) => out.push(v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()),
            None => return Ok(Err(format!("image of {m} leaves the torus-fixed span: {img}"))),
        }
    }
    Ok(Ok(out))
}

fn apply_sparse(alg: &TorusFixedAlgebra, map: &SparseImage, x: &[u32]) -> Vec<u32> {
    let f = alg.field();
    let mut out = vec![0u32; alg.dim()];
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for &(k, c) in &map[i] {
            out[k] = f.mul_add(out[k], a, c);
        }
    }
    out
}

fn dense(alg: &TorusFixedAlgebra, sparse: &[(usize, u32)]) -> Vec<u32> {
    let mut v = vec![0u32; alg.dim()];
    for &(k, c) in sparse {
        v[k] = c;
    }
    v
}

/// The antipode and the transpose preserve the torus-fixed span and are
/// anti-multiplicative; their composite is multiplicative.
///
/// Pairs are exhaustive up to dimension [`EXHAUSTIVE_PAIR_DIM`], sampled beyond.
pub fn check_antiautomorphisms(alg: &TorusFixedAlgebra, samples: usize, seed: u64) -> Result<CheckReport> {
    const NAME: &str = "anti_automorphisms";
    let z = alg.zform().clone();
    let eta = match image_of_basis(alg, |x| z.antipode(x))? {
        Ok(v) => v,
        Err(e) => return Ok(CheckReport::fail(NAME, 0, "antipode leaves the algebra", e)),
    };
    let tau = match image_of_basis(alg, |x| z.transpose_tau(x))? {
        Ok(v) => v,
        Err(e) => return Ok(CheckReport::fail(NAME, 0, "transpose leaves the algebra", e)),
    };
    let eta_d: Vec<Vec<u32>> = eta.iter().map(|s| dense(alg, s)).collect();
    let tau_d: Vec<Vec<u32>> = tau.iter().map(|s| dense(alg, s)).collect();
    let both: Vec<Vec<u32>> = tau_d.iter().map(|t| apply_sparse(alg, &eta, t)).collect();
    let pairs = pair_list(alg.dim(), samples, seed);
    let mut checked = 0;
    for &(i, j) in &pairs {
        {
            checked += 1;
            let prod = dense(alg, &alg.product(i, j)?.iter().map(|&(k, c)| (k as usize, c)).collect::<Vec<_>>());
            if apply_sparse(alg, &eta, &prod) != alg.mul(&eta_d[j], &eta_d[i])? {
                return Ok(CheckReport::fail(NAME, checked, "antipode not anti-multiplicative", show_pair(alg, i, j)));
            }
            if apply_sparse(alg, &tau, &prod) != alg.mul(&tau_d[j], &tau_d[i])? {
                return Ok(CheckReport::fail(NAME, checked, "transpose not anti-multiplicative", show_pair(alg, i, j)));
            }
            let both_prod: Vec<u32> = apply_sparse(alg, &eta, &apply_sparse(alg, &tau, &prod));
            if both_prod != alg.mul(&both[i], &both[j])? {
                return Ok(CheckReport::fail(NAME, checked, "composite not multiplicative", show_pair(alg, i, j)));
            }
        }
    }
    let how = if alg.dim() <= EXHAUSTIVE_PAIR_DIM { "all" } else { "sampled" };
    Ok(CheckReport::pass(
        NAME,
        checked,
        format!("antipode and transpose anti-multiplicative, composite multiplicative ({how} {checked} pairs)"),
    ))
}

/// Associativity on basis triples: exhaustive for small algebras, sampled otherwise.
pub fn check_associativity(alg: &TorusFixedAlgebra, samples: usize, seed: u64) -> Result<CheckReport> {
    const NAME: &str = "associativity";
    let n = alg.dim();
    let triples: Vec<(usize, usize, usize)> = if n * n * n <= 20_000 {
        (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))).collect()
    };
    for (t, &(i, j, k)) in triples.iter().enumerate() {
        let (a, b, c) = (alg.basis_vector(i), alg.basis_vector(j), alg.basis_vector(k));
        if alg.mul(&alg.mul(&a, &b)?, &c)? != alg.mul(&a, &alg.mul(&b, &c)?)? {
            return Ok(CheckReport::fail(
                NAME,
                t + 1,
                "(ab)c != a(bc)",
                format!("{}, {}, {}", alg.basis()[i], alg.basis()[j], alg.basis()[k]),
            ));
        }
    }
    let how = if n * n * n <= 20_000 { "all" } else { "random" };
    Ok(CheckReport::pass(NAME, triples.len(), format!("{how} {} triples associate", triples.len())))
}

/// The coproduct of `F E` has a term whose legs are not weight zero, so the
/// torus-fixed subalgebra is not a sub-coalgebra.
pub fn check_hopf_failure(zform: &ZForm<BigInt>) -> CheckReport {
    const NAME: &str = "hopf_non_closure";
    let d = zform.datum();
    let fe = PbwMonomial::new(
        d,
        &[&[1u16][..], &vec![0; d.num_positive_roots() - 1][..]].concat(),
        &vec![0; d.rank()],
        &[&[1u16][..], &vec![0; d.num_positive_roots() - 1][..]].concat(),
    );
    let delta = zform.comultiply(&HyperElement::monomial(fe));
    let witness = delta
        .iter()
        .find(|((a, b), _)| !weight_of(d, a).is_zero() && !weight_of(d, b).is_zero());
    match witness {
        Some(((a, b), _)) => CheckReport::pass(
            NAME,
            delta.len(),
            format!("Delta({fe}) contains {a} (x) {b} with leg weights {}, {}", weight_of(d, a), weight_of(d, b)),
        ),
        None => CheckReport::fail(NAME, delta.len(), "no mixed-weight term", format!("{delta:?}")),
    }
}

/// Products of restricted monomials stay inside `Dist(G_r)` after reduction.
/// `sample = None` runs over all pairs of the full restricted basis.
pub fn check_kostant_closure(zform: &ZForm<BigInt>, p: u32, r: u32, sample: Option<(usize, u64)>) -> Result<CheckReport> {
    const NAME: &str = "kostant_closure";
    let basis = restricted_basis(zform.datum(), p, r)?;
    let mons = basis.monomials();
    let pairs: Vec<(usize, usize)> = match sample {
        None => (0..mons.len()).flat_map(|i| (0..mons.len()).map(move |j| (i, j))).collect(),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count).map(|_| (rng.gen_range(0..mons.len()), rng.gen_range(0..mons.len()))).collect()
        }
    };
    for (t, &(i, j)) in pairs.iter().enumerate() {
        let prod = zform.multiply(&HyperElement::monomial(mons[i]), &HyperElement::monomial(mons[j]));
        match reduce_mod_p(&prod, p, r) {
            Ok(_) => {}
            Err(e @ (Error::ClosureViolation { .. } | Error::NotIntegral { .. })) => {
                return Ok(CheckReport::fail(NAME, t + 1, e.to_string(), format!("({}) * ({})", mons[i], mons[j])));
            }
            Err(e) => return Err(e),
        }
    }
    let how = if sample.is_none() { "all" } else { "sampled" };
    Ok(CheckReport::pass(NAME, pairs.len(), format!("{how} {} products reduce to restricted support", pairs.len())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_formula_small_cases() {
        let a1 = root_datum(TypeTag::A1);
        let a2 = root_datum(TypeTag::A2);
        let r = check_dimension_formula(&a1, 3, 1).unwrap();
        assert_eq!((r.rank, r.basis_dim, r.passed), (3, 9, true));
        let r = check_dimension_formula(&a2, 2, 1).unwrap();
        assert_eq!((r.rank, r.basis_dim, r.passed), (10, 40, true));
        let r = check_dimension_formula(&a2, 3, 1).unwrap();
        assert_eq!((r.rank, r.basis_dim, r.passed), (45, 405, true));
    }

    #[test]
    fn a1_p3_suite() {
        let alg = TorusFixedAlgebra::new(&root_datum(TypeTag::A1), 3, 1).unwrap();
        assert!(check_ideal_j(&alg, Coverage::All).unwrap().passed);
        let aug = check_augmentation(&alg, Coverage::All).unwrap();
        assert!(aug.passed);
        assert_eq!(aug.checked, 81);
        assert!(check_center(&alg, Coverage::All).unwrap().passed);
        assert!(check_commutativity(&alg, Coverage::All).unwrap().0.passed);
        assert!(check_antiautomorphisms(&alg, 100, 1).unwrap().passed);
        let assoc = check_associativity(&alg, 100, 1).unwrap();
        assert!(assoc.passed);
        assert_eq!(assoc.checked, 729);
        assert!(check_hopf_failure(alg.zform()).passed);
    }

    #[test]
    fn ideal_j_pair_count() {
        let alg = TorusFixedAlgebra::new(&root_datum(TypeTag::A1), 3, 1).unwrap();
        // 9 x 6 pairs, each in both orders
        assert_eq!(check_ideal_j(&alg, Coverage::All).unwrap().checked, 2 * 9 * 6);
    }

    #[test]
    fn a2_p2_suite() {
        let alg = TorusFixedAlgebra::new(&root_datum(TypeTag::A2), 2, 1).unwrap();
        assert!(check_ideal_j(&alg, Coverage::All).unwrap().passed);
        assert!(check_center(&alg, Coverage::All).unwrap().passed);
        let (rep, witness) = check_commutativity(&alg, Coverage::All).unwrap();
        assert!(rep.passed, "{rep:?}");
        assert_eq!(witness.unwrap().support.len(), 3);
        assert!(check_levi_embedding(&alg).unwrap().passed);
        assert!(check_antiautomorphisms(&alg, 100, 1).unwrap().passed);
    }

    #[test]
    fn augmentation_kills_fe() {
        let d = root_datum(TypeTag::A1);
        let alg = TorusFixedAlgebra::new(&d, 3, 1).unwrap();
        let fe = alg.basis_vector(alg.position(&PbwMonomial::new(&d, &[1], &[0], &[1])).unwrap());
        assert!(alg.augmentation(&fe).iter().all(|&x| x == 0));
        let h = alg.basis_vector(alg.position(&PbwMonomial::new(&d, &[0], &[1], &[0])).unwrap());
        assert_eq!(alg.augmentation(&h), h);
    }
}
