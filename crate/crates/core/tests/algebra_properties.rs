use std::collections::BTreeMap;
use std::sync::OnceLock;

use proptest::prelude::*;

use hyperalg::generators::{search_minimal, subalgebra_basis, subalgebra_closure, Family};
use hyperalg::restricted::{check_dimension_formula, TorusFixedAlgebra};
use hyperalg::root_system::{root_datum, RootDatum, TypeTag};

fn a2_p2() -> &'static TorusFixedAlgebra {
    static A: OnceLock<TorusFixedAlgebra> = OnceLock::new();
    A.get_or_init(|| TorusFixedAlgebra::new(&root_datum(TypeTag::A2), 2, 1).unwrap())
}

fn a1_p3_r2() -> &'static TorusFixedAlgebra {
    static A: OnceLock<TorusFixedAlgebra> = OnceLock::new();
    A.get_or_init(|| TorusFixedAlgebra::new(&root_datum(TypeTag::A1), 3, 2).unwrap())
}

/// Weight-zero tuples of positive and negative exponents below `q`, counted
/// by brute force over the positive roots in simple-root coordinates.
fn brute_force_dim(datum: &RootDatum, q: u32) -> usize {
    let roots: Vec<Vec<i64>> = match datum.type_tag() {
        TypeTag::A1 => vec![vec![1]],
        TypeTag::A2 => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
    };
    let mut by_weight: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let s = roots.len();
    let total = (q as usize).pow(s as u32);
    for mut idx in 0..total {
        let mut wt = vec![0i64; datum.rank()];
        for r in &roots {
            let k = (idx % q as usize) as i64;
            idx /= q as usize;
            for (a, b) in wt.iter_mut().zip(r) {
                *a += k * b;
            }
        }
        *by_weight.entry(wt).or_default() += 1;
    }
    let rank_part: usize = by_weight.values().map(|n| n * n).sum();
    rank_part * (q as usize).pow(datum.rank() as u32)
}

#[test]
fn dimension_matches_brute_force_count() {
    for (tag, p, r) in [(TypeTag::A1, 2, 1), (TypeTag::A1, 5, 2), (TypeTag::A2, 2, 1), (TypeTag::A2, 3, 1)] {
        let d = root_datum(tag);
        let alg = TorusFixedAlgebra::new(&d, p, r).unwrap();
        let q = p.pow(r);
        assert_eq!(alg.dim(), brute_force_dim(&d, q));
        assert_eq!(check_dimension_formula(&d, p, r).unwrap().formula_dim, alg.dim());
    }
}

fn arb_element(alg: &'static TorusFixedAlgebra) -> impl Strategy<Value = Vec<u32>> {
    let p = alg.p();
    prop::collection::vec(0..p, alg.dim())
}

fn arb_sparse(alg: &'static TorusFixedAlgebra) -> impl Strategy<Value = Vec<u32>> {
    let (n, p) = (alg.dim(), alg.p());
    prop::collection::vec((0..n, 1..p), 1..4).prop_map(move |terms| {
        let mut v = vec![0u32; n];
        for (i, c) in terms {
            v[i] = c;
        }
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn associative_with_unit(x in arb_element(a2_p2()), y in arb_element(a2_p2()), z in arb_element(a2_p2())) {
        let a = a2_p2();
        let xy_z = a.mul(&a.mul(&x, &y).unwrap(), &z).unwrap();
        let x_yz = a.mul(&x, &a.mul(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(a.mul(&a.unit(), &x).unwrap(), x.clone());
        prop_assert_eq!(a.mul(&x, &a.unit()).unwrap(), x);
    }

    #[test]
    fn blocks_reassemble_and_multiply(x in arb_element(a2_p2()), y in arb_element(a2_p2())) {
        let a = a2_p2();
        let mut sum = vec![0u32; a.dim()];
        let mut prod = vec![0u32; a.dim()];
        for nu in 0..a.num_points() {
            let (bx, by) = (a.block_component(&x, nu), a.block_component(&y, nu));
            sum = a.add(&sum, &a.from_block(&bx, nu));
            prod = a.add(&prod, &a.from_block(&a.block_mul(nu, &bx, &by).unwrap(), nu));
        }
        prop_assert_eq!(sum, x.clone());
        prop_assert_eq!(prod, a.mul(&x, &y).unwrap());
    }

    #[test]
    fn augmentation_is_multiplicative(x in arb_element(a1_p3_r2()), y in arb_element(a1_p3_r2())) {
        let a = a1_p3_r2();
        let lhs = a.augmentation(&a.mul(&x, &y).unwrap());
        let rhs = a.mul(&a.augmentation(&x), &a.augmentation(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn closure_is_monotone_and_idempotent(s in prop::collection::vec(arb_sparse(a2_p2()), 0..3), extra in arb_sparse(a2_p2())) {
        let a = a2_p2();
        let base = subalgebra_closure(a, &s).unwrap();
        let mut more = s.clone();
        more.push(extra);
        prop_assert!(subalgebra_closure(a, &more).unwrap().dimension >= base.dimension);
        let basis = subalgebra_basis(a, &s).unwrap();
        prop_assert_eq!(basis.dim(), base.dimension);
        let again = subalgebra_closure(a, basis.basis()).unwrap();
        prop_assert_eq!(again.dimension, base.dimension);
        prop_assert!(base.trace.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn witnesses_reclose_to_the_full_algebra() {
    for (tag, p, r) in [(TypeTag::A1, 2, 2), (TypeTag::A1, 3, 2), (TypeTag::A2, 2, 1)] {
        let d = root_datum(tag);
        let alg = TorusFixedAlgebra::new(&d, p, r).unwrap();
        let full = check_dimension_formula(&d, p, r).unwrap().formula_dim;
        let rep = search_minimal(&alg, Family::MonomialSubsets, 5000).unwrap();
        assert!(rep.generates);
        for w in &rep.witnesses {
            let seeds: Vec<Vec<u32>> = w
                .elements
                .iter()
                .map(|name| {
                    let i = alg.basis().iter().position(|m| m.to_string() == *name).unwrap();
                    alg.basis_vector(i)
                })
                .collect();
            assert_eq!(subalgebra_closure(&alg, &seeds).unwrap().dimension, full, "{:?}", w.elements);
        }
    }
}
