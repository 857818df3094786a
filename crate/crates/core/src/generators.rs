//! Generating sets of the torus-fixed algebra over `Dist(T_r)`.
//!
//! `Dist(T_r)` is split semisimple, so the algebra is the product of its
//! blocks `e_nu A`, one per character `nu`, and a `Dist(T_r)`-subalgebra is
//! the product of the subalgebras generated blockwise by `e_nu` and the
//! components of the seeds. Closures are computed block by block.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kostant::PbwMonomial;
use crate::linalg::Subspace;
use crate::restricted::TorusFixedAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Closure {
    pub dimension: usize,
    /// Total dimension after each round that grew, starting from the seeds.
    pub trace: Vec<usize>,
}

fn block_closure(alg: &TorusFixedAlgebra, nu: usize, seeds: &[Vec<u32>], trace: &mut Vec<usize>) -> Result<Subspace> {
    let f = *alg.field();
    let cores = alg.cores().len();
    let mut span = Subspace::new(cores);
    let unit = alg.block_component(&alg.unit(), nu);
    let mut fresh: Vec<Vec<u32>> = Vec::new();
    for s in std::iter::once(&unit).chain(seeds) {
        if span.insert(s.clone(), &f) {
            fresh.push(s.clone());
        }
    }
    let mut all = fresh.clone();
    trace.push(span.dim());
    while !fresh.is_empty() && span.dim() < cores {
        let mut next = Vec::new();
        // only products involving a vector added in the last round are new
        for x in &fresh {
            for y in &all {
                for (a, b) in [(x, y), (y, x)] {
                    let prod = alg.block_mul(nu, a, b)?;
                    if span.insert(prod.clone(), &f) {
                        next.push(prod);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        fresh = next;
        trace.push(span.dim());
    }
    Ok(span)
}

fn closure_blocks(alg: &TorusFixedAlgebra, seeds: &[Vec<u32>]) -> Result<(Vec<Subspace>, Closure)> {
    let mut blocks = Vec::with_capacity(alg.num_points());
    let mut traces = Vec::with_capacity(alg.num_points());
    for nu in 0..alg.num_points() {
        let comps: Vec<Vec<u32>> = seeds.iter().map(|s| alg.block_component(s, nu)).collect();
        let mut t = Vec::new();
        blocks.push(block_closure(alg, nu, &comps, &mut t)?);
        traces.push(t);
    }
    let rounds = traces.iter().map(|t| t.len()).max().unwrap_or(0);
    let trace: Vec<usize> = (0..rounds)
        .map(|k| traces.iter().map(|t| t[k.min(t.len() - 1)]).sum())
        .collect();
    let dimension = blocks.iter().map(|b| b.dim()).sum();
    Ok((blocks, Closure { dimension, trace }))
}

/// Dimension of the subalgebra generated by `Dist(T_r)` and `seeds`
/// (elements in basis coordinates), with the per-round trace.
pub fn subalgebra_closure(alg: &TorusFixedAlgebra, seeds: &[Vec<u32>]) -> Result<Closure> {
    Ok(closure_blocks(alg, seeds)?.1)
}

/// The generated subalgebra as an echelonized basis in algebra coordinates.
pub fn subalgebra_basis(alg: &TorusFixedAlgebra, seeds: &[Vec<u32>]) -> Result<Subspace> {
    let f = *alg.field();
    let (blocks, _) = closure_blocks(alg, seeds)?;
    let mut out = Subspace::new(alg.dim());
    for (nu, b) in blocks.iter().enumerate() {
        for v in b.basis() {
            out.insert(alg.from_block(v, nu), &f);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Single weight-zero monomials without Cartan part.
    SingletonMonomials,
    /// Subsets of at most two such monomials.
    PairsOfMonomials,
    /// Subsets of `{F_beta^(k) E_beta^(k)}` over all roots and `0 < k < p^r`.
    Rank1Products,
    /// Subsets of the monomials of any size, smallest first.
    MonomialSubsets,
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "singleton-monomials" | "singletons" => Some(Family::SingletonMonomials),
            "pairs-of-monomials" | "pairs" => Some(Family::PairsOfMonomials),
            "rank1-products" => Some(Family::Rank1Products),
            "monomial-subsets" => Some(Family::MonomialSubsets),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<String>,
    pub closure_dimension_trace: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenReport {
    pub family: Family,
    pub candidates: Vec<String>,
    pub algebra_dimension: usize,
    pub generates: bool,
    /// Trace of the first witness, or of the whole candidate set if none.
    pub closure_dimension_trace: Vec<usize>,
    pub minimal_found: Option<usize>,
    /// Largest closure dimension reached by any searched subset.
    pub best_closure_dimension: usize,
    pub witnesses: Vec<Witness>,
    pub closures_computed: usize,
}

/// Non-identity weight-zero monomials with trivial Cartan part; over
/// `Dist(T_r)` every basis element is one of these times a torus element.
pub fn core_monomials(alg: &TorusFixedAlgebra) -> Vec<usize> {
    (0..alg.cores().len())
        .map(|c| alg.position_of_core(c, 0))
        .filter(|&i| !alg.basis()[i].is_identity())
        .collect()
}

/// `F_beta^(k) E_beta^(k)` for every positive root and `0 < k < p^r`.
pub fn rank1_products(alg: &TorusFixedAlgebra) -> Vec<usize> {
    let d = alg.datum();
    let mut out = Vec::new();
    for b in 0..d.num_positive_roots() {
        for k in 1..alg.q() as u16 {
            let mut neg = vec![0u16; d.num_positive_roots()];
            neg[b] = k;
            let m = PbwMonomial::new(d, &neg, &vec![0; d.rank()], &neg);
            out.push(alg.position(&m).expect("rank-one product is restricted"));
        }
    }
    out
}

/// `k`-subsets of `0..n` in lexicographic order, produced lazily.
struct Subsets {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets { n, cur: (k <= n).then(|| (0..k).collect()) }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let mut c = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if c[i] < self.n - k + i {
                c[i] += 1;
                for t in i + 1..k {
                    c[t] = c[t - 1] + 1;
                }
                self.cur = Some(c);
                break;
            }
        }
        Some(out)
    }
}

/// Searches the family by increasing subset size and reports every
/// generating subset of the smallest successful size. At most `budget`
/// closures are computed.
pub fn search_minimal(alg: &TorusFixedAlgebra, family: Family, budget: usize) -> Result<GenReport> {
    let pool = match family {
        Family::SingletonMonomials | Family::PairsOfMonomials | Family::MonomialSubsets => core_monomials(alg),
        Family::Rank1Products => rank1_products(alg),
    };
    let max_size = match family {
        Family::SingletonMonomials => 1,
        Family::PairsOfMonomials => 2,
        Family::Rank1Products | Family::MonomialSubsets => pool.len(),
    };
    let name = |i: usize| alg.basis()[i].to_string();
    let mut computed = 0;
    let mut witnesses = Vec::new();
    let mut minimal = None;
    let mut best = 0;
    for size in 1..=max_size.min(pool.len()) {
        for subset in Subsets::new(pool.len(), size) {
            if computed >= budget {
                return Err(Error::BudgetExceeded { budget, tried: computed, best_dimension: best });
            }
            computed += 1;
            let seeds: Vec<Vec<u32>> = subset.iter().map(|&k| alg.basis_vector(pool[k])).collect();
            let c = subalgebra_closure(alg, &seeds)?;
            best = best.max(c.dimension);
            if c.dimension == alg.dim() {
                witnesses.push(Witness {
                    elements: subset.iter().map(|&k| name(pool[k])).collect(),
                    closure_dimension_trace: c.trace,
                });
            }
        }
        if !witnesses.is_empty() {
            minimal = Some(size);
            break;
        }
    }
    let trace = match witnesses.first() {
        Some(w) => w.closure_dimension_trace.clone(),
        None => {
            let all: Vec<Vec<u32>> = pool.iter().map(|&i| alg.basis_vector(i)).collect();
            subalgebra_closure(alg, &all)?.trace
        }
    };
    Ok(GenReport {
        family,
        candidates: pool.iter().map(|&i| name(i)).collect(),
        algebra_dimension: alg.dim(),
        generates: minimal.is_some(),
        closure_dimension_trace: trace,
        minimal_found: minimal,
        best_closure_dimension: best,
        witnesses,
        closures_computed: computed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerGenerationReport {
    pub elements: Vec<String>,
    pub full_dimension: usize,
    pub closure_dimension: usize,
    /// Closure dimension with each element left out in turn.
    pub without: Vec<(String, usize)>,
    pub passed: bool,
}

/// `{F_alpha^(p^n) E_alpha^(p^n) : n < r}` for every simple root generates,
/// and no element can be dropped.
pub fn check_layer_generation(alg: &TorusFixedAlgebra) -> Result<LayerGenerationReport> {
    let d = alg.datum();
    let mut positions = Vec::new();
    for i in 0..d.rank() {
        let mut k = 1u16;
        for _ in 0..alg.r() {
            let mut neg = vec![0u16; d.num_positive_roots()];
            neg[i] = k;
            positions.push(alg.position(&PbwMonomial::new(d, &neg, &vec![0; d.rank()], &neg)).expect("restricted"));
            k *= alg.p() as u16;
        }
    }
    let seeds: Vec<Vec<u32>> = positions.iter().map(|&i| alg.basis_vector(i)).collect();
    let full = subalgebra_closure(alg, &seeds)?.dimension;
    let mut without = Vec::new();
    for skip in 0..seeds.len() {
        let rest: Vec<Vec<u32>> = seeds.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, s)| s.clone()).collect();
        without.push((alg.basis()[positions[skip]].to_string(), subalgebra_closure(alg, &rest)?.dimension));
    }
    let passed = full == alg.dim() && without.iter().all(|(_, d)| *d < alg.dim());
    Ok(LayerGenerationReport {
        elements: positions.iter().map(|&i| alg.basis()[i].to_string()).collect(),
        full_dimension: alg.dim(),
        closure_dimension: full,
        without,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{root_datum, TypeTag};

    fn alg(tag: TypeTag, p: u32, r: u32) -> TorusFixedAlgebra {
        TorusFixedAlgebra::new(&root_datum(tag), p, r).unwrap()
    }

    fn fe(a: &TorusFixedAlgebra, k: u16) -> Vec<u32> {
        a.basis_vector(a.position(&PbwMonomial::new(a.datum(), &[k], &[0], &[k])).unwrap())
    }

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(Subsets::new(5, 2).count(), 10);
        assert_eq!(Subsets::new(4, 4).collect::<Vec<_>>(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(Subsets::new(2, 3).count(), 0);
    }

    #[test]
    fn closure_examples() {
        let a = alg(TypeTag::A1, 3, 1);
        assert_eq!(subalgebra_closure(&a, &[]).unwrap().dimension, 3);
        let c = subalgebra_closure(&a, &[fe(&a, 1)]).unwrap();
        assert_eq!(c.dimension, 9);
        assert!(c.trace.windows(2).all(|w| w[0] < w[1]));
        let b = alg(TypeTag::A1, 2, 2);
        assert!(subalgebra_closure(&b, &[fe(&b, 1)]).unwrap().dimension < 16);
        assert_eq!(subalgebra_closure(&b, &[fe(&b, 1), fe(&b, 2)]).unwrap().dimension, 16);
    }

    #[test]
    fn closure_basis_is_a_subalgebra() {
        let b = alg(TypeTag::A1, 2, 2);
        let basis = subalgebra_basis(&b, &[fe(&b, 1)]).unwrap();
        let f = *b.field();
        for x in basis.basis() {
            for y in basis.basis() {
                assert!(basis.contains(&b.mul(x, y).unwrap(), &f));
            }
        }
        assert!(basis.contains(&b.unit(), &f));
    }

    #[test]
    fn singleton_search_a1() {
        let a = alg(TypeTag::A1, 3, 1);
        let rep = search_minimal(&a, Family::SingletonMonomials, 100).unwrap();
        assert_eq!(rep.minimal_found, Some(1));
        assert!(rep.witnesses.iter().any(|w| w.elements == vec![PbwMonomial::new(a.datum(), &[1], &[0], &[1]).to_string()]));
    }

    #[test]
    fn rank1_search_a1_p2_r2() {
        let b = alg(TypeTag::A1, 2, 2);
        let rep = search_minimal(&b, Family::Rank1Products, 100).unwrap();
        assert_eq!(rep.minimal_found, Some(2));
        let want = vec![
            PbwMonomial::new(b.datum(), &[1], &[0], &[1]).to_string(),
            PbwMonomial::new(b.datum(), &[2], &[0], &[2]).to_string(),
        ];
        assert!(rep.witnesses.iter().any(|w| w.elements == want));
        assert!(matches!(search_minimal(&b, Family::Rank1Products, 2), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn layer_generation_small() {
        for (p, r) in [(2, 1), (3, 1), (2, 2)] {
            let rep = check_layer_generation(&alg(TypeTag::A1, p, r)).unwrap();
            assert!(rep.passed, "{rep:?}");
        }
    }
}
