//! The workflows behind each command, returning complete reports.

use std::path::Path;

use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::generators::{check_layer_generation, search_minimal, Family, GenReport, LayerGenerationReport};
use crate::module_theory::{
    check_simple_classification, compare_multiplicities, ClassificationReport, MultiplicityReport, SimpleCharacters,
    VermaEngine,
};
use crate::report::Report;
use crate::restricted::{
    cache, check_antiautomorphisms, check_associativity, check_augmentation, check_center, check_commutativity,
    check_dimension_formula, check_hopf_failure, check_ideal_j, check_kostant_closure, check_levi_embedding,
    restricted_basis, CheckReport, CommutatorWitness, Coverage, DimensionReport, TorusFixedAlgebra,
};
use crate::root_system::{root_datum, RootDatum, Weight};

/// Pairwise checks run over all basis pairs up to this dimension.
pub const EXHAUSTIVE_VERIFY_DIM: usize = 1024;
/// Kostant closure runs over all pairs of restricted monomials up to this many.
pub const EXHAUSTIVE_CLOSURE_BASIS: usize = 256;
pub const PAIR_SAMPLES: usize = 20_000;
pub const PRODUCT_SAMPLES: usize = 2_000;
/// Z-form products at `p^r = 49` cost tens of milliseconds each.
pub const CLOSURE_SAMPLES: usize = 300;
pub const DEFAULT_SEARCH_BUDGET: usize = 10_000;

/// The torus-fixed algebra, with any cached structure constants loaded.
pub fn open_algebra(cfg: &RunConfig) -> Result<TorusFixedAlgebra> {
    let alg = TorusFixedAlgebra::new(&root_datum(cfg.type_tag), cfg.p, cfg.r)?;
    let dir = cache::resolve_cache_dir(cfg.cache_dir.as_deref());
    cache::load(&alg, &dir)?;
    Ok(alg)
}

fn report<T: Serialize>(cfg: &RunConfig, datum: &RootDatum, passed: bool, body: T) -> Report<T> {
    Report::new(&cfg.command, datum, cfg.p, cfg.r, cfg.seed, passed, body)
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyBody {
    pub algebra_dimension: usize,
    pub pair_coverage: String,
    pub dimension: DimensionReport,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutator: Option<CommutatorWitness>,
}

pub fn verify(cfg: &RunConfig) -> Result<Report<VerifyBody>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let alg = open_algebra(cfg)?;
    let coverage = if alg.dim() <= EXHAUSTIVE_VERIFY_DIM {
        Coverage::All
    } else {
        Coverage::Sampled { count: PAIR_SAMPLES, seed: cfg.seed }
    };
    let closure_sample = if restricted_basis(&datum, cfg.p, cfg.r)?.len() <= EXHAUSTIVE_CLOSURE_BASIS {
        None
    } else {
        Some((CLOSURE_SAMPLES, cfg.seed))
    };
    let dimension = check_dimension_formula(&datum, cfg.p, cfg.r)?;
    let (commutativity, commutator) = check_commutativity(&alg, coverage)?;
    let checks = vec![
        dimension.to_check(),
        check_kostant_closure(alg.zform(), cfg.p, cfg.r, closure_sample)?,
        check_ideal_j(&alg, coverage)?,
        check_center(&alg, coverage)?,
        check_augmentation(&alg, coverage)?,
        check_levi_embedding(&alg)?,
        commutativity,
        check_antiautomorphisms(&alg, PRODUCT_SAMPLES, cfg.seed)?,
        check_associativity(&alg, PRODUCT_SAMPLES, cfg.seed)?,
        check_hopf_failure(alg.zform()),
    ];
    let passed = checks.iter().all(|c| c.passed);
    let body = VerifyBody {
        algebra_dimension: alg.dim(),
        pair_coverage: match coverage {
            Coverage::All => "exhaustive".into(),
            Coverage::Sampled { count, .. } => format!("sampled ({count} pairs)"),
        },
        dimension,
        checks,
        commutator,
    };
    Ok(report(cfg, &datum, passed, body))
}

fn require_restricted(w: &Weight, q: u32) -> Result<()> {
    if w.coords().iter().all(|&c| (0..q as i64).contains(&c)) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("lambda = {w} is not restricted (coordinates must lie in [0, {q}))")))
    }
}

pub fn multiplicity(cfg: &RunConfig) -> Result<Report<Vec<MultiplicityReport>>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let alg = open_algebra(cfg)?;
    let lambdas = match cfg.lambda {
        Some(l) => {
            require_restricted(&l, alg.q())?;
            vec![l]
        }
        None => crate::root_system::restricted_weights(&datum, cfg.p, cfg.r),
    };
    let table = SimpleCharacters::new(&VermaEngine::for_algebra(&alg)?)?;
    let mut out = Vec::new();
    for lambda in &lambdas {
        let mut rep = compare_multiplicities(&alg, &table, lambda, cfg.seed)?;
        if let Some(mu) = cfg.mu {
            rep.rows.retain(|row| row.mu == mu);
            rep.agree = rep.rows.iter().all(|row| row.agree);
        }
        out.push(rep);
    }
    let passed = out.iter().all(|r| r.agree);
    Ok(report(cfg, &datum, passed, out))
}

/// Shifts `gamma` paired with a spread of the restricted weight spaces.
pub fn default_shifts(alg: &TorusFixedAlgebra, count: usize) -> Result<Vec<(Weight, Weight, Weight)>> {
    let datum = alg.datum();
    let gammas: Vec<Weight> = if datum.rank() == 1 {
        [1, -1, 2, -2, 3].iter().map(|&g| Weight::new(&[g])).collect()
    } else {
        [[1, 0], [0, -1], [1, 1], [-1, 2], [2, -1]].iter().map(|g| Weight::new(g)).collect()
    };
    let engine = VermaEngine::for_algebra(alg)?;
    let table = SimpleCharacters::new(&engine)?;
    let spaces: Vec<(Weight, Weight)> = table
        .restricted()
        .iter()
        .flat_map(|(l, ch)| ch.keys().map(move |m| (*l, *m)))
        .collect();
    Ok((0..count)
        .map(|k| {
            let (l, m) = spaces[k * spaces.len() / count];
            (l, m, gammas[k % gammas.len()])
        })
        .collect())
}

pub fn simples(cfg: &RunConfig) -> Result<Report<ClassificationReport>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let alg = open_algebra(cfg)?;
    let shifts = default_shifts(&alg, 5)?;
    let rep = check_simple_classification(&alg, &shifts, cfg.seed)?;
    Ok(report(cfg, &datum, rep.passed, rep))
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Completed(GenReport),
    BudgetExceeded { family: Family, budget: usize, tried: usize, best_closure_dimension: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct GensBody {
    /// Generation by `F_alpha^(p^n) E_alpha^(p^n)`, expected for rank 1 only.
    pub layer_generation: LayerGenerationReport,
    pub layer_generation_expected: bool,
    pub searches: Vec<SearchOutcome>,
}

pub fn gens(cfg: &RunConfig, families: &[Family], budget: usize) -> Result<Report<GensBody>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let alg = open_algebra(cfg)?;
    let layer = check_layer_generation(&alg)?;
    let expected = datum.num_positive_roots() == 1;
    let mut searches = Vec::new();
    for &family in families {
        searches.push(match search_minimal(&alg, family, budget) {
            Ok(rep) => SearchOutcome::Completed(rep),
            Err(Error::BudgetExceeded { budget, tried, best_dimension }) => {
                SearchOutcome::BudgetExceeded { family, budget, tried, best_closure_dimension: best_dimension }
            }
            Err(e) => return Err(e),
        });
    }
    let passed = !expected || layer.passed;
    Ok(report(cfg, &datum, passed, GensBody { layer_generation: layer, layer_generation_expected: expected, searches }))
}

#[derive(Clone, Debug, Serialize)]
pub struct CacheBody {
    pub action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub info: Option<cache::CacheInfo>,
    pub detail: String,
}

pub fn cache_build(cfg: &RunConfig) -> Result<Report<CacheBody>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let alg = TorusFixedAlgebra::new(&datum, cfg.p, cfg.r)?;
    let dir = cache::resolve_cache_dir(cfg.cache_dir.as_deref());
    let (info, hit) = cache::build(&alg, &dir)?;
    let detail = if hit { "already complete; nothing written" } else { "structure constants written" };
    Ok(report(cfg, &datum, true, CacheBody { action: "build".into(), info: Some(info), detail: detail.into() }))
}

pub fn cache_inspect(cfg: &RunConfig) -> Result<Report<CacheBody>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let dim = TorusFixedAlgebra::new(&datum, cfg.p, cfg.r)?.dim();
    let dir = cache::resolve_cache_dir(cfg.cache_dir.as_deref());
    let info = cache::inspect(&dir, &datum, cfg.p, cfg.r, dim)?;
    let detail = match &info {
        Some(i) if i.complete => "complete".to_string(),
        Some(i) => format!("partial: {} of {} pairs", i.pairs, dim * dim),
        None => format!("no cache file at {}", cache::cache_path(&dir, &datum, cfg.p, cfg.r).display()),
    };
    let passed = info.is_some();
    Ok(report(cfg, &datum, passed, CacheBody { action: "inspect".into(), info, detail }))
}

pub fn cache_invalidate(cfg: &RunConfig) -> Result<Report<CacheBody>> {
    cfg.validate()?;
    let datum = root_datum(cfg.type_tag);
    let dir: &Path = &cache::resolve_cache_dir(cfg.cache_dir.as_deref());
    let removed = cache::invalidate(dir, &datum, cfg.p, cfg.r)?;
    let detail = if removed { "cache file removed" } else { "no cache file present" };
    Ok(report(cfg, &datum, true, CacheBody { action: "invalidate".into(), info: None, detail: detail.into() }))
}
