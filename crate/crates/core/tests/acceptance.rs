//! Acceptance suite: one PASS/FAIL line per criterion, each within its
//! time limit. Runs without the test harness so the lines always show.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperalg::config::RunConfig;
use hyperalg::generators::check_layer_generation;
use hyperalg::kostant::PbwMonomial;
use hyperalg::meataxe::{chop, MatrixModule};
use hyperalg::module_theory::{
    baby_verma, check_simple_classification, compare_multiplicities, simple_module, verma_multiplicities_by_character,
    SimpleCharacters, VermaEngine,
};
use hyperalg::restricted::{
    check_augmentation, check_commutativity, check_ideal_j, check_kostant_closure, restricted_basis, Coverage,
    TorusFixedAlgebra,
};
use hyperalg::root_system::{restricted_weights, root_datum, RootDatum, TypeTag, Weight};
use hyperalg::suite;
use hyperalg::KostantForm;

const SEED: u64 = 0x5eed;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn algebra(tag: TypeTag, p: u32, r: u32) -> TorusFixedAlgebra {
    TorusFixedAlgebra::new(&root_datum(tag), p, r).expect("setting inside the envelope")
}

/// Weight-zero exponent pairs counted by brute force over positive-root
/// exponent tuples, times `dim Dist(T_r)`.
fn enumerated_dim(datum: &RootDatum, q: u32) -> usize {
    let roots: Vec<Vec<i64>> = match datum.type_tag() {
        TypeTag::A1 => vec![vec![1]],
        TypeTag::A2 => vec![vec![1, 0], vec![0, 1], vec![1, 1]],
    };
    let mut by_weight: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for mut idx in 0..(q as usize).pow(roots.len() as u32) {
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
    by_weight.values().map(|n| n * n).sum::<usize>() * (q as usize).pow(datum.rank() as u32)
}

fn dimension_formula() -> Outcome {
    let mut detail = Vec::new();
    let cases = [(TypeTag::A1, 2, 1), (TypeTag::A1, 3, 1), (TypeTag::A1, 5, 1), (TypeTag::A1, 2, 2), (TypeTag::A1, 3, 2), (TypeTag::A1, 5, 2), (TypeTag::A2, 2, 1), (TypeTag::A2, 3, 1)];
    for (tag, p, r) in cases {
        let start = Instant::now();
        let d = root_datum(tag);
        let built = algebra(tag, p, r).dim();
        let want = enumerated_dim(&d, p.pow(r));
        if built != want {
            return Err(format!("{tag} p={p} r={r}: basis {built}, enumerated {want}"));
        }
        if start.elapsed() > Duration::from_secs(10) {
            return Err(format!("{tag} p={p} r={r} took {:.1?}", start.elapsed()));
        }
        detail.push(format!("{tag}/{p}/{r}:{built}"));
    }
    Ok(detail.join(" "))
}

fn ideal_and_augmentation() -> Outcome {
    let mut pairs = 0;
    for (tag, p, r) in [(TypeTag::A1, 2, 1), (TypeTag::A1, 3, 1), (TypeTag::A1, 5, 1), (TypeTag::A1, 2, 2), (TypeTag::A1, 3, 2), (TypeTag::A2, 2, 1), (TypeTag::A2, 3, 1)] {
        let alg = algebra(tag, p, r);
        for rep in [check_ideal_j(&alg, Coverage::All).map_err(|e| e.to_string())?, check_augmentation(&alg, Coverage::All).map_err(|e| e.to_string())?] {
            if !rep.passed {
                return Err(format!("{tag} p={p} r={r} {}: {} {:?}", rep.name, rep.summary, rep.counterexample));
            }
            pairs += rep.checked;
        }
    }
    Ok(format!("{pairs} products checked exhaustively, zero failures"))
}

fn kostant_closure() -> Outcome {
    let mut detail = Vec::new();
    for (tag, p, r) in [(TypeTag::A1, 2, 1), (TypeTag::A1, 3, 1), (TypeTag::A1, 5, 1), (TypeTag::A1, 2, 2), (TypeTag::A1, 3, 2), (TypeTag::A2, 2, 1), (TypeTag::A2, 3, 1)] {
        let d = root_datum(tag);
        let size = restricted_basis(&d, p, r).map_err(|e| e.to_string())?.len();
        let sample = if size <= 256 { None } else { Some((2000, SEED)) };
        let rep = check_kostant_closure(&KostantForm::new(&d), p, r, sample).map_err(|e| e.to_string())?;
        if !rep.passed {
            return Err(format!("{tag} p={p} r={r}: {} {:?}", rep.summary, rep.counterexample));
        }
        if tag == TypeTag::A2 && p == 2 && rep.checked != 256 * 256 {
            return Err(format!("A2 p=2 checked {} products, expected 65536", rep.checked));
        }
        detail.push(format!("{tag}/{p}/{r}:{}{}", rep.checked, if sample.is_some() { "s" } else { "" }));
    }
    Ok(detail.join(" "))
}

fn commutativity() -> Outcome {
    for (p, r) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)] {
        let (rep, _) = check_commutativity(&algebra(TypeTag::A1, p, r), Coverage::All).map_err(|e| e.to_string())?;
        if !rep.passed {
            return Err(format!("A1 p={p} r={r}: {:?}", rep.counterexample));
        }
    }
    let d = root_datum(TypeTag::A2);
    let expected: Vec<String> = {
        let mut v: Vec<String> = [
            PbwMonomial::new(&d, &[1, 1, 0], &[0, 0], &[0, 0, 1]),
            PbwMonomial::new(&d, &[0, 0, 1], &[0, 0], &[1, 1, 0]),
            PbwMonomial::new(&d, &[0, 0, 1], &[0, 0], &[0, 0, 1]),
        ]
        .iter()
        .map(|m| m.to_string())
        .collect();
        v.sort();
        v
    };
    for p in [2, 3] {
        let (rep, witness) = check_commutativity(&algebra(TypeTag::A2, p, 1), Coverage::All).map_err(|e| e.to_string())?;
        let mut support = witness.ok_or("no commutator witness")?.support;
        support.sort();
        if !rep.passed || support != expected {
            return Err(format!("A2 p={p}: support {support:?}"));
        }
    }
    Ok(format!("A1 tables commutative; A2 [F1 E1, F2 E2] support {{{}}}", expected.join(", ")))
}

fn classification() -> Outcome {
    let mut detail = Vec::new();
    for (tag, p) in [(TypeTag::A1, 3), (TypeTag::A1, 5), (TypeTag::A2, 2)] {
        let alg = algebra(tag, p, 1);
        let shifts = suite::default_shifts(&alg, 5).map_err(|e| e.to_string())?;
        let rep = check_simple_classification(&alg, &shifts, SEED).map_err(|e| e.to_string())?;
        let reducible: Vec<_> = rep.weight_spaces.iter().filter(|w| !w.irreducible).collect();
        if !reducible.is_empty() || !rep.unexpected_isomorphisms.is_empty() || rep.shifted_pairs.len() != 5 || !rep.passed {
            return Err(format!(
                "{tag} p={p}: reducible {reducible:?}, isomorphic {:?}, shifted {:?}",
                rep.unexpected_isomorphisms, rep.shifted_pairs
            ));
        }
        detail.push(format!("{tag}/{p}: {} spaces, {} pairs, 5 shifts", rep.weight_spaces.len(), rep.pairs_compared));
    }
    Ok(detail.join("; "))
}

fn multiplicity_transfer() -> Outcome {
    let mut detail = Vec::new();
    for (tag, p) in [(TypeTag::A1, 3), (TypeTag::A1, 5), (TypeTag::A2, 2)] {
        let alg = algebra(tag, p, 1);
        let table = SimpleCharacters::new(&VermaEngine::for_algebra(&alg).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let mut rows = 0;
        for lambda in restricted_weights(alg.datum(), p, 1) {
            let rep = compare_multiplicities(&alg, &table, &lambda, SEED).map_err(|e| e.to_string())?;
            if let Some(bad) = rep.rows.iter().find(|r| !r.agree) {
                return Err(format!("{tag} p={p} lambda={lambda} mu={}: {} vs {}", bad.mu, bad.by_character, bad.by_torus_algebra));
            }
            rows += rep.rows.len();
        }
        if tag == TypeTag::A1 && p == 3 && rows != 9 {
            return Err(format!("A1 p=3 compared {rows} pairs, expected 9"));
        }
        detail.push(format!("{tag}/{p}: {rows} (lambda, mu)"));
    }
    Ok(format!("100% agreement; {}", detail.join(", ")))
}

fn verma_module_over_dist_g1(engine: &std::sync::Arc<VermaEngine>, a: i64) -> Result<MatrixModule, String> {
    let d = engine.datum();
    let verma = baby_verma(engine, &Weight::new(&[a]));
    let labels = vec![PbwMonomial::identity(d), PbwMonomial::negative(d, 0, 1), PbwMonomial::positive(d, 0, 1), PbwMonomial::cartan_binomial(d, 0, 1)];
    let gens = labels.iter().map(|u| verma.action(u)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    MatrixModule::new(engine.field(), 1, labels, gens).map_err(|e| e.to_string())
}

fn sl2_anchors() -> Outcome {
    for p in [2u32, 3, 5, 7] {
        let engine = VermaEngine::for_algebra(&algebra(TypeTag::A1, p, 1)).map_err(|e| e.to_string())?;
        for a in 0..p as i64 {
            let lambda = Weight::new(&[a]);
            let dim = simple_module(&engine, &lambda).map_err(|e| e.to_string())?.dim() as i64;
            if dim != a + 1 {
                return Err(format!("p={p}: dim L({a}) = {dim}"));
            }
            let by_char: usize = verma_multiplicities_by_character(&engine, &lambda).map_err(|e| e.to_string())?.values().sum();
            let by_chop: usize = chop(&verma_module_over_dist_g1(&engine, a)?, SEED)
                .map_err(|e| e.to_string())?
                .factors
                .iter()
                .map(|f| f.multiplicity)
                .sum();
            let want = if a == p as i64 - 1 { 1 } else { 2 };
            if by_char != want || by_chop != want {
                return Err(format!("p={p}: Z({a}) has {by_char} factors by character, {by_chop} by meataxe, expected {want}"));
            }
        }
    }
    Ok("p in {2,3,5,7}: dim L(a) = a+1, Z(p-1) simple, Z(a) two factors".into())
}

fn generation() -> Outcome {
    let mut detail = Vec::new();
    for (p, r) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (5, 2)] {
        let rep = check_layer_generation(&algebra(TypeTag::A1, p, r)).map_err(|e| e.to_string())?;
        if !rep.passed {
            return Err(format!("p={p} r={r}: closure {} of {}, without {:?}", rep.closure_dimension, rep.full_dimension, rep.without));
        }
        detail.push(format!("{p}/{r}:{}", rep.full_dimension));
    }
    Ok(format!("full closure, every drop breaks it ({})", detail.join(" ")))
}

fn determinism() -> Outcome {
    let cache = std::env::temp_dir().join(format!("hyperalg-acceptance-{}", std::process::id()));
    let run = |cmd: &str, tag: TypeTag, p: u32, lambda: Option<Weight>| -> Result<String, String> {
        let mut cfg = RunConfig::new(cmd, tag, p, 1);
        cfg.lambda = lambda;
        cfg.cache_dir = Some(cache.clone());
        let json = match cmd {
            "verify" => suite::verify(&cfg).and_then(|r| r.to_json()),
            "multiplicity" => suite::multiplicity(&cfg).and_then(|r| r.to_json()),
            "simples" => suite::simples(&cfg).and_then(|r| r.to_json()),
            "gens" => suite::gens(&cfg, &[hyperalg::generators::Family::PairsOfMonomials], 1000).and_then(|r| r.to_json()),
            "cache inspect" => suite::cache_inspect(&cfg).and_then(|r| r.to_json()),
            _ => unreachable!(),
        };
        json.map_err(|e| e.to_string())
    };
    let mut compared = 0;
    for (tag, p, lambda) in [(TypeTag::A1, 3, Weight::new(&[0])), (TypeTag::A2, 2, Weight::new(&[1, 0]))] {
        for cmd in ["verify", "multiplicity", "simples", "gens", "cache inspect"] {
            let a = run(cmd, tag, p, Some(lambda))?;
            let b = run(cmd, tag, p, Some(lambda))?;
            if a != b {
                return Err(format!("{cmd} {tag} p={p}: reports differ"));
            }
            compared += 1;
        }
    }
    let _ = std::fs::remove_dir_all(&cache);
    Ok(format!("{compared} report pairs byte-identical"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("dimension formula", Duration::from_secs(80), dimension_formula),
        ("ideal J and augmentation", Duration::from_secs(120), ideal_and_augmentation),
        ("Kostant closure truncation", Duration::from_secs(120), kostant_closure),
        ("(non)commutativity", Duration::from_secs(5), commutativity),
        ("classification of simples", Duration::from_secs(300), classification),
        ("multiplicity transfer", Duration::from_secs(600), multiplicity_transfer),
        ("SL2 sanity anchors", Duration::from_secs(5), sl2_anchors),
        ("generation by divided-power layers", Duration::from_secs(60), generation),
        ("determinism", Duration::from_secs(300), determinism),
    ];
    let mut failed = 0;
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; exceeded the {limit:?} limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {} ({name}) [{:.2?} / {:?}]: {detail}",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            elapsed,
            limit
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
