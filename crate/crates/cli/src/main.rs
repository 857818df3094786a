use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hyperalg::config::{parse_weight, Format, RunConfig, DEFAULT_SEED};
use hyperalg::generators::Family;
use hyperalg::module_theory::{ClassificationReport, MultiplicityReport};
use hyperalg::report::Report;
use hyperalg::root_system::{TypeTag, Weight};
use hyperalg::suite::{self, CacheBody, GensBody, SearchOutcome, VerifyBody, DEFAULT_SEARCH_BUDGET};
use hyperalg::Error;

#[derive(Parser)]
#[command(name = "hyperalg", version, about = "Torus-fixed hyperalgebras of Frobenius kernels over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks on Dist(G_r) and Dist(G_r)^T.
    Verify(Common),
    /// Baby Verma multiplicities by character solve and by the torus-fixed algebra.
    Multiplicity {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        weights: Weights,
    },
    /// Irreducibility and non-redundancy of the weight spaces of the restricted simples.
    Simples(Common),
    /// Generating sets of Dist(G_r)^T over Dist(T_r).
    Gens {
        #[command(flatten)]
        common: Common,
        /// Candidate family; repeat to search several. Defaults to the first three.
        #[arg(long, value_enum)]
        family: Vec<FamilyArg>,
        /// Maximum number of closures per family.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: usize,
    },
    /// Structure-constant cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Build(Common),
    Inspect(Common),
    Invalidate(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long = "type", value_name = "A1|A2")]
    type_tag: TypeTag,
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Overrides HYPERALG_CACHE_DIR.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Weights {
    /// Highest weight in fundamental coordinates, e.g. `1,0`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Restrict the rows to one weight.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    SingletonMonomials,
    PairsOfMonomials,
    Rank1Products,
    MonomialSubsets,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::SingletonMonomials => Family::SingletonMonomials,
            FamilyArg::PairsOfMonomials => Family::PairsOfMonomials,
            FamilyArg::Rank1Products => Family::Rank1Products,
            FamilyArg::MonomialSubsets => Family::MonomialSubsets,
        }
    }
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn config(name: &str, c: &Common) -> RunConfig {
    let mut cfg = RunConfig::new(name, c.type_tag, c.p, c.r);
    cfg.seed = c.seed;
    cfg.cache_dir = c.cache_dir.clone();
    cfg.output_path = c.out.clone();
    cfg.format = match c.format {
        FormatArg::Table => Format::Table,
        FormatArg::Json => Format::Json,
    };
    cfg
}

fn parse_opt(s: &Option<String>) -> hyperalg::Result<Option<Weight>> {
    s.as_deref().map(parse_weight).transpose()
}

fn emit<T: Serialize>(cfg: &RunConfig, rep: &Report<T>, table: impl Fn(&T) -> String) -> hyperalg::Result<bool> {
    let text = match cfg.format {
        Format::Json => rep.to_json()?,
        Format::Table => {
            let mut s = format!(
                "{} {} p={} r={} seed={}\nsign convention: {}\nroot order hash: {}\n\n",
                rep.command, rep.type_tag, rep.p, rep.r, rep.seed, rep.sign_convention, rep.root_order_hash
            );
            s.push_str(&table(&rep.body));
            let _ = writeln!(s, "\n{}", if rep.passed { "RESULT: PASS" } else { "RESULT: FAIL" });
            s
        }
    };
    match &cfg.output_path {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(rep.passed)
}

fn verify_table(b: &VerifyBody) -> String {
    let mut s = format!("algebra dimension {}, pairwise checks {}\n", b.algebra_dimension, b.pair_coverage);
    for c in &b.checks {
        let _ = writeln!(s, "{:<4}  {:<20} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.summary);
        if let Some(ce) = &c.counterexample {
            let _ = writeln!(s, "      counterexample: {ce}");
        }
    }
    if let Some(w) = &b.commutator {
        let _ = writeln!(s, "[{}, {}] has support {{{}}}", w.a, w.b, w.support.join(", "));
    }
    s
}

fn multiplicity_table(reps: &Vec<MultiplicityReport>) -> String {
    let mut s = String::new();
    for r in reps {
        let factors: Vec<String> = r.factors.iter().map(|(w, m)| format!("{w}:{m}")).collect();
        let _ = writeln!(s, "lambda = {} (dim {}), factors {{{}}}", r.lambda, r.verma_dim, factors.join(", "));
        let _ = writeln!(s, "  {:<10} {:>10} {:>10}  verdict", "mu", "character", "torus alg");
        for row in &r.rows {
            let verdict = if row.agree { "AGREE" } else { "DISAGREE" };
            let _ = writeln!(s, "  {:<10} {:>10} {:>10}  {verdict}", row.mu.to_string(), row.by_character, row.by_torus_algebra);
        }
    }
    s
}

fn simples_table(r: &ClassificationReport) -> String {
    let mut s = String::from("simple dimensions:\n");
    for (l, d) in &r.simple_dims {
        let _ = writeln!(s, "  L({l}) = {d}");
    }
    let irr = r.weight_spaces.iter().filter(|w| w.irreducible).count();
    let _ = writeln!(s, "weight spaces irreducible: {irr} of {}", r.weight_spaces.len());
    for w in r.weight_spaces.iter().filter(|w| !w.irreducible) {
        let _ = writeln!(s, "  REDUCIBLE L({})_{} (dim {})", w.lambda, w.mu, w.dim);
    }
    let _ = writeln!(
        s,
        "pairs compared: {}, needing an intertwiner search: {}, isomorphic: {}",
        r.pairs_compared,
        r.pairs_searched,
        r.unexpected_isomorphisms.len()
    );
    for u in &r.unexpected_isomorphisms {
        let _ = writeln!(s, "  {u}");
    }
    for p in &r.shifted_pairs {
        let _ = writeln!(
            s,
            "shift gamma = {}: L({})_{} vs shifted: {}",
            p.gamma,
            p.lambda,
            p.mu,
            if p.isomorphic { "isomorphic" } else { "NOT isomorphic" }
        );
    }
    s
}

fn gens_table(b: &GensBody) -> String {
    let l = &b.layer_generation;
    let mut s = format!(
        "layer generators {{{}}}: closure {} of {}{}\n",
        l.elements.join(", "),
        l.closure_dimension,
        l.full_dimension,
        if b.layer_generation_expected { "" } else { " (informational)" }
    );
    for (e, d) in &l.without {
        let _ = writeln!(s, "  without {e}: {d}");
    }
    for o in &b.searches {
        match o {
            SearchOutcome::Completed(g) => {
                let _ = writeln!(
                    s,
                    "{:?}: {} candidates, {} closures, minimal size {}, best closure {}",
                    g.family,
                    g.candidates.len(),
                    g.closures_computed,
                    g.minimal_found.map_or("none".to_string(), |m| m.to_string()),
                    g.best_closure_dimension
                );
                for w in &g.witnesses {
                    let _ = writeln!(s, "  {{{}}} trace {:?}", w.elements.join(", "), w.closure_dimension_trace);
                }
            }
            SearchOutcome::BudgetExceeded { family, budget, tried, best_closure_dimension } => {
                let _ = writeln!(
                    s,
                    "{family:?}: budget {budget} exhausted after {tried} closures, best closure {best_closure_dimension}"
                );
            }
        }
    }
    s
}

fn cache_table(b: &CacheBody) -> String {
    let mut s = format!("{}: {}\n", b.action, b.detail);
    if let Some(i) = &b.info {
        let _ = writeln!(s, "  {} ({} pairs, {} entries, complete: {})", i.path, i.pairs, i.triples, i.complete);
    }
    s
}

fn run(cli: Cli) -> hyperalg::Result<bool> {
    match cli.command {
        Command::Verify(c) => {
            let cfg = config("verify", &c);
            emit(&cfg, &suite::verify(&cfg)?, verify_table)
        }
        Command::Multiplicity { common, weights } => {
            let mut cfg = config("multiplicity", &common);
            cfg.lambda = parse_opt(&weights.lambda)?;
            cfg.mu = parse_opt(&weights.mu)?;
            emit(&cfg, &suite::multiplicity(&cfg)?, multiplicity_table)
        }
        Command::Simples(c) => {
            let cfg = config("simples", &c);
            emit(&cfg, &suite::simples(&cfg)?, simples_table)
        }
        Command::Gens { common, family, budget } => {
            let cfg = config("gens", &common);
            let families: Vec<Family> = if family.is_empty() {
                vec![Family::SingletonMonomials, Family::PairsOfMonomials, Family::Rank1Products]
            } else {
                family.into_iter().map(Family::from).collect()
            };
            emit(&cfg, &suite::gens(&cfg, &families, budget)?, gens_table)
        }
        Command::Cache { action } => {
            let (name, c) = match &action {
                CacheAction::Build(c) => ("cache build", c),
                CacheAction::Inspect(c) => ("cache inspect", c),
                CacheAction::Invalidate(c) => ("cache invalidate", c),
            };
            let cfg = config(name, c);
            let rep = match action {
                CacheAction::Build(_) => suite::cache_build(&cfg)?,
                CacheAction::Inspect(_) => suite::cache_inspect(&cfg)?,
                CacheAction::Invalidate(_) => suite::cache_invalidate(&cfg)?,
            };
            emit(&cfg, &rep, cache_table)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::OutOfEnvelope(_) | Error::NotPrime(_) | Error::UnsupportedType(_) | Error::InvalidArgument(_) => {
                    ExitCode::from(EXIT_USAGE)
                }
                _ => ExitCode::from(EXIT_FAILED),
            }
        }
    }
}
