//! Verification suites: exhaustive formula checks, the cascade property
//! suite, oracle cross-checks and index additivity. The CLI's `verify`
//! subcommand is a thin wrapper around [`run`].

use serde::Serialize;

use crate::cascade::cascade;
use crate::chevalley::{
    additivity_check, build_chevalley, index_oracle, SelectionKind, SubalgebraSelection,
};
use crate::error::Error;
use crate::index::IndexContext;
use crate::rootsys::{RootSystem, SimpleType, Subset};

/// Runtime configuration shared by `verify` and the table emitters.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub types: Vec<SimpleType>,
    pub max_enum_rank: usize,
    pub oracle_rank_cap: usize,
    /// (type, number of randomly sampled subsets) spot checks for the oracle.
    pub spot_checks: Vec<(SimpleType, usize)>,
    pub trials: u32,
    pub seed: u64,
}

impl RunConfig {
    /// All simple types of rank ≤ 8 plus the exceptional ones.
    pub fn default_types() -> Vec<SimpleType> {
        parse_type_ranges("A1..A8,B2..B8,C2..C8,D4..D8,E6,E7,E8,F4,G2")
            .expect("static type list")
    }

    pub fn default_spot_checks() -> Vec<(SimpleType, usize)> {
        vec![
            (SimpleType::parse("F4").unwrap(), 10),
            (SimpleType::parse("A5").unwrap(), 10),
            (SimpleType::parse("D5").unwrap(), 10),
        ]
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            types: RunConfig::default_types(),
            max_enum_rank: 8,
            oracle_rank_cap: 4,
            spot_checks: RunConfig::default_spot_checks(),
            trials: 5,
            seed: 1,
        }
    }
}

/// Parses "A1..A10,B2..B8,E6,G2" into a type list.
pub fn parse_type_ranges(spec: &str) -> Result<Vec<SimpleType>, Error> {
    let mut out = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = item.split_once("..") {
            let start = SimpleType::parse(lo)?;
            let end_rank: usize = match SimpleType::parse(hi) {
                Ok(t) if t.family == start.family => t.rank,
                Ok(_) => {
                    return Err(Error::Usage(format!("range {item:?} mixes families")))
                }
                Err(_) => hi
                    .trim()
                    .parse()
                    .map_err(|_| Error::Usage(format!("bad range end in {item:?}")))?,
            };
            if end_rank < start.rank {
                return Err(Error::Usage(format!("empty range {item:?}")));
            }
            for r in start.rank..=end_rank {
                out.push(SimpleType::new(start.family, r)?);
            }
        } else {
            out.push(SimpleType::parse(item)?);
        }
    }
    Ok(out)
}

/// Test-fixture corruption of the checker, reachable from a hidden CLI flag.
/// `CorruptSum` shifts χ(p_S) by one so every suite must flag it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sabotage {
    None,
    CorruptSum,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult { name: name.into(), checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub config: RunConfig,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
    /// Set when a suite hit an internal-consistency error rather than a
    /// counterexample.
    pub internal_error: Option<String>,
}

/// Runs all suites. Never returns `Err` for counterexamples (those are
/// reported in the result); `Err` means an internal-consistency failure.
pub fn run(config: &RunConfig, sabotage: Sabotage) -> Result<VerifyReport, Error> {
    let offset = if sabotage == Sabotage::CorruptSum { 1usize } else { 0 };
    let mut suites = Vec::new();

    suites.push(formula_suite(config, offset)?);
    suites.push(lemma_suite(config)?);
    suites.push(oracle_suite(config, offset)?);
    suites.push(additivity_suite(config)?);

    let passed = suites.iter().all(|s| s.passed());
    Ok(VerifyReport { config: config.clone(), suites, passed, internal_error: None })
}

/// Exhaustive bound and classification checks over every S ⊆ Π.
fn formula_suite(config: &RunConfig, offset: usize) -> Result<SuiteResult, Error> {
    let mut suite = SuiteResult::new("formulas");
    for &t in &config.types {
        if t.rank > config.max_enum_rank {
            continue;
        }
        let rs = RootSystem::build(t)?;
        let ctx = IndexContext::new(&rs);
        for mask in 0..(1u64 << rs.rank) {
            let s = Subset(mask as u32);
            let report = ctx.index_report(s)?;
            let spec = ctx.parabolic_spec(s);
            let sum = report.sum + offset;
            suite.checks += 1;

            if sum < rs.rank {
                suite.failures.push(format!(
                    "{t}: S={:?}: sum {sum} < rank {}",
                    s.indices_1based(),
                    rs.rank
                ));
            }
            if sum > spec.dim_levi {
                suite.failures.push(format!(
                    "{t}: S={:?}: sum {sum} exceeds dim l = {}",
                    s.indices_1based(),
                    spec.dim_levi
                ));
            }
            let equality = sum == rs.rank;
            if equality != (report.cond_i && report.cond_ii) {
                suite.failures.push(format!(
                    "{t}: S={:?}: equality={equality} but (i)={} (ii)={}",
                    s.indices_1based(),
                    report.cond_i,
                    report.cond_ii
                ));
            }
            if spec.k_s_len < spec.k_ts_len {
                suite.failures.push(format!(
                    "{t}: S={:?}: ♯K(S) < ♯K(T_S)",
                    s.indices_1based()
                ));
            }
        }
    }
    Ok(suite)
}

/// Cascade structure: nesting, partition of R_S⁺, and Heisenberg sum rules.
fn lemma_suite(config: &RunConfig) -> Result<SuiteResult, Error> {
    let mut suite = SuiteResult::new("cascade-properties");
    for &t in &config.types {
        if t.rank > config.max_enum_rank {
            continue;
        }
        let rs = RootSystem::build(t)?;
        for mask in 0..(1u64 << rs.rank) {
            let s = Subset(mask as u32);
            let c = cascade(&rs, s);
            suite.checks += 1;
            let fail = |suite: &mut SuiteResult, msg: String| {
                suite.failures.push(format!("{t}: S={:?}: {msg}", s.indices_1based()));
            };

            // i) nesting or component-wise disjointness
            for (i, a) in c.elements.iter().enumerate() {
                for b in c.elements.iter().skip(i + 1) {
                    let nested = a.support.is_subset_of(b.support)
                        || b.support.is_subset_of(a.support);
                    if nested {
                        continue;
                    }
                    let comps = rs.connected_components(a.support.union(b.support));
                    if !(comps.contains(&a.support) && comps.contains(&b.support)) {
                        fail(&mut suite, "nesting property violated".into());
                    }
                }
            }

            // ii) Γ^K partition R_S⁺
            let pos = rs.positive_roots_supported_on(s);
            let total: usize = c.elements.iter().map(|e| e.gamma.len()).sum();
            if total != pos.len()
                || pos.iter().any(|r| {
                    c.elements.iter().filter(|e| e.gamma.contains(r)).count() != 1
                })
            {
                fail(&mut suite, "Γ^K do not partition R_S⁺".into());
            }

            // iii) and iv) sum rules
            for (i, a) in c.elements.iter().enumerate() {
                for (j, b) in c.elements.iter().enumerate() {
                    if j < i {
                        continue;
                    }
                    for x in &a.gamma {
                        for y in &b.gamma {
                            let sum = x.plus(y);
                            if !rs.is_root(&sum) {
                                continue;
                            }
                            if i == j {
                                if sum != a.eps {
                                    fail(&mut suite, "Heisenberg sum ≠ ε_K".into());
                                }
                            } else {
                                let ok = (a.support.is_subset_of(b.support)
                                    && b.gamma.contains(&sum))
                                    || (b.support.is_subset_of(a.support)
                                        && a.gamma.contains(&sum));
                                if !ok {
                                    fail(&mut suite, "cross-Γ sum escapes".into());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(suite)
}

fn spot_subsets(t: SimpleType, count: usize, seed: u64) -> Vec<Subset> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5_4a7);
    let full = (1u64 << t.rank) as u64;
    let mut out = Vec::new();
    while out.len() < count {
        let s = Subset(rng.gen_range(0..full) as u32);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Oracle equivalence: brute-force index equals the closed formulas.
fn oracle_suite(config: &RunConfig, offset: usize) -> Result<SuiteResult, Error> {
    let mut suite = SuiteResult::new("oracle-equivalence");
    let mut jobs: Vec<(SimpleType, Vec<Subset>)> = Vec::new();
    for &t in &config.types {
        if t.rank <= config.oracle_rank_cap {
            jobs.push((t, (0..(1u64 << t.rank)).map(|m| Subset(m as u32)).collect()));
        }
    }
    for &(t, count) in &config.spot_checks {
        jobs.push((t, spot_subsets(t, count, config.seed)));
    }

    for (t, subsets) in jobs {
        let rs = RootSystem::build(t)?;
        let ctx = IndexContext::new(&rs);
        let alg = build_chevalley(&rs)?;
        for s in subsets {
            let report = ctx.index_report(s)?;
            let p = SubalgebraSelection::new(&alg, SelectionKind::Parabolic, s)?;
            let u = SubalgebraSelection::new(&alg, SelectionKind::Nilradical, s)?;
            let chi_p = index_oracle(&p, config.trials, config.seed)?;
            let chi_u = index_oracle(&u, config.trials, config.seed)?;
            suite.checks += 1;
            if chi_p != report.chi_p + offset {
                suite.failures.push(format!(
                    "{t}: S={:?}: oracle χ(p)={chi_p}, formula {}",
                    s.indices_1based(),
                    report.chi_p + offset
                ));
            }
            if chi_u != report.chi_u {
                suite.failures.push(format!(
                    "{t}: S={:?}: oracle χ(u)={chi_u}, formula {}",
                    s.indices_1based(),
                    report.chi_u
                ));
            }
        }
    }
    Ok(suite)
}

/// g = p_S ⊕ u_S⁻ additivity on every equality subset in oracle range.
fn additivity_suite(config: &RunConfig) -> Result<SuiteResult, Error> {
    let mut suite = SuiteResult::new("index-additivity");
    let mut jobs: Vec<(SimpleType, Vec<Subset>)> = Vec::new();
    for &t in &config.types {
        if t.rank <= config.oracle_rank_cap {
            jobs.push((t, (0..(1u64 << t.rank)).map(|m| Subset(m as u32)).collect()));
        }
    }
    for &(t, count) in &config.spot_checks {
        jobs.push((t, spot_subsets(t, count, config.seed)));
    }

    for (t, subsets) in jobs {
        let rs = RootSystem::build(t)?;
        let ctx = IndexContext::new(&rs);
        let alg = build_chevalley(&rs)?;
        for s in subsets {
            let report = ctx.index_report(s)?;
            if !report.equality {
                continue;
            }
            suite.checks += 1;
            let diag = additivity_check(&alg, s, config.trials, config.seed)?;
            if !diag.additive || !diag.radicals_match {
                suite.failures.push(
                    serde_json::to_string(&diag).unwrap_or_else(|_| format!("{diag:?}")),
                );
            }
        }
    }
    Ok(suite)
}
