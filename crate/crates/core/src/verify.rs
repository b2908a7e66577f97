//! Brute-force verification harness.
//!
//! Each suite sweeps pairs of flags of one lattice (all pairs when their
//! number fits the pair budget, a seeded uniform sample otherwise) and counts
//! passes and failures per named check. Failures are recorded with a
//! replayable counterexample rather than aborting the sweep.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::family::{fmt_subset, SetFamily};
use crate::flags::{
    enumerate_flags, enumerate_flags_within, gallery_distance_bfs, jordan_holder,
    shortest_gallery_flags, Flag, FlagError, DEFAULT_FLAG_BUDGET,
};
use crate::generators::{GenError, GeneratorSpec, LatticeFile};
use crate::hull::{base_step, hull_as_preantimatroid, level_recursion, mconv_fixpoint, phi, HullResult};
use crate::lattice::Lattice;

pub const DEFAULT_PAIR_BUDGET: usize = 10_000;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub pair_budget: usize,
    pub flag_budget: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            pair_budget: DEFAULT_PAIR_BUDGET,
            flag_budget: DEFAULT_FLAG_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("lattice is not semimodular")]
    NotSemimodular,
    #[error("lattice is not modular")]
    NotModularLattice,
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error(transparent)]
    Generator(#[from] GenError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Hull image is a pre-antimatroid; hull flags are the shortest-gallery flags.
    Main,
    /// Inversion number equals gallery distance.
    Distance,
    /// Hull equals the generated sublattice, which is distributive.
    Modular,
    /// Base-step decomposition, join-closedness, fixpoint agreement, rank via `φ`.
    Lemmas,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Main, Suite::Distance, Suite::Modular, Suite::Lemmas];

    pub fn check_names(self) -> &'static [&'static str] {
        match self {
            Suite::Main => &[
                "preantimatroid_image",
                "hull_flags_eq_shortest_gallery_flags",
                "gallery_union_image_eq_kstar",
                "kstar_axioms",
            ],
            Suite::Distance => &["inversions_eq_gallery_distance", "sigma_swap_is_inverse"],
            Suite::Modular => &["hull_eq_generated_sublattice", "sublattice_distributive"],
            Suite::Lemmas => &[
                "base_step_decomposition",
                "hull_join_closed",
                "fixpoint_eq_recursive",
                "levels_monotone",
                "rank_eq_n_minus_phi",
                "phi_injective",
                "phi_join_eq_intersection",
            ],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Main => "main",
            Suite::Distance => "distance",
            Suite::Modular => "modular",
            Suite::Lemmas => "lemmas",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lattice: LatticeFile,
    pub flag_c: Flag,
    pub flag_d: Flag,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub first_counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub lattice_id: String,
    pub suite: Suite,
    pub flag_count: usize,
    pub flag_pair_count: usize,
    pub exhaustive: bool,
    pub checks: Vec<CheckResult>,
    /// Not serialised, so reports stay byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.fail).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Unordered pairs `i <= j` of `flag_count` flags: all of them when they fit
/// `budget`, otherwise `budget` pairs drawn uniformly without replacement.
/// Returned in ascending order.
pub fn select_pairs(flag_count: usize, budget: usize, seed: u64) -> (Vec<(usize, usize)>, bool) {
    let total = flag_count * (flag_count + 1) / 2;
    if total <= budget {
        let all = (0..flag_count)
            .flat_map(|i| (i..flag_count).map(move |j| (i, j)))
            .collect();
        return (all, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = rand::seq::index::sample(&mut rng, total, budget).into_vec();
    picks.sort_unstable();
    // unrank row by row: row i holds the pairs (i, i..flag_count)
    let mut pairs = Vec::with_capacity(budget);
    let (mut row, mut row_start) = (0usize, 0usize);
    for t in picks {
        while t >= row_start + (flag_count - row) {
            row_start += flag_count - row;
            row += 1;
        }
        pairs.push((row, row + (t - row_start)));
    }
    (pairs, false)
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn flag_set(lattice: &Lattice, flags: &[&Flag]) -> FixedBitSet {
    lattice.set_of(flags.iter().flat_map(|f| f.elems().iter().copied()))
}

fn fmt_set(set: &FixedBitSet) -> String {
    let ids: Vec<String> = set.ones().map(|p| p.to_string()).collect();
    format!("{{{}}}", ids.join(","))
}

fn run_suite(
    suite: Suite,
    lattice: &Lattice,
    lattice_id: &str,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    if !lattice.is_semimodular() {
        return Err(VerifyError::NotSemimodular);
    }
    if suite == Suite::Modular && !lattice.is_modular_lattice() {
        return Err(VerifyError::NotModularLattice);
    }
    let flags = enumerate_flags(lattice, config.flag_budget)?;
    let (pairs, exhaustive) = select_pairs(flags.len(), config.pair_budget, config.seed);

    let outcomes: Vec<Vec<Outcome>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (c, d) = (&flags[i], &flags[j]);
            match suite {
                Suite::Main => main_checks(lattice, c, d, config),
                Suite::Distance => distance_checks(lattice, c, d, config),
                Suite::Modular => modular_checks(lattice, c, d),
                Suite::Lemmas => lemma_checks(lattice, c, d),
            }
        })
        .collect();

    let names = suite.check_names();
    let mut checks: Vec<CheckResult> = names
        .iter()
        .map(|&name| CheckResult {
            name,
            pass: 0,
            fail: 0,
            first_counterexample: None,
        })
        .collect();
    for (&(i, j), row) in pairs.iter().zip(&outcomes) {
        debug_assert_eq!(row.len(), names.len());
        for (check, outcome) in checks.iter_mut().zip(row) {
            match outcome {
                Ok(()) => check.pass += 1,
                Err(detail) => {
                    check.fail += 1;
                    check.first_counterexample.get_or_insert_with(|| Counterexample {
                        lattice: LatticeFile::from_lattice(lattice),
                        flag_c: flags[i].clone(),
                        flag_d: flags[j].clone(),
                        detail: detail.clone(),
                    });
                }
            }
        }
    }
    Ok(VerificationReport {
        lattice_id: lattice_id.to_string(),
        suite,
        flag_count: flags.len(),
        flag_pair_count: pairs.len(),
        exhaustive,
        checks,
        wall_time: started.elapsed(),
    })
}

/// The hull's image is a pre-antimatroid `K`, its flags are exactly the flags
/// on shortest galleries, and the gallery union maps onto `K*`.
pub fn verify_theorem_main(
    lattice: &Lattice,
    lattice_id: &str,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::Main, lattice, lattice_id, config)
}

/// Inversion number of `σ_{C,D}` equals the breadth-first gallery distance.
pub fn verify_theorem_distance(
    lattice: &Lattice,
    lattice_id: &str,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::Distance, lattice, lattice_id, config)
}

/// On modular lattices the hull is the sublattice generated by the two flags,
/// and that sublattice is distributive.
pub fn verify_theorem_modular(
    lattice: &Lattice,
    lattice_id: &str,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::Modular, lattice, lattice_id, config)
}

pub fn verify_lemmas(
    lattice: &Lattice,
    lattice_id: &str,
    config: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::Lemmas, lattice, lattice_id, config)
}

fn hull_and_family(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<(HullResult, SetFamily), String> {
    let hull = level_recursion(lattice, c, d).map_err(|e| format!("hull of ({c}) / ({d}): {e}"))?;
    let family = hull_as_preantimatroid(lattice, &hull).map_err(|e| format!("({c}) / ({d}): {e}"))?;
    Ok((hull, family))
}

fn main_checks(lattice: &Lattice, c: &Flag, d: &Flag, config: &VerifyConfig) -> Vec<Outcome> {
    let image = hull_and_family(lattice, c, d)
        .and_then(|cd| hull_and_family(lattice, d, c).map(|_| cd));
    let (hull, family) = match image {
        Ok(found) => found,
        Err(e) => return vec![Err(e.clone()), Err(e.clone()), Err(e.clone()), Err(e)],
    };

    let galleries = shortest_gallery_flags(lattice, c, d, config.flag_budget);
    let hull_flags = enumerate_flags_within(lattice, config.flag_budget, |p| hull.contains(p));
    let flags_match = match (&galleries, &hull_flags) {
        (Ok(g), Ok(h)) => ensure(g.flags == *h, || {
            format!(
                "{} flags in the hull, {} on shortest galleries (distance {})",
                h.len(),
                g.flags.len(),
                g.distance
            )
        }),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    };

    let kstar = family.extract_antimatroid();
    let union_matches = match (&galleries, &kstar) {
        (Ok(g), Ok(kstar)) => {
            let union = flag_set(lattice, &g.flags.iter().collect::<Vec<_>>());
            let image: Result<Vec<u64>, String> = union
                .ones()
                .map(|u| phi(lattice, &hull, u).map(|m| family.full() ^ m).map_err(|e| e.to_string()))
                .collect();
            image.and_then(|sets| {
                let image = SetFamily::new(family.ground(), sets).map_err(|e| e.to_string())?;
                ensure(image == *kstar, || format!("gallery union image {image}, K* {kstar}"))
            })
        }
        (Err(e), _) => Err(e.to_string()),
        (_, Err(e)) => Err(e.to_string()),
    };

    let kstar_ok = match &kstar {
        Ok(kstar) => ensure(kstar.is_antimatroid(), || format!("K* {kstar} is not an antimatroid"))
            .and_then(|_| ensure(kstar.is_subfamily_of(&family), || "K* is not inside K".into()))
            .and_then(|_| {
                ensure(!family.is_antimatroid() || *kstar == family, || {
                    format!("K {family} is an antimatroid but K* {kstar} differs")
                })
            }),
        Err(e) => Err(e.to_string()),
    };

    vec![Ok(()), flags_match, union_matches, kstar_ok]
}

fn distance_checks(lattice: &Lattice, c: &Flag, d: &Flag, config: &VerifyConfig) -> Vec<Outcome> {
    let (cd, dc) = match (jordan_holder(lattice, c, d), jordan_holder(lattice, d, c)) {
        (Ok(cd), Ok(dc)) => (cd, dc),
        (Err(e), _) | (_, Err(e)) => return vec![Err(e.to_string()), Err(e.to_string())],
    };
    let distance = match gallery_distance_bfs(lattice, c, d, config.flag_budget) {
        Ok(bfs) => ensure(bfs == cd.inversions(), || {
            format!("inversion number of {cd} is {}, gallery distance {bfs}", cd.inversions())
        }),
        Err(e) => Err(e.to_string()),
    };
    let symmetric = ensure(cd.inverse() == dc, || format!("sigma_CD {cd}, sigma_DC {dc}"));
    vec![distance, symmetric]
}

fn modular_checks(lattice: &Lattice, c: &Flag, d: &Flag) -> Vec<Outcome> {
    let generated = lattice.sublattice_closure(&flag_set(lattice, &[c, d]));
    let hull = match level_recursion(lattice, c, d) {
        Ok(hull) => ensure(hull.members == generated, || {
            format!("hull {} vs generated {}", fmt_set(&hull.members), fmt_set(&generated))
        }),
        Err(e) => Err(e.to_string()),
    };
    let distributive = match lattice.distributivity_violation(&generated) {
        None => Ok(()),
        Some((x, y, z)) => Err(format!("x={x} y={y} z={z} violate distributivity")),
    };
    vec![hull, distributive]
}

fn lemma_checks(lattice: &Lattice, c: &Flag, d: &Flag) -> Vec<Outcome> {
    let names = Suite::Lemmas.check_names().len();
    let hull = match level_recursion(lattice, c, d) {
        Ok(hull) => hull,
        Err(e) => return vec![Err(e.to_string()); names],
    };
    let seed = flag_set(lattice, &[c, d]);
    let fixpoint = mconv_fixpoint(lattice, &seed);

    let base = match base_step(lattice, c, d) {
        Ok(None) => Ok(()),
        Ok(Some(step)) => ensure(step.k + 1 == hull.sigma.apply(1), || {
            format!("k = {} but sigma(1) = {}", step.k, hull.sigma.apply(1))
        })
        .and_then(|_| {
            ensure(step.union() == fixpoint, || {
                format!(
                    "upper hull {} with delta {} vs hull {}",
                    fmt_set(&step.upper_hull),
                    fmt_set(&step.delta),
                    fmt_set(&fixpoint)
                )
            })
        }),
        Err(e) => Err(e.to_string()),
    };

    let join_closed = match lattice.join_closure_violation(&hull.members) {
        None => Ok(()),
        Some((u, v)) => Err(format!("{u} ∨ {v} = {} not in hull", lattice.join(u, v))),
    };

    let agree = ensure(fixpoint == hull.members, || {
        format!("fixpoint {} vs recursion {}", fmt_set(&fixpoint), fmt_set(&hull.members))
    })
    .and_then(|_| match level_recursion(lattice, d, c) {
        Ok(swapped) => ensure(swapped.members == fixpoint, || "recursion from C disagrees".into()),
        Err(e) => Err(e.to_string()),
    });

    let monotone = ensure(
        hull.levels.windows(2).all(|w| w[1].is_subset(&w[0]))
            && hull.levels.first().is_none_or(|m1| *m1 == hull.members)
            && seed.is_subset(&hull.members),
        || "levels are not nested up to M_1 ⊇ C ∪ D".into(),
    );

    let n = hull.rank();
    let images: Result<Vec<(usize, u64)>, String> = hull
        .members
        .ones()
        .map(|u| phi(lattice, &hull, u).map(|m| (u, m)).map_err(|e| e.to_string()))
        .collect();
    let (rank, injective, joins) = match images {
        Err(e) => (Err(e.clone()), Err(e.clone()), Err(e)),
        Ok(images) => {
            let rank = images
                .iter()
                .find(|&&(u, m)| lattice.rank(u) + m.count_ones() as usize != n)
                .map_or(Ok(()), |&(u, m)| {
                    Err(format!("r({u}) = {} but φ({u}) = {}", lattice.rank(u), fmt_subset(m)))
                });
            let distinct: BTreeSet<u64> = images.iter().map(|&(_, m)| m).collect();
            let injective = ensure(distinct.len() == images.len(), || "φ is not injective".into());
            let lookup = |u: usize| images.iter().find(|&&(v, _)| v == u).map(|&(_, m)| m);
            let joins = images
                .iter()
                .flat_map(|&(u, mu)| images.iter().map(move |&(v, mv)| (u, mu, v, mv)))
                .find_map(|(u, mu, v, mv)| {
                    let w = lattice.join(u, v);
                    match lookup(w) {
                        Some(mw) if mw == mu & mv => None,
                        Some(mw) => Some(format!(
                            "φ({u} ∨ {v}) = {} but φ({u}) ∩ φ({v}) = {}",
                            fmt_subset(mw),
                            fmt_subset(mu & mv)
                        )),
                        None => Some(format!("{u} ∨ {v} = {w} not in hull")),
                    }
                })
                .map_or(Ok(()), Err);
            (rank, injective, joins)
        }
    };

    vec![base, join_closed, agree, monotone, rank, injective, joins]
}

/// One corpus lattice and an optional pair budget overriding the global one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub spec: GeneratorSpec,
    pub pair_budget: Option<usize>,
}

impl CorpusEntry {
    pub fn new(spec: GeneratorSpec) -> Self {
        CorpusEntry { spec, pair_budget: None }
    }

    pub fn with_budget(spec: GeneratorSpec, budget: usize) -> Self {
        CorpusEntry {
            spec,
            pair_budget: Some(budget),
        }
    }
}

impl fmt::Display for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pair_budget {
            Some(budget) => write!(f, "{}@{budget}", self.spec),
            None => write!(f, "{}", self.spec),
        }
    }
}

impl std::str::FromStr for CorpusEntry {
    type Err = GenError;

    /// `spec` or `spec@budget`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.rsplit_once('@') {
            Some((spec, budget)) => {
                let budget = budget.parse().map_err(|_| GenError::BadSpec(s.to_string()))?;
                Ok(CorpusEntry::with_budget(spec.parse()?, budget))
            }
            None => Ok(CorpusEntry::new(s.parse()?)),
        }
    }
}

/// Seeded antimatroid lattices used throughout the test corpus.
pub fn antimatroid_corpus() -> Vec<GeneratorSpec> {
    use crate::generators::AntimatroidKind::{Poset, Shelling};
    [
        (Poset, 4, 1),
        (Poset, 5, 2),
        (Poset, 5, 3),
        (Poset, 6, 4),
        (Poset, 6, 5),
        (Shelling, 4, 6),
        (Shelling, 5, 7),
        (Shelling, 5, 8),
        (Shelling, 6, 9),
        (Shelling, 6, 10),
    ]
    .into_iter()
    .map(|(kind, ground, seed)| GeneratorSpec::Antimatroid { kind, ground, seed })
    .collect()
}

/// The shipped corpus: Boolean lattices, partition lattices, binary subspace
/// lattices, ten seeded antimatroids, a chain, a grid, a non-semimodular
/// pentagon fixture, and a sampled `Π_5`.
pub fn default_corpus() -> Vec<CorpusEntry> {
    let mut specs: Vec<GeneratorSpec> = Vec::new();
    specs.extend((1..=4).map(GeneratorSpec::Boolean));
    specs.extend((2..=4).map(GeneratorSpec::Partition));
    specs.extend((1..=3).map(GeneratorSpec::BinarySubspace));
    specs.extend(antimatroid_corpus());
    specs.push(GeneratorSpec::Chain(3));
    specs.push(GeneratorSpec::Product(2));
    let mut corpus: Vec<CorpusEntry> = specs.into_iter().map(CorpusEntry::new).collect();
    corpus.push(CorpusEntry::with_budget(GeneratorSpec::Partition(5), 500));
    corpus
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeSummary {
    pub id: String,
    pub elements: usize,
    pub rank: usize,
    pub semimodular: bool,
    pub modular: bool,
    /// Suites not run, with the reason.
    pub skipped: Vec<String>,
    pub reports: Vec<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub seed: u64,
    pub pair_budget: usize,
    pub flag_budget: usize,
    pub lattices: Vec<LatticeSummary>,
    pub total_checks: usize,
    pub total_failures: usize,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.total_failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Fixed-width table: one line per check, plus skip lines.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "{:<28} {:<9} {:<38} {:>7} {:>6}\n",
            "lattice", "suite", "check", "pass", "fail"
        );
        for lattice in &self.lattices {
            for skip in &lattice.skipped {
                out.push_str(&format!("{:<28} {skip}\n", lattice.id));
            }
            for report in &lattice.reports {
                for check in &report.checks {
                    out.push_str(&format!(
                        "{:<28} {:<9} {:<38} {:>7} {:>6}\n",
                        lattice.id, report.suite.to_string(), check.name, check.pass, check.fail
                    ));
                }
            }
        }
        out.push_str(&format!(
            "total: {} checks, {} failures\n",
            self.total_checks, self.total_failures
        ));
        out
    }

    pub fn wall_time(&self) -> Duration {
        self.lattices
            .iter()
            .flat_map(|l| &l.reports)
            .map(|r| r.wall_time)
            .sum()
    }
}

/// Runs every applicable suite on one lattice.
pub fn verify_lattice(lattice: &Lattice, id: &str, config: &VerifyConfig) -> Result<LatticeSummary, VerifyError> {
    let semimodular = lattice.is_semimodular();
    let modular = lattice.is_modular_lattice();
    let mut summary = LatticeSummary {
        id: id.to_string(),
        elements: lattice.element_count(),
        rank: lattice.rank_of_lattice(),
        semimodular,
        modular,
        skipped: Vec::new(),
        reports: Vec::new(),
    };
    for suite in Suite::ALL {
        if !semimodular {
            summary.skipped.push(format!("{suite}: skipped: not semimodular"));
            continue;
        }
        if suite == Suite::Modular && !modular {
            summary.skipped.push(format!("{suite}: skipped: not modular"));
            continue;
        }
        summary.reports.push(run_suite(suite, lattice, id, config)?);
    }
    Ok(summary)
}

pub fn verify_corpus(corpus: &[CorpusEntry], config: &VerifyConfig) -> Result<CorpusReport, VerifyError> {
    let mut lattices = Vec::with_capacity(corpus.len());
    for entry in corpus {
        let lattice = entry.spec.generate()?;
        let config = VerifyConfig {
            pair_budget: entry.pair_budget.unwrap_or(config.pair_budget),
            ..*config
        };
        lattices.push(verify_lattice(&lattice, &entry.spec.to_string(), &config)?);
    }
    let checks = lattices.iter().flat_map(|l| &l.reports).flat_map(|r| &r.checks);
    let (total_checks, total_failures) =
        checks.fold((0, 0), |(t, f), c| (t + c.pass + c.fail, f + c.fail));
    Ok(CorpusReport {
        seed: config.seed,
        pair_budget: config.pair_budget,
        flag_budget: config.flag_budget,
        lattices,
        total_checks,
        total_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boolean, chain, partition};

    #[test]
    fn exhaustive_pairs_include_the_diagonal() {
        let (pairs, exhaustive) = select_pairs(3, 100, 0);
        assert!(exhaustive);
        assert_eq!(pairs, vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn sampled_pairs_are_distinct_valid_and_seeded() {
        let (pairs, exhaustive) = select_pairs(180, 500, 42);
        assert!(!exhaustive);
        assert_eq!(pairs.len(), 500);
        assert!(pairs.iter().all(|&(i, j)| i <= j && j < 180));
        assert_eq!(pairs.iter().collect::<BTreeSet<_>>().len(), 500);
        assert_eq!(select_pairs(180, 500, 42).0, pairs);
        assert_ne!(select_pairs(180, 500, 43).0, pairs);
    }

    #[test]
    fn boolean_three_sweep() {
        let l = boolean(3).unwrap();
        let report = verify_theorem_main(&l, "boolean:3", &VerifyConfig::default()).unwrap();
        assert_eq!(report.flag_count, 6);
        assert_eq!(report.flag_pair_count, 21);
        assert!(report.exhaustive);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn chain_is_trivially_distributive() {
        let l = chain(3).unwrap();
        let report = verify_theorem_modular(&l, "chain:3", &VerifyConfig::default()).unwrap();
        assert_eq!(report.flag_pair_count, 1);
        assert!(report.passed());
    }

    #[test]
    fn modular_suite_refuses_partition_four() {
        let l = partition(4).unwrap();
        assert!(matches!(
            verify_theorem_modular(&l, "partition:4", &VerifyConfig::default()),
            Err(VerifyError::NotModularLattice)
        ));
    }

    #[test]
    fn non_semimodular_lattice_is_skipped() {
        let l = Lattice::new(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap();
        let summary = verify_lattice(&l, "pentagon", &VerifyConfig::default()).unwrap();
        assert!(summary.reports.is_empty());
        assert_eq!(summary.skipped.len(), 4);
        assert!(summary.skipped[0].contains("skipped: not semimodular"));
        assert!(matches!(
            verify_lemmas(&l, "pentagon", &VerifyConfig::default()),
            Err(VerifyError::NotSemimodular)
        ));
    }

    #[test]
    fn corpus_entries_parse() {
        let entry: CorpusEntry = "partition:5@500".parse().unwrap();
        assert_eq!(entry, CorpusEntry::with_budget(GeneratorSpec::Partition(5), 500));
        assert_eq!(entry.to_string(), "partition:5@500");
        assert!("partition:5@x".parse::<CorpusEntry>().is_err());
    }
}
