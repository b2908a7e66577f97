//! Acceptance run: every criterion at zero tolerance, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use flaghull::cli::{cmd_verify, Format, VerifyArgs};
use flaghull::family::SetFamily;
use flaghull::generators::GeneratorSpec;
use flaghull::verify::{
    antimatroid_corpus, verify_lattice, CorpusEntry, LatticeSummary, Suite, VerifyConfig,
    DEFAULT_PAIR_BUDGET, DEFAULT_SEED,
};
use flaghull::DEFAULT_FLAG_BUDGET;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Tally {
    pass: usize,
    fail: usize,
    pairs: usize,
    time: Duration,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            pass: 0,
            fail: 0,
            pairs: 0,
            time: Duration::ZERO,
            notes: Vec::new(),
        }
    }
}

fn tally(summaries: &[&LatticeSummary], suite: Suite, checks: &[&str]) -> Tally {
    let mut t = Tally::new();
    for summary in summaries {
        let Some(report) = summary.reports.iter().find(|r| r.suite == suite) else {
            t.fail += 1;
            t.notes.push(format!("{}: {suite} suite did not run {:?}", summary.id, summary.skipped));
            continue;
        };
        t.pairs += report.flag_pair_count;
        t.time += report.wall_time;
        for name in checks {
            let check = report.check(name).expect("known check name");
            t.pass += check.pass;
            t.fail += check.fail;
            if let Some(cx) = &check.first_counterexample {
                t.notes.push(format!(
                    "{} {name}: C={} D={} {}",
                    summary.id, cx.flag_c, cx.flag_d, cx.detail
                ));
            }
        }
    }
    t
}

fn report(id: usize, what: &str, t: &Tally, limit: Option<Duration>) -> bool {
    let in_time = limit.is_none_or(|l| t.time < l);
    let ok = t.fail == 0 && t.pass > 0 && in_time;
    let timing = match limit {
        Some(l) => format!(", {:.1}s of {}s", t.time.as_secs_f64(), l.as_secs()),
        None => String::new(),
    };
    println!(
        "{} criterion {id}: {what} ({} checks over {} pairs, {} failures{timing})",
        if ok { "PASS" } else { "FAIL" },
        t.pass + t.fail,
        t.pairs,
        t.fail
    );
    for note in t.notes.iter().take(5) {
        println!("    {note}");
    }
    ok
}

/// Seeded union-closed families containing `∅` and the ground set.
fn random_families(count: usize, seed: u64) -> Vec<SetFamily> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let ground = rng.random_range(1..=6);
            let full = (1u64 << ground) - 1;
            let mut sets = vec![0, full];
            for _ in 0..rng.random_range(1..=12) {
                let s = rng.random_range(0..=full);
                let unions: Vec<u64> = sets.iter().map(|&t| t | s).collect();
                sets.push(s);
                sets.extend(unions);
            }
            SetFamily::new(ground, sets).expect("masks fit the ground set")
        })
        .collect()
}

fn main() -> ExitCode {
    let started = Instant::now();
    let exhaustive = VerifyConfig {
        pair_budget: usize::MAX,
        flag_budget: DEFAULT_FLAG_BUDGET,
        seed: DEFAULT_SEED,
    };

    let mut corpus: Vec<GeneratorSpec> = Vec::new();
    corpus.extend((1..=4).map(GeneratorSpec::Boolean));
    corpus.extend((2..=4).map(GeneratorSpec::Partition));
    corpus.extend((1..=3).map(GeneratorSpec::BinarySubspace));
    corpus.extend(antimatroid_corpus());

    let mut summaries = Vec::new();
    for spec in &corpus {
        let lattice = spec.generate().expect("corpus lattice generates");
        summaries.push(verify_lattice(&lattice, &spec.to_string(), &exhaustive).expect("suites run"));
    }
    let pi5 = {
        let spec = GeneratorSpec::Partition(5);
        let config = VerifyConfig {
            pair_budget: 500,
            ..exhaustive
        };
        verify_lattice(&spec.generate().unwrap(), &spec.to_string(), &config).expect("suites run")
    };

    let all: Vec<&LatticeSummary> = summaries.iter().collect();
    let with_pi5: Vec<&LatticeSummary> = summaries.iter().chain([&pi5]).collect();
    let modular_inputs: Vec<&LatticeSummary> = summaries
        .iter()
        .filter(|s| s.id.starts_with("boolean") || s.id.starts_with("binary_subspace"))
        .collect();

    let mut ok = true;

    ok &= report(
        1,
        "inversion number of sigma equals BFS gallery distance",
        &tally(&all, Suite::Distance, &["inversions_eq_gallery_distance"]),
        Some(Duration::from_secs(60)),
    );
    ok &= report(
        2,
        "recursive hull equals fixpoint hull",
        &tally(&all, Suite::Lemmas, &["fixpoint_eq_recursive"]),
        Some(Duration::from_secs(120)),
    );
    ok &= report(
        3,
        "hull image is a pre-antimatroid, order-isomorphic, rank-preserving",
        &tally(&all, Suite::Main, &["preantimatroid_image"]),
        None,
    );

    let mut c4 = tally(
        &with_pi5,
        Suite::Main,
        &["hull_flags_eq_shortest_gallery_flags", "gallery_union_image_eq_kstar"],
    );
    for s in &with_pi5 {
        let flags = s.reports.first().map_or(0, |r| r.flag_count);
        if flags > 200 {
            c4.fail += 1;
            c4.notes.push(format!("{} has {flags} flags, above 200", s.id));
        }
    }
    let pi5_main = pi5.reports.iter().find(|r| r.suite == Suite::Main);
    if pi5_main.is_none_or(|r| r.flag_pair_count != 500 || r.exhaustive) {
        c4.fail += 1;
        c4.notes.push("partition:5 was not sampled at 500 pairs".into());
    }
    ok &= report(
        4,
        "hull flags are the shortest-gallery flags; gallery union maps onto K*",
        &c4,
        None,
    );

    ok &= report(
        5,
        "rank(u) = n - |phi(u)| and phi(u v v) = phi(u) & phi(v)",
        &tally(&all, Suite::Lemmas, &["rank_eq_n_minus_phi", "phi_join_eq_intersection"]),
        None,
    );
    ok &= report(
        6,
        "every hull is join-closed",
        &tally(&all, Suite::Lemmas, &["hull_join_closed"]),
        None,
    );
    ok &= report(
        7,
        "modular inputs: hull is the generated sublattice and distributive",
        &tally(
            &modular_inputs,
            Suite::Modular,
            &["hull_eq_generated_sublattice", "sublattice_distributive"],
        ),
        None,
    );

    let mut c8 = tally(&with_pi5, Suite::Main, &["kstar_axioms"]);
    for (i, family) in random_families(2000, 8).iter().enumerate() {
        if !family.is_preantimatroid() {
            continue;
        }
        match family.extract_antimatroid() {
            Ok(kstar) if kstar.is_antimatroid() && (!family.is_antimatroid() || kstar == *family) => {
                c8.pass += 1
            }
            Ok(kstar) => {
                c8.fail += 1;
                c8.notes.push(format!("random family {i}: {family} gave K* {kstar}"));
            }
            Err(e) => {
                c8.fail += 1;
                c8.notes.push(format!("random family {i}: {family}: {e}"));
            }
        }
    }
    ok &= report(8, "K* satisfies the antimatroid axioms and fixes antimatroids", &c8, None);

    let args = VerifyArgs {
        input: None,
        gen: None,
        corpus: Vec::<CorpusEntry>::new(),
        format: Format::Json,
        budget_flags: DEFAULT_FLAG_BUDGET,
        budget_pairs: DEFAULT_PAIR_BUDGET,
        seed: DEFAULT_SEED,
        out: None,
    };
    let first = cmd_verify(&args);
    let second = cmd_verify(&args);
    let mut c9 = Tally::new();
    match (first, second) {
        (Ok(a), Ok(b)) if a == b => {
            c9.pass = 1;
            c9.notes.push(format!("{} identical bytes", a.len()));
        }
        (Ok(_), Ok(_)) => {
            c9.fail = 1;
            c9.notes.push("reports differ".into());
        }
        (a, b) => {
            c9.fail = 1;
            c9.notes.push(format!("verify did not succeed: {:?} / {:?}", a.err(), b.err()));
        }
    }
    ok &= report(9, "two identical verify runs produce byte-identical reports", &c9, None);

    println!("acceptance finished in {:.1}s", started.elapsed().as_secs_f64());
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
