//! Command-line front end. Every command renders to a string so tests can
//! compare output byte for byte.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use crate::family::{fmt_subset, SetFamily};
use crate::flags::{
    enumerate_flags, gallery_distance_bfs, jordan_holder, shortest_gallery, Flag, DEFAULT_FLAG_BUDGET,
};
use crate::generators::{load_lattice, GeneratorSpec, LatticeFile};
use crate::hull::{hull_as_preantimatroid, mconv_recursive, phi_bar_table, HullResult};
use crate::lattice::{ElementId, Lattice};
use crate::render::{family_dot, hull_dot, lattice_dot};
use crate::verify::{default_corpus, verify_corpus, CorpusEntry, VerifyConfig, DEFAULT_PAIR_BUDGET, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(name = "flaghull", version, about = "Modular convex hulls of flag pairs in semimodular lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a lattice and report rank, flag count and (semi)modularity.
    Check(LatticeArgs),
    /// Compute the hull of two flags and its set-family image.
    Hull(PairArgs),
    /// Jordan-Hölder permutation, inversion number and gallery distance.
    Distance {
        #[command(flatten)]
        pair: PairArgs,
        /// Also print one shortest gallery.
        #[arg(long)]
        witness: bool,
    },
    /// Run the verification suites over a lattice or the built-in corpus.
    Verify(VerifyArgs),
    /// Emit Graphviz DOT.
    Render {
        #[command(flatten)]
        pair: OptionalPairArgs,
        #[arg(long, value_enum, default_value = "lattice")]
        what: RenderWhat,
    },
    /// Write a generated lattice as JSON.
    Gen {
        /// Generator spec, e.g. `partition:4` or `antimatroid_poset:5:7`.
        spec: GeneratorSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct LatticeArgs {
    /// Lattice file (JSON).
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub input: Option<PathBuf>,
    /// Generator spec instead of a file.
    #[arg(long)]
    pub gen: Option<GeneratorSpec>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_FLAG_BUDGET)]
    pub budget_flags: usize,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    /// Flag C as comma-separated element ids, bottom first.
    #[arg(long, value_delimiter = ',', required = true)]
    pub flag_c: Vec<ElementId>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub flag_d: Vec<ElementId>,
}

#[derive(Debug, Args)]
pub struct OptionalPairArgs {
    #[command(flatten)]
    pub lattice: LatticeArgs,
    #[arg(long, value_delimiter = ',')]
    pub flag_c: Vec<ElementId>,
    #[arg(long, value_delimiter = ',')]
    pub flag_d: Vec<ElementId>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub gen: Option<GeneratorSpec>,
    /// Corpus entries (`spec` or `spec@pair_budget`); defaults to the built-in corpus.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["input", "gen"])]
    pub corpus: Vec<CorpusEntry>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value_t = DEFAULT_FLAG_BUDGET)]
    pub budget_flags: usize,
    #[arg(long, default_value_t = DEFAULT_PAIR_BUDGET)]
    pub budget_pairs: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    Lattice,
    Hull,
    Family,
    Kstar,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed")]
    VerificationFailed { output: String },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::VerificationFailed { .. } => ExitCode::from(1),
            CliError::Input(_) => ExitCode::from(2),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

fn load(args: &LatticeArgs) -> Result<(Lattice, String), CliError> {
    load_from(args.input.as_ref(), args.gen.as_ref())
}

fn load_from(path: Option<&PathBuf>, gen: Option<&GeneratorSpec>) -> Result<(Lattice, String), CliError> {
    match (path, gen) {
        (Some(path), _) => Ok((load_lattice(path).map_err(input)?, path.display().to_string())),
        (None, Some(spec)) => Ok((spec.generate().map_err(input)?, spec.to_string())),
        (None, None) => Err(CliError::Input("one of --input or --gen is required".into())),
    }
}

fn flags(lattice: &Lattice, c: &[ElementId], d: &[ElementId]) -> Result<(Flag, Flag), CliError> {
    let c = Flag::new(lattice, c.to_vec()).map_err(|e| input(format!("--flag-c: {e}")))?;
    let d = Flag::new(lattice, d.to_vec()).map_err(|e| input(format!("--flag-d: {e}")))?;
    Ok((c, d))
}

fn reject_dot(format: Format) -> Result<(), CliError> {
    match format {
        Format::Dot => Err(CliError::Input("--format dot is only supported by `render`".into())),
        _ => Ok(()),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serialises");
    s.push('\n');
    s
}

fn set_list(set: &fixedbitset::FixedBitSet) -> Vec<usize> {
    set.ones().collect()
}

pub fn cmd_check(args: &LatticeArgs) -> Result<String, CliError> {
    reject_dot(args.format)?;
    let (lattice, id) = load(args)?;
    let flag_count = enumerate_flags(&lattice, args.budget_flags).map_err(input)?.len();
    let (rank_ok, cover_ok) = lattice.semimodularity();
    let modular = lattice.is_modular_lattice();
    let failing = lattice.non_modular_pair();
    Ok(match args.format {
        Format::Json => json_text(&json!({
            "lattice": id,
            "elements": lattice.element_count(),
            "covers": lattice.covers().len(),
            "rank": lattice.rank_of_lattice(),
            "flags": flag_count,
            "semimodular": rank_ok && cover_ok,
            "modular": modular,
            "non_modular_pair": failing,
        })),
        _ => {
            let mut out = format!(
                "lattice {id}: {} elements, {} covers, rank {}, {flag_count} flags\n",
                lattice.element_count(),
                lattice.covers().len(),
                lattice.rank_of_lattice()
            );
            out.push_str(&format!("semimodular: {}\nmodular: {modular}\n", rank_ok && cover_ok));
            if let Some((p, q)) = failing {
                out.push_str(&format!("non-modular pair: ({p}, {q})\n"));
            }
            out
        }
    })
}

fn hull_of(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<(HullResult, SetFamily), CliError> {
    let hull = mconv_recursive(lattice, c, d).map_err(input)?;
    let family = hull_as_preantimatroid(lattice, &hull).map_err(input)?;
    Ok((hull, family))
}

pub fn cmd_hull(args: &PairArgs) -> Result<String, CliError> {
    let (lattice, _) = load(&args.lattice)?;
    let (c, d) = flags(&lattice, &args.flag_c, &args.flag_d)?;
    let (hull, family) = hull_of(&lattice, &c, &d)?;
    let kstar = family.extract_antimatroid().map_err(input)?;
    let images = phi_bar_table(&lattice, &hull).map_err(input)?;
    Ok(match args.lattice.format {
        Format::Dot => hull_dot(&lattice, &hull, &c, &d, "hull").map_err(input)?,
        Format::Json => json_text(&json!({
            "flag_c": c,
            "flag_d": d,
            "sigma": hull.sigma.one_based(),
            "z": hull.z,
            "z_prime": hull.z_prime,
            "levels": hull.levels.iter().map(set_list).collect::<Vec<_>>(),
            "members": set_list(&hull.members),
            "phi_bar": images.iter().map(|&(u, m)| json!({"element": u, "set": fmt_subset(m)})).collect::<Vec<_>>(),
            "family": family.to_lists(),
            "family_is_antimatroid": family.is_antimatroid(),
            "kstar": kstar.to_lists(),
        })),
        Format::Text => {
            let mut out = format!("C = {c}\nD = {d}\nsigma = {}\n", hull.sigma);
            let ids = |v: &[ElementId]| v.iter().map(|p| lattice.label(*p).to_string()).collect::<Vec<_>>().join(", ");
            out.push_str(&format!("z  = [{}]\nz' = [{}]\n", ids(&hull.z), ids(&hull.z_prime)));
            out.push_str(&format!("hull: {} elements\n", hull.len()));
            for (u, m) in &images {
                out.push_str(&format!("  {:<12} {}\n", lattice.label(*u), fmt_subset(*m)));
            }
            out.push_str(&format!("K  = {family}\n"));
            out.push_str(&format!("antimatroid: {}\n", family.is_antimatroid()));
            out.push_str(&format!("K* = {kstar}\n"));
            out
        }
    })
}

pub fn cmd_distance(args: &PairArgs, witness: bool) -> Result<String, CliError> {
    reject_dot(args.lattice.format)?;
    let (lattice, _) = load(&args.lattice)?;
    let (c, d) = flags(&lattice, &args.flag_c, &args.flag_d)?;
    let sigma = jordan_holder(&lattice, &c, &d).map_err(input)?;
    let budget = args.lattice.budget_flags;
    let bfs = gallery_distance_bfs(&lattice, &c, &d, budget).map_err(input)?;
    let gallery = if witness {
        Some(shortest_gallery(&lattice, &c, &d, budget).map_err(input)?)
    } else {
        None
    };
    Ok(match args.lattice.format {
        Format::Json => json_text(&json!({
            "sigma": sigma.one_based(),
            "inversions": sigma.inversions(),
            "gallery_distance": bfs,
            "witness": gallery,
        })),
        _ => {
            let mut out = format!(
                "sigma = {sigma}\ninversions = {}\ngallery distance = {bfs}\n",
                sigma.inversions()
            );
            if let Some(gallery) = gallery {
                for flag in &gallery.flags {
                    out.push_str(&format!("  {flag}\n"));
                }
            }
            out
        }
    })
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<String, CliError> {
    reject_dot(args.format)?;
    let config = VerifyConfig {
        pair_budget: args.budget_pairs,
        flag_budget: args.budget_flags,
        seed: args.seed,
    };
    let report = if args.input.is_some() || args.gen.is_some() {
        let (lattice, id) = load_from(args.input.as_ref(), args.gen.as_ref())?;
        let summary = crate::verify::verify_lattice(&lattice, &id, &config).map_err(input)?;
        let (total_checks, total_failures) = summary
            .reports
            .iter()
            .flat_map(|r| &r.checks)
            .fold((0, 0), |(t, f), c| (t + c.pass + c.fail, f + c.fail));
        crate::verify::CorpusReport {
            seed: config.seed,
            pair_budget: config.pair_budget,
            flag_budget: config.flag_budget,
            lattices: vec![summary],
            total_checks,
            total_failures,
        }
    } else {
        let corpus = if args.corpus.is_empty() { default_corpus() } else { args.corpus.clone() };
        verify_corpus(&corpus, &config).map_err(input)?
    };
    let output = match args.format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        _ => report.summary_table(),
    };
    if report.passed() {
        Ok(output)
    } else {
        Err(CliError::VerificationFailed { output })
    }
}

pub fn cmd_render(args: &OptionalPairArgs, what: RenderWhat) -> Result<String, CliError> {
    let (lattice, id) = load(&args.lattice)?;
    if what == RenderWhat::Lattice {
        return Ok(lattice_dot(&lattice, &id));
    }
    if args.flag_c.is_empty() || args.flag_d.is_empty() {
        return Err(CliError::Input("--flag-c and --flag-d are required for this rendering".into()));
    }
    let (c, d) = flags(&lattice, &args.flag_c, &args.flag_d)?;
    let (hull, family) = hull_of(&lattice, &c, &d)?;
    match what {
        RenderWhat::Hull => hull_dot(&lattice, &hull, &c, &d, "hull").map_err(input),
        RenderWhat::Family => Ok(family_dot(&family, "K")),
        _ => Ok(family_dot(&family.extract_antimatroid().map_err(input)?, "K*")),
    }
}

pub fn cmd_gen(spec: &GeneratorSpec) -> Result<String, CliError> {
    let lattice = spec.generate().map_err(input)?;
    let mut s = LatticeFile::from_lattice(&lattice).to_json();
    s.push('\n');
    Ok(s)
}

fn out_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Check(a) => a.out.as_ref(),
        Command::Hull(p) | Command::Distance { pair: p, .. } => p.lattice.out.as_ref(),
        Command::Verify(v) => v.out.as_ref(),
        Command::Render { pair, .. } => pair.lattice.out.as_ref(),
        Command::Gen { out, .. } => out.as_ref(),
    }
}

pub fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Check(args) => cmd_check(args),
        Command::Hull(args) => cmd_hull(args),
        Command::Distance { pair, witness } => cmd_distance(pair, *witness),
        Command::Verify(args) => cmd_verify(args),
        Command::Render { pair, what } => cmd_render(pair, *what),
        Command::Gen { spec, .. } => cmd_gen(spec),
    }
}

/// Runs the command and writes its output to `--out` or stdout.
pub fn run(cli: Cli) -> ExitCode {
    let result = execute(&cli.command);
    let (output, code) = match &result {
        Ok(output) => (Some(output.as_str()), ExitCode::SUCCESS),
        Err(CliError::VerificationFailed { output }) => (Some(output.as_str()), ExitCode::from(1)),
        Err(e) => {
            eprintln!("error: {e}");
            (None, e.exit_code())
        }
    };
    if let Some(output) = output {
        match out_path(&cli.command) {
            Some(path) => {
                if let Err(e) = std::fs::write(path, output) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            None => print!("{output}"),
        }
    }
    code
}
