//! Test lattice families and lattice file loading.
//!
//! Every generator assigns ids in a canonical order (by rank, then by a
//! family-specific key) so the same parameters always give the same ids and
//! cover list.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{fmt_subset, full_mask, FamilyError, SetFamily};
use crate::lattice::{ElementId, Lattice, LatticeError};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("{family} parameter {value} is outside {min}..={max}")]
    OutOfBounds {
        family: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("cannot parse generator `{0}`; expected family:param[:seed]")]
    BadSpec(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{origin}: parse error: {message}")]
    Parse { origin: String, message: String },
    #[error("{origin}: {context}: {source}")]
    Invalid {
        origin: String,
        context: String,
        #[source]
        source: LatticeError,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("generated feasible sets are not an antimatroid lattice: {0}")]
    NotAntimatroid(String),
}

fn check_bounds(family: &'static str, value: usize, min: usize, max: usize) -> Result<(), GenError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(GenError::OutOfBounds {
            family,
            value,
            min,
            max,
        })
    }
}

/// Lattice on `keys` (already in canonical id order) with the given cover pairs of keys.
fn lattice_from_keys<K: Eq + std::hash::Hash + Clone>(
    keys: &[K],
    covers: impl IntoIterator<Item = (K, K)>,
    label: impl Fn(&K) -> String,
) -> Result<Lattice, GenError> {
    let id: HashMap<K, ElementId> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let pairs: BTreeSet<(ElementId, ElementId)> =
        covers.into_iter().map(|(a, b)| (id[&a], id[&b])).collect();
    let pairs: Vec<_> = pairs.into_iter().collect();
    Ok(Lattice::new(keys.len(), &pairs)?.with_labels(keys.iter().map(label).collect()))
}

/// All subsets of `[n]` under inclusion, ordered by `(size, mask)`.
pub fn boolean(n: usize) -> Result<Lattice, GenError> {
    check_bounds("boolean", n, 1, 6)?;
    let family = SetFamily::new(n, 0..=full_mask(n))?;
    family_lattice(&family)
}

/// Lattice of a family whose inclusion covers are single-element additions.
pub fn family_lattice(family: &SetFamily) -> Result<Lattice, GenError> {
    let sets = family.sets();
    let covers = sets.iter().flat_map(|&s| {
        (0..family.ground())
            .map(move |b| (s, s | 1 << b))
            .filter(|&(a, b)| a != b && family.contains(b))
    });
    lattice_from_keys(sets, covers.collect::<Vec<_>>(), |&s| fmt_subset(s))
}

/// Canonical restricted growth string: block index of each element, blocks
/// numbered by first appearance.
type Partition = Vec<u8>;

fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(prefix: &mut Partition, n: usize, out: &mut Vec<Partition>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |&m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn block_count(p: &Partition) -> usize {
    p.iter().max().map_or(0, |&m| m as usize + 1)
}

fn canonical(p: &[u8]) -> Partition {
    let mut relabel = HashMap::new();
    p.iter()
        .map(|b| {
            let next = relabel.len() as u8;
            *relabel.entry(*b).or_insert(next)
        })
        .collect()
}

/// Blocks in order of least element, e.g. `12|34`.
fn partition_label(p: &Partition) -> String {
    (0..block_count(p) as u8)
        .map(|b| {
            p.iter()
                .enumerate()
                .filter(|&(_, &x)| x == b)
                .map(|(i, _)| (i + 1).to_string())
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("|")
}

/// Set partitions of `[n]` under refinement (finest at the bottom), ordered
/// by `(rank, label)`.
pub fn partition(n: usize) -> Result<Lattice, GenError> {
    check_bounds("partition", n, 2, 6)?;
    let mut parts = partitions_of(n);
    parts.sort_by_cached_key(|p| (n - block_count(p), partition_label(p)));
    let covers: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|p| {
            let blocks = block_count(p) as u8;
            (0..blocks).flat_map(move |a| {
                (a + 1..blocks).map(move |b| {
                    let merged: Vec<u8> = p.iter().map(|&x| if x == b { a } else { x }).collect();
                    (p.clone(), canonical(&merged))
                })
            })
        })
        .collect();
    lattice_from_keys(&parts, covers, partition_label)
}

/// Subspaces of `GF(2)^d` under inclusion, ordered by `(dimension, vector mask)`.
///
/// A subspace is the mask of the vectors it contains.
pub fn binary_subspace(d: usize) -> Result<Lattice, GenError> {
    check_bounds("binary_subspace", d, 1, 4)?;
    let vectors = 1u32 << d;
    let span_with = |space: u32, v: u32| -> u32 {
        (0..vectors)
            .filter(|&x| space >> x & 1 == 1)
            .fold(space, |acc, x| acc | 1 << (x ^ v))
    };
    let mut spaces: BTreeSet<u32> = BTreeSet::from([1]);
    let mut covers = Vec::new();
    let mut frontier = vec![1u32];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &space in &frontier {
            for v in 0..vectors {
                if space >> v & 1 == 0 {
                    let bigger = span_with(space, v);
                    covers.push((space, bigger));
                    if spaces.insert(bigger) {
                        next.push(bigger);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut keys: Vec<u32> = spaces.into_iter().collect();
    keys.sort_by_key(|&s| (s.count_ones(), s));
    let label = |&s: &u32| {
        let vs: Vec<String> = (0..vectors).filter(|&x| s >> x & 1 == 1).map(|x| x.to_string()).collect();
        format!("<{}>", vs.join(","))
    };
    lattice_from_keys(&keys, covers, label)
}

/// The chain `0 < 1 < ... < n`.
pub fn chain(n: usize) -> Result<Lattice, GenError> {
    check_bounds("chain", n, 0, 64)?;
    let covers: Vec<_> = (1..=n).map(|i| (i - 1, i)).collect();
    Ok(Lattice::new(n + 1, &covers)?)
}

/// Direct product; `(a, b)` gets id `a * |B| + b`.
pub fn product(a: &Lattice, b: &Lattice) -> Result<Lattice, GenError> {
    let nb = b.element_count();
    let id = |x: ElementId, y: ElementId| x * nb + y;
    let mut covers = Vec::new();
    for x in a.elements() {
        for y in b.elements() {
            covers.extend(a.upper_covers(x).iter().map(|&x2| (id(x, y), id(x2, y))));
            covers.extend(b.upper_covers(y).iter().map(|&y2| (id(x, y), id(x, y2))));
        }
    }
    covers.sort_unstable();
    let labels = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
        .collect();
    Ok(Lattice::new(a.element_count() * nb, &covers)?.with_labels(labels))
}

/// The grid `chain(k) × chain(k)`.
pub fn grid(k: usize) -> Result<Lattice, GenError> {
    check_bounds("product", k, 1, 6)?;
    product(&chain(k)?, &chain(k)?)
}

/// Strict order relation as `below[j]` = mask of elements below `j`, transitively closed.
fn closed_order(ground: usize, relations: &[(usize, usize)]) -> Vec<u64> {
    let mut below = vec![0u64; ground];
    for &(i, j) in relations {
        below[j] |= 1 << i;
    }
    // Warshall
    for k in 0..ground {
        for j in 0..ground {
            if below[j] >> k & 1 == 1 {
                below[j] |= below[k];
            }
        }
    }
    below
}

/// Random strict order on `0..ground`: each `i < j` (as integers) is related
/// with probability `density`, then transitively closed.
fn random_relations(ground: usize, seed: u64, density: f64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut relations = Vec::new();
    for i in 0..ground {
        for j in i + 1..ground {
            if rng.random_bool(density) {
                relations.push((i, j));
            }
        }
    }
    relations
}

fn ideals(below: &[u64]) -> Vec<u64> {
    (0..=full_mask(below.len()))
        .filter(|&x| (0..below.len()).all(|j| x >> j & 1 == 0 || below[j] & !x == 0))
        .collect()
}

fn filters(below: &[u64]) -> Vec<u64> {
    let full = full_mask(below.len());
    ideals(below).into_iter().map(|x| full ^ x).collect()
}

/// Order ideals of the poset generated by `relations` (pairs `(i, j)` meaning `i < j`).
pub fn poset_antimatroid(ground: usize, relations: &[(usize, usize)]) -> Result<SetFamily, GenError> {
    check_bounds("antimatroid ground", ground, 1, 7)?;
    if let Some(&(i, j)) = relations.iter().find(|&&(i, j)| i >= ground || j >= ground || i == j) {
        return Err(GenError::BadSpec(format!("relation ({i}, {j}) on ground {ground}")));
    }
    let below = closed_order(ground, relations);
    if (0..ground).any(|j| below[j] >> j & 1 == 1) {
        return Err(GenError::BadSpec("relations are cyclic".into()));
    }
    Ok(SetFamily::new(ground, ideals(&below))?)
}

/// Unions of an ideal and a filter of the poset generated by `relations`.
pub fn double_shelling_antimatroid(
    ground: usize,
    relations: &[(usize, usize)],
) -> Result<SetFamily, GenError> {
    let ideal_family = poset_antimatroid(ground, relations)?;
    let below = closed_order(ground, relations);
    let tops = filters(&below);
    let sets: Vec<u64> = ideal_family
        .sets()
        .iter()
        .flat_map(|&i| tops.iter().map(move |&f| i | f))
        .collect();
    Ok(SetFamily::new(ground, sets)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AntimatroidKind {
    Poset,
    Shelling,
}

/// Feasible sets of a seeded random antimatroid.
pub fn random_antimatroid(kind: AntimatroidKind, ground: usize, seed: u64) -> Result<SetFamily, GenError> {
    check_bounds("antimatroid ground", ground, 1, 7)?;
    match kind {
        AntimatroidKind::Poset => poset_antimatroid(ground, &random_relations(ground, seed, 0.4)),
        AntimatroidKind::Shelling => {
            double_shelling_antimatroid(ground, &random_relations(ground, seed, 0.5))
        }
    }
}

/// Lattice of feasible sets of a seeded random antimatroid, checked to be an
/// antimatroid and semimodular.
pub fn antimatroid_lattice(kind: AntimatroidKind, ground: usize, seed: u64) -> Result<Lattice, GenError> {
    let family = random_antimatroid(kind, ground, seed)?;
    if let Err(v) = family.check_antimatroid() {
        return Err(GenError::NotAntimatroid(v.to_string()));
    }
    let lattice = family_lattice(&family)?;
    if !lattice.is_semimodular() {
        return Err(GenError::NotAntimatroid("lattice is not semimodular".into()));
    }
    Ok(lattice)
}

/// Lattice interchange document.
///
/// ```json
/// { "elements": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]] }
/// ```
///
/// `labels` is optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub elements: usize,
    pub covers: Vec<[ElementId; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl LatticeFile {
    pub fn from_lattice(lattice: &Lattice) -> Self {
        let default_labels = lattice.labels().iter().enumerate().all(|(i, l)| *l == i.to_string());
        LatticeFile {
            elements: lattice.element_count(),
            covers: lattice.covers().iter().map(|&(a, b)| [a, b]).collect(),
            labels: (!default_labels).then(|| lattice.labels().to_vec()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("lattice file serialises")
    }
}

/// Parses and validates an interchange document; `origin` names it in errors.
pub fn parse_lattice(text: &str, origin: &str) -> Result<Lattice, GenError> {
    let file: LatticeFile = serde_json::from_str(text).map_err(|e| GenError::Parse {
        origin: origin.to_string(),
        message: e.to_string(),
    })?;
    let covers: Vec<(ElementId, ElementId)> = file.covers.iter().map(|&[a, b]| (a, b)).collect();
    let lattice = Lattice::new(file.elements, &covers).map_err(|source| {
        let context = match source.offending_pair() {
            Some(pair) => match covers.iter().position(|&c| c == pair) {
                Some(i) => format!("covers[{i}]"),
                None => "covers".to_string(),
            },
            None => match source {
                LatticeError::Empty | LatticeError::TooLarge { .. } => "elements".to_string(),
                _ => "covers".to_string(),
            },
        };
        GenError::Invalid {
            origin: origin.to_string(),
            context,
            source,
        }
    })?;
    match file.labels {
        Some(labels) if labels.len() != file.elements => Err(GenError::Parse {
            origin: origin.to_string(),
            message: format!("labels: expected {} entries, found {}", file.elements, labels.len()),
        }),
        Some(labels) => Ok(lattice.with_labels(labels)),
        None => Ok(lattice),
    }
}

pub fn load_lattice(path: &Path) -> Result<Lattice, GenError> {
    let text = std::fs::read_to_string(path).map_err(|source| GenError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_lattice(&text, &path.display().to_string())
}

pub fn save_lattice(lattice: &Lattice, path: &Path) -> Result<(), GenError> {
    let mut text = LatticeFile::from_lattice(lattice).to_json();
    text.push('\n');
    std::fs::write(path, text).map_err(|source| GenError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A reproducible lattice source, written `family:param[:seed]` or `file:path`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Boolean(usize),
    Partition(usize),
    BinarySubspace(usize),
    Antimatroid { kind: AntimatroidKind, ground: usize, seed: u64 },
    Chain(usize),
    Product(usize),
    FromFile(PathBuf),
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Lattice, GenError> {
        match self {
            GeneratorSpec::Boolean(n) => boolean(*n),
            GeneratorSpec::Partition(n) => partition(*n),
            GeneratorSpec::BinarySubspace(d) => binary_subspace(*d),
            GeneratorSpec::Antimatroid { kind, ground, seed } => antimatroid_lattice(*kind, *ground, *seed),
            GeneratorSpec::Chain(n) => chain(*n),
            GeneratorSpec::Product(k) => grid(*k),
            GeneratorSpec::FromFile(path) => load_lattice(path),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Boolean(n) => write!(f, "boolean:{n}"),
            GeneratorSpec::Partition(n) => write!(f, "partition:{n}"),
            GeneratorSpec::BinarySubspace(d) => write!(f, "binary_subspace:{d}"),
            GeneratorSpec::Antimatroid { kind, ground, seed } => {
                let name = match kind {
                    AntimatroidKind::Poset => "antimatroid_poset",
                    AntimatroidKind::Shelling => "antimatroid_shelling",
                };
                write!(f, "{name}:{ground}:{seed}")
            }
            GeneratorSpec::Chain(n) => write!(f, "chain:{n}"),
            GeneratorSpec::Product(k) => write!(f, "product:{k}"),
            GeneratorSpec::FromFile(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenError::BadSpec(s.to_string());
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GeneratorSpec::FromFile(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.split(':').collect();
        let (family, param, seed) = match parts.as_slice() {
            [family, param] => (*family, *param, None),
            [family, param, seed] => (*family, *param, Some(*seed)),
            _ => return Err(bad()),
        };
        let param: usize = param.parse().map_err(|_| bad())?;
        let seed: u64 = match seed {
            Some(seed) => seed.parse().map_err(|_| bad())?,
            None => 0,
        };
        let antimatroid = |kind| GeneratorSpec::Antimatroid {
            kind,
            ground: param,
            seed,
        };
        Ok(match family {
            "boolean" => GeneratorSpec::Boolean(param),
            "partition" => GeneratorSpec::Partition(param),
            "binary_subspace" | "subspace" => GeneratorSpec::BinarySubspace(param),
            "antimatroid_poset" => antimatroid(AntimatroidKind::Poset),
            "antimatroid_shelling" => antimatroid(AntimatroidKind::Shelling),
            "chain" => GeneratorSpec::Chain(param),
            "product" => GeneratorSpec::Product(param),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::count_flags;

    fn bell(n: usize) -> usize {
        // Bell triangle
        let mut row = vec![1usize];
        for _ in 1..n {
            let mut next = vec![*row.last().unwrap()];
            for &x in &row {
                next.push(next.last().unwrap() + x);
            }
            row = next;
        }
        *row.last().unwrap()
    }

    #[test]
    fn boolean_sizes() {
        let one = boolean(1).unwrap();
        assert_eq!(one.element_count(), 2);
        assert_eq!(one.rank_of_lattice(), 1);
        let three = boolean(3).unwrap();
        assert_eq!(three.element_count(), 8);
        assert_eq!(three.rank_of_lattice(), 3);
        assert!(three.is_modular_lattice());
        assert_eq!(count_flags(&boolean(4).unwrap()), 24);
        assert!(matches!(boolean(0), Err(GenError::OutOfBounds { .. })));
        assert!(matches!(boolean(7), Err(GenError::OutOfBounds { .. })));
    }

    #[test]
    fn partition_sizes_follow_bell_numbers() {
        assert_eq!(bell(3), 5);
        assert_eq!(bell(4), 15);
        for n in 2..=5 {
            let l = partition(n).unwrap();
            assert_eq!(l.element_count(), bell(n));
            assert_eq!(l.rank_of_lattice(), n - 1);
            assert!(l.is_semimodular());
        }
        assert_eq!(partition(4).unwrap().labels()[0], "1|2|3|4");
        assert!(matches!(partition(1), Err(GenError::OutOfBounds { .. })));
    }

    #[test]
    fn partition_four_is_not_modular() {
        let l = partition(4).unwrap();
        assert!(!l.is_modular_lattice());
        let p = l.labels().iter().position(|s| s == "12|34").unwrap();
        let q = l.labels().iter().position(|s| s == "13|24").unwrap();
        // ranks 2 + 2 against meet (bottom, rank 0) and join (top, rank 3)
        assert_eq!((l.rank(p), l.rank(q)), (2, 2));
        assert_eq!(l.meet(p, q), l.bottom());
        assert_eq!(l.join(p, q), l.top());
        assert!(!l.is_modular_pair(p, q));
        assert!(partition(3).unwrap().is_modular_lattice());
    }

    #[test]
    fn binary_subspace_sizes() {
        assert_eq!(binary_subspace(1).unwrap().element_count(), 2);
        let plane = binary_subspace(2).unwrap();
        assert_eq!(plane.element_count(), 5);
        assert_eq!(plane.rank_of_lattice(), 2);
        // 1 + 7 + 7 + 1 subspaces; gaussian binomials at q = 2
        let space = binary_subspace(3).unwrap();
        assert_eq!(space.element_count(), 16);
        assert!(space.is_modular_lattice());
        assert_eq!(binary_subspace(4).unwrap().element_count(), 67);
    }

    #[test]
    fn chain_and_grid() {
        let c = chain(2).unwrap();
        assert_eq!(c.element_count(), 3);
        assert_eq!(count_flags(&c), 1);
        let g = grid(2).unwrap();
        assert_eq!(g.element_count(), 9);
        assert_eq!(g.rank_of_lattice(), 4);
        assert!(g.is_modular_lattice());
        // lattice paths in a 2x2 grid
        assert_eq!(count_flags(&g), 6);
    }

    #[test]
    fn small_poset_antimatroids() {
        let single = family_lattice(&poset_antimatroid(1, &[]).unwrap()).unwrap();
        assert_eq!(single.element_count(), 2);
        let chain3 = poset_antimatroid(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain3.sets(), &[0b000, 0b001, 0b011, 0b111]);
        let l = family_lattice(&chain3).unwrap();
        assert_eq!(l.element_count(), 4);
        assert_eq!(count_flags(&l), 1);
    }

    #[test]
    fn seeded_antimatroids_pass_axioms() {
        for kind in [AntimatroidKind::Poset, AntimatroidKind::Shelling] {
            let family = random_antimatroid(kind, 5, 7).unwrap();
            assert!(family.is_antimatroid());
            let l = antimatroid_lattice(kind, 5, 7).unwrap();
            assert!(l.is_semimodular());
            assert_eq!(l.element_count(), family.len());
        }
    }

    #[test]
    fn generation_is_deterministic() {
        for spec in ["partition:4", "antimatroid_poset:6:3", "antimatroid_shelling:5:11", "binary_subspace:3"] {
            let spec: GeneratorSpec = spec.parse().unwrap();
            let (a, b) = (spec.generate().unwrap(), spec.generate().unwrap());
            assert_eq!(a.covers(), b.covers());
            assert_eq!(a.labels(), b.labels());
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["boolean:3", "partition:5", "binary_subspace:2", "antimatroid_poset:5:7", "antimatroid_shelling:4:0", "chain:3", "product:2", "file:fixtures/diamond.json"] {
            assert_eq!(s.parse::<GeneratorSpec>().unwrap().to_string(), s);
        }
        assert!("boolean".parse::<GeneratorSpec>().is_err());
        assert!("cube:3".parse::<GeneratorSpec>().is_err());
        assert!("boolean:x".parse::<GeneratorSpec>().is_err());
    }

    #[test]
    fn parse_errors_carry_context() {
        let err = parse_lattice(r#"{"elements": 3, "covers": [[0, 1], [1, 2], [2, 1]]}"#, "cyclic").unwrap_err();
        let msg = err.to_string();
        assert!(matches!(err, GenError::Invalid { source: LatticeError::NotAPoset { .. }, .. }), "{msg}");
        assert!(msg.starts_with("cyclic: covers["), "{msg}");
        let err = parse_lattice(r#"{"elements": 3, "covers": [[0, 1]"#, "truncated").unwrap_err();
        assert!(matches!(err, GenError::Parse { .. }));
        assert!(err.to_string().contains("line 1"), "{err}");
        let err = parse_lattice(r#"{"elements": 2, "covers": [[0, 1]], "labels": ["a"]}"#, "labels").unwrap_err();
        assert!(matches!(err, GenError::Parse { .. }));
    }

    #[test]
    fn file_round_trip() {
        let l = partition(3).unwrap();
        let text = LatticeFile::from_lattice(&l).to_json();
        let back = parse_lattice(&text, "mem").unwrap();
        assert_eq!(back.covers(), l.covers());
        assert_eq!(back.labels(), l.labels());
    }
}
