//! Flags (maximal chains), the flag graph, and Jordan-Hölder permutations.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{ElementId, Lattice};

/// Default cap on flags held in memory by enumeration and gallery searches.
pub const DEFAULT_FLAG_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlagDefect {
    Length { expected: usize, found: usize },
    UnknownElement(ElementId),
    StartsAbove(ElementId),
    EndsBelow(ElementId),
    NotACover { position: usize, lower: ElementId, upper: ElementId },
}

impl fmt::Display for FlagDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FlagDefect::Length { expected, found } => {
                write!(f, "expected {expected} elements, found {found}")
            }
            FlagDefect::UnknownElement(p) => write!(f, "element {p} does not exist"),
            FlagDefect::StartsAbove(p) => write!(f, "starts at {p}, not the bottom"),
            FlagDefect::EndsBelow(p) => write!(f, "ends at {p}, not the top"),
            FlagDefect::NotACover { position, lower, upper } => {
                write!(f, "{upper} does not cover {lower} (positions {position}, {})", position + 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error("not a flag: {0}")]
    NotAFlag(FlagDefect),
    #[error("more than {cap} flags")]
    FlagBudgetExceeded { cap: usize },
    #[error("sigma {sigma:?} is not a bijection")]
    NotABijection { sigma: Vec<usize> },
    #[error("flags are not connected in the flag graph")]
    Disconnected,
}

/// A maximal chain `0 = e_0 < e_1 < ... < e_n = 1`, each step a cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Flag(Vec<ElementId>);

impl Flag {
    pub fn new(lattice: &Lattice, elems: Vec<ElementId>) -> Result<Self, FlagError> {
        let defect = |d| Err(FlagError::NotAFlag(d));
        let n = lattice.rank_of_lattice();
        if let Some(&p) = elems.iter().find(|&&p| p >= lattice.element_count()) {
            return defect(FlagDefect::UnknownElement(p));
        }
        if elems.len() != n + 1 {
            return defect(FlagDefect::Length {
                expected: n + 1,
                found: elems.len(),
            });
        }
        if elems[0] != lattice.bottom() {
            return defect(FlagDefect::StartsAbove(elems[0]));
        }
        for (position, w) in elems.windows(2).enumerate() {
            if !lattice.is_cover(w[0], w[1]) {
                return defect(FlagDefect::NotACover {
                    position,
                    lower: w[0],
                    upper: w[1],
                });
            }
        }
        if elems[n] != lattice.top() {
            return defect(FlagDefect::EndsBelow(elems[n]));
        }
        Ok(Flag(elems))
    }

    pub fn elems(&self) -> &[ElementId] {
        &self.0
    }

    /// `e_i`; position `i` holds an element of rank `i`.
    pub fn at(&self, i: usize) -> ElementId {
        self.0[i]
    }

    pub fn rank(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, p: ElementId) -> bool {
        self.0.contains(&p)
    }

    /// The flag with `e_i` replaced by `z`.
    fn exchanged(&self, i: usize, z: ElementId) -> Flag {
        let mut elems = self.0.clone();
        elems[i] = z;
        Flag(elems)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&ids.join(","))
    }
}

/// All flags, in lexicographic order of their id sequences.
pub fn enumerate_flags(lattice: &Lattice, cap: usize) -> Result<Vec<Flag>, FlagError> {
    enumerate_flags_within(lattice, cap, |_| true)
}

/// Flags all of whose elements satisfy `keep`, in lexicographic order.
pub fn enumerate_flags_within(
    lattice: &Lattice,
    cap: usize,
    keep: impl Fn(ElementId) -> bool,
) -> Result<Vec<Flag>, FlagError> {
    let mut flags = Vec::new();
    if keep(lattice.bottom()) {
        let mut stack = vec![lattice.bottom()];
        extend_chain(lattice, &mut stack, cap, &keep, &mut flags)?;
    }
    Ok(flags)
}

fn extend_chain(
    lattice: &Lattice,
    stack: &mut Vec<ElementId>,
    cap: usize,
    keep: &dyn Fn(ElementId) -> bool,
    out: &mut Vec<Flag>,
) -> Result<(), FlagError> {
    let last = *stack.last().expect("non-empty chain");
    if stack.len() == lattice.rank_of_lattice() + 1 {
        if last == lattice.top() {
            if out.len() == cap {
                return Err(FlagError::FlagBudgetExceeded { cap });
            }
            out.push(Flag(stack.clone()));
        }
        return Ok(());
    }
    for &next in lattice.upper_covers(last) {
        // a chain of full length only passes through elements of the next rank
        if lattice.rank(next) == stack.len() && keep(next) {
            stack.push(next);
            extend_chain(lattice, stack, cap, keep, out)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Number of flags, without materialising them.
pub fn count_flags(lattice: &Lattice) -> u128 {
    // paths from each element to the top through rank-increasing covers, from the top down
    let n = lattice.rank_of_lattice();
    let mut by_rank: Vec<Vec<ElementId>> = vec![Vec::new(); n + 1];
    for p in lattice.elements() {
        by_rank[lattice.rank(p)].push(p);
    }
    let mut paths = vec![0u128; lattice.element_count()];
    paths[lattice.top()] = 1;
    for r in (0..n).rev() {
        for &p in &by_rank[r] {
            paths[p] = lattice
                .upper_covers(p)
                .iter()
                .filter(|&&q| lattice.rank(q) == r + 1)
                .map(|&q| paths[q])
                .sum();
        }
    }
    paths[lattice.bottom()]
}

/// Adjacent flags share all but exactly one element.
pub fn flags_adjacent(f: &Flag, g: &Flag) -> bool {
    f.0.len() == g.0.len() && f.0.iter().zip(&g.0).filter(|(a, b)| a != b).count() == 1
}

/// Flags adjacent to `flag`, obtained by exchanging one interior element.
pub fn neighbors(lattice: &Lattice, flag: &Flag) -> Vec<Flag> {
    let n = flag.rank();
    let mut out = Vec::new();
    for i in 1..n {
        let (lo, hi) = (flag.at(i - 1), flag.at(i + 1));
        for &z in lattice.upper_covers(lo) {
            if z != flag.at(i) && lattice.is_cover(z, hi) {
                out.push(flag.exchanged(i, z));
            }
        }
    }
    out
}

/// A walk in the flag graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gallery {
    pub flags: Vec<Flag>,
}

impl Gallery {
    /// Number of steps.
    pub fn len(&self) -> usize {
        self.flags.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn is_connected(&self) -> bool {
        self.flags.windows(2).all(|w| flags_adjacent(&w[0], &w[1]))
    }
}

// Breadth-first search state over lazily discovered flags.
struct Bfs {
    flags: Vec<Flag>,
    index: HashMap<Flag, usize>,
    dist: Vec<usize>,
    parent: Vec<usize>,
}

impl Bfs {
    /// Explores from `start` until `target` is settled, or all flags within
    /// `max_depth` when no target is given.
    fn run(
        lattice: &Lattice,
        start: &Flag,
        target: Option<&Flag>,
        max_depth: usize,
        cap: usize,
    ) -> Result<Bfs, FlagError> {
        let mut bfs = Bfs {
            flags: vec![start.clone()],
            index: HashMap::from([(start.clone(), 0)]),
            dist: vec![0],
            parent: vec![0],
        };
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            if target == Some(&bfs.flags[u]) || bfs.dist[u] == max_depth {
                if target.is_some() {
                    return Ok(bfs);
                }
                continue;
            }
            for g in neighbors(lattice, &bfs.flags[u]) {
                if bfs.index.contains_key(&g) {
                    continue;
                }
                if bfs.flags.len() == cap {
                    return Err(FlagError::FlagBudgetExceeded { cap });
                }
                let v = bfs.flags.len();
                bfs.index.insert(g.clone(), v);
                bfs.flags.push(g);
                bfs.dist.push(bfs.dist[u] + 1);
                bfs.parent.push(u);
                queue.push_back(v);
            }
        }
        if target.is_some_and(|t| !bfs.index.contains_key(t)) {
            return Err(FlagError::Disconnected);
        }
        Ok(bfs)
    }

    fn distance_to(&self, flag: &Flag) -> Option<usize> {
        self.index.get(flag).map(|&i| self.dist[i])
    }
}

/// Length of a shortest gallery from `c` to `d`, by breadth-first search over
/// single-element exchanges.
pub fn gallery_distance_bfs(lattice: &Lattice, c: &Flag, d: &Flag, cap: usize) -> Result<usize, FlagError> {
    let bfs = Bfs::run(lattice, c, Some(d), usize::MAX, cap)?;
    Ok(bfs.distance_to(d).expect("target settled"))
}

/// One shortest gallery from `c` to `d`.
pub fn shortest_gallery(lattice: &Lattice, c: &Flag, d: &Flag, cap: usize) -> Result<Gallery, FlagError> {
    let bfs = Bfs::run(lattice, c, Some(d), usize::MAX, cap)?;
    let mut v = bfs.index[d];
    let mut flags = vec![bfs.flags[v].clone()];
    while v != 0 {
        v = bfs.parent[v];
        flags.push(bfs.flags[v].clone());
    }
    flags.reverse();
    Ok(Gallery { flags })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestGalleries {
    pub distance: usize,
    /// Every flag lying on at least one shortest gallery, sorted.
    pub flags: Vec<Flag>,
}

/// The distance from `c` to `d` together with all flags on shortest galleries:
/// those `F` with `dist(c, F) + dist(F, d) = dist(c, d)`.
pub fn shortest_gallery_flags(
    lattice: &Lattice,
    c: &Flag,
    d: &Flag,
    cap: usize,
) -> Result<ShortestGalleries, FlagError> {
    let distance = gallery_distance_bfs(lattice, c, d, cap)?;
    let from_c = Bfs::run(lattice, c, None, distance, cap)?;
    let from_d = Bfs::run(lattice, d, None, distance, cap)?;
    let mut flags: Vec<Flag> = from_c
        .flags
        .iter()
        .zip(&from_c.dist)
        .filter(|(f, &dc)| from_d.distance_to(f).is_some_and(|dd| dc + dd == distance))
        .map(|(f, _)| f.clone())
        .collect();
    flags.sort();
    Ok(ShortestGalleries { distance, flags })
}

/// A permutation of `[n]` stored 0-based, with its inversion count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JhPermutation {
    sigma: Vec<usize>,
    inversions: usize,
}

impl JhPermutation {
    /// Wraps a 0-based image vector, rejecting non-bijections.
    pub fn from_images(sigma: Vec<usize>) -> Result<Self, FlagError> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &j in &sigma {
            if j >= n || std::mem::replace(&mut seen[j], true) {
                return Err(FlagError::NotABijection {
                    sigma: sigma.iter().map(|j| j + 1).collect(),
                });
            }
        }
        let inversions = inversion_count(&sigma);
        Ok(JhPermutation { sigma, inversions })
    }

    pub fn identity(n: usize) -> Self {
        JhPermutation {
            sigma: (0..n).collect(),
            inversions: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    /// `σ(i)` with 1-based argument and value.
    pub fn apply(&self, i: usize) -> usize {
        self.sigma[i - 1] + 1
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.sigma
    }

    /// 1-based images, `[σ(1), ..., σ(n)]`.
    pub fn one_based(&self) -> Vec<usize> {
        self.sigma.iter().map(|j| j + 1).collect()
    }

    pub fn inversions(&self) -> usize {
        self.inversions
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.sigma.len()];
        for (i, &j) in self.sigma.iter().enumerate() {
            inv[j] = i;
        }
        JhPermutation {
            sigma: inv,
            inversions: self.inversions,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for JhPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.one_based().iter().map(|j| j.to_string()).collect();
        write!(f, "({})", items.join(" "))
    }
}

fn inversion_count(sigma: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] {
                count += 1;
            }
        }
    }
    count
}

/// `σ(i)` is the smallest `j` with `d_i <= d_{i-1} ∨ c_j`.
pub fn jordan_holder(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<JhPermutation, FlagError> {
    let n = d.rank();
    let mut sigma = Vec::with_capacity(n);
    for i in 1..=n {
        let j = (1..=n)
            .find(|&j| lattice.leq(d.at(i), lattice.join(d.at(i - 1), c.at(j))))
            .expect("c_n is the top");
        sigma.push(j - 1);
    }
    JhPermutation::from_images(sigma)
}

/// Gallery distance computed as the inversion number of `σ_{C,D}`.
///
/// Debug builds cross-check against [`gallery_distance_bfs`] when the search
/// stays within a small budget.
pub fn flag_distance(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<usize, FlagError> {
    let distance = jordan_holder(lattice, c, d)?.inversions();
    if cfg!(debug_assertions) && lattice.is_semimodular() {
        if let Ok(bfs) = gallery_distance_bfs(lattice, c, d, 10_000) {
            assert_eq!(distance, bfs, "inversion number disagrees with gallery distance for {c} / {d}");
        }
    }
    Ok(distance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boolean, partition};

    fn square() -> Lattice {
        boolean(2).unwrap()
    }

    // ids in boolean(n) are subsets sorted by (popcount, value)
    fn boolean_flag(l: &Lattice, order: &[usize]) -> Flag {
        let mut mask = 0usize;
        let mut elems = vec![0];
        for &e in order {
            mask |= 1 << (e - 1);
            elems.push(l.labels().iter().position(|s| *s == crate::family::fmt_subset(mask as u64)).unwrap());
        }
        Flag::new(l, elems).unwrap()
    }

    #[test]
    fn chain_has_one_flag() {
        let l = Lattice::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_flags(&l, 10).unwrap(), vec![Flag(vec![0, 1, 2])]);
    }

    #[test]
    fn boolean_three_has_six_flags() {
        let l = boolean(3).unwrap();
        let flags = enumerate_flags(&l, 100).unwrap();
        assert_eq!(flags.len(), 6);
        assert!(flags.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(count_flags(&l), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let l = boolean(3).unwrap();
        assert_eq!(
            enumerate_flags(&l, 5).unwrap_err(),
            FlagError::FlagBudgetExceeded { cap: 5 }
        );
    }

    #[test]
    fn flag_validation() {
        let l = square();
        assert!(Flag::new(&l, vec![0, 1, 3]).is_ok());
        assert_eq!(
            Flag::new(&l, vec![0, 3]).unwrap_err(),
            FlagError::NotAFlag(FlagDefect::Length { expected: 3, found: 2 })
        );
        assert_eq!(
            Flag::new(&l, vec![0, 1, 2]).unwrap_err(),
            FlagError::NotAFlag(FlagDefect::NotACover { position: 1, lower: 1, upper: 2 })
        );
        assert_eq!(
            Flag::new(&l, vec![1, 3, 3]).unwrap_err(),
            FlagError::NotAFlag(FlagDefect::StartsAbove(1))
        );
        assert_eq!(
            Flag::new(&l, vec![0, 1, 9]).unwrap_err(),
            FlagError::NotAFlag(FlagDefect::UnknownElement(9))
        );
    }

    #[test]
    fn adjacency() {
        let l = square();
        let c = Flag::new(&l, vec![0, 1, 3]).unwrap();
        let d = Flag::new(&l, vec![0, 2, 3]).unwrap();
        assert!(!flags_adjacent(&c, &c));
        assert!(flags_adjacent(&c, &d));
        let b3 = boolean(3).unwrap();
        let f = boolean_flag(&b3, &[1, 2, 3]);
        let g = boolean_flag(&b3, &[2, 3, 1]);
        assert!(!flags_adjacent(&f, &g));
    }

    #[test]
    fn square_crossing_flags() {
        let l = square();
        let c = Flag::new(&l, vec![0, 1, 3]).unwrap();
        let d = Flag::new(&l, vec![0, 2, 3]).unwrap();
        assert_eq!(gallery_distance_bfs(&l, &c, &c, 10).unwrap(), 0);
        assert_eq!(gallery_distance_bfs(&l, &c, &d, 10).unwrap(), 1);
        let sigma = jordan_holder(&l, &c, &d).unwrap();
        assert_eq!(sigma.one_based(), vec![2, 1]);
        assert_eq!(sigma.inversions(), 1);
        assert_eq!(flag_distance(&l, &c, &d).unwrap(), 1);
    }

    #[test]
    fn boolean_three_opposite_flags() {
        let l = boolean(3).unwrap();
        let c = boolean_flag(&l, &[1, 2, 3]);
        let d = boolean_flag(&l, &[3, 2, 1]);
        assert_eq!(gallery_distance_bfs(&l, &c, &d, 100).unwrap(), 3);
        let sigma = jordan_holder(&l, &c, &d).unwrap();
        assert_eq!(sigma.one_based(), vec![3, 2, 1]);
        assert_eq!(sigma.inversions(), 3);
        let gallery = shortest_gallery(&l, &c, &d, 100).unwrap();
        assert_eq!(gallery.len(), 3);
        assert!(gallery.is_connected());
        assert_eq!(gallery.flags.first(), Some(&c));
        assert_eq!(gallery.flags.last(), Some(&d));
        // all six flags lie on one of the two length-3 paths around the hexagon
        assert_eq!(shortest_gallery_flags(&l, &c, &d, 100).unwrap().flags.len(), 6);
    }

    #[test]
    fn reversed_boolean_flags_reverse_sigma() {
        for n in 1..=5 {
            let l = boolean(n).unwrap();
            let forward: Vec<usize> = (1..=n).collect();
            let backward: Vec<usize> = (1..=n).rev().collect();
            let sigma = jordan_holder(&l, &boolean_flag(&l, &forward), &boolean_flag(&l, &backward)).unwrap();
            assert_eq!(sigma.one_based(), backward);
            assert_eq!(sigma.inversions(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn identical_flags_give_identity() {
        let l = partition(4).unwrap();
        for f in enumerate_flags(&l, 100).unwrap() {
            let sigma = jordan_holder(&l, &f, &f).unwrap();
            assert!(sigma.is_identity());
            assert_eq!(flag_distance(&l, &f, &f).unwrap(), 0);
        }
    }

    #[test]
    fn sigma_of_swapped_pair_is_inverse() {
        let l = partition(4).unwrap();
        let flags = enumerate_flags(&l, 100).unwrap();
        for c in &flags {
            for d in &flags {
                let cd = jordan_holder(&l, c, d).unwrap();
                let dc = jordan_holder(&l, d, c).unwrap();
                assert_eq!(cd.inverse(), dc);
            }
        }
    }

    #[test]
    fn non_bijection_is_reported() {
        assert_eq!(
            JhPermutation::from_images(vec![0, 0]).unwrap_err(),
            FlagError::NotABijection { sigma: vec![1, 1] }
        );
    }

    #[test]
    fn inversion_count_matches_definition() {
        assert_eq!(inversion_count(&[2, 0, 1]), 2);
        assert_eq!(inversion_count(&[]), 0);
    }
}
