//! Set families over `[n]` stored as bitmasks, with the antimatroid and
//! pre-antimatroid axiom checks.
//!
//! Element `i` of `[n]` (1-based, as printed) is bit `i - 1` of the mask.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

pub fn full_mask(ground: usize) -> u64 {
    if ground >= 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}

/// Formats a mask as a 1-based subset, e.g. `{1,3}`.
pub fn fmt_subset(mask: u64) -> String {
    let items: Vec<String> = subset_elements(mask).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// 1-based members of `mask`, ascending.
pub fn subset_elements(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask >> b & 1 == 1).map(|b| b + 1)
}

fn sort_key(mask: &u64) -> (u32, u64) {
    (mask.count_ones(), *mask)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("ground set of size {0} exceeds the supported maximum of {MAX_GROUND}")]
    GroundTooLarge(usize),
    #[error("set {} is not a subset of [{ground}]", fmt_subset(*.set))]
    OutOfGround { set: u64, ground: usize },
    #[error("element {element} is outside [{ground}]")]
    ElementOutOfGround { element: usize, ground: usize },
    #[error("not a pre-antimatroid: {0}")]
    NotPreAntimatroid(AxiomViolation),
    #[error("axiom violated: {0}")]
    AxiomViolation(AxiomViolation),
}

/// The first axiom failure found, with its witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    /// (A1) fails: the empty set is absent.
    MissingEmpty,
    /// (A1) fails: the ground set is absent.
    MissingGround,
    /// (A2) fails for this pair.
    NotUnionClosed { a: u64, b: u64 },
    /// (A3') fails.
    NoFullChain,
    /// (A3) fails for this member.
    NotAccessible { set: u64 },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomViolation::MissingEmpty => write!(f, "(A1) empty set missing"),
            AxiomViolation::MissingGround => write!(f, "(A1) ground set missing"),
            AxiomViolation::NotUnionClosed { a, b } => write!(
                f,
                "(A2) union of {} and {} missing",
                fmt_subset(a),
                fmt_subset(b)
            ),
            AxiomViolation::NoFullChain => write!(f, "(A3') no chain of full length"),
            AxiomViolation::NotAccessible { set } => {
                write!(f, "(A3) no element of {} can be removed", fmt_subset(set))
            }
        }
    }
}

/// A deduplicated family of subsets of `[ground]`, sorted by `(popcount, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SetFamily {
    ground: usize,
    sets: Vec<u64>,
}

impl SetFamily {
    pub fn new(ground: usize, sets: impl IntoIterator<Item = u64>) -> Result<Self, FamilyError> {
        if ground > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(ground));
        }
        let full = full_mask(ground);
        let mut sets: Vec<u64> = sets.into_iter().collect();
        if let Some(&set) = sets.iter().find(|&&s| s & !full != 0) {
            return Err(FamilyError::OutOfGround { set, ground });
        }
        sets.sort_unstable_by_key(sort_key);
        sets.dedup();
        Ok(SetFamily { ground, sets })
    }

    /// Builds from 1-based element lists.
    pub fn from_lists(ground: usize, lists: &[&[usize]]) -> Result<Self, FamilyError> {
        let mut sets = Vec::with_capacity(lists.len());
        for list in lists {
            let mut mask = 0u64;
            for &element in *list {
                if element == 0 || element > ground.min(MAX_GROUND) {
                    return Err(FamilyError::ElementOutOfGround { element, ground });
                }
                mask |= 1 << (element - 1);
            }
            sets.push(mask);
        }
        Self::new(ground, sets)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn full(&self) -> u64 {
        full_mask(self.ground)
    }

    pub fn contains(&self, set: u64) -> bool {
        self.sets.binary_search_by_key(&sort_key(&set), sort_key).is_ok()
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.ground == other.ground && self.sets.iter().all(|&s| other.contains(s))
    }

    /// Cover pairs of the inclusion order restricted to the family, as indices into [`Self::sets`].
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (i, &a) in self.sets.iter().enumerate() {
            for (j, &b) in self.sets.iter().enumerate() {
                let strictly_inside = |x: u64, y: u64| x != y && x & !y == 0;
                if strictly_inside(a, b)
                    && !self
                        .sets
                        .iter()
                        .any(|&c| strictly_inside(a, c) && strictly_inside(c, b))
                {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    fn check_a1(&self) -> Result<(), AxiomViolation> {
        if !self.contains(0) {
            return Err(AxiomViolation::MissingEmpty);
        }
        if !self.contains(self.full()) {
            return Err(AxiomViolation::MissingGround);
        }
        Ok(())
    }

    fn check_a2(&self) -> Result<(), AxiomViolation> {
        let members: HashSet<u64> = self.sets.iter().copied().collect();
        for (i, &a) in self.sets.iter().enumerate() {
            for &b in &self.sets[i + 1..] {
                if !members.contains(&(a | b)) {
                    return Err(AxiomViolation::NotUnionClosed { a, b });
                }
            }
        }
        Ok(())
    }

    /// (A1), (A2), (A3').
    pub fn check_preantimatroid(&self) -> Result<(), AxiomViolation> {
        self.check_a1()?;
        self.check_a2()?;
        if !self.unit_step_reachable().contains(&self.full()) {
            return Err(AxiomViolation::NoFullChain);
        }
        Ok(())
    }

    /// (A1), (A2), (A3).
    pub fn check_antimatroid(&self) -> Result<(), AxiomViolation> {
        self.check_a1()?;
        self.check_a2()?;
        let members: HashSet<u64> = self.sets.iter().copied().collect();
        for &set in &self.sets {
            if set != 0 && !(0..64).any(|b| set >> b & 1 == 1 && members.contains(&(set & !(1 << b)))) {
                return Err(AxiomViolation::NotAccessible { set });
            }
        }
        Ok(())
    }

    pub fn is_preantimatroid(&self) -> bool {
        self.check_preantimatroid().is_ok()
    }

    pub fn is_antimatroid(&self) -> bool {
        self.check_antimatroid().is_ok()
    }

    // Members reachable from the empty set by adding one element at a time.
    fn unit_step_reachable(&self) -> HashSet<u64> {
        let members: HashSet<u64> = self.sets.iter().copied().collect();
        let mut reached = HashSet::new();
        if !members.contains(&0) {
            return reached;
        }
        reached.insert(0);
        // sets are sorted by cardinality, so one pass suffices
        for &set in &self.sets {
            if set != 0 && (0..64).any(|b| set >> b & 1 == 1 && reached.contains(&(set & !(1 << b)))) {
                reached.insert(set);
            }
        }
        reached
    }

    // Members from which the ground set is reachable by adding one element at a time.
    fn unit_step_coreachable(&self) -> HashSet<u64> {
        let full = self.full();
        let members: HashSet<u64> = self.sets.iter().copied().collect();
        let mut reached = HashSet::new();
        if !members.contains(&full) {
            return reached;
        }
        reached.insert(full);
        for &set in self.sets.iter().rev() {
            if set != full
                && (0..self.ground).any(|b| set >> b & 1 == 0 && reached.contains(&(set | 1 << b)))
            {
                reached.insert(set);
            }
        }
        reached
    }

    /// The union of all chains of length `ground`, i.e. `K*`.
    ///
    /// A chain of length `n` in `2^[n]` grows by exactly one element per step,
    /// so a member lies on one iff it is reachable from `∅` and reaches `[n]`
    /// through single-element steps inside the family.
    pub fn extract_antimatroid(&self) -> Result<SetFamily, FamilyError> {
        self.check_preantimatroid()
            .map_err(FamilyError::NotPreAntimatroid)?;
        let forward = self.unit_step_reachable();
        let backward = self.unit_step_coreachable();
        let kstar = SetFamily {
            ground: self.ground,
            sets: self
                .sets
                .iter()
                .copied()
                .filter(|s| forward.contains(s) && backward.contains(s))
                .collect(),
        };
        kstar
            .check_antimatroid()
            .map_err(FamilyError::AxiomViolation)?;
        Ok(kstar)
    }

    /// 1-based element lists, in family order.
    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&s| subset_elements(s).collect()).collect()
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.sets.iter().map(|&s| fmt_subset(s)).collect();
        write!(f, "[{}]", items.join(", "))
    }
}
