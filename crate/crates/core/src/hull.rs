//! Modular convex hulls of two flags.
//!
//! A subset is modular convex when it contains `p ∨ q` and `p ∧ q` for every
//! modular pair `(p, q)` of its elements. For two flags `C`, `D` of a
//! semimodular lattice of rank `n` the hull of `C ∪ D` is built level by level
//! from the top of `D` downwards:
//!
//! ```text
//! M_n = { d_{n-1}, d_n }
//! M_i = M_{i+1} ∪ { q ∧ z_i | q ∈ [d_i, z'_i] ∩ M_{i+1}, (q, z_i) modular }
//! ```
//!
//! with `z_i = c_{σ(i)-1} ∨ d_{i-1}` and `z'_i = c_{σ(i)} ∨ d_i`, where `σ` is
//! the Jordan-Hölder permutation of the pair. The map
//! `u ↦ [n] ∖ { i | z_i >= u }` then embeds the hull into `2^[n]` as a
//! union-closed family.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::family::{full_mask, AxiomViolation, FamilyError, SetFamily, MAX_GROUND};
use crate::flags::{jordan_holder, Flag, FlagError, JhPermutation};
use crate::lattice::{ElementId, Lattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageDefect {
    NotInjective { u: ElementId, v: ElementId },
    RankMismatch { u: ElementId, size: usize, rank: usize },
    OrderMismatch { u: ElementId, v: ElementId },
    Axiom(AxiomViolation),
}

impl fmt::Display for ImageDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageDefect::NotInjective { u, v } => write!(f, "{u} and {v} share an image"),
            ImageDefect::RankMismatch { u, size, rank } => {
                write!(f, "image of {u} has {size} elements but rank {rank}")
            }
            ImageDefect::OrderMismatch { u, v } => {
                write!(f, "order between {u} and {v} is not preserved")
            }
            ImageDefect::Axiom(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HullError {
    #[error("lattice is not semimodular")]
    NotSemimodular,
    #[error("lattice rank {0} exceeds the {MAX_GROUND} positions of a subset mask")]
    RankTooLarge(usize),
    #[error(transparent)]
    Flag(#[from] FlagError),
    #[error("element {0} is not in the hull")]
    NotInHull(ElementId),
    #[error("hull image is not a pre-antimatroid: {0}")]
    AxiomViolation(ImageDefect),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("identity failed: {0}")]
    Inconsistent(String),
}

fn require_semimodular(lattice: &Lattice) -> Result<(), HullError> {
    if lattice.is_semimodular() {
        Ok(())
    } else {
        Err(HullError::NotSemimodular)
    }
}

/// Least modular convex superset of `seed`, by saturation.
///
/// Modular pairs are tested by definition, in both orders, so this does not
/// rely on the rank criterion the recursive construction uses.
pub fn mconv_fixpoint(lattice: &Lattice, seed: &FixedBitSet) -> FixedBitSet {
    let mut set = seed.clone();
    let mut members: Vec<ElementId> = seed.ones().collect();
    let mut pending: VecDeque<ElementId> = members.iter().copied().collect();
    while let Some(p) = pending.pop_front() {
        let mut i = 0;
        while i < members.len() {
            let q = members[i];
            i += 1;
            if p == q
                || !(lattice.is_modular_pair_by_definition(p, q)
                    || lattice.is_modular_pair_by_definition(q, p))
            {
                continue;
            }
            for r in [lattice.join(p, q), lattice.meet(p, q)] {
                if !set.put(r) {
                    members.push(r);
                    pending.push_back(r);
                }
            }
        }
    }
    set
}

/// `z_i` and `z'_i`, stored 0-based: `z[i - 1]` is `z_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZArrays {
    pub z: Vec<ElementId>,
    pub z_prime: Vec<ElementId>,
}

/// `z_i = c_{σ(i)-1} ∨ d_{i-1}` and `z'_i = c_{σ(i)} ∨ d_i`.
///
/// Also checks `c_{σ(i)} ∨ d_i = c_{σ(i)} ∨ d_{i-1}`, that `z_i` is the
/// largest member of the chain `C ∨ d_{i-1}` not above `d_i`, and that
/// `z'_i` covers `z_i`.
pub fn compute_z(
    lattice: &Lattice,
    c: &Flag,
    d: &Flag,
) -> Result<(ZArrays, JhPermutation), HullError> {
    require_semimodular(lattice)?;
    let sigma = jordan_holder(lattice, c, d)?;
    let n = d.rank();
    let mut z = Vec::with_capacity(n);
    let mut z_prime = Vec::with_capacity(n);
    for i in 1..=n {
        let j = sigma.apply(i);
        let zi = lattice.join(c.at(j - 1), d.at(i - 1));
        let zpi = lattice.join(c.at(j), d.at(i));
        if zpi != lattice.join(c.at(j), d.at(i - 1)) {
            return Err(HullError::Inconsistent(format!(
                "c_{j} ∨ d_{i} != c_{j} ∨ d_{}",
                i - 1
            )));
        }
        if lattice.leq(d.at(i), zi) || !lattice.leq(d.at(i), zpi) {
            return Err(HullError::Inconsistent(format!(
                "z_{i} is not the largest element of C ∨ d_{} below no d_{i}",
                i - 1
            )));
        }
        if !lattice.is_cover(zi, zpi) {
            return Err(HullError::Inconsistent(format!("z'_{i} does not cover z_{i}")));
        }
        z.push(zi);
        z_prime.push(zpi);
    }
    Ok((ZArrays { z, z_prime }, sigma))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullResult {
    pub members: FixedBitSet,
    pub z: Vec<ElementId>,
    pub z_prime: Vec<ElementId>,
    pub sigma: JhPermutation,
    /// `levels[i - 1]` is `M_i`; empty when the lattice has rank 0.
    pub levels: Vec<FixedBitSet>,
}

impl HullResult {
    pub fn rank(&self) -> usize {
        self.z.len()
    }

    pub fn contains(&self, u: ElementId) -> bool {
        self.members.contains(u)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> Vec<ElementId> {
        self.members.ones().collect()
    }
}

/// The hull of `C ∪ D` as `M_1` of the level recursion.
pub fn mconv_recursive(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<HullResult, HullError> {
    let hull = level_recursion(lattice, c, d)?;
    if cfg!(debug_assertions) {
        let mut seed = lattice.set_of(c.elems().iter().copied());
        seed.extend(d.elems().iter().copied());
        assert_eq!(
            hull.members,
            mconv_fixpoint(lattice, &seed),
            "recursive hull disagrees with the fixpoint closure for {c} / {d}"
        );
    }
    Ok(hull)
}

/// The level recursion alone, without the debug cross-check against the
/// fixpoint closure. The verifier compares the two itself.
pub(crate) fn level_recursion(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<HullResult, HullError> {
    let (ZArrays { z, z_prime }, sigma) = compute_z(lattice, c, d)?;
    let n = d.rank();
    if n == 0 {
        return Ok(HullResult {
            members: lattice.set_of([lattice.bottom()]),
            z,
            z_prime,
            sigma,
            levels: Vec::new(),
        });
    }
    // the base step quantifies over [d_1, c_{σ(1)}]; that interval must be [d_1, z'_1]
    if z_prime[0] != c.at(sigma.apply(1)) {
        return Err(HullError::Inconsistent("z'_1 != c_{σ(1)}".into()));
    }

    let mut levels = vec![FixedBitSet::new(); n];
    let mut current = lattice.set_of([d.at(n - 1), d.at(n)]);
    levels[n - 1] = current.clone();
    for i in (1..n).rev() {
        let (zi, zpi) = (z[i - 1], z_prime[i - 1]);
        let added: Vec<ElementId> = current
            .ones()
            .filter(|&q| lattice.leq(d.at(i), q) && lattice.leq(q, zpi))
            .filter(|&q| lattice.is_modular_pair_by_rank(q, zi))
            .map(|q| lattice.meet(q, zi))
            .collect();
        current.extend(added);
        levels[i - 1] = current.clone();
    }

    Ok(HullResult {
        members: current,
        z,
        z_prime,
        sigma,
        levels,
    })
}

/// `φ(u) = { i ∈ [n] | z_i >= u }` as a mask (bit `i - 1` for `i`).
pub fn phi(lattice: &Lattice, hull: &HullResult, u: ElementId) -> Result<u64, HullError> {
    if hull.rank() > MAX_GROUND {
        return Err(HullError::RankTooLarge(hull.rank()));
    }
    if u >= lattice.element_count() || !hull.contains(u) {
        return Err(HullError::NotInHull(u));
    }
    Ok(hull
        .z
        .iter()
        .enumerate()
        .filter(|&(_, &zi)| lattice.leq(u, zi))
        .fold(0u64, |mask, (i, _)| mask | 1 << i))
}

/// `[n] ∖ φ(u)`.
pub fn phi_bar(lattice: &Lattice, hull: &HullResult, u: ElementId) -> Result<u64, HullError> {
    Ok(full_mask(hull.rank()) ^ phi(lattice, hull, u)?)
}

/// `(u, [n] ∖ φ(u))` for every hull member, in id order.
pub fn phi_bar_table(lattice: &Lattice, hull: &HullResult) -> Result<Vec<(ElementId, u64)>, HullError> {
    hull.members
        .ones()
        .map(|u| Ok((u, phi_bar(lattice, hull, u)?)))
        .collect()
}

/// The image of the hull under `u ↦ [n] ∖ φ(u)`.
///
/// Checks that the map is injective, preserves and reflects order, sends
/// each element to a set of size equal to its rank, and that the image
/// satisfies (A1), (A2) and (A3').
pub fn hull_as_preantimatroid(lattice: &Lattice, hull: &HullResult) -> Result<SetFamily, HullError> {
    let defect = |d| Err(HullError::AxiomViolation(d));
    let table = phi_bar_table(lattice, hull)?;
    let mut owner: HashMap<u64, ElementId> = HashMap::with_capacity(table.len());
    for &(u, image) in &table {
        let size = image.count_ones() as usize;
        if size != lattice.rank(u) {
            return defect(ImageDefect::RankMismatch {
                u,
                size,
                rank: lattice.rank(u),
            });
        }
        if let Some(&v) = owner.get(&image) {
            return defect(ImageDefect::NotInjective { u: v, v: u });
        }
        owner.insert(image, u);
    }
    for &(u, a) in &table {
        for &(v, b) in &table {
            if lattice.leq(u, v) != (a & !b == 0) {
                return defect(ImageDefect::OrderMismatch { u, v });
            }
        }
    }
    let family = SetFamily::new(hull.rank(), table.iter().map(|&(_, s)| s))?;
    if let Err(v) = family.check_preantimatroid() {
        return defect(ImageDefect::Axiom(v));
    }
    Ok(family)
}

/// Pieces of the first recursion step, computed independently of the
/// level recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseStep {
    /// Largest index with `c_k` not above `d_1`.
    pub k: usize,
    /// Hull of `C ∨ d_1` and `D ∖ {0}`.
    pub upper_hull: FixedBitSet,
    /// `{ c_k ∧ q | q ∈ [d_1, c_{k+1}] ∩ upper_hull, (c_k, q) modular }`.
    pub delta: FixedBitSet,
}

impl BaseStep {
    pub fn union(&self) -> FixedBitSet {
        let mut all = self.upper_hull.clone();
        all.union_with(&self.delta);
        all
    }
}

/// Splits the hull of `C ∪ D` into the hull one level up and the set `Δ`.
/// Both parts use the fixpoint closure; `None` for rank 0.
pub fn base_step(lattice: &Lattice, c: &Flag, d: &Flag) -> Result<Option<BaseStep>, HullError> {
    require_semimodular(lattice)?;
    let n = d.rank();
    if n == 0 {
        return Ok(None);
    }
    let d1 = d.at(1);
    let k = (0..=n)
        .rev()
        .find(|&i| !lattice.leq(d1, c.at(i)))
        .expect("c_0 is the bottom and d_1 is not");
    let mut seed = lattice.set_of(c.elems().iter().map(|&ci| lattice.join(ci, d1)));
    seed.extend(d.elems()[1..].iter().copied());
    let upper_hull = mconv_fixpoint(lattice, &seed);
    let ck = c.at(k);
    let ck1 = c.at(k + 1);
    let delta = lattice.set_of(
        upper_hull
            .ones()
            .filter(|&q| lattice.leq(d1, q) && lattice.leq(q, ck1))
            .filter(|&q| lattice.is_modular_pair_by_definition(ck, q))
            .map(|q| lattice.meet(ck, q)),
    );
    Ok(Some(BaseStep {
        k,
        upper_hull,
        delta,
    }))
}
