//! Finite lattices given by their cover relation.
//!
//! A [`Lattice`] is built once from a list of cover pairs and is immutable
//! afterwards. Construction derives the order relation (as bitset rows), the
//! rank function, and full join/meet tables, rejecting anything that is not a
//! lattice.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Dense element id in `0..element_count`.
pub type ElementId = usize;

/// Default refusal threshold for [`Lattice::new`]; join and meet tables are quadratic.
pub const DEFAULT_MAX_ELEMENTS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Join => f.write_str("join"),
            BoundKind::Meet => f.write_str("meet"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{element_count} elements exceeds the limit of {limit}")]
    TooLarge { element_count: usize, limit: usize },
    #[error("cover ({lower}, {upper}) references an id outside 0..{element_count}")]
    IdOutOfRange {
        lower: ElementId,
        upper: ElementId,
        element_count: usize,
    },
    #[error("cover ({lower}, {upper}) is a self-pair")]
    SelfPair { lower: ElementId, upper: ElementId },
    #[error("covers are cyclic: ({lower}, {upper}) lies on a cycle")]
    NotAPoset { lower: ElementId, upper: ElementId },
    #[error("cover ({lower}, {upper}) is repeated or implied by transitivity")]
    RedundantCover { lower: ElementId, upper: ElementId },
    #[error("more than one minimal element: {0:?}")]
    MultipleBottoms(Vec<ElementId>),
    #[error("elements {p} and {q} have no unique {kind}")]
    NoUniqueBound {
        p: ElementId,
        q: ElementId,
        kind: BoundKind,
    },
    #[error("{lo} is not below {hi}")]
    NotComparable { lo: ElementId, hi: ElementId },
}

impl LatticeError {
    /// The cover pair this error is about, if any.
    pub fn offending_pair(&self) -> Option<(ElementId, ElementId)> {
        match *self {
            LatticeError::IdOutOfRange { lower, upper, .. }
            | LatticeError::SelfPair { lower, upper }
            | LatticeError::NotAPoset { lower, upper }
            | LatticeError::RedundantCover { lower, upper } => Some((lower, upper)),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_elements: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// The closed interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: ElementId,
    pub hi: ElementId,
    pub members: FixedBitSet,
}

impl Interval {
    pub fn contains(&self, z: ElementId) -> bool {
        self.members.contains(z)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone)]
pub struct Lattice {
    element_count: usize,
    covers: Vec<(ElementId, ElementId)>,
    upper_covers: Vec<Vec<ElementId>>,
    lower_covers: Vec<Vec<ElementId>>,
    // up[p] = { z | p <= z }, down[p] = { z | z <= p }
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    join: Vec<ElementId>,
    meet: Vec<ElementId>,
    rank: Vec<usize>,
    bottom: ElementId,
    top: ElementId,
    semimodular: bool,
    labels: Vec<String>,
}

impl Lattice {
    /// Builds and validates a lattice from its cover pairs `(lower, upper)`.
    pub fn new(element_count: usize, covers: &[(ElementId, ElementId)]) -> Result<Self, LatticeError> {
        Self::with_options(element_count, covers, &BuildOptions::default())
    }

    pub fn with_options(
        element_count: usize,
        covers: &[(ElementId, ElementId)],
        options: &BuildOptions,
    ) -> Result<Self, LatticeError> {
        let m = element_count;
        if m == 0 {
            return Err(LatticeError::Empty);
        }
        if m > options.max_elements {
            return Err(LatticeError::TooLarge {
                element_count: m,
                limit: options.max_elements,
            });
        }
        for &(lower, upper) in covers {
            if lower >= m || upper >= m {
                return Err(LatticeError::IdOutOfRange {
                    lower,
                    upper,
                    element_count: m,
                });
            }
            if lower == upper {
                return Err(LatticeError::SelfPair { lower, upper });
            }
        }

        let mut upper_covers = vec![Vec::new(); m];
        let mut lower_covers = vec![Vec::new(); m];
        for &(lower, upper) in covers {
            upper_covers[lower].push(upper);
            lower_covers[upper].push(lower);
        }
        for list in upper_covers.iter_mut().chain(lower_covers.iter_mut()) {
            list.sort_unstable();
        }
        for (lower, list) in upper_covers.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(LatticeError::RedundantCover { lower, upper: w[0] });
            }
        }

        let order = topological_order(&upper_covers, &lower_covers)?;

        let mut up: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(m); m];
        for &p in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(m);
            row.insert(p);
            for &q in &upper_covers[p] {
                row.union_with(&up[q]);
            }
            up[p] = row;
        }
        // a cover (p, q) is redundant when q is reachable through another upper cover of p
        for (p, uppers) in upper_covers.iter().enumerate() {
            for &q in uppers {
                if uppers.iter().any(|&c| c != q && up[c].contains(q)) {
                    return Err(LatticeError::RedundantCover { lower: p, upper: q });
                }
            }
        }
        let mut down: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(m); m];
        for (p, row) in up.iter().enumerate() {
            for q in row.ones() {
                down[q].insert(p);
            }
        }

        let minimal: Vec<ElementId> = (0..m).filter(|&p| lower_covers[p].is_empty()).collect();
        if minimal.len() > 1 {
            return Err(LatticeError::MultipleBottoms(minimal));
        }
        let bottom = minimal[0];

        let mut rank = vec![0usize; m];
        for &p in &order {
            for &q in &upper_covers[p] {
                rank[q] = rank[q].max(rank[p] + 1);
            }
        }

        let mut position = vec![0usize; m];
        for (i, &p) in order.iter().enumerate() {
            position[p] = i;
        }
        let join = bound_table(&up, &position, BoundKind::Join)?;
        let meet = bound_table(&down, &position, BoundKind::Meet)?;
        let top = join[bottom * m + order[m - 1]];

        let mut sorted_covers: Vec<(ElementId, ElementId)> = covers.to_vec();
        sorted_covers.sort_unstable();

        let mut lattice = Lattice {
            element_count: m,
            covers: sorted_covers,
            upper_covers,
            lower_covers,
            up,
            down,
            join,
            meet,
            rank,
            bottom,
            top,
            semimodular: false,
            labels: (0..m).map(|i| i.to_string()).collect(),
        };
        let (by_rank, by_covers) = lattice.semimodularity();
        lattice.semimodular = by_rank && by_covers;
        Ok(lattice)
    }

    /// Attaches display labels, one per element.
    ///
    /// # Panics
    ///
    /// If the label count differs from the element count.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.element_count, "one label per element");
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, p: ElementId) -> &str {
        &self.labels[p]
    }

    pub fn element_count(&self) -> usize {
        self.element_count
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.element_count
    }

    /// Cover pairs sorted by `(lower, upper)`.
    pub fn covers(&self) -> &[(ElementId, ElementId)] {
        &self.covers
    }

    pub fn upper_covers(&self, p: ElementId) -> &[ElementId] {
        &self.upper_covers[p]
    }

    pub fn lower_covers(&self, p: ElementId) -> &[ElementId] {
        &self.lower_covers[p]
    }

    /// True iff `hi` covers `lo`.
    pub fn is_cover(&self, lo: ElementId, hi: ElementId) -> bool {
        self.upper_covers[lo].binary_search(&hi).is_ok()
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    /// Rank of the top element.
    pub fn rank_of_lattice(&self) -> usize {
        self.rank[self.top]
    }

    /// Length of the longest chain from the bottom to `p`.
    pub fn rank(&self, p: ElementId) -> usize {
        self.rank[p]
    }

    pub fn leq(&self, p: ElementId, q: ElementId) -> bool {
        self.up[p].contains(q)
    }

    pub fn lt(&self, p: ElementId, q: ElementId) -> bool {
        p != q && self.leq(p, q)
    }

    pub fn comparable(&self, p: ElementId, q: ElementId) -> bool {
        self.leq(p, q) || self.leq(q, p)
    }

    pub fn join(&self, p: ElementId, q: ElementId) -> ElementId {
        self.join[p * self.element_count + q]
    }

    pub fn meet(&self, p: ElementId, q: ElementId) -> ElementId {
        self.meet[p * self.element_count + q]
    }

    /// `{ z | p <= z }`
    pub fn up_set(&self, p: ElementId) -> &FixedBitSet {
        &self.up[p]
    }

    /// `{ z | z <= p }`
    pub fn down_set(&self, p: ElementId) -> &FixedBitSet {
        &self.down[p]
    }

    pub fn interval(&self, lo: ElementId, hi: ElementId) -> Result<Interval, LatticeError> {
        if !self.leq(lo, hi) {
            return Err(LatticeError::NotComparable { lo, hi });
        }
        let mut members = self.up[lo].clone();
        members.intersect_with(&self.down[hi]);
        Ok(Interval { lo, hi, members })
    }

    /// Verdicts of the two semimodularity tests: the rank inequality
    /// `r(p) + r(q) >= r(p ∧ q) + r(p ∨ q)` over all pairs, and the cover
    /// condition "if a covers a ∧ b then a ∨ b covers b" over all pairs.
    pub fn semimodularity(&self) -> (bool, bool) {
        let m = self.element_count;
        let mut by_rank = true;
        let mut by_covers = true;
        for p in 0..m {
            for q in 0..m {
                let (j, w) = (self.join(p, q), self.meet(p, q));
                if self.rank[p] + self.rank[q] < self.rank[j] + self.rank[w] {
                    by_rank = false;
                }
                if self.is_cover(w, p) && !self.is_cover(q, j) {
                    by_covers = false;
                }
            }
        }
        (by_rank, by_covers)
    }

    /// Upper semimodularity. Both characterisations are evaluated at build
    /// time; debug builds assert that they agree.
    pub fn is_semimodular(&self) -> bool {
        debug_assert!({
            let (a, b) = self.semimodularity();
            a == b
        }, "rank and cover characterisations of semimodularity disagree");
        self.semimodular
    }

    /// Definitional test: `(x ∨ p) ∧ q = x ∨ (p ∧ q)` for every `x <= q`.
    pub fn is_modular_pair(&self, p: ElementId, q: ElementId) -> bool {
        let verdict = self.is_modular_pair_by_definition(p, q);
        if cfg!(debug_assertions) && self.semimodular {
            assert_eq!(
                verdict,
                self.is_modular_pair_by_rank(p, q),
                "modular pair ({p}, {q}): rank shortcut disagrees with definition"
            );
        }
        verdict
    }

    pub(crate) fn is_modular_pair_by_definition(&self, p: ElementId, q: ElementId) -> bool {
        let pq = self.meet(p, q);
        self.down[q]
            .ones()
            .all(|x| self.meet(self.join(x, p), q) == self.join(x, pq))
    }

    /// Rank equality `r(p) + r(q) = r(p ∧ q) + r(p ∨ q)`. Characterises
    /// modular pairs only when the lattice is semimodular.
    pub fn is_modular_pair_by_rank(&self, p: ElementId, q: ElementId) -> bool {
        self.rank[p] + self.rank[q] == self.rank[self.meet(p, q)] + self.rank[self.join(p, q)]
    }

    /// First pair `(p, q)` that is not modular, in id order.
    pub fn non_modular_pair(&self) -> Option<(ElementId, ElementId)> {
        let m = self.element_count;
        (0..m)
            .flat_map(|p| (0..m).map(move |q| (p, q)))
            .find(|&(p, q)| !self.is_modular_pair(p, q))
    }

    pub fn is_modular_lattice(&self) -> bool {
        self.non_modular_pair().is_none()
    }

    /// Closure of `seed` under unrestricted join and meet.
    pub fn sublattice_closure(&self, seed: &FixedBitSet) -> FixedBitSet {
        let mut members: Vec<ElementId> = seed.ones().collect();
        let mut set = seed.clone();
        let mut queue: VecDeque<ElementId> = members.iter().copied().collect();
        while let Some(p) = queue.pop_front() {
            let mut i = 0;
            while i < members.len() {
                let q = members[i];
                for r in [self.join(p, q), self.meet(p, q)] {
                    if !set.put(r) {
                        members.push(r);
                        queue.push_back(r);
                    }
                }
                i += 1;
            }
        }
        set
    }

    /// First triple `(x, y, z)` of `subset` with `x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_violation(
        &self,
        subset: &FixedBitSet,
    ) -> Option<(ElementId, ElementId, ElementId)> {
        let members: Vec<ElementId> = subset.ones().collect();
        for &x in &members {
            for &y in &members {
                for &z in &members {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// First pair of `subset` whose join lies outside it.
    pub fn join_closure_violation(&self, subset: &FixedBitSet) -> Option<(ElementId, ElementId)> {
        let members: Vec<ElementId> = subset.ones().collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !subset.contains(self.join(u, v)) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Cover pairs of the induced subposet on `subset`.
    pub fn hasse_of_subset(&self, subset: &FixedBitSet) -> Vec<(ElementId, ElementId)> {
        let members: Vec<ElementId> = subset.ones().collect();
        let mut edges = Vec::new();
        for &u in &members {
            for &v in &members {
                if self.lt(u, v)
                    && !members
                        .iter()
                        .any(|&w| self.lt(u, w) && self.lt(w, v))
                {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.element_count)
    }

    pub fn set_of(&self, elems: impl IntoIterator<Item = ElementId>) -> FixedBitSet {
        let mut set = self.empty_set();
        set.extend(elems);
        set
    }
}

fn topological_order(
    upper_covers: &[Vec<ElementId>],
    lower_covers: &[Vec<ElementId>],
) -> Result<Vec<ElementId>, LatticeError> {
    let m = upper_covers.len();
    let mut indegree: Vec<usize> = lower_covers.iter().map(Vec::len).collect();
    let mut queue: VecDeque<ElementId> = (0..m).filter(|&p| indegree[p] == 0).collect();
    let mut order = Vec::with_capacity(m);
    while let Some(p) = queue.pop_front() {
        order.push(p);
        for &q in &upper_covers[p] {
            indegree[q] -= 1;
            if indegree[q] == 0 {
                queue.push_back(q);
            }
        }
    }
    if order.len() == m {
        return Ok(order);
    }
    // Every unprocessed element has an unprocessed lower cover; walking those
    // backwards must revisit an element, closing a cycle.
    let mut seen = vec![false; m];
    let mut p = (0..m).find(|&p| indegree[p] > 0).expect("an unprocessed element");
    loop {
        seen[p] = true;
        let lower = *lower_covers[p]
            .iter()
            .find(|&&l| indegree[l] > 0)
            .expect("unprocessed lower cover");
        if seen[lower] {
            return Err(LatticeError::NotAPoset { lower, upper: p });
        }
        p = lower;
    }
}

fn bound_table(
    rows: &[FixedBitSet],
    position: &[usize],
    kind: BoundKind,
) -> Result<Vec<ElementId>, LatticeError> {
    let m = rows.len();
    let mut table = vec![0; m * m];
    let mut common = FixedBitSet::with_capacity(m);
    for p in 0..m {
        for q in p..m {
            common.clone_from(&rows[p]);
            common.intersect_with(&rows[q]);
            // earliest (join) or latest (meet) in topological order is extremal in `common`
            let candidate = match kind {
                BoundKind::Join => common.ones().min_by_key(|&z| position[z]),
                BoundKind::Meet => common.ones().max_by_key(|&z| position[z]),
            };
            let bound = candidate
                .filter(|&z| common.is_subset(&rows[z]))
                .ok_or(LatticeError::NoUniqueBound { p, q, kind })?;
            table[p * m + q] = bound;
            table[q * m + p] = bound;
        }
    }
    Ok(table)
}
