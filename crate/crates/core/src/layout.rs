//! Real-slot selection on a circuit.
//!
//! Each vertex occurs `d` times on its component's circuit. A layout marks one
//! occurrence per vertex as *real* (the rest are imaginary), names the real
//! slots `v_1, ..., v_t` in zigzag order clockwise, and cuts the circuit into
//! `t` real-to-real paths. The odd components additionally need some of those
//! paths to have prescribed lengths, described by a [`GapSpec`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::euler::{euler_tour, Circuit, EulerError};
use crate::graph::{ComponentInfo, Graph, Parity};
use crate::x0::{small_regime_limit, X0Result};

/// Number of real slots `t` must be at least this for the zigzag pattern.
const MIN_REALS_ODD: usize = 3;
const MIN_REALS_EVEN: usize = 4;

/// Smallest admissible `|P_{2,4}|` on the first circuit once `k >= 9`.
/// Below it the source `v_{1,3}`, whose sum is `-(|P_{2,4}| + 5)`, collides
/// with the flow vertex `v_{9,1}`, whose sum is `-9`.
pub const MIN_FIRST_P24_FROM_K9: usize = 5;

/// Cap on search nodes per circuit before the tour is given up on.
const NODE_BUDGET: usize = 200_000;

pub const DEFAULT_RETRY_BUDGET: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("a {parity} circuit needs more real vertices than {t}")]
    TooFewReals { t: usize, parity: Parity },
    #[error("k = {k} exceeds 5d + 4 = {limit}, so x0 is required")]
    MissingX0 { k: usize, limit: usize },
    #[error("component {component} cannot satisfy its gap spec: {reason}")]
    Infeasible { component: usize, reason: String },
    #[error("no real-slot selection on this tour of component {component}")]
    NoSelection { component: usize },
    #[error("component {component}: no valid selection within {attempts} tours")]
    BudgetExhausted { component: usize, attempts: usize },
    #[error(transparent)]
    Euler(#[from] EulerError),
}

/// Name `P_{lo,hi}` of the path between real vertices `v_lo` and `v_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PathName {
    pub lo: usize,
    pub hi: usize,
}

impl PathName {
    pub fn new(a: usize, b: usize) -> Self {
        Self {
            lo: a.min(b),
            hi: a.max(b),
        }
    }
}

impl fmt::Display for PathName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{},{}", self.lo, self.hi)
    }
}

/// Length requirement on a single path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapConstraint {
    Free,
    Exact(usize),
    AtLeast(usize),
}

impl GapConstraint {
    pub fn min_len(self) -> usize {
        match self {
            GapConstraint::Free => 1,
            GapConstraint::Exact(n) | GapConstraint::AtLeast(n) => n.max(1),
        }
    }

    pub fn admits(self, len: usize) -> bool {
        match self {
            GapConstraint::Free => len >= 1,
            GapConstraint::Exact(n) => len == n,
            GapConstraint::AtLeast(n) => len >= n.max(1),
        }
    }
}

/// Required path lengths for one circuit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GapSpec {
    pub exact: BTreeMap<PathName, usize>,
    pub minimum: BTreeMap<PathName, usize>,
}

impl GapSpec {
    pub fn is_empty(&self) -> bool {
        self.exact.is_empty() && self.minimum.is_empty()
    }

    pub fn constraint(&self, name: PathName) -> GapConstraint {
        match (self.exact.get(&name), self.minimum.get(&name)) {
            (Some(&n), _) => GapConstraint::Exact(n),
            (None, Some(&n)) => GapConstraint::AtLeast(n),
            (None, None) => GapConstraint::Free,
        }
    }

    pub fn names(&self) -> BTreeSet<PathName> {
        self.exact
            .keys()
            .chain(self.minimum.keys())
            .copied()
            .collect()
    }
}

impl fmt::Display for GapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, len) in &self.exact {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{name}={len}")?;
            first = false;
        }
        for (name, len) in &self.minimum {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{name}>={len}")?;
            first = false;
        }
        if first {
            f.write_str("-")?;
        }
        Ok(())
    }
}

/// Path-length requirements for circuit `i` when there are `k` odd circuits.
///
/// Even circuits (`i > k`) are unconstrained. On top of the per-k table,
/// `|P^1_{1,2}| = |P^1_{1,3}| = 1` is imposed whenever `k >= 1`.
pub fn gap_spec(
    i: usize,
    k: usize,
    d: usize,
    x0: Option<&X0Result>,
) -> Result<GapSpec, LayoutError> {
    let mut spec = GapSpec::default();
    let limit = small_regime_limit(d);
    if k > limit && x0.is_none() {
        return Err(LayoutError::MissingX0 { k, limit });
    }
    if i == 0 || i > k {
        return Ok(spec);
    }

    let p = PathName::new;
    if i == 1 {
        spec.exact.insert(p(1, 2), 1);
        spec.exact.insert(p(1, 3), 1);
        let floor = match k {
            0..=6 => None,
            7 | 8 => Some(3),
            9 => Some(4),
            _ if k <= limit => Some(5 * d - 6),
            _ => x0.map(|x| (2 * d - 2) * x.x0 + 5 * d - 6),
        };
        if let Some(floor) = floor {
            let floor = if k >= 9 {
                floor.max(MIN_FIRST_P24_FROM_K9)
            } else {
                floor
            };
            spec.minimum.insert(p(2, 4), floor);
        }
    }
    if (3..=9).contains(&i) {
        spec.exact.insert(p(2, 4), i - 2);
    }
    if i == 9 {
        spec.exact.insert(p(3, 5), 1);
    }
    if i >= 10 {
        spec.exact.insert(p(1, 3), 1);
        spec.exact.insert(p(1, 2), i - 8);
    }
    Ok(spec)
}

/// Clockwise sequence of real-vertex names around a circuit with `t` reals.
///
/// Odd: `1, 2, 4, ..., t-1, t, t-2, ..., 5, 3`.
/// Even: `1, 2, 4, ..., t, t-1, t-3, ..., 5, 3`.
pub fn zigzag_names(t: usize, parity: Parity) -> Result<Vec<usize>, LayoutError> {
    let min = match parity {
        Parity::Odd => MIN_REALS_ODD,
        Parity::Even => MIN_REALS_EVEN,
    };
    if t < min || Parity::of(t) != parity {
        return Err(LayoutError::TooFewReals { t, parity });
    }
    let mut names = vec![1, 2];
    names.extend((4..=t).step_by(2));
    let top = if parity == Parity::Odd { t } else { t - 1 };
    names.extend((3..=top).rev().step_by(2));
    Ok(names)
}

/// Chosen real slots of one circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub circuit: Circuit,
    pub parity: Parity,
    /// Real slot of each clockwise rank; rank 0 holds `v_1`.
    pub real_slots: Vec<usize>,
    /// Name `j` of the real vertex at each rank.
    pub names: Vec<usize>,
    /// Clockwise distance from rank `r` to rank `r + 1`.
    pub gaps: Vec<usize>,
}

impl Layout {
    pub fn order(&self) -> usize {
        self.real_slots.len()
    }

    pub fn component_index(&self) -> usize {
        self.circuit.component_index
    }

    pub fn rank_of_name(&self, j: usize) -> Option<usize> {
        self.names.iter().position(|&n| n == j)
    }

    /// Slot of `v_j`.
    pub fn slot_of_name(&self, j: usize) -> Option<usize> {
        self.rank_of_name(j).map(|r| self.real_slots[r])
    }

    pub fn vertex_of_name(&self, j: usize) -> Option<usize> {
        self.slot_of_name(j).map(|s| self.circuit.vertex(s))
    }

    /// Per slot, `true` if it is real.
    pub fn real_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.circuit.len()];
        for &s in &self.real_slots {
            mask[s] = true;
        }
        mask
    }

    /// Length of the path with the given name, if the circuit has it.
    pub fn gap_of(&self, name: PathName) -> Option<usize> {
        let t = self.order();
        (0..t)
            .find(|&r| PathName::new(self.names[r], self.names[(r + 1) % t]) == name)
            .map(|r| self.gaps[r])
    }
}

/// One real-to-real path on the circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSegment {
    pub name: PathName,
    /// Clockwise rank of the starting real vertex.
    pub rank: usize,
    /// Real slot where the path starts, reading clockwise.
    pub start_slot: usize,
    pub len: usize,
    /// Name of the real vertex at the clockwise start.
    pub cw_from: usize,
    /// Name of the real vertex at the clockwise end.
    pub cw_to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub circuit_len: usize,
    /// In clockwise order starting at `v_1`.
    pub paths: Vec<PathSegment>,
}

impl PathDecomposition {
    pub fn get(&self, name: PathName) -> Option<&PathSegment> {
        self.paths.iter().find(|p| p.name == name)
    }
}

/// Cuts a layout into its `t` clockwise paths.
pub fn decompose(layout: &Layout) -> PathDecomposition {
    let t = layout.order();
    let paths = (0..t)
        .map(|r| {
            let (from, to) = (layout.names[r], layout.names[(r + 1) % t]);
            PathSegment {
                name: PathName::new(from, to),
                rank: r,
                start_slot: layout.real_slots[r],
                len: layout.gaps[r],
                cw_from: from,
                cw_to: to,
            }
        })
        .collect();
    PathDecomposition {
        circuit_len: layout.circuit.len(),
        paths,
    }
}

/// Picks real slots on a fixed circuit so that every constraint in `spec`
/// holds.
///
/// Every slot is tried as the anchor `v_1`. Ranks whose gaps are pinned from
/// the end of the circle are placed first, then the remaining ranks are
/// filled clockwise by backtracking, smallest admissible gap first. Once only
/// unconstrained gaps remain, each leftover vertex takes its first occurrence
/// in the open stretch.
///
/// Fails with [`LayoutError::Infeasible`] when no circuit of this length can
/// satisfy `spec`, and with [`LayoutError::NoSelection`] when this particular
/// tour does not admit a selection.
pub fn select_reals(circuit: &Circuit, spec: &GapSpec) -> Result<Layout, LayoutError> {
    let component = circuit.component_index;
    let infeasible = |reason: String| LayoutError::Infeasible { component, reason };

    let mut distinct: Vec<usize> = circuit.slots.iter().map(|s| s.vertex).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let t = distinct.len();
    let parity = Parity::of(t);
    let names = zigzag_names(t, parity)?;
    let len = circuit.len();

    let constraints: Vec<GapConstraint> = (0..t)
        .map(|r| spec.constraint(PathName::new(names[r], names[(r + 1) % t])))
        .collect();
    let present: BTreeSet<PathName> = (0..t)
        .map(|r| PathName::new(names[r], names[(r + 1) % t]))
        .collect();
    if let Some(missing) = spec.names().into_iter().find(|n| !present.contains(n)) {
        return Err(infeasible(format!(
            "no path {missing} with {t} real vertices"
        )));
    }
    let required: usize = constraints.iter().map(|c| c.min_len()).sum();
    if required > len {
        return Err(infeasible(format!(
            "paths need at least {required} arcs, circuit has {len}"
        )));
    }

    let local: Vec<usize> = circuit
        .slots
        .iter()
        .map(|s| distinct.binary_search(&s.vertex).unwrap())
        .collect();
    let mut search = Search::new(len, t, local, constraints);
    for anchor in 0..len {
        if let Some(offsets) = search.run(anchor) {
            let real_slots: Vec<usize> = offsets[..t].iter().map(|&o| (anchor + o) % len).collect();
            let gaps = offsets.windows(2).map(|w| w[1] - w[0]).collect();
            return Ok(Layout {
                circuit: circuit.clone(),
                parity,
                real_slots,
                names,
                gaps,
            });
        }
        if search.exhausted() {
            break;
        }
    }
    Err(LayoutError::NoSelection { component })
}

/// Tours the component repeatedly until some tour admits a selection.
///
/// Tour seeds are drawn from a stream keyed by the component index, so the
/// outcome is a function of `(g, component, spec, seed)`.
pub fn layout_component(
    g: &Graph,
    component: &ComponentInfo,
    spec: &GapSpec,
    seed: u64,
    retry_budget: usize,
) -> Result<Layout, LayoutError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(component.index as u64);
    let attempts = retry_budget.max(1);
    for _ in 0..attempts {
        let circuit = euler_tour(g, component, rng.next_u64())?;
        match select_reals(&circuit, spec) {
            Err(LayoutError::NoSelection { .. }) => continue,
            other => return other,
        }
    }
    Err(LayoutError::BudgetExhausted {
        component: component.index,
        attempts,
    })
}

/// Backtracking state for one circuit. Offsets are measured clockwise from
/// the anchor slot; offset `len` is the anchor again.
struct Search {
    len: usize,
    t: usize,
    local: Vec<usize>,
    constraints: Vec<GapConstraint>,
    /// First rank of the suffix whose gaps are all exact.
    back: usize,
    /// Offsets of ranks `back..=t`, indexed by rank.
    offsets: Vec<usize>,
    /// `tail_min[r]`: least total length of gaps `r..back`.
    tail_min: Vec<usize>,
    /// `free_from[r]`: gaps `r..back` are all unconstrained.
    free_from: Vec<bool>,
    used: Vec<bool>,
    nodes: usize,
}

impl Search {
    fn new(len: usize, t: usize, local: Vec<usize>, constraints: Vec<GapConstraint>) -> Self {
        let mut back = t;
        while back > 1 && matches!(constraints[back - 1], GapConstraint::Exact(_)) {
            back -= 1;
        }
        let mut offsets = vec![0; t + 1];
        offsets[t] = len;
        for r in (back..t).rev() {
            offsets[r] = offsets[r + 1].saturating_sub(constraints[r].min_len());
        }
        let mut tail_min = vec![0; back + 1];
        let mut free_from = vec![true; back + 1];
        for r in (0..back).rev() {
            tail_min[r] = tail_min[r + 1] + constraints[r].min_len();
            free_from[r] = free_from[r + 1] && constraints[r] == GapConstraint::Free;
        }
        Self {
            len,
            t,
            local,
            constraints,
            back,
            offsets,
            tail_min,
            free_from,
            used: vec![false; t],
            nodes: 0,
        }
    }

    fn exhausted(&self) -> bool {
        self.nodes >= NODE_BUDGET
    }

    fn vertex_at(&self, anchor: usize, offset: usize) -> usize {
        self.local[(anchor + offset) % self.len]
    }

    fn run(&mut self, anchor: usize) -> Option<Vec<usize>> {
        self.used.iter_mut().for_each(|u| *u = false);
        let first = self.vertex_at(anchor, 0);
        self.used[first] = true;
        for r in self.back..self.t {
            let offset = self.offsets[r];
            if offset == 0 {
                return None;
            }
            let v = self.vertex_at(anchor, offset);
            if self.used[v] {
                return None;
            }
            self.used[v] = true;
        }
        let mut offsets = self.offsets.clone();
        offsets[0] = 0;
        self.extend(anchor, 0, &mut offsets).then_some(offsets)
    }

    /// Places ranks `r + 1 .. back` given rank `r` at `offsets[r]`.
    fn extend(&mut self, anchor: usize, r: usize, offsets: &mut [usize]) -> bool {
        let end = self.offsets[self.back];
        let here = offsets[r];
        if r + 1 == self.back {
            return self.constraints[r].admits(end - here);
        }
        if self.free_from[r] {
            return self.fill(anchor, r, offsets);
        }

        let lo = here + self.constraints[r].min_len();
        let hi = match self.constraints[r] {
            GapConstraint::Exact(_) => lo,
            _ => end.saturating_sub(self.tail_min[r + 1]),
        };
        for next in lo..=hi.min(end.saturating_sub(1)) {
            self.nodes += 1;
            if self.exhausted() {
                return false;
            }
            let v = self.vertex_at(anchor, next);
            if self.used[v] {
                continue;
            }
            self.used[v] = true;
            if self.covered(anchor, next, end) {
                offsets[r + 1] = next;
                if self.extend(anchor, r + 1, offsets) {
                    return true;
                }
            }
            self.used[v] = false;
        }
        false
    }

    /// Every unused vertex occurs strictly between offsets `from` and `to`.
    fn covered(&self, anchor: usize, from: usize, to: usize) -> bool {
        let missing = self.used.iter().filter(|&&u| !u).count();
        if missing == 0 {
            return true;
        }
        let mut seen = vec![false; self.t];
        let mut found = 0;
        for offset in from + 1..to {
            let v = self.vertex_at(anchor, offset);
            if !self.used[v] && !seen[v] {
                seen[v] = true;
                found += 1;
                if found == missing {
                    return true;
                }
            }
        }
        false
    }

    /// Places every unused vertex at its first occurrence after rank `r`.
    fn fill(&mut self, anchor: usize, r: usize, offsets: &mut [usize]) -> bool {
        let end = self.offsets[self.back];
        let mut placed = Vec::with_capacity(self.back - r - 1);
        let mut seen = self.used.clone();
        for offset in offsets[r] + 1..end {
            let v = self.vertex_at(anchor, offset);
            if !seen[v] {
                seen[v] = true;
                placed.push(offset);
            }
        }
        if placed.len() != self.back - r - 1 {
            return false;
        }
        offsets[r + 1..self.back].copy_from_slice(&placed);
        true
    }
}
