//! Bijective arc labels: circuit `i` receives the block `[n_{i-1} + 1, n_i]`,
//! handed out path by path in a per-circuit order, increasing along each
//! path's direction.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::euler::Circuit;
use crate::graph::{Graph, Parity};
use crate::layout::PathName;
use crate::orient::{project, OrientedCircuit, OrientedGraph, ProjectionError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("path order for circuit {circuit} is not a permutation of its paths")]
    OrderMismatch { circuit: usize },
    #[error(transparent)]
    Projection(#[from] ProjectionError),
}

/// Sequence in which a circuit's paths receive their label blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathOrder {
    pub circuit_index: usize,
    pub names: Vec<PathName>,
}

/// `P12, P13, P24, P35, ..., P_{t-2,t}, P_{t-1,t}` with the odd-circuit
/// adjustments for `i` in `2..=9`:
///
/// * `i = 2`: `P13` before `P12`;
/// * `i` in `3..=8`: `P13, P24, P12, P35, ...`;
/// * `i = 9`: `P13, P24, P35, P12, P46, ...`.
///
/// Even circuits always take the unmodified order.
pub fn path_order(i: usize, t: usize, parity: Parity) -> PathOrder {
    let p = PathName::new;
    let mut names = vec![p(1, 2), p(1, 3)];
    names.extend((2..=t.saturating_sub(2)).map(|j| p(j, j + 2)));
    names.push(p(t - 1, t));

    // The moved paths only exist once t is large enough.
    if parity == Parity::Odd {
        let shift = match i {
            2 => 1,
            3..=8 if t >= 5 => 2,
            9 if t >= 5 => 3,
            _ => 0,
        };
        if shift > 0 {
            let p12 = names.remove(0);
            names.insert(shift, p12);
        }
    }
    PathOrder {
        circuit_index: i,
        names,
    }
}

/// Prefix sums `n_0 = 0, n_1, ..., n_q` of circuit lengths.
pub fn offsets(circuit_lengths: &[usize]) -> Vec<usize> {
    std::iter::once(0)
        .chain(circuit_lengths.iter().scan(0, |acc, &len| {
            *acc += len;
            Some(*acc)
        }))
        .collect()
}

/// Orientation and labels of one circuit's slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitLabels {
    /// Per slot: the arc points clockwise.
    pub forward: Vec<bool>,
    /// Per slot label.
    pub labels: Vec<usize>,
    /// Inclusive label range used by this circuit.
    pub range: (usize, usize),
}

/// Labels one circuit starting at `first`.
pub fn label_circuit(
    oc: &OrientedCircuit,
    order: &PathOrder,
    first: usize,
) -> Result<CircuitLabels, LabelError> {
    let mismatch = || LabelError::OrderMismatch {
        circuit: order.circuit_index,
    };
    let listed: BTreeSet<PathName> = order.names.iter().copied().collect();
    let present: BTreeSet<PathName> = oc.paths.iter().map(|p| p.name()).collect();
    if listed != present || listed.len() != order.names.len() {
        return Err(mismatch());
    }

    let len = oc.circuit_len;
    let mut labels = vec![0; len];
    let mut next = first;
    for &name in &order.names {
        let path = oc.path(name).ok_or_else(mismatch)?;
        let seg = path.segment;
        for step in 0..seg.len {
            let along = if path.clockwise {
                step
            } else {
                seg.len - 1 - step
            };
            labels[(seg.start_slot + along) % len] = next;
            next += 1;
        }
    }
    Ok(CircuitLabels {
        forward: oc.arc_forward(),
        labels,
        range: (first, next - 1),
    })
}

/// Labels of the whole construction, at circuit and at graph level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOrientation {
    pub offsets: Vec<usize>,
    pub circuits: Vec<CircuitLabels>,
    pub graph: OrientedGraph,
    /// Label per edge id.
    pub labels: Vec<usize>,
}

/// Labels every circuit in sequence (odd circuits first) and projects the
/// result onto `g`.
pub fn label_all(
    g: &Graph,
    parts: &[(&Circuit, &OrientedCircuit, &PathOrder)],
) -> Result<LabeledOrientation, LabelError> {
    let lengths: Vec<usize> = parts.iter().map(|(c, _, _)| c.len()).collect();
    let offsets = offsets(&lengths);
    let circuits = parts
        .iter()
        .zip(&offsets)
        .map(|(&(_, oc, order), &n)| label_circuit(oc, order, n + 1))
        .collect::<Result<Vec<_>, _>>()?;

    let graph = project(g, parts.iter().map(|&(c, oc, _)| (c, oc)))?;
    let mut labels = vec![0; g.edge_count()];
    for ((circuit, _, _), cl) in parts.iter().zip(&circuits) {
        for (s, &label) in cl.labels.iter().enumerate() {
            labels[circuit.edge(s)] = label;
        }
    }
    Ok(LabeledOrientation {
        offsets,
        circuits,
        graph,
        labels,
    })
}
