//! Seeded Euler tours of single components.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{ComponentInfo, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EulerError {
    #[error("component {component} is not Eulerian: {reason}")]
    NotEulerian { component: usize, reason: String },
}

/// A position on a circuit: the vertex sitting there and the edge leaving it
/// towards the next slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub vertex: usize,
    pub edge: usize,
}

/// A closed walk through every edge of one component exactly once.
///
/// Slot `s` contributes the arc `vertex(s) -> vertex(s + 1 mod len)`, read
/// clockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub component_index: usize,
    pub slots: Vec<Slot>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn vertex(&self, slot: usize) -> usize {
        self.slots[slot % self.slots.len()].vertex
    }

    pub fn edge(&self, slot: usize) -> usize {
        self.slots[slot % self.slots.len()].edge
    }
}

/// Builds a circuit from a closed vertex walk, given without repeating the
/// start at the end. Returns `None` if consecutive vertices are not adjacent.
pub fn circuit_from_walk(g: &Graph, component_index: usize, walk: &[usize]) -> Option<Circuit> {
    let slots = (0..walk.len())
        .map(|s| {
            let (u, v) = (walk[s], walk[(s + 1) % walk.len()]);
            g.neighbors(u)
                .iter()
                .find(|&&(w, _)| w == v)
                .map(|&(_, edge)| Slot { vertex: u, edge })
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Circuit {
        component_index,
        slots,
    })
}

/// Hierholzer's algorithm over adjacency lists shuffled by `seed`.
pub fn euler_tour(g: &Graph, component: &ComponentInfo, seed: u64) -> Result<Circuit, EulerError> {
    let not_eulerian = |reason: String| EulerError::NotEulerian {
        component: component.index,
        reason,
    };
    let Some(&start) = component.vertices.first() else {
        return Err(not_eulerian("component has no vertices".into()));
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<Vec<(usize, usize)>> = component
        .vertices
        .iter()
        .map(|&v| {
            if g.neighbors(v).len() % 2 == 1 {
                return Err(not_eulerian(format!("vertex {v} has odd degree")));
            }
            let mut adj = g.neighbors(v).to_vec();
            adj.shuffle(&mut rng);
            Ok(adj)
        })
        .collect::<Result<_, _>>()?;
    let local = |v: usize| component.vertices.binary_search(&v).ok();

    let mut used = vec![false; g.edge_count()];
    let mut cursor = vec![0usize; component.vertices.len()];
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut popped: Vec<(usize, Option<usize>)> = Vec::with_capacity(component.edge_count + 1);

    while let Some(&(v, _)) = stack.last() {
        let lv =
            local(v).ok_or_else(|| not_eulerian(format!("vertex {v} escapes the component")))?;
        let adj = &mut adjacency[lv];
        while cursor[lv] < adj.len() && used[adj[cursor[lv]].1] {
            cursor[lv] += 1;
        }
        if let Some(&(w, e)) = adj.get(cursor[lv]) {
            used[e] = true;
            stack.push((w, Some(e)));
        } else {
            popped.push(stack.pop().unwrap());
        }
    }

    // `popped` lists the walk backwards; the edge joining popped[i] and
    // popped[i + 1] is the one used to reach popped[i].
    popped.pop();
    let slots: Vec<Slot> = popped
        .into_iter()
        .map(|(vertex, edge)| Slot {
            vertex,
            edge: edge.expect("only the root lacks an entering edge"),
        })
        .collect();

    if slots.len() != component.edge_count {
        return Err(not_eulerian(format!(
            "tour covers {} of {} edges",
            slots.len(),
            component.edge_count
        )));
    }
    Ok(Circuit {
        component_index: component.index,
        slots,
    })
}
