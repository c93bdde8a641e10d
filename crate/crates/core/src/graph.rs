//! Simple undirected 2d-regular graphs and their component decomposition.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {index} references vertex {vertex}, but the graph has {vertex_count} vertices")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not regular of even degree: vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("uniform degree {degree} is below the required minimum {minimum}")]
    DegreeTooSmall { degree: usize, minimum: usize },
}

/// A simple undirected graph in which every vertex has degree `2d`.
///
/// Edges are identified by their position in the input list; that id is
/// carried through tours, layouts and labelings.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    half_degree: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices, requiring `d >= 2`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        Self::with_min_half_degree(vertex_count, edges, 2)
    }

    /// Like [`Graph::new`], but admits any `d >= min_half_degree`.
    ///
    /// Circuit-level tests use `min_half_degree = 1` to work with plain cycles.
    pub fn with_min_half_degree(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        min_half_degree: usize,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push((v, index));
            adjacency[v].push((u, index));
        }

        let degree = adjacency.first().map_or(0, Vec::len);
        for (vertex, adj) in adjacency.iter().enumerate() {
            if adj.len() != degree || degree % 2 == 1 {
                return Err(GraphError::NotRegular {
                    vertex,
                    degree: adj.len(),
                    expected: degree,
                });
            }
        }
        if degree < 2 * min_half_degree {
            return Err(GraphError::DegreeTooSmall {
                degree,
                minimum: 2 * min_half_degree,
            });
        }

        Ok(Self {
            vertex_count,
            edges,
            adjacency,
            half_degree: degree / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs in input order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// Half the uniform degree.
    pub fn d(&self) -> usize {
        self.half_degree
    }
}

/// Builds a graph whose vertex count is one past the largest referenced id.
pub fn build_graph(edges: Vec<(usize, usize)>) -> Result<Graph, GraphError> {
    let vertex_count = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(vertex_count, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(order: usize) -> Self {
        if order % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Odd => f.write_str("odd"),
            Parity::Even => f.write_str("even"),
        }
    }
}

/// One connected component `G_i`, indexed from 1 with odd components first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    pub index: usize,
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    pub parity: Parity,
    pub edge_count: usize,
}

impl ComponentInfo {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }
}

/// Splits the graph into components: odd components first in ascending order
/// (ties broken by smallest vertex id), then even components in discovery
/// order.
pub fn classify_components(g: &Graph) -> Vec<ComponentInfo> {
    let mut seen = vec![false; g.vertex_count()];
    let mut found = Vec::new();
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let mut vertices = Vec::new();
        while let Some(v) = stack.pop() {
            vertices.push(v);
            for &(w, _) in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        vertices.sort_unstable();
        found.push(vertices);
    }

    // Discovery order already sorts by smallest vertex id.
    let (mut odd, even): (Vec<_>, Vec<_>) = found.into_iter().partition(|c| c.len() % 2 == 1);
    odd.sort_by_key(|c| (c.len(), c[0]));

    odd.into_iter()
        .chain(even)
        .enumerate()
        .map(|(i, vertices)| ComponentInfo {
            index: i + 1,
            parity: Parity::of(vertices.len()),
            edge_count: vertices.len() * g.d(),
            vertices,
        })
        .collect()
}

/// Number of odd components in a classified sequence.
pub fn odd_count(components: &[ComponentInfo]) -> usize {
    components.iter().filter(|c| c.is_odd()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn complete(n: usize, offset: usize) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u + offset, v + offset));
            }
        }
        edges
    }

    fn octahedron(offset: usize) -> Vec<(usize, usize)> {
        complete(6, 0)
            .into_iter()
            .filter(|&(u, v)| v != u + 3)
            .map(|(u, v)| (u + offset, v + offset))
            .collect()
    }

    #[test]
    fn k5_is_4_regular() {
        let g = build_graph(complete(5, 0)).unwrap();
        assert_eq!(g.d(), 2);
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn path_is_not_regular() {
        let err = build_graph(vec![(0, 1), (1, 2)]).unwrap_err();
        assert!(matches!(err, GraphError::NotRegular { .. }));
    }

    #[test]
    fn repeated_pair_is_duplicate() {
        let mut edges = complete(5, 0);
        edges.push((3, 1));
        assert_eq!(
            build_graph(edges).unwrap_err(),
            GraphError::DuplicateEdge(1, 3)
        );
    }

    #[test]
    fn self_loop_rejected() {
        let mut edges = complete(5, 0);
        edges.push((2, 2));
        assert_eq!(build_graph(edges).unwrap_err(), GraphError::SelfLoop(2));
    }

    #[test]
    fn cycle_degree_too_small() {
        let err = build_graph(vec![(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert_eq!(
            err,
            GraphError::DegreeTooSmall {
                degree: 2,
                minimum: 4
            }
        );
        assert!(Graph::with_min_half_degree(3, vec![(0, 1), (1, 2), (2, 0)], 1).is_ok());
    }

    #[test]
    fn odd_degree_not_regular() {
        // K_4 is 3-regular.
        let err = build_graph(complete(4, 0)).unwrap_err();
        assert!(matches!(err, GraphError::NotRegular { degree: 3, .. }));
    }

    #[test]
    fn out_of_range_vertex() {
        let err = Graph::new(3, vec![(0, 5)]).unwrap_err();
        assert!(matches!(
            err,
            GraphError::VertexOutOfRange { vertex: 5, .. }
        ));
    }

    #[test]
    fn k5_plus_octahedron() {
        // Put the octahedron first so sorting has to move K_5 ahead of it.
        let mut edges = octahedron(0);
        edges.extend(complete(5, 6));
        let g = build_graph(edges).unwrap();
        let comps = classify_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(odd_count(&comps), 1);
        assert_eq!(comps[0].vertices, vec![6, 7, 8, 9, 10]);
        assert_eq!(comps[0].parity, Parity::Odd);
        assert_eq!(comps[0].edge_count, 10);
        assert_eq!(comps[1].order(), 6);
        assert_eq!(comps[1].parity, Parity::Even);
        assert_eq!(comps[1].index, 2);
    }

    #[test]
    fn octahedron_alone() {
        let g = build_graph(octahedron(0)).unwrap();
        let comps = classify_components(&g);
        assert_eq!(comps.len(), 1);
        assert_eq!(odd_count(&comps), 0);
    }

    #[test]
    fn equal_odd_orders_tie_break_on_smallest_vertex() {
        let mut edges = complete(5, 5);
        edges.extend(complete(5, 0));
        let g = build_graph(edges).unwrap();
        let comps = classify_components(&g);
        assert_eq!(odd_count(&comps), 2);
        assert_eq!(comps[0].vertices[0], 0);
        assert_eq!(comps[1].vertices[0], 5);
    }
}
