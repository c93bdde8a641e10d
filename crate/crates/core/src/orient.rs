//! Orienting circuits path by path, and carrying that orientation back to the
//! original graph.

use serde::Serialize;
use thiserror::Error;

use crate::euler::Circuit;
use crate::graph::{Graph, Parity};
use crate::layout::{PathDecomposition, PathName, PathSegment};

/// Role of a real vertex on its oriented circuit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Both incident paths leave it.
    Source,
    /// Both incident paths enter it.
    Sink,
    /// One path enters, one leaves. Only `v_1` of an odd circuit.
    Flow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedPath {
    pub segment: PathSegment,
    pub tail: usize,
    pub head: usize,
    /// Arcs run clockwise (in slot order) when set.
    pub clockwise: bool,
}

impl OrientedPath {
    pub fn name(&self) -> PathName {
        self.segment.name
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCircuit {
    pub parity: Parity,
    pub circuit_len: usize,
    /// Same clockwise order as the decomposition.
    pub paths: Vec<OrientedPath>,
    /// `statuses[j - 1]` is the status of `v_j`.
    pub statuses: Vec<Status>,
}

impl OrientedCircuit {
    pub fn status(&self, name: usize) -> Status {
        self.statuses[name - 1]
    }

    pub fn path(&self, name: PathName) -> Option<&OrientedPath> {
        self.paths.iter().find(|p| p.name() == name)
    }

    /// Per slot, whether its arc points clockwise.
    pub fn arc_forward(&self) -> Vec<bool> {
        let mut forward = vec![false; self.circuit_len];
        for p in &self.paths {
            for i in 0..p.segment.len {
                forward[(p.segment.start_slot + i) % self.circuit_len] = p.clockwise;
            }
        }
        forward
    }
}

/// Orients each path from its source-side endpoint to its sink-side one.
///
/// Odd circuits: `v_1` is a flow vertex, `v_2` a sink, and statuses alternate
/// clockwise from there, which makes `v_3` a source. Even circuits: statuses
/// alternate clockwise starting with `v_1` as a source.
pub fn orient_circuit(dec: &PathDecomposition, parity: Parity) -> OrientedCircuit {
    let t = dec.paths.len();
    let mut statuses = vec![Status::Source; t];
    for p in &dec.paths {
        let r = p.rank;
        statuses[p.cw_from - 1] = match (parity, r) {
            (Parity::Odd, 0) => Status::Flow,
            (_, r) if r % 2 == 1 => Status::Sink,
            _ => Status::Source,
        };
    }

    let paths = dec
        .paths
        .iter()
        .map(|&segment| {
            let clockwise = statuses[segment.cw_to - 1] != Status::Source;
            let (tail, head) = if clockwise {
                (segment.cw_from, segment.cw_to)
            } else {
                (segment.cw_to, segment.cw_from)
            };
            OrientedPath {
                segment,
                tail,
                head,
                clockwise,
            }
        })
        .collect();

    OrientedCircuit {
        parity,
        circuit_len: dec.circuit_len,
        paths,
        statuses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error("edge {0} is not covered by any circuit")]
    Uncovered(usize),
    #[error("edge {0} appears on more than one circuit slot")]
    CoveredTwice(usize),
}

/// An orientation of every edge of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedGraph {
    pub vertex_count: usize,
    /// `(tail, head)` per edge id.
    pub arcs: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

/// Gives each graph edge the direction of the circuit slot that carries it.
pub fn project<'a, I>(g: &Graph, circuits: I) -> Result<OrientedGraph, ProjectionError>
where
    I: IntoIterator<Item = (&'a Circuit, &'a OrientedCircuit)>,
{
    let mut arcs: Vec<Option<(usize, usize)>> = vec![None; g.edge_count()];
    for (circuit, oriented) in circuits {
        for (s, forward) in oriented.arc_forward().into_iter().enumerate() {
            let (a, b) = (circuit.vertex(s), circuit.vertex(s + 1));
            let arc = if forward { (a, b) } else { (b, a) };
            let edge = circuit.edge(s);
            if arcs[edge].replace(arc).is_some() {
                return Err(ProjectionError::CoveredTwice(edge));
            }
        }
    }
    let arcs = arcs
        .into_iter()
        .enumerate()
        .map(|(e, a)| a.ok_or(ProjectionError::Uncovered(e)))
        .collect::<Result<_, _>>()?;
    Ok(OrientedGraph {
        vertex_count: g.vertex_count(),
        arcs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::circuit_from_walk;
    use crate::layout::{decompose, select_reals, GapSpec};

    fn cycle_circuit(n: usize) -> (Graph, Circuit) {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::with_min_half_degree(n, edges, 1).unwrap();
        let walk: Vec<_> = (0..n).collect();
        let c = circuit_from_walk(&g, 1, &walk).unwrap();
        (g, c)
    }

    fn oriented_cycle(n: usize) -> (Graph, Circuit, OrientedCircuit) {
        let (g, c) = cycle_circuit(n);
        let dec = decompose(&select_reals(&c, &GapSpec::default()).unwrap());
        let oc = orient_circuit(&dec, Parity::of(n));
        (g, c, oc)
    }

    fn directions(oc: &OrientedCircuit) -> Vec<(String, usize, usize)> {
        oc.paths
            .iter()
            .map(|p| (p.name().to_string(), p.tail, p.head))
            .collect()
    }

    fn dir(name: &str, tail: usize, head: usize) -> (String, usize, usize) {
        (name.to_string(), tail, head)
    }

    #[test]
    fn odd_five() {
        let (_, _, oc) = oriented_cycle(5);
        assert_eq!(
            directions(&oc),
            vec![
                dir("P1,2", 1, 2),
                dir("P2,4", 4, 2),
                dir("P4,5", 4, 5),
                dir("P3,5", 3, 5),
                dir("P1,3", 3, 1),
            ]
        );
        assert_eq!(oc.status(1), Status::Flow);
    }

    #[test]
    fn even_four() {
        let (_, _, oc) = oriented_cycle(4);
        assert_eq!(
            directions(&oc),
            vec![
                dir("P1,2", 1, 2),
                dir("P2,4", 4, 2),
                dir("P3,4", 4, 3),
                dir("P1,3", 1, 3),
            ]
        );
        assert_eq!(oc.status(1), Status::Source);
    }

    #[test]
    fn odd_seven_statuses() {
        let (_, _, oc) = oriented_cycle(7);
        use Status::*;
        assert_eq!(
            [2, 4, 6, 7, 5, 3].map(|j| oc.status(j)),
            [Sink, Source, Sink, Source, Sink, Source]
        );
    }

    #[test]
    fn status_counts() {
        for n in 3..20 {
            let (_, _, oc) = oriented_cycle(n);
            let count = |s| oc.statuses.iter().filter(|&&x| x == s).count();
            if n % 2 == 1 {
                assert_eq!(count(Status::Flow), 1);
                assert_eq!(count(Status::Sink), (n - 1) / 2);
                assert_eq!(count(Status::Source), (n - 1) / 2);
            } else {
                assert_eq!(count(Status::Flow), 0);
                assert_eq!(count(Status::Sink), n / 2);
            }
        }
    }

    #[test]
    fn cycle_projection_follows_slots() {
        let (g, c, oc) = oriented_cycle(5);
        let og = project(&g, [(&c, &oc)]).unwrap();
        let forward = oc.arc_forward();
        for (s, &fwd) in forward.iter().enumerate() {
            let (a, b) = (c.vertex(s), c.vertex(s + 1));
            let expected = if fwd { (a, b) } else { (b, a) };
            assert_eq!(og.arcs[c.edge(s)], expected);
        }
    }

    #[test]
    fn projection_detects_missing_circuit() {
        let (g, _, _) = oriented_cycle(5);
        let none: [(&Circuit, &OrientedCircuit); 0] = [];
        assert_eq!(
            project(&g, none).unwrap_err(),
            ProjectionError::Uncovered(0)
        );
    }
}
