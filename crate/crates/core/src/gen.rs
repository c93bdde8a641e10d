//! Test-instance generators: circulant components and disjoint unions of them.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{classify_components, odd_count, Graph};
use crate::layout::{gap_spec, zigzag_names, PathName};
use crate::x0::{solve_x0, X0Result};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("d must be at least 1, got {0}")]
    InvalidDegree(usize),
    #[error("a connected 2d-regular circulant needs n >= 2d + 1 = {}, got n = {n}", 2 * .d + 1)]
    TooSmall { n: usize, d: usize },
    #[error("no component orders given")]
    NoComponents,
}

/// Edges of `C_n(1, ..., d)` on vertices `offset .. offset + n`.
fn circulant_edges(n: usize, d: usize, offset: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (1..=d).map(move |j| (offset + i, offset + (i + j) % n)))
        .collect()
}

/// The circulant `C_n(1, ..., d)`: vertex `i` is adjacent to `i +- 1, ..., i +- d`.
pub fn circulant(n: usize, d: usize) -> Result<Graph, GenError> {
    check(n, d)?;
    let edges = circulant_edges(n, d, 0);
    Ok(Graph::with_min_half_degree(n, edges, 1).expect("circulants are simple and regular"))
}

fn check(n: usize, d: usize) -> Result<(), GenError> {
    if d == 0 {
        return Err(GenError::InvalidDegree(d));
    }
    if n < 2 * d + 1 {
        return Err(GenError::TooSmall { n, d });
    }
    Ok(())
}

/// Orders of the circulant components of a disjoint union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSpec {
    pub d: usize,
    pub orders: Vec<usize>,
}

/// What the assembled graph looks like against the order requirement on the
/// smallest odd component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreconditionReport {
    pub d: usize,
    pub k: usize,
    pub q: usize,
    pub x0: Option<X0Result>,
    pub min_odd_order: Option<usize>,
    /// `false` only when `x0` exists and the smallest odd order is below
    /// `2 x0 + 5`.
    pub satisfied: bool,
}

/// Disjoint union of circulants, vertex ranges assigned in spec order.
pub fn assemble(spec: &ComponentSpec) -> Result<(Graph, PreconditionReport), GenError> {
    if spec.orders.is_empty() {
        return Err(GenError::NoComponents);
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for &n in &spec.orders {
        check(n, spec.d)?;
        edges.extend(circulant_edges(n, spec.d, offset));
        offset += n;
    }
    let g =
        Graph::with_min_half_degree(offset, edges, 1).expect("unions of circulants are regular");

    let comps = classify_components(&g);
    let k = odd_count(&comps);
    let x0 = if spec.d >= 2 {
        solve_x0(k, spec.d).expect("d >= 2")
    } else {
        None
    };
    let min_odd_order = comps.iter().filter(|c| c.is_odd()).map(|c| c.order()).min();
    let satisfied = match (x0, min_odd_order) {
        (Some(x), Some(t)) => t >= x.min_first_order,
        _ => true,
    };
    let report = PreconditionReport {
        d: spec.d,
        k,
        q: comps.len(),
        x0,
        min_odd_order,
        satisfied,
    };
    Ok((g, report))
}

/// Least total length the gap constraints of circuit `i` demand from a
/// circuit with `t` real vertices, or `None` if some constrained path does not
/// exist for that `t`.
pub fn required_length(i: usize, k: usize, d: usize, t: usize) -> Option<usize> {
    let x0 = solve_x0(k, d).ok()?;
    let spec = gap_spec(i, k, d, x0.as_ref()).ok()?;
    let names = zigzag_names(t, crate::graph::Parity::of(t)).ok()?;
    let paths: Vec<PathName> = (0..t)
        .map(|r| PathName::new(names[r], names[(r + 1) % t]))
        .collect();
    let named = spec.names();
    if !named.iter().all(|n| paths.contains(n)) {
        return None;
    }
    Some(paths.iter().map(|&p| spec.constraint(p).min_len()).sum())
}

/// Non-decreasing odd orders for `k` odd components such that each circuit
/// has at least `slack` spare arcs beyond what its gap constraints demand.
/// When `x0` applies, every order is at least `2 x0 + 5`.
pub fn feasible_odd_orders(k: usize, d: usize, slack: usize) -> Vec<usize> {
    let floor = solve_x0(k, d)
        .ok()
        .flatten()
        .map_or(0, |x| x.min_first_order);
    let mut orders = Vec::with_capacity(k);
    let mut t = (2 * d + 1).max(floor);
    if t.is_multiple_of(2) {
        t += 1;
    }
    for i in 1..=k {
        while required_length(i, k, d, t).is_none_or(|need| need + slack > d * t) {
            t += 2;
        }
        orders.push(t);
    }
    orders
}
