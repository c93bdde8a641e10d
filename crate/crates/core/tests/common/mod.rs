#![allow(dead_code)]

use antimagic::gen::{assemble, feasible_odd_orders, ComponentSpec};
use antimagic::label::CircuitLabels;
use antimagic::Graph;

/// Odd orders sized for every gap constraint, followed by `evens` even
/// components of order `2d + 2`, `2d + 4`, ...
pub fn acceptance_orders(k: usize, d: usize, evens: usize) -> Vec<usize> {
    let mut orders = feasible_odd_orders(k, d, 0);
    orders.extend((1..=evens).map(|j| 2 * d + 2 * j));
    orders
}

pub fn union(d: usize, orders: Vec<usize>) -> Graph {
    assemble(&ComponentSpec { d, orders }).unwrap().0
}

/// Circuit-level sums recomputed slot by slot: slot `s` receives arc `s - 1`
/// or sends it, and likewise for arc `s`.
pub fn slot_sums(cl: &CircuitLabels) -> Vec<i64> {
    let len = cl.labels.len();
    (0..len)
        .map(|s| {
            let prev = (s + len - 1) % len;
            let from_prev = cl.labels[prev] as i64;
            let to_next = cl.labels[s] as i64;
            let a = if cl.forward[prev] {
                from_prev
            } else {
                -from_prev
            };
            let b = if cl.forward[s] { -to_next } else { to_next };
            a + b
        })
        .collect()
}

/// `forward[e]` for the oracle: whether the arc keeps the input edge order.
pub fn forward_flags(g: &Graph, arcs: &[(usize, usize)]) -> Vec<bool> {
    g.edges()
        .iter()
        .zip(arcs)
        .map(|(&(u, v), &(tail, head))| {
            assert!((tail, head) == (u, v) || (tail, head) == (v, u));
            tail == u
        })
        .collect()
}

pub fn all_distinct(sums: &[i64]) -> bool {
    let mut s = sums.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}
