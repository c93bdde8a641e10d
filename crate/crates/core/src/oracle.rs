//! Brute-force cross-checks. Nothing here calls into the construction or
//! verification modules; inputs are plain edge lists and label vectors.

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{arcs} arcs exceed the exhaustive-search cap of {cap}")]
    BudgetExceeded { arcs: usize, cap: usize },
    #[error("k = {k}, d = {d} solves the equation list for several x: {solutions:?}")]
    NonUnique {
        k: usize,
        d: usize,
        solutions: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_exhaustive_arcs: usize,
    pub sample_count: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_exhaustive_arcs: 8,
            sample_count: 100,
        }
    }
}

/// Vertex sums by a single pass over the edges. `forward[e]` orients edge
/// `(u, v)` as `u -> v`; otherwise `v -> u`.
pub fn recount_sums(
    vertex_count: usize,
    edges: &[(usize, usize)],
    forward: &[bool],
    labels: &[usize],
) -> Vec<i64> {
    let mut sums = vec![0i64; vertex_count];
    for e in 0..edges.len() {
        let (u, v) = edges[e];
        let (tail, head) = if forward[e] { (u, v) } else { (v, u) };
        sums[head] += labels[e] as i64;
        sums[tail] -= labels[e] as i64;
    }
    sums
}

/// Tries every bijection `arcs -> [1, m]` and reports whether one of them
/// gives pairwise distinct sums.
pub fn exhaustive_antimagic_exists(
    vertex_count: usize,
    arcs: &[(usize, usize)],
    cap: usize,
) -> Result<bool, OracleError> {
    let m = arcs.len();
    if m > cap {
        return Err(OracleError::BudgetExceeded { arcs: m, cap });
    }
    let distinct = |labels: &[usize]| {
        let mut sums = vec![0i64; vertex_count];
        for (&(tail, head), &label) in arcs.iter().zip(labels) {
            sums[head] += label as i64;
            sums[tail] -= label as i64;
        }
        sums.sort_unstable();
        sums.windows(2).all(|w| w[0] != w[1])
    };
    if m == 0 {
        return Ok(distinct(&[]));
    }
    Ok((1..=m).permutations(m).any(|labels| distinct(&labels)))
}

/// Scans `x = 1..=k` against the two equation families
///
/// * `k = (2d-2)(x+2) + c` for `c` in `first_start..=d+8`,
/// * `k = (2d-2)(x+1) + c` for `c` in `d+9..=2d-3`,
///
/// and collects every solving `x`.
fn x0_solutions(k: usize, d: usize, first_start: usize) -> Vec<usize> {
    let step = 2 * d - 2;
    (1..=k)
        .filter(|&x| {
            let first = (first_start..=d + 8).any(|c| k == step * (x + 2) + c);
            let second = (d + 9..=2 * d - 3).any(|c| k == step * (x + 1) + c);
            first || second
        })
        .collect()
}

/// `x0` by exhaustive scan of the equation families.
///
/// The first family starts at `c = max(0, 11 - d)`. Read from `c = 0`, its
/// equations overlap for `d <= 10` and several `x` would solve them at once;
/// from `11 - d` the two families tile `[(2d-2)x + 3d + 7, (2d-2)x + 5d + 4]`.
pub fn x0_brute(k: usize, d: usize) -> Result<Option<usize>, OracleError> {
    assert!(d >= 2, "x0 is only defined for d >= 2");
    let solutions = x0_solutions(k, d, 11usize.saturating_sub(d));
    match solutions.as_slice() {
        [] => Ok(None),
        [x] => Ok(Some(*x)),
        _ => Err(OracleError::NonUnique { k, d, solutions }),
    }
}
