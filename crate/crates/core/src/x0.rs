//! The threshold parameter `x0` that bounds the smallest odd component once
//! the number of odd components exceeds `5d + 4`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum X0Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct X0Result {
    pub x0: usize,
    /// Inclusive `[(2d-2)x0 + 3d + 7, (2d-2)x0 + 5d + 4]`, which contains `k`.
    pub interval: (usize, usize),
    /// `2 x0 + 5`, the required order of the smallest odd component.
    pub min_first_order: usize,
}

/// Largest `k` that needs no `x0`.
pub fn small_regime_limit(d: usize) -> usize {
    5 * d + 4
}

/// Interval of `k` values served by a given `x0`.
pub fn interval_for(x0: usize, d: usize) -> (usize, usize) {
    let step = 2 * d - 2;
    (step * x0 + 3 * d + 7, step * x0 + 5 * d + 4)
}

/// Returns `None` for `k <= 5d + 4`, otherwise the unique `x0 >= 1` whose
/// interval contains `k`.
pub fn solve_x0(k: usize, d: usize) -> Result<Option<X0Result>, X0Error> {
    if d < 2 {
        return Err(X0Error::InvalidParams(format!(
            "d must be at least 2, got {d}"
        )));
    }
    if k <= small_regime_limit(d) {
        return Ok(None);
    }
    let x0 = (k - 3 * d - 7) / (2 * d - 2);
    Ok(Some(X0Result {
        x0,
        interval: interval_for(x0, d),
        min_first_order: 2 * x0 + 5,
    }))
}
