//! Corner-cutting recursion for the complex multiplicity of a path.
//!
//! On each side the smallest strictly convex corner `γ(k)` is cut off and the
//! lattice area of the removed triangle becomes a factor. The recursion stops
//! with 1 once the path runs along that side's boundary chain, or with 0 if it
//! is stuck with no convex corner.

use serde::Serialize;

use crate::geometry::{is_strictly_convex, twice_area, LatticePoint, Side};
use crate::path::{is_supported_on_chain, LatticePath};

/// One corner cut: the pivot index, the removed triangle and its factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutStep {
    pub pivot: usize,
    pub triangle: [LatticePoint; 3],
    pub factor: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    /// Reached the side's boundary chain.
    ChainBase,
    /// No strictly convex corner left; the multiplicity is 0.
    Dead,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityTrace {
    pub side: Side,
    pub steps: Vec<CutStep>,
    pub terminal: Terminal,
}

impl MultiplicityTrace {
    /// Recomputes the side multiplicity from the recorded factors.
    pub fn replay(&self) -> u64 {
        match self.terminal {
            Terminal::Dead => 0,
            Terminal::ChainBase => self.steps.iter().map(|s| s.factor).product(),
        }
    }
}

/// Smallest `k` in `1..n` where the `side` region is strictly convex at `γ(k)`.
pub fn find_pivot(path: &LatticePath, side: Side) -> Option<usize> {
    path.points()
        .windows(3)
        .position(|w| is_strictly_convex(w[0], w[1], w[2], side))
        .map(|i| i + 1)
}

/// Removes `γ(k)` from the path.
///
/// # Panics
///
/// If `k` is not an interior index.
pub fn cut_corner(path: &LatticePath, k: usize) -> LatticePath {
    assert!(k >= 1 && k < path.len(), "pivot {k} is not interior to a path of length {}", path.len());
    let mut points = path.points().to_vec();
    points.remove(k);
    LatticePath::from_parts_unchecked(path.degree(), points)
}

/// `μ₊` or `μ₋` together with the transcript of corner cuts.
pub fn mu_side(path: &LatticePath, side: Side) -> (u64, MultiplicityTrace) {
    let mut current = path.clone();
    let mut steps = Vec::new();
    let terminal = loop {
        if is_supported_on_chain(&current, side) {
            break Terminal::ChainBase;
        }
        let Some(k) = find_pivot(&current, side) else {
            break Terminal::Dead;
        };
        let pts = current.points();
        let triangle = [pts[k - 1], pts[k], pts[k + 1]];
        steps.push(CutStep {
            pivot: k,
            triangle,
            factor: twice_area(triangle[0], triangle[1], triangle[2]),
        });
        current = cut_corner(&current, k);
    };
    let trace = MultiplicityTrace { side, steps, terminal };
    (trace.replay(), trace)
}

/// `μ = μ₊ · μ₋`.
pub fn mu(path: &LatticePath) -> u64 {
    mu_side(path, Side::Plus).0 * mu_side(path, Side::Minus).0
}
