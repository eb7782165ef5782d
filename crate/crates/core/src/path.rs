//! λ-increasing lattice paths in the Newton triangle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::geometry::{
    lambda_less, lattice_points, BoundaryEdge, EdgeVector, LatticePoint, NewtonTriangle, Side,
};

/// Degree plus the boundary points a path must skip, one per tangency edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedConfig {
    degree: i64,
    marked: Vec<(BoundaryEdge, LatticePoint)>,
}

impl MarkedConfig {
    pub fn new(degree: i64, marked: Vec<(BoundaryEdge, LatticePoint)>) -> Result<Self, Error> {
        if degree < 2 {
            return Err(Error::DegreeTooSmall { min: 2, got: degree });
        }
        if marked.len() > 3 {
            return Err(Error::TooManyEdges(marked.len()));
        }
        let mut seen = BTreeSet::new();
        for &(edge, point) in &marked {
            if !seen.insert(edge) {
                return Err(Error::DuplicateEdge(edge));
            }
            if !edge.contains_interior(degree, point) {
                return Err(Error::NotOnEdgeInterior { edge, point });
            }
        }
        Ok(Self { degree, marked })
    }

    /// Builds a configuration from bare points, assigning each to the edge
    /// whose interior contains it.
    pub fn from_points(degree: i64, points: &[LatticePoint]) -> Result<Self, Error> {
        let marked = points
            .iter()
            .map(|&p| {
                BoundaryEdge::ALL
                    .into_iter()
                    .find(|e| e.contains_interior(degree, p))
                    .map(|e| (e, p))
                    .ok_or(Error::NotOnEdgeInterior {
                        edge: BoundaryEdge::ALL
                            .into_iter()
                            .find(|e| e.contains(degree, p))
                            .unwrap_or(BoundaryEdge::Hypotenuse),
                        point: p,
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degree, marked)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn marked(&self) -> &[(BoundaryEdge, LatticePoint)] {
        &self.marked
    }

    pub fn marked_points(&self) -> Vec<LatticePoint> {
        self.marked.iter().map(|&(_, p)| p).collect()
    }

    pub fn triangle(&self) -> NewtonTriangle {
        NewtonTriangle::new(self.degree).expect("degree validated at construction")
    }

    /// `d(d+3)/2 − l`.
    pub fn path_length(&self) -> usize {
        self.triangle().full_path_length() - self.marked.len()
    }
}

/// A strictly λ-increasing sequence of lattice points of `Δ_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    degree: i64,
    points: Vec<LatticePoint>,
}

impl LatticePath {
    pub fn new(degree: i64, points: Vec<LatticePoint>) -> Result<Self, Error> {
        let t = NewtonTriangle::new(degree)?;
        if let Some(i) = points.iter().position(|&p| !t.contains(p)) {
            return Err(Error::InvalidPath(i));
        }
        if let Some(i) = points.windows(2).position(|w| !lambda_less(w[0], w[1])) {
            return Err(Error::InvalidPath(i + 1));
        }
        Ok(Self { degree, points })
    }

    pub(crate) fn from_parts_unchecked(degree: i64, points: Vec<LatticePoint>) -> Self {
        debug_assert!(Self::new(degree, points.clone()).is_ok());
        Self { degree, points }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Number of steps `n`.
    pub fn len(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the path runs from `(0,d)` to `(d,0)`.
    pub fn spans_triangle(&self) -> bool {
        let t = NewtonTriangle::new(self.degree).expect("validated degree");
        self.points.first() == Some(&t.start()) && self.points.last() == Some(&t.end())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str("→")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The unique path of length `d(d+3)/2 − l` avoiding the marked points:
/// every other lattice point of the triangle, in λ-order.
pub fn build_maximal_path(cfg: &MarkedConfig) -> LatticePath {
    let marked = cfg.marked_points();
    let points = lattice_points(cfg.triangle())
        .into_iter()
        .filter(|p| !marked.contains(p))
        .collect();
    LatticePath::from_parts_unchecked(cfg.degree, points)
}

/// Consecutive differences `γ(j) − γ(j−1)` for `j = 1..n`.
pub fn step_vectors(path: &LatticePath) -> Vec<EdgeVector> {
    path.points.windows(2).map(|w| w[0].to(w[1])).collect()
}

/// Whether every segment of the path lies on the boundary chain of `side`:
/// the hypotenuse for Plus, the vertical edge followed by the bottom edge for
/// Minus. Lattice points of the chain may be skipped.
pub fn is_supported_on_chain(path: &LatticePath, side: Side) -> bool {
    let d = path.degree;
    match side {
        Side::Plus => path
            .points
            .iter()
            .all(|&p| BoundaryEdge::Hypotenuse.contains(d, p)),
        Side::Minus => path.points.windows(2).all(|w| {
            [BoundaryEdge::Vertical, BoundaryEdge::Bottom]
                .into_iter()
                .any(|e| e.contains(d, w[0]) && e.contains(d, w[1]))
        }),
    }
}

/// Every λ-increasing path from `(0,d)` to `(d,0)` with exactly `steps` steps
/// that avoids `forbidden`, in lexicographic order of the visited sequence
/// (points compared by λ-order).
pub fn enumerate_paths(
    t: NewtonTriangle,
    steps: usize,
    forbidden: &[LatticePoint],
) -> PathEnumerator {
    let allowed: Vec<LatticePoint> = lattice_points(t)
        .into_iter()
        .filter(|p| !forbidden.contains(p))
        .collect();
    let start_ok = allowed.first() == Some(&t.start());
    let end_ok = allowed.last() == Some(&t.end());
    let stack = if start_ok && end_ok && steps >= 1 && steps < allowed.len() {
        vec![0]
    } else {
        Vec::new()
    };
    PathEnumerator {
        degree: t.degree(),
        allowed,
        steps,
        stack,
        fresh: true,
    }
}

/// Lazy depth-first stream behind [`enumerate_paths`].
///
/// `stack` holds indices into `allowed`; the path is complete when it has
/// `steps + 1` entries ending at the last allowed point.
#[derive(Debug, Clone)]
pub struct PathEnumerator {
    degree: i64,
    allowed: Vec<LatticePoint>,
    steps: usize,
    stack: Vec<usize>,
    fresh: bool,
}

impl PathEnumerator {
    /// Largest index the entry at `depth` may take while leaving room for
    /// the remaining entries (the final one is pinned to the last point).
    fn max_index(&self, depth: usize) -> usize {
        let last = self.allowed.len() - 1;
        if depth == self.steps {
            last
        } else {
            last - (self.steps - depth)
        }
    }

    fn min_index(&self, depth: usize) -> usize {
        if depth == self.steps {
            self.allowed.len() - 1
        } else {
            self.stack[depth - 1] + 1
        }
    }

    /// Extends the stack greedily to full depth with the smallest feasible
    /// choices. Returns false if some level has no choice.
    fn descend(&mut self) -> bool {
        while self.stack.len() <= self.steps {
            let depth = self.stack.len();
            let lo = self.min_index(depth);
            if lo > self.max_index(depth) {
                return false;
            }
            self.stack.push(lo);
        }
        true
    }

    /// Moves to the next candidate prefix: bump the deepest bumpable entry.
    fn advance(&mut self) -> bool {
        while let Some(top) = self.stack.pop() {
            let depth = self.stack.len();
            if depth == 0 {
                return false;
            }
            if top < self.max_index(depth) {
                self.stack.push(top + 1);
                return true;
            }
        }
        false
    }
}

impl Iterator for PathEnumerator {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.stack.is_empty() {
            return None;
        }
        if !self.fresh && !self.advance() {
            self.stack.clear();
            return None;
        }
        self.fresh = false;
        loop {
            if self.descend() {
                let points = self.stack.iter().map(|&i| self.allowed[i]).collect();
                return Some(LatticePath::from_parts_unchecked(self.degree, points));
            }
            if !self.advance() {
                self.stack.clear();
                return None;
            }
        }
    }
}
