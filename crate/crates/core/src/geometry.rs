//! Exact lattice geometry of the degree-`d` Newton triangle.
//!
//! Everything here is integer arithmetic. The projection used to order
//! lattice points is a line of tiny negative slope; on the triangle it
//! induces the lexicographic order "x ascending, then y descending", which
//! is what [`lambda_less`] implements.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Displacement from `self` to `other`.
    pub fn to(self, other: LatticePoint) -> EdgeVector {
        EdgeVector::new(other.x - self.x, other.y - self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self::new(x, y)
    }
}

/// A displacement between two lattice points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeVector {
    pub dx: i64,
    pub dy: i64,
}

impl EdgeVector {
    pub const fn new(dx: i64, dy: i64) -> Self {
        Self { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    /// z-component of `self × other`; positive when `other` turns left.
    pub fn cross(self, other: EdgeVector) -> i64 {
        self.dx * other.dy - self.dy * other.dx
    }

    /// Reduction modulo 2, as a pair of bits `(dx mod 2, dy mod 2)`.
    pub fn parity(self) -> (u8, u8) {
        (self.dx.rem_euclid(2) as u8, self.dy.rem_euclid(2) as u8)
    }

    pub fn is_even(self) -> bool {
        self.parity() == (0, 0)
    }
}

impl std::ops::Add for EdgeVector {
    type Output = EdgeVector;

    fn add(self, rhs: EdgeVector) -> EdgeVector {
        EdgeVector::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dx, self.dy)
    }
}

/// The two regions a path cuts the triangle into.
///
/// `Plus` holds the hypotenuse and lies to the left of a path directed from
/// `(0,d)` to `(d,0)`; `Minus` holds the vertical and bottom edges and lies to
/// the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Plus, Side::Minus];
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "plus",
            Side::Minus => "minus",
        })
    }
}

/// One of the three sides of the Newton triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryEdge {
    /// `(d,0)`–`(0,d)`, dual to the line at infinity.
    Hypotenuse,
    /// `(0,0)`–`(0,d)`.
    Vertical,
    /// `(0,0)`–`(d,0)`.
    Bottom,
}

impl BoundaryEdge {
    pub const ALL: [BoundaryEdge; 3] = [
        BoundaryEdge::Hypotenuse,
        BoundaryEdge::Vertical,
        BoundaryEdge::Bottom,
    ];

    /// Single-letter name used on the command line.
    pub fn letter(self) -> char {
        match self {
            BoundaryEdge::Hypotenuse => 'h',
            BoundaryEdge::Vertical => 'v',
            BoundaryEdge::Bottom => 'b',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'h' => Some(BoundaryEdge::Hypotenuse),
            'v' => Some(BoundaryEdge::Vertical),
            'b' => Some(BoundaryEdge::Bottom),
            _ => None,
        }
    }

    /// Whether `pt` lies on the closed segment of this edge in `Δ_d`.
    pub fn contains(self, degree: i64, pt: LatticePoint) -> bool {
        let in_range = |t: i64| (0..=degree).contains(&t);
        match self {
            BoundaryEdge::Hypotenuse => pt.x + pt.y == degree && in_range(pt.x),
            BoundaryEdge::Vertical => pt.x == 0 && in_range(pt.y),
            BoundaryEdge::Bottom => pt.y == 0 && in_range(pt.x),
        }
    }

    /// Whether `pt` lies in the relative interior of this edge.
    pub fn contains_interior(self, degree: i64, pt: LatticePoint) -> bool {
        let interior = |t: i64| 0 < t && t < degree;
        match self {
            BoundaryEdge::Hypotenuse => pt.x + pt.y == degree && interior(pt.x),
            BoundaryEdge::Vertical => pt.x == 0 && interior(pt.y),
            BoundaryEdge::Bottom => pt.y == 0 && interior(pt.x),
        }
    }
}

impl fmt::Display for BoundaryEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// The triangle with vertices `(0,0)`, `(d,0)`, `(0,d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NewtonTriangle {
    degree: i64,
}

impl NewtonTriangle {
    pub fn new(degree: i64) -> Result<Self, Error> {
        if degree < 1 {
            return Err(Error::InvalidDegree(degree));
        }
        Ok(Self { degree })
    }

    pub fn degree(self) -> i64 {
        self.degree
    }

    pub fn vertices(self) -> [LatticePoint; 3] {
        [
            LatticePoint::new(0, 0),
            LatticePoint::new(self.degree, 0),
            LatticePoint::new(0, self.degree),
        ]
    }

    /// λ-minimum `(0,d)`, where every path starts.
    pub fn start(self) -> LatticePoint {
        LatticePoint::new(0, self.degree)
    }

    /// λ-maximum `(d,0)`, where every path ends.
    pub fn end(self) -> LatticePoint {
        LatticePoint::new(self.degree, 0)
    }

    pub fn contains(self, pt: LatticePoint) -> bool {
        pt.x >= 0 && pt.y >= 0 && pt.x + pt.y <= self.degree
    }

    /// `(d+1)(d+2)/2`.
    pub fn point_count(self) -> usize {
        let d = self.degree as usize;
        (d + 1) * (d + 2) / 2
    }

    /// `d(d+3)/2`, the number of steps of the path through every lattice point.
    pub fn full_path_length(self) -> usize {
        self.point_count() - 1
    }
}

/// Strict precedence in the λ-order: smaller `x` first, ties broken by larger `y`.
pub fn lambda_less(a: LatticePoint, b: LatticePoint) -> bool {
    lambda_cmp(a, b) == Ordering::Less
}

/// Total order matching [`lambda_less`].
pub fn lambda_cmp(a: LatticePoint, b: LatticePoint) -> Ordering {
    a.x.cmp(&b.x).then(b.y.cmp(&a.y))
}

/// All lattice points of the triangle, sorted by the λ-order.
pub fn lattice_points(t: NewtonTriangle) -> Vec<LatticePoint> {
    let d = t.degree();
    (0..=d)
        .flat_map(|x| (0..=d - x).rev().map(move |y| LatticePoint::new(x, y)))
        .collect()
}

/// The `d−1` lattice points strictly inside `edge`, in λ-order.
pub fn interior_edge_points(t: NewtonTriangle, edge: BoundaryEdge) -> Vec<LatticePoint> {
    let d = t.degree();
    match edge {
        BoundaryEdge::Hypotenuse => (1..d).map(|m| LatticePoint::new(m, d - m)).collect(),
        BoundaryEdge::Vertical => (1..d).rev().map(|y| LatticePoint::new(0, y)).collect(),
        BoundaryEdge::Bottom => (1..d).map(|x| LatticePoint::new(x, 0)).collect(),
    }
}

/// Lattice area of a triangle: twice its Euclidean area.
pub fn twice_area(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> u64 {
    a.to(b).cross(a.to(c)).unsigned_abs()
}

/// Number of lattice segments a vector spans, `gcd(|dx|, |dy|)`.
pub fn lattice_length(v: EdgeVector) -> Result<u64, Error> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(gcd(v.dx.unsigned_abs(), v.dy.unsigned_abs()))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether the region on `side` of a path has a strictly convex corner at `cur`.
///
/// Plus lies to the left of the directed path, so a convex corner there is a
/// left turn; Minus lies to the right and needs a right turn. Collinear
/// triples are never strictly convex.
pub fn is_strictly_convex(
    prev: LatticePoint,
    cur: LatticePoint,
    next: LatticePoint,
    side: Side,
) -> bool {
    let turn = prev.to(cur).cross(cur.to(next));
    match side {
        Side::Plus => turn > 0,
        Side::Minus => turn < 0,
    }
}
