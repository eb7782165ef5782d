//! Counting conics through points and tangent to lines by elimination, with
//! exact rational arithmetic.
//!
//! The conics through `5 − l` points form a linear system of dimension `l`.
//! Restricting a conic to a line `P + uR` gives `q0 + q1 u + q2 u²`, and
//! tangency is `q1² − 4 q0 q2 = 0`, quadratic in the system's parameters.
//! One line: a quadratic in one parameter. Two lines: two quadrics in two
//! parameters, eliminated with a Sylvester resultant. Three lines: the dual
//! problem (three points, two lines) by projective duality.
//!
//! This is independent of the lattice-path machinery.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;
pub type Point = [Q; 3];

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn point(x: i64, y: i64) -> Point {
    [q(x), q(y), q(1)]
}

/// Univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn new(mut c: Vec<Q>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    self.0.get(i).cloned().unwrap_or_else(Q::zero)
                        + o.0.get(i).cloned().unwrap_or_else(Q::zero)
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &Q) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Q::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * q(i as i64))
                .collect(),
        )
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let factor = &r.0[rd] / &lead;
            let mut shifted = vec![Q::zero(); rd - dd];
            shifted.extend(d.0.iter().map(|c| c * &factor));
            r = r.sub(&Poly::new(shifted));
        }
        r
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Number of distinct complex roots: degree of `p / gcd(p, p')`.
    pub fn distinct_roots(&self) -> usize {
        let d = self.degree().expect("zero polynomial has every root");
        let g = self.gcd(&self.derivative());
        d - g.degree().unwrap_or(0)
    }
}

/// Values of the six conic monomials `x², xy, y², xz, yz, z²` at a point.
fn monomials(p: &Point) -> [Q; 6] {
    let [x, y, z] = p;
    [x * x, x * y, y * y, x * z, y * z, z * z]
}

fn dot(a: &[Q; 6], b: &[Q; 6]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn add3(a: &Point, b: &Point) -> Point {
    [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]]
}

fn cross(a: &Point, b: &Point) -> Point {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Basis of the kernel of `rows` (each a linear form on conic coefficients).
fn kernel(rows: &[[Q; 6]]) -> Vec<[Q; 6]> {
    let mut m: Vec<[Q; 6]> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..6 {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v = &*v / &lead;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (v, pv) in m[i].iter_mut().zip(&pivot_row) {
                    *v -= pv * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..6)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: [Q; 6] = std::array::from_fn(|_| Q::zero());
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][free].clone();
            }
            v
        })
        .collect()
}

/// Linear forms `(m0, m1, m2)` with `Q(P + uR) = c·m0 + (c·m1) u + (c·m2) u²`.
fn restriction_forms(line: &[Point; 2]) -> [[Q; 6]; 3] {
    let [p, r] = line;
    let mp = monomials(p);
    let mr = monomials(r);
    let ms = monomials(&add3(p, r));
    let m1 = std::array::from_fn(|i| &ms[i] - &mp[i] - &mr[i]);
    [mp, m1, mr]
}

/// Symmetric matrix determinant of a conic, as a function of its coefficients.
fn conic_det(c: &[Q; 6]) -> Q {
    let two = q(2);
    let (a, b, cc, d, e, f) = (&c[0], &(&c[1] / &two), &c[2], &(&c[3] / &two), &(&c[4] / &two), &c[5]);
    a * (cc * f - e * e) - b * (b * f - e * d) + d * (b * e - cc * d)
}

/// Outcome of one elimination.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCount {
    /// Distinct solutions in the affine chart of the parameter space.
    pub distinct: usize,
    /// Degree of the eliminant; equal to `distinct` means nothing was lost
    /// to multiplicities or to the chart boundary.
    pub eliminant_degree: usize,
}

/// Conics through four points tangent to one line.
pub fn one_line(points: &[Point; 4], line: &[Point; 2]) -> OracleCount {
    let rows: Vec<[Q; 6]> = points.iter().map(monomials).collect();
    let basis = kernel(&rows);
    assert_eq!(basis.len(), 2, "points are not in general position");
    let forms = restriction_forms(line);
    // Conic A + tB; each q_i is linear in t.
    let qi: Vec<Poly> = forms
        .iter()
        .map(|m| Poly::new(vec![dot(&basis[0], m), dot(&basis[1], m)]))
        .collect();
    let disc = qi[1].mul(&qi[1]).sub(&qi[0].mul(&qi[2]).scale(&q(4)));
    // No degenerate member of the pencil is tangent.
    let det = Poly::new(
        cubic_det_coeffs(&basis[0], &basis[1]),
    );
    assert_eq!(disc.gcd(&det).degree(), Some(0), "a degenerate conic is tangent");
    OracleCount {
        distinct: disc.distinct_roots(),
        eliminant_degree: disc.degree().unwrap_or(0),
    }
}

/// Coefficients in `t` of `det(A + tB)`, found by interpolation at four nodes.
fn cubic_det_coeffs(a: &[Q; 6], b: &[Q; 6]) -> Vec<Q> {
    let nodes: Vec<Q> = (0..4).map(q).collect();
    let values: Vec<Q> = nodes
        .iter()
        .map(|t| {
            let c: [Q; 6] = std::array::from_fn(|i| &a[i] + &b[i] * t);
            conic_det(&c)
        })
        .collect();
    // Lagrange interpolation into monomial coefficients.
    let mut out = Poly::zero();
    for (i, xi) in nodes.iter().enumerate() {
        let mut basis = Poly::constant(Q::one());
        let mut denom = Q::one();
        for (j, xj) in nodes.iter().enumerate() {
            if i != j {
                basis = basis.mul(&Poly::new(vec![-xj.clone(), Q::one()]));
                denom *= xi - xj;
            }
        }
        out = out.add(&basis.scale(&(&values[i] / &denom)));
    }
    let mut c = out.0;
    c.resize(4, Q::zero());
    c
}

/// A quadratic in `(s, t)` stored as coefficients of `t⁰, t¹, t²`, each a
/// polynomial in `s`.
type Bivariate = [Poly; 3];

fn tangency_quadric(basis: &[[Q; 6]], line: &[Point; 2]) -> Bivariate {
    let forms = restriction_forms(line);
    // q_i = α + β s + γ t for the conic A + sB + tC.
    let lin: Vec<(Poly, Q)> = forms
        .iter()
        .map(|m| {
            (
                Poly::new(vec![dot(&basis[0], m), dot(&basis[1], m)]),
                dot(&basis[2], m),
            )
        })
        .collect();
    let prod = |i: usize, j: usize| -> Bivariate {
        let (ai, ci) = &lin[i];
        let (aj, cj) = &lin[j];
        [
            ai.mul(aj),
            ai.scale(cj).add(&aj.scale(ci)),
            Poly::constant(ci * cj),
        ]
    };
    let sq = prod(1, 1);
    let pr = prod(0, 2);
    std::array::from_fn(|k| sq[k].sub(&pr[k].scale(&q(4))))
}

/// Determinant of a square matrix over `Q[s]` by Laplace expansion.
fn det_poly(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = Poly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][col].mul(&det_poly(&minor));
        total = if col % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    total
}

/// Sylvester resultant in `t` of two quadratics in `t`.
fn resultant_t(f: &Bivariate, g: &Bivariate) -> Poly {
    let z = Poly::zero;
    let row = |p: &Bivariate, shift: usize| -> Vec<Poly> {
        // Highest power of t first.
        let mut r = vec![z(); 4];
        r[shift] = p[2].clone();
        r[shift + 1] = p[1].clone();
        r[shift + 2] = p[0].clone();
        r
    };
    det_poly(&[row(f, 0), row(f, 1), row(g, 0), row(g, 1)])
}

/// Conics through three points tangent to two lines.
pub fn two_lines(points: &[Point; 3], lines: &[[Point; 2]; 2]) -> OracleCount {
    let rows: Vec<[Q; 6]> = points.iter().map(monomials).collect();
    let basis = kernel(&rows);
    assert_eq!(basis.len(), 3, "points are not in general position");
    let f = tangency_quadric(&basis, &lines[0]);
    let g = tangency_quadric(&basis, &lines[1]);
    assert!(
        f[2].degree() == Some(0) && g[2].degree() == Some(0),
        "t² coefficients must be nonzero constants for the chart to be complete in t"
    );
    let res = resultant_t(&f, &g);
    OracleCount {
        distinct: res.distinct_roots(),
        eliminant_degree: res.degree().unwrap_or(0),
    }
}

/// Two points spanning the line `a x + b y + c z = 0`.
fn line_points(l: &Point) -> [Point; 2] {
    let basis = [
        [q(1), q(0), q(0)],
        [q(0), q(1), q(0)],
        [q(0), q(0), q(1)],
    ];
    let mut found: Vec<Point> = Vec::new();
    for e in &basis {
        let p = cross(l, e);
        if p.iter().all(Zero::is_zero) {
            continue;
        }
        let independent = found
            .iter()
            .all(|f| !cross(f, &p).iter().all(Zero::is_zero));
        if independent {
            found.push(p);
        }
        if found.len() == 2 {
            break;
        }
    }
    [found[0].clone(), found[1].clone()]
}

/// Conics through two points tangent to three lines, given by their
/// coordinates `(a, b, c)`. Solved as the dual problem: dual conics pass
/// through the three line-points and are tangent to the two point-lines.
pub fn three_lines(points: &[Point; 2], lines: &[Point; 3]) -> OracleCount {
    let dual_points = lines.clone();
    let dual_lines = [line_points(&points[0]), line_points(&points[1])];
    two_lines(&dual_points, &dual_lines)
}

/// Coordinates of the line through two points.
pub fn line_through(a: &Point, b: &Point) -> Point {
    cross(a, b)
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

/// The fixed configurations used by the tests, with small coordinates and no
/// special position.
pub mod fixtures {
    use super::*;

    pub fn one_line_config() -> ([Point; 4], [Point; 2]) {
        (
            [point(0, 0), point(3, 1), point(1, 4), point(-2, 5)],
            [point(7, -3), point(-4, 11)],
        )
    }

    pub fn two_line_config() -> ([Point; 3], [[Point; 2]; 2]) {
        (
            [point(1, 2), point(4, -1), point(-3, 5)],
            [[point(6, 7), point(-5, 9)], [point(2, -8), point(9, 3)]],
        )
    }

    pub fn three_line_config() -> ([Point; 2], [Point; 3]) {
        (
            [point(2, 3), point(-1, 7)],
            [
                [q(3), q(-1), q(5)],
                [q(1), q(4), q(-11)],
                [q(-2), q(5), q(17)],
            ],
        )
    }
}
