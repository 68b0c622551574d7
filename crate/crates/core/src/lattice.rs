//! Lattice points, integer directions and the two polygon shapes that occur in
//! dual subdivisions of simple curves.

use std::fmt;

use num::integer::gcd;
use num::{BigInt, BigRational};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Vector from `self` to `other`.
    pub fn to(self, other: LatticePoint) -> Direction {
        Direction::new(other.x - self.x, other.y - self.y)
    }

    pub fn offset(self, d: Direction) -> LatticePoint {
        LatticePoint::new(self.x + d.dx, self.y + d.dy)
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

/// An integer vector in Z². Edge directions of plane curves carry their weight,
/// so a direction is `weight * primitive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    pub dx: i64,
    pub dy: i64,
}

impl Direction {
    pub const fn new(dx: i64, dy: i64) -> Self {
        Self { dx, dy }
    }

    pub fn is_zero(self) -> bool {
        self.dx == 0 && self.dy == 0
    }

    /// Lattice length: gcd of the absolute components, 0 for the zero vector.
    pub fn weight(self) -> i64 {
        gcd(self.dx, self.dy)
    }

    pub fn is_primitive(self) -> bool {
        self.weight() == 1
    }

    /// Splits a nonzero vector into `(weight, primitive direction)`.
    pub fn decompose(self) -> Option<(i64, Direction)> {
        let w = self.weight();
        (w != 0).then(|| (w, Direction::new(self.dx / w, self.dy / w)))
    }

    pub fn scale(self, k: i64) -> Direction {
        Direction::new(self.dx * k, self.dy * k)
    }
}

impl std::ops::Add for Direction {
    type Output = Direction;
    fn add(self, rhs: Direction) -> Direction {
        Direction::new(self.dx + rhs.dx, self.dy + rhs.dy)
    }
}

impl std::ops::Neg for Direction {
    type Output = Direction;
    fn neg(self) -> Direction {
        Direction::new(-self.dx, -self.dy)
    }
}

impl From<(i64, i64)> for Direction {
    fn from((dx, dy): (i64, i64)) -> Self {
        Self::new(dx, dy)
    }
}

/// Signed determinant `u.dx * v.dy - u.dy * v.dx`.
pub fn det2(u: Direction, v: Direction) -> i64 {
    u.dx * v.dy - u.dy * v.dx
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolygonKind {
    Triangle,
    Parallelogram,
}

/// A lattice triangle or parallelogram. Vertices are stored counterclockwise
/// starting from the lexicographically smallest one, so derived equality is
/// geometric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
    kind: PolygonKind,
}

impl LatticePolygon {
    pub fn triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Self> {
        Self::from_cycle(vec![a, b, c], PolygonKind::Triangle)
    }

    /// Vertices in cyclic order (either orientation).
    pub fn parallelogram(a: LatticePoint, b: LatticePoint, c: LatticePoint, d: LatticePoint) -> Result<Self> {
        if a.to(b) != d.to(c) {
            return Err(Error::InvalidPolygon(format!(
                "opposite edges of {a},{b},{c},{d} differ"
            )));
        }
        Self::from_cycle(vec![a, b, c, d], PolygonKind::Parallelogram)
    }

    fn from_cycle(mut vertices: Vec<LatticePoint>, kind: PolygonKind) -> Result<Self> {
        let n = vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                if vertices[i] == vertices[j] {
                    return Err(Error::DegeneratePolygon(format!("repeated vertex {}", vertices[i])));
                }
            }
        }
        let turns: Vec<i64> = (0..n)
            .map(|i| {
                let p = vertices[i];
                let q = vertices[(i + 1) % n];
                let r = vertices[(i + 2) % n];
                det2(p.to(q), q.to(r))
            })
            .collect();
        if turns.contains(&0) {
            return Err(Error::DegeneratePolygon(format!("collinear vertices in {vertices:?}")));
        }
        let ccw = turns[0] > 0;
        if turns.iter().any(|&t| (t > 0) != ccw) {
            return Err(Error::InvalidPolygon(format!(
                "vertices {vertices:?} are not strictly convex"
            )));
        }
        if !ccw {
            vertices.reverse();
        }
        let start = (0..n).min_by_key(|&i| vertices[i]).unwrap_or(0);
        vertices.rotate_left(start);
        Ok(Self { vertices, kind })
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn kind(&self) -> PolygonKind {
        self.kind
    }

    pub fn is_triangle(&self) -> bool {
        self.kind == PolygonKind::Triangle
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the Euclidean area (shoelace).
    pub fn double_area(&self) -> i64 {
        let origin = self.vertices[0];
        self.vertices
            .windows(2)
            .skip(1)
            .map(|w| det2(origin.to(w[0]), origin.to(w[1])))
            .sum()
    }

    pub fn area(&self) -> BigRational {
        BigRational::new(BigInt::from(self.double_area()), BigInt::from(2))
    }

    /// Lattice points on the boundary that are not vertices.
    pub fn boundary_nonvertex_count(&self) -> i64 {
        self.edges().map(|(p, q)| p.to(q).weight() - 1).sum()
    }

    /// Lattice points strictly inside, from Pick's theorem:
    /// `2A = 2i + B - 2` with `B` all boundary lattice points.
    pub fn interior_count(&self) -> i64 {
        let boundary_all = self.boundary_nonvertex_count() + self.vertices.len() as i64;
        (self.double_area() - boundary_all + 2) / 2
    }

    /// Interior lattice points by scanning the bounding box.
    pub fn interior_count_by_scan(&self) -> i64 {
        let (lo, hi) = self.bounding_box();
        let mut count = 0;
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                if self.strictly_contains(LatticePoint::new(x, y)) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    pub fn strictly_contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| det2(a.to(b), a.to(p)) > 0)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| det2(a.to(b), a.to(p)) >= 0)
    }
}

/// Pick's formula in the two normalizations used for simple subdivisions:
/// `Area = i + b/2 + 1/2` for triangles and `Area = i + b/2 + 1` for
/// parallelograms, where `b` excludes vertices. The interior count is taken
/// from a direct scan so the check is not circular.
pub fn pick_identity_holds(p: &LatticePolygon) -> bool {
    let i = BigRational::from_integer(p.interior_count_by_scan().into());
    let b = BigRational::new(p.boundary_nonvertex_count().into(), 2.into());
    let constant = match p.kind() {
        PolygonKind::Triangle => BigRational::new(1.into(), 2.into()),
        PolygonKind::Parallelogram => BigRational::from_integer(1.into()),
    };
    p.area() == i + b + constant
}
