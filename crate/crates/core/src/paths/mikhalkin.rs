//! Mikhalkin's recursive path multiplicity `μ(γ) = μ₊(γ) · μ₋(γ)`.
//!
//! `μ₊` repeatedly resolves the first left turn of the path: cutting the
//! corner contributes the double area of the corner triangle times `μ₊` of the
//! shortened path, completing the corner to a parallelogram contributes `μ₊`
//! of the moved path. Paths that leave Δ_d or stop being λ-increasing count 0,
//! and the recursion bottoms out at the clockwise boundary path (value 1).
//! `μ₋` is the mirror image with right turns and the counterclockwise
//! boundary path.
//!
//! Unrolling the recursion instead of memoizing it yields the subdivisions
//! it counts, which is what separates irreducible curves from unions.

use std::collections::HashMap;

use num::{BigInt, One, Zero};

use crate::lattice::{det2, LatticePoint, LatticePolygon};

use crate::subdivisions::{cells_multiplicity, curve_components};

use super::{in_triangle, lambda_less, LatticePath};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Upper,
    Lower,
}

struct Recursion {
    degree: u32,
    side: Side,
    target: Vec<LatticePoint>,
    memo: HashMap<Vec<LatticePoint>, BigInt>,
}

impl Recursion {
    fn new(degree: u32, side: Side) -> Self {
        let d = degree as i64;
        let target = match side {
            Side::Upper => (0..=d).map(|x| LatticePoint::new(x, d - x)).collect(),
            Side::Lower => (0..=d)
                .rev()
                .map(|y| LatticePoint::new(0, y))
                .chain((1..=d).map(|x| LatticePoint::new(x, 0)))
                .collect(),
        };
        Self {
            degree,
            side,
            target,
            memo: HashMap::new(),
        }
    }

    fn turns_inward(&self, turn: i64) -> bool {
        match self.side {
            Side::Upper => turn > 0,
            Side::Lower => turn < 0,
        }
    }

    fn admissible(&self, pts: &[LatticePoint]) -> bool {
        pts.iter().all(|&p| in_triangle(self.degree, p)) && pts.windows(2).all(|w| lambda_less(w[0], w[1]))
    }

    fn eval(&mut self, pts: &[LatticePoint]) -> BigInt {
        if pts == self.target.as_slice() {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(pts) {
            return v.clone();
        }
        let corner = (1..pts.len().saturating_sub(1)).find_map(|j| {
            let turn = det2(pts[j - 1].to(pts[j]), pts[j].to(pts[j + 1]));
            self.turns_inward(turn).then_some((j, turn.abs()))
        });
        let value = match corner {
            None => BigInt::zero(),
            Some((j, double_area)) => {
                let mut cut = pts.to_vec();
                cut.remove(j);
                let mut moved = pts.to_vec();
                moved[j] = pts[j - 1].offset(pts[j].to(pts[j + 1]));

                let mut v = BigInt::zero();
                if self.admissible(&cut) {
                    v += BigInt::from(double_area) * self.eval(&cut);
                }
                if self.admissible(&moved) {
                    v += self.eval(&moved);
                }
                v
            }
        };
        self.memo.insert(pts.to_vec(), value.clone());
        value
    }
}

/// `μ(γ)` for a λ-increasing path from `(0, d)` to `(d, 0)`. Accepts any
/// λ-increasing point list, including steps that skip columns.
///
/// This is the multiplicity of the lattice path theorem, which counts
/// curves of the given genus whether or not they are irreducible: in degree 4
/// the total over all paths is 675, the 620 rational curves plus 55 unions of
/// a line and an elliptic cubic.
pub fn mikhalkin_multiplicity_of_points(degree: u32, points: &[LatticePoint]) -> BigInt {
    let upper = Recursion::new(degree, Side::Upper).eval(points);
    if upper.is_zero() {
        return upper;
    }
    upper * Recursion::new(degree, Side::Lower).eval(points)
}

/// [`mikhalkin_multiplicity_of_points`] for a path, reducible curves included.
pub fn mikhalkin_multiplicity_with_reducible(path: &LatticePath) -> BigInt {
    mikhalkin_multiplicity_of_points(path.degree(), path.points())
}

/// Number of irreducible curves through the points counted by the path, with
/// multiplicity: the recursion is unrolled into explicit subdivisions and
/// those dual to disconnected curves are dropped.
pub fn mikhalkin_multiplicity(path: &LatticePath) -> BigInt {
    mikhalkin_subdivisions(path)
        .iter()
        .filter(|cells| curve_components(cells) == 1)
        .map(|cells| cells_multiplicity(cells))
        .sum()
}

impl Recursion {
    /// Every cell list produced by the recursion on one side, without
    /// memoization. Each list fills the region between the path and the
    /// target boundary path.
    fn fillings(&self, pts: &[LatticePoint], cells: &mut Vec<LatticePolygon>, out: &mut Vec<Vec<LatticePolygon>>) {
        if pts == self.target.as_slice() {
            out.push(cells.clone());
            return;
        }
        let corner = (1..pts.len().saturating_sub(1))
            .find(|&j| self.turns_inward(det2(pts[j - 1].to(pts[j]), pts[j].to(pts[j + 1]))));
        let Some(j) = corner else { return };
        let mut cut = pts.to_vec();
        cut.remove(j);
        if self.admissible(&cut) {
            cells.push(LatticePolygon::triangle(pts[j - 1], pts[j], pts[j + 1]).expect("turning corner"));
            self.fillings(&cut, cells, out);
            cells.pop();
        }
        let mut moved = pts.to_vec();
        moved[j] = pts[j - 1].offset(pts[j].to(pts[j + 1]));
        if self.admissible(&moved) {
            cells
                .push(LatticePolygon::parallelogram(pts[j - 1], pts[j], pts[j + 1], moved[j]).expect("turning corner"));
            self.fillings(&moved, cells, out);
            cells.pop();
        }
    }
}

/// The subdivisions of Δ_d enumerated by the recursion: every combination of
/// an upper and a lower filling. Their triangle double-area products sum to
/// [`mikhalkin_multiplicity`].
pub fn mikhalkin_subdivisions(path: &LatticePath) -> Vec<Vec<LatticePolygon>> {
    let mut upper = Vec::new();
    Recursion::new(path.degree(), Side::Upper).fillings(path.points(), &mut Vec::new(), &mut upper);
    if upper.is_empty() {
        return upper;
    }
    let mut lower = Vec::new();
    Recursion::new(path.degree(), Side::Lower).fillings(path.points(), &mut Vec::new(), &mut lower);
    let mut out = Vec::with_capacity(upper.len() * lower.len());
    for u in &upper {
        for l in &lower {
            let mut cells = u.clone();
            cells.extend(l.iter().cloned());
            out.push(cells);
        }
    }
    out
}
