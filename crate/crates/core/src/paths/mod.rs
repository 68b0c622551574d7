//! λ-increasing lattice paths in the degree-d triangle for
//! `λ(x, y) = x − εy`, ε → 0⁺.
//!
//! The λ-order on lattice points is realized exactly as "x ascending, then y
//! descending". Paths relevant to rational curves through `3d − 1` points have
//! exactly `3d − 1` steps; every step either moves one column to the right or
//! stays in its column and moves down.

mod mikhalkin;
mod profile;

pub use mikhalkin::{
    mikhalkin_multiplicity, mikhalkin_multiplicity_of_points, mikhalkin_multiplicity_with_reducible,
    mikhalkin_subdivisions,
};
pub use profile::{column_profile, profile_to_path, ColumnProfile};

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

/// Strict λ-order: `p` precedes `q`.
pub fn lambda_less(p: LatticePoint, q: LatticePoint) -> bool {
    p.x < q.x || (p.x == q.x && p.y > q.y)
}

pub fn in_triangle(d: u32, p: LatticePoint) -> bool {
    p.x >= 0 && p.y >= 0 && p.x + p.y <= d as i64
}

/// Number of steps of a path dual to a rational curve through `3d − 1` points.
pub fn rational_step_count(d: u32) -> usize {
    3 * d as usize - 1
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    degree: u32,
    points: Vec<LatticePoint>,
}

impl LatticePath {
    /// Wraps a point list without validation; see [`is_lambda_increasing`].
    pub fn new(degree: u32, points: Vec<LatticePoint>) -> Self {
        Self { degree, points }
    }

    /// Wraps a point list, rejecting anything that is not a λ-increasing path
    /// with column-local steps.
    pub fn validated(degree: u32, points: Vec<LatticePoint>) -> Result<Self> {
        let path = Self::new(degree, points);
        if !is_lambda_increasing(&path) {
            return Err(Error::InvalidPath(format!("{path} is not λ-increasing in Δ_{degree}")));
        }
        if let Some((p, q)) = path.steps().find(|(p, q)| !is_column_step(*p, *q)) {
            return Err(Error::InvalidPath(format!("step {p}->{q} skips a column")));
        }
        Ok(path)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn step_count(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn steps(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }

    /// The path visiting every lattice point of Δ_d column by column.
    pub fn staircase(d: u32) -> Self {
        let d = d as i64;
        let points = (0..=d)
            .flat_map(|x| (0..=d - x).rev().map(move |y| LatticePoint::new(x, y)))
            .collect();
        Self::new(d as u32, points)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("->"))
    }
}

fn is_column_step(p: LatticePoint, q: LatticePoint) -> bool {
    q.x == p.x + 1 || (q.x == p.x && q.y < p.y)
}

/// True iff the path starts at `(0, d)`, ends at `(d, 0)`, stays inside Δ_d
/// and is strictly increasing for the λ-order.
pub fn is_lambda_increasing(path: &LatticePath) -> bool {
    let d = path.degree as i64;
    let pts = path.points();
    pts.len() >= 2
        && pts[0] == LatticePoint::new(0, d)
        && pts[pts.len() - 1] == LatticePoint::new(d, 0)
        && pts.iter().all(|&p| in_triangle(path.degree, p))
        && pts.windows(2).all(|w| lambda_less(w[0], w[1]))
}

/// True iff some step has lattice length at least 2. Steps that change column
/// have `dx = 1` and are primitive, so this is a vertical drop of at least 2.
pub fn has_big_step(path: &LatticePath) -> bool {
    path.steps().any(|(p, q)| p.to(q).weight() >= 2)
}

/// All λ-increasing column-local paths from `(0, d)` to `(d, 0)` with exactly
/// `3d − 1` steps, in increasing lexicographic order of their point lists.
pub fn enumerate_paths(d: u32) -> Result<Vec<LatticePath>> {
    if d == 0 {
        return Err(Error::Degree { degree: 0, min: 1 });
    }
    Ok(enumerate_paths_with_steps(d, rational_step_count(d)))
}

/// Same as [`enumerate_paths`] with an arbitrary step count.
pub fn enumerate_paths_with_steps(d: u32, steps: usize) -> Vec<LatticePath> {
    let di = d as i64;
    // Points strictly after column x (columns x+1..=d).
    let later_points = |x: i64| -> usize { ((x + 1)..=di).map(|c| (di - c + 1) as usize).sum() };
    let feasible = |q: LatticePoint, remaining: usize| -> bool {
        if q.x == di {
            return remaining == 0;
        }
        let min = (di - q.x) as usize;
        let max = q.y as usize + later_points(q.x);
        (min..=max).contains(&remaining)
    };

    let start = LatticePoint::new(0, di);
    let end = LatticePoint::new(di, 0);
    let mut out = Vec::new();
    if !feasible(start, steps) {
        return out;
    }

    let candidates = |p: LatticePoint, remaining: usize| -> Vec<LatticePoint> {
        if remaining == 0 {
            return Vec::new();
        }
        let mut next: Vec<LatticePoint> = (0..p.y)
            .map(|y| LatticePoint::new(p.x, y))
            .chain((0..=(di - p.x - 1).max(-1)).map(|y| LatticePoint::new(p.x + 1, y)))
            .filter(|q| in_triangle(d, *q) && feasible(*q, remaining - 1))
            .collect();
        // popped from the back, so store descending
        next.reverse();
        next
    };

    let mut current = vec![start];
    let mut stack = vec![candidates(start, steps)];
    while let Some(frame) = stack.last_mut() {
        match frame.pop() {
            Some(q) => {
                current.push(q);
                let remaining = steps + 1 - current.len();
                if q == end {
                    if remaining == 0 {
                        out.push(LatticePath::new(d, current.clone()));
                    }
                    current.pop();
                } else {
                    stack.push(candidates(q, remaining));
                }
            }
            None => {
                stack.pop();
                current.pop();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&p| p.into()).collect()
    }

    /// Independent recursive enumeration over all admissible successor points.
    fn brute_force(d: u32, steps: usize) -> Vec<Vec<LatticePoint>> {
        fn rec(d: u32, steps: usize, cur: &mut Vec<LatticePoint>, out: &mut Vec<Vec<LatticePoint>>) {
            let p = *cur.last().unwrap();
            if p == LatticePoint::new(d as i64, 0) {
                if cur.len() == steps + 1 {
                    out.push(cur.clone());
                }
                return;
            }
            if cur.len() > steps {
                return;
            }
            for x in 0..=d as i64 {
                for y in 0..=d as i64 {
                    let q = LatticePoint::new(x, y);
                    if in_triangle(d, q) && lambda_less(p, q) && is_column_step(p, q) {
                        cur.push(q);
                        rec(d, steps, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(d, steps, &mut vec![LatticePoint::new(0, d as i64)], &mut out);
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_for_small_degrees() {
        for d in 1..=4 {
            let got: Vec<_> = enumerate_paths(d).unwrap().into_iter().map(|p| p.points).collect();
            assert_eq!(got, brute_force(d, rational_step_count(d)), "d={d}");
        }
    }

    #[test]
    fn degree_one_has_single_rational_path() {
        let paths = enumerate_paths(1).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].points(), pts(&[(0, 1), (0, 0), (1, 0)]).as_slice());
    }

    #[test]
    fn degree_zero_is_rejected() {
        assert_eq!(enumerate_paths(0), Err(Error::Degree { degree: 0, min: 1 }));
    }

    #[test]
    fn output_is_sorted_and_valid() {
        for d in 1..=5 {
            let paths = enumerate_paths(d).unwrap();
            assert!(paths.windows(2).all(|w| w[0].points < w[1].points));
            for p in &paths {
                assert!(is_lambda_increasing(p));
                assert_eq!(p.step_count(), rational_step_count(d));
            }
        }
    }

    #[test]
    fn lambda_increasing_examples() {
        assert!(is_lambda_increasing(&LatticePath::staircase(4)));
        let repeated = LatticePath::new(1, pts(&[(0, 1), (0, 0), (0, 0), (1, 0)]));
        assert!(!is_lambda_increasing(&repeated));
        let reversed = LatticePath::new(1, pts(&[(1, 0), (0, 0), (0, 1)]));
        assert!(!is_lambda_increasing(&reversed));
        let outside = LatticePath::new(1, pts(&[(0, 1), (1, 1), (1, 0)]));
        assert!(!is_lambda_increasing(&outside));
    }

    #[test]
    fn validated_rejects_column_skips() {
        let skip = pts(&[(0, 2), (0, 1), (0, 0), (2, 0)]);
        assert!(matches!(LatticePath::validated(2, skip), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn big_steps() {
        assert!(!has_big_step(&LatticePath::staircase(5)));
        let big = LatticePath::new(3, pts(&[(0, 3), (0, 1), (1, 0), (2, 0), (3, 0)]));
        assert!(has_big_step(&big));
    }
}
