//! Column-wise Newton subdivisions attached to a lattice path.
//!
//! Every cell of a column-wise subdivision spans one column strip
//! `[i, i + 1] × ℝ`, so vertical lines `x = i` are unions of cell edges. Below
//! the path, the line `x = i` carries the path's own drops in column `i` on
//! top and the segments `β^i` underneath; above the path it carries the drops
//! and the segments `β′^i` above them. In the strip `[i, i + 1]`:
//!
//! * below the path, each segment on the right side (`α^{i+1} + β^{i+1}`)
//!   is either the right side of a parallelogram whose left side is one of the
//!   `β^i`, or the vertical side of a triangle pointing left;
//! * above the path, each segment on the left side (`α^i + β′^i`) is either
//!   the left side of a parallelogram whose right side is one of the
//!   `β′^{i+1}`, or the vertical side of a triangle pointing right.
//!
//! Triangles therefore have no interior lattice points and double area equal
//! to the length of their vertical side. The strips range over `i = 0..d`.

use std::collections::{BTreeSet, HashMap};

use num::{BigInt, One};

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolygon, PolygonKind};
use crate::paths::{column_profile, ColumnProfile, LatticePath};
use crate::steps::StepSequence;

/// A solution of the column constraints: `β^i` below the path and `β′^i`
/// above it, both indexed `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSequences {
    pub beta: Vec<StepSequence>,
    pub beta_prime: Vec<StepSequence>,
}

/// The closed-form data of one β-solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaTerm {
    /// Number of parallelogram arrangements.
    pub count: BigInt,
    /// Product of triangle double areas.
    pub mult: BigInt,
    /// Triangle vertical sides below (per strip) and above (per strip).
    pub triangles_below: Vec<StepSequence>,
    pub triangles_above: Vec<StepSequence>,
    pub betas: BetaSequences,
}

impl BetaTerm {
    /// All triangle sizes of the subdivisions counted by this term.
    pub fn triangle_sizes(&self) -> StepSequence {
        self.triangles_below
            .iter()
            .chain(&self.triangles_above)
            .fold(StepSequence::empty(), |acc, s| acc.add(s))
    }
}

/// `β^i` solutions below the path, `i = 0..=d`.
fn below_solutions(profile: &ColumnProfile) -> Vec<Vec<StepSequence>> {
    let d = profile.degree() as usize;
    let alpha0 = profile.alpha(0);
    // the left edge of Δ_d only carries unit segments
    if !alpha0.only_units() {
        return Vec::new();
    }
    let beta0 = StepSequence::units(profile.bottom(0));

    fn rec(
        profile: &ColumnProfile,
        i: usize,
        suffix: &mut Vec<StepSequence>,
        beta0: &StepSequence,
        out: &mut Vec<Vec<StepSequence>>,
    ) {
        // suffix holds β^{i+1}, β^{i+2}, …, β^d in reverse order
        let right = profile.alpha(i + 1).add(suffix.last().unwrap());
        if i == 0 {
            if beta0.is_sub_of(&right) {
                let mut sol: Vec<StepSequence> = vec![beta0.clone()];
                sol.extend(suffix.iter().rev().cloned());
                out.push(sol);
            }
            return;
        }
        for b in right.sub_multisets_with_total(profile.bottom(i) as u64) {
            suffix.push(b);
            rec(profile, i - 1, suffix, beta0, out);
            suffix.pop();
        }
    }

    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    let mut suffix = vec![StepSequence::empty()];
    rec(profile, d - 1, &mut suffix, &beta0, &mut out);
    out.sort();
    out
}

/// `β′^i` solutions above the path, `i = 0..=d`.
fn above_solutions(profile: &ColumnProfile) -> Vec<Vec<StepSequence>> {
    let d = profile.degree() as usize;

    fn rec(profile: &ColumnProfile, i: usize, prefix: &mut Vec<StepSequence>, out: &mut Vec<Vec<StepSequence>>) {
        let d = profile.degree() as usize;
        if i == d {
            out.push(prefix.clone());
            return;
        }
        // prefix holds β′^0..=β′^i
        let left = profile.alpha(i).add(&prefix[i]);
        for b in left.sub_multisets_with_total(profile.top_gap(i + 1) as u64) {
            prefix.push(b);
            rec(profile, i + 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    rec(profile, 0, &mut vec![StepSequence::empty()], &mut out);
    out.sort();
    out
}

/// All `(β, β′)` satisfying `β^0 = (d − Iα^0)` units, `Iα^i + Iβ^i = h(i)`,
/// `β′^0 = 0`, `d − i − Iβ′^i = h(i)`, and the nesting
/// `β^i ⊆ α^{i+1} + β^{i+1}`, `β′^{i+1} ⊆ α^i + β′^i` that keeps every
/// binomial factor nonzero.
pub fn enumerate_beta_sequences(profile: &ColumnProfile) -> Vec<BetaSequences> {
    let below = below_solutions(profile);
    let above = above_solutions(profile);
    let mut out = Vec::with_capacity(below.len() * above.len());
    for b in &below {
        for a in &above {
            out.push(BetaSequences {
                beta: b.clone(),
                beta_prime: a.clone(),
            });
        }
    }
    out
}

/// Closed-form count and multiplicity per β-solution:
/// `count = Π_i (α^{i+1}+β^{i+1} choose β^i) (α^i+β′^i choose β′^{i+1})`,
/// `mult = Π_i I^{α^{i+1}+β^{i+1}−β^i} · I^{α^i+β′^i−β′^{i+1}}`.
pub fn count_subdivisions_and_multiplicity(profile: &ColumnProfile) -> Vec<BetaTerm> {
    let d = profile.degree() as usize;
    let alphas = profile.alphas();
    enumerate_beta_sequences(profile)
        .into_iter()
        .map(|betas| {
            let mut count = BigInt::one();
            let mut mult = BigInt::one();
            let mut triangles_below = Vec::with_capacity(d);
            let mut triangles_above = Vec::with_capacity(d);
            for i in 0..d {
                let right = alphas[i + 1].add(&betas.beta[i + 1]);
                count *= right.choose(&betas.beta[i]);
                let tri = right.checked_sub(&betas.beta[i]).expect("nested by construction");
                mult *= tri.size_power();
                triangles_below.push(tri);

                let left = alphas[i].add(&betas.beta_prime[i]);
                count *= left.choose(&betas.beta_prime[i + 1]);
                let tri = left
                    .checked_sub(&betas.beta_prime[i + 1])
                    .expect("nested by construction");
                mult *= tri.size_power();
                triangles_above.push(tri);
            }
            BetaTerm {
                count,
                mult,
                triangles_below,
                triangles_above,
                betas,
            }
        })
        .collect()
}

/// `Σ count · mult` over all β-solutions of the path.
pub fn closed_form_path_multiplicity(profile: &ColumnProfile) -> BigInt {
    count_subdivisions_and_multiplicity(profile)
        .iter()
        .map(|t| &t.count * &t.mult)
        .sum()
}

/// A Newton subdivision of Δ_d assembled strip by strip from a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnwiseSubdivision {
    degree: u32,
    cells: Vec<LatticePolygon>,
    source_path: LatticePath,
    betas: BetaSequences,
}

impl ColumnwiseSubdivision {
    pub fn new(degree: u32, cells: Vec<LatticePolygon>, source_path: LatticePath, betas: BetaSequences) -> Self {
        Self {
            degree,
            cells,
            source_path,
            betas,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn cells(&self) -> &[LatticePolygon] {
        &self.cells
    }

    pub fn source_path(&self) -> &LatticePath {
        &self.source_path
    }

    /// The β-solution this arrangement realizes.
    pub fn betas(&self) -> &BetaSequences {
        &self.betas
    }

    pub fn triangles(&self) -> impl Iterator<Item = &LatticePolygon> {
        self.cells.iter().filter(|c| c.is_triangle())
    }

    pub fn parallelograms(&self) -> impl Iterator<Item = &LatticePolygon> {
        self.cells.iter().filter(|c| !c.is_triangle())
    }
}

/// One way of filling the region on one side of the path, with the segment
/// sizes (bottom-up) left on each vertical line.
#[derive(Debug, Clone)]
struct SideFilling {
    cells: Vec<LatticePolygon>,
    betas: Vec<StepSequence>,
}

fn parallelogram(x: i64, a: i64, b: i64, k: i64) -> LatticePolygon {
    LatticePolygon::parallelogram(
        LatticePoint::new(x, a),
        LatticePoint::new(x + 1, b),
        LatticePoint::new(x + 1, b + k),
        LatticePoint::new(x, a + k),
    )
    .expect("strip parallelogram is nondegenerate")
}

fn triangle(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> LatticePolygon {
    LatticePolygon::triangle(p, q, r).expect("strip triangle is nondegenerate")
}

/// Every subset of `segments` whose sizes sum to `target`, as membership
/// masks. With `units_only` only unit segments may be chosen.
fn choose_subsets(segments: &[u32], target: u32, units_only: bool) -> Vec<Vec<bool>> {
    fn rec(
        segments: &[u32],
        idx: usize,
        remaining: u32,
        units_only: bool,
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if remaining > segments[idx..].iter().sum::<u32>() {
            return;
        }
        if idx == segments.len() {
            out.push(chosen.clone());
            return;
        }
        chosen.push(false);
        rec(segments, idx + 1, remaining, units_only, chosen, out);
        chosen.pop();
        let k = segments[idx];
        if k <= remaining && (!units_only || k == 1) {
            chosen.push(true);
            rec(segments, idx + 1, remaining - k, units_only, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    rec(segments, 0, target, units_only, &mut Vec::new(), &mut out);
    out
}

fn drops_bottom_up(profile: &ColumnProfile, i: usize) -> Vec<u32> {
    profile.drops(i).iter().rev().copied().collect()
}

struct Filler<'a> {
    profile: &'a ColumnProfile,
    cells: Vec<LatticePolygon>,
    betas: Vec<StepSequence>,
    out: Vec<SideFilling>,
}

impl Filler<'_> {
    fn emit(&mut self) {
        self.out.push(SideFilling {
            cells: self.cells.clone(),
            betas: self.betas.clone(),
        });
    }

    /// Strip `[i, i+1]` below the path, given the segments `β^{i+1}` on the
    /// line `x = i + 1`. Strips are filled right to left.
    fn below(&mut self, i: usize, beta_next: Vec<u32>) {
        let mut right = beta_next;
        right.extend(drops_bottom_up(self.profile, i + 1));
        let x = i as i64;
        for chosen in choose_subsets(&right, self.profile.bottom(i), i == 0) {
            let mark = self.cells.len();
            let (mut a, mut b) = (0i64, 0i64);
            let mut beta_here = Vec::new();
            for (&k, &is_par) in right.iter().zip(&chosen) {
                let k64 = k as i64;
                if is_par {
                    self.cells.push(parallelogram(x, a, b, k64));
                    beta_here.push(k);
                    a += k64;
                } else {
                    self.cells.push(triangle(
                        LatticePoint::new(x, a),
                        LatticePoint::new(x + 1, b),
                        LatticePoint::new(x + 1, b + k64),
                    ));
                }
                b += k64;
            }
            self.betas[i] = StepSequence::from_sizes(beta_here.iter().copied());
            if i == 0 {
                self.emit();
            } else {
                self.below(i - 1, beta_here);
            }
            self.cells.truncate(mark);
        }
    }

    /// Strip `[i, i+1]` above the path, given the segments `β′^i` on the line
    /// `x = i`. Strips are filled left to right.
    fn above(&mut self, i: usize, beta_here: Vec<u32>) {
        let d = self.profile.degree() as usize;
        let mut left = drops_bottom_up(self.profile, i);
        left.extend(beta_here);
        let x = i as i64;
        for chosen in choose_subsets(&left, self.profile.top_gap(i + 1), false) {
            let mark = self.cells.len();
            let mut a = self.profile.bottom(i) as i64;
            let mut b = self.profile.h(i + 1) as i64;
            let mut beta_next = Vec::new();
            for (&k, &is_par) in left.iter().zip(&chosen) {
                let k64 = k as i64;
                if is_par {
                    self.cells.push(parallelogram(x, a, b, k64));
                    beta_next.push(k);
                    b += k64;
                } else {
                    self.cells.push(triangle(
                        LatticePoint::new(x, a),
                        LatticePoint::new(x + 1, b),
                        LatticePoint::new(x, a + k64),
                    ));
                }
                a += k64;
            }
            self.betas[i + 1] = StepSequence::from_sizes(beta_next.iter().copied());
            if i + 1 == d {
                self.emit();
            } else {
                self.above(i + 1, beta_next);
            }
            self.cells.truncate(mark);
        }
    }
}

fn side_fillings(profile: &ColumnProfile, below: bool) -> Vec<SideFilling> {
    let d = profile.degree() as usize;
    let mut f = Filler {
        profile,
        cells: Vec::new(),
        betas: vec![StepSequence::empty(); d + 1],
        out: Vec::new(),
    };
    if d == 0 {
        return f.out;
    }
    if below {
        if profile.alpha(0).only_units() {
            f.below(d - 1, Vec::new());
        }
    } else {
        f.above(0, Vec::new());
    }
    f.out
}

/// Explicit column-wise subdivisions of Δ_d compatible with `path`, one per
/// parallelogram arrangement, in deterministic order.
pub fn generate_subdivisions(path: &LatticePath) -> Result<Vec<ColumnwiseSubdivision>> {
    let profile = column_profile(path)?;
    let below = side_fillings(&profile, true);
    let above = side_fillings(&profile, false);
    let mut out = Vec::with_capacity(below.len() * above.len());
    for lo in &below {
        for hi in &above {
            let mut cells = lo.cells.clone();
            cells.extend(hi.cells.iter().cloned());
            let betas = BetaSequences {
                beta: lo.betas.clone(),
                beta_prime: hi.betas.clone(),
            };
            out.push(ColumnwiseSubdivision::new(path.degree(), cells, path.clone(), betas));
        }
    }
    Ok(out)
}

/// Product of the double areas of the triangles.
pub fn subdivision_multiplicity(s: &ColumnwiseSubdivision) -> BigInt {
    cells_multiplicity(s.cells())
}

pub fn cells_multiplicity(cells: &[LatticePolygon]) -> BigInt {
    cells
        .iter()
        .filter(|c| c.is_triangle())
        .map(|c| BigInt::from(c.double_area()))
        .product()
}

/// Interior lattice points of Δ_d used as cell vertices, minus the number of
/// parallelograms.
pub fn genus(s: &ColumnwiseSubdivision) -> i64 {
    cells_genus(s.degree(), s.cells())
}

pub fn cells_genus(d: u32, cells: &[LatticePolygon]) -> i64 {
    let d = d as i64;
    let vertices: BTreeSet<LatticePoint> = cells
        .iter()
        .flat_map(|c| c.vertices().iter().copied())
        .filter(|p| p.x > 0 && p.y > 0 && p.x + p.y < d)
        .collect();
    let parallelograms = cells.iter().filter(|c| c.kind() == PolygonKind::Parallelogram).count();
    vertices.len() as i64 - parallelograms as i64
}

/// Connected components of the simple tropical curve dual to an edge-to-edge
/// subdivision. Curve vertices are the triangles; the curve edge dual to a
/// triangle side runs straight through any parallelograms (crossings of two
/// branches) until it reaches another triangle or the boundary of Δ_d.
pub fn curve_components(cells: &[LatticePolygon]) -> usize {
    type Key = (LatticePoint, LatticePoint);
    let key = |p: LatticePoint, q: LatticePoint| -> Key {
        if p < q {
            (p, q)
        } else {
            (q, p)
        }
    };
    let mut by_edge: HashMap<Key, Vec<usize>> = HashMap::new();
    for (idx, c) in cells.iter().enumerate() {
        for (p, q) in c.edges() {
            by_edge.entry(key(p, q)).or_default().push(idx);
        }
    }

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut parent: Vec<usize> = (0..cells.len()).collect();
    let triangles: Vec<usize> = (0..cells.len()).filter(|&i| cells[i].is_triangle()).collect();

    for &t in &triangles {
        for (p, q) in cells[t].edges() {
            let (mut from, mut edge) = (t, key(p, q));
            while let Some(&next) = by_edge[&edge].iter().find(|&&c| c != from) {
                if cells[next].is_triangle() {
                    let (ra, rb) = (find(&mut parent, t), find(&mut parent, next));
                    parent[ra] = rb;
                    break;
                }
                let v = cells[next].vertices();
                let pos = (0..4)
                    .find(|&j| key(v[j], v[(j + 1) % 4]) == edge)
                    .expect("edge of its own cell");
                edge = key(v[(pos + 2) % 4], v[(pos + 3) % 4]);
                from = next;
            }
        }
    }
    let roots: BTreeSet<usize> = triangles.iter().map(|&t| find(&mut parent, t)).collect();
    roots.len()
}

/// True iff the dual curve is connected. Reducible curves (for instance a
/// line together with an elliptic cubic) also satisfy the genus formula with
/// value 0 and are dual to subdivisions compatible with some path.
pub fn is_irreducible(s: &ColumnwiseSubdivision) -> bool {
    curve_components(s.cells()) == 1
}

/// Cells lie in Δ_d and their double areas add up to `d²`.
pub fn tiles_triangle(d: u32, cells: &[LatticePolygon]) -> bool {
    let total: i64 = cells.iter().map(|c| c.double_area()).sum();
    let d = d as i64;
    total == d * d
        && cells
            .iter()
            .all(|c| c.vertices().iter().all(|p| p.x >= 0 && p.y >= 0 && p.x + p.y <= d))
}

pub(crate) fn require_genus_zero(s: &ColumnwiseSubdivision) -> Result<()> {
    match genus(s) {
        0 => Ok(()),
        g => Err(Error::Contract(format!("subdivision has genus {g}, expected 0"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::pick_identity_holds;
    use crate::paths::{enumerate_paths, has_big_step, mikhalkin_multiplicity_with_reducible};

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn tri(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> LatticePolygon {
        LatticePolygon::triangle(a.into(), b.into(), c.into()).unwrap()
    }

    fn cubic_big_step_path() -> LatticePath {
        let pts = [(0, 3), (0, 2), (0, 1), (0, 0), (1, 2), (1, 0), (2, 1), (2, 0), (3, 0)];
        LatticePath::validated(3, pts.iter().map(|&p| p.into()).collect()).unwrap()
    }

    #[test]
    fn staircase_has_one_trivial_solution() {
        for d in 1..=5 {
            let profile = column_profile(&LatticePath::staircase(d)).unwrap();
            let sols = enumerate_beta_sequences(&profile);
            assert_eq!(sols.len(), 1);
            assert!(sols[0].beta.iter().chain(&sols[0].beta_prime).all(|b| b.is_empty()));
            let terms = count_subdivisions_and_multiplicity(&profile);
            assert_eq!(
                (terms[0].count.clone(), terms[0].mult.clone()),
                (BigInt::one(), BigInt::one())
            );
        }
    }

    #[test]
    fn staircase_gives_unimodular_triangulation() {
        let s = generate_subdivisions(&LatticePath::staircase(4)).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s[0].cells().iter().all(|c| c.is_triangle() && c.double_area() == 1));
        assert_eq!(s[0].cells().len(), 16);
    }

    #[test]
    fn cubic_big_step_subdivision() {
        let s = generate_subdivisions(&cubic_big_step_path()).unwrap();
        assert_eq!(s.len(), 1);
        let areas: Vec<i64> = s[0].triangles().map(|t| t.double_area()).filter(|&a| a > 1).collect();
        assert_eq!(areas, vec![2, 2]);
        assert_eq!(subdivision_multiplicity(&s[0]), BigInt::from(4));
        assert_eq!(genus(&s[0]), 0);
        assert!(is_irreducible(&s[0]));
    }

    #[test]
    fn explicit_generation_matches_closed_form() {
        for d in 1..=4 {
            for p in enumerate_paths(d).unwrap() {
                let profile = column_profile(&p).unwrap();
                let subdivisions = generate_subdivisions(&p).unwrap();
                for t in count_subdivisions_and_multiplicity(&profile) {
                    let realized: Vec<_> = subdivisions.iter().filter(|s| s.betas() == &t.betas).collect();
                    assert_eq!(BigInt::from(realized.len()), t.count, "{p}");
                    assert!(realized.iter().all(|s| subdivision_multiplicity(s) == t.mult));
                }
                let explicit: BigInt = subdivisions.iter().map(subdivision_multiplicity).sum();
                assert_eq!(explicit, closed_form_path_multiplicity(&profile));
                assert_eq!(explicit, mikhalkin_multiplicity_with_reducible(&p));
            }
        }
    }

    #[test]
    fn generated_cells_are_lattice_free_and_tile() {
        for d in 1..=4 {
            for p in enumerate_paths(d).unwrap() {
                for s in generate_subdivisions(&p).unwrap() {
                    assert!(tiles_triangle(d, s.cells()));
                    assert_eq!(genus(&s), 0);
                    for c in s.cells() {
                        assert!(pick_identity_holds(c));
                        if c.is_triangle() {
                            assert_eq!(c.interior_count(), 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unit_step_paths_have_unimodular_triangles() {
        for p in enumerate_paths(4).unwrap().into_iter().filter(|p| !has_big_step(p)) {
            for s in generate_subdivisions(&p).unwrap() {
                assert!(s.triangles().all(|t| t.double_area() == 1));
            }
        }
    }

    #[test]
    fn genus_examples() {
        // unimodular triangulation of Δ_3 uses its interior point
        let full = generate_subdivisions(&LatticePath::staircase(3)).unwrap().remove(0);
        assert_eq!(genus(&full), 1);
        let conic = vec![
            tri((0, 0), (1, 0), (0, 1)),
            tri((1, 0), (1, 1), (0, 1)),
            tri((1, 0), (2, 0), (1, 1)),
            tri((0, 1), (1, 1), (0, 2)),
        ];
        assert_eq!(cells_genus(2, &conic), 0);
    }

    #[test]
    fn multiplicity_is_product_of_double_areas() {
        let cells = vec![
            tri((0, 0), (1, 0), (0, 1)),
            tri((0, 0), (3, 1), (1, 2)),
            tri((5, 5), (6, 5), (5, 6)),
        ];
        assert_eq!(cells_multiplicity(&cells), BigInt::from(5));
        let cells = vec![tri((0, 0), (1, 0), (0, 3)), tri((2, 0), (3, 0), (2, 1))];
        assert_eq!(cells_multiplicity(&cells), BigInt::from(3));
    }

    #[test]
    fn line_and_conic_is_reducible() {
        // a line crossing a conic twice: one triangle for the line, four for
        // the conic, and two parallelograms for the crossings
        let cells = vec![
            tri((0, 3), (0, 2), (1, 2)),
            LatticePolygon::parallelogram(pt(0, 2), pt(0, 1), pt(1, 1), pt(1, 2)).unwrap(),
            LatticePolygon::parallelogram(pt(1, 2), pt(1, 1), pt(2, 0), pt(2, 1)).unwrap(),
            tri((1, 1), (2, 0), (1, 0)),
            tri((0, 1), (1, 1), (1, 0)),
            tri((0, 1), (1, 0), (0, 0)),
            tri((2, 1), (2, 0), (3, 0)),
        ];
        assert!(tiles_triangle(3, &cells));
        assert_eq!(curve_components(&cells), 2);
    }
}
