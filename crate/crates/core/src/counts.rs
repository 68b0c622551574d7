//! Counting pipelines: rational curves through `3d − 1` points and the two
//! reductions of the elliptic count at special j-invariants.
//!
//! Every pipeline sums over the column-wise subdivisions of all paths whose
//! dual curve is irreducible. Aggregation runs in parallel over paths, and
//! per-path results are collected in enumeration order.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::paths::{column_profile, enumerate_paths, has_big_step, LatticePath};
use crate::steps::choose;
use crate::subdivisions::{
    count_subdivisions_and_multiplicity, generate_subdivisions, is_irreducible, require_genus_zero,
    subdivision_multiplicity, BetaSequences, ColumnwiseSubdivision,
};

/// `C(d − 1, 2)`, the number of interior lattice points of Δ_d.
pub fn interior_points(d: u32) -> BigInt {
    if d < 1 {
        return BigInt::zero();
    }
    choose(d as u64 - 1, 2)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `Σ_T (Area(T) − ½) + Σ_P Area(P)`.
pub fn elliptic_factor_large_j(s: &ColumnwiseSubdivision) -> Result<BigRational> {
    require_genus_zero(s)?;
    Ok(s.cells()
        .iter()
        .map(|c| if c.is_triangle() { c.area() - half() } else { c.area() })
        .sum())
}

/// `Σ_T (2·Area(T)² − ½)`.
pub fn small_j_factor(s: &ColumnwiseSubdivision) -> Result<BigRational> {
    require_genus_zero(s)?;
    let two = BigRational::from(BigInt::from(2));
    Ok(s.triangles().map(|t| &two * t.area() * t.area() - half()).sum())
}

/// The small-j factor split as `Σ_T i(T)·2Area(T)`, `Σ_T b(T)·Area(T)` and
/// `Σ_T (Area(T) − ½)`. The three parts add up to [`small_j_factor`].
pub fn small_j_factor_parts(s: &ColumnwiseSubdivision) -> Result<[BigRational; 3]> {
    require_genus_zero(s)?;
    let mut parts = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
    for t in s.triangles() {
        let area = t.area();
        parts[0] += BigRational::from(BigInt::from(2 * t.interior_count())) * &area;
        parts[1] += BigRational::from(BigInt::from(t.boundary_nonvertex_count())) * &area;
        parts[2] += area - half();
    }
    Ok(parts)
}

/// Per-path totals over the irreducible column-wise subdivisions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSummary {
    pub path: LatticePath,
    /// Number of irreducible subdivisions counted.
    pub subdivisions: usize,
    /// Σ mult.
    pub multiplicity: BigInt,
    /// Σ large-j factor · mult.
    pub large_j: BigRational,
    /// Σ small-j factor · mult.
    pub small_j: BigRational,
}

pub fn summarize_path(path: &LatticePath) -> Result<PathSummary> {
    let mut summary = PathSummary {
        path: path.clone(),
        subdivisions: 0,
        multiplicity: BigInt::zero(),
        large_j: BigRational::zero(),
        small_j: BigRational::zero(),
    };
    for s in generate_subdivisions(path)?.iter().filter(|s| is_irreducible(s)) {
        let mult = subdivision_multiplicity(s);
        let m = BigRational::from(mult.clone());
        summary.subdivisions += 1;
        summary.large_j += elliptic_factor_large_j(s)? * &m;
        summary.small_j += small_j_factor(s)? * &m;
        summary.multiplicity += mult;
    }
    Ok(summary)
}

/// Number of irreducible rational curves dual to subdivisions of the path,
/// counted with multiplicity.
pub fn path_multiplicity(path: &LatticePath) -> Result<BigInt> {
    Ok(summarize_path(path)?.multiplicity)
}

pub fn summarize_all(d: u32) -> Result<Vec<PathSummary>> {
    enumerate_paths(d)?.par_iter().map(summarize_path).collect()
}

fn integral(value: BigRational, what: &str) -> Result<BigInt> {
    if !value.is_integer() {
        return Err(Error::Consistency(format!("{what} is not an integer: {value}")));
    }
    Ok(value.to_integer())
}

/// `N_trop(d)`: rational curves of degree `d` through `3d − 1` points.
pub fn n_trop(d: u32) -> Result<BigInt> {
    Ok(summarize_all(d)?.into_iter().map(|s| s.multiplicity).sum())
}

/// `E_trop(d)` for a very large j-invariant: `C(d − 1, 2) · N_trop(d)`.
pub fn e_trop_large_j(d: u32) -> Result<BigInt> {
    Ok(interior_points(d) * n_trop(d)?)
}

/// The large-j count summed curve by curve from the per-subdivision factor.
pub fn e_trop_large_j_by_factors(d: u32) -> Result<BigInt> {
    let total: BigRational = summarize_all(d)?.into_iter().map(|s| s.large_j).sum();
    integral(total, "large-j total")
}

/// `E_trop(d)` for a very small j-invariant: `Σ_C Σ_T (2·Area(T)² − ½)·mult C`.
pub fn e_trop_small_j(d: u32) -> Result<BigInt> {
    let total: BigRational = summarize_all(d)?.into_iter().map(|s| s.small_j).sum();
    integral(total, "small-j total")
}

/// One β-solution of a path in the accelerated formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryTerm {
    pub betas: BetaSequences,
    /// Binomial product: all parallelogram arrangements.
    pub count: BigInt,
    /// Arrangements whose dual curve is irreducible.
    pub irreducible_count: BigInt,
    /// I-power product.
    pub mult: BigInt,
    /// `Σ (I² − 1)/2` over the triangle sides.
    pub factor: BigRational,
}

impl CorollaryTerm {
    pub fn value(&self) -> BigRational {
        BigRational::from(&self.irreducible_count * &self.mult) * &self.factor
    }

    /// The term with reducible arrangements left in.
    pub fn value_with_reducible(&self) -> BigRational {
        BigRational::from(&self.count * &self.mult) * &self.factor
    }
}

/// The closed-form terms of a path, each annotated with how many of its
/// arrangements are irreducible. Explicit generation is checked against the
/// closed form on the way: every arrangement must realize a listed β-solution,
/// each solution must be realized exactly `count` times, and every
/// arrangement must have multiplicity `mult`.
pub fn corollary_terms(path: &LatticePath) -> Result<Vec<CorollaryTerm>> {
    let profile = column_profile(path)?;
    let closed = count_subdivisions_and_multiplicity(&profile);
    let mut realized: BTreeMap<&BetaSequences, (BigInt, BigInt)> = BTreeMap::new();
    let subdivisions = generate_subdivisions(path)?;
    for s in &subdivisions {
        let term = closed
            .iter()
            .find(|t| &t.betas == s.betas())
            .ok_or_else(|| Error::Consistency(format!("arrangement of {path} realizes an unlisted β-solution")))?;
        if subdivision_multiplicity(s) != term.mult {
            return Err(Error::Consistency(format!("multiplicity mismatch on {path}")));
        }
        let entry = realized.entry(s.betas()).or_default();
        entry.0 += 1;
        if is_irreducible(s) {
            entry.1 += 1;
        }
    }
    closed
        .iter()
        .map(|t| {
            let (seen, irreducible) = realized.get(&t.betas).cloned().unwrap_or_default();
            if seen != t.count {
                return Err(Error::Consistency(format!(
                    "{path}: {} arrangements generated, binomial count {}",
                    seen, t.count
                )));
            }
            Ok(CorollaryTerm {
                betas: t.betas.clone(),
                count: t.count.clone(),
                irreducible_count: irreducible,
                mult: t.mult.clone(),
                factor: t.triangle_sizes().half_square_excess(),
            })
        })
        .collect()
}

/// Result of the accelerated formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryValue {
    pub value: BigInt,
    pub paths_evaluated: usize,
    pub paths_total: usize,
    /// Per evaluated path, in enumeration order: (index, contribution to N).
    pub contributions: Vec<(usize, BigRational)>,
}

fn corollary_sum(d: u32, with_reducible: bool) -> Result<(BigRational, CorollaryValue)> {
    if d < 3 {
        return Err(Error::Degree { degree: d, min: 3 });
    }
    let paths = enumerate_paths(d)?;
    let chosen: Vec<(usize, &LatticePath)> = paths.iter().enumerate().filter(|(_, p)| has_big_step(p)).collect();
    let divisor = BigRational::from(interior_points(d));
    let contributions: Vec<(usize, BigRational)> = chosen
        .par_iter()
        .map(|&(idx, p)| {
            let sum: BigRational = corollary_terms(p)?
                .iter()
                .map(|t| {
                    if with_reducible {
                        t.value_with_reducible()
                    } else {
                        t.value()
                    }
                })
                .sum();
            Ok((idx, sum / &divisor))
        })
        .collect::<Result<_>>()?;
    let total: BigRational = contributions.iter().map(|(_, v)| v.clone()).sum();
    let value = CorollaryValue {
        value: BigInt::zero(),
        paths_evaluated: chosen.len(),
        paths_total: paths.len(),
        contributions,
    };
    Ok((total, value))
}

/// `N(d)` from the accelerated formula over paths with a step of lattice
/// length at least 2. Defined for `d ≥ 3`; the division by `C(d − 1, 2)` must
/// be exact.
pub fn n_via_corollary(d: u32) -> Result<CorollaryValue> {
    let (total, mut value) = corollary_sum(d, false)?;
    value.value = integral(total, "accelerated formula")?;
    Ok(value)
}

/// The accelerated formula with the plain binomial counts, so that
/// arrangements dual to reducible curves are included. Agrees with
/// [`n_via_corollary`] up to degree 4 and exceeds it from degree 5 on.
pub fn corollary_with_reducible(d: u32) -> Result<BigRational> {
    Ok(corollary_sum(d, true)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn small_degrees() {
        assert_eq!(n_trop(1).unwrap(), int(1));
        assert_eq!(n_trop(2).unwrap(), int(1));
        assert_eq!(n_trop(3).unwrap(), int(12));
        assert_eq!(e_trop_large_j(2).unwrap(), int(0));
        assert_eq!(e_trop_small_j(2).unwrap(), int(0));
        assert_eq!(e_trop_large_j(3).unwrap(), int(12));
        assert_eq!(e_trop_small_j(3).unwrap(), int(12));
    }

    #[test]
    fn quartics() {
        assert_eq!(n_trop(4).unwrap(), int(620));
        assert_eq!(e_trop_large_j(4).unwrap(), int(1860));
        assert_eq!(e_trop_large_j_by_factors(4).unwrap(), int(1860));
        assert_eq!(e_trop_small_j(4).unwrap(), int(1860));
    }

    #[test]
    fn corollary_small_degrees() {
        assert!(matches!(n_via_corollary(2), Err(Error::Degree { .. })));
        let c3 = n_via_corollary(3).unwrap();
        assert_eq!(c3.value, int(12));
        assert_eq!(c3.contributions.iter().filter(|(_, v)| !v.is_zero()).count(), 1);
        let c4 = n_via_corollary(4).unwrap();
        assert_eq!(c4.value, int(620));
        assert!(c4.paths_evaluated < c4.paths_total);
        assert_eq!(corollary_with_reducible(4).unwrap(), BigRational::from(int(620)));
    }

    #[test]
    fn cubic_big_step_term() {
        let paths = enumerate_paths(3).unwrap();
        let terms: Vec<CorollaryTerm> = paths
            .iter()
            .filter(|p| has_big_step(p))
            .flat_map(|p| corollary_terms(p).unwrap())
            .collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].count, int(1));
        assert_eq!(terms[0].mult, int(4));
        assert_eq!(terms[0].factor, BigRational::from(int(3)));
    }

    #[test]
    fn small_j_parts_add_up() {
        for p in enumerate_paths(4).unwrap() {
            for s in generate_subdivisions(&p).unwrap() {
                let parts = small_j_factor_parts(&s).unwrap();
                let sum: BigRational = parts.iter().cloned().sum();
                assert_eq!(sum, small_j_factor(&s).unwrap());
                // column-wise triangles have no interior points
                assert!(parts[0].is_zero());
            }
        }
    }

    #[test]
    fn interior_point_counts() {
        assert_eq!(interior_points(1), int(0));
        assert_eq!(interior_points(2), int(0));
        assert_eq!(interior_points(3), int(1));
        assert_eq!(interior_points(5), int(6));
    }
}
