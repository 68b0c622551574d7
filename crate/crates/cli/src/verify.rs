//! Verification suites. Each returns a summary line on success and a
//! description of the first failure otherwise.

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropcount::counts::{
    elliptic_factor_large_j, interior_points, path_multiplicity, small_j_factor, small_j_factor_parts,
};
use tropcount::elliptic::{wall_determinants, wall_determinants_by_elimination, wall_identity_holds};
use tropcount::lattice::{pick_identity_holds, Direction, LatticePoint, LatticePolygon};
use tropcount::paths::{
    column_profile, enumerate_paths, mikhalkin_multiplicity, mikhalkin_multiplicity_with_reducible,
};
use tropcount::subdivisions::{
    closed_form_path_multiplicity, generate_subdivisions, genus, subdivision_multiplicity, tiles_triangle,
};

use crate::error::CliError;

fn fail(msg: String) -> CliError {
    CliError::Verification(msg)
}

fn random_polygon(rng: &mut ChaCha8Rng) -> Option<LatticePolygon> {
    let pt = |rng: &mut ChaCha8Rng| LatticePoint::new(rng.gen_range(0..=8), rng.gen_range(0..=8));
    if rng.gen_bool(0.5) {
        let (a, b, c) = (pt(rng), pt(rng), pt(rng));
        LatticePolygon::triangle(a, b, c).ok()
    } else {
        let a = pt(rng);
        let e = Direction::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        let f = Direction::new(rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        LatticePolygon::parallelogram(a, a.offset(e), a.offset(e).offset(f), a.offset(f)).ok()
    }
}

pub fn pick(trials: u32, seed: u64) -> Result<String, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for trial in 0..trials {
        let Some(p) = random_polygon(&mut rng) else { continue };
        checked += 1;
        if !pick_identity_holds(&p) || p.interior_count() != p.interior_count_by_scan() {
            return Err(fail(format!(
                "Pick check failed for {:?} (seed {seed}, trial {trial})",
                p.vertices()
            )));
        }
    }
    Ok(format!("pick: {checked} polygons checked (seed {seed})"))
}

pub fn walls(trials: u32, seed: u64) -> Result<String, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let dir = |rng: &mut ChaCha8Rng| Direction::new(rng.gen_range(-10..=10), rng.gen_range(-10..=10));
        let (u, v1, v2) = (dir(&mut rng), dir(&mut rng), dir(&mut rng));
        let (n, m) = loop {
            let (n, m): (i64, i64) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
            if num::integer::gcd(n, m) == 1 {
                break (n, m);
            }
        };
        let ok = wall_identity_holds(u, v1, v2, n, m)?
            && wall_determinants(u, v1, v2, n, m)? == wall_determinants_by_elimination(u, v1, v2, n, m)?;
        if !ok {
            return Err(fail(format!(
                "wall identity failed for u={u:?} v1={v1:?} v2={v2:?} n={n} m={m} (seed {seed}, trial {trial})"
            )));
        }
    }
    Ok(format!("walls: {trials} trials passed (seed {seed})"))
}

pub fn oracles(d: u32) -> Result<String, CliError> {
    let paths = enumerate_paths(d)?;
    let (mut all, mut irreducible) = (BigInt::from(0), BigInt::from(0));
    for (id, p) in paths.iter().enumerate() {
        let recursive = mikhalkin_multiplicity_with_reducible(p);
        let closed = closed_form_path_multiplicity(&column_profile(p)?);
        let explicit: BigInt = generate_subdivisions(p)?.iter().map(subdivision_multiplicity).sum();
        if recursive != closed || closed != explicit {
            return Err(fail(format!(
                "path {id} {p}: recursion {recursive}, closed form {closed}, explicit {explicit}"
            )));
        }
        let recursive_irr = mikhalkin_multiplicity(p);
        let explicit_irr = path_multiplicity(p)?;
        if recursive_irr != explicit_irr {
            return Err(fail(format!(
                "path {id} {p}: irreducible recursion {recursive_irr}, column-wise {explicit_irr}"
            )));
        }
        all += recursive;
        irreducible += recursive_irr;
    }
    Ok(format!(
        "oracles: {} paths agree; total {all} with reducible curves, {irreducible} irreducible",
        paths.len()
    ))
}

pub fn factors(d: u32) -> Result<String, CliError> {
    let expected = BigRational::from(interior_points(d));
    let mut count = 0usize;
    for (id, p) in enumerate_paths(d)?.iter().enumerate() {
        for s in generate_subdivisions(p)? {
            count += 1;
            let bad = |what: &str| fail(format!("path {id} {p}: {what}"));
            if genus(&s) != 0 {
                return Err(bad("genus is not 0"));
            }
            if !tiles_triangle(d, s.cells()) {
                return Err(bad("cells do not tile the triangle"));
            }
            if !s.cells().iter().all(pick_identity_holds) {
                return Err(bad("Pick identity fails on a cell"));
            }
            if elliptic_factor_large_j(&s)? != expected {
                return Err(bad("large-j factor differs from the interior point count"));
            }
            let parts: BigRational = small_j_factor_parts(&s)?.into_iter().sum();
            if parts != small_j_factor(&s)? {
                return Err(bad("small-j factor decomposition does not add up"));
            }
        }
    }
    Ok(format!(
        "factors: {count} subdivisions of degree {d} checked, large-j factor {expected}"
    ))
}
