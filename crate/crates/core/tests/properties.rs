use num::BigInt;
use proptest::prelude::*;

use tropcount::counts::{n_trop, path_multiplicity};
use tropcount::lattice::{det2, pick_identity_holds, Direction, LatticePoint, LatticePolygon};
use tropcount::paths::{column_profile, enumerate_paths, is_lambda_increasing, profile_to_path};

fn point(max: i64) -> impl Strategy<Value = LatticePoint> {
    (0..=max, 0..=max).prop_map(|(x, y)| LatticePoint::new(x, y))
}

fn vector() -> impl Strategy<Value = Direction> {
    (-6i64..=6, -6i64..=6).prop_map(|(x, y)| Direction::new(x, y))
}

proptest! {
    #[test]
    fn pick_holds_on_triangles(a in point(8), b in point(8), c in point(8)) {
        if let Ok(t) = LatticePolygon::triangle(a, b, c) {
            prop_assert!(pick_identity_holds(&t));
            prop_assert!(t.double_area() > 0);
            prop_assert_eq!(t.interior_count(), t.interior_count_by_scan());
        }
    }

    #[test]
    fn pick_holds_on_parallelograms(a in point(8), e in vector(), f in vector()) {
        let quad = LatticePolygon::parallelogram(a, a.offset(e), a.offset(e).offset(f), a.offset(f));
        if let Ok(p) = quad {
            prop_assert!(pick_identity_holds(&p));
            prop_assert_eq!(p.interior_count(), p.interior_count_by_scan());
        }
    }

    #[test]
    fn determinant_is_triangle_double_area(u in vector(), v in vector()) {
        prop_assume!(det2(u, v) != 0);
        let o = LatticePoint::new(0, 0);
        let t = LatticePolygon::triangle(o, o.offset(u), o.offset(v)).unwrap();
        prop_assert_eq!(det2(u, v).abs(), t.double_area());
    }

    #[test]
    fn normalization_ignores_vertex_order(a in point(8), b in point(8), c in point(8)) {
        if let Ok(t) = LatticePolygon::triangle(a, b, c) {
            prop_assert_eq!(LatticePolygon::triangle(c, a, b).unwrap(), t.clone());
            prop_assert_eq!(LatticePolygon::triangle(b, a, c).unwrap(), t);
        }
    }
}

#[test]
fn profiles_round_trip_through_degree_five() {
    for d in 1..=5 {
        for p in enumerate_paths(d).unwrap() {
            assert!(is_lambda_increasing(&p));
            assert_eq!(profile_to_path(&column_profile(&p).unwrap()), p);
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_paths(5).unwrap(), enumerate_paths(5).unwrap());
}

#[test]
fn rational_counts_of_low_degree() {
    let expected = [1, 1, 12, 620];
    for (d, n) in (1..=4).zip(expected) {
        assert_eq!(n_trop(d).unwrap(), BigInt::from(n), "d={d}");
    }
}

#[test]
fn only_one_cubic_big_step_path_carries_curves() {
    let carrying: Vec<_> = enumerate_paths(3)
        .unwrap()
        .into_iter()
        .filter(|p| tropcount::paths::has_big_step(p) && path_multiplicity(p).unwrap() != BigInt::from(0))
        .collect();
    assert_eq!(carrying.len(), 1);
    assert_eq!(path_multiplicity(&carrying[0]).unwrap(), BigInt::from(4));
}
