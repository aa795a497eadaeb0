use proptest::prelude::*;
use strichartz_lab::geometry::*;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn pt(x: Rational, y: Rational) -> ExponentPoint {
    ExponentPoint::new(x, y).unwrap()
}

/// Rational points of the unit square with denominators up to `d`.
fn unit_point(d: i64) -> impl Strategy<Value = ExponentPoint> {
    (1..=d, 1..=d).prop_flat_map(|(dx, dy)| (0..=dx, Just(dx), 0..=dy, Just(dy))).prop_map(|(a, dx, b, dy)| pt(r(a, dx), r(b, dy)))
}

/// Half-plane form of the necessary region, R and R′ removed.
fn n_half_planes(n: u32, p: ExponentPoint) -> bool {
    let nn = n as i64;
    let d = p.x - p.y;
    let ok = d >= r(2, nn + 2) && d <= r(2, nn) && r(3, 1) * p.x + p.y >= r(2, 1) && p.x + r(3, 1) * p.y <= r(2, 1);
    let v = vertices(n).unwrap();
    ok && p != v.r && p != v.r_dual()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn dual_is_an_involution(p in unit_point(240)) {
        prop_assert_eq!(dual_point(dual_point(p)), p);
    }

    #[test]
    fn classify_is_duality_symmetric(n in 1u32..=8, p in unit_point(120)) {
        prop_assert_eq!(classify(n, p).unwrap().kind, classify(n, dual_point(p)).unwrap().kind);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn sufficient_inside_necessary(n in 3u32..=8, p in unit_point(200)) {
        let s = sufficient_region(n).unwrap();
        let big = necessary_region(n).unwrap();
        if s.contains(p) {
            prop_assert!(big.contains(p));
        }
    }

    #[test]
    fn excluded_iff_outside_necessary(n in 3u32..=8, p in unit_point(100)) {
        let v = classify(n, p).unwrap();
        prop_assert_eq!(v.kind == VerdictKind::Excluded, !necessary_region(n).unwrap().contains(p));
        prop_assert_eq!(v.kind == VerdictKind::Excluded, !v.violated.is_empty());
    }

    #[test]
    fn scaling_gap_is_affine_in_time_reciprocals(n in 1u32..=8, p in unit_point(60), a in 0i64..=12, b in 0i64..=12) {
        let c = ExponentConfig::new(n, r(a, 12), r(b, 12), p).unwrap();
        let zero = ExponentConfig::new(n, r(0, 1), r(0, 1), p).unwrap();
        prop_assert_eq!(scaling_gap(&c) - scaling_gap(&zero), r(b - a, 12));
    }
}

#[test]
fn vertices_of_s_and_h_lie_in_closed_n() {
    for n in 3..=8 {
        let hull = necessary_region(n).unwrap();
        for id in [RegionId::S, RegionId::H] {
            for &v in &build_region(n, id).unwrap().vertices {
                assert!(hull.contains_closed(v), "n = {n}, {id}: {v:?}");
            }
        }
    }
}

#[test]
fn necessary_hull_matches_half_planes_on_grid() {
    for n in 3..=8 {
        let region = necessary_region(n).unwrap();
        for i in 0..=200 {
            for j in 0..=200 {
                let p = pt(r(i, 200), r(j, 200));
                assert_eq!(region.contains(p), n_half_planes(n, p), "n = {n} at {p:?}");
            }
        }
    }
}

#[test]
fn named_points_of_n3() {
    let v = vertices(3).unwrap();
    let n = necessary_region(3).unwrap();
    let s = sufficient_region(3).unwrap();
    assert!(n.contains(v.b));
    assert!(!n.contains(v.r) && !s.contains(v.r));
    assert!(s.contains(v.r.midpoint(&v.r_dual())));
    assert!(s.contains(v.p.midpoint(&v.p_dual())));
    assert!(!s.contains(v.q.midpoint(&v.r)));
    assert_eq!(classify(3, v.b).unwrap().kind, VerdictKind::OpenGap);
    assert_eq!(classify(3, pt(r(7, 10), r(3, 10))).unwrap().kind, VerdictKind::Sufficient);
}

#[test]
fn feasible_interval_at_r_and_qrs_centroid() {
    for n in 3..=8 {
        let v = vertices(n).unwrap();
        assert!(feasible_q_interval(n, v.r).unwrap().is_none());
        assert!(feasible_q_interval(n, v.r_dual()).unwrap().is_none());
        let three = r(3, 1);
        let centroid = pt((v.q.x + v.r.x + v.s.x) / three, (v.q.y + v.r.y + v.s.y) / three);
        let iv = feasible_q_interval(n, centroid).unwrap().expect("non-empty at the QRS centroid");
        let u = iv.midpoint();
        assert!(iv.contains(u));
        let c = ExponentConfig::new(n, iv.inv_q(u), u, centroid).unwrap();
        assert_eq!(scaling_gap(&c), r(0, 1));
    }
}
