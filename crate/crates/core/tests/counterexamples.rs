use strichartz_lab::counterexamples::*;
use strichartz_lab::duhamel::{duhamel_timestep, DyadicScale, LowerLimit, TimestepOptions};
use strichartz_lab::geometry::*;
use strichartz_lab::spectral::{Field, GridSpec};

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn zero() -> Rational {
    r(0, 1)
}

fn unit(v: Rational) -> bool {
    v >= zero() && v <= r(1, 1)
}

/// Scale-invariant configs on a 1/24 grid in (1/q, 1/r): for each, the
/// input time reciprocal `u` is chosen by `pick` and `x` follows from the
/// scaling relation.
fn scale_invariant_configs(pick: impl Fn(u32, Rational, Rational) -> Vec<Rational>) -> Vec<ExponentConfig> {
    let mut out = Vec::new();
    for n in 1..=8u32 {
        let nn = r(n as i64, 1);
        for a in 0..=24 {
            for b in 0..=24 {
                let (v, y) = (r(a, 24), r(b, 24));
                for u in pick(n, v, y) {
                    let x = y + r(2, 1) * (r(1, 1) - (u - v)) / nn;
                    if unit(u) && unit(x) {
                        let c = ExponentConfig::new(n, v, u, ExponentPoint::new(x, y).unwrap()).unwrap();
                        assert_eq!(scaling_gap(&c), zero());
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn knapp_quotient_vanishes_on_the_q3_boundary() {
    let configs = scale_invariant_configs(|n, v, y| {
        let nn = r(n as i64, 1);
        vec![v + r(2, 1) * nn * y - nn + r(1, 1)]
    });
    assert!(configs.len() > 50);
    for c in configs {
        let p = predicted_exponents(Family::Knapp, &c);
        assert_eq!(p.e_quotient, zero(), "{c:?}");
        assert!(p.quotient_bounded());
    }
}

#[test]
fn knapp_quotient_negative_inside_q3() {
    let configs = scale_invariant_configs(|n, v, y| {
        let nn = r(n as i64, 1);
        let edge = v + r(2, 1) * nn * y - nn + r(1, 1);
        (1..=4).map(|k| edge + r(k, 8)).collect()
    });
    assert!(configs.len() > 50);
    for c in configs {
        assert!(predicted_exponents(Family::Knapp, &c).e_quotient < zero(), "{c:?}");
    }
}

/// In `log δ` slopes the tube quotient is bounded as `δ → 0` iff its exponent
/// is non-negative; on the (q2) boundary it vanishes.
#[test]
fn tube_quotient_vanishes_on_the_q2_boundary() {
    let mut seen = 0;
    for n in 1..=8u32 {
        let nn = r(n as i64, 1);
        for a in 0..=24 {
            for b in 0..=24 {
                for d in 0..=24 {
                    let (v, y, u) = (r(a, 24), r(b, 24), r(d, 24));
                    // (q2) with equality: u − v + (n+1)(x − y) = 2
                    let x = y + (r(2, 1) - (u - v)) / (nn + r(1, 1));
                    if !unit(x) {
                        continue;
                    }
                    let c = ExponentConfig::new(n, v, u, ExponentPoint::new(x, y).unwrap()).unwrap();
                    let p = predicted_exponents(Family::Tube, &c);
                    assert_eq!(p.e_quotient, zero(), "{c:?}");
                    // strictly inside (q2): bounded, positive exponent
                    let x2 = x + r(1, 48);
                    if unit(x2) {
                        let c2 = ExponentConfig::new(n, v, u, ExponentPoint::new(x2, y).unwrap()).unwrap();
                        assert!(predicted_exponents(Family::Tube, &c2).e_quotient > zero());
                    }
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 1000);
}

#[test]
fn scaling_exponent_is_twice_the_gap() {
    for n in 1..=6u32 {
        for a in 0..=12 {
            for b in 0..=12 {
                let p = ExponentPoint::new(r(a, 12), r(b, 12)).unwrap();
                let c = ExponentConfig::new(n, r(1, 4), r(2, 3), p).unwrap();
                assert_eq!(predicted_exponents(Family::Scaling, &c).e_quotient, r(2, 1) * scaling_gap(&c));
            }
        }
    }
}

#[test]
fn duality_maps_knapp_condition_to_its_partner() {
    // the second (q3) inequality is the first one read on the dual config
    let p = ExponentPoint::new(r(5, 6), r(1, 6)).unwrap();
    let c = ExponentConfig::new(1, r(1, 4), r(1, 2), p).unwrap();
    let d = c.dual();
    assert_eq!(d.dual(), c);
    let n = c.dim();
    let lhs = d.inv_qt_prime - d.inv_q;
    let partner = c.inv_qt_prime - c.inv_q;
    assert_eq!(lhs, partner);
    assert_eq!(r(2, 1) * n * d.point.y - n + r(1, 1), n + r(1, 1) - r(2, 1) * n * c.point.x);
}

#[test]
fn scaling_ratio_for_a_smooth_field() {
    let grid = GridSpec::cube(1, 64.0, 128, 64.0, 128).unwrap();
    let f = Field::from_fn(&grid, |x, t| {
        let env = (-(x[0] / 4.0).powi(2) - ((t - 20.0) / 4.0).powi(2)).exp();
        num_complex::Complex64::from_polar(env, 0.5 * x[0])
    });
    let c = ExponentConfig::new(1, zero(), r(1, 2), ExponentPoint::new(r(1, 1), zero()).unwrap()).unwrap();
    assert_eq!(scaling_gap(&c), zero());
    let m = scaling_measure(&f, &c, &[2.0], TimestepOptions::new(LowerLimit::Zero, 2)).unwrap();
    assert!((m[0].ratio - 1.0).abs() < 1e-9, "ratio {}", m[0].ratio);
}

#[test]
fn tube_output_is_large_on_its_region() {
    let p = ExponentPoint::new(r(1, 1), zero()).unwrap();
    let c = ExponentConfig::new(1, r(1, 4), r(1, 1), p).unwrap();
    let params = TubeParams::new(DyadicScale::new(-1).unwrap(), c).unwrap();
    let m = tube_measure(&params).unwrap();
    assert!(m.scaled_min >= 0.05, "{m:?}");
    let f = tube_field(&params).unwrap();
    let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, params.substeps)).unwrap();
    assert_eq!(u.field.grid(), f.grid());
}
