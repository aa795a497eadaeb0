use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strichartz_lab::spectral::*;

fn random_slice(len: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

fn random_field(grid: &GridSpec, seed: u64) -> Field {
    Field::from_samples(grid, random_slice(grid.sample_count(), seed), Side::Physical).unwrap()
}

fn rel(a: &[Complex64], b: &[Complex64]) -> f64 {
    let num: f64 = a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum();
    (num / den).sqrt()
}

/// `e^{itΔ}` of `exp(−x²/(2s))`: the variance parameter becomes `s + 2it`.
fn gaussian(x: f64, t: f64, s: f64) -> Complex64 {
    let st = Complex64::new(s, 2.0 * t);
    (Complex64::new(s, 0.0) / st).sqrt() * (-(x * x) / (2.0 * st)).exp()
}

#[test]
fn gaussian_closed_form_on_1024_points() {
    let g = GridSpec::cube(1, 256.0, 1024, 1.0, 4).unwrap();
    let s = 16.0;
    let u0: Vec<Complex64> = (0..1024).map(|i| gaussian(g.x(0, i), 0.0, s)).collect();
    for t in [0.5, 3.0, 10.0, 25.0] {
        let u = free_propagate(&g, &u0, t);
        let exact: Vec<Complex64> = (0..1024).map(|i| gaussian(g.x(0, i), t, s)).collect();
        let e = rel(&u, &exact);
        assert!(e < 1e-6, "t = {t}: {e:e}");
    }
}

#[test]
fn plane_wave_is_an_eigenfunction() {
    let g = GridSpec::new(vec![10.0, 6.0], vec![32, 16], 1.0, 4).unwrap();
    let (k0, k1) = (g.xi(0, 5), g.xi(1, 13));
    let coords = g.coordinates();
    let w: Vec<Complex64> = coords.iter().map(|x| Complex64::from_polar(1.0, k0 * x[0] + k1 * x[1])).collect();
    let t = 0.37;
    let u = free_propagate(&g, &w, t);
    let phase = Complex64::from_polar(1.0, -t * (k0 * k0 + k1 * k1));
    let expect: Vec<Complex64> = w.iter().map(|v| v * phase).collect();
    assert!(rel(&u, &expect) < 1e-12);
    assert_eq!(free_propagate(&g, &w, 0.0), w);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn propagator_is_unitary(seed in any::<u64>(), t in -50.0f64..50.0, two_d in any::<bool>()) {
        let g = if two_d {
            GridSpec::new(vec![12.0, 20.0], vec![16, 32], 1.0, 4).unwrap()
        } else {
            GridSpec::cube(1, 40.0, 256, 1.0, 4).unwrap()
        };
        let f = random_slice(g.spatial_len(), seed);
        let a = slice_l2(&g, &f);
        let b = slice_l2(&g, &free_propagate(&g, &f, t));
        prop_assert!((a - b).abs() <= 1e-12 * a);
    }

    #[test]
    fn propagator_group_property(seed in any::<u64>(), s in -10.0f64..10.0, t in -10.0f64..10.0) {
        let g = GridSpec::cube(1, 40.0, 256, 1.0, 4).unwrap();
        let f = random_slice(256, seed);
        let two = free_propagate(&g, &free_propagate(&g, &f, t), s);
        let one = free_propagate(&g, &f, s + t);
        prop_assert!(rel(&two, &one) < 1e-12);
    }

    #[test]
    fn mixed_norm_homogeneous_and_subadditive(
        seed in any::<u64>(),
        r in prop_oneof![Just(f64::INFINITY), 1.0f64..12.0],
        q in prop_oneof![Just(f64::INFINITY), 1.0f64..12.0],
        c in -5.0f64..5.0,
    ) {
        let g = GridSpec::new(vec![3.0, 2.0], vec![8, 4], 5.0, 16).unwrap();
        let spec = MixedNormSpec::new(LebesgueExponent::finite(r).unwrap(), LebesgueExponent::finite(q).unwrap());
        let f = random_field(&g, seed);
        let h = random_field(&g, seed.wrapping_add(1));
        let nf = mixed_norm(&f, spec).unwrap();
        let nh = mixed_norm(&h, spec).unwrap();
        let mut cf = f.clone();
        cf.scale(Complex64::new(c, 0.5 * c));
        let ncf = mixed_norm(&cf, spec).unwrap();
        let factor = Complex64::new(c, 0.5 * c).norm();
        prop_assert!((ncf - factor * nf).abs() <= 1e-10 * (1.0 + factor * nf));
        let mut sum = f.clone();
        sum.axpy(Complex64::new(1.0, 0.0), &h).unwrap();
        prop_assert!(mixed_norm(&sum, spec).unwrap() <= (nf + nh) * (1.0 + 1e-12));
    }

    #[test]
    fn l2_mixed_norm_is_plancherel(seed in any::<u64>()) {
        let g = GridSpec::new(vec![7.0], vec![32], 3.0, 16).unwrap();
        let f = random_field(&g, seed);
        let two = LebesgueExponent::finite(2.0).unwrap();
        let a = mixed_norm(&f, MixedNormSpec::new(two, two)).unwrap();
        let b = f.clone().to_frequency().l2_norm();
        prop_assert!((a - b).abs() <= 1e-10 * b);
    }
}

#[test]
fn bump_hat_decays_like_fourth_power() {
    let bump = build_bump();
    let weighted: Vec<f64> = (0..=4096)
        .map(|i| {
            let eta = i as f64 / 16.0;
            assert_eq!(bump.phi_hat(-eta), bump.phi_hat(eta).conj());
            bump.phi_hat(eta).norm() * (1.0 + eta).powi(4)
        })
        .collect();
    // peaks near |η| ≈ 30 at about 3.5e3, then falls off
    let c4 = weighted.iter().copied().fold(0.0, f64::max);
    assert!(c4.is_finite() && c4 < 1e4, "C_4 = {c4}");
    let tail = weighted[3200..].iter().copied().fold(0.0, f64::max);
    assert!(tail < 0.1 * c4, "tail {tail} vs {c4}");
}

#[test]
fn temporal_projections_telescope() {
    // positive on-grid frequencies in [1, 8], well inside j ∈ [−6, 3]
    let g = GridSpec::cube(1, 4.0, 8, 16.0 * std::f64::consts::PI, 512).unwrap();
    let taus: Vec<f64> = [8, 13, 40, 64].iter().map(|&j| g.tau(j)).collect();
    let f = Field::from_fn(&g, |x, t| taus.iter().enumerate().map(|(k, &tau)| Complex64::from_polar(1.0 + k as f64 * x[0].cos(), tau * t)).sum());
    let mut sum = Field::zeros(&g);
    for j in -6..=3 {
        sum.axpy(Complex64::new(1.0, 0.0), &temporal_projection(&f, j).unwrap()).unwrap();
    }
    assert!(sum.relative_l2_error(&f).unwrap() < 1e-8);

    let negative = Field::from_fn(&g, |_, t| Complex64::from_polar(1.0, -taus[2] * t));
    assert!(temporal_projection(&negative, 0).unwrap().l2_norm() < 1e-12);
}

#[test]
fn spatial_annuli_telescope() {
    let g = GridSpec::new(vec![16.0, 16.0], vec![32, 32], 1.0, 4).unwrap();
    // zero mean, |ξ| ≤ 2π·4/16·√2 < 2^3
    let f = Field::from_fn(&g, |x, t| {
        let a = std::f64::consts::TAU / 16.0;
        Complex64::new((a * x[0]).sin() + (3.0 * a * x[1] + t).cos(), (2.0 * a * (x[0] + x[1])).sin())
    });
    let mut sum = Field::zeros(&g);
    for j in -3..=3 {
        sum.axpy(Complex64::new(1.0, 0.0), &spatial_annulus_projection(&f, j).unwrap()).unwrap();
    }
    assert!(sum.relative_l2_error(&f).unwrap() < 1e-8);
}
