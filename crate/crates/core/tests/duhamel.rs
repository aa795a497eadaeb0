use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strichartz_lab::duhamel::*;
use strichartz_lab::geometry::Rational;
use strichartz_lab::spectral::*;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `∫_a^b g` by composite Simpson with `m` (even) panels.
fn simpson(g: impl Fn(f64) -> Complex64, a: f64, b: f64, m: usize) -> Complex64 {
    let h = (b - a) / m as f64;
    let mut acc = g(a) + g(b);
    for i in 1..m {
        acc += g(a + i as f64 * h) * c(if i % 2 == 1 { 4.0 } else { 2.0 });
    }
    acc * c(h / 3.0)
}

#[test]
fn plane_wave_forcing_matches_scalar_quadrature() {
    let g = GridSpec::cube(1, 8.0, 16, 16.0, 512).unwrap();
    let xi0 = g.xi(0, 2);
    let w = xi0 * xi0;
    let h = |t: f64| Complex64::from_polar((-(t - 6.0).powi(2) / 2.0).exp(), 0.8 * t);
    let f = Field::from_fn(&g, |x, t| Complex64::from_polar(1.0, xi0 * x[0]) * h(t));
    let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, 64)).unwrap().field;
    // running integral of e^{isω} h(s), then the outer phase e^{−itω}
    let mut inner = Complex64::default();
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for j in 0..g.t_count {
        let t = g.t(j);
        if j > 0 {
            inner += simpson(|s| Complex64::from_polar(1.0, s * w) * h(s), g.t(j - 1), t, 64);
        }
        let amp = Complex64::from_polar(1.0, -t * w) * inner;
        for (i, v) in u.slice(j).iter().enumerate() {
            let want = amp * Complex64::from_polar(1.0, xi0 * g.x(0, i));
            worst = worst.max((v - want).norm());
        }
        scale = scale.max(amp.norm());
    }
    assert!(worst < 1e-6 * scale, "max error {worst:e} (scale {scale})");
}

#[test]
fn constant_forcing_converges_at_second_order() {
    // F = e^{iξx}: u = e^{iξx}(1 − e^{−itω})/(iω)
    let err = |nt: usize| {
        let g = GridSpec::cube(1, 8.0, 16, 4.0, nt).unwrap();
        let xi0 = g.xi(0, 3);
        let w = xi0 * xi0;
        let f = Field::from_fn(&g, |x, _| Complex64::from_polar(1.0, xi0 * x[0]));
        let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, 1)).unwrap().field;
        let exact = Field::from_fn(&g, |x, t| {
            Complex64::from_polar(1.0, xi0 * x[0]) * (c(1.0) - Complex64::from_polar(1.0, -t * w)) / Complex64::new(0.0, w)
        });
        u.relative_l2_error(&exact).unwrap()
    };
    let (e1, e2, e4) = (err(32), err(64), err(128));
    let r = e1 / e2;
    assert!((3.5..4.5).contains(&r), "halving ratio {r}");
    let r2 = e1 / e4;
    assert!((14.0..18.0).contains(&r2), "quartering ratio {r2}");
}

#[test]
fn small_time_growth_is_linear() {
    let g = GridSpec::cube(1, 8.0, 16, 1.0 / 16.0, 8).unwrap();
    let f = Field::from_fn(&g, |x, _| Complex64::new((std::f64::consts::TAU * x[0] / 8.0).cos(), 0.0));
    let u = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::Zero, 1)).unwrap().field;
    let t = g.t(7);
    let rel: f64 = u.slice(7).iter().zip(f.slice(7)).map(|(a, b)| (a - b * c(t)).norm()).fold(0.0, f64::max);
    assert!(rel < t * t, "{rel} vs t² = {}", t * t);
}

fn shell_field(g: &GridSpec, delta: f64, seed: u64) -> Field {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hat = Field::from_spectrum(g, |_, _| Complex64::default());
    let ns = g.spatial_len();
    for j in 0..g.t_count {
        let tau = g.tau(j);
        for s in 0..ns {
            let xi = g.xi(0, s);
            if (tau + xi * xi).abs() >= 64.0 * delta {
                hat.slice_mut(j)[s] = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
    }
    hat.to_physical()
}

#[test]
fn multiplier_is_small_off_the_paraboloid() {
    let g = GridSpec::cube(1, 32.0, 64, 64.0, 1024).unwrap();
    for k in [-4, -3] {
        let delta = DyadicScale::new(k).unwrap();
        let f = shell_field(&g, delta.value(), 5);
        let out = t_delta_apply(&f, delta).unwrap();
        let ratio = out.l2_norm() / f.l2_norm();
        assert!(ratio <= 1e-4, "δ = {}: {ratio:e}", delta.value());
    }
}

#[test]
fn multiplier_bounded_by_sup_of_hat() {
    let g = GridSpec::cube(1, 16.0, 32, 32.0, 128).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let data = (0..g.sample_count()).map(|_| Complex64::new(rng.gen(), rng.gen())).collect();
    let f = Field::from_samples(&g, data, Side::Physical).unwrap();
    let sup = build_bump().sup_hat();
    for k in -3..=2 {
        let out = t_delta_apply(&f, DyadicScale::new(k).unwrap()).unwrap();
        assert!(out.l2_norm() <= sup * f.l2_norm() * (1.0 + 1e-12));
    }
}

fn roll(f: &Field, shift: usize) -> Field {
    let g = f.grid();
    let n = g.counts[0];
    let mut out = f.clone();
    for j in 0..g.t_count {
        let src = f.slice(j);
        for (i, v) in out.slice_mut(j).iter_mut().enumerate() {
            *v = src[(i + n - shift) % n];
        }
    }
    out
}

#[test]
fn multiplier_commutes_with_translations() {
    let g = GridSpec::cube(1, 16.0, 64, 32.0, 128).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let data = (0..g.sample_count()).map(|_| Complex64::new(rng.gen(), rng.gen())).collect();
    let f = Field::from_samples(&g, data, Side::Physical).unwrap();
    let delta = DyadicScale::new(-2).unwrap();
    let a = roll(&t_delta_apply(&f, delta).unwrap(), 11);
    let b = t_delta_apply(&roll(&f, 11), delta).unwrap();
    assert!(a.relative_l2_error(&b).unwrap() < 1e-12);
}

#[test]
fn wider_dyadic_window_does_not_hurt() {
    let g = GridSpec::cube(1, 128.0, 512, 560.0, 512).unwrap();
    let f = ModeForcing::default().build(&g).unwrap();
    let oracle = duhamel_timestep(&f, TimestepOptions::new(LowerLimit::GridStart, 16)).unwrap().field;
    let narrow = dyadic_synthesis(&f, -4, 4).unwrap().field.relative_l2_error(&oracle).unwrap();
    let wide = dyadic_synthesis(&f, -8, 8).unwrap().field.relative_l2_error(&oracle).unwrap();
    assert!(wide <= narrow, "wide {wide:e} vs narrow {narrow:e}");
    assert!(wide <= 1e-3);
}

#[test]
fn zero_forcing_gives_zero_synthesis() {
    let g = GridSpec::cube(1, 16.0, 32, 64.0, 64).unwrap();
    let z = Field::zeros(&g);
    let s = dyadic_synthesis(&z, -3, 3).unwrap();
    assert_eq!(s.field.l2_norm(), 0.0);
}

#[test]
fn kernel_smallness_near_the_origin() {
    // measured max|K| ratio (|y| = 1/δ over |y| = 1/(200δ)), n = 2
    let ratio = |k: i32| {
        let delta = DyadicScale::new(k).unwrap();
        let far = RadialKernel::new(2, 1.0 / delta.value(), delta).unwrap().max_abs(801);
        let near = RadialKernel::new(2, 1.0 / (200.0 * delta.value()), delta).unwrap().max_abs(801);
        far / near
    };
    let r16 = ratio(-4);
    assert!((1.2..2.5).contains(&r16), "δ = 1/16: {r16}");
    let r128 = ratio(-7);
    assert!(r128 >= 100.0, "δ = 1/128: {r128}");
}

#[test]
fn probe_quotient_bounded_for_large_delta() {
    let g = GridSpec::new(vec![48.0, 48.0], vec![64, 64], 76.8, 128).unwrap();
    let f = annulus_random_field(&g, 11, (-5.0, 1.0));
    let inv_rt = Rational::new(1, 2);
    let norm = probe_input_norm(&f, inv_rt).unwrap();
    let q: Vec<f64> = (0..=3)
        .map(|k| probe_point(&f, Rational::new(1, 6), norm, DyadicScale::new(k).unwrap()).unwrap().quotient)
        .collect();
    // measured at δ = 1..8: 0.051, 0.056, 0.057, 0.057
    assert!(q.iter().all(|w| w.is_finite() && *w <= 2.0 * q[0]), "{q:?}");
}
