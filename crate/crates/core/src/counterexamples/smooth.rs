/// `e^{−1/s}` for `s > 0`, else `0`.
fn glue(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else {
        (-1.0 / s).exp()
    }
}

/// C^∞ step: `0` for `s ≤ 0`, `1` for `s ≥ 1`.
pub fn smooth_step(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else if s >= 1.0 {
        1.0
    } else {
        let a = glue(s);
        a / (a + glue(1.0 - s))
    }
}

/// Mollified `χ_{[0,1]}`: supported in `[0, 1]`, equal to `1` on
/// `[w, 1 − w]`.
pub fn smooth_indicator(z: f64, w: f64) -> f64 {
    smooth_step(z / w) * smooth_step((1.0 - z) / w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_shape() {
        assert_eq!(smooth_indicator(-1e-9, 0.25), 0.0);
        assert_eq!(smooth_indicator(1.0 + 1e-9, 0.25), 0.0);
        assert_eq!(smooth_indicator(0.5, 0.25), 1.0);
        assert_eq!(smooth_indicator(0.25, 0.25), 1.0);
        assert!((smooth_step(0.5) - 0.5).abs() < 1e-15);
    }
}
