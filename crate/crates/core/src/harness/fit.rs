use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlopeFit {
    pub slope: f64,
    pub stderr: f64,
    pub intercept: f64,
}

/// Ordinary least squares of `log₂ v` against `log₂ p`.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<SlopeFit> {
    if points.len() < 3 {
        return Err(Error::Fit(format!("need at least 3 points, got {}", points.len())));
    }
    if let Some(&(p, v)) = points.iter().find(|&&(p, v)| !(p > 0.0 && v > 0.0) || !p.is_finite() || !v.is_finite()) {
        return Err(Error::Fit(format!("non-positive or non-finite point ({p}, {v})")));
    }
    let xs: Vec<f64> = points.iter().map(|&(p, _)| p.log2()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, v)| v.log2()).collect();
    let m = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / m;
    let my = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Fit("all parameters are equal".into()));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = xs.iter().zip(&ys).map(|(x, y)| (y - intercept - slope * x).powi(2)).sum();
    let stderr = (rss / (m - 2.0) / sxx).sqrt();
    Ok(SlopeFit { slope, stderr, intercept })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law() {
        let pts: Vec<_> = [1.0, 2.0, 4.0, 8.0].iter().map(|&p: &f64| (p, p.powf(-1.5))).collect();
        let f = fit_slope(&pts).unwrap();
        assert!((f.slope + 1.5).abs() < 1e-14);
        assert!(f.stderr < 1e-14);
    }

    #[test]
    fn constant_values() {
        let f = fit_slope(&[(1.0, 3.0), (2.0, 3.0), (4.0, 3.0)]).unwrap();
        assert_eq!(f.slope, 0.0);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(fit_slope(&[(1.0, 1.0), (2.0, 1.0)]).is_err());
        assert!(fit_slope(&[(1.0, 1.0), (2.0, 0.0), (4.0, 1.0)]).is_err());
        assert!(fit_slope(&[(1.0, 1.0), (-2.0, 1.0), (4.0, 1.0)]).is_err());
    }
}
