//! Sweep grids over the hyperbolic parameter x.

use crate::error::{Error, Result};

/// Point spacing of a [`Grid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Log,
    Linear,
}

impl std::str::FromStr for Spacing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "log" => Ok(Spacing::Log),
            "linear" => Ok(Spacing::Linear),
            other => Err(format!("unknown spacing '{other}' (log|linear)")),
        }
    }
}

/// A validated sweep grid: `points` values of x in [min, max], log- or
/// linearly spaced, with both endpoints hit exactly (no accumulated
/// rounding at i = 0 or i = points−1).
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl Grid {
    /// The default sweep: 2001 log-spaced points on [1e-4, 30], covering
    /// both sharpness endpoints and every known crossing (all of which lie
    /// in (1, 3)).
    pub fn default_sweep() -> Self {
        Grid {
            min: 1e-4,
            max: 30.0,
            points: 2001,
            spacing: Spacing::Log,
        }
    }

    /// Validates 0 < min < max (finite) and points ≥ 2.
    pub fn new(min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Self> {
        let ok = min.is_finite() && max.is_finite() && min > 0.0 && min < max && points >= 2;
        if ok {
            Ok(Grid {
                min,
                max,
                points,
                spacing,
            })
        } else {
            Err(Error::InvalidGrid { min, max, points })
        }
    }

    /// The i-th grid point; i must be < points.
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.points);
        if i == 0 {
            return self.min;
        }
        if i == self.points - 1 {
            return self.max;
        }
        let t = i as f64 / (self.points - 1) as f64;
        match self.spacing {
            Spacing::Linear => self.min + (self.max - self.min) * t,
            Spacing::Log => {
                let (llo, lhi) = (self.min.ln(), self.max.ln());
                (llo + (lhi - llo) * t).exp()
            }
        }
    }

    /// All grid points in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.point(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn endpoints_are_exact() {
        for spacing in [Spacing::Log, Spacing::Linear] {
            let g = Grid::new(1e-4, 30.0, 2001, spacing).unwrap();
            let pts: Vec<f64> = g.iter().collect();
            assert_eq!(pts.len(), 2001);
            assert_eq!(pts[0], 1e-4);
            assert_eq!(pts[2000], 30.0);
        }
    }

    #[test]
    fn points_are_strictly_increasing() {
        for spacing in [Spacing::Log, Spacing::Linear] {
            let g = Grid::new(0.5, 3.0, 101, spacing).unwrap();
            let pts: Vec<f64> = g.iter().collect();
            for w in pts.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn spacing_shape() {
        let g = Grid::new(1.0, 100.0, 3, Spacing::Log).unwrap();
        assert_relative_eq!(g.point(1), 10.0, max_relative = 1e-14);
        let g = Grid::new(1.0, 3.0, 3, Spacing::Linear).unwrap();
        assert_relative_eq!(g.point(1), 2.0, max_relative = 1e-15);
    }

    #[test]
    fn validation_rejects_bad_grids() {
        assert!(Grid::new(0.0, 1.0, 10, Spacing::Log).is_err());
        assert!(Grid::new(-1.0, 1.0, 10, Spacing::Linear).is_err());
        assert!(Grid::new(2.0, 1.0, 10, Spacing::Log).is_err());
        assert!(Grid::new(1.0, 1.0, 10, Spacing::Log).is_err());
        assert!(Grid::new(1.0, 2.0, 1, Spacing::Log).is_err());
        assert!(Grid::new(1.0, f64::INFINITY, 10, Spacing::Log).is_err());
    }

    #[test]
    fn spacing_parses() {
        assert_eq!("log".parse::<Spacing>().unwrap(), Spacing::Log);
        assert_eq!("linear".parse::<Spacing>().unwrap(), Spacing::Linear);
        assert!("cubic".parse::<Spacing>().is_err());
    }

    #[test]
    fn default_sweep_shape() {
        let g = Grid::default_sweep();
        assert_eq!(g.points, 2001);
        assert_eq!(g.min, 1e-4);
        assert_eq!(g.max, 30.0);
        assert_eq!(g.spacing, Spacing::Log);
    }
}
