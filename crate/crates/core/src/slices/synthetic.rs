use super::SliceFamily;
use crate::jacobi::{EinsteinAmbient, Validity};

/// f = 1, w = sin r with shift 4: the first nonzero level 2 + 1/sin²r crosses
/// the shift exactly at π/4 and 3π/4.
#[derive(Debug, Clone)]
pub struct SyntheticFamily {
    ambient: EinsteinAmbient,
}

impl SyntheticFamily {
    pub fn new() -> Self {
        SyntheticFamily {
            ambient: EinsteinAmbient {
                n: 4,
                s: 16.0,
                validity: Validity::Hypersurface,
                name: "synthetic".into(),
            },
        }
    }
}

impl Default for SyntheticFamily {
    fn default() -> Self {
        Self::new()
    }
}

impl SliceFamily for SyntheticFamily {
    fn name(&self) -> &str {
        "synthetic"
    }

    fn ambient(&self) -> &EinsteinAmbient {
        &self.ambient
    }

    fn domain(&self) -> (f64, Option<f64>) {
        (0.0, Some(std::f64::consts::PI))
    }

    fn geometry(&self, r: f64) -> (f64, f64) {
        (1.0, r.sin())
    }
}
