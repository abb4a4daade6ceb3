use super::{slice_index_nullity, SliceFamily, SliceGeometry};
use crate::berger::{
    check_positive, scale_spectrum, tanno_coefficient, tanno_lambda1, Source, SpectrumEntry,
};
use crate::error::Result;
use crate::jacobi::{EinsteinAmbient, IndexNullityReport};
use crate::rational::{int, Rational};

/// Geodesic spheres of radius parameter r in ℂP²: f = r²/(1+r²), w² = r²/(1+r²)².
#[derive(Debug, Clone)]
pub struct Cp2Family {
    ambient: EinsteinAmbient,
}

impl Cp2Family {
    pub fn new() -> Self {
        Cp2Family {
            ambient: EinsteinAmbient::cp2(),
        }
    }
}

impl Default for Cp2Family {
    fn default() -> Self {
        Self::new()
    }
}

impl SliceFamily for Cp2Family {
    fn name(&self) -> &str {
        "cp2"
    }

    fn ambient(&self) -> &EinsteinAmbient {
        &self.ambient
    }

    fn domain(&self) -> (f64, Option<f64>) {
        (0.0, None)
    }

    fn geometry(&self, r: f64) -> (f64, f64) {
        let s = r * r;
        (s / (1.0 + s), r / (1.0 + s))
    }
}

pub fn cp2_slice(r: f64) -> Result<SliceGeometry> {
    Cp2Family::new().slice(r)
}

/// First nonzero Laplace eigenvalue of the slice: Tanno's value at t = (1+r²)^{−1/3}
/// divided by μ = r²/(1+r²)^{4/3}.
pub fn cp2_lambda1(r: f64) -> Result<f64> {
    check_positive("r", r)?;
    let s = r * r;
    let t = (1.0 + s).powf(-1.0 / 3.0);
    let mu = s / (1.0 + s).powf(4.0 / 3.0);
    let entry = SpectrumEntry {
        value: tanno_lambda1(t)?,
        multiplicity: 0,
        source: Source::Modes(vec![]),
    };
    Ok(scale_spectrum(&[entry], mu)?[0].value)
}

/// The same eigenvalue as an exact rational in r²: coefficient(1+r²)·(1+r²)/r².
pub fn cp2_lambda1_exact(r_squared: &Rational) -> Rational {
    let x = int(1) + r_squared;
    tanno_coefficient(&x) * x / r_squared
}

pub fn cp2_index_nullity(r: f64, depth: usize) -> Result<IndexNullityReport> {
    slice_index_nullity(&Cp2Family::new(), r, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use crate::slices::{shifted_lambda1, DEFAULT_DEPTH};

    #[test]
    fn slice_at_one() {
        let s = cp2_slice(1.0).unwrap();
        assert!((s.f - 0.5).abs() < 1e-15);
        assert!((s.w * s.w - 0.25).abs() < 1e-15);
        assert!((s.mu() - 2f64.powf(-4.0 / 3.0)).abs() < 1e-15);
        assert!((s.t() - 2f64.powf(-1.0 / 3.0)).abs() < 1e-15);
        assert!((cp2_slice(5f64.sqrt()).unwrap().x() - 6.0).abs() < 1e-12);
        assert!(cp2_slice(1e-6).unwrap().mu() < 1e-7);
        assert!(cp2_slice(0.0).is_err());
    }

    #[test]
    fn lambda1_values() {
        assert_eq!(cp2_lambda1_exact(&int(1)), int(8));
        assert_eq!(cp2_lambda1_exact(&int(5)), frac(48, 5));
        assert_eq!(cp2_lambda1_exact(&int(9)), frac(80, 9));
        assert!((cp2_lambda1(1.0).unwrap() - 8.0).abs() < 1e-12);
        assert!((cp2_lambda1(5f64.sqrt()).unwrap() - 9.6).abs() < 1e-12);
        assert!((cp2_lambda1(3.0).unwrap() - 80.0 / 9.0).abs() < 1e-12);
        assert!(cp2_lambda1(-1.0).is_err());
    }

    #[test]
    fn closed_form_agrees() {
        for r in [0.01, 0.3, 1.0, 2.0, 2.2, 2.3, 7.0, 300.0] {
            let s = r * r;
            let closed = if s <= 5.0 {
                (3.0 + s) * (1.0 + s) / s
            } else {
                8.0 * (1.0 + s) / s
            };
            let v = cp2_lambda1(r).unwrap();
            assert!((v - closed).abs() <= 1e-12 * closed, "r = {r}");
            let via_slice = shifted_lambda1(&Cp2Family::new(), r).unwrap() + 1.5;
            assert!((via_slice - closed).abs() <= 1e-12 * closed, "r = {r}");
        }
    }

    #[test]
    fn index_one_nullity_zero() {
        for r in [0.05, 1.0, 100.0] {
            let rep = cp2_index_nullity(r, DEFAULT_DEPTH).unwrap();
            assert_eq!((rep.index, rep.nullity), (1, 0));
            assert_eq!(rep.first_value(), Some(-1.5));
        }
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn normalization_identity(r in 1e-3f64..=10.0) {
            let s = cp2_slice(r).unwrap();
            let via_tanno = tanno_lambda1(s.t()).unwrap() / s.mu();
            let v = cp2_lambda1(r).unwrap();
            prop_assert!((v - via_tanno).abs() <= 1e-12 * v);
            let r2 = r * r;
            let closed = if r2 <= 5.0 { (3.0 + r2) * (1.0 + r2) / r2 } else { 8.0 * (1.0 + r2) / r2 };
            prop_assert!((v - closed).abs() <= 1e-12 * v);
        }
    }
}
