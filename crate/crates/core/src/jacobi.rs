//! Jacobi operator spectra of totally geodesic hypersurfaces in Einstein spaces.
//!
//! With the positive Laplacian, the Jacobi eigenvalues are λ − s/n.

use crate::berger::{Source, SpectrumEntry};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Hypersurface,
    ConstantCurvature,
    /// Higher codimension in a non-constant-curvature ambient; needs Ric⊥.
    General,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EinsteinAmbient {
    pub n: u32,
    pub s: f64,
    pub validity: Validity,
    pub name: String,
}

impl EinsteinAmbient {
    pub fn new(name: &str, n: u32, s: f64, validity: Validity) -> Result<Self> {
        if n == 0 || !s.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "ambient '{name}' needs n >= 1 and finite s (n = {n}, s = {s})"
            )));
        }
        Ok(EinsteinAmbient {
            n,
            s,
            validity,
            name: name.to_string(),
        })
    }

    /// Fubini–Study ℂP² with Ric = (3/2)g.
    pub fn cp2() -> Self {
        EinsteinAmbient {
            n: 4,
            s: 6.0,
            validity: Validity::Hypersurface,
            name: "CP2".into(),
        }
    }

    pub fn page(a: f64) -> Self {
        EinsteinAmbient {
            n: 4,
            s: 12.0 * (1.0 + a * a),
            validity: Validity::Hypersurface,
            name: "Page".into(),
        }
    }
}

pub fn jacobi_shift(ambient: &EinsteinAmbient) -> Result<f64> {
    match ambient.validity {
        Validity::Hypersurface | Validity::ConstantCurvature => {
            Ok(ambient.s / f64::from(ambient.n))
        }
        Validity::General => Err(Error::RicPerpUnsupported(ambient.name.clone())),
    }
}

pub fn jacobi_spectrum(laplace: &[SpectrumEntry], shift: f64) -> Vec<SpectrumEntry> {
    laplace
        .iter()
        .map(|e| SpectrumEntry {
            value: e.value - shift,
            ..e.clone()
        })
        .collect()
}

pub fn default_zero_tolerance(shift: f64) -> f64 {
    1e-9 * shift.abs().max(1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Jacobi eigenvalue.
    pub value: f64,
    pub multiplicity: u64,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexNullityReport {
    pub parameter: Option<f64>,
    pub index: u64,
    pub nullity: u64,
    /// Entries counted towards index or nullity.
    pub witnesses: Vec<Witness>,
    pub zero_tolerance: f64,
    /// Largest Jacobi eigenvalue examined; every unlisted eigenvalue lies above it.
    pub truncation_bound: f64,
    pub notes: Vec<String>,
}

impl IndexNullityReport {
    pub fn first_value(&self) -> Option<f64> {
        self.witnesses.first().map(|w| w.value)
    }

    /// True when the examined spectrum reaches past zero, so no negative or
    /// zero eigenvalue can be missing.
    pub fn is_certified(&self) -> bool {
        self.truncation_bound > self.zero_tolerance
    }
}

pub fn index_nullity(jacobi: &[SpectrumEntry], zero_tolerance: f64) -> Result<IndexNullityReport> {
    if jacobi.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    if zero_tolerance.is_nan() || zero_tolerance <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "zero tolerance {zero_tolerance} must be positive"
        )));
    }
    if let Some(bad) = jacobi.iter().find(|e| !e.value.is_finite()) {
        return Err(Error::NonFinite { at: bad.value });
    }
    let largest = jacobi
        .iter()
        .map(|e| e.value)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut report = IndexNullityReport {
        parameter: None,
        index: 0,
        nullity: 0,
        witnesses: Vec::new(),
        zero_tolerance,
        truncation_bound: largest,
        notes: Vec::new(),
    };
    if !report.is_certified() {
        report.notes.push(format!(
            "largest eigenvalue {largest} does not clear the zero tolerance; counts may be incomplete"
        ));
    }
    for e in jacobi {
        if e.value < -zero_tolerance {
            report.index += e.multiplicity;
        } else if e.value.abs() <= zero_tolerance {
            report.nullity += e.multiplicity;
        } else {
            continue;
        }
        report.witnesses.push(Witness {
            value: e.value,
            multiplicity: e.multiplicity,
            source: e.source.clone(),
        });
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instability {
    pub unstable: bool,
    /// Jacobi eigenvalue −s/n of the constant function when the criterion applies.
    pub certificate: Option<f64>,
}

/// A compact totally geodesic hypersurface of an Einstein space with s > 0 is unstable:
/// the constant function is a negative direction.
pub fn is_unstable(ambient: &EinsteinAmbient) -> Result<Instability> {
    let shift = jacobi_shift(ambient)?;
    Ok(if ambient.s > 0.0 {
        Instability {
            unstable: true,
            certificate: Some(-shift),
        }
    } else {
        Instability {
            unstable: false,
            certificate: None,
        }
    })
}

/// Genus from 2g − 2 = [C]² − c₁·[C].
pub fn adjunction_genus(c_self: i64, c1_dot_c: i64) -> Result<i64> {
    let rhs = c_self - c1_dot_c;
    if rhs % 2 != 0 {
        return Err(Error::ParityViolation(rhs));
    }
    Ok(rhs / 2 + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexCurve {
    /// Smooth curve of the given degree in ℂP².
    Degree(u32),
    /// Linear ℂP_{n−1} in ℂP_n.
    LinearHyperplane,
}

/// Known (index, nullity) of holomorphic curves; values are tabulated, not computed.
pub fn complex_curve_index_nullity(case: ComplexCurve) -> Result<(u64, u64)> {
    match case {
        ComplexCurve::Degree(1) => Ok((0, 1)),
        ComplexCurve::Degree(2) => Ok((0, 4)),
        ComplexCurve::LinearHyperplane => Ok((0, 1)),
        ComplexCurve::Degree(d) => Err(Error::UnsupportedCase(format!(
            "index and nullity of a degree-{d} curve are not tabulated"
        ))),
    }
}
