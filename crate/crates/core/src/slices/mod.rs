//! One-parameter families of Berger-type slices f(σ₁²+σ₂²) + w²σ₃² sitting
//! totally geodesically in an Einstein 4-manifold.
//!
//! A slice is μ·g_B^t with μ = (fw)^{2/3}, t = w^{2/3}f^{−1/3}, so mode (k,q)
//! has eigenvalue t(A + Bx)/μ = A/f + B/w² with x = f/w².

mod cp2;
mod page;
mod roots;
mod synthetic;

pub use cp2::{cp2_index_nullity, cp2_lambda1, cp2_lambda1_exact, cp2_slice, Cp2Family};
pub use page::{
    page_constants, page_index_nullity, page_shifted_lambda1, page_transition_roots, PageConstants,
    PageFamily,
};
pub use roots::{bisect_bracket, find_root_bisection};
pub use synthetic::SyntheticFamily;

use crate::berger::{distinct_spectrum_at, SpectrumEntry};
use crate::error::{Error, Result};
use crate::jacobi::{
    default_zero_tolerance, index_nullity, jacobi_shift, jacobi_spectrum, EinsteinAmbient,
    IndexNullityReport,
};
use crate::rational::{exact_from_f64, to_f64};

pub const DEFAULT_DEPTH: usize = 25;

/// Grid step used when scanning for sign changes.
pub const SCAN_STEP: f64 = std::f64::consts::PI / 1024.0;

#[derive(Debug, Clone, PartialEq)]
pub struct SliceGeometry {
    pub r: f64,
    pub f: f64,
    pub w: f64,
    pub ambient: EinsteinAmbient,
}

impl SliceGeometry {
    pub fn mu(&self) -> f64 {
        (self.f * self.w).powf(2.0 / 3.0)
    }

    pub fn t(&self) -> f64 {
        self.w.powf(2.0 / 3.0) * self.f.powf(-1.0 / 3.0)
    }

    /// x = t⁻³ = f/w².
    pub fn x(&self) -> f64 {
        self.f / (self.w * self.w)
    }

    /// First `depth` distinct Laplace eigenvalues, the constant included.
    pub fn laplace_spectrum(&self, depth: usize) -> Result<Vec<SpectrumEntry>> {
        let x = exact_from_f64(self.x())?;
        let w2 = self.w * self.w;
        Ok(distinct_spectrum_at(&x, depth)?
            .into_iter()
            .map(|lvl| {
                let m = lvl.modes[0];
                SpectrumEntry {
                    value: m.a() as f64 / self.f + m.b() as f64 / w2,
                    multiplicity: lvl.multiplicity(),
                    source: lvl.source(),
                }
            })
            .collect())
    }

    /// Distinct eigenvalue at position `level` (0 is the constant) via the unit-volume family.
    pub fn level_value(&self, level: usize) -> Result<f64> {
        let x = exact_from_f64(self.x())?;
        let lv = distinct_spectrum_at(&x, level + 1)?;
        Ok(self.t() * to_f64(&lv[level].coefficient) / self.mu())
    }
}

pub trait SliceFamily {
    fn name(&self) -> &str;
    fn ambient(&self) -> &EinsteinAmbient;
    /// Open parameter interval; `None` means unbounded above.
    fn domain(&self) -> (f64, Option<f64>);
    fn geometry(&self, r: f64) -> (f64, f64);

    fn slice(&self, r: f64) -> Result<SliceGeometry> {
        let (lo, hi) = self.domain();
        let inside = r.is_finite() && r > lo && hi.is_none_or(|h| r < h);
        if !inside {
            return Err(Error::OutOfDomain {
                name: "r",
                value: r,
                domain: if hi.is_some() { "(0, pi)" } else { "(0, inf)" },
            });
        }
        let (f, w) = self.geometry(r);
        Ok(SliceGeometry {
            r,
            f,
            w,
            ambient: self.ambient().clone(),
        })
    }

    fn shift(&self) -> Result<f64> {
        jacobi_shift(self.ambient())
    }
}

/// Jacobi eigenvalue of distinct level `level` of the slice at r.
pub fn shifted_level<S: SliceFamily + ?Sized>(family: &S, r: f64, level: usize) -> Result<f64> {
    Ok(family.slice(r)?.level_value(level)? - family.shift()?)
}

pub fn shifted_lambda1<S: SliceFamily + ?Sized>(family: &S, r: f64) -> Result<f64> {
    shifted_level(family, r, 1)
}

/// Index and nullity at r from the first `depth` distinct eigenvalues.
pub fn slice_index_nullity<S: SliceFamily + ?Sized>(
    family: &S,
    r: f64,
    depth: usize,
) -> Result<IndexNullityReport> {
    let shift = family.shift()?;
    let laplace = family.slice(r)?.laplace_spectrum(depth)?;
    let tol = default_zero_tolerance(shift);
    let mut report = index_nullity(&jacobi_spectrum(&laplace, shift), tol)?;
    if !report.is_certified() {
        return Err(Error::Truncated {
            largest: report.truncation_bound,
            tolerance: tol,
        });
    }
    report.parameter = Some(r);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionRoot {
    pub r: f64,
    pub lo: f64,
    pub hi: f64,
}

/// Sign changes of the shifted first eigenvalue on the family's domain.
///
/// Scans with step π/1024 and bisects each bracket to width `tol`. Exactly two
/// roots are required on a bounded domain.
pub fn transition_roots<S: SliceFamily + ?Sized>(
    family: &S,
    tol: f64,
) -> Result<Vec<TransitionRoot>> {
    let (lo, hi) = family.domain();
    let hi = hi.ok_or_else(|| {
        Error::UnsupportedCase(format!("{} has an unbounded domain", family.name()))
    })?;
    let g = |r: f64| shifted_lambda1(family, r).unwrap_or(f64::NAN);
    let steps = ((hi - lo) / SCAN_STEP).round() as usize;
    let grid: Vec<f64> = (1..steps).map(|j| lo + j as f64 * SCAN_STEP).collect();
    let values: Vec<f64> = grid.iter().map(|&r| g(r)).collect();
    if let Some(j) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { at: grid[j] });
    }
    let mut roots = Vec::new();
    for j in 0..grid.len() - 1 {
        if values[j] == 0.0 {
            roots.push(TransitionRoot {
                r: grid[j],
                lo: grid[j],
                hi: grid[j],
            });
        } else if values[j] * values[j + 1] < 0.0 {
            let (a, b) = bisect_bracket(g, grid[j], grid[j + 1], tol)?;
            roots.push(TransitionRoot {
                r: 0.5 * (a + b),
                lo: a,
                hi: b,
            });
        }
    }
    if roots.len() != 2 {
        return Err(Error::RootCount {
            expected: 2,
            found: roots.len(),
            domain: "(0, pi)",
        });
    }
    Ok(roots)
}

/// Index and nullity at a bisection-certified root, where the first nonzero
/// level is null: its value at the midpoint is bounded by the values at the
/// bracket ends, both within the bisection width of zero.
pub fn index_nullity_at_root<S: SliceFamily + ?Sized>(
    family: &S,
    root: &TransitionRoot,
    depth: usize,
) -> Result<IndexNullityReport> {
    let shift = family.shift()?;
    let laplace = family.slice(root.r)?.laplace_spectrum(depth)?;
    let mut jacobi = jacobi_spectrum(&laplace, shift);
    let bound = [root.lo, root.hi]
        .iter()
        .map(|&r| shifted_lambda1(family, r).map(f64::abs))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    let raw = jacobi[1].value;
    if raw.abs() > bound.max(default_zero_tolerance(shift)) {
        return Err(Error::NoSignChange {
            lo: root.lo,
            hi: root.hi,
            f_lo: raw,
            f_hi: bound,
        });
    }
    jacobi[1].value = 0.0;
    let tol = default_zero_tolerance(shift);
    let mut report = index_nullity(&jacobi, tol)?;
    if !report.is_certified() {
        return Err(Error::Truncated {
            largest: report.truncation_bound,
            tolerance: tol,
        });
    }
    report.parameter = Some(root.r);
    report.notes.push(format!(
        "first nonzero level {raw:e} treated as null at the certified root in [{}, {}]",
        root.lo, root.hi
    ));
    report.notes.push(
        "strict counting: the null eigenspace is not included in the index at a transition root"
            .into(),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn slice_spectrum_matches_normalized_family() {
        let fam = SyntheticFamily::new();
        for r in [0.2, 0.9, 1.6, 2.7] {
            let s = fam.slice(r).unwrap();
            let direct = s.laplace_spectrum(8).unwrap();
            for (lvl, e) in direct.iter().enumerate() {
                let via_t = s.level_value(lvl).unwrap();
                assert!((via_t - e.value).abs() <= 1e-12 * e.value.max(1.0));
            }
        }
    }

    #[test]
    fn synthetic_roots_are_quarter_turns() {
        let fam = SyntheticFamily::new();
        let roots = transition_roots(&fam, 1e-10).unwrap();
        assert!((roots[0].r - PI / 4.0).abs() < 1e-9);
        assert!((roots[1].r - 3.0 * PI / 4.0).abs() < 1e-9);
    }

    #[test]
    fn synthetic_index_profile() {
        let fam = SyntheticFamily::new();
        for (r, idx) in [(0.3, 1), (1.0, 5), (PI / 2.0, 5), (2.3, 5), (2.9, 1)] {
            let rep = slice_index_nullity(&fam, r, DEFAULT_DEPTH).unwrap();
            assert_eq!((rep.index, rep.nullity), (idx, 0), "r = {r}");
            assert_eq!(rep.parameter, Some(r));
        }
        for root in transition_roots(&fam, 1e-8).unwrap() {
            let rep = index_nullity_at_root(&fam, &root, DEFAULT_DEPTH).unwrap();
            assert_eq!((rep.index, rep.nullity), (1, 4));
            assert!(!rep.notes.is_empty());
        }
    }

    #[test]
    fn out_of_domain() {
        let fam = SyntheticFamily::new();
        assert!(matches!(fam.slice(0.0), Err(Error::OutOfDomain { .. })));
        assert!(fam.slice(PI).is_err());
        assert!(fam.slice(f64::NAN).is_err());
    }

    #[test]
    fn shallow_depth_is_rejected() {
        let fam = SyntheticFamily::new();
        assert!(matches!(
            slice_index_nullity(&fam, PI / 2.0, 1),
            Err(Error::Truncated { .. })
        ));
    }
}
