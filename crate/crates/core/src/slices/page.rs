use std::fs;
use std::path::Path;

use super::{slice_index_nullity, transition_roots, SliceFamily};
use crate::error::{Error, Result};
use crate::jacobi::{EinsteinAmbient, IndexNullityReport};

const BUILTIN: &str = include_str!("../../data/page.conf");
const FORMULA: &str = "page-slice-v1";

/// Coefficients of the Page metric along its totally geodesic Berger slices.
///
/// The slice at r is f(σ₁²+σ₂²) + (C sin²r/V)σ₃² with f = 4Q/Δ, V = Q/P,
/// C = 16a²/Δ², where Q = 1 − a²cos²r, P = 3 − a² − a²(1+a²)cos²r and
/// Δ = 3 + 6a² − a⁴. Writing U = √V and D = 4a/Δ gives w = D sin r/U.
#[derive(Debug, Clone, PartialEq)]
pub struct PageConstants {
    pub a: f64,
    /// Decimal string `a` was read from.
    pub a_text: String,
    /// Defining polynomial of a, highest degree first.
    pub polynomial: Vec<i64>,
}

impl PageConstants {
    pub fn builtin() -> Self {
        Self::from_config_str(BUILTIN).expect("bundled Page constants satisfy their anchors")
    }

    /// Constants that skip every anchor check.
    pub fn unchecked(a: f64) -> Self {
        PageConstants {
            a,
            a_text: a.to_string(),
            polynomial: Vec::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_config_str(&text)
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        let bad = |m: String| Error::PageConstants(m);
        let (mut formula, mut a_text, mut polynomial) = (None, None, None);
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("line {}: expected 'key = value'", n + 1)))?;
            let value = value.trim().to_string();
            match key.trim() {
                "formula" => formula = Some(value),
                "a" => a_text = Some(value),
                "polynomial" => polynomial = Some(value),
                other => return Err(bad(format!("line {}: unknown key '{other}'", n + 1))),
            }
        }
        let formula = formula.ok_or_else(|| bad("missing key 'formula'".into()))?;
        if formula != FORMULA {
            return Err(bad(format!(
                "unknown formula '{formula}', expected '{FORMULA}'"
            )));
        }
        let a_text = a_text.ok_or_else(|| bad("missing key 'a'".into()))?;
        let a: f64 = a_text
            .parse()
            .map_err(|_| bad(format!("a = '{a_text}' is not a decimal number")))?;
        let polynomial = polynomial
            .ok_or_else(|| bad("missing key 'polynomial'".into()))?
            .split_whitespace()
            .map(|c| {
                c.parse::<i64>()
                    .map_err(|_| bad(format!("bad polynomial coefficient '{c}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        let pc = PageConstants {
            a,
            a_text,
            polynomial,
        };
        pc.validate()?;
        Ok(pc)
    }

    pub fn to_config_string(&self) -> String {
        let poly: Vec<String> = self.polynomial.iter().map(i64::to_string).collect();
        format!(
            "formula = {FORMULA}\npolynomial = {}\na = {}\n",
            poly.join(" "),
            self.a_text
        )
    }

    /// Checks the defining polynomial, the scalar curvature anchor and √(C/V) = D/U.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::PageConstants(m));
        let a = self.a;
        if !(a.is_finite() && a > 0.0 && a < 1.0) {
            return bad(format!("a = {a} must lie in (0, 1)"));
        }
        let (value, scale) = self.polynomial.iter().fold((0.0, 0.0), |(v, s), &c| {
            (v * a + c as f64, s * a + (c as f64).abs())
        });
        if self.polynomial.is_empty() || value.abs() > 1e-12 * scale {
            return bad(format!(
                "a = {a} is not a root of the stated polynomial (residual {value:e})"
            ));
        }
        let s = self.scalar_curvature();
        if !(12.95..=12.96).contains(&s) {
            return bad(format!(
                "scalar curvature 12(1+a²) = {s} is outside [12.95, 12.96]"
            ));
        }
        for j in 1..=50 {
            let r = std::f64::consts::PI * j as f64 / 51.0;
            let res = self.identity_residual(r);
            if res.abs() > 1e-12 {
                return bad(format!("sqrt(C/V) - D/U = {res:e} at r = {r}"));
            }
        }
        Ok(())
    }

    pub fn scalar_curvature(&self) -> f64 {
        12.0 * (1.0 + self.a * self.a)
    }

    pub fn delta(&self) -> f64 {
        let a2 = self.a * self.a;
        3.0 + 6.0 * a2 - a2 * a2
    }

    fn q(&self, r: f64) -> f64 {
        1.0 - self.a * self.a * r.cos().powi(2)
    }

    fn p(&self, r: f64) -> f64 {
        let a2 = self.a * self.a;
        3.0 - a2 - a2 * (1.0 + a2) * r.cos().powi(2)
    }

    pub fn f(&self, r: f64) -> f64 {
        4.0 * self.q(r) / self.delta()
    }

    pub fn v(&self, r: f64) -> f64 {
        self.q(r) / self.p(r)
    }

    pub fn u(&self, r: f64) -> f64 {
        self.v(r).sqrt()
    }

    pub fn c(&self) -> f64 {
        16.0 * self.a * self.a / self.delta().powi(2)
    }

    pub fn d(&self) -> f64 {
        4.0 * self.a / self.delta()
    }

    pub fn identity_residual(&self, r: f64) -> f64 {
        (self.c() / self.v(r)).sqrt() - self.d() / self.u(r)
    }

    /// t⁻³ = f U² / (D² sin²r).
    pub fn x(&self, r: f64) -> f64 {
        self.f(r) * self.u(r).powi(2) / (self.d() * r.sin()).powi(2)
    }

    /// t = U^{−2/3} (D sin r)^{2/3} f^{−1/3}.
    pub fn t(&self, r: f64) -> f64 {
        self.u(r).powf(-2.0 / 3.0)
            * (self.d() * r.sin()).powf(2.0 / 3.0)
            * self.f(r).powf(-1.0 / 3.0)
    }

    /// 2/f + U²/(D² sin²r) − 3(1+a²) while t⁻³ ≤ 6, else 8/f − 3(1+a²).
    pub fn shifted_lambda1_closed(&self, r: f64) -> f64 {
        let shift = 3.0 * (1.0 + self.a * self.a);
        let f = self.f(r);
        if self.x(r) <= 6.0 {
            2.0 / f + (self.u(r) / (self.d() * r.sin())).powi(2) - shift
        } else {
            8.0 / f - shift
        }
    }
}

#[derive(Debug, Clone)]
pub struct PageFamily {
    pub constants: PageConstants,
    ambient: EinsteinAmbient,
}

impl PageFamily {
    pub fn new(constants: PageConstants) -> Self {
        let ambient = EinsteinAmbient::page(constants.a);
        PageFamily { constants, ambient }
    }

    pub fn builtin() -> Self {
        Self::new(PageConstants::builtin())
    }
}

impl SliceFamily for PageFamily {
    fn name(&self) -> &str {
        "page"
    }

    fn ambient(&self) -> &EinsteinAmbient {
        &self.ambient
    }

    fn domain(&self) -> (f64, Option<f64>) {
        (0.0, Some(std::f64::consts::PI))
    }

    fn geometry(&self, r: f64) -> (f64, f64) {
        let c = &self.constants;
        (c.f(r), c.d() * r.sin() / c.u(r))
    }
}

pub fn page_constants() -> PageConstants {
    PageConstants::builtin()
}

pub fn page_shifted_lambda1(r: f64) -> Result<f64> {
    super::shifted_lambda1(&PageFamily::builtin(), r)
}

pub fn page_transition_roots(tol: f64) -> Result<(f64, f64)> {
    let roots = transition_roots(&PageFamily::builtin(), tol)?;
    Ok((roots[0].r, roots[1].r))
}

pub fn page_index_nullity(r: f64, depth: usize) -> Result<IndexNullityReport> {
    slice_index_nullity(&PageFamily::builtin(), r, depth)
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn squash_parameter_relation(r in 1e-3f64..(std::f64::consts::PI - 1e-3)) {
            let fam = PageFamily::builtin();
            let s = fam.slice(r).unwrap();
            let c = &fam.constants;
            let x = c.f(r) * c.u(r).powi(2) / (c.d() * r.sin()).powi(2);
            prop_assert!((s.t().powi(-3) / x - 1.0).abs() <= 1e-12);
            prop_assert!((s.mu() / s.t() / s.f - 1.0).abs() <= 1e-12);
            prop_assert!(c.identity_residual(r).abs() <= 1e-12);
        }
    }
}
