//! Laplace spectrum of the unit-volume Berger 3-sphere g_B^t.
//!
//! Every eigenvalue has the form t·(A + B·x) with x = t⁻³, where the pair
//! (A, B) comes from a mode (k, q): A = k(k+2) − q², B = q².

mod distinct;
mod piecewise;

pub use distinct::{distinct_spectrum_at, weighted_position, DistinctLevel};
pub use piecewise::{branch_crossing, kth_distinct_piecewise, PiecewiseSegment};

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{exact_from_f64, int, to_f64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mode {
    pub k: u32,
    pub q: u32,
}

impl Mode {
    pub fn new(k: u32, q: u32) -> Result<Self> {
        if q > k || !(k - q).is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "mode ({k},{q}) needs 0 <= q <= k and q = k mod 2"
            )));
        }
        Ok(Mode { k, q })
    }

    pub const CONSTANT: Mode = Mode { k: 0, q: 0 };

    pub fn a(&self) -> i128 {
        let (k, q) = (i128::from(self.k), i128::from(self.q));
        k * (k + 2) - q * q
    }

    pub fn b(&self) -> i128 {
        i128::from(self.q) * i128::from(self.q)
    }

    pub fn branch(&self) -> AffineBranch {
        AffineBranch {
            a: int(self.a()),
            b: int(self.b()),
            source: Some(*self),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.q)
    }
}

/// The line A + B·x; the eigenvalue at squash parameter t is t times this at x = t⁻³.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineBranch {
    pub a: Rational,
    pub b: Rational,
    pub source: Option<Mode>,
}

impl AffineBranch {
    pub fn at(&self, x: &Rational) -> Rational {
        self.a + self.b * x
    }

    pub fn at_f64(&self, x: f64) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * x
    }

    /// γ_n = (2n, n²), the q = k = n chain heads.
    pub fn gamma(n: u32) -> Self {
        Mode { k: n, q: n }.branch()
    }

    /// β_l = (l(l+2), 0) for even l.
    pub fn beta(l: u32) -> Self {
        Mode { k: l, q: 0 }.branch()
    }

    /// α_k = (k²+2k−1, 1) for odd k.
    pub fn alpha(k: u32) -> Self {
        Mode { k, q: 1 }.branch()
    }
}

/// Squash parameter t together with x = t⁻³, the latter kept exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SquashParam {
    pub t: f64,
    pub x: Rational,
}

impl SquashParam {
    pub fn from_t(t: f64) -> Result<Self> {
        check_positive("t", t)?;
        let x = exact_from_f64(t.powi(-3))?;
        Ok(SquashParam { t, x })
    }

    pub fn from_x(x: Rational) -> Result<Self> {
        if x <= int(0) {
            return Err(Error::InvalidParameter(format!("x = {x} must be positive")));
        }
        let t = to_f64(&x).powf(-1.0 / 3.0);
        Ok(SquashParam { t, x })
    }
}

pub(crate) fn check_positive(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            name,
            value: v,
            domain: "(0, inf)",
        })
    }
}

pub fn mode_value(m: Mode, t: f64) -> Result<f64> {
    check_positive("t", t)?;
    Ok(t * m.a() as f64 + m.b() as f64 / (t * t))
}

pub fn mode_multiplicity(m: Mode) -> u64 {
    let k = u64::from(m.k);
    if m.q == 0 {
        k + 1
    } else {
        2 * (k + 1)
    }
}

pub fn enumerate_modes(k_max: u32) -> Vec<Mode> {
    let mut modes = Vec::new();
    for k in 0..=k_max {
        for q in (k % 2..=k).step_by(2) {
            modes.push(Mode { k, q });
        }
    }
    modes
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Constant,
    Degree(u64),
    Modes(Vec<Mode>),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Constant => write!(f, "constant"),
            Source::Degree(k) => write!(f, "degree {k}"),
            Source::Modes(ms) => {
                let parts: Vec<String> = ms.iter().map(Mode::to_string).collect();
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: u64,
    pub source: Source,
}

/// First `count` distinct eigenvalues of g_B^t, ascending, with multiplicities.
pub fn berger_spectrum(param: &SquashParam, count: usize) -> Result<Vec<SpectrumEntry>> {
    let levels = distinct_spectrum_at(&param.x, count)?;
    Ok(levels
        .into_iter()
        .map(|lvl| SpectrumEntry {
            value: param.t * to_f64(&lvl.coefficient),
            multiplicity: lvl.multiplicity(),
            source: lvl.source(),
        })
        .collect())
}

/// Coefficient of t in the first nonzero eigenvalue: 2 + x up to x = 6, then 8.
pub fn tanno_coefficient(x: &Rational) -> Rational {
    if *x <= int(6) {
        int(2) + x
    } else {
        int(8)
    }
}

pub fn tanno_lambda1(t: f64) -> Result<f64> {
    check_positive("t", t)?;
    let x = t.powi(-3);
    Ok(if x <= 6.0 {
        2.0 * t + 1.0 / (t * t)
    } else {
        8.0 * t
    })
}

/// First nonzero eigenvalue of σ₁² + σ₂² + ε²σ₃², obtained from the unit-volume
/// family at t = ε^{2/3} rescaled by μ = ε^{2/3}.
pub fn epsilon_lambda1(eps: f64) -> Result<f64> {
    check_positive("epsilon", eps)?;
    let t = eps.powf(2.0 / 3.0);
    let mu = t;
    let entry = SpectrumEntry {
        value: tanno_lambda1(t)?,
        multiplicity: match eps.powi(-2).partial_cmp(&6.0) {
            Some(std::cmp::Ordering::Less) => 4,
            Some(std::cmp::Ordering::Equal) => 7,
            _ => 3,
        },
        source: Source::Modes(vec![]),
    };
    Ok(scale_spectrum(&[entry], mu)?[0].value)
}

pub fn scale_spectrum(entries: &[SpectrumEntry], mu: f64) -> Result<Vec<SpectrumEntry>> {
    check_positive("mu", mu)?;
    Ok(entries
        .iter()
        .map(|e| SpectrumEntry {
            value: e.value / mu,
            ..e.clone()
        })
        .collect())
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn mode() -> impl Strategy<Value = Mode> {
        (0u32..40)
            .prop_flat_map(|k| (Just(k), 0..=k / 2))
            .prop_map(|(k, j)| Mode { k, q: k - 2 * j })
    }

    proptest! {
        #[test]
        fn round_sphere_degeneration(m in mode()) {
            let k = f64::from(m.k);
            prop_assert_eq!(mode_value(m, 1.0).unwrap(), k * (k + 2.0));
        }

        #[test]
        fn positive_off_constant(m in mode(), n in 1i128..10_000, d in 1i128..10_000) {
            let x = Rational::new(n, d);
            let v = m.branch().at(&x);
            if m == Mode::CONSTANT {
                prop_assert_eq!(v, int(0));
            } else {
                prop_assert!(v > int(0));
                prop_assert!(m.a() >= 2 * i128::from(m.k));
            }
        }

        #[test]
        fn round_levels_are_sphere_levels(count in 1usize..12) {
            let lv = distinct_spectrum_at(&int(1), count).unwrap();
            for (k, l) in lv.iter().enumerate() {
                let k = k as u64;
                prop_assert_eq!(l.coefficient, int(i128::from(k * (k + 2))));
                prop_assert_eq!(l.multiplicity(), (k + 1) * (k + 1));
            }
        }

        #[test]
        fn scaling_divides_values(vals in proptest::collection::vec(0.0f64..1e3, 1..20), mu in 1e-3f64..1e3) {
            let s: Vec<SpectrumEntry> = vals
                .iter()
                .map(|&v| SpectrumEntry { value: v, multiplicity: 2, source: Source::Constant })
                .collect();
            for (a, b) in scale_spectrum(&s, mu).unwrap().iter().zip(&s) {
                prop_assert_eq!(a.value, b.value / mu);
                prop_assert_eq!(a.multiplicity, b.multiplicity);
            }
        }
    }
}
