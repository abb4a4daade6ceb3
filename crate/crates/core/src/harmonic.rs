//! Spectrum of the Laplacian on the unit round p-sphere.
//!
//! Degree-k harmonic polynomials restricted to S^p give the eigenspace for
//! k(k+p-1). Its dimension is the number of degree-k monomials in p+1
//! variables minus the image of degree k-2 under multiplication by |x|².

use num_integer::binomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereSpectrumEntry {
    pub degree: u64,
    pub eigenvalue: u64,
    pub multiplicity: u64,
    pub dim: u64,
}

pub fn sphere_eigenvalue(k: u64, p: u64) -> u64 {
    debug_assert!(p >= 1);
    k * (k + p - 1)
}

fn choose(m: i128, p: i128) -> u128 {
    if m < p || m < 0 {
        0
    } else {
        binomial(m as u128, p as u128)
    }
}

pub fn sphere_multiplicity(k: u64, p: u64) -> u64 {
    debug_assert!(p >= 1);
    let (k, p) = (i128::from(k), i128::from(p));
    (choose(k + p, p) - choose(k + p - 2, p)) as u64
}

pub fn sphere_spectrum(p: u64, k_max: u64) -> Vec<SphereSpectrumEntry> {
    (0..=k_max)
        .map(|k| SphereSpectrumEntry {
            degree: k,
            eigenvalue: sphere_eigenvalue(k, p),
            multiplicity: sphere_multiplicity(k, p),
            dim: p,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // Pascal's triangle, built without any closed form.
    fn pascal(rows: usize) -> Vec<Vec<u128>> {
        let mut t = vec![vec![1u128]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![1u128; n + 1];
            for j in 1..n {
                row[j] = prev[j - 1] + prev[j];
            }
            t.push(row);
        }
        t
    }

    #[test]
    fn eigenvalues() {
        assert_eq!(sphere_eigenvalue(0, 5), 0);
        assert_eq!(sphere_eigenvalue(1, 3), 3);
        assert_eq!(sphere_eigenvalue(2, 2), 6);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(sphere_multiplicity(0, 4), 1);
        assert_eq!(sphere_multiplicity(1, 4), 5);
        assert_eq!(sphere_multiplicity(2, 3), 9);
        assert_eq!(sphere_multiplicity(2, 2), 5);
        assert_eq!(sphere_multiplicity(5, 1), 2);
    }

    #[test]
    fn multiplicity_matches_pascal() {
        let t = pascal(40);
        let c = |m: i64, p: i64| {
            if m < p || m < 0 {
                0
            } else {
                t[m as usize][p as usize]
            }
        };
        for p in 1..=6i64 {
            for k in 0..=12i64 {
                let expect = c(k + p, p) - c(k + p - 2, p);
                assert_eq!(u128::from(sphere_multiplicity(k as u64, p as u64)), expect);
            }
        }
    }

    #[test]
    fn three_sphere_is_square() {
        for k in 0..=12 {
            assert_eq!(sphere_multiplicity(k, 3), (k + 1) * (k + 1));
        }
    }

    #[test]
    fn spectra() {
        let pairs = |p, k| {
            sphere_spectrum(p, k)
                .iter()
                .map(|e| (e.eigenvalue, e.multiplicity))
                .collect::<Vec<_>>()
        };
        assert_eq!(pairs(3, 2), vec![(0, 1), (3, 4), (8, 9)]);
        assert_eq!(pairs(2, 1), vec![(0, 1), (2, 3)]);
        assert_eq!(pairs(1, 3), vec![(0, 1), (1, 2), (4, 2), (9, 2)]);
    }
}
