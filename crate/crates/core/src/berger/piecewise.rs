use super::{enumerate_modes, AffineBranch};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// The x > 0 where two branches agree; `None` if parallel or meeting at x ≤ 0.
pub fn branch_crossing(b1: &AffineBranch, b2: &AffineBranch) -> Result<Option<Rational>> {
    if b1.a == b2.a && b1.b == b2.b {
        return Err(Error::IdenticalBranches {
            a: b1.a.to_string(),
            b: b1.b.to_string(),
        });
    }
    if b1.b == b2.b {
        return Ok(None);
    }
    let x = (b2.a - b1.a) / (b1.b - b2.b);
    Ok((x > int(0)).then_some(x))
}

/// A cell of the piecewise description; `lo == hi` marks an isolated point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseSegment {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub branch: AffineBranch,
}

impl PiecewiseSegment {
    pub fn contains(&self, x: &Rational) -> bool {
        let above = if self.lo_closed {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let below = if self.hi_closed {
            *x <= self.hi
        } else {
            *x < self.hi
        };
        above && below
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.branch.at(x)
    }

    pub fn interval(&self) -> String {
        if self.is_point() {
            return format!("{{{}}}", self.lo);
        }
        format!(
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// Lines that can reach distinct level `i` somewhere on (0, x_max].
///
/// Level i never exceeds U(x) = min(2i + i²x, 4i(i+1)): the chain heads
/// γ_0..γ_i and the q = 0 modes β_0, β_2, .., β_2i each give i+1 distinct values.
/// A line minus U is convex, so it suffices to test 0, x_max and the kink of U.
fn candidates(i: usize, x_max: &Rational) -> Vec<AffineBranch> {
    let ii = i as i128;
    let cap = int(4 * ii * (ii + 1));
    let upper = |x: &Rational| std::cmp::min(int(2 * ii) + int(ii * ii) * x, cap);
    let mut probes = vec![int(0), *x_max];
    let kink = (cap - int(2 * ii)) / int(ii * ii);
    if kink < *x_max {
        probes.push(kink);
    }
    // any mode with A = k(k+2) − q² ≥ 2k above the cap is out of reach
    let k_max = (2 * ii * (ii + 1)) as u32 + 1;
    enumerate_modes(k_max)
        .into_iter()
        .map(|m| m.branch())
        .filter(|b| probes.iter().any(|x| b.at(x) <= upper(x)))
        .collect()
}

fn distinct_value_at(lines: &[AffineBranch], x: &Rational, i: usize) -> (Rational, AffineBranch) {
    let mut vals: Vec<(Rational, &AffineBranch)> = lines.iter().map(|b| (b.at(x), b)).collect();
    vals.sort_by(|p, q| p.0.cmp(&q.0).then(p.1.b.cmp(&q.1.b)));
    vals.dedup_by(|p, q| p.0 == q.0);
    (vals[i].0, vals[i].1.clone())
}

/// Order of the lines just to the right of `x`.
fn order_right_of(lines: &mut [AffineBranch], x: &Rational) {
    lines.sort_by(|p, q| p.at(x).cmp(&q.at(x)).then(p.b.cmp(&q.b)));
}

/// Level `i` of the distinct spectrum (0 is the constant mode) as exact cells on (0, x_max].
///
/// Sweeps x upward. Between events the line holding level i is fixed. Events
/// are crossings among lines at levels ≤ i (a collision below pushes the level
/// to the next line for a single point) and crossings of the current line with
/// lines above it.
pub fn kth_distinct_piecewise(i: usize, x_max: &Rational) -> Result<Vec<PiecewiseSegment>> {
    if i == 0 {
        return Err(Error::InvalidParameter(
            "level index must be at least 1".into(),
        ));
    }
    if *x_max <= int(0) {
        return Err(Error::InvalidParameter(format!(
            "x_max = {x_max} must be positive"
        )));
    }
    let mut lines = candidates(i, x_max);
    let mut cells: Vec<PiecewiseSegment> = Vec::new();
    let mut cur = int(0);
    loop {
        order_right_of(&mut lines, &cur);
        let current = lines[i].clone();
        let mut next = *x_max;
        let mut consider = |a: &AffineBranch, b: &AffineBranch| {
            if let Ok(Some(x)) = branch_crossing(a, b) {
                if x > cur && x < next {
                    next = x;
                }
            }
        };
        for p in 0..=i {
            for q in p + 1..=i {
                consider(&lines[p], &lines[q]);
            }
        }
        for above in &lines[i + 1..] {
            consider(&current, above);
        }

        push_cell(&mut cells, cur, next, current);
        let (value, holder) = distinct_value_at(&lines, &next, i);
        close_at(&mut cells, next, value, holder);
        if next == *x_max {
            break;
        }
        cur = next;
    }
    Ok(cells)
}

fn push_cell(cells: &mut Vec<PiecewiseSegment>, lo: Rational, hi: Rational, branch: AffineBranch) {
    if let Some(last) = cells.last_mut() {
        if last.hi == lo && last.hi_closed && !last.is_point() && last.branch == branch {
            last.hi = hi;
            last.hi_closed = false;
            return;
        }
    }
    let lo_closed = match cells.last() {
        Some(last) => last.hi == lo && last.hi_closed && last.branch.at(&lo) == branch.at(&lo),
        None => false,
    };
    cells.push(PiecewiseSegment {
        lo,
        hi,
        lo_closed,
        hi_closed: false,
        branch,
    });
}

fn close_at(cells: &mut Vec<PiecewiseSegment>, x: Rational, value: Rational, holder: AffineBranch) {
    let last = cells.last_mut().expect("an open cell precedes every event");
    if last.branch.at(&x) == value {
        last.hi_closed = true;
    } else {
        cells.push(PiecewiseSegment {
            lo: x,
            hi: x,
            lo_closed: true,
            hi_closed: true,
            branch: holder,
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berger::distinct_spectrum_at;
    use crate::rational::frac;

    fn g(n: u32) -> AffineBranch {
        AffineBranch::gamma(n)
    }
    fn b(l: u32) -> AffineBranch {
        AffineBranch::beta(l)
    }
    fn a(k: u32) -> AffineBranch {
        AffineBranch::alpha(k)
    }

    #[test]
    fn named_crossings() {
        let cases = [
            (g(1), b(2), frac(6, 1)),
            (g(2), b(2), frac(1, 1)),
            (g(3), b(2), frac(2, 9)),
            (g(4), a(3), frac(2, 5)),
            (a(3), b(4), frac(10, 1)),
            (g(5), a(3), frac(1, 6)),
            (g(6), a(3), frac(2, 35)),
            (g(7), b(4), frac(10, 49)),
            (g(8), b(4), frac(1, 8)),
            (g(9), b(4), frac(2, 27)),
        ];
        for (p, q, x) in cases {
            assert_eq!(branch_crossing(&p, &q).unwrap(), Some(x));
            assert_eq!(branch_crossing(&q, &p).unwrap(), Some(x));
        }
        assert!(branch_crossing(&b(2), &b(2)).is_err());
        assert_eq!(branch_crossing(&b(2), &b(4)).unwrap(), None);
        // γ₁ and γ₂ meet only at x = −2
        assert_eq!(branch_crossing(&g(1), &g(2)).unwrap(), None);
    }

    #[test]
    fn first_level() {
        let cells = kth_distinct_piecewise(1, &int(20)).unwrap();
        assert_eq!(cells.len(), 2);
        assert_eq!((cells[0].lo, cells[0].hi), (int(0), int(6)));
        assert!(!cells[0].lo_closed && cells[0].hi_closed);
        assert_eq!(cells[0].branch, g(1));
        assert_eq!((cells[1].lo, cells[1].hi), (int(6), int(20)));
        assert!(cells[1].lo_closed && cells[1].hi_closed);
        assert_eq!(cells[1].branch, b(2));
        assert_eq!(cells[0].interval(), "(0,6]");
    }

    #[test]
    fn second_level() {
        let cells = kth_distinct_piecewise(2, &int(20)).unwrap();
        let summary: Vec<_> = cells
            .iter()
            .map(|c| (c.lo, c.hi, c.branch.clone()))
            .collect();
        assert_eq!(
            summary,
            vec![
                (int(0), int(1), g(2)),
                (int(1), int(6), b(2)),
                (int(6), int(6), a(3)),
                (int(6), int(20), g(1))
            ]
        );
        // at x = 6 the two lowest nonzero values collide, so level 2 jumps for one point
        assert!(cells[0].hi_closed && cells[1].lo_closed);
        assert!(!cells[1].hi_closed && !cells[3].lo_closed);
    }

    #[test]
    fn fourth_level_has_a_point_glitch_at_two_ninths() {
        let cells = kth_distinct_piecewise(4, &int(1)).unwrap();
        assert_eq!(cells[0].branch, b(2));
        assert_eq!(cells[0].hi, frac(2, 9));
        assert!(!cells[0].hi_closed);
        assert!(cells[1].is_point() && cells[1].lo == frac(2, 9));
        assert_eq!(
            cells[1].eval(&frac(2, 9)),
            distinct_spectrum_at(&frac(2, 9), 5).unwrap()[4].coefficient
        );
    }

    #[test]
    fn cells_agree_with_direct_sort() {
        for i in 1..=11 {
            let x_max = int(20);
            let cells = kth_distinct_piecewise(i, &x_max).unwrap();
            let mut samples: Vec<Rational> = (1..=400).map(|j| frac(j, 20)).collect();
            samples.extend(
                cells
                    .iter()
                    .flat_map(|c| [c.lo, c.hi])
                    .filter(|x| *x > int(0)),
            );
            for x in samples {
                let hits: Vec<_> = cells.iter().filter(|c| c.contains(&x)).collect();
                assert!(!hits.is_empty(), "level {i} has no cell at {x}");
                let direct = distinct_spectrum_at(&x, i + 1).unwrap()[i].coefficient;
                for c in hits {
                    assert_eq!(c.eval(&x), direct, "level {i} at {x}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(kth_distinct_piecewise(0, &int(1)).is_err());
        assert!(kth_distinct_piecewise(1, &int(0)).is_err());
    }
}
