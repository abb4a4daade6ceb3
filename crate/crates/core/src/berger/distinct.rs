use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{mode_multiplicity, Mode, Source};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// One distinct value of A + B·x together with every mode attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctLevel {
    pub coefficient: Rational,
    pub modes: Vec<Mode>,
}

impl DistinctLevel {
    pub fn multiplicity(&self) -> u64 {
        self.modes.iter().copied().map(mode_multiplicity).sum()
    }

    pub fn source(&self) -> Source {
        if self.modes == [Mode::CONSTANT] {
            Source::Constant
        } else {
            Source::Modes(self.modes.clone())
        }
    }
}

/// The `count` smallest distinct values of A + B·x over all modes, (0,0) included.
///
/// For fixed q the values increase with k (k = q, q+2, ...), and the chain heads
/// 2q + q²x increase with q, so a heap merge that opens chain q+1 only once the
/// head of chain q has been popped visits modes in nondecreasing value order.
pub fn distinct_spectrum_at(x: &Rational, count: usize) -> Result<Vec<DistinctLevel>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    if *x <= int(0) {
        return Err(Error::InvalidParameter(format!("x = {x} must be positive")));
    }
    let value = |m: Mode| m.branch().at(x);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((value(Mode::CONSTANT), Mode::CONSTANT)));
    let mut levels: Vec<DistinctLevel> = Vec::with_capacity(count);

    while let Some(Reverse((v, m))) = heap.pop() {
        if levels.last().is_some_and(|last| last.coefficient == v) {
            levels.last_mut().unwrap().modes.push(m);
        } else if levels.len() == count {
            break;
        } else {
            levels.push(DistinctLevel {
                coefficient: v,
                modes: vec![m],
            });
        }
        let next = Mode { k: m.k + 2, q: m.q };
        heap.push(Reverse((value(next), next)));
        if m.k == m.q {
            let head = Mode {
                k: m.q + 1,
                q: m.q + 1,
            };
            heap.push(Reverse((value(head), head)));
        }
    }
    Ok(levels)
}

/// Position `j` (0-based) of the spectrum listed with multiplicity.
pub fn weighted_position(levels: &[DistinctLevel], j: u64) -> Option<&DistinctLevel> {
    let mut seen = 0;
    for lvl in levels {
        seen += lvl.multiplicity();
        if j < seen {
            return Some(lvl);
        }
    }
    None
}
