//! Table-producing commands behind the `berger-index` binary.

use std::f64::consts::PI;

use crate::berger::{
    berger_spectrum, distinct_spectrum_at, kth_distinct_piecewise, mode_multiplicity,
    scale_spectrum, SquashParam,
};
use crate::error::{Error, Result};
use crate::harmonic::sphere_spectrum;
use crate::jacobi::jacobi_shift;
use crate::output::{Cell, Table};
use crate::rational::{exact_from_f64, to_f64, Rational};
use crate::slices::{
    cp2_lambda1, index_nullity_at_root, shifted_level, slice_index_nullity, transition_roots,
    Cp2Family, PageConstants, PageFamily, SliceFamily,
};

/// Exit status for a failed command: 2 for bad input, 3 for domain or structural failures.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParameter(_)
        | Error::OutOfDomain { .. }
        | Error::UnsupportedCase(_)
        | Error::Unrepresentable(_)
        | Error::Io { .. } => 2,
        _ => 3,
    }
}

fn lambda_label(level: usize) -> String {
    if level == 0 {
        "constant".into()
    } else {
        format!("lambda{level}")
    }
}

pub fn cmd_sphere_spectrum(p: u64, k_max: u64) -> Result<Table> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "dimension must be at least 1".into(),
        ));
    }
    let mut t = Table::new(&["k", "eigenvalue", "multiplicity"]);
    t.comment(format!(
        "Laplacian on the unit round {p}-sphere, degrees 0..={k_max}"
    ));
    for e in sphere_spectrum(p, k_max) {
        t.push(vec![
            e.degree.into(),
            e.eigenvalue.into(),
            e.multiplicity.into(),
        ]);
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BergerParam {
    T(f64),
    Epsilon(f64),
}

pub fn cmd_berger_spectrum(
    param: BergerParam,
    count: usize,
    with_multiplicity: bool,
) -> Result<Table> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be positive".into()));
    }
    let (squash, mu, label) = match param {
        BergerParam::T(t) => (SquashParam::from_t(t)?, 1.0, format!("t = {t}")),
        BergerParam::Epsilon(eps) => {
            if !(eps.is_finite() && eps > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "epsilon = {eps} must be positive"
                )));
            }
            // σ₁² + σ₂² + ε²σ₃² is ε^{2/3} times the unit-volume metric at t = ε^{2/3}
            let t = eps.powf(2.0 / 3.0);
            let x = exact_from_f64(1.0 / (eps * eps))?;
            (SquashParam { t, x }, t, format!("epsilon = {eps}"))
        }
    };
    let levels = distinct_spectrum_at(&squash.x, count)?;
    let values = scale_spectrum(&berger_spectrum(&squash, count)?, mu)?;

    let mut cols = vec!["level", "label", "value", "A", "B", "mode"];
    if with_multiplicity {
        cols.extend(["multiplicity", "level_multiplicity", "first_position"]);
    }
    let mut t = Table::new(&cols);
    t.comment(format!("{label}, x = t^-3 = {}", squash.x));
    t.comment(
        "level counts distinct values from 0 (constants); lambda<i> is the i-th nonzero value",
    );
    if with_multiplicity {
        t.comment("first_position is the 0-based position of the level in the list repeated by multiplicity");
    }
    let mut position = 0u64;
    for (i, (lvl, entry)) in levels.iter().zip(&values).enumerate() {
        for m in &lvl.modes {
            let mut row = vec![
                (i as u64).into(),
                lambda_label(i).into(),
                entry.value.into(),
                Cell::Exact(Rational::from_integer(m.a())),
                Cell::Exact(Rational::from_integer(m.b())),
                m.to_string().into(),
            ];
            if with_multiplicity {
                row.extend([
                    mode_multiplicity(*m).into(),
                    entry.multiplicity.into(),
                    position.into(),
                ]);
            }
            t.push(row);
        }
        position += entry.multiplicity;
    }
    Ok(t)
}

pub fn cmd_berger_piecewise(i: usize, x_max: &Rational) -> Result<Table> {
    let cells = kth_distinct_piecewise(i, x_max)?;
    let mut t = Table::new(&[
        "lo",
        "hi",
        "lo_closed",
        "hi_closed",
        "interval",
        "A",
        "B",
        "mode",
    ]);
    t.comment(format!(
        "level {i} (lambda{i}) of the distinct spectrum as t*(A + B x), x = t^-3 in (0, {x_max}]"
    ));
    t.comment("single-point cells mark x where lower values collide and the level jumps");
    for c in cells {
        let mode = c.branch.source.map(|m| m.to_string()).unwrap_or_default();
        t.push(vec![
            c.lo.into(),
            c.hi.into(),
            c.lo_closed.into(),
            c.hi_closed.into(),
            c.interval().into(),
            c.branch.a.into(),
            c.branch.b.into(),
            mode.into(),
        ]);
    }
    Ok(t)
}

#[derive(Debug, Clone)]
pub enum Space {
    Cp2,
    Page(PageConstants),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexQuery {
    At(f64),
    Scan {
        r_min: f64,
        r_max: f64,
        steps: usize,
    },
    Roots,
}

fn family(space: &Space) -> Box<dyn SliceFamily> {
    match space {
        Space::Cp2 => Box::new(Cp2Family::new()),
        Space::Page(c) => Box::new(PageFamily::new(c.clone())),
    }
}

fn scan_grid(r_min: f64, r_max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 || r_min.is_nan() || r_max.is_nan() || r_min > r_max {
        return Err(Error::InvalidParameter(format!(
            "scan needs r_min <= r_max and steps >= 1 (got {r_min}, {r_max}, {steps})"
        )));
    }
    if steps == 1 {
        return Ok(vec![r_min]);
    }
    let h = (r_max - r_min) / (steps - 1) as f64;
    Ok((0..steps).map(|j| r_min + j as f64 * h).collect())
}

pub fn cmd_index(space: &Space, query: IndexQuery, tol: f64, depth: usize) -> Result<Table> {
    let fam = family(space);
    let fam = fam.as_ref();
    if let IndexQuery::Roots = query {
        if matches!(space, Space::Cp2) {
            return Err(Error::UnsupportedCase(
                "cp2 has no transition roots: its first Jacobi eigenvalue never vanishes".into(),
            ));
        }
        let roots = transition_roots(fam, tol)?;
        let mut t = Table::new(&["root", "lo", "hi", "index", "nullity"]);
        t.comment(format!(
            "{} transition roots, bisection tolerance {tol}",
            fam.name()
        ));
        for root in roots {
            let rep = index_nullity_at_root(fam, &root, depth)?;
            t.push(vec![
                root.r.into(),
                root.lo.into(),
                root.hi.into(),
                rep.index.into(),
                rep.nullity.into(),
            ]);
        }
        return Ok(t);
    }

    let grid = match query {
        IndexQuery::At(r) => vec![r],
        IndexQuery::Scan {
            r_min,
            r_max,
            steps,
        } => scan_grid(r_min, r_max, steps)?,
        IndexQuery::Roots => unreachable!(),
    };
    for &r in &grid {
        fam.slice(r)?;
    }
    let mut t = Table::new(&[
        "r",
        "index",
        "nullity",
        "first_shifted",
        "second_shifted",
        "certified_to",
    ]);
    t.comment(format!(
        "{}: Jacobi eigenvalues lambda - s/n with s/n = {}, {depth} distinct levels",
        fam.name(),
        jacobi_shift(fam.ambient())?
    ));
    if let Space::Page(_) = space {
        match transition_roots(fam, tol) {
            Ok(roots) => t.comment(format!(
                "transition roots: r1 = {}, r2 = {}",
                roots[0].r, roots[1].r
            )),
            Err(e) => t.comment(format!("transition roots: unavailable ({e})")),
        }
    }
    for r in grid {
        let rep = slice_index_nullity(fam, r, depth)?;
        t.push(vec![
            r.into(),
            rep.index.into(),
            rep.nullity.into(),
            shifted_level(fam, r, 1)?.into(),
            shifted_level(fam, r, 2)?.into(),
            rep.truncation_bound.into(),
        ]);
    }
    Ok(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

pub fn cmd_plot_data(figure: Figure, samples: usize, page: &PageConstants) -> Result<Table> {
    if samples < 2 {
        return Err(Error::InvalidParameter("need at least 2 samples".into()));
    }
    match figure {
        Figure::Fig1 => {
            let mut cols = vec!["t".to_string()];
            cols.extend((1..=11).map(|i| format!("lambda{i}")));
            let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
            let mut t = Table::new(&cols);
            t.comment(
                "Berger sphere eigenvalues t*(A + B t^-3), first eleven distinct nonzero values",
            );
            t.comment(
                "distinct ordering: values shared by several modes occupy one column, so the",
            );
            t.comment("two lists that both read 8t for t^-3 >= 1 appear once here");
            for t_val in scan_grid(0.2, 2.0, samples)? {
                let sq = SquashParam::from_t(t_val)?;
                let lv = distinct_spectrum_at(&sq.x, 12)?;
                let mut row = vec![Cell::Real(t_val)];
                row.extend(
                    lv[1..]
                        .iter()
                        .map(|l| Cell::Real(t_val * to_f64(&l.coefficient))),
                );
                t.push(row);
            }
            Ok(t)
        }
        Figure::Fig2 => {
            let fam = Cp2Family::new();
            let shift = fam.shift()?;
            let mut t = Table::new(&["r", "lambda1", "jacobi1"]);
            t.comment(format!(
                "CP2 geodesic spheres: first Jacobi eigenvalue lambda1(r) - {shift}"
            ));
            for r in scan_grid(0.05, 5.0, samples)? {
                let l1 = cp2_lambda1(r)?;
                t.push(vec![r.into(), l1.into(), (l1 - shift).into()]);
            }
            Ok(t)
        }
        Figure::Fig3 => {
            let fam = PageFamily::new(page.clone());
            let mut cols = vec!["r".to_string()];
            cols.extend((0..6).map(|i| format!("shifted{i}")));
            let cols: Vec<&str> = cols.iter().map(String::as_str).collect();
            let mut t = Table::new(&cols);
            t.comment("Page slices: first six distinct Jacobi eigenvalues (shifted0 is the constant mode)");
            match transition_roots(&fam, 1e-6) {
                Ok(roots) => t.comment(format!(
                    "shifted1 vanishes at r1 = {}, r2 = {}",
                    roots[0].r, roots[1].r
                )),
                Err(e) => t.comment(format!("shifted1 zeros: none located ({e})")),
            }
            for j in 1..=samples {
                let r = PI * j as f64 / (samples + 1) as f64;
                let mut row = vec![Cell::Real(r)];
                for lvl in 0..6 {
                    row.push(shifted_level(&fam, r, lvl)?.into());
                }
                t.push(row);
            }
            Ok(t)
        }
    }
}
