//! Internal-degree bookkeeping for graded algebras, coalgebras and modules.
//!
//! Every structure map preserves internal degree, so the bar and cobar
//! complexes split as direct sums of finite slices, one per internal degree.
//! Comodule-side degrees are homological and module-side degrees
//! cohomological; the dictionary negates degrees, so a cotor entry at
//! `(n, t)` corresponds to a Hochschild entry at `(n, -t)`.

use serde::{Deserialize, Serialize};

use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homalg::{cobar_differential, hochschild_differential};
use crate::matrix::Matrix;
use crate::module::{tensor_bimodule, Bimodule, LeftComodule, LeftModule, RightComodule, RightModule};

/// The internal degrees `lo..=hi` retained in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedWindow {
    pub lo: i64,
    pub hi: i64,
}

impl GradedWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::Input(format!("empty window {lo}:{hi}")));
        }
        Ok(GradedWindow { lo, hi })
    }

    pub fn contains(&self, t: i64) -> bool {
        (self.lo..=self.hi).contains(&t)
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The window seen from the other side of the dictionary.
    pub fn negated(&self) -> Self {
        GradedWindow { lo: -self.hi, hi: -self.lo }
    }

    /// Errors on the first degree outside the window.
    pub fn check(&self, degrees: &[i64]) -> Result<()> {
        match degrees.iter().find(|t| !self.contains(**t)) {
            Some(&degree) => Err(Error::WindowOverflow { degree, lo: self.lo, hi: self.hi }),
            None => Ok(()),
        }
    }
}

/// Dimensions indexed by cohomological degree `n` and internal degree `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedTable {
    pub window: GradedWindow,
    /// `dims[n][t - lo]`.
    pub dims: Vec<Vec<usize>>,
    /// Whether row `n` sits at the top of the computed range.
    pub upper_truncated: Vec<bool>,
}

impl GradedTable {
    pub fn get(&self, n: usize, t: i64) -> usize {
        if !self.window.contains(t) {
            return 0;
        }
        self.dims.get(n).map_or(0, |row| row[(t - self.window.lo) as usize])
    }

    /// Dimensions summed over internal degree.
    pub fn totals(&self) -> Vec<usize> {
        self.dims.iter().map(|row| row.iter().sum()).collect()
    }

    /// Nonzero entries as `(n, t, dim)`.
    pub fn nonzero(&self) -> Vec<(usize, i64, usize)> {
        let mut out = Vec::new();
        for (n, row) in self.dims.iter().enumerate() {
            for (i, &d) in row.iter().enumerate() {
                if d != 0 {
                    out.push((n, self.window.lo + i as i64, d));
                }
            }
        }
        out
    }
}

/// Splits the complex `d^0, d^1, ...` (with the degree of each coordinate
/// of `C^n` in `degrees[n]`) into one subcomplex per internal degree and
/// returns the cohomology of each slice, rows indexed by `n`.
fn sliced_cohomology<F: Field>(
    f: &F,
    differentials: &[Matrix<F>],
    degrees: &[Vec<i64>],
    window: GradedWindow,
) -> Result<Vec<Vec<usize>>> {
    for (n, d) in differentials.iter().enumerate() {
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                if degrees[n + 1][r] != degrees[n][c] && !f.is_zero(d.get(r, c)) {
                    return Err(Error::Input(format!(
                        "differential leaving degree {n} does not preserve internal degree"
                    )));
                }
            }
        }
    }
    let levels = degrees.len();
    let mut out = vec![vec![0; window.len()]; levels];
    for (i, t) in window.degrees().enumerate() {
        let select = |n: usize| -> Vec<usize> { (0..degrees[n].len()).filter(|&k| degrees[n][k] == t).collect() };
        let idx: Vec<Vec<usize>> = (0..levels).map(select).collect();
        let diffs = differentials
            .iter()
            .enumerate()
            .map(|(n, d)| d.select_rows(&idx[n + 1]).select_cols(&idx[n]))
            .collect();
        let dims = idx.iter().map(Vec::len).collect();
        let slice = CochainComplex::new(f, 0, dims, diffs)?;
        for (n, h) in slice.cohomology_dims().into_iter().enumerate() {
            out[n][i] = h;
        }
    }
    Ok(out)
}

fn table(window: GradedWindow, mut dims: Vec<Vec<usize>>, n_max: usize) -> GradedTable {
    dims.truncate(n_max + 1);
    let upper_truncated = (0..=n_max).map(|n| n == n_max).collect();
    GradedTable { window, dims, upper_truncated }
}

/// Degree of every coordinate of `C^{⊗n}` in lexicographic order.
fn word_degrees(base: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0];
    for _ in 0..n {
        out = out.iter().flat_map(|d| base.iter().map(move |b| d + b)).collect();
    }
    out
}

/// `dim (M □_C N)_t` for `t` in the window.
pub fn graded_cotensor_dims<F: Field>(
    m: &RightComodule<F>,
    n: &LeftComodule<F>,
    window: GradedWindow,
) -> Result<Vec<usize>> {
    window.check(&m.degrees())?;
    window.check(&n.degrees())?;
    m.ensure_valid()?;
    n.ensure_valid()?;
    let d0 = cobar_differential(m, n, 0);
    let degs = cobar_degrees(m, n, 2);
    Ok(sliced_cohomology(m.field(), &[d0], &degs, window)?.swap_remove(0))
}

fn cobar_degrees<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>, levels: usize) -> Vec<Vec<i64>> {
    let c = m.coalgebra.degrees();
    (0..levels)
        .map(|s| {
            let words = word_degrees(&c, s);
            let mut out = Vec::with_capacity(m.dim() * words.len() * n.dim());
            for dm in m.degrees() {
                for w in &words {
                    for dn in n.degrees() {
                        out.push(dm + w + dn);
                    }
                }
            }
            out
        })
        .collect()
}

fn bar_degrees<F: Field>(b: &Bimodule<F>, levels: usize) -> Vec<Vec<i64>> {
    let a = b.algebra.degrees();
    (0..levels)
        .map(|s| {
            let words = word_degrees(&a, s);
            let mut out = Vec::with_capacity(words.len() * b.dim());
            for w in &words {
                for db in b.degrees() {
                    out.push(db - w);
                }
            }
            out
        })
        .collect()
}

/// `dim Cotor^{n,t}_C(M, N)`: the cobar complex split by internal degree
/// (comodule side, homological).
pub fn graded_cotor_dims<F: Field>(
    m: &RightComodule<F>,
    n: &LeftComodule<F>,
    n_max: usize,
    window: GradedWindow,
) -> Result<GradedTable> {
    if m.coalgebra != n.coalgebra {
        return Err(Error::Mismatch("coalgebras".into()));
    }
    window.check(&m.degrees())?;
    window.check(&n.degrees())?;
    m.coalgebra.ensure_valid()?;
    m.ensure_valid()?;
    n.ensure_valid()?;
    let diffs: Vec<_> = (0..=n_max).map(|s| cobar_differential(m, n, s)).collect();
    let degs = cobar_degrees(m, n, n_max + 2);
    Ok(table(window, sliced_cohomology(m.field(), &diffs, &degs, window)?, n_max))
}

/// `dim H^{n,t}(A, B)`: bar cochains homogeneous of internal degree `t`
/// (module side, cohomological).
pub fn graded_hochschild_dims<F: Field>(b: &Bimodule<F>, n_max: usize, window: GradedWindow) -> Result<GradedTable> {
    window.check(&b.degrees())?;
    b.algebra.ensure_valid()?;
    b.ensure_valid()?;
    let diffs: Vec<_> = (0..=n_max).map(|s| hochschild_differential(b, s)).collect();
    let degs = bar_degrees(b, n_max + 2);
    Ok(table(window, sliced_cohomology(b.field(), &diffs, &degs, window)?, n_max))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedCell {
    pub n: usize,
    /// Comodule-side internal degree; the Hochschild entry sits at `-t`.
    pub t: i64,
    pub cotor: usize,
    pub hochschild: usize,
    pub agree: bool,
    pub upper_truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComparison {
    pub cotor: GradedTable,
    pub hochschild: GradedTable,
    /// Every cell where either side is nonzero.
    pub cells: Vec<GradedCell>,
    pub pass: bool,
}

/// Translates graded modules to comodules and compares both tables cell by
/// cell. `window` is in comodule-side degrees.
pub fn compare_graded<F: Field>(
    m: &LeftModule<F>,
    n: &RightModule<F>,
    n_max: usize,
    window: GradedWindow,
) -> Result<GradedComparison> {
    if m.algebra != n.algebra {
        return Err(Error::Mismatch("algebras".into()));
    }
    let cotor = graded_cotor_dims(&m.to_comodule()?, &n.to_comodule()?, n_max, window)?;
    let hochschild = graded_hochschild_dims(&tensor_bimodule(m, n)?, n_max, window.negated())?;
    let mut cells = Vec::new();
    for s in 0..=n_max {
        for t in window.degrees() {
            let (c, h) = (cotor.get(s, t), hochschild.get(s, -t));
            if c != 0 || h != 0 {
                cells.push(GradedCell { n: s, t, cotor: c, hochschild: h, agree: c == h, upper_truncated: s == n_max });
            }
        }
    }
    let pass = cells.iter().all(|c| c.agree);
    Ok(GradedComparison { cotor, hochschild, cells, pass })
}
