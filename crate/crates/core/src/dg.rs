//! Differential graded coalgebras, comodules, algebras and bimodules, and
//! the total complexes computing DG Cotor and DG Hochschild cohomology
//! inside a finite window of total degrees.
//!
//! Everything is assumed connected: a single basis element of degree 0,
//! which is the counit-dual grouplike (resp. the unit). This makes the
//! normalized complexes — built on the positive-degree basis elements only —
//! available, and for simply connected data (no basis element of degree 1)
//! every total degree is a finite slice.
//!
//! Conventions. Comodule-side degrees are homological with `d` of degree
//! −1; module-side degrees are cohomological with `d` of degree +1. Koszul
//! signs follow `(1 ⊗ d)(x ⊗ y) = (−1)^{|x|} x ⊗ dy`. Totalization uses
//! `d_tot = d_cobar + (−1)^s d_internal` with `s` the cobar (or bar) degree.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, Coalgebra};
use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::graded::GradedWindow;
use crate::matrix::Matrix;
use crate::module::{tensor_bimodule, Bimodule, LeftComodule, LeftModule, RightComodule, RightModule};
use crate::validate::Report;

fn parity_sign<F: Field>(f: &F, k: i64) -> F::Elem {
    if k.rem_euclid(2) == 0 {
        f.one()
    } else {
        f.neg(&f.one())
    }
}

/// `diag((−1)^{deg})`.
fn koszul_diag<F: Field>(f: &F, degrees: &[i64]) -> Matrix<F> {
    let n = degrees.len();
    Matrix::from_fn(f, n, n, |r, c| if r == c { parity_sign(f, degrees[r]) } else { f.zero() })
}

fn check_square(what: &str, d: &Matrix<impl Field>, dim: usize) -> Result<()> {
    if d.rows() != dim || d.cols() != dim {
        return Err(Error::Dimension(format!("{what} differential must be {dim}x{dim}, got {}x{}", d.rows(), d.cols())));
    }
    Ok(())
}

/// Checks `d² = 0` and that every nonzero entry moves degree by `step`.
fn check_differential<F: Field>(d: &Matrix<F>, degrees: &[i64], step: i64, report: &mut Report) {
    let f = d.field();
    for r in 0..d.rows() {
        for c in 0..d.cols() {
            if !f.is_zero(d.get(r, c)) && degrees[r] != degrees[c] + step {
                report.push("differential degree", &[r, c], format!("entry does not have degree {step}"));
            }
        }
    }
    if !d.mul(d).expect("square").is_zero() {
        report.push("d^2", &[], "differential does not square to zero");
    }
}

fn positive_basis(degrees: &[i64]) -> Vec<usize> {
    (0..degrees.len()).filter(|&i| degrees[i] > 0).collect()
}

fn check_connected(degrees: &[i64], report: &mut Report) {
    let zero = degrees.iter().filter(|&&d| d == 0).count();
    if zero != 1 || degrees.iter().any(|&d| d < 0) {
        report.push("connectivity", &[], "expected nonnegative degrees with a one-dimensional degree-0 part");
    }
}

/// A nonnegatively graded coalgebra with a differential of degree −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGCoalgebra<F: Field> {
    pub coalgebra: Arc<Coalgebra<F>>,
    pub differential: Matrix<F>,
}

impl<F: Field> DGCoalgebra<F> {
    pub fn new(coalgebra: Arc<Coalgebra<F>>, differential: Matrix<F>) -> Result<Self> {
        check_square("coalgebra", &differential, coalgebra.dim())?;
        Ok(DGCoalgebra { coalgebra, differential })
    }

    /// A graded coalgebra with the zero differential.
    pub fn formal(coalgebra: Arc<Coalgebra<F>>) -> Self {
        let n = coalgebra.dim();
        let differential = Matrix::zeros(coalgebra.field(), n, n);
        DGCoalgebra { coalgebra, differential }
    }

    pub fn field(&self) -> &F {
        self.coalgebra.field()
    }

    pub fn validate(&self) -> Report {
        let c = &self.coalgebra;
        let f = c.field();
        let mut report = c.validate();
        if c.grading.is_none() {
            report.push("grading", &[], "a DG coalgebra must be graded");
        }
        let degs = c.degrees();
        check_connected(&degs, &mut report);
        let d = &self.differential;
        check_differential(d, &degs, -1, &mut report);
        for k in 0..c.dim() {
            let e = (0..c.dim()).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(&c.counit()[j], d.get(j, k))));
            if !f.is_zero(&e) {
                report.push("counit", &[k], "ε∘d != 0");
            }
        }
        // Δd = (d ⊗ 1 + (1 ⊗ d) with Koszul sign) Δ
        let delta = c.comul_matrix();
        let id = Matrix::identity(f, c.dim());
        let lhs = delta.mul(d).expect("sizes");
        let rhs = d.kron(&id).add(&koszul_diag(f, &degs).kron(d)).expect("sizes").mul(&delta).expect("sizes");
        for k in 0..c.dim() {
            if lhs.column(k) != rhs.column(k) {
                report.push("co-Leibniz", &[k], "Δd != (d⊗1 + 1⊗d)Δ");
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        ensure("DG coalgebra", self.validate())
    }

    /// The dual DG algebra: `d_A` is the transpose of `d_C`, which satisfies
    /// the Leibniz rule exactly when `d_C` satisfies co-Leibniz.
    pub fn dual_algebra(&self) -> Result<DGAlgebra<F>> {
        self.ensure_valid()?;
        Ok(DGAlgebra { algebra: Arc::new(self.coalgebra.dual_algebra()?), differential: self.differential.transpose() })
    }
}

fn ensure(what: &str, report: Report) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::Invalid { what: what.into(), report })
    }
}

/// A graded right comodule whose coaction is a chain map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGRightComodule<F: Field> {
    pub comodule: RightComodule<F>,
    pub differential: Matrix<F>,
}

/// A graded left comodule whose coaction is a chain map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGLeftComodule<F: Field> {
    pub comodule: LeftComodule<F>,
    pub differential: Matrix<F>,
}

impl<F: Field> DGRightComodule<F> {
    pub fn new(comodule: RightComodule<F>, differential: Matrix<F>) -> Result<Self> {
        check_square("comodule", &differential, comodule.dim())?;
        Ok(DGRightComodule { comodule, differential })
    }

    pub fn formal(comodule: RightComodule<F>) -> Self {
        let n = comodule.dim();
        let differential = Matrix::zeros(comodule.field(), n, n);
        DGRightComodule { comodule, differential }
    }

    /// `k` in degree 0 through the coalgebra's grouplike.
    pub fn trivial(c: &DGCoalgebra<F>) -> Result<Self> {
        Ok(Self::formal(RightComodule::trivial(c.coalgebra.clone())?))
    }

    pub fn validate(&self, c: &DGCoalgebra<F>) -> Report {
        let m = &self.comodule;
        let f = m.field();
        let mut report = m.validate();
        if *m.coalgebra != *c.coalgebra {
            report.push("coalgebra", &[], "comodule is over a different coalgebra");
            return report;
        }
        let degs = m.degrees();
        check_differential(&self.differential, &degs, -1, &mut report);
        // ρ d = (d ⊗ 1 + (1 ⊗ d_C) with Koszul sign) ρ
        let rho = m.coaction_matrix();
        let id_c = Matrix::identity(f, c.coalgebra.dim());
        let lhs = rho.mul(&self.differential).expect("sizes");
        let rhs = self
            .differential
            .kron(&id_c)
            .add(&koszul_diag(f, &degs).kron(&c.differential))
            .expect("sizes")
            .mul(&rho)
            .expect("sizes");
        for k in 0..m.dim() {
            if lhs.column(k) != rhs.column(k) {
                report.push("chain map", &[k], "coaction does not commute with differentials");
            }
        }
        report
    }

    /// The left DG module over the dual DG algebra. The module differential
    /// is `−(−1)^{deg} d`: the plain transpose dictionary needs this sign
    /// twist for the Leibniz rule to hold with `d_A = d_Cᵀ`.
    pub fn to_module(&self, c: &DGCoalgebra<F>) -> Result<DGLeftModule<F>> {
        ensure("DG right comodule", self.validate(c))?;
        let module = self.comodule.to_module()?;
        let f = module.field().clone();
        let twist = koszul_diag(&f, &self.comodule.degrees()).scale(&f.neg(&f.one()));
        let differential = twist.mul(&self.differential)?;
        Ok(DGLeftModule { module, differential })
    }
}

impl<F: Field> DGLeftComodule<F> {
    pub fn new(comodule: LeftComodule<F>, differential: Matrix<F>) -> Result<Self> {
        check_square("comodule", &differential, comodule.dim())?;
        Ok(DGLeftComodule { comodule, differential })
    }

    pub fn formal(comodule: LeftComodule<F>) -> Self {
        let n = comodule.dim();
        let differential = Matrix::zeros(comodule.field(), n, n);
        DGLeftComodule { comodule, differential }
    }

    pub fn trivial(c: &DGCoalgebra<F>) -> Result<Self> {
        Ok(Self::formal(LeftComodule::trivial(c.coalgebra.clone())?))
    }

    pub fn validate(&self, c: &DGCoalgebra<F>) -> Report {
        let n = &self.comodule;
        let f = n.field();
        let mut report = n.validate();
        if *n.coalgebra != *c.coalgebra {
            report.push("coalgebra", &[], "comodule is over a different coalgebra");
            return report;
        }
        let degs = n.degrees();
        check_differential(&self.differential, &degs, -1, &mut report);
        // λ d = (d_C ⊗ 1 + (1 ⊗ d) with Koszul sign) λ
        let lambda = n.coaction_matrix();
        let id_n = Matrix::identity(f, n.dim());
        let lhs = lambda.mul(&self.differential).expect("sizes");
        let rhs = c
            .differential
            .kron(&id_n)
            .add(&koszul_diag(f, &c.coalgebra.degrees()).kron(&self.differential))
            .expect("sizes")
            .mul(&lambda)
            .expect("sizes");
        for k in 0..n.dim() {
            if lhs.column(k) != rhs.column(k) {
                report.push("chain map", &[k], "coaction does not commute with differentials");
            }
        }
        report
    }

    /// The right DG module over the dual DG algebra, with differential
    /// `(−1)^{deg} d`.
    pub fn to_module(&self, c: &DGCoalgebra<F>) -> Result<DGRightModule<F>> {
        ensure("DG left comodule", self.validate(c))?;
        let module = self.comodule.to_module()?;
        let f = module.field().clone();
        let differential = koszul_diag(&f, &self.comodule.degrees()).mul(&self.differential)?;
        Ok(DGRightModule { module, differential })
    }
}

/// A nonnegatively graded algebra with a differential of degree +1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGAlgebra<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    pub differential: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGLeftModule<F: Field> {
    pub module: LeftModule<F>,
    pub differential: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGRightModule<F: Field> {
    pub module: RightModule<F>,
    pub differential: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DGBimodule<F: Field> {
    pub bimodule: Bimodule<F>,
    pub differential: Matrix<F>,
}

/// Matrix of the action of `d_A(e_i)`.
fn action_of_derivative<F: Field>(a: &DGAlgebra<F>, action: &[Matrix<F>], i: usize, dim: usize) -> Matrix<F> {
    let coeffs = a.differential.column(i);
    a.algebra.combine(&coeffs, action, dim)
}

/// `d ∘ a_i = a_{d e_i} + (−1)^{|e_i|} a_i ∘ d` for every `i`.
fn check_left_leibniz<F: Field>(a: &DGAlgebra<F>, action: &[Matrix<F>], d: &Matrix<F>, report: &mut Report, law: &str) {
    let f = d.field();
    for (i, act) in action.iter().enumerate() {
        let lhs = d.mul(act).expect("sizes");
        let rhs = action_of_derivative(a, action, i, d.rows())
            .add(&act.mul(d).expect("sizes").scale(&parity_sign(f, a.algebra.degree(i))))
            .expect("sizes");
        if lhs != rhs {
            report.push(law, &[i], "d(a·x) != d(a)·x + (−1)^{|a|} a·d(x)");
        }
    }
}

/// `d ∘ r_i = r_i ∘ d + r_{d e_i} ∘ diag((−1)^{deg})` for every `i`.
fn check_right_leibniz<F: Field>(
    a: &DGAlgebra<F>,
    action: &[Matrix<F>],
    d: &Matrix<F>,
    degrees: &[i64],
    report: &mut Report,
    law: &str,
) {
    let f = d.field();
    let s = koszul_diag(f, degrees);
    for (i, act) in action.iter().enumerate() {
        let lhs = d.mul(act).expect("sizes");
        let rhs = act
            .mul(d)
            .expect("sizes")
            .add(&action_of_derivative(a, action, i, d.rows()).mul(&s).expect("sizes"))
            .expect("sizes");
        if lhs != rhs {
            report.push(law, &[i], "d(x·a) != d(x)·a + (−1)^{|x|} x·d(a)");
        }
    }
}

impl<F: Field> DGAlgebra<F> {
    pub fn new(algebra: Arc<Algebra<F>>, differential: Matrix<F>) -> Result<Self> {
        check_square("algebra", &differential, algebra.dim())?;
        Ok(DGAlgebra { algebra, differential })
    }

    pub fn formal(algebra: Arc<Algebra<F>>) -> Self {
        let n = algebra.dim();
        let differential = Matrix::zeros(algebra.field(), n, n);
        DGAlgebra { algebra, differential }
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn validate(&self) -> Report {
        let a = &self.algebra;
        let mut report = a.validate();
        if a.grading.is_none() {
            report.push("grading", &[], "a DG algebra must be graded");
        }
        let degs = a.degrees();
        check_connected(&degs, &mut report);
        check_differential(&self.differential, &degs, 1, &mut report);
        let left: Vec<_> = (0..a.dim()).map(|i| a.left_multiplication(i)).collect();
        check_left_leibniz(self, &left, &self.differential, &mut report, "Leibniz");
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        ensure("DG algebra", self.validate())
    }
}

impl<F: Field> DGLeftModule<F> {
    pub fn validate(&self, a: &DGAlgebra<F>) -> Report {
        let mut report = self.module.validate();
        check_differential(&self.differential, &self.module.degrees(), 1, &mut report);
        check_left_leibniz(a, self.module.action(), &self.differential, &mut report, "Leibniz");
        report
    }
}

impl<F: Field> DGRightModule<F> {
    pub fn validate(&self, a: &DGAlgebra<F>) -> Report {
        let mut report = self.module.validate();
        let degs = self.module.degrees();
        check_differential(&self.differential, &degs, 1, &mut report);
        check_right_leibniz(a, self.module.action(), &self.differential, &degs, &mut report, "Leibniz");
        report
    }
}

impl<F: Field> DGBimodule<F> {
    pub fn new(bimodule: Bimodule<F>, differential: Matrix<F>) -> Result<Self> {
        check_square("bimodule", &differential, bimodule.dim())?;
        Ok(DGBimodule { bimodule, differential })
    }

    pub fn validate(&self, a: &DGAlgebra<F>) -> Report {
        let b = &self.bimodule;
        let mut report = b.validate();
        if *b.algebra != *a.algebra {
            report.push("algebra", &[], "bimodule is over a different algebra");
            return report;
        }
        let degs = b.degrees();
        check_differential(&self.differential, &degs, 1, &mut report);
        check_left_leibniz(a, b.left_action(), &self.differential, &mut report, "left Leibniz");
        check_right_leibniz(a, b.right_action(), &self.differential, &degs, &mut report, "right Leibniz");
        report
    }

    pub fn ensure_valid(&self, a: &DGAlgebra<F>) -> Result<()> {
        ensure("DG bimodule", self.validate(a))
    }
}

/// `M ⊗ N` with `d = d_M ⊗ 1 + (1 ⊗ d_N)` under the Koszul rule.
pub fn dg_tensor_bimodule<F: Field>(m: &DGLeftModule<F>, n: &DGRightModule<F>) -> Result<DGBimodule<F>> {
    let bimodule = tensor_bimodule(&m.module, &n.module)?;
    let f = m.module.field();
    let differential = m
        .differential
        .kron(&Matrix::identity(f, n.module.dim()))
        .add(&koszul_diag(f, &m.module.degrees()).kron(&n.differential))?;
    Ok(DGBimodule { bimodule, differential })
}

/// Homology of one total degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalDegree {
    pub degree: i64,
    pub dim: usize,
    /// Dimension of the total-complex slice in this degree.
    pub cochains: usize,
    /// The value may be too large: a neighbouring slice lies beyond the
    /// window or was cut off at the cobar-degree cap.
    pub truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalDims {
    pub window: GradedWindow,
    pub degrees: Vec<TotalDegree>,
}

impl TotalDims {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }

    pub fn get(&self, degree: i64) -> Option<&TotalDegree> {
        self.degrees.iter().find(|d| d.degree == degree)
    }
}

/// Words of length `len` over `letters` whose degrees sum to `target`.
fn words(letters: &[usize], degrees: &[i64], len: usize, target: i64) -> Vec<Vec<usize>> {
    let min = letters.iter().map(|&l| degrees[l]).min().unwrap_or(0);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn go(
        letters: &[usize],
        degrees: &[i64],
        min: i64,
        left: usize,
        target: i64,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            if target == 0 {
                out.push(current.clone());
            }
            return;
        }
        if target < min * left as i64 {
            return;
        }
        for &l in letters {
            current.push(l);
            go(letters, degrees, min, left - 1, target - degrees[l], current, out);
            current.pop();
        }
    }
    if !letters.is_empty() || len == 0 {
        go(letters, degrees, min, len, target, &mut current, &mut out);
    }
    out
}

/// Cells `(s, x, word, y)` of one total degree, with an index.
struct Slice {
    cells: Vec<(usize, usize, Vec<usize>, usize)>,
    index: HashMap<(usize, usize, Vec<usize>, usize), usize>,
    capped: bool,
}

impl Slice {
    fn new(cells: Vec<(usize, usize, Vec<usize>, usize)>, capped: bool) -> Self {
        let index = cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Slice { cells, index, capped }
    }
}

/// Largest cobar degree that can contribute, if finite. Each letter adds
/// `min_letter − 1` to the slack between total degree and the outer factors.
fn s_bound(min_letter: Option<i64>, slack: i64) -> Option<usize> {
    match min_letter {
        None => Some(0),
        Some(p) if p >= 2 => Some((slack.max(-1) + 1).max(0) as usize / (p - 1) as usize),
        _ => None,
    }
}

/// Assembles the differential between two slices from a per-cell term
/// generator; terms landing outside the target at a cobar degree beyond the
/// cap are dropped (they belong to the quotient that was cut off).
fn assemble<F: Field>(
    f: &F,
    from: &Slice,
    to: &Slice,
    cap: usize,
    mut terms: impl FnMut(&(usize, usize, Vec<usize>, usize), &mut dyn FnMut((usize, usize, Vec<usize>, usize), F::Elem)),
) -> Result<Matrix<F>> {
    let mut data = vec![f.zero(); to.cells.len() * from.cells.len()];
    let cols = from.cells.len();
    let mut missing = None;
    for (col, cell) in from.cells.iter().enumerate() {
        terms(cell, &mut |key, v| {
            if f.is_zero(&v) {
                return;
            }
            match to.index.get(&key) {
                Some(&row) => {
                    let x = &mut data[row * cols + col];
                    *x = f.add(x, &v);
                }
                None if key.0 > cap => {}
                None => missing = Some(key),
            }
        });
    }
    if let Some(key) = missing {
        return Err(Error::Input(format!(
            "differential leaves the expected total degree at cobar degree {}; check the gradings",
            key.0
        )));
    }
    Matrix::from_data(f, to.cells.len(), cols, data)
}

fn report_dims<F: Field>(
    f: &F,
    window: GradedWindow,
    slices: &[Slice],
    diffs: Vec<Matrix<F>>,
    degree_of: impl Fn(usize) -> i64,
    truncated_at: impl Fn(usize) -> bool,
) -> Result<TotalDims> {
    let dims = slices.iter().map(|s| s.cells.len()).collect();
    let complex = CochainComplex::new(f, 0, dims, diffs)?;
    let h = complex.cohomology_dims();
    let mut degrees: Vec<TotalDegree> = (0..slices.len())
        .filter(|&i| window.contains(degree_of(i)))
        .map(|i| {
            let capped = slices[i].capped
                || (i > 0 && slices[i - 1].capped)
                || slices.get(i + 1).is_some_and(|s| s.capped);
            TotalDegree { degree: degree_of(i), dim: h[i], cochains: slices[i].cells.len(), truncated: truncated_at(i) || capped }
        })
        .collect();
    degrees.sort_by_key(|d| d.degree);
    Ok(TotalDims { window, degrees })
}

/// `Cotor^C_n(M, N)` for total (homological) degrees `n` in the window,
/// from the normalized cobar complex totalized with its internal
/// differentials. Total degree is internal degree minus cobar degree. The
/// top degree of the window is flagged truncated, as is any degree whose
/// slice needed more than `s_cap` cobar factors (only possible when `C` has
/// elements of degree 1).
pub fn dg_cotor_dims<F: Field>(
    c: &DGCoalgebra<F>,
    m: &DGRightComodule<F>,
    n: &DGLeftComodule<F>,
    window: GradedWindow,
    s_cap: usize,
) -> Result<TotalDims> {
    c.ensure_valid()?;
    ensure("DG right comodule", m.validate(c))?;
    ensure("DG left comodule", n.validate(c))?;
    let f = c.field();
    let coal = &c.coalgebra;
    let cdeg = coal.degrees();
    let (mdeg, ndeg) = (m.comodule.degrees(), n.comodule.degrees());
    // The support of M ⊗ N, matching the bimodule check on the other side.
    window.check(&mdeg.iter().flat_map(|x| ndeg.iter().map(move |y| x + y)).collect::<Vec<_>>())?;
    let letters = positive_basis(&cdeg);
    let min_letter = letters.iter().map(|&l| cdeg[l]).min();
    let min_outer = mdeg.iter().min().copied().unwrap_or(0) + ndeg.iter().min().copied().unwrap_or(0);

    // Slices for total degrees hi, hi-1, ..., lo-1 (cochain order).
    let totals: Vec<i64> = (window.lo - 1..=window.hi).rev().collect();
    let slices: Vec<Slice> = totals
        .iter()
        .map(|&total| {
            let bound = s_bound(min_letter, total - min_outer);
            let top = bound.map_or(s_cap, |b| b.min(s_cap));
            let capped = bound.is_none_or(|b| b > s_cap);
            let mut cells = Vec::new();
            for s in 0..=top {
                for (x, dx) in mdeg.iter().enumerate() {
                    for (y, dy) in ndeg.iter().enumerate() {
                        for w in words(&letters, &cdeg, s, total + s as i64 - dx - dy) {
                            cells.push((s, x, w, y));
                        }
                    }
                }
            }
            Slice::new(cells, capped)
        })
        .collect();

    let dc = &c.differential;
    let (dm, dn) = (&m.differential, &n.differential);
    let is_letter: Vec<bool> = cdeg.iter().map(|&d| d > 0).collect();
    let mut diffs = Vec::new();
    for pair in slices.windows(2) {
        let d = assemble(f, &pair[0], &pair[1], s_cap, |(s, x, word, y), emit| {
            let s = *s;
            let sign = |k: i64| parity_sign(f, k);
            // Reduced Δ_M ⊗ 1.
            for x2 in 0..m.comodule.dim() {
                for &k in &letters {
                    let v = m.comodule.coeff(*x, x2, k);
                    if !f.is_zero(v) {
                        let mut w = vec![k];
                        w.extend_from_slice(word);
                        emit((s + 1, x2, w, *y), v.clone());
                    }
                }
            }
            // Reduced Δ_C in each slot, sign (−1)^i for slot i = p + 1.
            for p in 0..s {
                for &u in &letters {
                    for &v in &letters {
                        let x3 = coal.comul_coeff(word[p], u, v);
                        if !f.is_zero(x3) {
                            let mut w = word[..p].to_vec();
                            w.extend([u, v]);
                            w.extend_from_slice(&word[p + 1..]);
                            emit((s + 1, *x, w, *y), f.mul(&sign(p as i64 + 1), x3));
                        }
                    }
                }
            }
            // Reduced 1 ⊗ Δ_N with sign (−1)^{s+1}.
            for &k in &letters {
                for y2 in 0..n.comodule.dim() {
                    let v = n.comodule.coeff(*y, k, y2);
                    if !f.is_zero(v) {
                        let mut w = word.clone();
                        w.push(k);
                        emit((s + 1, *x, w, y2), f.mul(&sign(s as i64 + 1), v));
                    }
                }
            }
            // (−1)^s times the internal differential, Leibniz with Koszul signs.
            let outer = sign(s as i64);
            for x2 in 0..m.comodule.dim() {
                let v = dm.get(x2, *x);
                if !f.is_zero(v) {
                    emit((s, x2, word.clone(), *y), f.mul(&outer, v));
                }
            }
            let mut passed = mdeg[*x];
            for p in 0..s {
                for r in 0..coal.dim() {
                    let v = dc.get(r, word[p]);
                    if !f.is_zero(v) && is_letter[r] {
                        let mut w = word.clone();
                        w[p] = r;
                        emit((s, *x, w, *y), f.mul(&f.mul(&outer, &sign(passed)), v));
                    }
                }
                passed += cdeg[word[p]];
            }
            for y2 in 0..n.comodule.dim() {
                let v = dn.get(y2, *y);
                if !f.is_zero(v) {
                    emit((s, *x, word.clone(), y2), f.mul(&f.mul(&outer, &sign(passed)), v));
                }
            }
        })?;
        diffs.push(d);
    }
    let hi = window.hi;
    report_dims(f, window, &slices, diffs, |i| totals[i], |i| totals[i] == hi)
}

/// `H^m_{DG}(A, B)` for total (cohomological) degrees `m` in the window,
/// from the normalized Hochschild cochains totalized with
/// `d_tot = δ + (−1)^s D`, `D f = d_B f − (−1)^{|f|} f d`. Total degree is
/// bar degree plus internal degree. The bottom degree of the window is
/// flagged truncated; under `m = −n` it matches the top of a cotor window.
pub fn dg_hochschild_dims<F: Field>(
    a: &DGAlgebra<F>,
    b: &DGBimodule<F>,
    window: GradedWindow,
    s_cap: usize,
) -> Result<TotalDims> {
    a.ensure_valid()?;
    b.ensure_valid(a)?;
    let f = a.field();
    let alg = &a.algebra;
    let adeg = alg.degrees();
    let bdeg = b.bimodule.degrees();
    window.check(&bdeg)?;
    let letters = positive_basis(&adeg);
    let min_letter = letters.iter().map(|&l| adeg[l]).min();
    let max_b = bdeg.iter().max().copied().unwrap_or(0);

    let totals: Vec<i64> = (window.lo..=window.hi + 1).collect();
    let slices: Vec<Slice> = totals
        .iter()
        .map(|&total| {
            // m = s + deg b − Σ deg J, so Σ (deg J − 1) = deg b − m ≤ max_b − m.
            let bound = s_bound(min_letter, max_b - total);
            let top = bound.map_or(s_cap, |bd| bd.min(s_cap));
            let capped = bound.is_none_or(|bd| bd > s_cap);
            let mut cells = Vec::new();
            for s in 0..=top {
                for (y, dy) in bdeg.iter().enumerate() {
                    for w in words(&letters, &adeg, s, dy + s as i64 - total) {
                        cells.push((s, 0, w, y));
                    }
                }
            }
            Slice::new(cells, capped)
        })
        .collect();

    let da = &a.differential;
    let db = &b.differential;
    let bm = &b.bimodule;
    let is_letter: Vec<bool> = adeg.iter().map(|&d| d > 0).collect();
    let mut diffs = Vec::new();
    for (i, pair) in slices.windows(2).enumerate() {
        let total = totals[i];
        let d = assemble(f, &pair[0], &pair[1], s_cap, |(s, _, word, y), emit| {
            let s = *s;
            let sign = |k: i64| parity_sign(f, k);
            let wdeg: i64 = word.iter().map(|&l| adeg[l]).sum();
            let fdeg = bdeg[*y] - wdeg;
            debug_assert_eq!(fdeg + s as i64, total);
            // (−1)^{|a_1||f|} a_1 f(a_2, ...)
            for &i in &letters {
                let act = &bm.left_action()[i];
                for y2 in 0..bm.dim() {
                    let v = act.get(y2, *y);
                    if !f.is_zero(v) {
                        let mut w = vec![i];
                        w.extend_from_slice(word);
                        emit((s + 1, 0, w, y2), f.mul(&sign(adeg[i] * fdeg), v));
                    }
                }
            }
            // Σ (−1)^i f(..., a_i a_{i+1}, ...), projected to positive degrees.
            for p in 0..s {
                for &u in &letters {
                    for &v in &letters {
                        let c = alg.mul_coeff(u, v, word[p]);
                        if !f.is_zero(c) {
                            let mut w = word[..p].to_vec();
                            w.extend([u, v]);
                            w.extend_from_slice(&word[p + 1..]);
                            emit((s + 1, 0, w, *y), f.mul(&sign(p as i64 + 1), c));
                        }
                    }
                }
            }
            // (−1)^{s+1} f(a_1, ..., a_s) a_{s+1}
            for &i in &letters {
                let act = &bm.right_action()[i];
                for y2 in 0..bm.dim() {
                    let v = act.get(y2, *y);
                    if !f.is_zero(v) {
                        let mut w = word.clone();
                        w.push(i);
                        emit((s + 1, 0, w, y2), f.mul(&sign(s as i64 + 1), v));
                    }
                }
            }
            // (−1)^s (d_B f − (−1)^{|f|} f d)
            let outer = sign(s as i64);
            for y2 in 0..bm.dim() {
                let v = db.get(y2, *y);
                if !f.is_zero(v) {
                    emit((s, 0, word.clone(), y2), f.mul(&outer, v));
                }
            }
            let pre = f.neg(&f.mul(&outer, &sign(fdeg)));
            let mut passed = 0;
            for p in 0..s {
                // (f d)(.., e_r, ..) picks up d(e_r)'s coefficient on e_{J_p}.
                for r in 0..alg.dim() {
                    let v = da.get(word[p], r);
                    if !f.is_zero(v) && is_letter[r] {
                        let mut w = word.clone();
                        w[p] = r;
                        emit((s, 0, w, *y), f.mul(&f.mul(&pre, &sign(passed)), v));
                    }
                }
                passed += adeg[word[p]];
            }
        })?;
        diffs.push(d);
    }
    let lo = window.lo;
    report_dims(f, window, &slices, diffs, |i| totals[i], |i| totals[i] == lo)
}

/// Per-degree agreement of `Cotor_n` and `H^{−n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DGComparison {
    pub cotor: TotalDims,
    pub hochschild: TotalDims,
    pub pass: bool,
}

/// Computes both sides of the DG comparison: Cotor from the comodules, and
/// Hochschild cohomology of `M ⊗ N` over the dual DG algebra after the
/// dictionary. `window` is in cotor (homological) degrees.
pub fn compare_dg<F: Field>(
    c: &DGCoalgebra<F>,
    m: &DGRightComodule<F>,
    n: &DGLeftComodule<F>,
    window: GradedWindow,
    s_cap: usize,
) -> Result<DGComparison> {
    let cotor = dg_cotor_dims(c, m, n, window, s_cap)?;
    let a = c.dual_algebra()?;
    let mut mm = m.to_module(c)?;
    let mut nn = n.to_module(c)?;
    // Both translated modules must live over the same algebra object.
    mm.module.algebra = a.algebra.clone();
    let nmod = &mut nn.module;
    *nmod = RightModule::new(a.algebra.clone(), nmod.dim(), nmod.action().to_vec())?.with_grading(nmod.degrees());
    let b = dg_tensor_bimodule(&mm, &nn)?;
    let hochschild = dg_hochschild_dims(&a, &b, window.negated(), s_cap)?;
    let pass = cotor.degrees.iter().all(|d| hochschild.get(-d.degree).is_some_and(|h| h.dim == d.dim));
    Ok(DGComparison { cotor, hochschild, pass })
}
