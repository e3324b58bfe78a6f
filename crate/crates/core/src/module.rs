//! Modules, bimodules and comodules, and the dictionary translating between
//! left `A`-modules and right `DA`-comodules.
//!
//! Gradings follow two conventions. Module gradings are cohomological: the
//! action of `e_i` raises degree by `deg(e_i)`. Comodule gradings are
//! homological: the coaction preserves total degree, so `b_m ↦ b_m' ⊗ c_k`
//! requires `deg(m) = deg(m') + deg(c_k)`. The dictionary negates degrees.

use std::sync::Arc;

use crate::algebra::{Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::validate::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    dim: usize,
    /// `action[i]` is the matrix of `m ↦ e_i m`.
    action: Vec<Matrix<F>>,
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    dim: usize,
    /// `action[i]` is the matrix of `n ↦ n e_i`.
    action: Vec<Matrix<F>>,
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<F: Field> {
    pub algebra: Arc<Algebra<F>>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
    pub grading: Option<Vec<i64>>,
}

/// `Δ(b_m) = Σ coaction[m][m'][k] b_m' ⊗ c_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule<F: Field> {
    pub coalgebra: Arc<Coalgebra<F>>,
    dim: usize,
    coaction: Vec<F::Elem>,
    pub grading: Option<Vec<i64>>,
}

/// `Δ(b_n) = Σ coaction[n][k][n'] c_k ⊗ b_n'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule<F: Field> {
    pub coalgebra: Arc<Coalgebra<F>>,
    dim: usize,
    coaction: Vec<F::Elem>,
    pub grading: Option<Vec<i64>>,
}

fn check_actions<F: Field>(algebra: &Algebra<F>, dim: usize, action: &[Matrix<F>]) -> Result<()> {
    if action.len() != algebra.dim() {
        return Err(Error::Dimension(format!(
            "{} action matrices for an algebra of dimension {}",
            action.len(),
            algebra.dim()
        )));
    }
    if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Dimension(format!("action matrices must be {dim}x{dim}")));
    }
    Ok(())
}

fn grading_or_zero(grading: &Option<Vec<i64>>, dim: usize) -> Vec<i64> {
    grading.clone().unwrap_or_else(|| vec![0; dim])
}

fn negate(grading: &Option<Vec<i64>>) -> Option<Vec<i64>> {
    grading.as_ref().map(|g| g.iter().map(|d| -d).collect())
}

/// Checks the action laws. `right` selects the right-action composition order.
fn validate_action<F: Field>(
    algebra: &Algebra<F>,
    action: &[Matrix<F>],
    dim: usize,
    grading: &Option<Vec<i64>>,
    right: bool,
    report: &mut Report,
    prefix: &str,
) {
    let n = algebra.dim();
    for i in 0..n {
        for j in 0..n {
            let coeffs: Vec<F::Elem> = (0..n).map(|k| algebra.mul_coeff(i, j, k).clone()).collect();
            let of_product = algebra.combine(&coeffs, action, dim);
            let composed = if right {
                action[j].mul(&action[i])
            } else {
                action[i].mul(&action[j])
            }
            .expect("square actions");
            if of_product != composed {
                report.push(&format!("{prefix}action"), &[i, j], "action of e_i e_j != composite of actions");
            }
        }
    }
    let unit = algebra.combine(algebra.unit(), action, dim);
    if unit != Matrix::identity(algebra.field(), dim) {
        report.push(&format!("{prefix}unit"), &[], "unit does not act as the identity");
    }
    if let Some(g) = grading {
        if g.len() != dim {
            report.push("grading", &[], format!("{} degrees for dimension {dim}", g.len()));
            return;
        }
        let f = algebra.field();
        for (i, a) in action.iter().enumerate() {
            for r in 0..dim {
                for c in 0..dim {
                    if !f.is_zero(a.get(r, c)) && g[r] != g[c] + algebra.degree(i) {
                        report.push("grading", &[i, r, c], "action does not raise degree by deg(e_i)");
                    }
                }
            }
        }
    }
}

impl<F: Field> LeftModule<F> {
    pub fn new(algebra: Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        check_actions(&algebra, dim, &action)?;
        Ok(LeftModule { algebra, dim, action, grading: None })
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_multiplication(i)).collect();
        let grading = algebra.grading.clone();
        LeftModule { dim: algebra.dim(), algebra, action, grading }
    }

    /// The one-dimensional module on which `A` acts through its augmentation.
    pub fn trivial(algebra: Arc<Algebra<F>>) -> Result<Self> {
        let eps = algebra
            .augmentation
            .clone()
            .ok_or_else(|| Error::Input("algebra has no designated augmentation".into()))?;
        let f = algebra.field().clone();
        let action = eps.into_iter().map(|e| Matrix::from_data(&f, 1, 1, vec![e])).collect::<Result<_>>()?;
        let grading = algebra.grading.as_ref().map(|_| vec![0]);
        Ok(LeftModule { algebra, dim: 1, action, grading })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn degrees(&self) -> Vec<i64> {
        grading_or_zero(&self.grading, self.dim)
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        validate_action(&self.algebra, &self.action, self.dim, &self.grading, false, &mut report, "");
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "left module".into(), report })
        }
    }

    /// Right `DA`-comodule with `Δ(m)(a) = a m`, i.e.
    /// `coaction[m][m'][i] = action[i][m'][m]`.
    pub fn to_comodule(&self) -> Result<RightComodule<F>> {
        self.ensure_valid()?;
        let coalgebra = Arc::new(self.algebra.dual_coalgebra()?);
        let (d, n) = (self.dim, self.algebra.dim());
        let mut coaction = Vec::with_capacity(d * d * n);
        for m in 0..d {
            for m2 in 0..d {
                for i in 0..n {
                    coaction.push(self.action[i].get(m2, m).clone());
                }
            }
        }
        Ok(RightComodule { coalgebra, dim: d, coaction, grading: negate(&self.grading) })
    }

    /// The dual space as a right module, `(f a)(m) = f(a m)`: right action
    /// matrices are transposes in the dual basis.
    pub fn dual(&self) -> RightModule<F> {
        RightModule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
            grading: negate(&self.grading),
        }
    }

    /// Matrices `X: self -> other` commuting with every action, as a basis.
    pub fn hom_basis(&self, other: &LeftModule<F>) -> Result<Vec<Matrix<F>>> {
        if self.algebra != other.algebra {
            return Err(Error::Mismatch("algebras".into()));
        }
        Ok(intertwiners(self.field(), &self.action, &other.action, self.dim, other.dim))
    }

    /// The module whose action matrices are `T a_i T^{-1}`. `t` must be invertible.
    pub fn conjugate(&self, t: &Matrix<F>) -> Result<Self> {
        let t_inv = invert(t)?;
        let action = self
            .action
            .iter()
            .map(|a| t.mul(a)?.mul(&t_inv))
            .collect::<Result<_>>()?;
        Ok(LeftModule { action, ..self.clone() })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::Mismatch("algebras".into()));
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| block_diag(a, b)).collect();
        let grading = match (&self.grading, &other.grading) {
            (None, None) => None,
            _ => Some([self.degrees(), other.degrees()].concat()),
        };
        Ok(LeftModule { algebra: self.algebra.clone(), dim: self.dim + other.dim, action, grading })
    }
}

impl<F: Field> RightModule<F> {
    pub fn new(algebra: Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Result<Self> {
        check_actions(&algebra, dim, &action)?;
        Ok(RightModule { algebra, dim, action, grading: None })
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.right_multiplication(i)).collect();
        let grading = algebra.grading.clone();
        RightModule { dim: algebra.dim(), algebra, action, grading }
    }

    pub fn trivial(algebra: Arc<Algebra<F>>) -> Result<Self> {
        let left = LeftModule::trivial(algebra)?;
        Ok(RightModule { algebra: left.algebra, dim: 1, action: left.action, grading: left.grading })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn degrees(&self) -> Vec<i64> {
        grading_or_zero(&self.grading, self.dim)
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        validate_action(&self.algebra, &self.action, self.dim, &self.grading, true, &mut report, "");
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "right module".into(), report })
        }
    }

    /// Left `DA`-comodule with `Δ(n) = Σ_i e^i ⊗ n e_i`.
    pub fn to_comodule(&self) -> Result<LeftComodule<F>> {
        self.ensure_valid()?;
        let coalgebra = Arc::new(self.algebra.dual_coalgebra()?);
        let (d, n) = (self.dim, self.algebra.dim());
        let mut coaction = Vec::with_capacity(d * n * d);
        for b in 0..d {
            for i in 0..n {
                for b2 in 0..d {
                    coaction.push(self.action[i].get(b2, b).clone());
                }
            }
        }
        Ok(LeftComodule { coalgebra, dim: d, coaction, grading: negate(&self.grading) })
    }

    pub fn dual(&self) -> LeftModule<F> {
        LeftModule {
            algebra: self.algebra.clone(),
            dim: self.dim,
            action: self.action.iter().map(Matrix::transpose).collect(),
            grading: negate(&self.grading),
        }
    }

    pub fn hom_basis(&self, other: &RightModule<F>) -> Result<Vec<Matrix<F>>> {
        if self.algebra != other.algebra {
            return Err(Error::Mismatch("algebras".into()));
        }
        Ok(intertwiners(self.field(), &self.action, &other.action, self.dim, other.dim))
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(self.dual().direct_sum(&other.dual())?.dual())
    }
}

impl<F: Field> Bimodule<F> {
    pub fn new(algebra: Arc<Algebra<F>>, dim: usize, left: Vec<Matrix<F>>, right: Vec<Matrix<F>>) -> Result<Self> {
        check_actions(&algebra, dim, &left)?;
        check_actions(&algebra, dim, &right)?;
        Ok(Bimodule { algebra, dim, left, right, grading: None })
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    /// `A` as a bimodule over itself.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let left = (0..algebra.dim()).map(|i| algebra.left_multiplication(i)).collect();
        let right = (0..algebra.dim()).map(|i| algebra.right_multiplication(i)).collect();
        let grading = algebra.grading.clone();
        Bimodule { dim: algebra.dim(), algebra, left, right, grading }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left_action(&self) -> &[Matrix<F>] {
        &self.left
    }
    pub fn right_action(&self) -> &[Matrix<F>] {
        &self.right
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn degrees(&self) -> Vec<i64> {
        grading_or_zero(&self.grading, self.dim)
    }

    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        validate_action(&self.algebra, &self.left, self.dim, &self.grading, false, &mut report, "left ");
        validate_action(&self.algebra, &self.right, self.dim, &self.grading, true, &mut report, "right ");
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l.mul(r).expect("square") != r.mul(l).expect("square") {
                    report.push("commutation", &[i, j], "left and right actions do not commute");
                }
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "bimodule".into(), report })
        }
    }
}

/// `M ⊗ N` with `A` acting on the left factor from the left and on the
/// right factor from the right; basis `b_m ⊗ b_n` at index `m * dim N + n`.
pub fn tensor_bimodule<F: Field>(m: &LeftModule<F>, n: &RightModule<F>) -> Result<Bimodule<F>> {
    if m.algebra != n.algebra {
        return Err(Error::Mismatch("algebras".into()));
    }
    let f = m.field();
    let id_m = Matrix::identity(f, m.dim);
    let id_n = Matrix::identity(f, n.dim);
    let left = m.action.iter().map(|a| a.kron(&id_n)).collect();
    let right = n.action.iter().map(|a| id_m.kron(a)).collect();
    let grading = match (&m.grading, &n.grading) {
        (None, None) => None,
        _ => {
            let (gm, gn) = (m.degrees(), n.degrees());
            Some(gm.iter().flat_map(|a| gn.iter().map(move |b| a + b)).collect())
        }
    };
    Ok(Bimodule { algebra: m.algebra.clone(), dim: m.dim * n.dim, left, right, grading })
}

fn checked_grading(grading: &Option<Vec<i64>>, dim: usize, report: &mut Report) -> Option<Vec<i64>> {
    let g = grading.as_ref()?;
    if g.len() != dim {
        report.push("grading", &[], format!("{} degrees for dimension {dim}", g.len()));
        return None;
    }
    Some(g.clone())
}

impl<F: Field> RightComodule<F> {
    /// `coaction` flattened with index `(m * dim + m') * dim C + k`.
    pub fn new(coalgebra: Arc<Coalgebra<F>>, dim: usize, coaction: Vec<F::Elem>) -> Result<Self> {
        let want = dim * dim * coalgebra.dim();
        if coaction.len() != want {
            return Err(Error::Dimension(format!("coaction has {} entries, expected {want}", coaction.len())));
        }
        Ok(RightComodule { coalgebra, dim, coaction, grading: None })
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(coalgebra: Arc<Coalgebra<F>>) -> Self {
        let n = coalgebra.dim();
        let mut coaction = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    coaction.push(coalgebra.comul_coeff(k, i, j).clone());
                }
            }
        }
        let grading = coalgebra.grading.clone();
        RightComodule { dim: n, coalgebra, coaction, grading }
    }

    /// The one-dimensional comodule `k` with `Δ(1) = 1 ⊗ g` for the
    /// designated grouplike `g`.
    pub fn trivial(coalgebra: Arc<Coalgebra<F>>) -> Result<Self> {
        let g = coalgebra
            .grouplike
            .clone()
            .ok_or_else(|| Error::Input("coalgebra has no designated grouplike element".into()))?;
        let grading = coalgebra.grading.as_ref().map(|_| vec![0]);
        Ok(RightComodule { coalgebra, dim: 1, coaction: g, grading })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> &F {
        self.coalgebra.field()
    }
    pub fn coaction_tensor(&self) -> &[F::Elem] {
        &self.coaction
    }
    pub fn coeff(&self, m: usize, m2: usize, k: usize) -> &F::Elem {
        &self.coaction[(m * self.dim + m2) * self.coalgebra.dim() + k]
    }
    pub fn degrees(&self) -> Vec<i64> {
        grading_or_zero(&self.grading, self.dim)
    }

    /// `Δ_M` as a `(dim · dim C) × dim` matrix into `M ⊗ C`.
    pub fn coaction_matrix(&self) -> Matrix<F> {
        let c = self.coalgebra.dim();
        Matrix::from_fn(self.field(), self.dim * c, self.dim, |row, m| self.coeff(m, row / c, row % c).clone())
    }

    pub fn validate(&self) -> Report {
        let f = self.field();
        let c = &self.coalgebra;
        let (d, n) = (self.dim, c.dim());
        let mut report = Report::new();
        for m in 0..d {
            // (Δ_M ⊗ 1)Δ_M and (1 ⊗ Δ_C)Δ_M in M ⊗ C ⊗ C.
            let mut lhs = vec![f.zero(); d * n * n];
            let mut rhs = vec![f.zero(); d * n * n];
            for m2 in 0..d {
                for k in 0..n {
                    let a = self.coeff(m, m2, k);
                    if f.is_zero(a) {
                        continue;
                    }
                    for m3 in 0..d {
                        for l in 0..n {
                            let b = self.coeff(m2, m3, l);
                            if !f.is_zero(b) {
                                let idx = (m3 * n + l) * n + k;
                                lhs[idx] = f.add(&lhs[idx], &f.mul(a, b));
                            }
                        }
                    }
                    for i in 0..n {
                        for j in 0..n {
                            let b = c.comul_coeff(k, i, j);
                            if !f.is_zero(b) {
                                let idx = (m2 * n + i) * n + j;
                                rhs[idx] = f.add(&rhs[idx], &f.mul(a, b));
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                report.push("coassociativity", &[m], "(Δ_M⊗1)Δ_M != (1⊗Δ)Δ_M");
            }
            for m2 in 0..d {
                let v = (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(self.coeff(m, m2, k), &c.counit()[k])));
                let want = if m == m2 { f.one() } else { f.zero() };
                if v != want {
                    report.push("counit", &[m, m2], "(1⊗ε)Δ_M != id");
                }
            }
        }
        if let Some(g) = checked_grading(&self.grading, d, &mut report) {
            for m in 0..d {
                for m2 in 0..d {
                    for k in 0..n {
                        if !f.is_zero(self.coeff(m, m2, k)) && g[m] != g[m2] + c.degree(k) {
                            report.push("grading", &[m, m2, k], "coaction does not preserve degree");
                        }
                    }
                }
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "right comodule".into(), report })
        }
    }

    /// Left module over `DC` through `A ⊗ M -> A ⊗ M ⊗ C -> M`, evaluating
    /// the algebra factor on the coalgebra factor.
    pub fn to_module(&self) -> Result<LeftModule<F>> {
        self.ensure_valid()?;
        let algebra = Arc::new(self.coalgebra.dual_algebra()?);
        let d = self.dim;
        let action = (0..algebra.dim())
            .map(|i| Matrix::from_fn(self.field(), d, d, |m2, m| self.coeff(m, m2, i).clone()))
            .collect();
        Ok(LeftModule { algebra, dim: d, action, grading: negate(&self.grading) })
    }

    /// The contragredient `DM` with `(Δf)(m) = (f ⊗ 1)(Δm)`, a left comodule
    /// on the dual basis: `Δ(f_m) = Σ coaction[m0][m][k] c_k ⊗ f_m0`.
    pub fn contragredient(&self) -> LeftComodule<F> {
        let (d, n) = (self.dim, self.coalgebra.dim());
        let mut coaction = Vec::with_capacity(d * n * d);
        for m in 0..d {
            for k in 0..n {
                for m0 in 0..d {
                    coaction.push(self.coeff(m0, m, k).clone());
                }
            }
        }
        LeftComodule { coalgebra: self.coalgebra.clone(), dim: d, coaction, grading: negate(&self.grading) }
    }

    /// Comodule maps `X: self -> other`, i.e. `(X ⊗ 1) Δ = Δ X`.
    pub fn hom_basis(&self, other: &RightComodule<F>) -> Result<Vec<Matrix<F>>> {
        if self.coalgebra != other.coalgebra {
            return Err(Error::Mismatch("coalgebras".into()));
        }
        Ok(comodule_maps(self.field(), &self.coaction_matrix(), &other.coaction_matrix(), self.dim, other.dim, self.coalgebra.dim()))
    }
}

impl<F: Field> LeftComodule<F> {
    /// `coaction` flattened with index `(n * dim C + k) * dim + n'`.
    pub fn new(coalgebra: Arc<Coalgebra<F>>, dim: usize, coaction: Vec<F::Elem>) -> Result<Self> {
        let want = dim * dim * coalgebra.dim();
        if coaction.len() != want {
            return Err(Error::Dimension(format!("coaction has {} entries, expected {want}", coaction.len())));
        }
        Ok(LeftComodule { coalgebra, dim, coaction, grading: None })
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn regular(coalgebra: Arc<Coalgebra<F>>) -> Self {
        let n = coalgebra.dim();
        let mut coaction = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    coaction.push(coalgebra.comul_coeff(k, i, j).clone());
                }
            }
        }
        let grading = coalgebra.grading.clone();
        LeftComodule { dim: n, coalgebra, coaction, grading }
    }

    pub fn trivial(coalgebra: Arc<Coalgebra<F>>) -> Result<Self> {
        let r = RightComodule::trivial(coalgebra)?;
        Ok(LeftComodule { coalgebra: r.coalgebra, dim: 1, coaction: r.coaction, grading: r.grading })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn field(&self) -> &F {
        self.coalgebra.field()
    }
    pub fn coaction_tensor(&self) -> &[F::Elem] {
        &self.coaction
    }
    pub fn coeff(&self, n: usize, k: usize, n2: usize) -> &F::Elem {
        &self.coaction[(n * self.coalgebra.dim() + k) * self.dim + n2]
    }
    pub fn degrees(&self) -> Vec<i64> {
        grading_or_zero(&self.grading, self.dim)
    }

    /// `Δ_N` as a `(dim C · dim) × dim` matrix into `C ⊗ N`.
    pub fn coaction_matrix(&self) -> Matrix<F> {
        let d = self.dim;
        Matrix::from_fn(self.field(), self.coalgebra.dim() * d, d, |row, n| self.coeff(n, row / d, row % d).clone())
    }

    pub fn validate(&self) -> Report {
        let f = self.field();
        let c = &self.coalgebra;
        let (d, n) = (self.dim, c.dim());
        let mut report = Report::new();
        for b in 0..d {
            // (1 ⊗ Δ_N)Δ_N and (Δ_C ⊗ 1)Δ_N in C ⊗ C ⊗ N.
            let mut lhs = vec![f.zero(); n * n * d];
            let mut rhs = vec![f.zero(); n * n * d];
            for k in 0..n {
                for b2 in 0..d {
                    let a = self.coeff(b, k, b2);
                    if f.is_zero(a) {
                        continue;
                    }
                    for l in 0..n {
                        for b3 in 0..d {
                            let x = self.coeff(b2, l, b3);
                            if !f.is_zero(x) {
                                let idx = (k * n + l) * d + b3;
                                lhs[idx] = f.add(&lhs[idx], &f.mul(a, x));
                            }
                        }
                    }
                    for i in 0..n {
                        for j in 0..n {
                            let x = c.comul_coeff(k, i, j);
                            if !f.is_zero(x) {
                                let idx = (i * n + j) * d + b2;
                                rhs[idx] = f.add(&rhs[idx], &f.mul(a, x));
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                report.push("coassociativity", &[b], "(1⊗Δ_N)Δ_N != (Δ⊗1)Δ_N");
            }
            for b2 in 0..d {
                let v = (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(self.coeff(b, k, b2), &c.counit()[k])));
                let want = if b == b2 { f.one() } else { f.zero() };
                if v != want {
                    report.push("counit", &[b, b2], "(ε⊗1)Δ_N != id");
                }
            }
        }
        if let Some(g) = checked_grading(&self.grading, d, &mut report) {
            for b in 0..d {
                for k in 0..n {
                    for b2 in 0..d {
                        if !f.is_zero(self.coeff(b, k, b2)) && g[b] != g[b2] + c.degree(k) {
                            report.push("grading", &[b, k, b2], "coaction does not preserve degree");
                        }
                    }
                }
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "left comodule".into(), report })
        }
    }

    /// Right module over `DC`: `n · e_i = Σ coaction[n][i][n'] b_n'`.
    pub fn to_module(&self) -> Result<RightModule<F>> {
        self.ensure_valid()?;
        let algebra = Arc::new(self.coalgebra.dual_algebra()?);
        let d = self.dim;
        let action = (0..algebra.dim())
            .map(|i| Matrix::from_fn(self.field(), d, d, |b2, b| self.coeff(b, i, b2).clone()))
            .collect();
        Ok(RightModule { algebra, dim: d, action, grading: negate(&self.grading) })
    }

    /// The contragredient right comodule on the dual basis.
    pub fn contragredient(&self) -> RightComodule<F> {
        let (d, n) = (self.dim, self.coalgebra.dim());
        let mut coaction = Vec::with_capacity(d * d * n);
        for m in 0..d {
            for m2 in 0..d {
                for k in 0..n {
                    coaction.push(self.coeff(m2, k, m).clone());
                }
            }
        }
        RightComodule { coalgebra: self.coalgebra.clone(), dim: d, coaction, grading: negate(&self.grading) }
    }
}

fn block_diag<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let f = a.field();
    let (ra, ca) = (a.rows(), a.cols());
    Matrix::from_fn(f, ra + b.rows(), ca + b.cols(), |i, j| match (i < ra, j < ca) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - ra, j - ca).clone(),
        _ => f.zero(),
    })
}

pub(crate) fn invert<F: Field>(t: &Matrix<F>) -> Result<Matrix<F>> {
    if !t.is_square() || t.rank() != t.rows() {
        return Err(Error::Input("matrix is not invertible".into()));
    }
    let f = t.field();
    let cols = Matrix::identity(f, t.rows())
        .columns()
        .iter()
        .map(|e| t.solve(e).map(|x| x.expect("invertible")))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f, t.rows(), &cols))
}

/// Solve `X a_i = b_i X` for all `i` with `X` of size `dim_b × dim_a`.
/// The unknown `X[r][c]` sits at index `r * dim_a + c`.
fn intertwiners<F: Field>(
    f: &F,
    a: &[Matrix<F>],
    b: &[Matrix<F>],
    dim_a: usize,
    dim_b: usize,
) -> Vec<Matrix<F>> {
    let unknowns = dim_a * dim_b;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (ai, bi) in a.iter().zip(b) {
        // (X a)[r][c] - (b X)[r][c] = Σ_s X[r][s] a[s][c] - Σ_s b[r][s] X[s][c]
        for r in 0..dim_b {
            for c in 0..dim_a {
                let mut row = vec![f.zero(); unknowns];
                for s in 0..dim_a {
                    let idx = r * dim_a + s;
                    row[idx] = f.add(&row[idx], ai.get(s, c));
                }
                for s in 0..dim_b {
                    let idx = s * dim_a + c;
                    row[idx] = f.sub(&row[idx], bi.get(r, s));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(f, rows.len(), unknowns, |i, j| rows[i][j].clone());
    system
        .kernel_basis()
        .columns()
        .into_iter()
        .map(|v| Matrix::from_data(f, dim_b, dim_a, v).expect("sizes agree"))
        .collect()
}

/// Solve `(X ⊗ 1) ρ_a = ρ_b X` for comodule coaction matrices
/// `ρ_a: A -> A ⊗ C`, `ρ_b: B -> B ⊗ C`.
fn comodule_maps<F: Field>(
    f: &F,
    rho_a: &Matrix<F>,
    rho_b: &Matrix<F>,
    dim_a: usize,
    dim_b: usize,
    dim_c: usize,
) -> Vec<Matrix<F>> {
    let unknowns = dim_a * dim_b;
    let mut rows = Vec::new();
    for m in 0..dim_a {
        for p in 0..dim_b {
            for k in 0..dim_c {
                // Coefficient of b_p ⊗ c_k in both sides applied to a_m.
                let mut row = vec![f.zero(); unknowns];
                for s in 0..dim_a {
                    let idx = p * dim_a + s;
                    row[idx] = f.add(&row[idx], rho_a.get(s * dim_c + k, m));
                }
                for q in 0..dim_b {
                    let idx = q * dim_a + m;
                    row[idx] = f.sub(&row[idx], rho_b.get(p * dim_c + k, q));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_fn(f, rows.len(), unknowns, |i, j| rows[i][j].clone());
    system
        .kernel_basis()
        .columns()
        .into_iter()
        .map(|v| Matrix::from_data(f, dim_b, dim_a, v).expect("sizes agree"))
        .collect()
}
