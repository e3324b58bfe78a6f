//! Finite-dimensional algebras and coalgebras given by structure constants,
//! and the duality between them.
//!
//! Tensor products of basis elements are always ordered lexicographically
//! with the left factor major: `e_i ⊗ e_j` has index `i * dim + j`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::validate::Report;

/// An associative unital algebra with basis `e_0, ..., e_{dim-1}` and
/// `e_i e_j = Σ_k mul[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    mul: Vec<F::Elem>,
    unit: Vec<F::Elem>,
    pub labels: Option<Vec<String>>,
    pub grading: Option<Vec<i64>>,
    /// A designated character `A -> k`, needed for ε-twisted bimodules.
    pub augmentation: Option<Vec<F::Elem>>,
}

/// A coassociative counital coalgebra with `Δ(c_k) = Σ comul[k][i][j] c_i ⊗ c_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<F: Field> {
    field: F,
    dim: usize,
    comul: Vec<F::Elem>,
    counit: Vec<F::Elem>,
    pub labels: Option<Vec<String>>,
    pub grading: Option<Vec<i64>>,
    /// A designated grouplike element, dual to an augmentation.
    pub grouplike: Option<Vec<F::Elem>>,
}

fn check_len(what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Dimension(format!("{what} has {got} entries, expected {want}")));
    }
    Ok(())
}

fn dual_labels(labels: &Option<Vec<String>>) -> Option<Vec<String>> {
    labels.as_ref().map(|ls| {
        ls.iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            })
            .collect()
    })
}

impl<F: Field> Algebra<F> {
    /// `mul` is the flattened tensor with index `(i * dim + j) * dim + k`.
    pub fn new(field: &F, dim: usize, mul: Vec<F::Elem>, unit: Vec<F::Elem>) -> Result<Self> {
        check_len("multiplication tensor", mul.len(), dim * dim * dim)?;
        check_len("unit vector", unit.len(), dim)?;
        Ok(Algebra {
            field: field.clone(),
            dim,
            mul,
            unit,
            labels: None,
            grading: None,
            augmentation: None,
        })
    }

    /// Builds the structure constants from a product rule on basis indices.
    pub fn from_fn(
        field: &F,
        dim: usize,
        unit: Vec<F::Elem>,
        product: impl Fn(usize, usize) -> Vec<F::Elem>,
    ) -> Result<Self> {
        let mut mul = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                check_len("product vector", v.len(), dim)?;
                mul.extend(v);
            }
        }
        Self::new(field, dim, mul, unit)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn with_augmentation(mut self, augmentation: Vec<F::Elem>) -> Self {
        self.augmentation = Some(augmentation);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }
    pub fn mul_tensor(&self) -> &[F::Elem] {
        &self.mul
    }

    pub fn mul_coeff(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.mul[(i * self.dim + j) * self.dim + k]
    }

    /// Degree of `e_i`; ungraded algebras sit in degree 0.
    pub fn degree(&self, i: usize) -> i64 {
        self.grading.as_ref().map_or(0, |g| g[i])
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.degree(i)).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim).map(|k| if k == i { f.one() } else { f.zero() }).collect()
    }

    pub fn product(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.mul_coeff(i, j, k);
                    if !f.is_zero(c) {
                        *o = f.add(o, &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ e_i x`.
    pub fn left_multiplication(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(&self.field, self.dim, self.dim, |k, j| self.mul_coeff(i, j, k).clone())
    }

    /// Matrix of `x ↦ x e_i`.
    pub fn right_multiplication(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(&self.field, self.dim, self.dim, |k, j| self.mul_coeff(j, i, k).clone())
    }

    /// Expand `Σ_k coeffs[k] * mats[k]`, used to evaluate an action on a
    /// product `e_i e_j` through the structure constants.
    pub(crate) fn combine(&self, coeffs: &[F::Elem], mats: &[Matrix<F>], n: usize) -> Matrix<F> {
        let f = &self.field;
        let mut acc = Matrix::zeros(f, n, n);
        for (c, m) in coeffs.iter().zip(mats) {
            if !f.is_zero(c) {
                acc = acc.add(&m.scale(c)).expect("square actions");
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| (0..self.dim).all(|k| self.mul_coeff(i, j, k) == self.mul_coeff(j, i, k)))
        })
    }

    /// The canonical element `Σ_i e_i ⊗ e^i` of `A ⊗ DA`, flattened with
    /// index `i * dim + j`. It is the image of `1` under the regular coaction.
    pub fn canonical_element(&self) -> Vec<F::Elem> {
        let f = &self.field;
        (0..self.dim * self.dim)
            .map(|idx| if idx / self.dim == idx % self.dim { f.one() } else { f.zero() })
            .collect()
    }

    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim;
        let mut report = Report::new();
        let basis: Vec<Vec<F::Elem>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let products: Vec<Vec<F::Elem>> = (0..n * n)
            .map(|ij| (0..n).map(|k| self.mul_coeff(ij / n, ij % n, k).clone()).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let lhs = self.product(&products[i * n + j], &basis[l]);
                    let rhs = self.product(&basis[i], &products[j * n + l]);
                    if lhs != rhs {
                        report.push("associativity", &[i, j, l], "(e_i e_j) e_l != e_i (e_j e_l)");
                    }
                }
            }
        }
        for i in 0..n {
            if self.product(&self.unit, &basis[i]) != basis[i] {
                report.push("left unit", &[i], "1 · e_i != e_i");
            }
            if self.product(&basis[i], &self.unit) != basis[i] {
                report.push("right unit", &[i], "e_i · 1 != e_i");
            }
        }
        if let Some(g) = &self.grading {
            if g.len() != n {
                report.push("grading", &[], format!("{} degrees for dimension {n}", g.len()));
                return report;
            }
            for (i, &d) in g.iter().enumerate() {
                if d < 0 {
                    report.push("grading", &[i], format!("negative degree {d}"));
                }
                if !f.is_zero(&self.unit[i]) && d != 0 {
                    report.push("grading", &[i], "unit has a component outside degree 0");
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !f.is_zero(self.mul_coeff(i, j, k)) && g[i] + g[j] != g[k] {
                            report.push("grading", &[i, j, k], "product does not respect degrees");
                        }
                    }
                }
            }
        }
        if let Some(eps) = &self.augmentation {
            if eps.len() != n {
                report.push("augmentation", &[], format!("{} entries for dimension {n}", eps.len()));
                return report;
            }
            let apply = |v: &[F::Elem]| {
                v.iter().zip(eps).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            };
            if !f.is_one(&apply(&self.unit)) {
                report.push("augmentation", &[], "augmentation does not send 1 to 1");
            }
            for i in 0..n {
                for j in 0..n {
                    if apply(&products[i * n + j]) != f.mul(&eps[i], &eps[j]) {
                        report.push("augmentation", &[i, j], "augmentation is not multiplicative");
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
            Err(Error::Invalid { what: "algebra".into(), report })
        }
    }

    /// The dual coalgebra `DA` on the dual basis: `comul[k][i][j] = mul[i][j][k]`.
    /// Degrees carry over unchanged, read as comodule-side (homological) degrees.
    pub fn dual_coalgebra(&self) -> Result<Coalgebra<F>> {
        self.ensure_valid()?;
        let n = self.dim;
        let mut comul = Vec::with_capacity(n * n * n);
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    comul.push(self.mul_coeff(i, j, k).clone());
                }
            }
        }
        Ok(Coalgebra {
            field: self.field.clone(),
            dim: n,
            comul,
            counit: self.unit.clone(),
            labels: dual_labels(&self.labels),
            grading: self.grading.clone(),
            grouplike: self.augmentation.clone(),
        })
    }

    pub fn opposite(&self) -> Self {
        let n = self.dim;
        let mut mul = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mul.push(self.mul_coeff(j, i, k).clone());
                }
            }
        }
        Algebra { mul, ..self.clone() }
    }

    /// `A ⊗ A^op` with basis `e_i ⊗ e_j` at index `i * dim + j`.
    pub fn enveloping(&self) -> Self {
        let f = &self.field;
        let n = self.dim;
        let n2 = n * n;
        let mut mul = vec![f.zero(); n2 * n2 * n2];
        for (x, y) in (0..n2).flat_map(|x| (0..n2).map(move |y| (x, y))) {
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            for p in 0..n {
                let a = self.mul_coeff(i, k, p);
                if f.is_zero(a) {
                    continue;
                }
                for q in 0..n {
                    // Opposite factor: e_j ·op e_l = e_l e_j.
                    let b = self.mul_coeff(l, j, q);
                    if !f.is_zero(b) {
                        mul[(x * n2 + y) * n2 + p * n + q] = f.mul(a, b);
                    }
                }
            }
        }
        let unit = (0..n2).map(|x| f.mul(&self.unit[x / n], &self.unit[x % n])).collect();
        let grading = self
            .grading
            .as_ref()
            .map(|g| (0..n2).map(|x| g[x / n] + g[x % n]).collect());
        let labels = self.labels.as_ref().map(|ls| {
            (0..n2).map(|x| format!("{}⊗{}", ls[x / n], ls[x % n])).collect()
        });
        let augmentation = self
            .augmentation
            .as_ref()
            .map(|e| (0..n2).map(|x| f.mul(&e[x / n], &e[x % n])).collect());
        Algebra { field: f.clone(), dim: n2, mul, unit, labels, grading, augmentation }
    }
}

impl<F: Field> Coalgebra<F> {
    /// `comul` is flattened with index `(k * dim + i) * dim + j`.
    pub fn new(field: &F, dim: usize, comul: Vec<F::Elem>, counit: Vec<F::Elem>) -> Result<Self> {
        check_len("comultiplication tensor", comul.len(), dim * dim * dim)?;
        check_len("counit", counit.len(), dim)?;
        Ok(Coalgebra {
            field: field.clone(),
            dim,
            comul,
            counit,
            labels: None,
            grading: None,
            grouplike: None,
        })
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    pub fn with_grading(mut self, grading: Vec<i64>) -> Self {
        self.grading = Some(grading);
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn counit(&self) -> &[F::Elem] {
        &self.counit
    }
    pub fn comul_tensor(&self) -> &[F::Elem] {
        &self.comul
    }

    pub fn comul_coeff(&self, k: usize, i: usize, j: usize) -> &F::Elem {
        &self.comul[(k * self.dim + i) * self.dim + j]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.grading.as_ref().map_or(0, |g| g[i])
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.dim).map(|i| self.degree(i)).collect()
    }

    /// `Δ` as a `dim² × dim` matrix into `C ⊗ C`.
    pub fn comul_matrix(&self) -> Matrix<F> {
        let n = self.dim;
        Matrix::from_fn(&self.field, n * n, n, |ij, k| self.comul_coeff(k, ij / n, ij % n).clone())
    }

    pub fn validate(&self) -> Report {
        let f = &self.field;
        let n = self.dim;
        let mut report = Report::new();
        for k in 0..n {
            // (Δ⊗1)Δ(c_k) and (1⊗Δ)Δ(c_k) as tensors in C⊗C⊗C.
            let mut lhs = vec![f.zero(); n * n * n];
            let mut rhs = vec![f.zero(); n * n * n];
            for x in 0..n {
                for y in 0..n {
                    let c = self.comul_coeff(k, x, y);
                    if f.is_zero(c) {
                        continue;
                    }
                    for a in 0..n {
                        for b in 0..n {
                            let d = self.comul_coeff(x, a, b);
                            if !f.is_zero(d) {
                                let idx = (a * n + b) * n + y;
                                lhs[idx] = f.add(&lhs[idx], &f.mul(c, d));
                            }
                            let e = self.comul_coeff(y, a, b);
                            if !f.is_zero(e) {
                                let idx = (x * n + a) * n + b;
                                rhs[idx] = f.add(&rhs[idx], &f.mul(c, e));
                            }
                        }
                    }
                }
            }
            if lhs != rhs {
                report.push("coassociativity", &[k], "(Δ⊗1)Δ != (1⊗Δ)Δ");
            }
            for j in 0..n {
                let want = if j == k { f.one() } else { f.zero() };
                let left = (0..n).fold(f.zero(), |acc, i| {
                    f.add(&acc, &f.mul(&self.counit[i], self.comul_coeff(k, i, j)))
                });
                let right = (0..n).fold(f.zero(), |acc, i| {
                    f.add(&acc, &f.mul(&self.counit[i], self.comul_coeff(k, j, i)))
                });
                if left != want {
                    report.push("left counit", &[k, j], "(ε⊗1)Δ != id");
                }
                if right != want {
                    report.push("right counit", &[k, j], "(1⊗ε)Δ != id");
                }
            }
        }
        if let Some(g) = &self.grading {
            if g.len() != n {
                report.push("grading", &[], format!("{} degrees for dimension {n}", g.len()));
                return report;
            }
            for (i, &d) in g.iter().enumerate() {
                if d < 0 {
                    report.push("grading", &[i], format!("negative degree {d}"));
                }
                if !f.is_zero(&self.counit[i]) && d != 0 {
                    report.push("grading", &[i], "counit is nonzero outside degree 0");
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if !f.is_zero(self.comul_coeff(k, i, j)) && g[i] + g[j] != g[k] {
                            report.push("grading", &[k, i, j], "comultiplication does not respect degrees");
                        }
                    }
                }
            }
        }
        if let Some(gl) = &self.grouplike {
            if gl.len() != n {
                report.push("grouplike", &[], format!("{} entries for dimension {n}", gl.len()));
                return report;
            }
            let eps = gl.iter().zip(&self.counit).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)));
            if !f.is_one(&eps) {
                report.push("grouplike", &[], "ε(g) != 1");
            }
            let delta = self.comul_matrix().mul_vec(gl).expect("sizes agree");
            let square: Vec<F::Elem> = (0..n * n).map(|ij| f.mul(&gl[ij / n], &gl[ij % n])).collect();
            if delta != square {
                report.push("grouplike", &[], "Δ(g) != g ⊗ g");
            }
        }
        report
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid { what: "coalgebra".into(), report })
        }
    }

    /// The dual algebra: `mul[i][j][k] = comul[k][i][j]`, unit from the counit.
    pub fn dual_algebra(&self) -> Result<Algebra<F>> {
        self.ensure_valid()?;
        let n = self.dim;
        let mut mul = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mul.push(self.comul_coeff(k, i, j).clone());
                }
            }
        }
        Ok(Algebra {
            field: self.field.clone(),
            dim: n,
            mul,
            unit: self.counit.clone(),
            labels: dual_labels(&self.labels),
            grading: self.grading.clone(),
            augmentation: self.grouplike.clone(),
        })
    }
}
