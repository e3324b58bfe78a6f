//! Dense matrices over an exact field and Gaussian elimination.
//!
//! Matrices are immutable once built; every operation returns a fresh value.
//! Elimination uses first-nonzero pivoting, which is exact over both `F_p`
//! and `Q`. Pivot rows are applied only to their nonzero entries, so the
//! sparse coboundary matrices that dominate the workload stay cheap.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn from_fn(
        field: &F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Row-major data; `data.len()` must equal `rows * cols`.
    pub fn from_data(field: &F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries given for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &F, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::from_data(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience for tests and constructors: integer entries reduced into the field.
    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Self::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Columns given as vectors of equal length `rows`.
    pub fn from_columns(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !f.is_zero(b) {
                        let idx = i * other.cols + j;
                        out[idx] = f.add(&out[idx], &f.mul(a, b));
                    }
                }
            }
        }
        Self::from_data(f, self.rows, other.cols, out)
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&F::Elem, &F::Elem) -> F::Elem) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect();
        Self::from_data(&self.field, self.rows, self.cols, data)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Kronecker product, left factor major: row `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = vec![f.zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            data[(i * other.rows + k) * cols + j * other.cols + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        Matrix { field: f.clone(), rows, cols, data }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Side-by-side concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        Ok(Self::from_fn(&self.field, self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    fn to_row_vecs(&self) -> Vec<Vec<F::Elem>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    /// Rank by forward elimination.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminate along the shorter side.
        let mut rows = if self.rows <= self.cols {
            self.to_row_vecs()
        } else {
            self.transpose().to_row_vecs()
        };
        eliminate(&self.field, &mut rows, false).len()
    }

    pub fn echelon(&self) -> Echelon<F> {
        let mut rows = self.to_row_vecs();
        if self.cols == 0 {
            rows.iter_mut().for_each(Vec::clear);
        }
        let pivots = eliminate(&self.field, &mut rows, true);
        let data = rows.into_iter().flatten().collect();
        Echelon {
            rref: Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data },
            pivots,
        }
    }

    /// Columns form a basis of the null space, read off the reduced echelon
    /// form with one basis vector per free column.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let Echelon { rref, pivots } = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        assert_eq!(pivots.len() + free.len(), self.cols, "rank-nullity");
        let mut out = Self::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.data[fc * free.len() + k] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                let v = rref.get(r, fc);
                if !f.is_zero(v) {
                    out.data[pc * free.len() + k] = f.neg(v);
                }
            }
        }
        debug_assert!(self.mul(&out).is_ok_and(|z| z.is_zero()), "kernel basis is not in the kernel");
        crate::audit::kernel_checked();
        out
    }

    /// Some `x` with `self * x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let aug = self.hstack(&Self::from_columns(f, self.rows, &[b.to_vec()]))?;
        let Echelon { rref, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = rref.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// In-place elimination over row vectors. With `reduced`, produces the
/// reduced row echelon form (pivots normalized to one, rows reordered so
/// pivot rows come first); otherwise only enough work to count the rank.
/// Returns the pivot columns in order.
fn eliminate<F: Field>(f: &F, rows: &mut [Vec<F::Elem>], reduced: bool) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        if reduced {
            for x in rows[r][c..].iter_mut() {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (c..ncols).filter(|&j| !f.is_zero(&rows[r][j])).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        let targets = if reduced { 0..nrows } else { r + 1..nrows };
        for i in targets {
            if i == r || f.is_zero(&rows[i][c]) {
                continue;
            }
            let factor = if reduced {
                rows[i][c].clone()
            } else {
                f.mul(&rows[i][c], &inv)
            };
            let row = &mut rows[i];
            for &j in &support {
                row[j] = f.sub_mul(&row[j], &factor, &pivot_row[j]);
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }
    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(&f2(), 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(&f2(), 3).rank(), 3);
        assert_eq!(Matrix::from_i64(&Rationals, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let k = Matrix::zeros(&Rationals, 2, 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 3));
        assert_eq!(k.rank(), 3);

        assert_eq!(Matrix::identity(&f5(), 4).kernel_basis().cols(), 0);

        let k = Matrix::from_i64(&f2(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(&f2(), &[&[1], &[1]]));
    }

    #[test]
    fn solve_examples() {
        let q = Rationals;
        let b = vec![q.from_i64(3), q.from_i64(-2)];
        assert_eq!(Matrix::identity(&q, 2).solve(&b).unwrap(), Some(b.clone()));

        let m = Matrix::from_i64(&q, &[&[1], &[0]]);
        assert_eq!(m.solve(&[q.from_i64(0), q.from_i64(1)]).unwrap(), None);

        let m = Matrix::from_i64(&f5(), &[&[2]]);
        assert_eq!(m.solve(&[1]).unwrap(), Some(vec![3]));

        assert!(m.solve(&[1, 2]).is_err());
    }

    #[test]
    fn kron_is_left_major() {
        let f = f5();
        let a = Matrix::from_i64(&f, &[&[1, 2]]);
        let b = Matrix::from_i64(&f, &[&[1], &[3]]);
        assert_eq!(a.kron(&b), Matrix::from_i64(&f, &[&[1, 2], &[3, 6]]));
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0..max, 0..max).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), prop::collection::vec(-3i64..4, r * c))
        })
    }

    fn build<F: Field>(f: &F, (r, c, v): &(usize, usize, Vec<i64>)) -> Matrix<F> {
        Matrix::from_fn(f, *r, *c, |i, j| f.from_i64(v[i * c + j]))
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(m in arb_matrix(7)) {
            for p in [2u32, 3, 5] {
                let a = build(&PrimeField::new(p).unwrap(), &m);
                prop_assert_eq!(a.rank(), a.transpose().rank());
            }
            let a = build(&Rationals, &m);
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in arb_matrix(7)) {
            let a = build(&Rationals, &m);
            let k = a.kernel_basis();
            prop_assert_eq!(a.cols(), a.rank() + k.cols());
            prop_assert!(a.mul(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());

            let a = build(&f2(), &m);
            let k = a.kernel_basis();
            prop_assert_eq!(a.cols(), a.rank() + k.cols());
            prop_assert!(a.mul(&k).unwrap().is_zero());
        }

        #[test]
        fn solve_reproduces_rhs(m in arb_matrix(6), x in prop::collection::vec(-3i64..4, 6)) {
            let q = Rationals;
            let a = build(&q, &m);
            let x: Vec<_> = x.iter().take(a.cols()).map(|&v| q.from_i64(v)).collect();
            if x.len() == a.cols() {
                let b = a.mul_vec(&x).unwrap();
                let y = a.solve(&b).unwrap().expect("consistent by construction");
                prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
            }
        }
    }
}
