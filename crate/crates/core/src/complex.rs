//! Finite cochain complexes and their cohomology.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// `C^{n0} -> C^{n0+1} -> ... -> C^{n0+k}` with `differentials[i]` leaving
/// degree `n0 + i`. Differentials past either end are zero maps.
#[derive(Clone, Debug)]
pub struct CochainComplex<F: Field> {
    field: F,
    start: i64,
    dims: Vec<usize>,
    differentials: Vec<Matrix<F>>,
}

impl<F: Field> CochainComplex<F> {
    /// Builds the complex and checks that consecutive differentials compose
    /// to zero. `differentials.len()` must be `dims.len() - 1`.
    pub fn new(field: &F, start: i64, dims: Vec<usize>, differentials: Vec<Matrix<F>>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Dimension("a complex needs at least one space".into()));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            if d.cols() != dims[i] || d.rows() != dims[i + 1] {
                return Err(Error::Dimension(format!(
                    "differential leaving degree {} is {}x{}, expected {}x{}",
                    start + i as i64,
                    d.rows(),
                    d.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        for (i, pair) in differentials.windows(2).enumerate() {
            if !pair[1].mul(&pair[0])?.is_zero() {
                return Err(Error::NotAComplex { degree: start + i as i64 });
            }
        }
        crate::audit::complex_checked();
        Ok(CochainComplex { field: field.clone(), start, dims, differentials })
    }

    /// Build from differentials alone (at least one).
    pub fn from_differentials(field: &F, start: i64, differentials: Vec<Matrix<F>>) -> Result<Self> {
        let first = differentials
            .first()
            .ok_or_else(|| Error::Dimension("no differentials given".into()))?;
        let mut dims = vec![first.cols()];
        dims.extend(differentials.iter().map(Matrix::rows));
        Self::new(field, start, dims, differentials)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn start_degree(&self) -> i64 {
        self.start
    }

    pub fn end_degree(&self) -> i64 {
        self.start + self.dims.len() as i64 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.start..=self.end_degree()
    }

    fn index(&self, n: i64) -> Result<usize> {
        if n < self.start || n > self.end_degree() {
            return Err(Error::DegreeOutOfRange { degree: n, lo: self.start, hi: self.end_degree() });
        }
        Ok((n - self.start) as usize)
    }

    pub fn dim(&self, n: i64) -> Result<usize> {
        Ok(self.dims[self.index(n)?])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The differential leaving degree `n`, or a zero map at the top.
    pub fn differential(&self, n: i64) -> Result<Matrix<F>> {
        let i = self.index(n)?;
        Ok(match self.differentials.get(i) {
            Some(d) => d.clone(),
            None => Matrix::zeros(&self.field, 0, self.dims[i]),
        })
    }

    /// The differential arriving in degree `n`, or a zero map at the bottom.
    fn incoming(&self, n: i64) -> Result<Matrix<F>> {
        let i = self.index(n)?;
        Ok(if i == 0 {
            Matrix::zeros(&self.field, self.dims[0], 0)
        } else {
            self.differentials[i - 1].clone()
        })
    }

    pub fn differentials(&self) -> &[Matrix<F>] {
        &self.differentials
    }

    /// `dim ker d^n - rank d^{n-1}`.
    pub fn cohomology_dim(&self, n: i64) -> Result<usize> {
        let i = self.index(n)?;
        let out_rank = self.differentials.get(i).map_or(0, Matrix::rank);
        let in_rank = if i == 0 { 0 } else { self.differentials[i - 1].rank() };
        Ok(self.dims[i] - out_rank - in_rank)
    }

    /// Cohomology dimensions in every stored degree, each rank computed once.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(Matrix::rank).collect();
        (0..self.dims.len())
            .map(|i| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks[i - 1] };
                self.dims[i] - out - inc
            })
            .collect()
    }

    /// Columns are cocycles whose classes form a basis of `H^n`.
    pub fn cohomology_basis(&self, n: i64) -> Result<Matrix<F>> {
        Ok(self.cohomology(n)?.representatives)
    }

    pub fn cohomology(&self, n: i64) -> Result<Cohomology<F>> {
        let boundaries = self.incoming(n)?;
        let cocycles = self.differential(n)?.kernel_basis();
        let stacked = boundaries.hstack(&cocycles)?;
        let pivots = stacked.echelon().pivots;
        let picked: Vec<usize> = pivots
            .into_iter()
            .filter(|&p| p >= boundaries.cols())
            .map(|p| p - boundaries.cols())
            .collect();
        let representatives = cocycles.select_cols(&picked);
        Ok(Cohomology { degree: n, differential: self.differential(n)?, boundaries, representatives })
    }
}

/// A chosen basis of `H^n` together with what is needed to read off the
/// class of an arbitrary cocycle.
#[derive(Clone, Debug)]
pub struct Cohomology<F: Field> {
    pub degree: i64,
    differential: Matrix<F>,
    boundaries: Matrix<F>,
    /// Columns are representative cocycles.
    pub representatives: Matrix<F>,
}

impl<F: Field> Cohomology<F> {
    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    /// Coordinates of the class of `z` in the representative basis.
    pub fn coordinates(&self, z: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if !self.differential.mul_vec(z)?.iter().all(|x| self.differential.field().is_zero(x)) {
            return Err(Error::Input(format!("vector is not a cocycle in degree {}", self.degree)));
        }
        let system = self.boundaries.hstack(&self.representatives)?;
        let x = system
            .solve(z)?
            .ok_or_else(|| Error::Input("cocycle outside the span of boundaries and representatives".into()))?;
        Ok(x[self.boundaries.cols()..].to_vec())
    }

    /// Matrix of the map induced on cohomology by the cochain-level map
    /// `map` from this complex's degree into `target`'s.
    pub fn induced(&self, map: &Matrix<F>, target: &Cohomology<F>) -> Result<Matrix<F>> {
        let f = map.field();
        let images = map.mul(&self.representatives)?;
        let cols = images
            .columns()
            .iter()
            .map(|z| target.coordinates(z))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(f, target.dim(), &cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    #[test]
    fn single_space() {
        let q = Rationals;
        let c = CochainComplex::new(&q, 0, vec![1], vec![]).unwrap();
        assert_eq!(c.cohomology_dim(0).unwrap(), 1);
        assert_eq!(c.cohomology_basis(0).unwrap(), Matrix::from_i64(&q, &[&[1]]));
        assert!(c.cohomology_dim(1).is_err());
    }

    #[test]
    fn exact_pair() {
        let q = Rationals;
        let c = CochainComplex::from_differentials(&q, 0, vec![Matrix::identity(&q, 1)]).unwrap();
        assert_eq!(c.cohomology_dim(1).unwrap(), 0);
        assert_eq!(c.cohomology_dim(0).unwrap(), 0);
        assert_eq!(c.cohomology_basis(1).unwrap().cols(), 0);
    }

    #[test]
    fn zero_differentials() {
        let f = PrimeField::new(3).unwrap();
        let z = Matrix::zeros(&f, 2, 2);
        let c = CochainComplex::from_differentials(&f, 0, vec![z.clone(), z]).unwrap();
        assert_eq!(c.cohomology_dim(1).unwrap(), 2);
        let b = c.cohomology_basis(1).unwrap();
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn rejects_non_complex() {
        let q = Rationals;
        let d = Matrix::identity(&q, 1);
        let err = CochainComplex::from_differentials(&q, 3, vec![d.clone(), d]).unwrap_err();
        assert!(matches!(err, Error::NotAComplex { degree: 3 }));
    }

    #[test]
    fn coordinates_of_classes() {
        // k -(1,1)-> k^2 -(1,-1)-> k ; H^1 = 0? rank d0 = 1, rank d1 = 1, dim 2 -> 0.
        let q = Rationals;
        let d0 = Matrix::from_i64(&q, &[&[1], &[1]]);
        let d1 = Matrix::from_i64(&q, &[&[1, -1]]);
        let c = CochainComplex::from_differentials(&q, 0, vec![d0, d1]).unwrap();
        assert_eq!(c.cohomology_dims(), vec![0, 0, 0]);
        // Same spaces, zero second map: H^1 has dimension 1.
        let d0 = Matrix::from_i64(&q, &[&[1], &[1]]);
        let c = CochainComplex::from_differentials(&q, 0, vec![d0, Matrix::zeros(&q, 1, 2)]).unwrap();
        let h = c.cohomology(1).unwrap();
        assert_eq!(h.dim(), 1);
        // (1,1) is a boundary, so its class is zero.
        let coords = h.coordinates(&[q.from_i64(1), q.from_i64(1)]).unwrap();
        assert_eq!(coords, vec![q.zero()]);
    }

    fn random_invertible(f: &Rationals, n: usize, seed: &[i64]) -> Matrix<Rationals> {
        // Unit lower triangular times unit upper triangular.
        let l = Matrix::from_fn(f, n, n, |i, j| {
            if i == j { f.one() } else if i > j { f.from_i64(seed[(i * n + j) % seed.len()]) } else { f.zero() }
        });
        let u = Matrix::from_fn(f, n, n, |i, j| {
            if i == j { f.one() } else if i < j { f.from_i64(seed[(i * 7 + j * 3) % seed.len()]) } else { f.zero() }
        });
        l.mul(&u).unwrap()
    }

    proptest! {
        // Conjugating a complex by invertible changes of basis in each degree
        // leaves its cohomology unchanged.
        #[test]
        fn basis_change_invariance(
            a in prop::collection::vec(-2i64..3, 6),
            seed in prop::collection::vec(-2i64..3, 9),
        ) {
            let q = Rationals;
            // d0: k^2 -> k^3 arbitrary, d1 = a map killing im d0.
            let d0 = Matrix::from_fn(&q, 3, 2, |i, j| q.from_i64(a[i * 2 + j]));
            let coker = d0.transpose().kernel_basis().transpose();
            let c = CochainComplex::from_differentials(&q, 0, vec![d0.clone(), coker.clone()]).unwrap();
            let u0 = random_invertible(&q, 2, &seed);
            let u1 = random_invertible(&q, 3, &seed[1..]);
            let u2 = random_invertible(&q, coker.rows(), &seed[2..]);
            let inv = |m: &Matrix<Rationals>| {
                let n = m.rows();
                let cols: Vec<_> = Matrix::identity(&q, n).columns().iter().map(|e| m.solve(e).unwrap().unwrap()).collect();
                Matrix::from_columns(&q, n, &cols)
            };
            let e0 = u1.mul(&d0).unwrap().mul(&inv(&u0)).unwrap();
            let e1 = u2.mul(&coker).unwrap().mul(&inv(&u1)).unwrap();
            let c2 = CochainComplex::from_differentials(&q, 0, vec![e0, e1]).unwrap();
            prop_assert_eq!(c.cohomology_dims(), c2.cohomology_dims());
        }
    }
}
