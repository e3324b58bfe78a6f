//! The φ maps, cotensor products, Hochschild cochains and cobar complexes.
//!
//! Both sides of `Cotor_{DA}(M, N) ≅ H(A, M ⊗ N)` are computed from scratch:
//! the Hochschild side from the unnormalized bar cochains `Hom(A^{⊗n}, B)`,
//! the Cotor side from the cobar complex `M ⊗ C^{⊗n} ⊗ N`. Each complex is
//! built one degree past `n_max` so that `H^{n_max}` is exact; reports still
//! flag the top degree since nothing beyond the stored range is consulted.

use serde::Serialize;

use crate::algebra::Coalgebra;
use crate::complex::CochainComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::{tensor_bimodule, Bimodule, LeftComodule, LeftModule, RightComodule, RightModule};

/// `φ_B: B -> B ⊗ DA`, `b ↦ Σ_i (e_i b - b e_i) ⊗ e^i`.
#[derive(Clone, Debug)]
pub struct PhiMap<F: Field> {
    /// Row `b' * dim A + i`, column `b`.
    pub matrix: Matrix<F>,
}

pub fn phi_map<F: Field>(b: &Bimodule<F>) -> PhiMap<F> {
    let f = b.field();
    let n = b.algebra.dim();
    let commutators: Vec<Matrix<F>> = b
        .left_action()
        .iter()
        .zip(b.right_action())
        .map(|(l, r)| l.sub(r).expect("square actions"))
        .collect();
    let matrix = Matrix::from_fn(f, b.dim() * n, b.dim(), |row, col| {
        commutators[row % n].get(row / n, col).clone()
    });
    PhiMap { matrix }
}

/// Basis (as columns) of `{x ∈ B : ax = xa}` = `Hom_{A^e}(A, B)`.
pub fn hom_ae<F: Field>(b: &Bimodule<F>) -> Matrix<F> {
    phi_map(b).matrix.kernel_basis()
}

fn same_coalgebra<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>) -> Result<()> {
    if m.coalgebra != n.coalgebra {
        return Err(Error::Mismatch("coalgebras".into()));
    }
    Ok(())
}

/// Basis (as columns) of `M □_C N ⊆ M ⊗ N`, the kernel of
/// `Δ_M ⊗ 1 - 1 ⊗ Δ_N: M ⊗ N -> M ⊗ C ⊗ N`.
pub fn cotensor<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>) -> Result<Matrix<F>> {
    same_coalgebra(m, n)?;
    Ok(cobar_differential(m, n, 0).kernel_basis())
}

fn power(base: usize, exp: usize) -> usize {
    base.checked_pow(exp as u32).expect("tensor power overflows usize")
}

/// Digits of `x` in base `base`, most significant first, `len` of them.
fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = x % base;
        x /= base;
    }
    out
}

fn lex(ds: &[usize], base: usize) -> usize {
    ds.iter().fold(0, |acc, &d| acc * base + d)
}

/// The Hochschild coboundary `Hom(A^{⊗n}, B) -> Hom(A^{⊗(n+1)}, B)`,
/// `(df)(a_1..a_{n+1}) = a_1 f(a_2..) + Σ_i (-1)^i f(.., a_i a_{i+1}, ..)
/// + (-1)^{n+1} f(..a_n) a_{n+1}`. The cochain `e_J ↦ e_b` has coordinate
/// `lex(J) * dim B + b`.
pub fn hochschild_differential<F: Field>(b: &Bimodule<F>, n: usize) -> Matrix<F> {
    let f = b.field();
    let a = &b.algebra;
    let (da, db) = (a.dim(), b.dim());
    let (src, dst) = (power(da, n), power(da, n + 1));
    let mut data = vec![f.zero(); dst * db * src * db];
    let cols = src * db;
    let mut add = |row: usize, col: usize, v: &F::Elem| {
        let x = &mut data[row * cols + col];
        *x = f.add(x, v);
    };
    let sign = |k: usize, v: &F::Elem| if k % 2 == 0 { v.clone() } else { f.neg(v) };
    for j in 0..src {
        let word = digits(j, da, n);
        for bb in 0..db {
            let col = j * db + bb;
            for i in 0..da {
                // a_1 f(a_2, ..): rows (i, J).
                let l = &b.left_action()[i];
                let r = &b.right_action()[i];
                for b2 in 0..db {
                    let v = l.get(b2, bb);
                    if !f.is_zero(v) {
                        add((i * src + j) * db + b2, col, v);
                    }
                    // (-1)^{n+1} f(..) a_{n+1}: rows (J, i).
                    let v = r.get(b2, bb);
                    if !f.is_zero(v) {
                        add((j * da + i) * db + b2, col, &sign(n + 1, v));
                    }
                }
            }
            for p in 0..n {
                // Slot p+1 of the output word pair (u, v) with u v ∋ e_{J_p}.
                let (head, tail) = (&word[..p], &word[p + 1..]);
                for u in 0..da {
                    for v in 0..da {
                        let c = a.mul_coeff(u, v, word[p]);
                        if f.is_zero(c) {
                            continue;
                        }
                        let mut w = head.to_vec();
                        w.extend([u, v]);
                        w.extend_from_slice(tail);
                        add(lex(&w, da) * db + bb, col, &sign(p + 1, c));
                    }
                }
            }
        }
    }
    Matrix::from_data(f, dst * db, cols, data).expect("sizes agree")
}

/// Cochains `Hom(A^{⊗n}, B)` for `0 ≤ n ≤ n_max + 1`.
#[derive(Clone, Debug)]
pub struct BarComplex<F: Field> {
    pub n_max: usize,
    pub complex: CochainComplex<F>,
}

pub fn bar_complex<F: Field>(b: &Bimodule<F>, n_max: usize) -> Result<BarComplex<F>> {
    b.algebra.ensure_valid()?;
    b.ensure_valid()?;
    let diffs = (0..=n_max).map(|n| hochschild_differential(b, n)).collect();
    let complex = CochainComplex::from_differentials(b.field(), 0, diffs)?;
    Ok(BarComplex { n_max, complex })
}

/// `dim H^n(A, B)` for `0 ≤ n ≤ n_max`.
pub fn hochschild_dims<F: Field>(b: &Bimodule<F>, n_max: usize) -> Result<Vec<usize>> {
    let bar = bar_complex(b, n_max)?;
    let mut dims = bar.complex.cohomology_dims();
    dims.truncate(n_max + 1);
    Ok(dims)
}

/// `d^n: M ⊗ C^{⊗n} ⊗ N -> M ⊗ C^{⊗(n+1)} ⊗ N`,
/// `Δ_M ⊗ 1 + Σ_{i=1}^n (-1)^i (Δ_C in slot i) + (-1)^{n+1} 1 ⊗ Δ_N`.
/// The basis element `m ⊗ c_K ⊗ n` has index `(m * dim C^n + lex K) * dim N + n`.
pub fn cobar_differential<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>, deg: usize) -> Matrix<F> {
    let f = m.field();
    let c: &Coalgebra<F> = &m.coalgebra;
    let (dm, dc, dn) = (m.dim(), c.dim(), n.dim());
    let (src, dst) = (power(dc, deg), power(dc, deg + 1));
    let cols = dm * src * dn;
    let mut data = vec![f.zero(); dm * dst * dn * cols];
    let mut add = |row: usize, col: usize, v: &F::Elem| {
        let x = &mut data[row * cols + col];
        *x = f.add(x, v);
    };
    let sign = |k: usize, v: &F::Elem| if k % 2 == 0 { v.clone() } else { f.neg(v) };
    for mm in 0..dm {
        for kk in 0..src {
            let word = digits(kk, dc, deg);
            for nn in 0..dn {
                let col = (mm * src + kk) * dn + nn;
                for m2 in 0..dm {
                    for k in 0..dc {
                        let v = m.coeff(mm, m2, k);
                        if !f.is_zero(v) {
                            add((m2 * dst + k * src + kk) * dn + nn, col, v);
                        }
                    }
                }
                for p in 0..deg {
                    let (head, tail) = (&word[..p], &word[p + 1..]);
                    for u in 0..dc {
                        for v in 0..dc {
                            let x = c.comul_coeff(word[p], u, v);
                            if f.is_zero(x) {
                                continue;
                            }
                            let mut w = head.to_vec();
                            w.extend([u, v]);
                            w.extend_from_slice(tail);
                            add((mm * dst + lex(&w, dc)) * dn + nn, col, &sign(p + 1, x));
                        }
                    }
                }
                for k in 0..dc {
                    for n2 in 0..dn {
                        let v = n.coeff(nn, k, n2);
                        if !f.is_zero(v) {
                            add((mm * dst + kk * dc + k) * dn + n2, col, &sign(deg + 1, v));
                        }
                    }
                }
            }
        }
    }
    Matrix::from_data(f, dm * dst * dn, cols, data).expect("sizes agree")
}

/// `M ⊗ C^{⊗n} ⊗ N` for `0 ≤ n ≤ n_max + 1`.
#[derive(Clone, Debug)]
pub struct CobarComplex<F: Field> {
    pub n_max: usize,
    pub complex: CochainComplex<F>,
}

pub fn cobar_complex<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>, n_max: usize) -> Result<CobarComplex<F>> {
    same_coalgebra(m, n)?;
    m.coalgebra.ensure_valid()?;
    m.ensure_valid()?;
    n.ensure_valid()?;
    let diffs = (0..=n_max).map(|d| cobar_differential(m, n, d)).collect();
    let complex = CochainComplex::from_differentials(m.field(), 0, diffs)?;
    Ok(CobarComplex { n_max, complex })
}

/// `dim Cotor^n_C(M, N)` for `0 ≤ n ≤ n_max`.
pub fn cotor_dims<F: Field>(m: &RightComodule<F>, n: &LeftComodule<F>, n_max: usize) -> Result<Vec<usize>> {
    let cobar = cobar_complex(m, n, n_max)?;
    let mut dims = cobar.complex.cohomology_dims();
    dims.truncate(n_max + 1);
    Ok(dims)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeVerdict {
    pub degree: i64,
    pub cotor: usize,
    pub hochschild: usize,
    pub agree: bool,
    pub upper_truncated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub cotor: Vec<usize>,
    pub hochschild: Vec<usize>,
    pub degrees: Vec<DegreeVerdict>,
    pub pass: bool,
}

impl Comparison {
    pub fn new(cotor: Vec<usize>, hochschild: Vec<usize>) -> Self {
        let degrees: Vec<DegreeVerdict> = cotor
            .iter()
            .zip(&hochschild)
            .enumerate()
            .map(|(n, (&c, &h))| DegreeVerdict {
                degree: n as i64,
                cotor: c,
                hochschild: h,
                agree: c == h,
                upper_truncated: n + 1 == cotor.len(),
            })
            .collect();
        let pass = cotor.len() == hochschild.len() && degrees.iter().all(|d| d.agree);
        Comparison { cotor, hochschild, degrees, pass }
    }
}

/// Computes `Cotor_{DA}(M, N)` through the comodule dictionary and
/// `H(A, M ⊗ N)` through the bar complex, degree by degree.
pub fn compare_cotor_hochschild<F: Field>(
    m: &LeftModule<F>,
    n: &RightModule<F>,
    n_max: usize,
) -> Result<Comparison> {
    if m.algebra != n.algebra {
        return Err(Error::Mismatch("algebras".into()));
    }
    let cotor = cotor_dims(&m.to_comodule()?, &n.to_comodule()?, n_max)?;
    let hochschild = hochschild_dims(&tensor_bimodule(m, n)?, n_max)?;
    Ok(Comparison::new(cotor, hochschild))
}

/// Reorders `M ⊗ C ⊗ N` coordinates into `(M ⊗ N) ⊗ C`, the codomain of φ.
pub fn twist_to_phi_order<F: Field>(d0: &Matrix<F>, dm: usize, dc: usize, dn: usize) -> Matrix<F> {
    let rows: Vec<usize> = (0..dm * dn * dc)
        .map(|r| {
            let (mn, k) = (r / dc, r % dc);
            let (mm, nn) = (mn / dn, mn % dn);
            (mm * dc + k) * dn + nn
        })
        .collect();
    d0.select_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors;
    use crate::field::{PrimeField, Rationals};
    use std::sync::Arc;

    #[test]
    fn digits_round_trip() {
        for x in 0..27 {
            assert_eq!(lex(&digits(x, 3, 3), 3), x);
        }
        assert_eq!(digits(5, 2, 3), vec![1, 0, 1]);
        assert!(digits(0, 4, 0).is_empty());
    }

    #[test]
    fn degree_zero_is_commutator() {
        let f = Rationals;
        let a = Arc::new(constructors::matrix_algebra(&f, 2));
        let b = Bimodule::regular(a.clone());
        let d0 = hochschild_differential(&b, 0);
        // d0(x)(e_i) = e_i x - x e_i: φ with rows in (i, b) rather than (b, i) order.
        let rows: Vec<usize> = (0..16).map(|r| (r % 4) * 4 + r / 4).collect();
        assert_eq!(d0.select_rows(&rows), phi_map(&b).matrix);
        assert_eq!(hom_ae(&b).cols(), 1);
    }

    #[test]
    fn bar_dims() {
        let f = PrimeField::new(2).unwrap();
        let a = Arc::new(constructors::truncated_polynomial(&f, 2));
        let bar = bar_complex(&Bimodule::regular(a), 3).unwrap();
        assert_eq!(&bar.complex.dims()[..4], &[2, 4, 8, 16]);
    }
}
