//! A library of algebras and modules that are valid by construction.
//!
//! Random structure constants are almost never associative, so property
//! tests sample from these families instead: group algebras of small groups,
//! truncated polynomial algebras, products of matrix algebras and path
//! algebras of small quivers.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::{LeftModule, RightModule};

fn unit_vector<F: Field>(f: &F, dim: usize, i: usize) -> Vec<F::Elem> {
    (0..dim).map(|k| if k == i { f.one() } else { f.zero() }).collect()
}

/// The ground field as a one-dimensional algebra.
pub fn ground<F: Field>(f: &F) -> Algebra<F> {
    Algebra::new(f, 1, vec![f.one()], vec![f.one()])
        .expect("sizes agree")
        .with_labels(["1"])
        .with_augmentation(vec![f.one()])
}

/// `k[x]/x^n` on the basis `1, x, ..., x^{n-1}`, augmented by `x ↦ 0`.
pub fn truncated_polynomial<F: Field>(f: &F, n: usize) -> Algebra<F> {
    assert!(n >= 1);
    Algebra::from_fn(f, n, unit_vector(f, n, 0), |i, j| {
        if i + j < n {
            unit_vector(f, n, i + j)
        } else {
            vec![f.zero(); n]
        }
    })
    .expect("sizes agree")
    .with_labels((0..n).map(|i| match i {
        0 => "1".to_string(),
        1 => "x".to_string(),
        _ => format!("x^{i}"),
    }))
    .with_augmentation(unit_vector(f, n, 0))
}

/// The exterior algebra `Λ(x)` with `x` in degree `deg`.
pub fn exterior<F: Field>(f: &F, deg: i64) -> Algebra<F> {
    truncated_polynomial(f, 2).with_grading(vec![0, deg])
}

/// `k[Z/m]` on the group-element basis `g^0, ..., g^{m-1}`; the augmentation
/// sends every group element to 1.
pub fn cyclic_group_algebra<F: Field>(f: &F, m: usize) -> Algebra<F> {
    assert!(m >= 1);
    Algebra::from_fn(f, m, unit_vector(f, m, 0), |i, j| unit_vector(f, m, (i + j) % m))
        .expect("sizes agree")
        .with_labels((0..m).map(|i| format!("g^{i}")))
        .with_augmentation(vec![f.one(); m])
}

/// `k[Z/2 × Z/2]`, basis `1, a, b, ab` (index bits: a = 1, b = 2).
pub fn klein_group_algebra<F: Field>(f: &F) -> Algebra<F> {
    Algebra::from_fn(f, 4, unit_vector(f, 4, 0), |i, j| unit_vector(f, 4, i ^ j))
        .expect("sizes agree")
        .with_labels(["1", "a", "b", "ab"])
        .with_augmentation(vec![f.one(); 4])
}

/// `M_n(k)` on matrix units, `E_ab` at index `a * n + b`.
pub fn matrix_algebra<F: Field>(f: &F, n: usize) -> Algebra<F> {
    let d = n * n;
    let unit = (0..d).map(|i| if i / n == i % n { f.one() } else { f.zero() }).collect();
    Algebra::from_fn(f, d, unit, |i, j| {
        let (a, b, c, e) = (i / n, i % n, j / n, j % n);
        if b == c {
            unit_vector(f, d, a * n + e)
        } else {
            vec![f.zero(); d]
        }
    })
    .expect("sizes agree")
    .with_labels((0..d).map(|i| format!("E{}{}", i / n + 1, i % n + 1)))
}

/// Direct product `A × B`; basis of `A` first. Augmented through the first
/// factor when that factor is augmented.
pub fn product<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Algebra<F> {
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let d = n + m;
    let unit = a.unit().iter().chain(b.unit()).cloned().collect();
    let mut out = Algebra::from_fn(f, d, unit, |i, j| {
        let mut v = vec![f.zero(); d];
        if i < n && j < n {
            for k in 0..n {
                v[k] = a.mul_coeff(i, j, k).clone();
            }
        } else if i >= n && j >= n {
            for k in 0..m {
                v[n + k] = b.mul_coeff(i - n, j - n, k).clone();
            }
        }
        v
    })
    .expect("sizes agree");
    if let Some(eps) = &a.augmentation {
        out = out.with_augmentation(eps.iter().cloned().chain((0..m).map(|_| f.zero())).collect());
    }
    if let (Some(la), Some(lb)) = (&a.labels, &b.labels) {
        out = out.with_labels(
            la.iter().map(|l| format!("({l},0)")).chain(lb.iter().map(|l| format!("(0,{l})"))),
        );
    }
    out
}

/// `k^n`, the product of `n` copies of the ground field.
pub fn diagonal<F: Field>(f: &F, n: usize) -> Algebra<F> {
    Algebra::from_fn(f, n, vec![f.one(); n], |i, j| {
        if i == j {
            unit_vector(f, n, i)
        } else {
            vec![f.zero(); n]
        }
    })
    .expect("sizes agree")
    .with_labels((0..n).map(|i| format!("e{}", i + 1)))
    .with_augmentation(unit_vector(f, n, 0))
}

/// Path algebra of the quiver `1 -a-> 2`, basis `e1, e2, a` with
/// `e1 a = a = a e2` (paths compose left to right). Isomorphic to the upper
/// triangular 2×2 matrices.
pub fn a2_path_algebra<F: Field>(f: &F) -> Algebra<F> {
    let z = || vec![f.zero(); 3];
    let unit = vec![f.one(), f.one(), f.zero()];
    Algebra::from_fn(f, 3, unit, |i, j| match (i, j) {
        (0, 0) => unit_vector(f, 3, 0),
        (1, 1) => unit_vector(f, 3, 1),
        (0, 2) | (2, 1) => unit_vector(f, 3, 2),
        _ => z(),
    })
    .expect("sizes agree")
    .with_labels(["e1", "e2", "a"])
    .with_augmentation(unit_vector(f, 3, 0))
}

/// Tensor product `A ⊗ B` of algebras, with degrees added.
pub fn tensor_algebra<F: Field>(a: &Algebra<F>, b: &Algebra<F>) -> Algebra<F> {
    let f = a.field();
    let (n, m) = (a.dim(), b.dim());
    let unit = (0..n * m).map(|x| f.mul(&a.unit()[x / m], &b.unit()[x % m])).collect();
    let mut out = Algebra::from_fn(f, n * m, unit, |x, y| {
        let (i, j, k, l) = (x / m, x % m, y / m, y % m);
        (0..n * m)
            .map(|z| f.mul(a.mul_coeff(i, k, z / m), b.mul_coeff(j, l, z % m)))
            .collect()
    })
    .expect("sizes agree");
    if a.grading.is_some() || b.grading.is_some() {
        out = out.with_grading((0..n * m).map(|x| a.degree(x / m) + b.degree(x % m)).collect());
    }
    if let (Some(ea), Some(eb)) = (&a.augmentation, &b.augmentation) {
        out = out.with_augmentation((0..n * m).map(|x| f.mul(&ea[x / m], &eb[x % m])).collect());
    }
    if let (Some(la), Some(lb)) = (&a.labels, &b.labels) {
        out = out.with_labels((0..n * m).map(|x| format!("{}⊗{}", la[x / m], lb[x % m])));
    }
    out
}

/// Column vectors `k^n` as a left `M_n(k)`-module.
pub fn column_module<F: Field>(a: Arc<Algebra<F>>, n: usize) -> Result<LeftModule<F>> {
    let f = a.field().clone();
    let action = (0..n * n)
        .map(|i| Matrix::from_fn(&f, n, n, |r, c| if r == i / n && c == i % n { f.one() } else { f.zero() }))
        .collect();
    LeftModule::new(a, n, action)
}

/// Row vectors `k^n` as a right `M_n(k)`-module.
pub fn row_module<F: Field>(a: Arc<Algebra<F>>, n: usize) -> Result<RightModule<F>> {
    let f = a.field().clone();
    // Row basis ε_r; ε_r E_ab = δ_ra ε_b.
    let action = (0..n * n)
        .map(|i| Matrix::from_fn(&f, n, n, |r, c| if c == i / n && r == i % n { f.one() } else { f.zero() }))
        .collect();
    RightModule::new(a, n, action)
}

/// One-dimensional left module through a character `χ: A -> k`.
pub fn character_module<F: Field>(a: Arc<Algebra<F>>, chi: &[F::Elem]) -> Result<LeftModule<F>> {
    let f = a.field().clone();
    let action = chi.iter().map(|c| Matrix::from_data(&f, 1, 1, vec![c.clone()])).collect::<Result<_>>()?;
    LeftModule::new(a, 1, action)
}

pub fn right_character_module<F: Field>(a: Arc<Algebra<F>>, chi: &[F::Elem]) -> Result<RightModule<F>> {
    Ok(character_module(a, chi)?.dual())
}

fn powers<F: Field>(g: &Matrix<F>, count: usize) -> Vec<Matrix<F>> {
    let mut out = vec![Matrix::identity(g.field(), g.rows())];
    for _ in 1..count {
        let next = out.last().expect("nonempty").mul(g).expect("square");
        out.push(next);
    }
    out
}

/// Nilpotent Jordan block of size `n`, sending `b_j` to `b_{j+1}`.
pub fn shift<F: Field>(f: &F, n: usize) -> Matrix<F> {
    Matrix::from_fn(f, n, n, |r, c| if r == c + 1 { f.one() } else { f.zero() })
}

/// Cyclic permutation of `n` coordinates.
pub fn rotation<F: Field>(f: &F, n: usize) -> Matrix<F> {
    Matrix::from_fn(f, n, n, |r, c| if r == (c + 1) % n { f.one() } else { f.zero() })
}

/// A module over `k[x]/x^n` or `k[Z/n]` (basis of powers of one generator)
/// on which the generator acts by `g`. Both algebras are commutative, so the
/// same matrices also define a right module.
pub fn monogenic_module<F: Field>(a: Arc<Algebra<F>>, g: &Matrix<F>) -> Result<LeftModule<F>> {
    let action = powers(g, a.dim());
    LeftModule::new(a, g.rows(), action)
}

/// A module over `k[Z/2 × Z/2]` with the generators acting by `ga`, `gb`.
pub fn klein_module<F: Field>(a: Arc<Algebra<F>>, ga: &Matrix<F>, gb: &Matrix<F>) -> Result<LeftModule<F>> {
    let id = Matrix::identity(a.field(), ga.rows());
    let action = (0..4)
        .map(|i| {
            let x = if i & 1 == 1 { ga.clone() } else { id.clone() };
            if i & 2 == 2 { x.mul(gb) } else { Ok(x) }
        })
        .collect::<Result<_>>()?;
    LeftModule::new(a, ga.rows(), action)
}

fn as_right<F: Field>(m: LeftModule<F>) -> RightModule<F> {
    RightModule::new(m.algebra.clone(), m.dim(), m.action().to_vec()).expect("sizes agree")
}

fn both<F: Field>(name: &str, m: LeftModule<F>) -> (Vec<(String, LeftModule<F>)>, Vec<(String, RightModule<F>)>) {
    (vec![(name.to_string(), m.clone())], vec![(name.to_string(), as_right(m))])
}

/// One algebra with a handful of left and right modules over it.
#[derive(Clone, Debug)]
pub struct Family<F: Field> {
    pub name: String,
    pub algebra: Arc<Algebra<F>>,
    pub left: Vec<(String, LeftModule<F>)>,
    pub right: Vec<(String, RightModule<F>)>,
}

/// A left module, right module pair over a common algebra.
#[derive(Clone, Debug)]
pub struct Instance<F: Field> {
    pub name: String,
    pub left: LeftModule<F>,
    pub right: RightModule<F>,
}

fn characters<F: Field>(a: &Algebra<F>) -> Vec<Vec<F::Elem>> {
    a.augmentation.iter().cloned().collect()
}

/// Families of dimension at most 4 with modules of dimension at most 3.
pub fn families<F: Field>(f: &F) -> Vec<Family<F>> {
    type Extras<F> = (Vec<(String, LeftModule<F>)>, Vec<(String, RightModule<F>)>);
    let mut out = Vec::new();
    let mut push = |name: &str, algebra: Algebra<F>, extras: &dyn Fn(&Arc<Algebra<F>>) -> Extras<F>| {
        let a = Arc::new(algebra);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for chi in characters(&a) {
            left.push(("trivial".to_string(), character_module(a.clone(), &chi).expect("character")));
            right.push(("trivial".to_string(), right_character_module(a.clone(), &chi).expect("character")));
        }
        if a.dim() <= 3 {
            left.push(("regular".to_string(), LeftModule::regular(a.clone())));
            right.push(("regular".to_string(), RightModule::regular(a.clone())));
        }
        let (l, r) = extras(&a);
        left.extend(l);
        right.extend(r);
        out.push(Family { name: name.to_string(), algebra: a, left, right });
    };
    let none = |_: &Arc<Algebra<F>>| (Vec::new(), Vec::new());
    let jordan = |a: &Arc<Algebra<F>>, n: usize| monogenic_module(a.clone(), &shift(f, n)).expect("nilpotent");

    push("k", ground(f), &none);
    push("k[Z/2]", cyclic_group_algebra(f, 2), &none);
    push("k[Z/3]", cyclic_group_algebra(f, 3), &none);
    push("k[Z/4]", cyclic_group_algebra(f, 4), &|a| {
        // Permutation modules on Z/4 / Z/2 and on Z/4 / Z/2 ⊔ pt.
        let two = monogenic_module(a.clone(), &rotation(f, 2)).expect("g^4 = 1");
        let three = two.direct_sum(&LeftModule::trivial(a.clone()).expect("augmented")).expect("same algebra");
        let (mut l, mut r) = both("k[Z/2]", two);
        let (l3, r3) = both("k[Z/2] + k", three);
        l.extend(l3);
        r.extend(r3);
        (l, r)
    });
    push("k[Z/2xZ/2]", klein_group_algebra(f), &|a| {
        let swap = rotation(f, 2);
        let id = Matrix::identity(f, 2);
        let (mut l, mut r) = both("k[<a>]", klein_module(a.clone(), &swap, &id).expect("commuting involutions"));
        let (l2, r2) = both("k[<a>] via b", klein_module(a.clone(), &id, &swap).expect("commuting involutions"));
        l.extend(l2);
        r.extend(r2);
        (l, r)
    });
    push("k[x]/x^2", truncated_polynomial(f, 2), &none);
    push("k[x]/x^3", truncated_polynomial(f, 3), &none);
    push("k[x]/x^4", truncated_polynomial(f, 4), &|a| {
        let (mut l, mut r) = both("k[x]/x^2", jordan(a, 2));
        let (l3, r3) = both("k[x]/x^3", jordan(a, 3));
        l.extend(l3);
        r.extend(r3);
        (l, r)
    });
    push("M2(k)", matrix_algebra(f, 2), &|a| {
        (
            vec![("column".to_string(), column_module(a.clone(), 2).expect("column"))],
            vec![("row".to_string(), row_module(a.clone(), 2).expect("row"))],
        )
    });
    push("k x k", diagonal(f, 2), &|a| {
        (
            vec![("second".to_string(), character_module(a.clone(), &[f.zero(), f.one()]).expect("char"))],
            vec![("second".to_string(), right_character_module(a.clone(), &[f.zero(), f.one()]).expect("char"))],
        )
    });
    push("k x k x k", diagonal(f, 3), &none);
    push("A2 path algebra", a2_path_algebra(f), &|a| {
        let chi = [f.zero(), f.one(), f.zero()];
        (
            vec![("simple 2".to_string(), character_module(a.clone(), &chi).expect("char"))],
            vec![("simple 2".to_string(), right_character_module(a.clone(), &chi).expect("char"))],
        )
    });
    push("k x k[x]/x^2", product(&ground(f), &truncated_polynomial(f, 2)), &none);
    push("k^4", diagonal(f, 4), &none);
    out
}

/// Every (left, right) pair from [`families`].
pub fn instances<F: Field>(f: &F) -> Vec<Instance<F>> {
    families(f)
        .into_iter()
        .flat_map(|fam| {
            let name = fam.name.clone();
            fam.left
                .iter()
                .flat_map(|(ln, l)| {
                    let name = name.clone();
                    fam.right.iter().map(move |(rn, r)| Instance {
                        name: format!("{name}: {ln} ⊗ {rn}"),
                        left: l.clone(),
                        right: r.clone(),
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn constructors_are_valid() {
        for p in [2, 3, 5] {
            let f = PrimeField::new(p).unwrap();
            for fam in families(&f) {
                assert!(fam.algebra.validate().is_valid(), "{} over F_{p}: {}", fam.name, fam.algebra.validate());
                for (n, m) in &fam.left {
                    assert!(m.validate().is_valid(), "{} / {n}: {}", fam.name, m.validate());
                    assert!(m.dim() <= 3);
                }
                for (n, m) in &fam.right {
                    assert!(m.validate().is_valid(), "{} / {n}: {}", fam.name, m.validate());
                }
            }
        }
        for fam in families(&Rationals) {
            assert!(fam.algebra.validate().is_valid());
            assert!(fam.algebra.dim() <= 4);
        }
    }

    #[test]
    fn tensor_of_exteriors_is_valid() {
        let f = PrimeField::new(2).unwrap();
        let a = tensor_algebra(&exterior(&f, 1), &exterior(&f, 2));
        assert_eq!(a.dim(), 4);
        assert_eq!(a.grading, Some(vec![0, 2, 1, 3]));
        assert!(a.validate().is_valid(), "{}", a.validate());
    }

    #[test]
    fn enough_instances() {
        assert!(instances(&Rationals).len() >= 25);
    }
}
