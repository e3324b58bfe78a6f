use std::sync::Arc;
use std::time::Instant;

use cotorlab::constructors;
use cotorlab::dg::{compare_dg, dg_cotor_dims, dg_tensor_bimodule};
use cotorlab::graded::graded_cotor_dims;
use cotorlab::{
    Coalgebra, DGCoalgebra, DGLeftComodule, DGRightComodule, Field, GradedWindow, LeftComodule, Matrix, PrimeField,
    Rationals, RightComodule,
};

fn window(lo: i64, hi: i64) -> GradedWindow {
    GradedWindow::new(lo, hi).unwrap()
}

/// Connected coalgebra on `degrees` (index 0 in degree 0) with every basis
/// element primitive except for the listed reduced coproduct terms
/// `(k, i, j, coeff)`, meaning `Δ̄(c_k) ∋ coeff · c_i ⊗ c_j`.
fn coalgebra<F: Field>(f: &F, degrees: &[i64], reduced: &[(usize, usize, usize, i64)]) -> Arc<Coalgebra<F>> {
    let n = degrees.len();
    let mut comul = vec![f.zero(); n * n * n];
    for k in 0..n {
        comul[k * n * n + k] = f.one();
        comul[(k * n + k) * n] = f.one();
    }
    for &(k, i, j, c) in reduced {
        comul[(k * n + i) * n + j] = f.from_i64(c);
    }
    let counit = (0..n).map(|k| if k == 0 { f.one() } else { f.zero() }).collect();
    let mut c = Coalgebra::new(f, n, comul, counit).unwrap().with_grading(degrees.to_vec());
    c.grouplike = Some(counit_vec(f, n));
    Arc::new(c)
}

fn counit_vec<F: Field>(f: &F, n: usize) -> Vec<F::Elem> {
    (0..n).map(|k| if k == 0 { f.one() } else { f.zero() }).collect()
}

fn differential<F: Field>(f: &F, n: usize, entries: &[(usize, usize, i64)]) -> Matrix<F> {
    let mut d = Matrix::zeros(f, n, n);
    for &(r, c, v) in entries {
        d = d.add(&Matrix::from_fn(f, n, n, |i, j| if (i, j) == (r, c) { f.from_i64(v) } else { f.zero() })).unwrap();
    }
    d
}

fn trivial_pair<F: Field>(c: &DGCoalgebra<F>) -> (DGRightComodule<F>, DGLeftComodule<F>) {
    (DGRightComodule::trivial(c).unwrap(), DGLeftComodule::trivial(c).unwrap())
}

fn dims_in(report: &cotorlab::dg::TotalDims, degrees: std::ops::RangeInclusive<i64>) -> Vec<usize> {
    degrees.map(|n| report.get(n).unwrap().dim).collect()
}

#[test]
fn loop_space_of_two_sphere() {
    let start = Instant::now();
    let f = PrimeField::new(2).unwrap();
    let c = DGCoalgebra::formal(coalgebra(&f, &[0, 2], &[]));
    let (m, n) = trivial_pair(&c);
    let cmp = compare_dg(&c, &m, &n, window(0, 6), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=5), vec![1; 6]);
    assert!(cmp.cotor.degrees.iter().all(|d| d.truncated == (d.degree == 6)));
    for d in &cmp.cotor.degrees {
        assert_eq!(cmp.hochschild.get(-d.degree).unwrap().dim, d.dim);
    }
    assert!(cmp.pass);
    assert!(start.elapsed().as_secs() < 30);
}

#[test]
fn loop_space_of_three_sphere() {
    let f = Rationals;
    let c = DGCoalgebra::formal(coalgebra(&f, &[0, 3], &[]));
    let (m, n) = trivial_pair(&c);
    let cmp = compare_dg(&c, &m, &n, window(0, 8), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=7), vec![1, 0, 1, 0, 1, 0, 1, 0]);
    assert!(cmp.pass);
}

/// `1, a (2), b (3)` all primitive with `db = a`: the reduced part is
/// acyclic, so only the unit survives.
fn acyclic(f: &Rationals) -> DGCoalgebra<Rationals> {
    DGCoalgebra::new(coalgebra(f, &[0, 2, 3], &[]), differential(f, 3, &[(1, 2, 1)])).unwrap()
}

#[test]
fn acyclic_coalgebra() {
    let f = Rationals;
    let c = acyclic(&f);
    assert!(c.validate().is_valid(), "{}", c.validate());
    let (m, n) = trivial_pair(&c);
    let cmp = compare_dg(&c, &m, &n, window(0, 6), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=5), vec![1, 0, 0, 0, 0, 0]);
    // The top of the window lacks its outgoing differential.
    assert!(cmp.cotor.get(6).unwrap().truncated);
    assert!(cmp.pass);

    // Cotor(C, N) = H(N) for the regular comodule with its differential.
    let reg = DGRightComodule::new(RightComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    assert!(reg.validate(&c).is_valid(), "{}", reg.validate(&c));
    let cmp = compare_dg(&c, &reg, &n, window(0, 6), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=5), vec![1, 0, 0, 0, 0, 0]);
    assert!(cmp.pass);
    let lreg = DGLeftComodule::new(LeftComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    let cmp = compare_dg(&c, &reg, &lreg, window(0, 7), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=6), vec![1, 0, 0, 0, 0, 0, 0]);
    assert!(cmp.pass);
}

/// `1, a (2), b (3), e (5)` with `db = a` and `Δ̄e = a ⊗ b − b ⊗ a`. The sign
/// is forced by the co-Leibniz rule; homology is that of the five-sphere, so
/// Cotor is one-dimensional in degrees 0, 4, 8.
fn five_sphere_model(f: &Rationals, sign: i64) -> DGCoalgebra<Rationals> {
    DGCoalgebra::new(coalgebra(f, &[0, 2, 3, 5], &[(3, 1, 2, 1), (3, 2, 1, sign)]), differential(f, 4, &[(1, 2, 1)]))
        .unwrap()
}

#[test]
fn koszul_signs_matter() {
    let f = Rationals;
    let bad = five_sphere_model(&f, 1);
    assert!(bad.validate().names("co-Leibniz", &[3]), "{}", bad.validate());
    let c = five_sphere_model(&f, -1);
    assert!(c.validate().is_valid(), "{}", c.validate());
    let (m, n) = trivial_pair(&c);
    let cmp = compare_dg(&c, &m, &n, window(0, 9), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=8), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    assert!(cmp.pass, "{:?}", cmp);
    let reg = DGRightComodule::new(RightComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    let lreg = DGLeftComodule::new(LeftComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    // Cotor(C, C) = H(C).
    let cmp = compare_dg(&c, &reg, &lreg, window(0, 10), 16).unwrap();
    assert_eq!(dims_in(&cmp.cotor, 0..=9), vec![1, 0, 0, 0, 0, 1, 0, 0, 0, 0]);
    assert!(cmp.pass);
}

#[test]
fn dictionary_preserves_leibniz() {
    let f = Rationals;
    let c = five_sphere_model(&f, -1);
    let a = c.dual_algebra().unwrap();
    assert!(a.validate().is_valid(), "{}", a.validate());
    let reg = DGRightComodule::new(RightComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    let lreg = DGLeftComodule::new(LeftComodule::regular(c.coalgebra.clone()), c.differential.clone()).unwrap();
    let m = reg.to_module(&c).unwrap();
    let n = lreg.to_module(&c).unwrap();
    assert!(m.validate(&a).is_valid(), "{}", m.validate(&a));
    assert!(n.validate(&a).is_valid(), "{}", n.validate(&a));
    let b = dg_tensor_bimodule(&m, &n).unwrap();
    assert!(b.validate(&a).is_valid(), "{}", b.validate(&a));

    // Without the sign twist the translated differential breaks Leibniz.
    let mut plain = m.clone();
    plain.differential = reg.differential.clone();
    assert!(!plain.validate(&a).is_valid());
}

#[test]
fn zero_differential_reduces_to_graded() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        // S^2 x S^3: Δ̄(ab) = a ⊗ b + b ⊗ a.
        let coal = coalgebra(&f, &[0, 2, 3, 5], &[(3, 1, 2, 1), (3, 2, 1, 1)]);
        let c = DGCoalgebra::formal(coal.clone());
        assert!(c.validate().is_valid(), "{}", c.validate());
        let (m, n) = trivial_pair(&c);
        let cmp = compare_dg(&c, &m, &n, window(0, 6), 16).unwrap();
        assert_eq!(dims_in(&cmp.cotor, 0..=5), vec![1, 1, 2, 2, 3, 3]);
        assert!(cmp.pass);

        let regular = RightComodule::regular(coal.clone());
        let trivial = LeftComodule::trivial(coal.clone()).unwrap();
        for (rm, ln) in [(m.comodule.clone(), n.comodule.clone()), (regular, trivial)] {
            let dgm = DGRightComodule::formal(rm.clone());
            let dgn = DGLeftComodule::formal(ln.clone());
            let dg = dg_cotor_dims(&c, &dgm, &dgn, window(0, 6), 16).unwrap();
            let graded = graded_cotor_dims(&rm, &ln, 4, window(0, 12)).unwrap();
            // Total degree n only involves cobar degrees s <= n.
            for total in 0..=3 {
                let want: usize = (0..=4).map(|s| graded.get(s, total + s as i64)).sum();
                assert_eq!(dg.get(total).unwrap().dim, want, "degree {total}");
            }
        }
    }
}

#[test]
fn degree_one_elements_are_capped() {
    let f = PrimeField::new(2).unwrap();
    let c = DGCoalgebra::formal(coalgebra(&f, &[0, 1], &[]));
    let (m, n) = trivial_pair(&c);
    let r = dg_cotor_dims(&c, &m, &n, window(0, 2), 4).unwrap();
    assert!(r.degrees.iter().all(|d| d.truncated));
    // Every word in the degree-1 letter sits in total degree 0.
    assert_eq!(r.get(0).unwrap().dim, 5);
}

#[test]
fn validation_catches_bad_data() {
    let f = Rationals;
    // Two degree-0 elements.
    let c = DGCoalgebra::formal(coalgebra(&f, &[0, 0], &[]));
    assert!(c.validate().names("connectivity", &[]));
    // Differential of the wrong degree.
    let c = DGCoalgebra::new(coalgebra(&f, &[0, 2, 4], &[]), differential(&f, 3, &[(1, 2, 1)])).unwrap();
    assert!(c.validate().names("differential degree", &[1, 2]));
    // A comodule differential incompatible with the coaction.
    let c = acyclic(&f);
    let reg = DGRightComodule::new(RightComodule::regular(c.coalgebra.clone()), Matrix::zeros(&f, 3, 3)).unwrap();
    assert!(reg.validate(&c).names("chain map", &[2]), "{}", reg.validate(&c));
    let (_, n) = trivial_pair(&c);
    assert!(dg_cotor_dims(&c, &reg, &n, window(0, 4), 8).is_err());
    let _ = constructors::ground(&f);
}
