use std::sync::Arc;

use cotorlab::constructors::{self, instances};
use cotorlab::graded::{compare_graded, graded_cotensor_dims, graded_cotor_dims, graded_hochschild_dims};
use cotorlab::homalg::{cotor_dims, hochschild_dims};
use cotorlab::{
    tensor_bimodule, Bimodule, Error, Field, GradedWindow, LeftComodule, LeftModule, PrimeField, Rationals, RightComodule,
    RightModule,
};

fn window(lo: i64, hi: i64) -> GradedWindow {
    GradedWindow::new(lo, hi).unwrap()
}

#[test]
fn exterior_h0_tower() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::exterior(&f, 1));
    let k = LeftModule::trivial(a.clone()).unwrap();
    let kr = RightModule::trivial(a).unwrap();
    let cmp = compare_graded(&k, &kr, 4, window(0, 4)).unwrap();
    assert!(cmp.pass);
    for n in 0..=4 {
        for t in 0..=4 {
            assert_eq!(cmp.cotor.get(n, t), usize::from(t == n as i64), "cotor ({n}, {t})");
            assert_eq!(cmp.hochschild.get(n, -t), usize::from(t == n as i64), "hochschild ({n}, {})", -t);
        }
    }
    assert_eq!(cmp.cells.len(), 5);
    assert!(cmp.cotor.upper_truncated[4] && !cmp.cotor.upper_truncated[3]);
}

/// Number of `(a, b)` with `a + b = n` and `a + 2b = t`: the bigraded
/// dimensions of a polynomial ring on classes in `(1, 1)` and `(1, 2)`.
fn two_generator_count(n: usize, t: i64) -> usize {
    (0..=n).filter(|b| (n - b) as i64 + 2 * *b as i64 == t).count()
}

#[test]
fn tensor_of_exteriors_agrees() {
    let f = Rationals;
    let a = Arc::new(constructors::tensor_algebra(&constructors::exterior(&f, 1), &constructors::exterior(&f, 2)));
    let k = LeftModule::trivial(a.clone()).unwrap();
    let kr = RightModule::trivial(a).unwrap();
    let cmp = compare_graded(&k, &kr, 3, window(0, 6)).unwrap();
    assert!(cmp.pass);
    for n in 0..=3 {
        for t in 0..=6 {
            assert_eq!(cmp.cotor.get(n, t), two_generator_count(n, t), "({n}, {t})");
        }
    }
}

#[test]
fn degree_zero_grading_is_ungraded() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for inst in instances(&f).into_iter().take(30) {
            let (m, n) = (inst.left.to_comodule().unwrap(), inst.right.to_comodule().unwrap());
            let w = window(0, 0);
            let graded = graded_cotor_dims(&m, &n, 2, w).unwrap();
            assert_eq!(graded.totals(), cotor_dims(&m, &n, 2).unwrap(), "{}", inst.name);
            let b = tensor_bimodule(&inst.left, &inst.right).unwrap();
            let hh = graded_hochschild_dims(&b, 2, w).unwrap();
            assert_eq!(hh.totals(), hochschild_dims(&b, 2).unwrap(), "{}", inst.name);
            let cmp = compare_graded(&inst.left, &inst.right, 2, w).unwrap();
            assert!(cmp.pass, "{}", inst.name);
            let cot = graded_cotensor_dims(&m, &n, w).unwrap();
            assert_eq!(cot[0], cotorlab::homalg::cotensor(&m, &n).unwrap().cols());
        }
    }
}

#[test]
fn shifting_a_comodule_shifts_the_table() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::exterior(&f, 1));
    let c = Arc::new(a.dual_coalgebra().unwrap());
    let k = RightComodule::trivial(c.clone()).unwrap();
    let kl = LeftComodule::trivial(c.clone()).unwrap();
    let base = graded_cotor_dims(&k, &kl, 3, window(0, 5)).unwrap();
    let shifted = graded_cotor_dims(&k.clone().with_grading(vec![1]), &kl, 3, window(0, 5)).unwrap();
    for n in 0..=3 {
        for t in 0..5 {
            assert_eq!(shifted.get(n, t + 1), base.get(n, t));
        }
        assert_eq!(shifted.get(n, 0), 0);
    }
}

#[test]
fn graded_cotensor_examples() {
    let f = Rationals;
    let a = Arc::new(constructors::exterior(&f, 2));
    let c = Arc::new(a.dual_coalgebra().unwrap());
    assert_eq!(c.degrees(), vec![0, 2]);
    // C □_C C ≅ C.
    let (r, l) = (RightComodule::regular(c.clone()), LeftComodule::regular(c.clone()));
    assert_eq!(graded_cotensor_dims(&r, &l, window(0, 4)).unwrap(), vec![1, 0, 1, 0, 0]);
    // C □_C k ≅ k.
    let k = LeftComodule::trivial(c).unwrap();
    assert_eq!(graded_cotensor_dims(&r, &k, window(0, 4)).unwrap(), vec![1, 0, 0, 0, 0]);
}

#[test]
fn window_overflow_names_the_degree() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::exterior(&f, 1));
    let c = Arc::new(a.dual_coalgebra().unwrap());
    let k = RightComodule::trivial(c.clone()).unwrap().with_grading(vec![5]);
    let kl = LeftComodule::trivial(c).unwrap();
    match graded_cotor_dims(&k, &kl, 2, window(0, 4)) {
        Err(Error::WindowOverflow { degree, .. }) => assert_eq!(degree, 5),
        other => panic!("expected overflow, got {other:?}"),
    }
    assert!(matches!(graded_cotensor_dims(&k, &kl, window(0, 4)), Err(Error::WindowOverflow { degree: 5, .. })));
    let b = Bimodule::regular(a);
    assert!(matches!(graded_hochschild_dims(&b, 2, window(0, 0)), Err(Error::WindowOverflow { degree: 1, .. })));
}

#[test]
fn ground_algebra_has_no_higher_cohomology() {
    let f = Rationals;
    let k = Arc::new(constructors::ground(&f).with_grading(vec![0]));
    let b = Bimodule::new(
        k.clone(),
        3,
        vec![cotorlab::Matrix::identity(&f, 3)],
        vec![cotorlab::Matrix::identity(&f, 3)],
    )
    .unwrap()
    .with_grading(vec![-2, 0, 1]);
    let table = graded_hochschild_dims(&b, 3, window(-2, 2)).unwrap();
    assert_eq!(table.dims[0], vec![1, 0, 1, 1, 0]);
    for n in 1..=3 {
        assert!(table.dims[n].iter().all(|&d| d == 0));
    }
    let _ = f.one();
}

fn graded_algebra(f: &PrimeField, kind: usize, d1: i64, d2: i64) -> cotorlab::Algebra<PrimeField> {
    match kind {
        0 => constructors::exterior(f, d1),
        1 => constructors::tensor_algebra(&constructors::exterior(f, d1), &constructors::exterior(f, d2)),
        _ => constructors::truncated_polynomial(f, 3).with_grading(vec![0, d1, 2 * d1]),
    }
}

fn shifted(degrees: Vec<i64>, s: i64) -> Vec<i64> {
    degrees.into_iter().map(|d| d + s).collect()
}

proptest::proptest! {
    // Graded agreement per (n, t) on sampled graded algebras and modules.
    #[test]
    fn graded_tables_agree(
        p in proptest::sample::select(vec![2u32, 3]),
        kind in 0usize..3,
        d1 in 1i64..3,
        d2 in 1i64..3,
        regular in proptest::collection::vec(proptest::bool::ANY, 2),
        shifts in proptest::collection::vec(-1i64..2, 2),
    ) {
        let f = PrimeField::new(p).unwrap();
        let a = Arc::new(graded_algebra(&f, kind, d1, d2));
        let m = if regular[0] { LeftModule::regular(a.clone()) } else { LeftModule::trivial(a.clone()).unwrap() };
        let n = if regular[1] { RightModule::regular(a.clone()) } else { RightModule::trivial(a).unwrap() };
        let m = m.clone().with_grading(shifted(m.degrees(), shifts[0]));
        let n = n.clone().with_grading(shifted(n.degrees(), shifts[1]));
        let cmp = compare_graded(&m, &n, 2, window(-10, 10)).unwrap();
        proptest::prop_assert!(cmp.pass, "{:?}", cmp.cells);
    }
}
