use std::sync::Arc;

use cotorlab::constructors;
use cotorlab::homalg::{hochschild_differential, hochschild_dims};
use cotorlab::profinite::{
    colimit_report, colimit_report_from_modules, epsilon_bimodule, group_algebra_tower, induced_cochain_map,
    nilpotent_group_algebra_tower, validate_tower, LevelBimodule, Tower,
};
use cotorlab::{Bimodule, Field, LeftModule, Matrix, PrimeField, Rationals, RightModule};
use proptest::prelude::*;

fn trivial_levels<F: Field>(t: &Tower<F>) -> (Vec<LevelBimodule<F>>, Vec<Matrix<F>>) {
    let f = t.field();
    let bs = (0..t.depth())
        .map(|i| epsilon_bimodule(t, i, &LeftModule::trivial(t.levels[i].clone()).unwrap()).unwrap())
        .collect();
    let incs = (1..t.depth()).map(|_| Matrix::identity(f, 1)).collect();
    (bs, incs)
}

#[test]
fn tower_shapes_and_validation() {
    let f = PrimeField::new(2).unwrap();
    let t = group_algebra_tower(&f, 2, 1).unwrap();
    assert_eq!(t.depth(), 1);
    assert_eq!(t.levels[0].dim(), 1);
    assert!(validate_tower(&t).is_valid());

    let t = group_algebra_tower(&f, 2, 3).unwrap();
    assert_eq!(t.levels.iter().map(|a| a.dim()).collect::<Vec<_>>(), vec![1, 2, 4]);
    assert!(validate_tower(&t).is_valid(), "{}", validate_tower(&t));

    let f3 = PrimeField::new(3).unwrap();
    let t = group_algebra_tower(&f3, 3, 2).unwrap();
    assert_eq!(t.levels.iter().map(|a| a.dim()).collect::<Vec<_>>(), vec![1, 3]);
    assert!(validate_tower(&t).is_valid());

    let t = nilpotent_group_algebra_tower(&f, 2, 3).unwrap();
    assert!(validate_tower(&t).is_valid(), "{}", validate_tower(&t));
    assert!(nilpotent_group_algebra_tower(&Rationals, 2, 2).is_err());
}

#[test]
fn broken_projection_is_named() {
    let f = PrimeField::new(5).unwrap();
    let mut t = group_algebra_tower(&f, 2, 3).unwrap();
    // Scale one row of the top projection: the images of g no longer multiply.
    let p = &t.projections[1];
    t.projections[1] = Matrix::from_fn(&f, 2, 4, |r, c| if r == 1 { f.mul(p.get(r, c), &f.from_i64(2)) } else { p.get(r, c).clone() });
    let report = validate_tower(&t);
    assert!(!report.is_valid());
    assert!(report.violations.iter().all(|v| v.indices.first() == Some(&1)), "{report}");
    assert!(report.violations.iter().any(|v| v.law == "multiplicative"));

    let mut t = group_algebra_tower(&f, 2, 2).unwrap();
    t.projections[0] = Matrix::zeros(&f, 1, 2);
    let report = validate_tower(&t);
    assert!(report.names("surjective", &[0]) && report.names("unital", &[0]));
}

#[test]
fn epsilon_bimodules() {
    let f = PrimeField::new(2).unwrap();
    let t = group_algebra_tower(&f, 2, 2).unwrap();
    let a = t.levels[1].clone();
    let k = epsilon_bimodule(&t, 1, &LeftModule::trivial(a.clone()).unwrap()).unwrap();
    assert_eq!(k.bimodule.dim(), 1);
    assert!(k.bimodule.left_action().iter().chain(k.bimodule.right_action()).all(|m| *m.get(0, 0) == 1));
    let reg = epsilon_bimodule(&t, 1, &LeftModule::regular(a.clone())).unwrap();
    assert_eq!(reg.bimodule.left_action()[1], a.left_multiplication(1));
    assert_eq!(reg.bimodule.right_action()[1], Matrix::identity(&f, 2));
    assert!(reg.bimodule.validate().is_valid());

    let m2 = Arc::new(constructors::matrix_algebra(&f, 2));
    let tm = Tower::new(vec![m2.clone()], vec![]).unwrap();
    assert!(epsilon_bimodule(&tm, 0, &LeftModule::regular(m2)).is_err());
}

#[test]
fn induced_cochain_maps() {
    let f = PrimeField::new(2).unwrap();
    let t = group_algebra_tower(&f, 2, 3).unwrap();
    let (bs, _) = trivial_levels(&t);
    let id = Matrix::identity(&f, 1);
    // Same level, identity inclusion.
    let same = induced_cochain_map(&t, &bs[1], &bs[1], &id, 2).unwrap();
    assert_eq!(same, Matrix::identity(&f, 4));
    // Degree 0 is the inclusion itself.
    assert_eq!(induced_cochain_map(&t, &bs[1], &bs[2], &id, 0).unwrap(), id);
    // Degree 1 from F2[Z/2] to F2[Z/4]: f ↦ f ∘ p, p(g^j) = g^{j mod 2}.
    let m = induced_cochain_map(&t, &bs[1], &bs[2], &id, 1).unwrap();
    assert_eq!((m.rows(), m.cols()), (4, 2));
    assert_eq!(m, Matrix::from_i64(&f, &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]));

    // A map that ignores the actions is rejected.
    let reg1 = epsilon_bimodule(&t, 1, &LeftModule::regular(t.levels[1].clone())).unwrap();
    let reg2 = epsilon_bimodule(&t, 2, &LeftModule::regular(t.levels[2].clone())).unwrap();
    let bad = Matrix::from_i64(&f, &[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
    assert!(induced_cochain_map(&t, &reg1, &reg2, &bad, 1).is_err());
    // Inflation of the regular module: b ↦ b(1 + g^2) up the tower.
    let good = Matrix::from_i64(&f, &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]);
    for n in 0..3 {
        induced_cochain_map(&t, &reg1, &reg2, &good, n).unwrap();
    }
}

#[test]
fn galois_cohomology_of_two_adic_integers() {
    let f = PrimeField::new(2).unwrap();
    let t = group_algebra_tower(&f, 2, 3).unwrap();
    let (bs, incs) = trivial_levels(&t);
    let report = colimit_report(&t, &bs, &incs, 3).unwrap();
    for n in 0..=3 {
        let dims = report.level_dims(n);
        assert_eq!(&dims[1..], &[1, 1], "degree {n}");
        assert_eq!(dims[0], usize::from(n == 0));
    }
    assert_eq!(report.stable_dims(), vec![1, 1, 0, 0]);
    // The degree-1 class inflates isomorphically; its square dies.
    assert_eq!(report.map(1, 1, 2).unwrap().rank(), 1);
    assert_eq!(report.map(2, 1, 2).unwrap().rank(), 0);
}

#[test]
fn three_adic_tower() {
    let f = PrimeField::new(3).unwrap();
    let t = group_algebra_tower(&f, 3, 3).unwrap();
    let (bs, incs) = trivial_levels(&t);
    let report = colimit_report(&t, &bs, &incs, 2).unwrap();
    assert_eq!(report.degrees[1].stable, 1);
    assert_eq!(report.degrees[1].level_dims, vec![0, 1, 1]);
    // Depth two has nothing below the top to stabilize from in degree 1.
    let t2 = group_algebra_tower(&f, 3, 2).unwrap();
    let (bs, incs) = trivial_levels(&t2);
    let r2 = colimit_report(&t2, &bs, &incs, 1).unwrap();
    assert_eq!(r2.degrees[1].level_dims, vec![0, 1]);
    assert_eq!(r2.degrees[1].stable_ranks, vec![0, 1]);
}

#[test]
fn single_level_is_hochschild() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::truncated_polynomial(&f, 2));
    let t = Tower::new(vec![a.clone()], vec![]).unwrap();
    let b = LevelBimodule::new(&t, 0, Bimodule::regular(a.clone())).unwrap();
    let report = colimit_report(&t, &[b.clone()], &[], 3).unwrap();
    assert_eq!(report.stable_dims(), hochschild_dims(&b.bimodule, 3).unwrap());
}

#[test]
fn level_cotor_matches_level_hochschild() {
    let f = PrimeField::new(2).unwrap();
    let t = group_algebra_tower(&f, 2, 3).unwrap();
    let modules: Vec<_> = t
        .levels
        .iter()
        .map(|a| (LeftModule::trivial(a.clone()).unwrap(), RightModule::trivial(a.clone()).unwrap()))
        .collect();
    let incs = vec![Matrix::identity(&f, 1); 2];
    let report = colimit_report_from_modules(&t, &modules, &incs, 3).unwrap();
    for d in &report.degrees {
        assert_eq!(d.level_cotor.as_ref().unwrap(), &d.level_dims);
    }
    assert_eq!(report.stable_dims(), vec![1, 1, 0, 0]);
}

#[test]
fn constant_tower_is_stable() {
    let f = PrimeField::new(3).unwrap();
    let a = Arc::new(constructors::cyclic_group_algebra(&f, 3));
    let t = Tower::new(vec![a.clone(); 3], vec![Matrix::identity(&f, 3); 2]).unwrap();
    let (bs, incs) = trivial_levels(&t);
    let report = colimit_report(&t, &bs, &incs, 2).unwrap();
    for d in &report.degrees {
        assert_eq!(d.stable, d.level_dims[2]);
        assert!(d.stable_ranks.iter().all(|&r| r == d.level_dims[2]));
    }
}

proptest! {
    // Induced cochain maps are chain maps and stable ranks never increase as
    // the source level goes down.
    #[test]
    fn stable_ranks_are_monotone(p in prop::sample::select(vec![2usize, 3]), depth in 1usize..4, regular in any::<bool>()) {
        let f = PrimeField::new(p as u32).unwrap();
        let depth = if p == 3 { depth.min(3) } else { depth };
        let t = group_algebra_tower(&f, p, depth).unwrap();
        let n_max = if p == 3 && depth == 3 { 1 } else { 2 };
        let (bs, incs) = if regular {
            // Regular modules inflated by the norm of the kernel.
            let bs: Vec<_> = (0..depth)
                .map(|i| epsilon_bimodule(&t, i, &LeftModule::regular(t.levels[i].clone())).unwrap())
                .collect();
            let incs = (1..depth)
                .map(|i| {
                    let (lo, hi) = (t.levels[i - 1].dim(), t.levels[i].dim());
                    Matrix::from_fn(&f, hi, lo, |r, c| if r % lo == c { f.one() } else { f.zero() })
                })
                .collect();
            (bs, incs)
        } else {
            trivial_levels(&t)
        };
        let report = colimit_report(&t, &bs, &incs, n_max).unwrap();
        for d in &report.degrees {
            prop_assert!(d.stable_ranks.windows(2).all(|w| w[0] <= w[1]), "{:?}", d);
        }
        for b in &bs {
            let d0 = hochschild_differential(&b.bimodule, 0);
            let d1 = hochschild_differential(&b.bimodule, 1);
            prop_assert!(d1.mul(&d0).unwrap().is_zero());
        }
    }
}
