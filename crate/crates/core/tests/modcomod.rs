use std::sync::Arc;

use cotorlab::constructors::{self, families, instances};
use cotorlab::{tensor_bimodule, Bimodule, Field, LeftModule, Matrix, PrimeField, Rationals, RightComodule, RightModule};
use proptest::prelude::*;

fn check_round_trips<F: Field>(f: &F) -> usize {
    let mut count = 0;
    for fam in families(f) {
        for (name, m) in &fam.left {
            let c = m.to_comodule().unwrap();
            assert!(c.validate().is_valid(), "{} / {name}: {}", fam.name, c.validate());
            let back = c.to_module().unwrap();
            assert_eq!(back.action(), m.action(), "{} / {name}", fam.name);
            count += 1;
        }
        for (name, n) in &fam.right {
            let c = n.to_comodule().unwrap();
            assert!(c.validate().is_valid(), "{} / {name}: {}", fam.name, c.validate());
            assert_eq!(c.to_module().unwrap().action(), n.action(), "{} / {name}", fam.name);
            count += 1;
        }
    }
    count
}

#[test]
fn round_trips_are_identity() {
    let mut n = check_round_trips(&PrimeField::new(2).unwrap());
    n += check_round_trips(&PrimeField::new(5).unwrap());
    n += check_round_trips(&Rationals);
    assert!(n >= 25);
}

/// The coaction built from the module agrees entrywise with the one obtained
/// by dualizing the transposed action `ρ: DM ⊗ A -> DM`.
#[test]
fn coaction_agrees_with_duality_map() {
    let f = Rationals;
    for fam in families(&f) {
        for (name, m) in &fam.left {
            let rho = m.to_comodule().unwrap();
            let dual = m.dual();
            let (d, n) = (m.dim(), fam.algebra.dim());
            for b in 0..d {
                for b2 in 0..d {
                    for i in 0..n {
                        // ⟨Dρ(b_m), e_{m'}* ⊗ e_i⟩ = ⟨b_m, e_{m'}* · e_i⟩
                        let via_dual = dual.action()[i].get(b, b2);
                        assert_eq!(rho.coeff(b, b2, i), via_dual, "{} / {name}", fam.name);
                    }
                }
            }
        }
    }
}

#[test]
fn regular_coaction_of_unit_is_canonical_element() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::truncated_polynomial(&f, 2));
    let c = LeftModule::regular(a.clone()).to_comodule().unwrap();
    // Δ(1) = 1 ⊗ 1* + x ⊗ x*
    let flat: Vec<u32> = (0..2).flat_map(|m2| (0..2).map(move |k| (m2, k))).map(|(m2, k)| *c.coeff(0, m2, k)).collect();
    assert_eq!(flat, vec![1, 0, 0, 1]);
    assert_eq!(flat, a.canonical_element());

    for fam in families(&Rationals) {
        let a = &fam.algebra;
        let c = LeftModule::regular(a.clone()).to_comodule().unwrap();
        let n = a.dim();
        // Δ_A applied to the unit element.
        let mut got = vec![Rationals.zero(); n * n];
        for (u, coeff) in a.unit().iter().enumerate() {
            for i in 0..n {
                for k in 0..n {
                    got[i * n + k] = Rationals.add(&got[i * n + k], &Rationals.mul(coeff, c.coeff(u, i, k)));
                }
            }
        }
        assert_eq!(got, a.canonical_element(), "{}", fam.name);
    }
}

#[test]
fn matrix_column_module_coaction() {
    let f = PrimeField::new(5).unwrap();
    let a = Arc::new(constructors::matrix_algebra(&f, 2));
    let col = constructors::column_module(a, 2).unwrap();
    let c = col.to_comodule().unwrap();
    // E_ab b_b = b_a, so ρ(b_b) = Σ_a b_a ⊗ E_ab*.
    for b in 0..2 {
        for a in 0..2 {
            for i in 0..4 {
                let want = u32::from(i == a * 2 + b);
                assert_eq!(*c.coeff(b, a, i), want);
            }
        }
    }
}

#[test]
fn grouplike_coalgebra_gives_projections() {
    let f = Rationals;
    // Δc_i = c_i ⊗ c_i on three grouplikes.
    let n = 3;
    let comul = (0..n * n * n)
        .map(|x| if x / (n * n) == (x / n) % n && x / n % n == x % n { f.one() } else { f.zero() })
        .collect();
    let c = Arc::new(cotorlab::Coalgebra::new(&f, n, comul, vec![f.one(); n]).unwrap());
    assert!(c.validate().is_valid());
    let m = RightComodule::regular(c.clone());
    let module = m.to_module().unwrap();
    for i in 0..n {
        let p = Matrix::from_fn(&f, n, n, |r, s| if r == i && s == i { f.one() } else { f.zero() });
        assert_eq!(module.action()[i], p);
    }
    // Contragredient: Δ(c_i*) = c_i ⊗ c_i*.
    let dm = m.contragredient();
    assert!(dm.validate().is_valid());
    for x in 0..n {
        for k in 0..n {
            for y in 0..n {
                let want = if x == k && k == y { f.one() } else { f.zero() };
                assert_eq!(dm.coeff(x, k, y), &want);
            }
        }
    }
}

#[test]
fn trivial_comodule_gives_counit_module() {
    let f = PrimeField::new(3).unwrap();
    let a = Arc::new(constructors::cyclic_group_algebra(&f, 3));
    let mut c = a.dual_coalgebra().unwrap();
    // The augmentation is the grouplike of the dual coalgebra.
    c.grouplike = Some(vec![1, 1, 1]);
    assert!(c.validate().is_valid());
    let k = RightComodule::trivial(Arc::new(c)).unwrap();
    let m = k.to_module().unwrap();
    assert_eq!(m.action().iter().map(|x| *x.get(0, 0)).collect::<Vec<_>>(), vec![1, 1, 1]);
    assert_eq!(m, LeftModule::trivial(a).unwrap());
}

#[test]
fn contragredient_matches_dual_module() {
    for fam in families(&Rationals) {
        for (name, m) in &fam.left {
            let rho = m.to_comodule().unwrap();
            let dm = rho.contragredient();
            assert!(dm.validate().is_valid(), "{} / {name}: {}", fam.name, dm.validate());
            assert_eq!(dm.to_module().unwrap().action(), m.dual().action(), "{} / {name}", fam.name);
        }
    }
}

#[test]
fn dual_module_examples() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::truncated_polynomial(&f, 2));
    let reg = LeftModule::regular(a.clone());
    assert_eq!(reg.dual().action()[1], a.left_multiplication(1).transpose());
    assert_eq!(reg.dual().dual(), reg);
    let k = LeftModule::trivial(a.clone()).unwrap();
    assert_eq!(k.dual(), RightModule::trivial(a).unwrap());
}

#[test]
fn validation_reports() {
    let f = PrimeField::new(2).unwrap();
    let a = Arc::new(constructors::truncated_polynomial(&f, 2));
    assert!(LeftModule::trivial(a.clone()).unwrap().validate().is_valid());
    assert!(LeftModule::regular(a.clone()).validate().is_valid());

    // k[x]/x^2 regular on the left, with x acting on the right by a non-commuting nilpotent.
    let left: Vec<_> = (0..2).map(|i| a.left_multiplication(i)).collect();
    let swap = Matrix::from_i64(&f, &[&[0, 0], &[1, 0]]);
    let right = vec![Matrix::identity(&f, 2), swap.transpose()];
    let b = Bimodule::new(a.clone(), 2, left, right).unwrap();
    let report = b.validate();
    assert!(report.violations.iter().any(|v| v.law == "commutation" && v.indices == vec![1, 1]), "{report}");
}

#[test]
fn tensor_bimodule_examples() {
    let f = PrimeField::new(5).unwrap();
    let a = Arc::new(constructors::matrix_algebra(&f, 2));
    let col = constructors::column_module(a.clone(), 2).unwrap();
    let row = constructors::row_module(a.clone(), 2).unwrap();
    let b = tensor_bimodule(&col, &row).unwrap();
    assert_eq!(b.dim(), 4);
    assert!(b.validate().is_valid());
    // b_r ⊗ ε_s ↔ E_rs identifies the bimodule with M2(k).
    assert_eq!(b, Bimodule::regular(a.clone()));

    let g = Arc::new(constructors::ground(&f));
    let k = tensor_bimodule(&LeftModule::trivial(g.clone()).unwrap(), &RightModule::trivial(g).unwrap()).unwrap();
    assert_eq!(k.dim(), 1);

    let other = Arc::new(constructors::diagonal(&f, 4));
    assert!(tensor_bimodule(&LeftModule::regular(other), &row).is_err());
}

#[test]
fn every_tensor_bimodule_validates() {
    for p in [2, 5] {
        let f = PrimeField::new(p).unwrap();
        for inst in instances(&f) {
            let b = tensor_bimodule(&inst.left, &inst.right).unwrap();
            assert!(b.validate().is_valid(), "{}: {}", inst.name, b.validate());
            assert_eq!(b.dim(), inst.left.dim() * inst.right.dim());
        }
    }
}

proptest! {
    // Module maps and comodule maps coincide: an equivariant matrix built
    // from random coefficients on a basis of intertwiners also intertwines the
    // coactions, and the solution spaces have equal dimension.
    #[test]
    fn morphisms_transport(fi in 0usize..13, li in 0usize..4, ri in 0usize..4, coeffs in prop::collection::vec(-3i64..4, 12)) {
        let f = Rationals;
        let fams = families(&f);
        let fam = &fams[fi % fams.len()];
        let m = &fam.left[li % fam.left.len()].1;
        let n = &fam.left[ri % fam.left.len()].1;
        let basis = m.hom_basis(n).unwrap();
        let (cm, cn) = (m.to_comodule().unwrap(), n.to_comodule().unwrap());
        let cbasis = cm.hom_basis(&cn).unwrap();
        prop_assert_eq!(basis.len(), cbasis.len());
        let mut x = Matrix::zeros(&f, n.dim(), m.dim());
        for (b, c) in basis.iter().zip(&coeffs) {
            x = x.add(&b.scale(&f.from_i64(*c))).unwrap();
        }
        // (X ⊗ 1) ρ_M = ρ_N X
        let c = fam.algebra.dim();
        let lhs = x.kron(&Matrix::identity(&f, c)).mul(&cm.coaction_matrix()).unwrap();
        let rhs = cn.coaction_matrix().mul(&x).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Conversely, comodule maps commute with the actions.
        for y in &cbasis {
            for (am, an) in m.action().iter().zip(n.action()) {
                prop_assert_eq!(y.mul(am).unwrap(), an.mul(y).unwrap());
            }
        }
    }
}
