use cotorlab::io::{AlgebraSpec, ModuleSpec, Objects, Problem, Workspace};
use cotorlab::{Error, Field, FieldDescriptor, PrimeField, Rationals};
use proptest::prelude::*;
use serde_json::json;

const SAMPLE: &str = r#"{
  "field": {"type": "Fp", "p": 2},
  "objects": {
    "algebras": {
      "A": {"builtin": {"name": "truncated_polynomial", "n": 2, "degree": 2}},
      "L": {"builtin": {"name": "exterior", "degree": 1}},
      "T": {"builtin": {"name": "tensor", "left": "L", "right": "L"}},
      "G": {"builtin": {"name": "cyclic_group", "order": 2}},
      "D": {"dual_of": "C"}
    },
    "coalgebras": {"C": {"dual_of": "A"}},
    "left_modules": {"k": {"algebra": "A", "builtin": "trivial"}, "A": {"algebra": "A", "builtin": "regular"}},
    "right_modules": {"k": {"algebra": "A", "builtin": "trivial"}},
    "bimodules": {"kk": {"tensor": ["k", "k"]}, "reg": {"algebra": "G", "builtin": "regular"}},
    "right_comodules": {"k": {"from_module": "k"}, "C": {"coalgebra": "C", "builtin": "regular"}},
    "left_comodules": {"k": {"coalgebra": "C", "builtin": "trivial"}},
    "dg_coalgebras": {"S2": {"coalgebra": "C"}},
    "dg_right_comodules": {"k": {"dg_coalgebra": "S2", "builtin": "trivial"}},
    "dg_left_comodules": {"k": {"dg_coalgebra": "S2", "comodule": "k"}},
    "towers": {"Z2": {"builtin": {"name": "group_algebra", "p": 2, "depth": 3}}}
  },
  "task": {"left": "k", "right": "k", "n_max": 3}
}"#;

fn reparse<F: Field>(f: &F, ws: &Workspace<F>) -> Workspace<F> {
    let text = serde_json::to_string(&ws.encode()).unwrap();
    let objects: Objects = serde_json::from_str(&text).unwrap();
    let again = Workspace::build(f, &objects).unwrap();
    assert_eq!(again.encode(), objects);
    again
}

#[test]
fn sample_loads_and_round_trips() {
    let p = Problem::from_json(SAMPLE).unwrap();
    assert_eq!(p.field, FieldDescriptor::Fp { p: 2 });
    let f = PrimeField::new(2).unwrap();
    let ws = Workspace::load(&f, &p.objects).unwrap();
    assert_eq!(ws.algebras["T"].dim(), 4);
    assert_eq!(ws.coalgebras["C"].dim(), 2);
    assert_eq!(ws.bimodules["kk"].dim(), 1);
    assert_eq!(ws.towers["Z2"].bimodules.len(), 3);
    assert!(ws.validate().iter().all(|r| r.valid));
    // Translation on demand.
    assert_eq!(ws.right_comodule("A").unwrap().dim(), 2);
    assert_eq!(ws.left_module("C").unwrap().dim(), 2);
    assert!(matches!(ws.left_module("nope"), Err(Error::Unresolved(_))));
    let again = reparse(&f, &ws);
    for (n, a) in &ws.algebras {
        assert_eq!(&again.algebras[n], a);
    }
    assert_eq!(again.towers, ws.towers);
    assert_eq!(again.dg_right_comodules, ws.dg_right_comodules);
    assert_eq!(again.bimodules["kk"], ws.bimodules["kk"]);
    assert_eq!(p.task.unwrap().n_max, Some(3));
}

#[test]
fn rational_scalars() {
    let text = json!({
        "field": {"type": "Q"},
        "objects": {"algebras": {"k": {"dim": 1, "mul": ["1"], "unit": [1], "augmentation": ["2/2"]}},
                    "left_modules": {"half": {"algebra": "k", "dim": 1, "action": [[["1/1"]]]}}}
    });
    let p: Problem = serde_json::from_value(text).unwrap();
    let ws = Workspace::load(&Rationals, &p.objects).unwrap();
    assert_eq!(reparse(&Rationals, &ws), ws);
    let enc = ws.encode();
    assert_eq!(enc.algebras["k"].mul.as_ref().unwrap()[0], json!("1"));
}

#[test]
fn errors_are_classified() {
    let f = PrimeField::new(3).unwrap();
    let load = |v: serde_json::Value| -> Result<Workspace<PrimeField>, Error> {
        let objects: Objects = serde_json::from_value(v).map_err(|e| Error::Schema(e.to_string()))?;
        Workspace::load(&f, &objects)
    };
    let dangling = load(json!({"left_modules": {"m": {"algebra": "missing", "builtin": "trivial"}}}));
    assert!(matches!(dangling, Err(Error::Unresolved(n)) if n == "missing"));
    let cycle = load(json!({"algebras": {"a": {"dual_of": "c"}}, "coalgebras": {"c": {"dual_of": "a"}}}));
    assert!(matches!(cycle, Err(Error::Schema(_))));
    let short = load(json!({"algebras": {"a": {"dim": 2, "mul": [1, 0, 0], "unit": [1, 0]}}}));
    assert!(matches!(short, Err(Error::Schema(_))), "{short:?}");
    let unknown = load(json!({"algebras": {"a": {"dimension": 2}}}));
    assert!(matches!(unknown, Err(Error::Schema(_))));
    // e1 * e1 = e0 + e1 but e1 * e0 = 0: not unital on the right.
    let mut mul = vec![0; 8];
    mul[0] = 1;
    mul[1 * 2 + 0] = 0;
    mul[(1 * 2 + 1) * 2] = 1;
    mul[(1 * 2 + 1) * 2 + 1] = 1;
    match load(json!({"algebras": {"a": {"dim": 2, "mul": mul, "unit": [1, 0]}}})) {
        Err(Error::Invalid { report, .. }) => assert!(!report.is_valid()),
        other => panic!("expected a validation failure, got {other:?}"),
    }
    // Building without validation keeps the invalid object for reporting.
    let objects: Objects =
        serde_json::from_value(json!({"algebras": {"a": {"dim": 2, "mul": mul, "unit": [1, 0]}}})).unwrap();
    let ws = Workspace::build(&f, &objects).unwrap();
    assert!(!ws.validate()[0].valid);
}

proptest! {
    // Explicit data survives encode → JSON → parse → build unchanged, valid or not.
    #[test]
    fn explicit_data_round_trips(
        p in prop::sample::select(vec![2u32, 5]),
        dim in 1usize..4,
        seed in prop::collection::vec(-7i64..7, 64 + 16 + 27 * 3),
        graded in any::<bool>(),
    ) {
        let f = PrimeField::new(p).unwrap();
        let take = |k: usize, off: usize| seed[off..off + k].iter().map(|&x| json!(x)).collect::<Vec<_>>();
        let mut objects = Objects::default();
        objects.algebras.insert("a".into(), AlgebraSpec {
            dim: Some(dim),
            mul: Some(take(dim * dim * dim, 0)),
            unit: Some(take(dim, 64)),
            grading: graded.then(|| (0..dim as i64).collect()),
            ..Default::default()
        });
        let mdim = 1 + dim % 2;
        let action = (0..dim)
            .map(|i| (0..mdim).map(|r| take(mdim, 80 + (i * mdim + r) * mdim)).collect())
            .collect();
        objects.left_modules.insert("m".into(), ModuleSpec {
            algebra: Some("a".into()),
            dim: Some(mdim),
            action: Some(action),
            ..Default::default()
        });
        let ws = Workspace::build(&f, &objects).unwrap();
        let again = reparse(&f, &ws);
        prop_assert_eq!(&again, &ws);
        prop_assert_eq!(again.encode(), ws.encode());
    }
}
