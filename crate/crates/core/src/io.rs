//! JSON problem files: object specifications, name resolution and
//! re-encoding.
//!
//! Scalars are integers for `F_p` (reduced on parse) and `"a/b"` strings (or
//! integers) for `Q`. Matrices are lists of rows. Structure tensors are flat
//! lists in the crate's index order: `mul[(i*n + j)*n + k]`,
//! `comul[(k*n + i)*n + j]`, right coaction `[(m*d + m')*c + k]`, left
//! coaction `[(n*c + k)*d + n']`. Objects may refer to each other by name;
//! cycles and dangling names are rejected.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Coalgebra};
use crate::constructors;
use crate::dg::{DGCoalgebra, DGLeftComodule, DGRightComodule};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::matrix::Matrix;
use crate::module::{tensor_bimodule, Bimodule, LeftComodule, LeftModule, RightComodule, RightModule};
use crate::profinite::{epsilon_bimodule, group_algebra_tower, LevelBimodule, Tower};
use crate::validate::Report;

pub type Rows = Vec<Vec<Value>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    pub field: FieldDescriptor,
    #[serde(default)]
    pub objects: Objects,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub task: Option<Task>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Objects {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coalgebras: BTreeMap<String, CoalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub left_modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right_modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub right_comodules: BTreeMap<String, ComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub left_comodules: BTreeMap<String, ComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dg_coalgebras: BTreeMap<String, DGCoalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dg_right_comodules: BTreeMap<String, DGComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub dg_left_comodules: BTreeMap<String, DGComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub towers: BTreeMap<String, TowerSpec>,
}

/// Named constructors for algebras.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraBuiltin {
    Ground,
    /// `k[x]/x^n`, optionally graded with `x` in `degree`.
    TruncatedPolynomial { n: usize, #[serde(default)] degree: Option<i64> },
    Exterior { degree: i64 },
    CyclicGroup { order: usize },
    KleinGroup,
    Matrix { n: usize },
    Diagonal { n: usize },
    A2Path,
    /// Tensor product of two named algebras.
    Tensor { left: String, right: String },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<AlgebraBuiltin>,
    /// The algebra dual to a named coalgebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    /// The coalgebra dual to a named algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
    /// When absent: the first grouplike basis element, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grouplike: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleBuiltin {
    Trivial,
    Regular,
    /// Column vectors over `M_n(k)` (left modules only).
    Column,
    /// Row vectors over `M_n(k)` (right modules only).
    Row,
}

/// A left or right module over a named algebra.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<ModuleBuiltin>,
    /// The module translated from a named comodule.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_comodule: Option<String>,
    /// One-dimensional module through a character, one value per basis element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// One matrix per basis element of the algebra.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<ModuleBuiltin>,
    /// `M ⊗ N` for a named left and right module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<ModuleBuiltin>,
    /// The comodule translated from a named module (over the dual coalgebra).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_module: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DGCoalgebraSpec {
    pub coalgebra: String,
    /// Zero when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differential: Option<Rows>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DGComoduleSpec {
    pub dg_coalgebra: String,
    /// A named comodule, or `"trivial"` / `"regular"` via `builtin`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<ModuleBuiltin>,
    /// Zero when absent; for the regular comodule, the coalgebra's.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differential: Option<Rows>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum TowerBuiltin {
    /// `k[Z/p^i]`, `i = 0..depth`.
    GroupAlgebra { p: usize, depth: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<TowerBuiltin>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projections: Option<Vec<Rows>>,
    /// One named bimodule per level; `k_ε` at every level when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodules: Option<Vec<String>>,
    /// `B^i → B^{i+1}`; identities when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inclusions: Option<Vec<Rows>>,
}

/// Named references and parameters for the command being run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Task {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub object: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dg_coalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<(i64, i64)>,
    /// Cobar-degree cap for DG data with degree-1 elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_cap: Option<usize>,
}

/// A resolved tower together with its level bimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerData<F: Field> {
    pub tower: Tower<F>,
    pub bimodules: Vec<LevelBimodule<F>>,
    pub inclusions: Vec<Matrix<F>>,
}

/// Every object of a problem file, constructed and cross-linked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workspace<F: Field> {
    pub field: F,
    pub algebras: BTreeMap<String, Arc<Algebra<F>>>,
    pub coalgebras: BTreeMap<String, Arc<Coalgebra<F>>>,
    pub left_modules: BTreeMap<String, LeftModule<F>>,
    pub right_modules: BTreeMap<String, RightModule<F>>,
    pub bimodules: BTreeMap<String, Bimodule<F>>,
    pub right_comodules: BTreeMap<String, RightComodule<F>>,
    pub left_comodules: BTreeMap<String, LeftComodule<F>>,
    pub dg_coalgebras: BTreeMap<String, DGCoalgebra<F>>,
    pub dg_right_comodules: BTreeMap<String, DGRightComodule<F>>,
    pub dg_left_comodules: BTreeMap<String, DGLeftComodule<F>>,
    pub towers: BTreeMap<String, TowerData<F>>,
}

/// Validation outcome of one named object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectReport {
    pub kind: String,
    pub name: String,
    pub valid: bool,
    pub report: Report,
}

pub fn scalars<F: Field>(f: &F, values: &[Value]) -> Result<Vec<F::Elem>> {
    values.iter().map(|v| f.parse_scalar(v)).collect()
}

pub fn matrix<F: Field>(f: &F, rows: &Rows) -> Result<Matrix<F>> {
    let data = rows.iter().map(|r| scalars(f, r)).collect::<Result<Vec<_>>>()?;
    let cols = data.first().map_or(0, Vec::len);
    if data.iter().any(|r| r.len() != cols) {
        return Err(Error::Schema("matrix rows have different lengths".into()));
    }
    Matrix::from_data(f, data.len(), cols, data.into_iter().flatten().collect())
}

fn matrix_sized<F: Field>(f: &F, rows: &Rows, n: usize, m: usize) -> Result<Matrix<F>> {
    // An empty list of rows is a valid n x 0 or 0 x m matrix only when a side is 0.
    if rows.is_empty() && (n == 0 || m == 0) {
        return Ok(Matrix::zeros(f, n, m));
    }
    let x = matrix(f, rows)?;
    if x.rows() != n || x.cols() != m {
        return Err(Error::Schema(format!("expected a {n}x{m} matrix, got {}x{}", x.rows(), x.cols())));
    }
    Ok(x)
}

pub fn encode_scalars<F: Field>(f: &F, xs: &[F::Elem]) -> Vec<Value> {
    xs.iter().map(|x| f.scalar_to_json(x)).collect()
}

pub fn encode_matrix<F: Field>(m: &Matrix<F>) -> Rows {
    (0..m.rows()).map(|r| encode_scalars(m.field(), &m.row(r))).collect()
}

fn need<T: Clone>(x: &Option<T>, what: &str, name: &str) -> Result<T> {
    x.clone().ok_or_else(|| Error::Schema(format!("{name}: missing field {what:?}")))
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Unresolved(name.to_string()))
}

/// Wraps construction errors that stem from malformed data as schema errors.
fn schema<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Dimension(m) | Error::Input(m) => Error::Schema(format!("{name}: {m}")),
        other => other,
    })
}

struct Builder<'a, F: Field> {
    objects: &'a Objects,
    ws: Workspace<F>,
    visiting: BTreeSet<(&'static str, String)>,
}

impl<F: Field> Workspace<F> {
    /// Builds every object. Structures that must be valid to be used as
    /// ingredients (duals, translations, tensor products) are validated on
    /// the way; call [`Workspace::validate`] for the rest.
    pub fn build(f: &F, objects: &Objects) -> Result<Self> {
        let ws = Workspace {
            field: f.clone(),
            algebras: BTreeMap::new(),
            coalgebras: BTreeMap::new(),
            left_modules: BTreeMap::new(),
            right_modules: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            right_comodules: BTreeMap::new(),
            left_comodules: BTreeMap::new(),
            dg_coalgebras: BTreeMap::new(),
            dg_right_comodules: BTreeMap::new(),
            dg_left_comodules: BTreeMap::new(),
            towers: BTreeMap::new(),
        };
        let mut b = Builder { objects, ws, visiting: BTreeSet::new() };
        for name in objects.algebras.keys() {
            b.algebra(name)?;
        }
        for name in objects.coalgebras.keys() {
            b.coalgebra(name)?;
        }
        for name in objects.left_modules.keys() {
            b.left_module(name)?;
        }
        for name in objects.right_modules.keys() {
            b.right_module(name)?;
        }
        for name in objects.bimodules.keys() {
            b.bimodule(name)?;
        }
        for name in objects.right_comodules.keys() {
            b.right_comodule(name)?;
        }
        for name in objects.left_comodules.keys() {
            b.left_comodule(name)?;
        }
        for name in objects.dg_coalgebras.keys() {
            b.dg_coalgebra(name)?;
        }
        for name in objects.dg_right_comodules.keys() {
            b.dg_right_comodule(name)?;
        }
        for name in objects.dg_left_comodules.keys() {
            b.dg_left_comodule(name)?;
        }
        for name in objects.towers.keys() {
            b.tower(name)?;
        }
        Ok(b.ws)
    }

    /// Builds and validates everything, failing on the first invalid object.
    pub fn load(f: &F, objects: &Objects) -> Result<Self> {
        let ws = Self::build(f, objects)?;
        if let Some(bad) = ws.validate().into_iter().find(|r| !r.valid) {
            return Err(Error::Invalid { what: format!("{} {:?}", bad.kind, bad.name), report: bad.report });
        }
        Ok(ws)
    }

    /// Validation reports for every object, in a fixed order.
    pub fn validate(&self) -> Vec<ObjectReport> {
        let mut out = Vec::new();
        let mut push = |kind: &str, name: &str, report: Report| {
            out.push(ObjectReport { kind: kind.into(), name: name.into(), valid: report.is_valid(), report })
        };
        for (n, x) in &self.algebras {
            push("algebra", n, x.validate());
        }
        for (n, x) in &self.coalgebras {
            push("coalgebra", n, x.validate());
        }
        for (n, x) in &self.left_modules {
            push("left module", n, x.validate());
        }
        for (n, x) in &self.right_modules {
            push("right module", n, x.validate());
        }
        for (n, x) in &self.bimodules {
            push("bimodule", n, x.validate());
        }
        for (n, x) in &self.right_comodules {
            push("right comodule", n, x.validate());
        }
        for (n, x) in &self.left_comodules {
            push("left comodule", n, x.validate());
        }
        for (n, x) in &self.dg_coalgebras {
            push("DG coalgebra", n, x.validate());
        }
        for (n, x) in &self.dg_right_comodules {
            let c = self.dg_owner(&x.comodule.coalgebra);
            push("DG right comodule", n, c.map_or_else(Report::new, |c| x.validate(c)));
        }
        for (n, x) in &self.dg_left_comodules {
            let c = self.dg_owner(&x.comodule.coalgebra);
            push("DG left comodule", n, c.map_or_else(Report::new, |c| x.validate(c)));
        }
        for (n, t) in &self.towers {
            let mut report = crate::profinite::validate_tower(&t.tower);
            for b in &t.bimodules {
                report.extend(b.bimodule.validate());
            }
            push("tower", n, report);
        }
        out
    }

    fn dg_owner(&self, c: &Arc<Coalgebra<F>>) -> Option<&DGCoalgebra<F>> {
        self.dg_coalgebras.values().find(|d| d.coalgebra == *c)
    }

    /// A right comodule by name, translating a left module if needed.
    pub fn right_comodule(&self, name: &str) -> Result<RightComodule<F>> {
        if let Some(m) = self.right_comodules.get(name) {
            return Ok(m.clone());
        }
        lookup(&self.left_modules, name)?.to_comodule()
    }

    pub fn left_comodule(&self, name: &str) -> Result<LeftComodule<F>> {
        if let Some(m) = self.left_comodules.get(name) {
            return Ok(m.clone());
        }
        lookup(&self.right_modules, name)?.to_comodule()
    }

    /// A left module by name, translating a right comodule if needed.
    pub fn left_module(&self, name: &str) -> Result<LeftModule<F>> {
        if let Some(m) = self.left_modules.get(name) {
            return Ok(m.clone());
        }
        lookup(&self.right_comodules, name)?.to_module()
    }

    pub fn right_module(&self, name: &str) -> Result<RightModule<F>> {
        if let Some(m) = self.right_modules.get(name) {
            return Ok(m.clone());
        }
        lookup(&self.left_comodules, name)?.to_module()
    }

    /// Explicit specifications of every object. Ingredients without a name
    /// of their own (tower levels, say) are added under names starting with
    /// `~`; encoding the rebuilt workspace gives the same objects again.
    pub fn encode(&self) -> Objects {
        let mut o = Objects::default();
        for (n, a) in &self.algebras {
            o.algebras.insert(n.clone(), encode_algebra(a));
        }
        for (n, c) in &self.coalgebras {
            o.coalgebras.insert(n.clone(), encode_coalgebra(c));
        }
        let mut e = Encoder { ws: self, o };
        for (n, m) in &self.left_modules {
            let spec = encode_module(Some(e.algebra(&m.algebra, n)), m.dim(), m.action(), &m.grading);
            e.o.left_modules.insert(n.clone(), spec);
        }
        for (n, m) in &self.right_modules {
            let spec = encode_module(Some(e.algebra(&m.algebra, n)), m.dim(), m.action(), &m.grading);
            e.o.right_modules.insert(n.clone(), spec);
        }
        for (n, b) in &self.bimodules {
            let spec = e.bimodule_spec(b, n);
            e.o.bimodules.insert(n.clone(), spec);
        }
        for (n, m) in &self.right_comodules {
            let spec = encode_comodule(Some(e.coalgebra(&m.coalgebra, n)), m.dim(), m.field(), m.coaction_tensor(), &m.grading);
            e.o.right_comodules.insert(n.clone(), spec);
        }
        for (n, m) in &self.left_comodules {
            let spec = encode_comodule(Some(e.coalgebra(&m.coalgebra, n)), m.dim(), m.field(), m.coaction_tensor(), &m.grading);
            e.o.left_comodules.insert(n.clone(), spec);
        }
        for (n, d) in &self.dg_coalgebras {
            let spec = DGCoalgebraSpec { coalgebra: e.coalgebra(&d.coalgebra, n), differential: Some(encode_matrix(&d.differential)) };
            e.o.dg_coalgebras.insert(n.clone(), spec);
        }
        let dg_name = |c: &Arc<Coalgebra<F>>| {
            self.dg_coalgebras.iter().find(|(_, d)| d.coalgebra == *c).map(|(n, _)| n.clone()).unwrap_or_default()
        };
        for (n, d) in &self.dg_right_comodules {
            let m = &d.comodule;
            let named = match self.right_comodules.iter().find(|(_, x)| *x == m) {
                Some((k, _)) => k.clone(),
                None => {
                    let k = format!("~{n}");
                    let spec = encode_comodule(Some(e.coalgebra(&m.coalgebra, n)), m.dim(), m.field(), m.coaction_tensor(), &m.grading);
                    e.o.right_comodules.insert(k.clone(), spec);
                    k
                }
            };
            let spec = DGComoduleSpec { dg_coalgebra: dg_name(&m.coalgebra), comodule: Some(named), builtin: None, differential: Some(encode_matrix(&d.differential)) };
            e.o.dg_right_comodules.insert(n.clone(), spec);
        }
        for (n, d) in &self.dg_left_comodules {
            let m = &d.comodule;
            let named = match self.left_comodules.iter().find(|(_, x)| *x == m) {
                Some((k, _)) => k.clone(),
                None => {
                    let k = format!("~{n}");
                    let spec = encode_comodule(Some(e.coalgebra(&m.coalgebra, n)), m.dim(), m.field(), m.coaction_tensor(), &m.grading);
                    e.o.left_comodules.insert(k.clone(), spec);
                    k
                }
            };
            let spec = DGComoduleSpec { dg_coalgebra: dg_name(&m.coalgebra), comodule: Some(named), builtin: None, differential: Some(encode_matrix(&d.differential)) };
            e.o.dg_left_comodules.insert(n.clone(), spec);
        }
        for (n, t) in &self.towers {
            let levels = t.tower.levels.iter().enumerate().map(|(i, a)| e.algebra(a, &format!("{n}.{i}"))).collect();
            let bimodules = t
                .bimodules
                .iter()
                .enumerate()
                .map(|(i, b)| match self.bimodules.iter().find(|(_, x)| **x == b.bimodule) {
                    Some((k, _)) => k.clone(),
                    None => {
                        let k = format!("~{n}.{i}");
                        let spec = e.bimodule_spec(&b.bimodule, &k);
                        e.o.bimodules.insert(k.clone(), spec);
                        k
                    }
                })
                .collect();
            e.o.towers.insert(
                n.clone(),
                TowerSpec {
                    builtin: None,
                    levels: Some(levels),
                    projections: Some(t.tower.projections.iter().map(encode_matrix).collect()),
                    bimodules: Some(bimodules),
                    inclusions: Some(t.inclusions.iter().map(encode_matrix).collect()),
                },
            );
        }
        e.o
    }
}

struct Encoder<'a, F: Field> {
    ws: &'a Workspace<F>,
    o: Objects,
}

impl<F: Field> Encoder<'_, F> {
    /// The name of an equal algebra, adding `~owner` if there is none.
    fn algebra(&mut self, a: &Arc<Algebra<F>>, owner: &str) -> String {
        if let Some((n, _)) = self.ws.algebras.iter().find(|(_, x)| *x == a) {
            return n.clone();
        }
        let spec = encode_algebra(a);
        if let Some((n, _)) = self.o.algebras.iter().find(|(_, x)| **x == spec) {
            return n.clone();
        }
        let n = format!("~{}", owner.trim_start_matches('~'));
        self.o.algebras.insert(n.clone(), spec);
        n
    }

    fn coalgebra(&mut self, c: &Arc<Coalgebra<F>>, owner: &str) -> String {
        if let Some((n, _)) = self.ws.coalgebras.iter().find(|(_, x)| *x == c) {
            return n.clone();
        }
        let spec = encode_coalgebra(c);
        if let Some((n, _)) = self.o.coalgebras.iter().find(|(_, x)| **x == spec) {
            return n.clone();
        }
        let n = format!("~{}", owner.trim_start_matches('~'));
        self.o.coalgebras.insert(n.clone(), spec);
        n
    }

    fn bimodule_spec(&mut self, b: &Bimodule<F>, owner: &str) -> BimoduleSpec {
        BimoduleSpec {
            algebra: Some(self.algebra(&b.algebra, owner)),
            dim: Some(b.dim()),
            left: Some(b.left_action().iter().map(encode_matrix).collect()),
            right: Some(b.right_action().iter().map(encode_matrix).collect()),
            grading: b.grading.clone(),
            ..Default::default()
        }
    }
}

pub fn encode_algebra<F: Field>(a: &Algebra<F>) -> AlgebraSpec {
    let f = a.field();
    AlgebraSpec {
        dim: Some(a.dim()),
        mul: Some(encode_scalars(f, a.mul_tensor())),
        unit: Some(encode_scalars(f, a.unit())),
        grading: a.grading.clone(),
        augmentation: a.augmentation.as_ref().map(|e| encode_scalars(f, e)),
        labels: a.labels.clone(),
        ..Default::default()
    }
}

pub fn encode_coalgebra<F: Field>(c: &Coalgebra<F>) -> CoalgebraSpec {
    let f = c.field();
    CoalgebraSpec {
        dual_of: None,
        dim: Some(c.dim()),
        comul: Some(encode_scalars(f, c.comul_tensor())),
        counit: Some(encode_scalars(f, c.counit())),
        grading: c.grading.clone(),
        grouplike: c.grouplike.as_ref().map(|g| encode_scalars(f, g)),
        labels: c.labels.clone(),
    }
}

pub fn encode_module<F: Field>(algebra: Option<String>, dim: usize, action: &[Matrix<F>], grading: &Option<Vec<i64>>) -> ModuleSpec {
    ModuleSpec {
        algebra,
        dim: Some(dim),
        action: Some(action.iter().map(encode_matrix).collect()),
        grading: grading.clone(),
        ..Default::default()
    }
}

pub fn encode_comodule<F: Field>(
    coalgebra: Option<String>,
    dim: usize,
    f: &F,
    coaction: &[F::Elem],
    grading: &Option<Vec<i64>>,
) -> ComoduleSpec {
    ComoduleSpec { coalgebra, dim: Some(dim), coaction: Some(encode_scalars(f, coaction)), grading: grading.clone(), ..Default::default() }
}

impl<F: Field> Builder<'_, F> {
    fn enter(&mut self, kind: &'static str, name: &str) -> Result<()> {
        if !self.visiting.insert((kind, name.to_string())) {
            return Err(Error::Schema(format!("{kind} {name:?} refers to itself")));
        }
        Ok(())
    }

    fn leave(&mut self, kind: &'static str, name: &str) {
        self.visiting.remove(&(kind, name.to_string()));
    }

    fn algebra(&mut self, name: &str) -> Result<Arc<Algebra<F>>> {
        if let Some(a) = self.ws.algebras.get(name) {
            return Ok(a.clone());
        }
        let spec = lookup(&self.objects.algebras, name)?.clone();
        self.enter("algebra", name)?;
        let f = self.ws.field.clone();
        let mut a = if let Some(b) = &spec.builtin {
            match b {
                AlgebraBuiltin::Ground => constructors::ground(&f),
                AlgebraBuiltin::TruncatedPolynomial { n, degree } => {
                    if *n == 0 {
                        return Err(Error::Schema(format!("{name}: n must be positive")));
                    }
                    let a = constructors::truncated_polynomial(&f, *n);
                    match degree {
                        Some(d) => a.with_grading((0..*n as i64).map(|i| i * d).collect()),
                        None => a,
                    }
                }
                AlgebraBuiltin::Exterior { degree } => constructors::exterior(&f, *degree),
                AlgebraBuiltin::CyclicGroup { order } if *order >= 1 => constructors::cyclic_group_algebra(&f, *order),
                AlgebraBuiltin::CyclicGroup { .. } => return Err(Error::Schema(format!("{name}: order must be positive"))),
                AlgebraBuiltin::KleinGroup => constructors::klein_group_algebra(&f),
                AlgebraBuiltin::Matrix { n } if *n >= 1 => constructors::matrix_algebra(&f, *n),
                AlgebraBuiltin::Diagonal { n } if *n >= 1 => constructors::diagonal(&f, *n),
                AlgebraBuiltin::Matrix { .. } | AlgebraBuiltin::Diagonal { .. } => {
                    return Err(Error::Schema(format!("{name}: n must be positive")))
                }
                AlgebraBuiltin::A2Path => constructors::a2_path_algebra(&f),
                AlgebraBuiltin::Tensor { left, right } => {
                    let (l, r) = (self.algebra(left)?, self.algebra(right)?);
                    constructors::tensor_algebra(&l, &r)
                }
            }
        } else if let Some(c) = &spec.dual_of {
            let c = self.coalgebra(c)?;
            c.dual_algebra()?
        } else {
            let dim = need(&spec.dim, "dim", name)?;
            let mul = scalars(&f, &need(&spec.mul, "mul", name)?)?;
            let unit = scalars(&f, &need(&spec.unit, "unit", name)?)?;
            schema(name, Algebra::new(&f, dim, mul, unit))?
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), a.dim())?;
            a = a.with_grading(g.clone());
        }
        if let Some(e) = &spec.augmentation {
            check_len(name, "augmentation", e.len(), a.dim())?;
            a = a.with_augmentation(scalars(&f, e)?);
        }
        if let Some(l) = &spec.labels {
            check_len(name, "labels", l.len(), a.dim())?;
            a = a.with_labels(l.clone());
        }
        let a = Arc::new(a);
        self.ws.algebras.insert(name.to_string(), a.clone());
        self.leave("algebra", name);
        Ok(a)
    }

    fn coalgebra(&mut self, name: &str) -> Result<Arc<Coalgebra<F>>> {
        if let Some(c) = self.ws.coalgebras.get(name) {
            return Ok(c.clone());
        }
        let spec = lookup(&self.objects.coalgebras, name)?.clone();
        self.enter("coalgebra", name)?;
        let f = self.ws.field.clone();
        let mut c = if let Some(a) = &spec.dual_of {
            let a = self.algebra(a)?;
            a.dual_coalgebra()?
        } else {
            let dim = need(&spec.dim, "dim", name)?;
            let comul = scalars(&f, &need(&spec.comul, "comul", name)?)?;
            let counit = scalars(&f, &need(&spec.counit, "counit", name)?)?;
            schema(name, Coalgebra::new(&f, dim, comul, counit))?
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), c.dim())?;
            c = c.with_grading(g.clone());
        }
        if let Some(g) = &spec.grouplike {
            check_len(name, "grouplike", g.len(), c.dim())?;
            c.grouplike = Some(scalars(&f, g)?);
        } else if c.grouplike.is_none() {
            c.grouplike = first_grouplike(&c);
        }
        if let Some(l) = &spec.labels {
            check_len(name, "labels", l.len(), c.dim())?;
            c = c.with_labels(l.clone());
        }
        let c = Arc::new(c);
        self.ws.coalgebras.insert(name.to_string(), c.clone());
        self.leave("coalgebra", name);
        Ok(c)
    }

    fn actions(&self, name: &str, mats: &[Rows], count: usize, dim: usize) -> Result<Vec<Matrix<F>>> {
        check_len(name, "action", mats.len(), count)?;
        mats.iter().map(|m| matrix_sized(&self.ws.field, m, dim, dim)).collect()
    }

    fn left_module(&mut self, name: &str) -> Result<LeftModule<F>> {
        if let Some(m) = self.ws.left_modules.get(name) {
            return Ok(m.clone());
        }
        let spec = lookup(&self.objects.left_modules, name)?.clone();
        self.enter("left module", name)?;
        let mut m = if let Some(c) = &spec.from_comodule {
            self.right_comodule(c)?.to_module()?
        } else {
            let a = self.algebra(&need(&spec.algebra, "algebra", name)?)?;
            match spec.builtin {
                Some(ModuleBuiltin::Trivial) => schema(name, LeftModule::trivial(a))?,
                Some(ModuleBuiltin::Regular) => LeftModule::regular(a),
                Some(ModuleBuiltin::Column) => schema(name, constructors::column_module(a.clone(), matrix_size(name, a.dim())?))?,
                Some(ModuleBuiltin::Row) => return Err(Error::Schema(format!("{name}: row is not a left module"))),
                None if spec.character.is_some() => {
                    let chi = scalars(&self.ws.field, spec.character.as_ref().unwrap())?;
                    check_len(name, "character", chi.len(), a.dim())?;
                    schema(name, constructors::character_module(a, &chi))?
                }
                None => {
                    let dim = need(&spec.dim, "dim", name)?;
                    let action = self.actions(name, &need(&spec.action, "action", name)?, a.dim(), dim)?;
                    schema(name, LeftModule::new(a, dim, action))?
                }
            }
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), m.dim())?;
            m = m.with_grading(g.clone());
        }
        self.ws.left_modules.insert(name.to_string(), m.clone());
        self.leave("left module", name);
        Ok(m)
    }

    fn right_module(&mut self, name: &str) -> Result<RightModule<F>> {
        if let Some(m) = self.ws.right_modules.get(name) {
            return Ok(m.clone());
        }
        let spec = lookup(&self.objects.right_modules, name)?.clone();
        self.enter("right module", name)?;
        let mut m = if let Some(c) = &spec.from_comodule {
            self.left_comodule(c)?.to_module()?
        } else {
            let a = self.algebra(&need(&spec.algebra, "algebra", name)?)?;
            match spec.builtin {
                Some(ModuleBuiltin::Trivial) => schema(name, RightModule::trivial(a))?,
                Some(ModuleBuiltin::Regular) => RightModule::regular(a),
                Some(ModuleBuiltin::Row) => schema(name, constructors::row_module(a.clone(), matrix_size(name, a.dim())?))?,
                Some(ModuleBuiltin::Column) => return Err(Error::Schema(format!("{name}: column is not a right module"))),
                None if spec.character.is_some() => {
                    let chi = scalars(&self.ws.field, spec.character.as_ref().unwrap())?;
                    check_len(name, "character", chi.len(), a.dim())?;
                    schema(name, constructors::right_character_module(a, &chi))?
                }
                None => {
                    let dim = need(&spec.dim, "dim", name)?;
                    let action = self.actions(name, &need(&spec.action, "action", name)?, a.dim(), dim)?;
                    schema(name, RightModule::new(a, dim, action))?
                }
            }
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), m.dim())?;
            m = m.with_grading(g.clone());
        }
        self.ws.right_modules.insert(name.to_string(), m.clone());
        self.leave("right module", name);
        Ok(m)
    }

    fn bimodule(&mut self, name: &str) -> Result<Bimodule<F>> {
        if let Some(b) = self.ws.bimodules.get(name) {
            return Ok(b.clone());
        }
        let spec = lookup(&self.objects.bimodules, name)?.clone();
        self.enter("bimodule", name)?;
        let mut b = if let Some((l, r)) = &spec.tensor {
            let (l, r) = (self.left_module(l)?, self.right_module(r)?);
            tensor_bimodule(&l, &r)?
        } else {
            let a = self.algebra(&need(&spec.algebra, "algebra", name)?)?;
            match spec.builtin {
                Some(ModuleBuiltin::Regular) => Bimodule::regular(a),
                Some(ModuleBuiltin::Column | ModuleBuiltin::Row) => {
                    return Err(Error::Schema(format!("{name}: no such bimodule builtin")))
                }
                Some(ModuleBuiltin::Trivial) => {
                    let k = schema(name, LeftModule::trivial(a.clone()))?;
                    schema(name, Bimodule::new(a, 1, k.action().to_vec(), k.action().to_vec()))?
                }
                None => {
                    let dim = need(&spec.dim, "dim", name)?;
                    let left = self.actions(name, &need(&spec.left, "left", name)?, a.dim(), dim)?;
                    let right = self.actions(name, &need(&spec.right, "right", name)?, a.dim(), dim)?;
                    schema(name, Bimodule::new(a, dim, left, right))?
                }
            }
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), b.dim())?;
            b = b.with_grading(g.clone());
        }
        self.ws.bimodules.insert(name.to_string(), b.clone());
        self.leave("bimodule", name);
        Ok(b)
    }

    fn right_comodule(&mut self, name: &str) -> Result<RightComodule<F>> {
        if let Some(m) = self.ws.right_comodules.get(name) {
            return Ok(m.clone());
        }
        let spec = lookup(&self.objects.right_comodules, name)?.clone();
        self.enter("right comodule", name)?;
        let mut m = if let Some(x) = &spec.from_module {
            let module = self.left_module(x)?;
            let m = module.to_comodule()?;
            self.share_coalgebra_r(m)
        } else {
            let c = self.coalgebra(&need(&spec.coalgebra, "coalgebra", name)?)?;
            match spec.builtin {
                Some(ModuleBuiltin::Trivial) => schema(name, RightComodule::trivial(c))?,
                Some(ModuleBuiltin::Regular) => RightComodule::regular(c),
                Some(ModuleBuiltin::Column | ModuleBuiltin::Row) => {
                    return Err(Error::Schema(format!("{name}: no such comodule builtin")))
                }
                None => {
                    let dim = need(&spec.dim, "dim", name)?;
                    let coaction = scalars(&self.ws.field, &need(&spec.coaction, "coaction", name)?)?;
                    schema(name, RightComodule::new(c, dim, coaction))?
                }
            }
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), m.dim())?;
            m = m.with_grading(g.clone());
        }
        self.ws.right_comodules.insert(name.to_string(), m.clone());
        self.leave("right comodule", name);
        Ok(m)
    }

    fn left_comodule(&mut self, name: &str) -> Result<LeftComodule<F>> {
        if let Some(m) = self.ws.left_comodules.get(name) {
            return Ok(m.clone());
        }
        let spec = lookup(&self.objects.left_comodules, name)?.clone();
        self.enter("left comodule", name)?;
        let mut m = if let Some(x) = &spec.from_module {
            let module = self.right_module(x)?;
            let m = module.to_comodule()?;
            self.share_coalgebra_l(m)
        } else {
            let c = self.coalgebra(&need(&spec.coalgebra, "coalgebra", name)?)?;
            match spec.builtin {
                Some(ModuleBuiltin::Trivial) => schema(name, LeftComodule::trivial(c))?,
                Some(ModuleBuiltin::Regular) => LeftComodule::regular(c),
                Some(ModuleBuiltin::Column | ModuleBuiltin::Row) => {
                    return Err(Error::Schema(format!("{name}: no such comodule builtin")))
                }
                None => {
                    let dim = need(&spec.dim, "dim", name)?;
                    let coaction = scalars(&self.ws.field, &need(&spec.coaction, "coaction", name)?)?;
                    schema(name, LeftComodule::new(c, dim, coaction))?
                }
            }
        };
        if let Some(g) = &spec.grading {
            check_len(name, "grading", g.len(), m.dim())?;
            m = m.with_grading(g.clone());
        }
        self.ws.left_comodules.insert(name.to_string(), m.clone());
        self.leave("left comodule", name);
        Ok(m)
    }

    /// Points a translated comodule at an equal named coalgebra, if any, so
    /// that it can be paired with comodules declared over that name.
    fn share_coalgebra_r(&self, mut m: RightComodule<F>) -> RightComodule<F> {
        if let Some(c) = self.ws.coalgebras.values().find(|c| **c == m.coalgebra) {
            m.coalgebra = c.clone();
        }
        m
    }

    fn share_coalgebra_l(&self, mut m: LeftComodule<F>) -> LeftComodule<F> {
        if let Some(c) = self.ws.coalgebras.values().find(|c| **c == m.coalgebra) {
            m.coalgebra = c.clone();
        }
        m
    }

    fn dg_coalgebra(&mut self, name: &str) -> Result<DGCoalgebra<F>> {
        if let Some(d) = self.ws.dg_coalgebras.get(name) {
            return Ok(d.clone());
        }
        let spec = lookup(&self.objects.dg_coalgebras, name)?.clone();
        let c = self.coalgebra(&spec.coalgebra)?;
        let d = match &spec.differential {
            Some(rows) => {
                let d = matrix_sized(&self.ws.field, rows, c.dim(), c.dim())?;
                schema(name, DGCoalgebra::new(c, d))?
            }
            None => DGCoalgebra::formal(c),
        };
        self.ws.dg_coalgebras.insert(name.to_string(), d.clone());
        Ok(d)
    }

    fn dg_right_comodule(&mut self, name: &str) -> Result<DGRightComodule<F>> {
        let spec = lookup(&self.objects.dg_right_comodules, name)?.clone();
        let c = self.dg_coalgebra(&spec.dg_coalgebra)?;
        let (comodule, default_d) = match (&spec.comodule, spec.builtin) {
            (Some(n), _) => (self.right_comodule(n)?, None),
            (None, Some(ModuleBuiltin::Trivial)) => (schema(name, RightComodule::trivial(c.coalgebra.clone()))?, None),
            (None, Some(ModuleBuiltin::Regular)) => (RightComodule::regular(c.coalgebra.clone()), Some(c.differential.clone())),
            (None, Some(ModuleBuiltin::Column | ModuleBuiltin::Row)) => {
                return Err(Error::Schema(format!("{name}: no such comodule builtin")))
            }
            (None, None) => return Err(Error::Schema(format!("{name}: needs \"comodule\" or \"builtin\""))),
        };
        let d = self.dg_differential(name, &spec, comodule.dim(), default_d)?;
        let m = schema(name, DGRightComodule::new(comodule, d))?;
        self.ws.dg_right_comodules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn dg_left_comodule(&mut self, name: &str) -> Result<DGLeftComodule<F>> {
        let spec = lookup(&self.objects.dg_left_comodules, name)?.clone();
        let c = self.dg_coalgebra(&spec.dg_coalgebra)?;
        let (comodule, default_d) = match (&spec.comodule, spec.builtin) {
            (Some(n), _) => (self.left_comodule(n)?, None),
            (None, Some(ModuleBuiltin::Trivial)) => (schema(name, LeftComodule::trivial(c.coalgebra.clone()))?, None),
            (None, Some(ModuleBuiltin::Regular)) => (LeftComodule::regular(c.coalgebra.clone()), Some(c.differential.clone())),
            (None, Some(ModuleBuiltin::Column | ModuleBuiltin::Row)) => {
                return Err(Error::Schema(format!("{name}: no such comodule builtin")))
            }
            (None, None) => return Err(Error::Schema(format!("{name}: needs \"comodule\" or \"builtin\""))),
        };
        let d = self.dg_differential(name, &spec, comodule.dim(), default_d)?;
        let m = schema(name, DGLeftComodule::new(comodule, d))?;
        self.ws.dg_left_comodules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn dg_differential(&self, name: &str, spec: &DGComoduleSpec, dim: usize, default: Option<Matrix<F>>) -> Result<Matrix<F>> {
        let _ = name;
        match &spec.differential {
            Some(rows) => matrix_sized(&self.ws.field, rows, dim, dim),
            None => Ok(default.unwrap_or_else(|| Matrix::zeros(&self.ws.field, dim, dim))),
        }
    }

    fn tower(&mut self, name: &str) -> Result<TowerData<F>> {
        let spec = lookup(&self.objects.towers, name)?.clone();
        let f = self.ws.field.clone();
        let tower = match &spec.builtin {
            Some(TowerBuiltin::GroupAlgebra { p, depth }) => schema(name, group_algebra_tower(&f, *p, *depth))?,
            None => {
                let levels = need(&spec.levels, "levels", name)?
                    .iter()
                    .map(|l| self.algebra(l))
                    .collect::<Result<Vec<_>>>()?;
                let projections = spec.projections.clone().unwrap_or_default();
                check_len(name, "projections", projections.len(), levels.len().saturating_sub(1))?;
                let projections = projections
                    .iter()
                    .enumerate()
                    .map(|(i, p)| matrix_sized(&f, p, levels[i].dim(), levels[i + 1].dim()))
                    .collect::<Result<Vec<_>>>()?;
                schema(name, Tower::new(levels, projections))?
            }
        };
        let bimodules = match &spec.bimodules {
            Some(names) => {
                check_len(name, "bimodules", names.len(), tower.depth())?;
                names
                    .iter()
                    .enumerate()
                    .map(|(i, n)| {
                        let b = self.bimodule(n)?;
                        // Declared over an equal algebra; share the level's.
                        let b = Bimodule::new(tower.levels[i].clone(), b.dim(), b.left_action().to_vec(), b.right_action().to_vec())
                            .map(|x| match &b.grading {
                                Some(g) => x.with_grading(g.clone()),
                                None => x,
                            });
                        schema(n, b).and_then(|b| {
                            if *b.algebra != *self.ws.bimodules[n].algebra {
                                return Err(Error::Mismatch(format!("algebras (bimodule {n:?} is not over level {i})")));
                            }
                            LevelBimodule::new(&tower, i, b)
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            }
            None => (0..tower.depth())
                .map(|i| epsilon_bimodule(&tower, i, &schema(name, LeftModule::trivial(tower.levels[i].clone()))?))
                .collect::<Result<Vec<_>>>()?,
        };
        let inclusions = match &spec.inclusions {
            Some(rows) => {
                check_len(name, "inclusions", rows.len(), tower.depth() - 1)?;
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| matrix_sized(&f, r, bimodules[i + 1].bimodule.dim(), bimodules[i].bimodule.dim()))
                    .collect::<Result<Vec<_>>>()?
            }
            None => (1..tower.depth())
                .map(|i| {
                    let (lo, hi) = (bimodules[i - 1].bimodule.dim(), bimodules[i].bimodule.dim());
                    if lo != hi {
                        return Err(Error::Schema(format!("{name}: inclusions are required when level dimensions differ")));
                    }
                    Ok(Matrix::identity(&f, lo))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let t = TowerData { tower, bimodules, inclusions };
        self.ws.towers.insert(name.to_string(), t.clone());
        Ok(t)
    }
}

/// The first basis element `c` with `Δc = c ⊗ c` and `ε(c) = 1`.
fn first_grouplike<F: Field>(c: &Coalgebra<F>) -> Option<Vec<F::Elem>> {
    let f = c.field();
    let n = c.dim();
    (0..n)
        .find(|&k| {
            f.is_one(&c.counit()[k])
                && (0..n * n).all(|ij| {
                    let x = &c.comul_tensor()[k * n * n + ij];
                    if ij == k * n + k { f.is_one(x) } else { f.is_zero(x) }
                })
        })
        .map(|k| (0..n).map(|i| if i == k { f.one() } else { f.zero() }).collect())
}

fn matrix_size(name: &str, dim: usize) -> Result<usize> {
    let n = (0..=dim).find(|n| n * n >= dim).unwrap_or(0);
    if n * n != dim {
        return Err(Error::Schema(format!("{name}: an algebra of dimension {dim} is not a full matrix algebra")));
    }
    Ok(n)
}

fn check_len(name: &str, what: &str, got: usize, want: usize) -> Result<()> {
    if got != want {
        return Err(Error::Schema(format!("{name}: {what} has {got} entries, expected {want}")));
    }
    Ok(())
}
