//! Finite towers `A_0 ← A_1 ← … ← A_r` of algebras with surjective
//! projections, standing in for a profinite algebra. Continuous Hochschild
//! cohomology is the colimit of the level cohomologies along inflation; on a
//! finite tower we report every level, every induced map, and the ranks of
//! the maps into the top level.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::constructors;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::homalg::{bar_complex, cotor_dims, hochschild_differential};
use crate::matrix::Matrix;
use crate::module::{tensor_bimodule, Bimodule, LeftModule, RightModule};
use crate::validate::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tower<F: Field> {
    pub levels: Vec<Arc<Algebra<F>>>,
    /// `projections[i]: A_{i+1} → A_i`, a `dim A_i × dim A_{i+1}` matrix.
    pub projections: Vec<Matrix<F>>,
}

impl<F: Field> Tower<F> {
    pub fn new(levels: Vec<Arc<Algebra<F>>>, projections: Vec<Matrix<F>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Input("a tower needs at least one level".into()));
        }
        if projections.len() + 1 != levels.len() {
            return Err(Error::Dimension(format!(
                "{} levels need {} projections, got {}",
                levels.len(),
                levels.len() - 1,
                projections.len()
            )));
        }
        for (i, p) in projections.iter().enumerate() {
            if p.rows() != levels[i].dim() || p.cols() != levels[i + 1].dim() {
                return Err(Error::Dimension(format!(
                    "projection {i} must be {}x{}, got {}x{}",
                    levels[i].dim(),
                    levels[i + 1].dim(),
                    p.rows(),
                    p.cols()
                )));
            }
        }
        Ok(Tower { levels, projections })
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn field(&self) -> &F {
        self.levels[0].field()
    }

    /// The composite projection `A_to → A_from` for `from ≤ to`.
    pub fn composite(&self, from: usize, to: usize) -> Matrix<F> {
        assert!(from <= to && to < self.depth());
        (from..to).fold(Matrix::identity(self.field(), self.levels[from].dim()), |acc, i| {
            acc.mul(&self.projections[i]).expect("projection shapes checked")
        })
    }
}

/// Checks every level algebra and that every projection is surjective,
/// unital and multiplicative. Violations name the level.
pub fn validate_tower<F: Field>(t: &Tower<F>) -> Report {
    let mut report = Report::new();
    for (i, a) in t.levels.iter().enumerate() {
        if !a.validate().is_valid() {
            report.push("level algebra", &[i], a.validate().to_string());
        }
    }
    for (i, p) in t.projections.iter().enumerate() {
        let (low, high) = (&t.levels[i], &t.levels[i + 1]);
        if p.rank() != low.dim() {
            report.push("surjective", &[i], "projection does not have full row rank");
        }
        if p.mul_vec(high.unit()).expect("shapes") != low.unit() {
            report.push("unital", &[i], "projection does not preserve the unit");
        }
        for j in 0..high.dim() {
            for k in 0..high.dim() {
                let lhs = p.mul_vec(&high.product(&high.basis_vector(j), &high.basis_vector(k))).expect("shapes");
                let rhs = low.product(&p.column(j), &p.column(k));
                if lhs != rhs {
                    report.push("multiplicative", &[i, j, k], "p(e_j e_k) != p(e_j) p(e_k)");
                }
            }
        }
    }
    report
}

/// `k[Z/p^i]` for `i = 0..depth`, in the group-element basis, with the
/// reduction maps `g^j ↦ g^{j mod p^i}`.
pub fn group_algebra_tower<F: Field>(f: &F, p: usize, depth: usize) -> Result<Tower<F>> {
    if depth == 0 || p < 2 {
        return Err(Error::Input("a group algebra tower needs p >= 2 and depth >= 1".into()));
    }
    let orders: Vec<usize> = (0..depth).map(|i| p.pow(i as u32)).collect();
    let levels = orders.iter().map(|&n| Arc::new(constructors::cyclic_group_algebra(f, n))).collect();
    let projections = orders
        .windows(2)
        .map(|w| Matrix::from_fn(f, w[0], w[1], |r, c| if c % w[0] == r { f.one() } else { f.zero() }))
        .collect();
    Tower::new(levels, projections)
}

/// The same tower over `F_p` in the basis `u^j`, `u = g − 1`, where
/// `k[Z/p^i] = k[u]/u^{p^i}` and the projections truncate.
pub fn nilpotent_group_algebra_tower<F: Field>(f: &F, p: usize, depth: usize) -> Result<Tower<F>> {
    if f.descriptor() != (FieldDescriptor::Fp { p: p as u32 }) {
        return Err(Error::Input(format!("the nilpotent presentation needs the field F_{p}")));
    }
    if depth == 0 {
        return Err(Error::Input("depth must be at least 1".into()));
    }
    let orders: Vec<usize> = (0..depth).map(|i| p.pow(i as u32)).collect();
    let levels = orders.iter().map(|&n| Arc::new(constructors::truncated_polynomial(f, n))).collect();
    let projections = orders
        .windows(2)
        .map(|w| Matrix::from_fn(f, w[0], w[1], |r, c| if r == c { f.one() } else { f.zero() }))
        .collect();
    Tower::new(levels, projections)
}

/// A bimodule declared at one level of a tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelBimodule<F: Field> {
    pub level: usize,
    pub bimodule: Bimodule<F>,
}

impl<F: Field> LevelBimodule<F> {
    pub fn new(t: &Tower<F>, level: usize, bimodule: Bimodule<F>) -> Result<Self> {
        if level >= t.depth() {
            return Err(Error::Input(format!("level {level} is beyond the tower depth {}", t.depth())));
        }
        if *bimodule.algebra != *t.levels[level] {
            return Err(Error::Mismatch(format!("algebras (bimodule is not over level {level})")));
        }
        bimodule.ensure_valid()?;
        Ok(LevelBimodule { level, bimodule })
    }
}

/// `M_ε`: left action from `m`, right action through the augmentation.
pub fn epsilon_bimodule<F: Field>(t: &Tower<F>, level: usize, m: &LeftModule<F>) -> Result<LevelBimodule<F>> {
    m.ensure_valid()?;
    let a = &m.algebra;
    let eps = a
        .augmentation
        .as_ref()
        .ok_or_else(|| Error::Input("level algebra has no designated augmentation".into()))?;
    let id = Matrix::identity(m.field(), m.dim());
    let right = eps.iter().map(|e| id.scale(e)).collect();
    let mut b = Bimodule::new(a.clone(), m.dim(), m.action().to_vec(), right)?;
    if let Some(g) = &m.grading {
        b = b.with_grading(g.clone());
    }
    LevelBimodule::new(t, level, b)
}

/// `f ↦ ι ∘ f ∘ P^{⊗n}` from `C^n(A_α, B^α)` to `C^n(A_γ, B^γ)`, with `P`
/// the composite projection. Cochain coordinates are `lex(J) · dim B + b`,
/// so the matrix is `(Pᵀ)^{⊗n} ⊗ ι`. The chain-map property against the
/// Hochschild differentials is checked.
pub fn induced_cochain_map<F: Field>(
    t: &Tower<F>,
    low: &LevelBimodule<F>,
    high: &LevelBimodule<F>,
    inclusion: &Matrix<F>,
    n: usize,
) -> Result<Matrix<F>> {
    let (alpha, gamma) = (low.level, high.level);
    if alpha > gamma {
        return Err(Error::Input(format!("cannot map level {alpha} into the lower level {gamma}")));
    }
    let (bl, bh) = (&low.bimodule, &high.bimodule);
    if inclusion.rows() != bh.dim() || inclusion.cols() != bl.dim() {
        return Err(Error::Dimension(format!("inclusion must be {}x{}", bh.dim(), bl.dim())));
    }
    if inclusion.rank() != bl.dim() {
        return Err(Error::Input("inclusion is not injective".into()));
    }
    let p = t.composite(alpha, gamma);
    check_intertwines(&p, bl, bh, inclusion)?;
    let map = cochain_map(&p, inclusion, n);
    let next = cochain_map(&p, inclusion, n + 1);
    let lhs = hochschild_differential(bh, n).mul(&map)?;
    let rhs = next.mul(&hochschild_differential(bl, n))?;
    assert_eq!(lhs, rhs, "induced cochain map does not commute with the differentials");
    Ok(map)
}

fn cochain_map<F: Field>(p: &Matrix<F>, inclusion: &Matrix<F>, n: usize) -> Matrix<F> {
    let pt = p.transpose();
    let mut q = Matrix::identity(p.field(), 1);
    for _ in 0..n {
        q = q.kron(&pt);
    }
    q.kron(inclusion)
}

/// `a · ι(b) = ι(P(a) · b)` on both sides, for every basis element `a`.
fn check_intertwines<F: Field>(p: &Matrix<F>, bl: &Bimodule<F>, bh: &Bimodule<F>, inclusion: &Matrix<F>) -> Result<()> {
    let a = &bl.algebra;
    for (side, high, low) in [("left", bh.left_action(), bl.left_action()), ("right", bh.right_action(), bl.right_action())] {
        for (i, act) in high.iter().enumerate() {
            let pushed = a.combine(&p.column(i), low, bl.dim());
            if act.mul(inclusion)? != inclusion.mul(&pushed)? {
                return Err(Error::Input(format!("inclusion does not intertwine the {side} action of basis element {i}")));
            }
        }
    }
    Ok(())
}

/// Cohomology in one degree across the tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeColimit {
    pub degree: usize,
    pub level_dims: Vec<usize>,
    /// `stable_ranks[i]` = rank of `H^n(level i) → H^n(top level)`.
    pub stable_ranks: Vec<usize>,
    /// The rank from the penultimate level into the top (the top dimension
    /// for a single-level tower): the best finite-tower estimate of the
    /// colimit.
    pub stable: usize,
    /// Per-level Cotor over the dual coalgebras, when the bimodules are
    /// tensor products.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level_cotor: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct ColimitReport<F: Field> {
    pub degrees: Vec<DegreeColimit>,
    /// `induced[n][(i, j)]`: matrix of `H^n(level i) → H^n(level j)` for
    /// `i < j`, in the representative bases.
    pub induced: Vec<Vec<((usize, usize), Matrix<F>)>>,
}

impl<F: Field> ColimitReport<F> {
    pub fn stable_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.stable).collect()
    }

    pub fn level_dims(&self, n: usize) -> &[usize] {
        &self.degrees[n].level_dims
    }

    pub fn map(&self, n: usize, from: usize, to: usize) -> Option<&Matrix<F>> {
        self.induced[n].iter().find(|((i, j), _)| (*i, *j) == (from, to)).map(|(_, m)| m)
    }
}

/// Level cohomology, all induced maps between levels, and the ranks into
/// the top. `inclusions[i]: B^i → B^{i+1}`. Functoriality of the induced
/// maps is asserted.
pub fn colimit_report<F: Field>(
    t: &Tower<F>,
    bimodules: &[LevelBimodule<F>],
    inclusions: &[Matrix<F>],
    n_max: usize,
) -> Result<ColimitReport<F>> {
    let report = validate_tower(t);
    if !report.is_valid() {
        return Err(Error::Invalid { what: "tower".into(), report });
    }
    let r = t.depth();
    if bimodules.len() != r || inclusions.len() + 1 != r {
        return Err(Error::Input(format!("need {r} level bimodules and {} inclusions", r - 1)));
    }
    for (i, b) in bimodules.iter().enumerate() {
        if b.level != i {
            return Err(Error::Input(format!("bimodule {i} is declared at level {}", b.level)));
        }
    }
    let complexes = bimodules.iter().map(|b| bar_complex(&b.bimodule, n_max)).collect::<Result<Vec<_>>>()?;
    // Composite inclusions B^i → B^j.
    let inclusion = |i: usize, j: usize| -> Result<Matrix<F>> {
        (i..j).try_fold(Matrix::identity(t.field(), bimodules[i].bimodule.dim()), |acc, k| inclusions[k].mul(&acc))
    };

    let mut degrees = Vec::new();
    let mut induced = Vec::new();
    for n in 0..=n_max {
        let coh = complexes.iter().map(|c| c.complex.cohomology(n as i64)).collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let chain = induced_cochain_map(t, &bimodules[i], &bimodules[j], &inclusion(i, j)?, n)?;
                maps.push(((i, j), coh[i].induced(&chain, &coh[j])?));
            }
        }
        let get = |i: usize, j: usize| maps.iter().find(|((a, b), _)| (*a, *b) == (i, j)).map(|(_, m)| m);
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    let composed = get(j, k).unwrap().mul(get(i, j).unwrap())?;
                    assert_eq!(&composed, get(i, k).unwrap(), "induced maps are not functorial");
                }
            }
        }
        let level_dims: Vec<usize> = coh.iter().map(|h| h.dim()).collect();
        let stable_ranks: Vec<usize> =
            (0..r).map(|i| if i + 1 == r { level_dims[i] } else { get(i, r - 1).unwrap().rank() }).collect();
        let stable = if r == 1 { level_dims[0] } else { stable_ranks[r - 2] };
        degrees.push(DegreeColimit { degree: n, level_dims, stable_ranks, stable, level_cotor: None });
        induced.push(maps);
    }
    Ok(ColimitReport { degrees, induced })
}

/// Colimit report for bimodules `M^i ⊗ N^i`, with Cotor over the dual
/// coalgebra of every level reported alongside.
pub fn colimit_report_from_modules<F: Field>(
    t: &Tower<F>,
    modules: &[(LeftModule<F>, RightModule<F>)],
    inclusions: &[Matrix<F>],
    n_max: usize,
) -> Result<ColimitReport<F>> {
    let bimodules = modules
        .iter()
        .enumerate()
        .map(|(i, (m, n))| LevelBimodule::new(t, i, tensor_bimodule(m, n)?))
        .collect::<Result<Vec<_>>>()?;
    let mut report = colimit_report(t, &bimodules, inclusions, n_max)?;
    let cotor = modules
        .iter()
        .map(|(m, n)| cotor_dims(&m.to_comodule()?, &n.to_comodule()?, n_max))
        .collect::<Result<Vec<_>>>()?;
    for (n, d) in report.degrees.iter_mut().enumerate() {
        d.level_cotor = Some(cotor.iter().map(|c| c[n]).collect());
    }
    Ok(report)
}
