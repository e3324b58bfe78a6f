//! Exact computational homological algebra for coalgebras and their dual
//! algebras.
//!
//! The crate realizes the dictionary between right comodules over a
//! coalgebra `C` and left modules over the dual algebra `A = DC`, and
//! computes both sides of the comparison
//!
//! ```text
//! Cotor_C^*(M, N)  ≅  H^*(A, M ⊗ N)
//! ```
//!
//! independently: the left side from the cobar complex of the comodules,
//! the right side from the Hochschild bar complex of the bimodule `M ⊗ N`.
//! Graded, differential-graded and finite-tower (profinite) variants are
//! layered on top of the same engine.
//!
//! All arithmetic is exact, over `F_p` or `Q`.

pub mod audit;
pub mod error;
pub mod field;
pub mod matrix;
pub mod complex;
pub mod validate;
pub mod algebra;
pub mod module;
pub mod constructors;
pub mod homalg;
pub mod graded;
pub mod dg;
pub mod profinite;
pub mod io;

pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use matrix::Matrix;
pub use complex::CochainComplex;
pub use algebra::{Algebra, Coalgebra};
pub use module::{tensor_bimodule, Bimodule, LeftComodule, LeftModule, RightComodule, RightModule};
pub use graded::{GradedTable, GradedWindow};
pub use dg::{DGAlgebra, DGBimodule, DGCoalgebra, DGLeftComodule, DGLeftModule, DGRightComodule, DGRightModule};
pub use profinite::{LevelBimodule, Tower};
