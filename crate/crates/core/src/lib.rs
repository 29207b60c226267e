//! Explicit finite groups of Lie type `SL_n(q)` / `PSL_n(q)` and exact
//! product-set experiments on their unipotent Sylow subgroups.
//!
//! Layers, bottom up: [`gf`] field arithmetic, [`lietype`] order formulas,
//! [`matgroup`] packed matrices and canonical subgroups, [`bruhat`] cell
//! decomposition, [`setprod`] the product-set engine, and [`experiments`]
//! which turns each structural statement into a seeded, reproducible check.

pub mod bruhat;
pub mod error;
pub mod exec;
pub mod experiments;
pub mod gf;
pub mod lietype;
pub mod matgroup;
pub mod rng;
pub mod setprod;

pub use error::{Error, Result};
pub use exec::Exec;
pub use gf::{FieldElem, FieldSpec};
pub use lietype::{params_for, Family, LieParams};
pub use matgroup::{GroupSpec, Mat, Perm, SubgroupBase, SubgroupId, Variant};
pub use rng::TrialRng;
pub use setprod::{ElemSet, Engine};
