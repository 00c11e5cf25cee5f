//! Exact ordinary and symmetric cohomology of finite groups with finitely
//! generated abelian coefficients.
//!
//! The crate is layered bottom-up:
//!
//! - [`group`]: groups by multiplication table, subgroups, cosets, double cosets;
//! - [`zlinalg`]: Hermite/Smith normal forms and lattice operations over `Z`;
//! - [`gmodule`]: coefficient modules `⊕ Z/dᵢ` with a matrix action;
//! - [`cochain`]: bar cochains, the differential, the symmetric-group action
//!   on cochains, and the invariant (symmetric) subcomplex;
//! - [`cohomology`]: `Hⁿ`, `HSⁿ`, class equality and the natural map `HSⁿ → Hⁿ`;
//! - [`maps`]: restriction, conjugation and transfer;
//! - [`mackey`]: mechanical verification of the Mackey functor axioms;
//! - [`catalog`] and [`report`]: the JSON input catalog and report output
//!   used by the `symcoh` binary.

pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod error;
pub mod gmodule;
pub mod group;
pub mod mackey;
pub mod maps;
pub mod report;
pub mod zlinalg;

pub use error::{Error, Result};
