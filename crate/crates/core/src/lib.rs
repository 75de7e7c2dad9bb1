//! KO-theory of complex cellular varieties from their mod-2 cohomology.
//!
//! A space is described by a presentation of its mod-2 cohomology ring
//! (generators in even degrees, homogeneous relations), the values of Sq² on
//! the generators, and named degree-2 twist classes. The free part of KO is
//! read off the Betti numbers; the 2-torsion comes from the cohomology of the
//! differential `Sq² + c`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod dga_cohomology;
pub mod error;
pub mod f2linalg;
pub mod graded_algebra;
pub mod ko_assembler;
pub mod polynomial;
pub mod steenrod;

pub use catalog::{expected_table, SpaceData, SpaceId};
pub use error::{Error, Result};
pub use graded_algebra::{Element, Generator, Presentation};
pub use ko_assembler::{ko_table, render, Convention, Degeneration, Group, KoTable};
pub use polynomial::{Monomial, Polynomial};
pub use steenrod::{Differential, SqAction};
