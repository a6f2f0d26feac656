//! Workbench for small triangulated manifolds stored as pure simplicial complexes.
//!
//! The crate is organised around [`Complex`], a canonical facet list. Everything
//! else is a pure function of complexes:
//!
//! - [`homology`]: integral and mod-p simplicial homology through Smith normal form,
//! - [`flip`]: bistellar moves and a stochastic reducer that searches for small
//!   triangulations,
//! - [`construct`]: boundary simplices, joins, staircase products, connected sums,
//!   stacking and the twisted sphere bundle over the circle,
//! - [`iso`]: Altshuler–Steinberg determinants, canonical labelling, isomorphism
//!   and automorphism groups,
//! - [`bounds`]: lower and upper bounds on vertex and face numbers,
//! - [`census`]: isomorph-free enumeration of triangulated surfaces and 2-spheres,
//! - [`io`]: the `.tri` facet file format, the bundled catalog and the
//!   straight-line realization checker.
//!
//! Data-parallel loops (multi-seed searches, vertex-link checks, census branches)
//! run on rayon when the `parallel` feature is enabled and fall back to plain
//! iterators otherwise; results never depend on the thread count.

pub mod bounds;
pub mod census;
pub mod complex;
pub mod construct;
mod error;
pub mod flip;
pub mod homology;
pub mod io;
pub mod iso;
pub mod manifold;
pub mod par;
pub mod snf;
mod util;

pub use complex::{Complex, FVector, Face, Label, ManifoldVerdict, Verdict, Witness};
pub use error::{Error, Result};
pub use homology::{BettiVector, Coefficients, HomologyGroup, HomologyVector};
pub use util::binomial;
