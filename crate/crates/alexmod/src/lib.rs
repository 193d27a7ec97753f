//! Exact-arithmetic computation of multivariable Alexander modules.
//!
//! The library takes a finite simplicial complex together with a closed
//! Z^n-valued edge cocycle (the combinatorial datum of a map to an affine
//! torus), builds the twisted cochain complex over the Laurent ring
//! A = Q[t_1^{±1}, ..., t_n^{±1}], and computes the cohomology as finitely
//! presented A-modules. On top of that it extracts maximal Artinian
//! submodules, computes Mellin transforms of local systems on the torus,
//! evaluates fibration shortcuts (kernel invariants and coinvariants,
//! removal-of-fiber comparisons), and produces machine-checked verdicts:
//! quasi-unipotence, Jordan profiles, semisimplicity, vanishing ranges.
//!
//! All arithmetic is exact rational; there is no floating point anywhere.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `alexmod` binary exposes the same operations on JSON files.

pub mod error;
pub mod fibration;
pub mod jsonio;
pub mod linalg;
pub mod mellin;
pub mod module;
pub mod cli;
pub mod cohomology;
pub mod groebner;
pub mod pid;
pub mod report;
pub mod ring;
pub mod topology;

pub use error::{Error, Result};
