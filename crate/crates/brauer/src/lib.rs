//! Symmetric stably biserial (Brauer graph) algebras from ribbon-graph data,
//! with their derived invariants: faces and perimeters, center, Cartan and
//! stable Grothendieck data, the symmetrizing form, and the rank of the
//! maximal torus of the outer automorphism group.
//!
//! Every closed formula is paired with an independent exact computation: the
//! center prediction against a linear solver, the torus-rank formula against
//! the exponent lattice of the defining monomial equations, and the Smith
//! normal form against the gcd-of-minors characterization. All arithmetic is
//! exact (rationals or prime fields).

#![forbid(unsafe_code)]

pub use num;

pub mod algebra;
pub mod corpus;
pub mod exactla;
pub mod harness;
pub mod invariants;
pub mod quiver;
pub mod ribbon;
pub mod torus;

pub use algebra::{build_table, center_predicted, center_solve, dimension_formula, gram_form, AlgebraTable};
pub use exactla::{Field, FieldSpec, Mat, PrimeField, Rationals};
pub use invariants::{cartan_diagnostics, cartan_matrix, compare, fingerprint, Fingerprint};
pub use quiver::{classify_special, detect_caterpillar, reduce, Presentation, ReducedPresentation};
pub use ribbon::{parse_bg, Face, RibbonGraph};
