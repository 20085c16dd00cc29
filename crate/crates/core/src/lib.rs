//! Exact structure-constant computer algebra for dialgebras, Leibniz algebras
//! and Poisson dialgebras.
//!
//! Everything is computed over the rationals with arbitrary-precision exact
//! arithmetic; axiom checks are equalities of vectors, never approximations.
//! The crate is organised around:
//!
//! * [`linalg`] — dense exact linear algebra (rref, kernels, subspace lattice,
//!   quotient data) on which every construction rests;
//! * [`algebra`] — structure-constant algebra types and exhaustive axiom
//!   checkers (dialgebra, Leibniz, Poisson algebra/dialgebra, bimodules,
//!   homomorphisms);
//! * [`constructions`] — induced brackets, associativization/Poissonization
//!   quotients, the bar ideal and right center, linear-map-category objects
//!   and the adjunction factorizations, plus Poisson dialgebras from bimodule
//!   maps, differentials and averaging operators;
//! * [`graded`] — filtered dialgebras, the associated graded structure with
//!   the signed Loday bracket, and the Gerstenhaber (degree 1) case;
//! * [`homotopy`] — 2-term homotopy structures: associative 2-algebras,
//!   Lie 2-algebras, and the 2-term homotopy Poisson algebra of the reduced
//!   case;
//! * [`generate`] — seeded, constructive generation of valid instances;
//! * [`document`] / [`runner`] — the JSON file format and the batch check /
//!   construct / generate entry points used by the CLI.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here is safe to share across threads.

pub mod algebra;
pub mod constructions;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graded;
pub mod homotopy;
pub mod linalg;
pub mod rat;
pub mod report;
pub mod runner;
pub mod tensor;

pub use algebra::{
    AssociativeAlgebra, Dialgebra, LeibnizAlgebra, LinearOperator, PoissonAlgebra, PoissonDialgebra,
};
pub use error::Error;
pub use linalg::{Matrix, QuotientData, Subspace};
pub use rat::Rat;
pub use report::{AxiomReport, Violation};
pub use tensor::{ActionMap, BilinearMap, TrilinearMap};
