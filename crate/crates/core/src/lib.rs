//! Exact verification toolkit for stable Kneser graphs.
//!
//! The crate is organised in layers:
//!
//! * [`graph`]: an immutable dense graph value with the usual unary and
//!   binary operations, an isomorphism tester and exact clique /
//!   independence solvers, plus DIMACS exchange.
//! * [`families`]: constructors for Kneser, stable Kneser, circular,
//!   cycle-power, circulant and dihedral Cayley graphs, together with the
//!   explicit isomorphism between circular graphs and `KG(ks+1,k)_{s-stab}`.
//! * [`dihedral`]: the dihedral group `D_2n` acting on `[n]`, its induced
//!   automorphisms of stable Kneser graphs and shift detection/prediction.
//! * [`homsolver`]: homomorphism search, chromatic number, cores,
//!   retractions, vertex-criticality and self-homomorphisms of circulants.
//! * [`harness`]: named verification suites producing structured reports,
//!   and the command-line front end.
//!
//! Data-parallel loops (over group elements, deleted vertices, grid cells)
//! go through [`exec::Exec`], which uses rayon when the `parallel` feature
//! is enabled and falls back to plain iterators otherwise.

pub mod budget;
pub mod dihedral;
pub mod exec;
pub mod families;
pub mod graph;
pub mod harness;
pub mod homsolver;
pub mod modn;

pub use budget::{Exhausted, SearchBudget, SearchStats};
pub use dihedral::{DihedralElement, ElementKind, ShiftSet};
pub use exec::Exec;
pub use families::{FamilySpec, KSubset};
pub use graph::{Graph, GraphError, VertexLabel};
pub use homsolver::{Homomorphism, SolveOutcome};
