//! The finite Tambara-module model: oriented-wire modules and their
//! composites, 2-cells between them, and the checks that make them honest.

pub mod chain;
pub mod coherence;
pub mod check;
pub mod elements;
pub mod fast;
pub mod ff;
pub mod profunctor;
pub mod twocell;
pub mod universe;

pub use chain::{Chain, Dir, Units, Wire};
pub use check::{check_2cell, equal_generic, pointwise_equal, CheckReport, Pointwise};
pub use profunctor::{build_l, build_r, check_tambara, compose_prof, hom_profunctor, FinProfunctor, ProfKind, Sabotage};
pub use elements::{for_each_element, Coverage, ElemOpts};
pub use twocell::{counit, optic_to_2cell, reify_at, reify_optic, unit, CellOp, Step, TwoCell};
pub use universe::Universe;
