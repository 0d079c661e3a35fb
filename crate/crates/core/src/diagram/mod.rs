//! String diagrams for optics: a slice-based DSL, its type checker, and
//! lowering to 2-cells between oriented-wire modules.

pub mod compile;
pub mod equations;
pub mod ir;
pub mod parse;
pub mod rewrite;
pub mod typecheck;

pub use compile::{compile, equal_cells, equal_diagrams, eval_optic, Equality};
pub use equations::{equation_suite, normal_form, representation_roundtrip, snake_and_sliding};
pub use ir::{Diagram, Gen, MExpr, MTerm, RawWire, Slice};
pub use parse::{parse_diagram, parse_diagram_at, Env};
pub use rewrite::{matches, rewrite, rules, Rule};
pub use typecheck::{typecheck, Region, Typed};
