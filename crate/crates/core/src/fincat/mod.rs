//! Finite sets, tabulated functions, Kleisli categories of the built-in strong
//! monads, and the cartesian actegory structure.

pub mod bounds;
mod homs;
mod monad;
mod morphism;
mod object;
pub mod structure;

pub use bounds::Bounds;
pub use homs::{enumerate_homs, HomSet};
pub use monad::{Monad, MonadKind, TVal};
pub use morphism::{Cat, Morphism};
pub use object::{Elem, Obj, Shape};
pub use structure::{act_structure_maps, ActStructure};

use crate::error::Result;

/// `a × b`; the action `m ⊙ x` of the base on itself.
pub fn product(a: &Obj, b: &Obj) -> Result<Obj> {
    Obj::product(a, b)
}

/// Diagrammatic composition `f ⨾ g`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    f.then(g)
}
