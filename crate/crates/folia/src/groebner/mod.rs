//! Groebner-basis machinery for ideals and submodules of free modules.

mod buchberger;
mod ideal;
pub mod limits;
mod module;
mod modvec;

pub use ideal::Ideal;
pub use module::{module_kernel, syzygies, Submodule};
pub use modvec::{ModOrder, ModVec};
