//! Exact computer algebra for the mod-2 cohomology Hopf ring of the
//! hyperoctahedral groups `B_n` and the almost-Hopf ring of `D_n`.

pub mod coxeter;
pub mod foxneuwirth;
pub mod gf2;
pub mod hopf_b;
pub mod hopf_d;
pub mod quillen;
pub mod steenrod;
pub mod verify;

pub use hopf_b::{Block, ElementB, Monomial};
pub use hopf_d::{Charge, ChargedMonomial, ElementD};
