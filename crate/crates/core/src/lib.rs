//! Exact equivariant commutative algebra for `Sym(Sym²)`.
//!
//! Partitions and Schur functors evaluated on super spaces, polynomial rings
//! of symmetric and alternating forms, a Gröbner engine with radical
//! membership, the equivariant ideals `I_λ` with their rank-locus models,
//! the symbolic GL-spectrum, and the nilpotency degree bounds.

pub mod bounds;
#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod functor;
pub mod groebner;
pub mod models;
pub mod partition;
pub mod poly;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use functor::{PolyFunctor, SuperSpace};
pub use groebner::{Ideal, IdealJson};
pub use partition::Partition;
pub use poly::{MonomialOrder, Poly, Rational, Ring, Var};
