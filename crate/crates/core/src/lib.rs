//! Exact computations with the Drinfeld double of the Fomin-Kirillov algebra
//! `FK3` over the symmetric group `S3`: its Verma modules, their simple heads,
//! socles, submodule lattices and composition factors.

pub mod dgmod;
pub mod double;
pub mod error;
pub mod group;
pub mod linalg;
pub mod nichols;
pub mod scalar;
pub mod status;
pub mod structure;
pub mod verma;

pub use error::{GroupError, ModuleError, ScalarError};
pub use group::{Elem, GroupData, Weight};
pub use linalg::{Mat, Subspace, Vector};
pub use scalar::Cyc;
pub use status::Status;
