//! Quantale-enriched categories at desk scale.
//!
//! The crate provides four built-in commutative quantales, finite
//! V-categories and V-modules over them, Hausdorff liftings of the powerset
//! functor together with their (lax) monad structure, presheaf categories
//! with the generic lax extension of endofunctors to modules, and Gromov
//! distances computed by exhaustive enumeration (finite quantales) or by an
//! exact assignment/optimization solver (the cost quantale).

pub mod enriched;
pub mod error;
pub mod gromov;
pub mod hausdorff;
pub mod json;
pub mod presheaf;
pub mod quantale;
pub mod report;
pub mod vmodule;

pub use error::{Error, Result};
pub use quantale::{Quantale, Value};
pub use report::{Counterexample, LawReport, LawStatus};
