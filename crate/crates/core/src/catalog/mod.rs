//! Built-in group catalog, generating-set enumeration and certificate files.

mod builtin;
mod enumerate;
mod gensets;
mod order_form;
mod parametric;
mod store;

pub use builtin::*;
pub use enumerate::{groups_of_order, Built, Recipe};
pub use gensets::*;
pub use order_form::*;
pub use parametric::*;
pub use store::*;
