//! Certified Hamiltonian cycles in Cayley graphs of small finite groups.

pub mod catalog;
pub mod cayley;
pub mod constructions;
pub mod group;
pub mod lifting;
pub mod oracle;
pub mod sweep;
pub mod trace;
