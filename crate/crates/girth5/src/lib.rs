//! Construction and exact verification of small k-regular girth-5 graphs.
//!
//! The toolkit builds record graphs by amalgamating suitable graph pairs (and
//! bi-regular quadruples) into the Levi graphs of elliptic semiplanes of
//! types C and L, then re-verifies order, regularity and girth from scratch.

pub mod amalgam;
pub mod catalog;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod route;
pub mod search;
pub mod semicirculant;
pub mod semiplane;
