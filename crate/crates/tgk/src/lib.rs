//! Travel groupoids on finite graphs.
//!
//! A travel groupoid is a finite set with a binary operation * satisfying
//! (t1) (u*v)*u = u and (t2) (u*v)*v = u implies u = v. Each one lives on a
//! unique associated graph (edge {u,v} iff u != u*v = v). This crate checks
//! the axioms and their refinements on explicit operation tables, recognizes
//! complete multipartite associated graphs, enumerates censuses through the
//! v-spanning-tree correspondence, and evaluates the exact census counting
//! formulas with big integers.

pub mod counting;
pub mod enumeration;
pub mod fixtures;
pub mod graph;
pub mod groupoid;
pub mod io;
pub mod trees;

pub use graph::{classify_family, has_travel_groupoid, recognize_multipartite, Graph};
pub use groupoid::{Groupoid, PropertyReport};
pub use trees::{family_from_groupoid, groupoid_from_family, TreeFamily};
