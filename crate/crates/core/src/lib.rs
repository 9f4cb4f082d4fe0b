//! Exact character tables, Brauer p-blocks and character heights for finite
//! groups given by permutation generators.

pub mod analysis;
pub mod arith;
pub mod blocktheory;
pub mod catalog;
pub mod chartable;
pub mod combinatorics;
pub mod cyclotomic;
pub mod gf;
pub mod linalg;
pub mod perm;
pub mod permgroup;
pub mod pgroups;
pub mod poly;
