//! Perfect codes and total perfect codes in Cayley graphs of finite abelian groups.
//!
//! A subset C of a graph is a *perfect code* if its closed neighbourhoods
//! partition the vertex set, and a *total perfect code* if every vertex has
//! exactly one neighbour in C. For a Cayley graph Cay(G, S) of an abelian
//! group these notions are equivalent to factorizations G = S₀ ⊕ C and
//! G = S ⊕ C, where S₀ = S ∪ {0}. This crate provides:
//!
//! - [`group`]: finite abelian groups as direct products of cyclic groups,
//!   with subgroups, cosets and canonical quotients;
//! - [`subsets`]: subset arithmetic (sum sets, difference sets, subgroup of
//!   periods, quotient subsets);
//! - [`tiling`]: factorization and code verification, including a group-ring
//!   criterion;
//! - [`cyclotomic`]: integer polynomials and cyclotomic divisibility
//!   diagnostics;
//! - [`search`]: exhaustive code enumeration by exact cover, sufficiency
//!   constructions, and the quotient reduction/lifting pipeline;
//! - [`theorems`]: an executable registry of structural criteria for the
//!   existence and shape of (total) perfect codes, cross-validated against
//!   the search oracle.

pub mod cyclotomic;
mod error;
pub mod group;
pub mod search;
pub mod subsets;
pub mod theorems;
pub mod tiling;

pub use error::{Error, Result};
pub use group::{AbelianGroup, GroupElement, QuotientMap, SubgroupHandle};
pub use subsets::GroupSubset;
