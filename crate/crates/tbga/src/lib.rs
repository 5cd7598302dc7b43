//! Two-block group-algebra (2BGA) quantum CSS codes over finite groups and
//! prime fields.
//!
//! A code is assembled from a group `G`, a field `GF(p)`, and two
//! group-algebra elements `a, b`: the commuting regular-representation
//! matrices `A = L(a)` and `B = R(b)` give the check matrices
//! `H_X = (A | B)` and `H_Z = (B^T | -A^T)` of a CSS code of length `2|G|`.
//! The crate computes exact dimensions and gauge structure, exact and
//! randomized minimum distances, the distance bounds and identities that
//! relate a code to its single-block and classical relatives, and
//! enumerates inequivalent codes over a group.
//!
//! ```
//! use tbga::field::PrimeField;
//! use tbga::parse::{parse_algebra_elem, parse_group_spec};
//! use tbga::code::TwoBlockCode;
//!
//! let g = parse_group_spec("C6xC2").unwrap();
//! let f = PrimeField::new(2).unwrap();
//! let a = parse_algebra_elem("1 + x1", &g, f).unwrap();
//! let b = parse_algebra_elem("1 + x1^3 + x2 + x1^4 + x1^2 + x2*x1", &g, f).unwrap();
//! let code = TwoBlockCode::build(a, b).unwrap();
//! assert_eq!((code.n(), code.dimension()), (24, 4));
//! ```

pub mod algebra;
pub mod bounds;
pub mod code;
pub mod distance;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod group;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod report;
pub mod rng;

pub use algebra::AlgebraElement;
pub use code::{StructureParams, TwoBlockCode};
pub use distance::{Distance, DistanceMode, DistanceResult};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use group::GroupTable;
pub use matrix::{FMatrix, RowSpace};
pub use report::CodeReport;
