//! Exact computation of the negative K-group K_{-1}(Z[G]) = Z^r + (Z/2)^s of
//! a finite group G.
//!
//! By Carter's formula, r counts rational and p-adic conjugacy classes and s
//! counts the rational irreducible representations whose Schur index is even
//! while every local index at a prime dividing |G| is odd.
//!
//! ```
//! use negk_core::{builtin_group, k_minus_one, Family};
//!
//! let g = builtin_group(&Family::SL25).unwrap();
//! let res = k_minus_one(&g).unwrap();
//! assert_eq!((res.r, res.s), (2, 1));
//! ```

pub mod chartab;
pub mod error;
pub mod group;
pub mod numtheory;
pub mod rank;
pub mod scan;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use group::catalog::{Catalog, CatalogEntry};
pub use group::expr::GroupSpec;
pub use group::families::{builtin_group, Family};
pub use group::{ConjClass, FiniteGroup, NormalSubgroupDesc, Perm};
pub use numtheory::{galois_t_m, Cyclotomic, GaloisSubgroup, Rational};
pub use rank::{r_of_group, RankBreakdown};
pub use scan::{k_minus_one_text, minimal_s, scan, MinimalRow, ScanFilter, ScanRow};
pub use verify::{verify_catalog, verify_group, CheckFailure, VerifyReport};
pub use schur::{k_minus_one, s_of_group, KMinusOneResult, Place, SchurData, SimpleComponentDesc};
